#include <qgen/classical.hpp>
#include <qgen/fermint.hpp>
#include <qgen/qgenocchi.hpp>
#include <qgen/qzeta.hpp>
#include <qgen/verify.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>

namespace {

using json = nlohmann::ordered_json;
using namespace qgen;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct OutputSpec {
    std::string format = "pretty"; // csv | json | pretty
    std::string path;              // empty -> stdout
    int precision = 15;
};

std::string format_double(double v, int precision) {
    char buf[128];
    std::snprintf(buf, sizeof(buf), "%.*g", precision, v);
    return buf;
}

std::string format_rational_decimal(const Rational& r, int precision) {
    mpf_class f(0, 512);
    mpq_class q(r.num(), r.den());
    f = q;
    char buf[160];
    gmp_snprintf(buf, sizeof(buf), "%.*Fg", precision, f.get_mpf_t());
    return buf;
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

class Writer {
public:
    explicit Writer(const OutputSpec& spec) : spec_(spec) {
        if (!spec_.path.empty()) {
            file_.open(spec_.path);
            if (!file_) throw std::runtime_error("cannot open output file: " + spec_.path);
        }
    }

    std::ostream& stream() { return spec_.path.empty() ? std::cout : file_; }

private:
    OutputSpec spec_;
    std::ofstream file_;
};

Complex parse_complex(const std::string& text) {
    static const std::regex both(R"(^([+-]?(?:\d+\.?\d*|\.\d+))([+-](?:\d+\.?\d*|\.\d+))i$)");
    static const std::regex imag_only(R"(^([+-]?(?:\d+\.?\d*|\.\d+))i$)");
    static const std::regex real_only(R"(^([+-]?(?:\d+\.?\d*|\.\d+))$)");
    std::smatch m;
    if (std::regex_match(text, m, both)) return {std::stod(m[1]), std::stod(m[2])};
    if (std::regex_match(text, m, imag_only)) return {0.0, std::stod(m[1])};
    if (std::regex_match(text, m, real_only)) return {std::stod(m[1]), 0.0};
    throw std::domain_error("cannot parse complex literal '" + text + "' (expected a+bi)");
}

Rational parse_unit_interval(const std::string& text, const char* name) {
    const Rational v = Rational::parse(text);
    if (!(v > Rational(0)) || !(v < Rational(1)))
        throw std::domain_error(std::string(name) + " must lie in (0,1), got " + text);
    return v;
}

SeriesConfig make_series_config(double tol, long max_terms) {
    SeriesConfig cfg;
    cfg.tol = tol;
    cfg.max_terms = max_terms;
    if (const char* env = std::getenv("QGENOCCHI_MAX_TERMS")) {
        const long ceiling = std::strtol(env, nullptr, 10);
        if (ceiling >= 1 && ceiling < cfg.max_terms) cfg.max_terms = ceiling;
    }
    cfg.validate();
    return cfg;
}

json ratfunc_json(const RatFuncQ& f) {
    const JointContentForm form = joint_content_form(f);
    json num = json::array();
    for (const auto& c : form.num) num.push_back(c.get_str());
    json den = json::array();
    for (const auto& c : form.den) den.push_back(c.get_str());
    const std::string scale = form.scale.num().get_str() + "/" + form.scale.den().get_str();
    return json{{"num", std::move(num)}, {"den", std::move(den)}, {"scale", scale}};
}

// ---------------------------------------------------------------- classical

int cmd_classical(long nmax, const OutputSpec& out) {
    Writer w(out);
    std::ostream& os = w.stream();
    struct Row {
        unsigned n;
        Rational g, b;
        std::optional<Rational> zeta;
    };
    std::vector<Row> rows;
    for (long n = 0; n <= nmax; ++n) {
        Row r{static_cast<unsigned>(n), genocchi_via_recurrence(n), bernoulli(n), std::nullopt};
        if (n >= 1) r.zeta = riemann_neg(n);
        rows.push_back(std::move(r));
    }
    if (out.format == "csv") {
        os << "n,genocchi,bernoulli,zeta_1_minus_n\n";
        for (const auto& r : rows)
            os << r.n << "," << r.g.str() << "," << r.b.str() << ","
               << (r.zeta ? r.zeta->str() : "") << "\n";
    } else if (out.format == "json") {
        json doc;
        doc["table"] = "classical";
        doc["nmax"] = nmax;
        json jrows = json::array();
        for (const auto& r : rows) {
            json jr{{"n", r.n}, {"genocchi", r.g.str()}, {"bernoulli", r.b.str()}};
            jr["zeta_1_minus_n"] = r.zeta ? json(r.zeta->str()) : json(nullptr);
            jrows.push_back(std::move(jr));
        }
        doc["rows"] = std::move(jrows);
        os << doc.dump(2) << "\n";
    } else {
        os << "  n  G_n             B_n                   zeta(1-n)\n";
        for (const auto& r : rows) {
            char line[256];
            std::snprintf(line, sizeof(line), "%3u  %-14s  %-20s  %s\n", r.n, r.g.str().c_str(),
                          r.b.str().c_str(), r.zeta ? r.zeta->str().c_str() : "-");
            os << line;
        }
    }
    return kExitOk;
}

// -------------------------------------------------------------------- qpoly

int cmd_qpoly(long n, const OutputSpec& out) {
    Writer w(out);
    std::ostream& os = w.stream();
    const QGenocchiPoly gp = qgenocchi_poly_sym(static_cast<unsigned>(n));
    if (out.format == "csv") {
        os << "k,coefficient\n";
        for (long k = 0; k <= gp.poly.degree(); ++k)
            os << k << "," << csv_quote(gp.poly.coeff(k).str()) << "\n";
        if (gp.poly.is_zero()) os << 0 << "," << 0 << "\n";
    } else if (out.format == "json") {
        json doc;
        doc["table"] = "qpoly";
        doc["n"] = n;
        json coeffs = json::array();
        for (long k = 0; k <= gp.poly.degree(); ++k) {
            json jc = ratfunc_json(gp.poly.coeff(k));
            jc["k"] = k;
            jc["text"] = gp.poly.coeff(k).str();
            coeffs.push_back(std::move(jc));
        }
        doc["coefficients"] = std::move(coeffs);
        os << doc.dump(2) << "\n";
    } else {
        os << "G_{" << n << ",q}(x) = " << gp.poly.str() << "\n";
    }
    return kExitOk;
}

// --------------------------------------------------------------------- eval

int cmd_eval(long n, const std::string& q_text, const std::string& x_text,
             const std::string& mode, double tol, long max_terms, const std::string& depth_text,
             const OutputSpec& out) {
    Writer w(out);
    std::ostream& os = w.stream();
    const Rational q = parse_unit_interval(q_text, "q");
    const Rational x = Rational::parse(x_text);
    const SeriesConfig cfg = make_series_config(tol, max_terms);
    const auto un = static_cast<unsigned>(n);

    std::optional<Rational> exact;
    double value = 0;
    double bound = 0;
    long terms = 0;
    std::string depth_used;

    if (mode == "symbolic") {
        const Rational v =
            qgenocchi_poly_sym(un + 1).poly.eval(q, x) / Rational(static_cast<long>(un) + 1);
        exact = v;
        value = v.to_double();
    } else if (mode == "series") {
        const SeriesResult r = qgenocchi_eval_series(un, x.to_double(), q.to_double(), cfg);
        value = r.value;
        bound = r.bound;
        terms = r.terms;
    } else if (mode == "integral") {
        DepthConfig depth;
        if (depth_text.empty()) {
            depth = depth_for(q.to_double(), 1e-12);
        } else {
            unsigned p = 0, N = 0;
            if (std::sscanf(depth_text.c_str(), "%u,%u", &p, &N) != 2)
                throw std::domain_error("--depth expects \"p,N\"");
            depth = {p, N};
        }
        const double qd = q.to_double();
        const double xd = x.to_double();
        value = fermionic_sum(
            [&](double y) { return std::pow(xd + qbracket(y, qd), static_cast<double>(un)); }, qd,
            depth);
        terms = static_cast<long>(depth.point_count());
        depth_used = std::to_string(depth.p) + "," + std::to_string(depth.N);
    } else {
        throw std::domain_error("mode must be symbolic, series or integral");
    }

    if (out.format == "csv") {
        os << "mode,value_exact,value_decimal,bound,terms\n";
        os << mode << "," << (exact ? exact->str() : "") << ","
           << (exact ? format_rational_decimal(*exact, out.precision)
                     : format_double(value, out.precision))
           << "," << format_double(bound, out.precision) << "," << terms << "\n";
    } else if (out.format == "json") {
        json doc;
        doc["op"] = "eval";
        doc["n"] = n;
        doc["q"] = q.str();
        doc["x"] = x.str();
        doc["mode"] = mode;
        if (exact) {
            doc["value_exact"] = exact->str();
            doc["value_decimal"] = format_rational_decimal(*exact, out.precision);
        } else {
            doc["value_decimal"] = format_double(value, out.precision);
        }
        doc["bound"] = format_double(bound, out.precision);
        doc["terms"] = terms;
        if (!depth_used.empty()) doc["depth"] = depth_used;
        os << doc.dump(2) << "\n";
    } else {
        os << "G_{" << n + 1 << ",q}(x)/" << n + 1 << " at q=" << q.str() << ", x=" << x.str()
           << " [" << mode << "]\n";
        if (exact)
            os << "  = " << exact->str() << " = "
               << format_rational_decimal(*exact, out.precision) << " (exact)\n";
        else
            os << "  = " << format_double(value, out.precision) << "  (bound "
               << format_double(bound, out.precision) << ", terms " << terms
               << (depth_used.empty() ? "" : ", depth " + depth_used) << ")\n";
    }
    return kExitOk;
}

// --------------------------------------------------------------------- zeta

int cmd_zeta(const std::string& s_text, const std::string& x_text, const std::string& q_text,
             const std::string& partial_text, bool cross_check, double tol, long max_terms,
             const OutputSpec& out) {
    Writer w(out);
    std::ostream& os = w.stream();
    const Complex s = parse_complex(s_text);
    const Rational qr = parse_unit_interval(q_text, "q");
    const Rational xr = Rational::parse(x_text);
    if (!(xr > Rational(0)) || xr > Rational(1))
        throw std::domain_error("x must lie in (0,1], got " + x_text);
    const SeriesConfig cfg = make_series_config(tol, max_terms);
    const ZetaPoint pt{s, xr.to_double(), qr.to_double()};

    std::optional<PartialSpec> spec;
    if (!partial_text.empty()) {
        unsigned a = 0, F = 0;
        if (std::sscanf(partial_text.c_str(), "%u,%u", &a, &F) != 2)
            throw std::domain_error("--partial expects \"a,F\"");
        spec = PartialSpec{a, F};
        spec->validate();
    }

    const SeriesResultC r = spec ? partial_zeta_q(pt, *spec, cfg) : zeta_q(pt, cfg);
    std::optional<SeriesResultC> rhs;
    double residual = 0;
    if (cross_check && spec) {
        rhs = partial_zeta_reduced(pt, *spec, cfg);
        residual = std::abs(r.value - rhs->value);
    }

    if (out.format == "csv") {
        os << "s,x,q,partial,value_re,value_im,bound,terms";
        if (rhs) os << ",reduction_rhs_re,reduction_rhs_im,reduction_residual";
        os << "\n";
        os << csv_quote(s_text) << "," << xr.str() << "," << qr.str() << ","
           << csv_quote(partial_text) << "," << format_double(r.value.real(), out.precision)
           << "," << format_double(r.value.imag(), out.precision) << ","
           << format_double(r.bound, out.precision) << "," << r.terms;
        if (rhs)
            os << "," << format_double(rhs->value.real(), out.precision) << ","
               << format_double(rhs->value.imag(), out.precision) << ","
               << format_double(residual, out.precision);
        os << "\n";
    } else if (out.format == "json") {
        json doc;
        doc["op"] = spec ? "partial_zeta" : "zeta";
        doc["s"] = s_text;
        doc["x"] = xr.str();
        doc["q"] = qr.str();
        if (spec) doc["partial"] = partial_text;
        doc["value_re"] = format_double(r.value.real(), out.precision);
        doc["value_im"] = format_double(r.value.imag(), out.precision);
        doc["bound"] = format_double(r.bound, out.precision);
        doc["terms"] = r.terms;
        if (rhs) {
            doc["reduction_rhs_re"] = format_double(rhs->value.real(), out.precision);
            doc["reduction_rhs_im"] = format_double(rhs->value.imag(), out.precision);
            doc["reduction_residual"] = format_double(residual, out.precision);
        }
        os << doc.dump(2) << "\n";
    } else {
        os << (spec ? "H_q(s,x:a,F)" : "zeta_q(s,x)") << " at s=" << s_text << ", x=" << xr.str()
           << ", q=" << qr.str();
        if (spec) os << ", a=" << spec->a << ", F=" << spec->F;
        os << "\n  = " << format_double(r.value.real(), out.precision);
        if (r.value.imag() != 0.0) os << " + " << format_double(r.value.imag(), out.precision) << "i";
        os << "  (bound " << format_double(r.bound, out.precision) << ", terms " << r.terms << ")\n";
        if (rhs) {
            os << "  reduction RHS = " << format_double(rhs->value.real(), out.precision);
            if (rhs->value.imag() != 0.0)
                os << " + " << format_double(rhs->value.imag(), out.precision) << "i";
            os << "  residual = " << format_double(residual, out.precision) << "\n";
        }
    }
    return kExitOk;
}

// ------------------------------------------------------------------- verify

int cmd_verify(const std::string& suite_name, long max_terms, const OutputSpec& out) {
    Writer w(out);
    std::ostream& os = w.stream();
    Suite suite = Suite::all;
    if (suite_name == "symbolic") suite = Suite::symbolic;
    else if (suite_name == "numeric") suite = Suite::numeric;
    else if (suite_name == "integral") suite = Suite::integral;
    else if (suite_name == "zeta") suite = Suite::zeta;
    else if (suite_name != "all")
        throw std::domain_error("suite must be one of all, symbolic, numeric, integral, zeta");

    const SeriesConfig base = make_series_config(1e-12, max_terms);
    const VerifyReport report = run_verify(suite, base);

    if (out.format == "csv") {
        os << "check,params,status,residual,seconds\n";
        for (const auto& c : report.checks)
            os << csv_quote(c.name) << "," << csv_quote(c.params) << ","
               << (c.pass ? "pass" : "fail") << ","
               << (c.residual ? format_double(*c.residual, out.precision) : "exact") << ","
               << format_double(c.seconds, 6) << "\n";
    } else if (out.format == "json") {
        json doc;
        doc["op"] = "verify";
        doc["suite"] = suite_name;
        json checks = json::array();
        for (const auto& c : report.checks) {
            json jc{{"check", c.name},
                    {"params", c.params},
                    {"status", c.pass ? "pass" : "fail"}};
            jc["residual"] = c.residual ? json(format_double(*c.residual, out.precision))
                                        : json("exact");
            jc["seconds"] = format_double(c.seconds, 6);
            checks.push_back(std::move(jc));
        }
        doc["checks"] = std::move(checks);
        doc["total_seconds"] = format_double(report.total_seconds, 6);
        doc["overall"] = report.all_pass() ? "pass" : "fail";
        os << doc.dump(2) << "\n";
    } else {
        for (const auto& c : report.checks) {
            char line[512];
            std::snprintf(line, sizeof(line), "[%s] %-40s %-12s %8.3fs  %s\n",
                          c.pass ? "pass" : "FAIL", c.name.c_str(),
                          c.residual ? format_double(*c.residual, 3).c_str() : "exact",
                          c.seconds, c.params.c_str());
            os << line;
        }
        char total[128];
        std::snprintf(total, sizeof(total), "%s: %zu checks, %.2fs total\n",
                      report.all_pass() ? "PASS" : "FAIL", report.checks.size(),
                      report.total_seconds);
        os << total;
    }
    if (!report.all_pass()) {
        for (const auto& c : report.checks)
            if (!c.pass) std::cerr << "verification failed: " << c.name << " " << c.params << "\n";
        return kExitVerifyFailed;
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact and numeric computations for modified q-Genocchi numbers, polynomials "
                 "and their zeta-type interpolations"};
    app.require_subcommand(1);
    app.fallthrough(); // global --format/--out/--precision work after a subcommand

    OutputSpec out;
    app.add_option("--format", out.format, "Output format")
        ->check(CLI::IsMember({"csv", "json", "pretty"}))
        ->capture_default_str();
    app.add_option("--out", out.path, "Write output to a file instead of stdout");
    app.add_option("--precision", out.precision, "Decimal digits for numeric rendering")
        ->check(CLI::Range(1, 50))
        ->capture_default_str();

    long nmax = 12;
    auto* classical = app.add_subcommand("classical", "Table of G_n, B_n and zeta(1-n)");
    
    classical->add_option("nmax", nmax, "Largest index")->required()->check(CLI::NonNegativeNumber);

    long qpoly_n = 2;
    auto* qpoly = app.add_subcommand("qpoly", "Symbolic modified q-Genocchi polynomial G_{n,q}(x)");
    
    qpoly->add_option("n", qpoly_n, "Index n")->required()->check(CLI::NonNegativeNumber);

    long eval_n = 0;
    std::string eval_q, eval_x = "0", eval_mode = "symbolic", eval_depth;
    double eval_tol = 1e-12;
    long eval_max_terms = 1000000;
    auto* eval = app.add_subcommand("eval", "Evaluate G_{n+1,q}(x)/(n+1) at a point");
    
    eval->add_option("n", eval_n, "Moment order n")->required()->check(CLI::NonNegativeNumber);
    eval->add_option("--q", eval_q, "q in (0,1), decimal or fraction")->required();
    eval->add_option("--x", eval_x, "x, decimal or fraction")->capture_default_str();
    eval->add_option("--mode", eval_mode, "symbolic | series | integral")
        ->check(CLI::IsMember({"symbolic", "series", "integral"}))
        ->capture_default_str();
    eval->add_option("--tol", eval_tol, "Series tolerance")->capture_default_str();
    eval->add_option("--max-terms", eval_max_terms, "Series term budget")->capture_default_str();
    eval->add_option("--depth", eval_depth, "Integral depth \"p,N\" (default: chosen from q)");

    std::string zeta_s = "0", zeta_x = "1", zeta_q_text, zeta_partial;
    bool zeta_cross = false;
    double zeta_tol = 1e-12;
    long zeta_max_terms = 1000000;
    auto* zeta = app.add_subcommand("zeta", "q-Hurwitz Genocchi zeta-type function");
    
    zeta->add_option("--s", zeta_s, "Complex s as \"a+bi\"")->capture_default_str();
    zeta->add_option("--x", zeta_x, "x in (0,1]")->capture_default_str();
    zeta->add_option("--q", zeta_q_text, "q in (0,1)")->required();
    zeta->add_option("--partial", zeta_partial, "Partial sum over m == a (mod F), as \"a,F\"");
    zeta->add_flag("--cross-check", zeta_cross,
                   "With --partial: also evaluate the reduction-theorem RHS");
    zeta->add_option("--tol", zeta_tol, "Series tolerance")->capture_default_str();
    zeta->add_option("--max-terms", zeta_max_terms, "Series term budget")->capture_default_str();

    std::string suite = "all";
    long verify_max_terms = 1000000;
    auto* verify = app.add_subcommand("verify", "Run the identity-verification suite");
    
    verify->add_option("suite", suite, "all | symbolic | numeric | integral | zeta")
        ->capture_default_str();
    verify->add_option("--max-terms", verify_max_terms, "Series term budget")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (classical->parsed()) return cmd_classical(nmax, out);
        if (qpoly->parsed()) return cmd_qpoly(qpoly_n, out);
        if (eval->parsed())
            return cmd_eval(eval_n, eval_q, eval_x, eval_mode, eval_tol, eval_max_terms,
                            eval_depth, out);
        if (zeta->parsed())
            return cmd_zeta(zeta_s, zeta_x, zeta_q_text, zeta_partial, zeta_cross, zeta_tol,
                            zeta_max_terms, out);
        if (verify->parsed()) return cmd_verify(suite, verify_max_terms, out);
    } catch (const truncation_error& e) {
        std::cerr << "error: " << e.what() << " (best bound " << e.best_bound() << " after "
                  << e.terms() << " terms)\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
