#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + " " + std::string(QGEN_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) lines.push_back(line);
    return lines;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') { cur += '"'; ++i; }
            else if (c == '"') quoted = false;
            else cur += c;
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    fields.push_back(cur);
    return fields;
}

} // namespace

TEST_CASE("classical table reproduces the known values") {
    const RunResult r = run_cli("classical 12 --format csv");
    REQUIRE(r.exit_code == 0);
    const auto lines = split_lines(r.out);
    REQUIRE(lines.size() == 14); // header + n = 0..12
    CHECK(lines[0] == "n,genocchi,bernoulli,zeta_1_minus_n");
    const std::vector<std::pair<int, std::string>> expected = {
        {1, "1"}, {2, "-1"}, {3, "0"}, {4, "1"},  {5, "0"},    {6, "-3"},
        {7, "0"}, {8, "17"}, {9, "0"}, {10, "-155"}, {11, "0"}, {12, "2073"}};
    for (const auto& [n, g] : expected) {
        const auto fields = split_csv(lines[static_cast<std::size_t>(n) + 1]);
        CHECK(fields[0] == std::to_string(n));
        CHECK(fields[1] == g);
    }
    SECTION("nmax = 0 gives the single zero row") {
        const RunResult r0 = run_cli("classical 0 --format csv");
        REQUIRE(r0.exit_code == 0);
        const auto l0 = split_lines(r0.out);
        REQUIRE(l0.size() == 2);
        CHECK(split_csv(l0[1])[1] == "0");
        CHECK(split_csv(l0[1])[3].empty()); // no zeta column at n = 0
    }
}

TEST_CASE("qpoly emits canonical coefficients") {
    const RunResult r = run_cli("qpoly 2 --format json");
    REQUIRE(r.exit_code == 0);
    const auto doc = nlohmann::ordered_json::parse(r.out);
    REQUIRE(doc["coefficients"].size() == 2);
    const auto& c0 = doc["coefficients"][0];
    CHECK(c0["num"] == nlohmann::ordered_json::array({"0", "-2"}));
    CHECK(c0["den"] == nlohmann::ordered_json::array({"1", "0", "1"}));
    CHECK(c0["scale"] == "1/1");
    CHECK(doc["coefficients"][1]["num"] == nlohmann::ordered_json::array({"2"}));
    CHECK(doc["coefficients"][1]["den"] == nlohmann::ordered_json::array({"1"}));

    SECTION("n = 0 and n = 1 degenerate cleanly") {
        CHECK(run_cli("qpoly 0 --format pretty").out.find("= 0") != std::string::npos);
        const auto one = nlohmann::ordered_json::parse(run_cli("qpoly 1 --format json").out);
        CHECK(one["coefficients"][0]["num"] == nlohmann::ordered_json::array({"1"}));
    }
}

TEST_CASE("JSON output round-trips byte-identically") {
    for (const std::string args :
         {std::string("classical 8 --format json"), std::string("qpoly 3 --format json"),
          std::string("zeta --s -1 --x 0.5 --q 0.5 --format json"),
          std::string("eval 2 --q 0.5 --x 0.5 --mode series --format json")}) {
        const RunResult r = run_cli(args);
        REQUIRE(r.exit_code == 0);
        const auto doc = nlohmann::ordered_json::parse(r.out);
        CHECK(doc.dump(2) + "\n" == r.out);
    }
}

TEST_CASE("eval modes agree pairwise") {
    auto value_of = [](const std::string& mode) {
        const RunResult r =
            run_cli("eval 2 --q 0.5 --x 0.5 --mode " + mode + " --format csv");
        REQUIRE(r.exit_code == 0);
        const auto lines = split_lines(r.out);
        REQUIRE(lines.size() == 2);
        CHECK(lines[0] == "mode,value_exact,value_decimal,bound,terms");
        return std::stod(split_csv(lines[1])[2]);
    };
    const double symbolic = value_of("symbolic");
    const double series = value_of("series");
    const double integral = value_of("integral");
    CHECK(std::fabs(symbolic - series) <= 1e-8);
    CHECK(std::fabs(symbolic - integral) <= 1e-8);
    CHECK(std::fabs(series - integral) <= 1e-8);
}

TEST_CASE("eval symbolic keeps exactness") {
    const RunResult r = run_cli("eval 1 --q 0.5 --x 0 --mode symbolic --format csv");
    REQUIRE(r.exit_code == 0);
    const auto fields = split_csv(split_lines(r.out)[1]);
    CHECK(fields[1] == "-2/5");
    CHECK(std::stod(fields[2]) == Catch::Approx(-0.4));

    SECTION("n = 0 series gives 1") {
        const RunResult r0 = run_cli("eval 0 --q 0.7 --x 0.3 --mode series --format csv");
        REQUIRE(r0.exit_code == 0);
        CHECK(std::stod(split_csv(split_lines(r0.out)[1])[2]) == Catch::Approx(1.0).margin(1e-10));
    }
}

TEST_CASE("zeta subcommand") {
    SECTION("s = 0 gives 1") {
        const RunResult r = run_cli("zeta --s 0 --x 1 --q 0.3 --format csv");
        REQUIRE(r.exit_code == 0);
        CHECK(std::stod(split_csv(split_lines(r.out)[1])[4]) == Catch::Approx(1.0).margin(1e-11));
    }
    SECTION("s = -1, x = 0.5, q = 0.5 gives 0.1") {
        const RunResult r = run_cli("zeta --s -1 --x 0.5 --q 0.5 --format csv");
        REQUIRE(r.exit_code == 0);
        CHECK(std::stod(split_csv(split_lines(r.out)[1])[4]) == Catch::Approx(0.1).margin(1e-11));
    }
    SECTION("partial with reduction cross-check") {
        const RunResult r =
            run_cli("zeta --s -2 --x 1 --q 0.3 --partial 1,3 --cross-check --format csv");
        REQUIRE(r.exit_code == 0);
        const auto lines = split_lines(r.out);
        const auto header = split_csv(lines[0]);
        REQUIRE(header.size() == 11);
        CHECK(header[10] == "reduction_residual");
        CHECK(std::stod(split_csv(lines[1])[10]) <= 1e-10);
    }
    SECTION("complex literal") {
        const RunResult r = run_cli("zeta --s 2+3i --x 1 --q 0.5 --format csv");
        REQUIRE(r.exit_code == 0);
        const auto fields = split_csv(split_lines(r.out)[1]);
        CHECK(std::stod(fields[4]) == Catch::Approx(1.5528346890220224).margin(1e-10));
        CHECK(std::stod(fields[5]) == Catch::Approx(0.14345819034106416).margin(1e-10));
    }
}

TEST_CASE("exit code contract") {
    CHECK(run_cli("classical 5").exit_code == 0);
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("--no-such-flag").exit_code == 2);
    CHECK(run_cli("zeta --s 0 --x 0.5 --q 1.5").exit_code == 2);  // q outside (0,1)
    CHECK(run_cli("zeta --s 0 --x 1.2 --q 0.5").exit_code == 2);  // x outside (0,1]
    CHECK(run_cli("eval 2 --q 0.5 --mode integral --depth 4,3").exit_code == 2); // even p
    CHECK(run_cli("verify zeta").exit_code == 0);

    SECTION("env term ceiling forces truncation failures and exit 1") {
        const RunResult r = run_cli("verify numeric", "QGENOCCHI_MAX_TERMS=2");
        CHECK(r.exit_code == 1);
    }
}

TEST_CASE("verify report format") {
    const RunResult r = run_cli("verify integral --format csv");
    REQUIRE(r.exit_code == 0);
    const auto lines = split_lines(r.out);
    REQUIRE(lines.size() >= 2);
    CHECK(lines[0] == "check,params,status,residual,seconds");
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto f = split_csv(lines[i]);
        REQUIRE(f.size() == 5);
        CHECK(f[2] == "pass");
    }
}

TEST_CASE("--out writes the same bytes to a file") {
    const std::string path = "/tmp/qgen_cli_out_test.csv";
    std::remove(path.c_str());
    const RunResult direct = run_cli("classical 6 --format csv");
    const RunResult to_file = run_cli("classical 6 --format csv --out " + path);
    REQUIRE(to_file.exit_code == 0);
    CHECK(to_file.out.empty());
    std::ifstream in(path);
    REQUIRE(in.good());
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str() == direct.out);
    std::remove(path.c_str());
}

TEST_CASE("precision flag shapes decimal rendering") {
    const RunResult r = run_cli("eval 1 --q 0.5 --x 0 --mode symbolic --precision 3 --format csv");
    REQUIRE(r.exit_code == 0);
    CHECK(split_csv(split_lines(r.out)[1])[2] == "-0.4");
    const RunResult r17 =
        run_cli("zeta --s 2+3i --x 1 --q 0.5 --precision 5 --format csv");
    REQUIRE(r17.exit_code == 0);
    CHECK(split_csv(split_lines(r17.out)[1])[4] == "1.5528");
}
