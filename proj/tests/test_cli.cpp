#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "soscert/report.hpp"

using namespace soscert;

namespace {
std::string g_cli_path;

int run_cli(const std::string& args) {
    std::string cmd = g_cli_path + " " + args + " > /dev/null 2>&1";
    int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}
}  // namespace

int main(int argc, char** argv) {
    if (argc > 1) g_cli_path = argv[argc - 1];
    doctest::Context ctx;
    ctx.applyCommandLine(argc - 1, argv);
    return ctx.run();
}

TEST_CASE("report round-trip and verdict comparison") {
    CertificateReport rep;
    rep.pipeline = "knapsack";
    rep.n = 25;
    rep.P = "2";
    rep.mode = "exact";
    rep.params = {{"d", 15}};
    rep.conditions.push_back({"c1", "a1", "pass", std::nullopt, ""});
    rep.conditions.push_back({"c2", "a2", "fail", std::string("1/3"), "note"});
    rep.degrees = {{"total", 62}};
    rep.timings_ms = {{"total", 1}};

    std::string path = "/tmp/soscert_test_report.json";
    write_report_file(rep, path);
    CertificateReport back = load_report_file(path);
    CHECK(same_verdicts(rep, back));
    CHECK_FALSE(back.all_pass());
    back.conditions[1].verdict = "pass";
    CHECK_FALSE(same_verdicts(rep, back));
    std::remove(path.c_str());
}

TEST_CASE("csv writer emits exact rationals") {
    std::string path = "/tmp/soscert_test.csv";
    write_csv_file(path, {"x", "v"}, {{Rational(1, 3), Rational(-2)}, {Rational(2), Rational(7, 2)}});
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    std::string text = ss.str();
    CHECK(text == "x,v\n1/3,-2\n2,7/2\n");
    std::remove(path.c_str());
}

TEST_CASE("cli end-to-end: knapsack report replay is bit-identical" * doctest::skip(false)) {
    if (g_cli_path.empty()) return;
    std::string rep = "/tmp/soscert_cli_mk.json";
    std::string csv = "/tmp/soscert_cli_mk.csv";
    int rc = run_cli("--report " + rep + " --csv " + csv + " knapsack --n 16 --P 2");
    CHECK(rc == 0);
    std::ifstream csv_in(csv);
    std::string header;
    std::getline(csv_in, header);
    CHECK(header == "x,stilde1,stilde0");
    int rc2 = run_cli("verify --report-file " + rep);
    CHECK(rc2 == 0);
    std::remove(rep.c_str());
    std::remove(csv.c_str());
}

TEST_CASE("cli end-to-end: sqf theory mode exits zero") {
    if (g_cli_path.empty()) return;
    CHECK(run_cli("sqf --n 12 --k 2 --mode theory") == 0);
}

TEST_CASE("cli rejects bad configs") {
    if (g_cli_path.empty()) return;
    CHECK(run_cli("sqf --k 2") != 0);              // missing n
    CHECK(run_cli("sqf --n 10 --k 2 --mode bad") != 0);
}
