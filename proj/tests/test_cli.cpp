#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <nonacycle/io.hpp>

#include "reference_example.hpp"
#include "test_support.hpp"

namespace {

struct cli_run {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::string s((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return s;
}

cli_run run_cli(const std::string& args) {
    static int counter = 0;
    const std::string out_path = "cli_out_" + std::to_string(counter) + ".tmp";
    const std::string err_path = "cli_err_" + std::to_string(counter) + ".tmp";
    ++counter;
    const std::string cmd =
        std::string(NONACYCLE_CLI_PATH) + " " + args + " >" + out_path + " 2>" + err_path;
    const int status = std::system(cmd.c_str());
    cli_run r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out_path);
    r.err = slurp(err_path);
    std::remove(out_path.c_str());
    std::remove(err_path.c_str());
    return r;
}

std::string fixture(const std::string& name) { return test_support::data_path(name); }

} // namespace

TEST_CASE("det on the identity fixture prints 1") {
    const auto r = run_cli("det " + fixture("identity12.json"));
    CHECK(r.exit_code == 0);
    CHECK(r.out == "1\n");
    CHECK(r.err.find("det=1") != std::string::npos);
    CHECK(r.err.find("substitutions=14") != std::string::npos);
}

TEST_CASE("inv on the reference fixture reproduces the published inverse") {
    const auto r = run_cli("inv " + fixture("example12.json"));
    CHECK(r.exit_code == 0);
    CHECK(r.err.find("det=4715") != std::string::npos);
    CHECK(r.out == nonacycle::render_dense_json(refex::inverse_matrix()));
    CHECK(r.out.find("\"231/4715\"") != std::string::npos);
}

TEST_CASE("exact and oracle modes produce byte-identical results") {
    for (const std::string file : {"example12.json", "identity12.json"}) {
        const auto exact = run_cli("inv --mode exact " + fixture(file));
        const auto oracle = run_cli("inv --mode oracle " + fixture(file));
        CHECK(exact.exit_code == 0);
        CHECK(oracle.exit_code == 0);
        CHECK(exact.out == oracle.out);

        const auto anti_e = run_cli("anti-inv --mode exact --format csv " + fixture(file));
        const auto anti_o = run_cli("anti-inv --mode oracle --format csv " + fixture(file));
        CHECK(anti_e.exit_code == 0);
        CHECK(anti_e.out == anti_o.out);
    }
}

TEST_CASE("exit code 1 on a singular matrix, with the step-7 message") {
    const auto r = run_cli("inv " + fixture("singular12.json"));
    CHECK(r.exit_code == 1);
    CHECK(r.err.find("singular matrix") != std::string::npos);
    CHECK(run_cli("det --mode oracle " + fixture("singular12.json")).out == "0\n");
}

TEST_CASE("exit code 2 on input and validation problems") {
    CHECK(run_cli("inv no_such_file.json").exit_code == 2);
    CHECK(run_cli("inv " + fixture("bad_band.json")).exit_code == 2);
    CHECK(run_cli("inv " + fixture("missing_band.json")).exit_code == 2);
    CHECK(run_cli("inv --mode bogus " + fixture("example12.json")).exit_code == 2);
    CHECK(run_cli("anti-inv --mode float " + fixture("example12.json")).exit_code == 2);
    CHECK(run_cli("").exit_code == 2);
}

TEST_CASE("float mode prints round-trippable doubles and skips verification") {
    const auto det = run_cli("det --mode float " + fixture("example12.json"));
    CHECK(det.exit_code == 0);
    CHECK(std::abs(std::stod(det.out) - 4715.0) < 1e-6);
    const auto inv = run_cli("inv --mode float --verify " + fixture("example12.json"));
    CHECK(inv.exit_code == 0);
    CHECK(inv.err.find("verification is unavailable") != std::string::npos);
}

TEST_CASE("csv format and --output") {
    const std::string out_file = "cli_result.tmp";
    const auto r =
        run_cli("inv --format csv --output " + out_file + " " + fixture("example12.json"));
    CHECK(r.exit_code == 0);
    CHECK(r.out.empty());
    const std::string written = slurp(out_file);
    std::remove(out_file.c_str());
    CHECK(written == nonacycle::render_dense_csv(refex::inverse_matrix()));
    CHECK(written.substr(0, 9) == "231/4715,");
}

TEST_CASE("gen-random emits a parseable, reproducible matrix") {
    const auto a = run_cli("gen-random 14 42");
    const auto b = run_cli("gen-random 14 42");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    const auto m = nonacycle::parse_matrix(a.out);
    CHECK(m.n == 14);
    CHECK_NOTHROW(nonacycle::validate(m));

    const auto c = run_cli("gen-random 14 43");
    CHECK(c.out != a.out);
}

TEST_CASE("small orders are served by the oracle mode only") {
    const auto gen = run_cli("gen-random 10 7 --output small10.tmp");
    REQUIRE(gen.exit_code == 0);
    const auto exact = run_cli("det small10.tmp");
    CHECK(exact.exit_code == 2);
    const auto oracle = run_cli("det --mode oracle small10.tmp");
    CHECK(oracle.exit_code == 0);
    std::remove("small10.tmp");
}
