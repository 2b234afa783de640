// Command-line frontend: determinants and inverses of cyclic nonadiagonal
// matrices in exact, floating-point, or dense-oracle mode.
//
// Exit codes: 0 success, 1 singular matrix, 2 input/validation error,
// 3 internal verification failure.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include <nonacycle/nonacycle.hpp>

namespace {

using namespace nonacycle;

struct run_config {
    std::string command;
    std::string input_path;
    std::string output_path; // empty means standard output
    std::string mode = "exact";
    std::string format = "json";
    int verify_state = -1; // -1 unset, 0 off, 1 on
    bool verify = true;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw syntax_error(0, "cannot read input file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_result(const run_config& cfg, const std::string& payload) {
    if (cfg.output_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(cfg.output_path, std::ios::binary);
    if (!out) throw syntax_error(0, "cannot write output file '" + cfg.output_path + "'");
    out << payload;
}

std::string double_text(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

struct outcome {
    std::string payload;
    std::string det_text;
    std::size_t substitutions = 0;
};

template <typename T>
std::string render_matrix(const run_config& cfg, const dense_matrix<T>& m) {
    return cfg.format == "csv" ? render_dense_csv(m) : render_dense_json(m);
}

outcome run_exact(const run_config& cfg, const cyclic_nonadiagonal<big_rational>& m) {
    outcome out;
    if (cfg.command == "det") {
        validate(m);
        const auto lu = factorize(promote(m));
        const big_rational det = determinant(lu);
        out.det_text = det.to_string();
        out.substitutions = lu.substitutions.size();
        out.payload = out.det_text + "\n";
        return out;
    }
    const auto res = cfg.command == "inv" ? invert(m, cfg.verify) : anti_inverse(m, cfg.verify);
    out.det_text = res.determinant.to_string();
    out.substitutions = res.substitutions;
    out.payload = render_matrix(cfg, res.inverse);
    return out;
}

outcome run_oracle(const run_config& cfg, const cyclic_nonadiagonal<big_rational>& m) {
    validate_bands(m);
    const dense_matrix<big_rational> dense = to_dense(m);
    outcome out;
    if (cfg.command == "det") {
        out.det_text = bareiss_det(dense).to_string();
        out.payload = out.det_text + "\n";
        return out;
    }
    const oracle_result res = gauss_jordan_inverse(dense);
    if (!res.inverse) throw singular_matrix();
    out.det_text = res.determinant.to_string();
    dense_matrix<big_rational> inv = *res.inverse;
    if (cfg.verify && !verify_inverse(m, inv))
        throw verification_failed("oracle inverse failed K * K^{-1} = I");
    if (cfg.command == "anti-inv") inv = reverse_rows(inv);
    out.payload = render_matrix(cfg, inv);
    return out;
}

outcome run_float(const run_config& cfg, const cyclic_nonadiagonal<big_rational>& m) {
    validate(m);
    const cyclic_nonadiagonal<double> md = demote(m);
    outcome out;
    if (cfg.command == "det") {
        const auto lu = factorize(md);
        out.det_text = double_text(determinant(lu));
        out.payload = out.det_text + "\n";
        return out;
    }
    const inverse_result<double> res = invert(md);
    out.det_text = double_text(res.determinant);
    out.payload = render_matrix(cfg, res.inverse);
    return out;
}

int run(const run_config& cfg) {
    const auto started = std::chrono::steady_clock::now();
    const cyclic_nonadiagonal<big_rational> m = parse_matrix(read_file(cfg.input_path));

    outcome out;
    if (cfg.mode == "exact")
        out = run_exact(cfg, m);
    else if (cfg.mode == "oracle")
        out = run_oracle(cfg, m);
    else
        out = run_float(cfg, m);

    write_result(cfg, out.payload);

    const double elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started)
            .count();
    std::fprintf(stderr, "n=%d mode=%s det=%s substitutions=%zu elapsed_ms=%.2f\n", m.n,
                 cfg.mode.c_str(), out.det_text.c_str(), out.substitutions, elapsed_ms);
    return 0;
}

int run_gen_random(int n, std::uint64_t seed, bool rescue_free, const std::string& output_path) {
    const auto m = random_matrix(n, seed, rescue_free);
    const std::string payload = serialize_matrix(m);
    if (output_path.empty()) {
        std::cout << payload;
    } else {
        std::ofstream out(output_path, std::ios::binary);
        if (!out) throw syntax_error(0, "cannot write output file '" + output_path + "'");
        out << payload;
    }
    return 0;
}

void add_common_options(CLI::App* cmd, run_config& cfg) {
    cmd->add_option("input", cfg.input_path, "matrix file (band JSON)")->required();
    cmd->add_option("--mode", cfg.mode, "exact | float | oracle")
        ->check(CLI::IsMember({"exact", "float", "oracle"}))
        ->capture_default_str();
    cmd->add_flag_callback("--verify", [&cfg] { cfg.verify_state = 1; },
                           "check K * K^{-1} = I exactly (default in exact/oracle mode)");
    cmd->add_flag_callback("--no-verify", [&cfg] { cfg.verify_state = 0; },
                           "skip the inverse check");
    cmd->add_option("--output", cfg.output_path, "result file (default: standard output)");
    cmd->add_option("--format", cfg.format, "json | csv")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
}

int cli_main(int argc, char** argv) {
    CLI::App app{"determinant and exact inverse of cyclic nonadiagonal matrices"};
    app.require_subcommand(1);

    run_config cfg;
    CLI::App* det = app.add_subcommand("det", "determinant only");
    CLI::App* inv = app.add_subcommand("inv", "full inverse");
    CLI::App* anti = app.add_subcommand("anti-inv", "inverse of the anti-nonadiagonal Y = K*R");
    add_common_options(det, cfg);
    add_common_options(inv, cfg);
    add_common_options(anti, cfg);

    int gen_n = 12;
    std::uint64_t gen_seed = 0;
    bool gen_rescue_free = false;
    std::string gen_output;
    CLI::App* gen = app.add_subcommand("gen-random", "emit a random integer matrix");
    gen->group(""); // test-suite helper, hidden from help
    gen->add_option("n", gen_n, "order")->required();
    gen->add_option("seed", gen_seed, "RNG seed")->required();
    gen->add_flag("--rescue-free", gen_rescue_free, "force z and R bands nonzero");
    gen->add_option("--output", gen_output, "output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) return run_gen_random(gen_n, gen_seed, gen_rescue_free, gen_output);

        cfg.command = det->parsed() ? "det" : inv->parsed() ? "inv" : "anti-inv";
        if (cfg.command == "anti-inv" && cfg.mode == "float") {
            std::fprintf(stderr, "anti-inv requires --mode exact or oracle\n");
            return 2;
        }
        cfg.verify = cfg.verify_state == -1 ? cfg.mode != "float" : cfg.verify_state == 1;
        if (cfg.mode == "float" && cfg.verify) {
            std::fprintf(stderr, "note: verification is unavailable in float mode\n");
            cfg.verify = false;
        }
        return run(cfg);
    } catch (const singular_matrix& e) {
        std::fprintf(stderr, "%s\n", e.what());
        return 1;
    } catch (const structurally_singular& e) {
        std::fprintf(stderr, "singular matrix (%s)\n", e.what());
        return 1;
    } catch (const zero_pivot& e) {
        std::fprintf(stderr, "singular matrix (%s)\n", e.what());
        return 1;
    } catch (const verification_failed& e) {
        std::fprintf(stderr, "verification failure: %s\n", e.what());
        return 3;
    } catch (const pole_at_zero& e) {
        std::fprintf(stderr, "verification failure: %s\n", e.what());
        return 3;
    } catch (const solver_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "internal error: %s\n", e.what());
        return 3;
    }
}

} // namespace

int main(int argc, char** argv) {
    try {
        return cli_main(argc, argv);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "internal error: %s\n", e.what());
        return 3;
    } catch (...) {
        std::fprintf(stderr, "internal error\n");
        return 3;
    }
}
