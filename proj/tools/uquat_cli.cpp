#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "uquat/bench.hpp"
#include "uquat/checks.hpp"
#include "uquat/json_io.hpp"
#include "uquat/spaceform.hpp"

namespace {

using namespace uquat;

std::vector<std::string> read_lines(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r\n") != std::string::npos) lines.push_back(line);
    }
    return lines;
}

const char* json_bool(bool b) { return b ? "true" : "false"; }

int cmd_compose(std::ostream& out) {
    const auto lines = read_lines(std::cin);
    if (lines.empty()) throw io::ParseError("compose: need at least one input document");
    ExtQuaternion acc = io::parse_extquat(lines.front());
    for (std::size_t i = 1; i < lines.size(); ++i) acc = acc * io::parse_extquat(lines[i]);
    out << io::to_json(acc) << '\n';
    return 0;
}

int cmd_decompose(std::ostream& out) {
    for (const auto& line : read_lines(std::cin)) {
        const UnitElement q{io::parse_extquat(line)};
        const Decomposition d = decompose(q);
        out << "{\"q_r\":" << io::to_json(d.rotor.value())
            << ",\"q_b\":" << io::to_json(d.translator.value())
            << ",\"theta\":" << io::format_double(d.theta) << "}\n";
    }
    return 0;
}

int cmd_apply(std::ostream& out) {
    for (const auto& line : read_lines(std::cin)) {
        const auto [q, v] = io::parse_apply_request(line);
        out << io::to_json(apply(UnitElement{q}, v)) << '\n';
    }
    return 0;
}

int cmd_matrix(std::ostream& out) {
    for (const auto& line : read_lines(std::cin)) {
        out << io::to_json(matrix_of(UnitElement{io::parse_extquat(line)})) << '\n';
    }
    return 0;
}

int cmd_distance(std::ostream& out, std::optional<Algebra> alg) {
    for (const auto& line : read_lines(std::cin)) {
        const auto [v, w] = io::parse_pair_request(line, alg);
        const double d = distance(SpaceFormPoint{v}, SpaceFormPoint{w});
        out << "{\"distance\":" << io::format_double(d) << "}\n";
    }
    return 0;
}

int cmd_check(std::ostream& out, const checks::Options& opt) {
    const checks::Report report = checks::run_all(opt);
    for (const auto& suite : report.suites) {
        out << "{\"suite\":\"" << suite.name << "\",\"samples\":" << suite.samples
            << ",\"max_error\":" << io::format_double(suite.max_error)
            << ",\"tolerance\":" << io::format_double(suite.tolerance)
            << ",\"pass\":" << json_bool(suite.pass) << "}\n";
    }
    out << "{\"all_pass\":" << json_bool(report.all_pass())
        << ",\"suites\":" << report.suites.size() << ",\"seed\":" << opt.seed
        << ",\"samples\":" << opt.samples
        << ",\"tolerance_scale\":" << io::format_double(opt.tolerance_scale) << "}\n";
    return report.all_pass() ? 0 : 1;
}

int cmd_bench(std::ostream& out, int iterations, std::size_t batch) {
    bool agree = true;
    for (const auto& r : bench::run(iterations, batch)) {
        agree = agree && r.agree;
        out << "{\"algebra\":\"" << algebra_name(r.alg) << "\",\"batch\":" << r.batch
            << ",\"iterations\":" << r.iterations
            << ",\"sandwich_ns_per_op\":" << io::format_double(r.sandwich_ns_per_op)
            << ",\"matrix_ns_per_op\":" << io::format_double(r.matrix_ns_per_op)
            << ",\"max_divergence\":" << io::format_double(r.max_divergence)
            << ",\"agreement\":" << json_bool(r.agree)
            << ",\"checksum\":" << io::format_double(r.checksum) << "}\n";
    }
    return agree ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quaternion-extension transforms on R^4 and the three space forms"};
    app.require_subcommand(1);

    std::string algebra_opt;
    app.add_option("--algebra", algebra_opt, "default algebra for documents that omit it")
        ->check(CLI::IsMember({"complex", "dual", "split"}));
    std::string out_path;
    app.add_option("--out", out_path, "write results to a file instead of stdout");

    checks::Options check_opt;
    int bench_iterations = 3;
    std::size_t bench_batch = 100000;

    auto* compose = app.add_subcommand("compose", "left-to-right product of the input elements");
    auto* decomp = app.add_subcommand("decompose", "factor unit elements into rotor * translator");
    auto* apply_cmd = app.add_subcommand("apply", "sandwich-transform vectors: {\"q\":..., \"v\":...}");
    auto* matrix = app.add_subcommand("matrix", "4x4 matrix of a unit element's action");
    auto* dist = app.add_subcommand("distance", "space-form distance: {\"v\":..., \"w\":...}");

    auto* check = app.add_subcommand("check", "run the randomized invariant suites");
    check->add_option("--seed", check_opt.seed, "RNG seed")->capture_default_str();
    check->add_option("--samples", check_opt.samples, "samples per suite")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    check->add_option("--tolerance-scale", check_opt.tolerance_scale,
                      "multiplier on the default tolerances")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();

    auto* bench_cmd = app.add_subcommand("bench", "time sandwich vs. matrix pipelines");
    bench_cmd->add_option("-n,--iterations", bench_iterations, "timing repetitions")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    bench_cmd->add_option("--batch", bench_batch, "vectors per timed pass")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) {
            std::cerr << "error: cannot open " << out_path << '\n';
            return 2;
        }
    }
    std::ostream& out = file.is_open() ? file : std::cout;

    std::optional<Algebra> alg;
    if (!algebra_opt.empty()) alg = algebra_from_name(algebra_opt);
    if (alg) check_opt.algebras = {*alg};

    try {
        if (*compose) return cmd_compose(out);
        if (*decomp) return cmd_decompose(out);
        if (*apply_cmd) return cmd_apply(out);
        if (*matrix) return cmd_matrix(out);
        if (*dist) return cmd_distance(out, alg);
        if (*check) return cmd_check(out, check_opt);
        if (*bench_cmd) return cmd_bench(out, bench_iterations, bench_batch);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
