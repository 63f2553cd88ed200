// Command-line front end: run error sweeps, print rigorous bounds, check the
// pointwise inequalities behind the bounds, dump the evaluation grids.

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "sincbound/experiments.hpp"
#include "sincbound/verify.hpp"

namespace {

using namespace sincbound;

ExampleId parse_example(const std::string& s)
{
    if (s == "f1") return ExampleId::f1;
    if (s == "f2") return ExampleId::f2;
    if (s == "f3") return ExampleId::f3;
    if (s == "f4") return ExampleId::f4;
    throw std::domain_error("unknown example: " + s);
}

Variant parse_variant(const std::string& s)
{
    if (s == "se") return Variant::se;
    if (s == "de") return Variant::de;
    throw std::domain_error("unknown variant: " + s);
}

unsigned threads_from_env()
{
    const char* env = std::getenv("SINC_BOUND_THREADS");
    if (env == nullptr || *env == '\0') return 0;  // auto
    const long v = std::strtol(env, nullptr, 10);
    return v > 0 ? static_cast<unsigned>(v) : 0;
}

std::vector<int> n_range(ExampleId id, Variant variant, int n_min, int n_max, int n_step)
{
    if (n_min == 0 && n_max == 0) return default_n_values(id, variant);
    if (n_min <= 0 || n_max < n_min || n_step < 1)
        throw std::domain_error("invalid n range: need 1 <= n-min <= n-max and n-step >= 1");
    std::vector<int> ns;
    for (int n = n_min; n <= n_max; n += n_step) ns.push_back(n);
    return ns;
}

int run_sweep(ExampleId id, Variant variant, int n_min, int n_max, int n_step,
              const std::string& output)
{
    const auto ns = n_range(id, variant, n_min, n_max, n_step);
    const auto records = sweep(id, variant, ns, threads_from_env());
    std::ostringstream body;
    write_csv(body, id, variant, records);
    if (output == "-") {
        std::cout << body.str();
        return 0;
    }
    std::ofstream out(output, std::ios::binary);
    if (!out) {
        std::cerr << "cannot open output file: " << output << "\n";
        return 2;
    }
    out << body.str();
    if (!out.good()) {
        std::cerr << "write failed: " << output << "\n";
        return 2;
    }
    return 0;
}

int run_bound(ExampleId id, Variant variant, int n_min, int n_max, int n_step)
{
    const BenchmarkExample ex = example(id);
    ErrorBound eb = [&] {
        if (variant == Variant::se) return constant_se(*ex.se_class);
        if (!ex.de_class)
            throw std::domain_error(
                "no rigorous DE bound exists for f4: the DE analyticity assumptions are "
                "not satisfied on any strip (the sweep still runs; use --variant se for "
                "a bounded run)");
        return constant_de(*ex.de_class);
    }();
    const auto ns = n_range(id, variant, n_min, n_max, n_step);
    for (int n : ns)
        std::printf("n=%d C=%.17g bound=%.17g\n", n, eb.constant, bound_value(eb, n));
    return 0;
}

int run_verify(long samples)
{
    const auto reports = verify::run_suite(samples);
    bool all_ok = true;
    for (const auto& r : reports) {
        std::printf("%-22s %ld/%ld ok\n", r.name, r.passed, r.total);
        all_ok = all_ok && r.passed == r.total;
    }
    std::printf("%s\n", all_ok ? "all inequalities hold" : "FAILURES detected");
    return all_ok ? 0 : 1;
}

int run_grid(ExampleId id)
{
    const BenchmarkExample ex = example(id);
    const auto grid = is_half_line(ex.se_kind) ? half_line_grid() : whole_line_grid();
    for (double t : grid) std::printf("%.17g\n", t);
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Sinc approximation over infinite and semi-infinite intervals "
                 "with rigorous, fully computable error bounds"};
    app.require_subcommand(1);

    std::string example_name = "f1", variant_name = "se", output = "-";
    int n_min = 0, n_max = 0, n_step = 2;
    long samples = 100000;

    auto add_range = [&](CLI::App* cmd) {
        cmd->add_option("--n-min", n_min, "smallest n (default: variant-dependent)");
        cmd->add_option("--n-max", n_max, "largest n (default 100)");
        cmd->add_option("--n-step", n_step, "n increment (default 2)");
    };

    CLI::App* sweep_cmd = app.add_subcommand(
        "sweep", "measure max errors and rigorous bounds over an n range, emit CSV");
    sweep_cmd->add_option("--example", example_name, "f1|f2|f3|f4")->required();
    sweep_cmd->add_option("--variant", variant_name, "se|de")->required();
    add_range(sweep_cmd);
    sweep_cmd->add_option("--output", output, "CSV path, or - for stdout (default)");

    CLI::App* bound_cmd =
        app.add_subcommand("bound", "print the explicit constant C and C*eps_n over an n range");
    bound_cmd->add_option("--example", example_name, "f1|f2|f3|f4")->required();
    bound_cmd->add_option("--variant", variant_name, "se|de")->required();
    add_range(bound_cmd);

    CLI::App* verify_cmd = app.add_subcommand(
        "verify", "check the pointwise inequalities behind the bounds; nonzero exit on failure");
    verify_cmd->add_option("--samples", samples, "random samples per inequality (default 100000)");

    CLI::App* grid_cmd = app.add_subcommand("grid", "dump the evaluation grid for an example");
    grid_cmd->add_option("--example", example_name, "f1|f2|f3|f4 (default f1)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (sweep_cmd->parsed())
            return run_sweep(parse_example(example_name), parse_variant(variant_name), n_min,
                             n_max, n_step, output);
        if (bound_cmd->parsed())
            return run_bound(parse_example(example_name), parse_variant(variant_name), n_min,
                             n_max, n_step);
        if (verify_cmd->parsed()) return run_verify(samples);
        if (grid_cmd->parsed()) return run_grid(parse_example(example_name));
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
