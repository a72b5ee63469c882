#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "confract/commands.hpp"
#include "confract/config.hpp"
#include "confract/error.hpp"
#include "confract/verify.hpp"

namespace {

enum Exit { ok = 0, failed = 1, bad_config = 2 };

struct Flags {
    std::string config;
    std::string preset;
    std::optional<std::string> system;
    std::optional<double> alpha;
    std::vector<std::string> params;
    std::optional<std::string> grid;
    std::optional<std::string> out;
    std::optional<std::string> format;
    std::optional<std::string> suite;
    std::optional<std::uint64_t> seed;
    bool perturb = false;
    bool pushforward = false;
};

confract::RunConfig resolve(const std::string& command, const Flags& f)
{
    using namespace confract;
    RunConfig cfg;
    if (!f.preset.empty())
        cfg = preset_config(f.preset);
    cfg.command = command;
    if (!f.config.empty())
        cfg = load_config_file(f.config, cfg);
    cfg.command = command;
    if (f.system && *f.system != cfg.system) {
        cfg.system = *f.system;
        cfg.params.clear();
    }
    if (f.alpha)
        cfg.alpha = *f.alpha;
    for (const auto& p : f.params)
        apply_param_flag(cfg, p);
    if (f.grid)
        apply_grid_flag(cfg, *f.grid);
    if (f.out)
        cfg.output = *f.out;
    if (f.format) {
        if (*f.format == "csv")
            cfg.format = OutputFormat::csv;
        else if (*f.format == "json")
            cfg.format = OutputFormat::json;
        else
            throw ConfigError("--format: expected csv or json");
    }
    if (f.suite)
        cfg.suite = *f.suite;
    if (f.seed)
        cfg.seed = *f.seed;
    if (f.perturb)
        cfg.perturb = true;
    if (f.pushforward)
        cfg.pushforward = true;
    validate(cfg);
    return cfg;
}

template <class Write>
void emit(const confract::RunConfig& cfg, Write&& write)
{
    if (cfg.output == "-") {
        write(std::cout);
        std::cout.flush();
        return;
    }
    std::ofstream os(cfg.output, std::ios::binary);
    if (!os)
        throw confract::ConfigError("output: cannot open '" + cfg.output + "' for writing");
    write(os);
}

int run(const std::string& command, const Flags& flags)
{
    using namespace confract;
    const RunConfig cfg = resolve(command, flags);
    if (command == "verify") {
        const Report report = run_verify(cfg);
        emit(cfg, [&](std::ostream& os) { os << to_json(report).dump(2) << '\n'; });
        int failures = 0;
        for (const Check& c : report.checks)
            if (!c.pass) {
                ++failures;
                std::cerr << "FAIL " << c.name << ": " << format_double(c.max_deviation) << " > "
                          << format_double(c.tolerance) << '\n';
            }
        std::cerr << report.suite << ": " << report.checks.size() - failures << "/" << report.checks.size()
                  << " checks passed\n";
        return report.overall() ? ok : failed;
    }
    CommandOutput out;
    if (command == "eval-kernel")
        out = eval_kernel_table(cfg);
    else if (command == "solve")
        out = solve_table(cfg);
    else
        out = transform_table(cfg);
    for (const auto& w : out.warnings)
        std::cerr << "warning: " << w << '\n';
    emit(cfg, [&](std::ostream& os) { write_table(os, out.table, cfg.format); });
    return ok;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Fundamental solutions, symmetry flows and conservation laws of conformable parabolic systems"};
    app.require_subcommand(1);
    Flags flags;

    std::string presets;
    for (const auto& p : confract::preset_names())
        presets += (presets.empty() ? "" : ", ") + p;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", flags.config, "JSON config file");
        sub->add_option("--preset", flags.preset, "Base preset: " + presets);
        sub->add_option("--system", flags.system, "example31 | eq2 | eq3 | transformed33 | power-transform");
        sub->add_option("--alpha", flags.alpha, "Fractional order, 0 < alpha <= 1");
        sub->add_option("--param", flags.params, "System constant as name=value (repeatable)");
        sub->add_option("--grid", flags.grid, "Axes as x=min:max:count[:log],t=...,y=...");
        sub->add_option("--out", flags.out, "Output path, '-' for stdout");
        sub->add_option("--format", flags.format, "csv | json");
    };

    auto* eval = app.add_subcommand("eval-kernel", "Tabulate the fundamental solution on a (t, x, y) grid");
    auto* solve = app.add_subcommand("solve", "Solve the Cauchy problem on an (x, t) grid");
    auto* verify = app.add_subcommand("verify", "Run verification suites and write a JSON report");
    auto* transform = app.add_subcommand("transform", "Tabulate transformed coefficients or the pushforward kernel");
    for (auto* sub : {eval, solve, verify, transform})
        add_common(sub);
    verify->add_option("--suite", flags.suite, "residual | laplace | conservation | group-orbit | pushforward | all");
    verify->add_option("--seed", flags.seed, "Seed for the random conserved-vector constants");
    verify->add_flag("--perturb", flags.perturb, "Perturb the solutions (negative control)");
    transform->add_flag("--pushforward", flags.pushforward, "Emit the pushforward kernel");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return bad_config;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        return run(command, flags);
    } catch (const confract::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return bad_config;
    } catch (const confract::ParameterError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return bad_config;
    } catch (const confract::DomainError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return bad_config;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return failed;
    }
}
