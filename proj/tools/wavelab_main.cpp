// wavelab: batch experiment runner for time-dependent wave-equation energy
// estimates.  Subcommands expose each module; see README for the config
// grammar and output formats.

#include <cstdio>
#include <exception>
#include <string>

#include <CLI11.hpp>

#include "wavelab/cli.hpp"
#include "wavelab/io.hpp"
#include "wavelab/suite.hpp"

int main(int argc, char** argv) {
    CLI::App app{"wavelab: energy estimates for v'' + beta^2 a(t) v = 0 at desk scale"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir = ".";
    std::uint64_t seed = 1;
    int threads = 0;
    double tolerance_scale = 1.0;

    const std::vector<std::string> commands = {"coeff",  "solve",    "mollify-verify", "sweep",
                                               "fit",    "spectral", "suite"};
    for (const auto& name : commands) {
        auto* sub = app.add_subcommand(name);
        sub->add_option("--config", config_path, "experiment config file (key = value lines)");
        sub->add_option("--out", out_dir, "output directory");
        sub->add_option("--seed", seed, "64-bit seed for all randomness");
        sub->add_option("--threads", threads, "worker threads (0 = hardware)");
        sub->add_option("--tolerance-scale", tolerance_scale, "scales check tolerances");
    }

    CLI11_PARSE(app, argc, argv);

    try {
        wavelab::cli::ExperimentConfig ex;
        ex.command = app.get_subcommands().front()->get_name();
        if (!config_path.empty()) {
            ex.config = wavelab::io::KeyValueFile::parse_file(config_path);
        } else if (ex.command != "suite") {
            std::fprintf(stderr, "error: %s requires --config\n", ex.command.c_str());
            return 2;
        }
        ex.out_dir = out_dir;
        ex.seed = seed;
        ex.threads = threads;
        ex.tolerance_scale = tolerance_scale;

        if (ex.command == "suite") {
            wavelab::suite::SuiteOptions opt;
            opt.out_dir = out_dir == "." ? "suite-out" : out_dir;
            opt.seed = seed;
            opt.threads = threads;
            opt.tolerance_scale = tolerance_scale;
            const auto results = wavelab::suite::run_all(opt);
            std::fputs(wavelab::suite::summary_lines(results).c_str(), stdout);
            return wavelab::suite::all_pass(results) ? 0 : 1;
        }
        return wavelab::cli::run(ex);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
