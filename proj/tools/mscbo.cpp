#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "mscbo/experiment.hpp"

namespace {

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::invalid_argument("cannot open config file '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "mscbo - multi-swarm consensus-based optimization for Pareto front approximation"};
    app.get_formatter()->column_width(28);

    std::string problem;
    std::string variant;
    std::string config_path;
    std::string preset_name;
    std::string out_dir;
    std::string emit_list;
    int swarms = 0;
    int particles = 0;
    int iters = 0;
    int seed_count = 0;
    std::uint64_t seed = 0;
    bool seed_given = false;

    app.add_option("--problem", problem, "Problem name (schaffer1, dent, schaffer2, three)");
    app.add_option("--variant", variant, "Dynamics variant (fixed, adaptive, full)");
    app.add_option("--swarms", swarms, "Number of swarms K")->check(CLI::PositiveNumber);
    app.add_option("--particles", particles, "Particles per swarm")->check(CLI::PositiveNumber);
    app.add_option("--iters", iters, "Number of iterations (horizon T = iters * tau)")
        ->check(CLI::PositiveNumber);
    auto* seed_opt = app.add_option("--seed", seed, "Base random seed");
    app.add_option("--seeds", seed_count, "Run this many consecutive seeds starting at --seed")
        ->check(CLI::PositiveNumber);
    app.add_option("--config", config_path, "Configuration file (key = value lines)");
    app.add_option("--preset", preset_name, "Named preset configuration");
    app.add_option("--out", out_dir, "Output directory");
    app.add_option("--emit", emit_list,
                   "Comma-separated outputs: front_csv, weights_csv, diagnostics_csv, "
                   "summary_json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }
    seed_given = seed_opt->count() > 0;

    mscbo::ExperimentSpec spec;
    try {
        // Precedence: defaults, then preset, then config file, then flags.
        if (!preset_name.empty()) {
            spec = mscbo::preset(preset_name);
        }
        if (!config_path.empty()) {
            mscbo::apply_config(spec, read_text_file(config_path));
        }
        if (!problem.empty()) {
            mscbo::apply_config_entry(spec, "problem", problem);
        }
        if (!variant.empty()) {
            mscbo::apply_config_entry(spec, "variant", variant);
        }
        if (swarms > 0) {
            mscbo::apply_config_entry(spec, "K", std::to_string(swarms));
        }
        if (particles > 0) {
            mscbo::apply_config_entry(spec, "N_bar", std::to_string(particles));
        }
        if (iters > 0) {
            mscbo::apply_config_entry(spec, "iters", std::to_string(iters));
        }
        if (seed_given) {
            mscbo::apply_config_entry(spec, "seed", std::to_string(seed));
        }
        if (seed_count > 0) {
            mscbo::apply_config_entry(spec, "seeds", std::to_string(seed_count));
        }
        if (!out_dir.empty()) {
            mscbo::apply_config_entry(spec, "out", out_dir);
        }
        if (!emit_list.empty()) {
            mscbo::apply_config_entry(spec, "emit", emit_list);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "mscbo: " << e.what() << "\n";
        return 1;
    }

    try {
        mscbo::ExperimentOutcome outcome = mscbo::run_experiment(spec);
        std::printf("problem=%s variant=%s seeds=%zu\n", spec.problem.c_str(),
                    mscbo::to_string(spec.config.variant).c_str(), spec.seeds.size());
        for (const auto& s : outcome.per_seed) {
            std::printf("seed %llu: gd=%.6g igd=%.6g hv=%.6g ni=%d\n",
                        static_cast<unsigned long long>(s.seed), s.report.gd, s.report.igd,
                        s.report.hv, s.report.ni);
        }
        if (outcome.per_seed.size() > 1) {
            std::printf("mean: gd=%.6g igd=%.6g hv=%.6g ni=%d\n", outcome.mean.gd,
                        outcome.mean.igd, outcome.mean.hv, outcome.mean.ni);
            std::printf("stddev: gd=%.6g igd=%.6g hv=%.6g ni=%d\n", outcome.stddev.gd,
                        outcome.stddev.igd, outcome.stddev.hv, outcome.stddev.ni);
        }
        for (const auto& f : outcome.files_written) {
            std::printf("wrote %s\n", f.c_str());
        }
        return 0;
    } catch (const std::invalid_argument& e) {
        std::cerr << "mscbo: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "mscbo: " << e.what() << "\n";
        return 2;
    }
}
