#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mscbo/dynamics.hpp"
#include "mscbo/indicators.hpp"
#include "mscbo/problems.hpp"

namespace mscbo {

struct ExperimentSpec {
    std::string problem = "schaffer1";
    RunConfig config{};
    std::vector<std::uint64_t> seeds = {0};
    /// Reference-front resolution; 0 selects the per-problem default.
    int resolution = 0;
    std::string out_dir = ".";
    /// Hypervolume reference point override; empty selects the problem's own.
    std::vector<double> hv_ref;
    bool emit_front = true;
    bool emit_weights = true;
    bool emit_diagnostics = true;
    bool emit_summary = true;
};

bool operator==(const ExperimentSpec& a, const ExperimentSpec& b);

/// Parse a key=value config document ('#' starts a comment line). Unknown
/// keys and invalid values are rejected with a descriptive error.
ExperimentSpec parse_config(const std::string& text);

/// Apply a config document on top of an existing spec (e.g. a preset).
void apply_config(ExperimentSpec& spec, const std::string& text);

/// Apply one key=value assignment to a spec (shared by the config parser and
/// command-line overrides). `iters` is translated to T at application time.
void apply_config_entry(ExperimentSpec& spec, const std::string& key, const std::string& value);

/// Canonical round-trippable rendering of a spec as a config document.
std::string serialize_config(const ExperimentSpec& spec);

std::vector<std::string> preset_names();

/// The configurations behind the reported tables and figures.
ExperimentSpec preset(const std::string& name);

struct SeedOutcome {
    std::uint64_t seed = 0;
    IndicatorReport report;
};

struct ExperimentOutcome {
    std::vector<SeedOutcome> per_seed;
    IndicatorReport mean;
    IndicatorReport stddev;  ///< sample standard deviation; ni fields rounded
    std::vector<std::string> files_written;
};

/// Run every seed, write the requested per-seed files and the aggregate
/// summary into spec.out_dir, and return the collected indicators.
ExperimentOutcome run_experiment(const ExperimentSpec& spec);

/// The front CSV text for one finished run (also what run_experiment writes).
std::string front_csv(const ParetoApproximation& approximation, int dim, int objectives);

}  // namespace mscbo
