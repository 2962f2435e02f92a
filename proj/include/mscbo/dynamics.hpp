#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mscbo/interaction.hpp"
#include "mscbo/problems.hpp"

namespace mscbo {

enum class Variant { fixed, adaptive, full };
enum class WeightInit { equidistant, simplex_uniform, explicit_list };

std::string to_string(Variant v);
std::string to_string(WeightInit w);
Variant variant_from_string(const std::string& name);
WeightInit weight_init_from_string(const std::string& name);

struct RunConfig {
    int K = 30;       ///< swarm count
    int N_bar = 20;   ///< particles per swarm
    double tau = 0.1;
    double T = 5.0;
    double drift_coefficient = 1.0;
    double sigma = 0.1;
    double alpha = 100.0;
    double beta = 10.0;
    PotentialParams potential{};
    double R_c = 1.0;
    double r_c = 0.1;
    Variant variant = Variant::full;
    std::uint64_t seed = 0;
    WeightInit weight_init = WeightInit::equidistant;
    /// Used when weight_init == explicit_list: K rows of p simplex weights.
    std::vector<std::vector<double>> explicit_weights;
    /// Extra multiplier on the weight-adaptation force.
    double weight_scale = 1.0;
    /// Couple each swarm only with its direct neighbors in the ordering by
    /// first weight component, acting on raw simplex weights instead of
    /// log-weights, with the squared-exponential prefactor u(d^f). The
    /// setting mirrors the regime of the diversity analysis.
    bool neighbor_only = false;
    double eps_dom = 1e-5;
};

void validate(const RunConfig& cfg, const Problem& problem);

/// Number of Euler-Maruyama steps a run executes: ceil(T / tau), robust to
/// the quotient landing a hair above an integer.
int iteration_count(const RunConfig& cfg);

struct SwarmSystemState {
    int K = 0;
    int N_bar = 0;
    int dim = 0;
    int objectives = 0;
    double t = 0.0;
    int step = 0;

    /// Particle positions, K * N_bar * dim, swarm-major then particle-major.
    std::vector<double> positions;
    /// Per-particle objective values at `positions`, K * N_bar * objectives.
    std::vector<double> fx;
    /// Swarm weight parameters, K * objectives. Log-weights mu = ln(lambda)
    /// normally; raw simplex weights when the run uses neighbor_only mode.
    std::vector<double> mu;
    /// Cached consensus points v^k, K * dim.
    std::vector<double> means;
    /// Objective values of the consensus points, K * objectives.
    std::vector<double> means_f;

    std::span<double> position(int k, int j);
    std::span<const double> position(int k, int j) const;
    std::span<const double> particle_fx(int k, int j) const;
    std::span<double> mu_row(int k);
    std::span<const double> mu_row(int k) const;
    std::span<double> mean_row(int k);
    std::span<const double> mean_row(int k) const;
    std::span<double> mean_fx_row(int k);
    std::span<const double> mean_fx_row(int k) const;
};

/// Positions i.i.d. uniform on the box, weights per cfg.weight_init, caches
/// filled from the initial particles with the plain weighted mean.
SwarmSystemState init_state(const Problem& problem, const RunConfig& cfg);

/// The lambda row a swarm currently scalarizes with: softmax of the stored
/// log-weights, or the stored row itself in neighbor_only mode.
std::vector<double> swarm_lambda(const SwarmSystemState& state, const RunConfig& cfg, int k);

/// Softmin-weighted consensus point: sum_j x_j w_j / sum_j w_j with
/// w_j = e^{-alpha (cost_j - min cost)} (log-sum-exp stabilized).
std::vector<double> weighted_mean(std::span<const double> positions, int n, int dim,
                                  std::span<const double> costs, double alpha);

/// Consensus point with combined weights e^{-alpha cost_j - beta penalty_j},
/// jointly stabilized.
std::vector<double> weighted_mean_penalized(std::span<const double> positions, int n, int dim,
                                            std::span<const double> costs,
                                            std::span<const double> penalties, double alpha,
                                            double beta);

/// One Euler-Maruyama step of the respective algorithm. All cross-swarm reads
/// (weights, consensus objectives, penalty references) use a snapshot taken
/// at the start of the step, so the result does not depend on swarm order.
void step_fixed(SwarmSystemState& state, const Problem& problem, const RunConfig& cfg);
void step_adaptive(SwarmSystemState& state, const Problem& problem, const RunConfig& cfg);
void step_full(SwarmSystemState& state, const Problem& problem, const RunConfig& cfg);

/// Dispatch on cfg.variant.
void advance(SwarmSystemState& state, const Problem& problem, const RunConfig& cfg);

struct Diagnostics {
    std::vector<std::vector<double>> E;  ///< per-swarm mean position
    std::vector<double> V;               ///< mean Euclidean deviation from E
    std::vector<double> M;               ///< mean of e^{-alpha * scalarized cost}
    std::vector<std::vector<double>> pairwise_df;  ///< |f(v^k) - f(v^l)|
};

Diagnostics diagnostics(const SwarmSystemState& state, const RunConfig& cfg);

struct TraceRecord {
    int step = 0;
    double t = 0.0;
    Diagnostics diag;
    /// Lambda rows at this step (softmax of mu, or raw weights in
    /// neighbor_only mode), K * objectives.
    std::vector<std::vector<double>> lambda;
};

enum class Origin { particle, mean };

struct ApproximationEntry {
    std::vector<double> x;
    std::vector<double> fx;
    Origin origin = Origin::particle;
    int swarm = 0;
    int particle = -1;  ///< particle index; -1 for consensus means
};

struct ParetoApproximation {
    std::vector<ApproximationEntry> entries;
    std::vector<char> nondominated;  ///< eps-dominance mask over entries
};

/// Assemble all particles plus all consensus means of a state and mark the
/// eps-non-dominated ones.
ParetoApproximation approximate_front(const SwarmSystemState& state, double eps_dom);

struct RunResult {
    SwarmSystemState final_state;
    std::vector<TraceRecord> trace;  ///< record 0 is the initial state
    ParetoApproximation approximation;
};

/// Full deterministic run: init, ceil(T/tau) steps, trace, final front.
RunResult run(const Problem& problem, const RunConfig& cfg);

}  // namespace mscbo
