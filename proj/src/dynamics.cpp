#include "mscbo/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "mscbo/rng.hpp"
#include "mscbo/indicators.hpp"
#include "mscbo/scalarize.hpp"

namespace mscbo {

namespace {

constexpr std::uint64_t kInitTag = 0x696e6974ULL;    // "init"
constexpr std::uint64_t kNoiseTag = 0x6e6f6973ULL;   // "nois"

double euclidean(std::span<const double> a, std::span<const double> b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        double diff = a[i] - b[i];
        acc += diff * diff;
    }
    return std::sqrt(acc);
}

/// Scalarized cost of one objective vector under a swarm's weight row.
double swarm_cost(const RunConfig& cfg, std::span<const double> weights,
                  std::span<const double> fx) {
    if (cfg.neighbor_only) {
        return weighted_sum(weights, fx);
    }
    return scalarized_cost_mu(weights, fx);
}

}  // namespace

std::string to_string(Variant v) {
    switch (v) {
        case Variant::fixed: return "fixed";
        case Variant::adaptive: return "adaptive";
        case Variant::full: return "full";
    }
    throw std::logic_error("unreachable variant");
}

std::string to_string(WeightInit w) {
    switch (w) {
        case WeightInit::equidistant: return "equidistant";
        case WeightInit::simplex_uniform: return "simplex-uniform";
        case WeightInit::explicit_list: return "explicit";
    }
    throw std::logic_error("unreachable weight init");
}

Variant variant_from_string(const std::string& name) {
    if (name == "fixed") return Variant::fixed;
    if (name == "adaptive") return Variant::adaptive;
    if (name == "full") return Variant::full;
    throw std::invalid_argument("unknown variant '" + name + "' (known: fixed, adaptive, full)");
}

WeightInit weight_init_from_string(const std::string& name) {
    if (name == "equidistant") return WeightInit::equidistant;
    if (name == "simplex-uniform") return WeightInit::simplex_uniform;
    if (name == "explicit") return WeightInit::explicit_list;
    throw std::invalid_argument("unknown weight_init '" + name +
                                "' (known: equidistant, simplex-uniform, explicit)");
}

void validate(const RunConfig& cfg, const Problem& problem) {
    if (cfg.K < 1) {
        throw std::invalid_argument("K must be at least 1");
    }
    if (cfg.N_bar < 1) {
        throw std::invalid_argument("N_bar must be at least 1");
    }
    if (!(cfg.tau > 0.0)) {
        throw std::invalid_argument("tau must be positive");
    }
    if (!(cfg.T >= cfg.tau)) {
        throw std::invalid_argument("T must be at least tau");
    }
    if (!(cfg.sigma > 0.0)) {
        throw std::invalid_argument("sigma must be positive");
    }
    if (!(cfg.alpha > 0.0)) {
        throw std::invalid_argument("alpha must be positive");
    }
    if (cfg.beta < 0.0) {
        throw std::invalid_argument("beta must be non-negative");
    }
    if (!(cfg.r_c > 0.0)) {
        throw std::invalid_argument("r_c must be positive");
    }
    if (cfg.R_c < 0.0) {
        throw std::invalid_argument("R_c must be non-negative");
    }
    if (!std::isfinite(cfg.drift_coefficient)) {
        throw std::invalid_argument("drift_coefficient must be finite");
    }
    if (!(cfg.weight_scale >= 0.0) || !std::isfinite(cfg.weight_scale)) {
        throw std::invalid_argument("weight_scale must be non-negative and finite");
    }
    if (cfg.eps_dom < 0.0) {
        throw std::invalid_argument("eps_dom must be non-negative");
    }
    validate(cfg.potential);
    if (cfg.neighbor_only && cfg.variant != Variant::adaptive) {
        throw std::invalid_argument("neighbor_only requires variant=adaptive");
    }
    if (cfg.weight_init == WeightInit::equidistant) {
        if (problem.objectives != 2) {
            throw std::invalid_argument("weight_init=equidistant requires a biobjective problem");
        }
        if (cfg.K < 2) {
            throw std::invalid_argument("weight_init=equidistant requires K >= 2");
        }
    }
    if (cfg.weight_init == WeightInit::explicit_list) {
        if (static_cast<int>(cfg.explicit_weights.size()) != cfg.K) {
            throw std::invalid_argument("explicit weight list must have exactly K rows");
        }
        for (const auto& row : cfg.explicit_weights) {
            if (static_cast<int>(row.size()) != problem.objectives) {
                throw std::invalid_argument("explicit weight rows must have one entry per objective");
            }
            double sum = 0.0;
            for (double w : row) {
                if (!std::isfinite(w)) {
                    throw std::invalid_argument("explicit weights must be finite");
                }
                // The neighbor-coupled chain works on raw affine weights and
                // may legitimately leave the open simplex; the log-weight
                // variants cannot.
                if (!cfg.neighbor_only && !(w > 0.0)) {
                    throw std::invalid_argument("explicit weights must be strictly positive");
                }
                sum += w;
            }
            if (std::abs(sum - 1.0) > 1e-9) {
                throw std::invalid_argument("explicit weight rows must sum to 1");
            }
        }
    }
}

int iteration_count(const RunConfig& cfg) {
    double q = cfg.T / cfg.tau;
    int n = static_cast<int>(std::ceil(q - 1e-9));
    return std::max(n, 1);
}

std::span<double> SwarmSystemState::position(int k, int j) {
    return {positions.data() + (static_cast<std::size_t>(k) * N_bar + j) * dim,
            static_cast<std::size_t>(dim)};
}
std::span<const double> SwarmSystemState::position(int k, int j) const {
    return {positions.data() + (static_cast<std::size_t>(k) * N_bar + j) * dim,
            static_cast<std::size_t>(dim)};
}
std::span<const double> SwarmSystemState::particle_fx(int k, int j) const {
    return {fx.data() + (static_cast<std::size_t>(k) * N_bar + j) * objectives,
            static_cast<std::size_t>(objectives)};
}
std::span<double> SwarmSystemState::mu_row(int k) {
    return {mu.data() + static_cast<std::size_t>(k) * objectives,
            static_cast<std::size_t>(objectives)};
}
std::span<const double> SwarmSystemState::mu_row(int k) const {
    return {mu.data() + static_cast<std::size_t>(k) * objectives,
            static_cast<std::size_t>(objectives)};
}
std::span<double> SwarmSystemState::mean_row(int k) {
    return {means.data() + static_cast<std::size_t>(k) * dim, static_cast<std::size_t>(dim)};
}
std::span<const double> SwarmSystemState::mean_row(int k) const {
    return {means.data() + static_cast<std::size_t>(k) * dim, static_cast<std::size_t>(dim)};
}
std::span<double> SwarmSystemState::mean_fx_row(int k) {
    return {means_f.data() + static_cast<std::size_t>(k) * objectives,
            static_cast<std::size_t>(objectives)};
}
std::span<const double> SwarmSystemState::mean_fx_row(int k) const {
    return {means_f.data() + static_cast<std::size_t>(k) * objectives,
            static_cast<std::size_t>(objectives)};
}

std::vector<double> swarm_lambda(const SwarmSystemState& state, const RunConfig& cfg, int k) {
    auto row = state.mu_row(k);
    if (cfg.neighbor_only) {
        return {row.begin(), row.end()};
    }
    return lambda_from_mu(row);
}

std::vector<double> weighted_mean_penalized(std::span<const double> positions, int n, int dim,
                                            std::span<const double> costs,
                                            std::span<const double> penalties, double alpha,
                                            double beta) {
    if (n < 1) {
        throw std::invalid_argument("weighted mean needs at least one particle");
    }
    double e_max = -std::numeric_limits<double>::infinity();
    std::vector<double> exponent(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        double pen = penalties.empty() ? 0.0 : penalties[static_cast<std::size_t>(j)];
        double e = -alpha * costs[static_cast<std::size_t>(j)] - beta * pen;
        exponent[static_cast<std::size_t>(j)] = e;
        e_max = std::max(e_max, e);
    }
    std::vector<double> out(static_cast<std::size_t>(dim), 0.0);
    double total = 0.0;
    for (int j = 0; j < n; ++j) {
        double w = std::exp(exponent[static_cast<std::size_t>(j)] - e_max);
        total += w;
        const double* x = positions.data() + static_cast<std::size_t>(j) * dim;
        for (int c = 0; c < dim; ++c) {
            out[static_cast<std::size_t>(c)] += w * x[c];
        }
    }
    for (double& v : out) {
        v /= total;
    }
    return out;
}

std::vector<double> weighted_mean(std::span<const double> positions, int n, int dim,
                                  std::span<const double> costs, double alpha) {
    return weighted_mean_penalized(positions, n, dim, costs, {}, alpha, 0.0);
}

SwarmSystemState init_state(const Problem& problem, const RunConfig& cfg) {
    SwarmSystemState s;
    s.K = cfg.K;
    s.N_bar = cfg.N_bar;
    s.dim = problem.dim;
    s.objectives = problem.objectives;
    s.positions.resize(static_cast<std::size_t>(cfg.K) * cfg.N_bar * problem.dim);
    s.fx.resize(static_cast<std::size_t>(cfg.K) * cfg.N_bar * problem.objectives);
    s.mu.resize(static_cast<std::size_t>(cfg.K) * problem.objectives);
    s.means.resize(static_cast<std::size_t>(cfg.K) * problem.dim);
    s.means_f.resize(static_cast<std::size_t>(cfg.K) * problem.objectives);

    rng::Stream stream(rng::combine({cfg.seed, kInitTag}));
    for (int k = 0; k < cfg.K; ++k) {
        for (int j = 0; j < cfg.N_bar; ++j) {
            auto x = s.position(k, j);
            for (int c = 0; c < problem.dim; ++c) {
                x[c] = stream.uniform(problem.lower[static_cast<std::size_t>(c)],
                                      problem.upper[static_cast<std::size_t>(c)]);
            }
            std::span<double> fx{s.fx.data() +
                                     (static_cast<std::size_t>(k) * cfg.N_bar + j) * problem.objectives,
                                 static_cast<std::size_t>(problem.objectives)};
            evaluate_into(problem, x, fx);
        }
    }

    std::vector<std::vector<double>> lambda_rows;
    switch (cfg.weight_init) {
        case WeightInit::equidistant:
            lambda_rows = equidistant_weights(cfg.K);
            break;
        case WeightInit::simplex_uniform:
            lambda_rows.reserve(static_cast<std::size_t>(cfg.K));
            for (int k = 0; k < cfg.K; ++k) {
                lambda_rows.push_back(sample_simplex(problem.objectives, stream));
            }
            break;
        case WeightInit::explicit_list:
            lambda_rows = cfg.explicit_weights;
            break;
    }
    for (int k = 0; k < cfg.K; ++k) {
        auto row = s.mu_row(k);
        for (int i = 0; i < problem.objectives; ++i) {
            double l = lambda_rows[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)];
            if (cfg.neighbor_only) {
                row[static_cast<std::size_t>(i)] = l;
            } else {
                // Guard against an exactly-zero simplex draw; the softmax
                // renormalizes, so the clamp does not bias interior weights.
                row[static_cast<std::size_t>(i)] = std::log(std::max(l, 1e-12));
            }
        }
    }

    std::vector<double> costs(static_cast<std::size_t>(cfg.N_bar));
    for (int k = 0; k < cfg.K; ++k) {
        for (int j = 0; j < cfg.N_bar; ++j) {
            costs[static_cast<std::size_t>(j)] = swarm_cost(cfg, s.mu_row(k), s.particle_fx(k, j));
        }
        std::span<const double> block{s.positions.data() +
                                          static_cast<std::size_t>(k) * cfg.N_bar * problem.dim,
                                      static_cast<std::size_t>(cfg.N_bar) * problem.dim};
        auto v = weighted_mean(block, cfg.N_bar, problem.dim, costs, cfg.alpha);
        std::copy(v.begin(), v.end(), s.mean_row(k).begin());
        evaluate_into(problem, v, s.mean_fx_row(k));
    }
    return s;
}

namespace {

/// Shared Euler-Maruyama step. Cross-swarm quantities (weight rows, consensus
/// objective values) are snapshotted up front so the update is independent of
/// the order in which swarms are processed.
void step_impl(SwarmSystemState& s, const Problem& problem, const RunConfig& cfg) {
    const int K = s.K;
    const int N = s.N_bar;
    const int dim = s.dim;
    const int p = s.objectives;
    const bool penalize = cfg.variant == Variant::full && cfg.beta > 0.0;
    const bool sampling_noise = cfg.variant == Variant::full;

    const std::vector<double> snapshot_mu = s.mu;
    const std::vector<double> snapshot_means_f = s.means_f;
    auto snapshot_mu_row = [&](int k) {
        return std::span<const double>{snapshot_mu.data() + static_cast<std::size_t>(k) * p,
                                       static_cast<std::size_t>(p)};
    };
    auto snapshot_mf_row = [&](int k) {
        return std::span<const double>{snapshot_means_f.data() + static_cast<std::size_t>(k) * p,
                                       static_cast<std::size_t>(p)};
    };
    auto penalty_targets = [&](int k) {
        std::vector<std::vector<double>> others;
        others.reserve(static_cast<std::size_t>(K - 1));
        for (int l = 0; l < K; ++l) {
            if (l != k) {
                auto row = snapshot_mf_row(l);
                others.emplace_back(row.begin(), row.end());
            }
        }
        return others;
    };

    // Particle moves: drift toward the swarm's consensus point plus noise,
    // then projection onto the box.
    std::vector<double> costs(static_cast<std::size_t>(N));
    std::vector<double> penalties;
    const double root_tau = std::sqrt(cfg.tau);
    for (int k = 0; k < K; ++k) {
        for (int j = 0; j < N; ++j) {
            costs[static_cast<std::size_t>(j)] =
                swarm_cost(cfg, snapshot_mu_row(k), s.particle_fx(k, j));
        }
        std::vector<double> v;
        if (penalize) {
            auto others = penalty_targets(k);
            penalties.resize(static_cast<std::size_t>(N));
            for (int j = 0; j < N; ++j) {
                penalties[static_cast<std::size_t>(j)] =
                    penalty_uniform(s.particle_fx(k, j), others, cfg.R_c, cfg.r_c);
            }
            std::span<const double> block{s.positions.data() +
                                              static_cast<std::size_t>(k) * N * dim,
                                          static_cast<std::size_t>(N) * dim};
            v = weighted_mean_penalized(block, N, dim, costs, penalties, cfg.alpha, cfg.beta);
        } else {
            std::span<const double> block{s.positions.data() +
                                              static_cast<std::size_t>(k) * N * dim,
                                          static_cast<std::size_t>(N) * dim};
            v = weighted_mean(block, N, dim, costs, cfg.alpha);
        }

        for (int j = 0; j < N; ++j) {
            auto x = s.position(k, j);
            for (int c = 0; c < dim; ++c) {
                double dev = x[static_cast<std::size_t>(c)] - v[static_cast<std::size_t>(c)];
                double w = rng::keyed_normal({cfg.seed, kNoiseTag,
                                              static_cast<std::uint64_t>(s.step),
                                              static_cast<std::uint64_t>(k),
                                              static_cast<std::uint64_t>(j),
                                              static_cast<std::uint64_t>(c)});
                double noise = sampling_noise
                                   ? cfg.sigma * std::sqrt(cfg.tau * std::abs(dev)) * w
                                   : cfg.sigma * root_tau * dev * w;
                double y = x[static_cast<std::size_t>(c)] -
                           cfg.tau * cfg.drift_coefficient * dev + noise;
                x[static_cast<std::size_t>(c)] =
                    std::clamp(y, problem.lower[static_cast<std::size_t>(c)],
                               problem.upper[static_cast<std::size_t>(c)]);
            }
        }
    }

    // Weight adaptation, explicit Euler from the snapshot.
    if (cfg.variant != Variant::fixed && cfg.weight_scale > 0.0 && K > 1) {
        if (cfg.neighbor_only) {
            // Direct-neighbor coupling in the ordering by first weight
            // component, acting on raw simplex weights with the
            // squared-exponential prefactor.
            std::vector<int> order(static_cast<std::size_t>(K));
            std::iota(order.begin(), order.end(), 0);
            std::sort(order.begin(), order.end(), [&](int a, int b) {
                return snapshot_mu_row(a)[0] < snapshot_mu_row(b)[0];
            });
            for (int pos = 0; pos < K; ++pos) {
                int k = order[static_cast<std::size_t>(pos)];
                std::vector<double> delta(static_cast<std::size_t>(p), 0.0);
                for (int offset : {-1, 1}) {
                    int npos = pos + offset;
                    if (npos < 0 || npos >= K) {
                        continue;
                    }
                    int l = order[static_cast<std::size_t>(npos)];
                    double df = euclidean(snapshot_mf_row(k), snapshot_mf_row(l));
                    double u = force_prefactor_u(df, cfg.potential);
                    auto lk = snapshot_mu_row(k);
                    auto ll = snapshot_mu_row(l);
                    for (int i = 0; i < p; ++i) {
                        delta[static_cast<std::size_t>(i)] +=
                            u * (lk[static_cast<std::size_t>(i)] - ll[static_cast<std::size_t>(i)]);
                    }
                }
                auto row = s.mu_row(k);
                for (int i = 0; i < p; ++i) {
                    row[static_cast<std::size_t>(i)] -=
                        cfg.tau * cfg.weight_scale * delta[static_cast<std::size_t>(i)];
                }
            }
        } else {
            for (int k = 0; k < K; ++k) {
                std::vector<double> delta(static_cast<std::size_t>(p), 0.0);
                for (int l = 0; l < K; ++l) {
                    if (l == k) {
                        continue;
                    }
                    double d = euclidean(snapshot_mu_row(k), snapshot_mu_row(l));
                    double df = euclidean(snapshot_mf_row(k), snapshot_mf_row(l));
                    auto force =
                        pairwise_force(snapshot_mu_row(k), snapshot_mu_row(l), d, df, cfg.potential);
                    for (int i = 0; i < p; ++i) {
                        delta[static_cast<std::size_t>(i)] += force[static_cast<std::size_t>(i)];
                    }
                }
                auto row = s.mu_row(k);
                for (int i = 0; i < p; ++i) {
                    row[static_cast<std::size_t>(i)] -= cfg.tau / static_cast<double>(K) *
                                                        cfg.weight_scale *
                                                        delta[static_cast<std::size_t>(i)];
                }
            }
        }
    }

    // Refresh particle objectives and the consensus caches. The penalty
    // reference stays the snapshot taken at the start of this step.
    for (int k = 0; k < K; ++k) {
        for (int j = 0; j < N; ++j) {
            std::span<double> fx{s.fx.data() + (static_cast<std::size_t>(k) * N + j) * p,
                                 static_cast<std::size_t>(p)};
            evaluate_into(problem, s.position(k, j), fx);
        }
    }
    for (int k = 0; k < K; ++k) {
        for (int j = 0; j < N; ++j) {
            costs[static_cast<std::size_t>(j)] = swarm_cost(cfg, s.mu_row(k), s.particle_fx(k, j));
        }
        std::span<const double> block{s.positions.data() + static_cast<std::size_t>(k) * N * dim,
                                      static_cast<std::size_t>(N) * dim};
        std::vector<double> v;
        if (penalize) {
            auto others = penalty_targets(k);
            penalties.resize(static_cast<std::size_t>(N));
            for (int j = 0; j < N; ++j) {
                penalties[static_cast<std::size_t>(j)] =
                    penalty_uniform(s.particle_fx(k, j), others, cfg.R_c, cfg.r_c);
            }
            v = weighted_mean_penalized(block, N, dim, costs, penalties, cfg.alpha, cfg.beta);
        } else {
            v = weighted_mean(block, N, dim, costs, cfg.alpha);
        }
        std::copy(v.begin(), v.end(), s.mean_row(k).begin());
        evaluate_into(problem, v, s.mean_fx_row(k));
    }

    s.step += 1;
    s.t = static_cast<double>(s.step) * cfg.tau;
}

}  // namespace

void step_fixed(SwarmSystemState& state, const Problem& problem, const RunConfig& cfg) {
    if (cfg.variant != Variant::fixed) {
        throw std::invalid_argument("step_fixed requires cfg.variant=fixed");
    }
    step_impl(state, problem, cfg);
}

void step_adaptive(SwarmSystemState& state, const Problem& problem, const RunConfig& cfg) {
    if (cfg.variant != Variant::adaptive) {
        throw std::invalid_argument("step_adaptive requires cfg.variant=adaptive");
    }
    step_impl(state, problem, cfg);
}

void step_full(SwarmSystemState& state, const Problem& problem, const RunConfig& cfg) {
    if (cfg.variant != Variant::full) {
        throw std::invalid_argument("step_full requires cfg.variant=full");
    }
    step_impl(state, problem, cfg);
}

void advance(SwarmSystemState& state, const Problem& problem, const RunConfig& cfg) {
    switch (cfg.variant) {
        case Variant::fixed: step_fixed(state, problem, cfg); return;
        case Variant::adaptive: step_adaptive(state, problem, cfg); return;
        case Variant::full: step_full(state, problem, cfg); return;
    }
    throw std::logic_error("unreachable variant");
}

Diagnostics diagnostics(const SwarmSystemState& state, const RunConfig& cfg) {
    Diagnostics d;
    const int K = state.K;
    const int N = state.N_bar;
    const int dim = state.dim;
    d.E.resize(static_cast<std::size_t>(K));
    d.V.resize(static_cast<std::size_t>(K));
    d.M.resize(static_cast<std::size_t>(K));
    d.pairwise_df.assign(static_cast<std::size_t>(K),
                         std::vector<double>(static_cast<std::size_t>(K), 0.0));

    for (int k = 0; k < K; ++k) {
        std::vector<double> mean(static_cast<std::size_t>(dim), 0.0);
        for (int j = 0; j < N; ++j) {
            auto x = state.position(k, j);
            for (int c = 0; c < dim; ++c) {
                mean[static_cast<std::size_t>(c)] += x[static_cast<std::size_t>(c)];
            }
        }
        for (double& m : mean) {
            m /= static_cast<double>(N);
        }

        double v = 0.0;
        double mexp = 0.0;
        for (int j = 0; j < N; ++j) {
            v += euclidean(state.position(k, j), mean);
            mexp += std::exp(-cfg.alpha * swarm_cost(cfg, state.mu_row(k), state.particle_fx(k, j)));
        }
        d.E[static_cast<std::size_t>(k)] = std::move(mean);
        d.V[static_cast<std::size_t>(k)] = v / static_cast<double>(N);
        d.M[static_cast<std::size_t>(k)] = mexp / static_cast<double>(N);
    }

    for (int k = 0; k < K; ++k) {
        for (int l = k + 1; l < K; ++l) {
            double df = euclidean(state.mean_fx_row(k), state.mean_fx_row(l));
            d.pairwise_df[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)] = df;
            d.pairwise_df[static_cast<std::size_t>(l)][static_cast<std::size_t>(k)] = df;
        }
    }
    return d;
}

ParetoApproximation approximate_front(const SwarmSystemState& state, double eps_dom) {
    ParetoApproximation out;
    out.entries.reserve(static_cast<std::size_t>(state.K) * (state.N_bar + 1));
    for (int k = 0; k < state.K; ++k) {
        for (int j = 0; j < state.N_bar; ++j) {
            ApproximationEntry e;
            auto x = state.position(k, j);
            auto fx = state.particle_fx(k, j);
            e.x.assign(x.begin(), x.end());
            e.fx.assign(fx.begin(), fx.end());
            e.origin = Origin::particle;
            e.swarm = k;
            e.particle = j;
            out.entries.push_back(std::move(e));
        }
    }
    for (int k = 0; k < state.K; ++k) {
        ApproximationEntry e;
        auto x = state.mean_row(k);
        auto fx = state.mean_fx_row(k);
        e.x.assign(x.begin(), x.end());
        e.fx.assign(fx.begin(), fx.end());
        e.origin = Origin::mean;
        e.swarm = k;
        e.particle = -1;
        out.entries.push_back(std::move(e));
    }

    std::vector<std::vector<double>> points;
    points.reserve(out.entries.size());
    for (const auto& e : out.entries) {
        points.push_back(e.fx);
    }
    out.nondominated = nondominated_mask(points, eps_dom);
    return out;
}

RunResult run(const Problem& problem, const RunConfig& cfg) {
    validate(cfg, problem);
    RunResult result;
    result.final_state = init_state(problem, cfg);
    auto& state = result.final_state;

    auto record = [&](void) {
        TraceRecord rec;
        rec.step = state.step;
        rec.t = state.t;
        rec.diag = diagnostics(state, cfg);
        rec.lambda.reserve(static_cast<std::size_t>(state.K));
        for (int k = 0; k < state.K; ++k) {
            rec.lambda.push_back(swarm_lambda(state, cfg, k));
        }
        result.trace.push_back(std::move(rec));
    };

    record();
    const int iterations = iteration_count(cfg);
    for (int i = 0; i < iterations; ++i) {
        advance(state, problem, cfg);
        record();
    }
    result.approximation = approximate_front(state, cfg.eps_dom);
    return result;
}

}  // namespace mscbo
