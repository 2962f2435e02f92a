#pragma once

#include <span>
#include <vector>

#include "mscbo/rng.hpp"

namespace mscbo {

// Affine weighted sum sum_i lambda_i * fx_i (no normalization of lambda).
double weighted_sum(std::span<const double> lambda, std::span<const double> fx);

// Softmax-normalized scalarized cost: sum_i e^{mu_i} fx_i / sum_i e^{mu_i},
// stabilized by subtracting max(mu) before exponentiation.
double scalarized_cost_mu(std::span<const double> mu, std::span<const double> fx);

// Softmax of mu; components positive, sum to 1, invariant under mu -> mu + c.
std::vector<double> lambda_from_mu(std::span<const double> mu);

// Elementwise natural log; requires all lambda_i > 0.
std::vector<double> mu_from_lambda(std::span<const double> lambda);

// Cluster penalty: sum over other swarms' mean objective vectors of
// R_c * exp(-||fx - mean||_2 / r_c).
double penalty_uniform(std::span<const double> fx, const std::vector<std::vector<double>>& means_f,
                       double R_c, double r_c);

// Uniform sample from the standard simplex via the spacings construction:
// sort p-1 uniforms and take consecutive gaps against endpoints 0 and 1.
std::vector<double> sample_simplex(int p, rng::Stream& stream);

// K two-component weight vectors whose first components are equally spaced on
// [eps, 1-eps], second components the complements.
std::vector<std::vector<double>> equidistant_weights(int K, double eps = 0.001);

}  // namespace mscbo
