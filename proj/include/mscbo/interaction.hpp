#pragma once

#include <limits>
#include <optional>
#include <span>
#include <vector>

namespace mscbo {

struct PotentialParams {
    // Weight-space Morse pair: repulsion (R, r) and attraction (A, a).
    double R = 0.001;
    double r = 0.01;
    double A = 0.0;
    double a = 1.0;
    // Objective-space pair acting through the means' image distance.
    double R_f = 0.0001;
    double r_f = 1.0;
    double A_f = 0.0;
    double a_f = 1.0;
    // Objective-space terms are active only while the image distance stays
    // below this cutoff.
    double cutoff_f = std::numeric_limits<double>::infinity();
};

void validate(const PotentialParams& params);

// P(d) = R e^{-d/r} - A e^{-d/a}.
double morse_potential(double d, double R, double A, double r, double a);

// Smoothed variant P_hat(d) = R e^{-d^2/r} - A e^{-d^2/a}; even in d and
// differentiable at the origin.
double smoothed_potential(double d, double R, double A, double r, double a);

// u(d) = (2 A_f / a_f) e^{-d^2/a_f} - (2 R_f / r_f) e^{-d^2/r_f}.
double force_prefactor_u(double d, const PotentialParams& params);

// Unique sign change of u on (0, 10 max(sqrt(a_f), sqrt(r_f))], located by
// bisection to 1e-10, when repulsion dominates near zero and attraction takes
// over at range; empty when u does not change sign there.
std::optional<double> d_min_root(const PotentialParams& params);

// Pairwise weight-adaptation force on swarm k from swarm l:
//   [ (A/a) e^{-d/a} - (R/r) e^{-d/r}
//     + (A_f/a_f) e^{-df/a_f} - (R_f/r_f) e^{-df/r_f} ] * (mu_k - mu_l)/d
// with d = |mu_k - mu_l|. Coincident weight vectors give the zero vector.
// Objective-space terms drop when df >= params.cutoff_f.
std::vector<double> pairwise_force(std::span<const double> mu_k, std::span<const double> mu_l,
                                   double d_kl, double df_kl, const PotentialParams& params);

}  // namespace mscbo
