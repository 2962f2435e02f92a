#include "mscbo/interaction.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mscbo {

void validate(const PotentialParams& params) {
    if (params.R < 0.0 || params.A < 0.0 || params.R_f < 0.0 || params.A_f < 0.0) {
        throw std::invalid_argument("potential strengths must be non-negative");
    }
    if (!(params.r > 0.0) || !(params.a > 0.0) || !(params.r_f > 0.0) || !(params.a_f > 0.0)) {
        throw std::invalid_argument("potential ranges must be strictly positive");
    }
    if (!(params.cutoff_f > 0.0)) {
        throw std::invalid_argument("interaction cutoff must be positive");
    }
}

double morse_potential(double d, double R, double A, double r, double a) {
    if (d < 0.0) {
        throw std::invalid_argument("morse_potential: distance must be non-negative");
    }
    return R * std::exp(-d / r) - A * std::exp(-d / a);
}

double smoothed_potential(double d, double R, double A, double r, double a) {
    if (d < 0.0) {
        throw std::invalid_argument("smoothed_potential: distance must be non-negative");
    }
    return R * std::exp(-d * d / r) - A * std::exp(-d * d / a);
}

double force_prefactor_u(double d, const PotentialParams& params) {
    double d2 = d * d;
    return 2.0 * params.A_f / params.a_f * std::exp(-d2 / params.a_f) -
           2.0 * params.R_f / params.r_f * std::exp(-d2 / params.r_f);
}

std::optional<double> d_min_root(const PotentialParams& params) {
    double d_max = 10.0 * std::max(std::sqrt(params.a_f), std::sqrt(params.r_f));
    double lo = 0.0;
    double f_lo = force_prefactor_u(lo, params);
    if (f_lo == 0.0) {
        // u vanishes identically at 0 only in degenerate parameter choices;
        // scan for a genuine sign change instead of reporting the origin.
        f_lo = force_prefactor_u(1e-12, params);
    }

    // Find a bracket by scanning; u is smooth, with at most one sign change
    // in the regime of interest (repulsion near 0, attraction at range).
    const int scan_steps = 4096;
    double hi = lo;
    double f_hi = f_lo;
    bool bracketed = false;
    for (int i = 1; i <= scan_steps; ++i) {
        double d = d_max * static_cast<double>(i) / static_cast<double>(scan_steps);
        double fd = force_prefactor_u(d, params);
        if (f_lo != 0.0 && fd != 0.0 && std::signbit(fd) != std::signbit(f_lo)) {
            hi = d;
            f_hi = fd;
            bracketed = true;
            break;
        }
        lo = d;
        f_lo = fd;
        if (fd == 0.0 && d > 0.0) {
            return d;
        }
    }
    if (!bracketed) {
        return std::nullopt;
    }

    while (hi - lo > 1e-10) {
        double mid = 0.5 * (lo + hi);
        double fm = force_prefactor_u(mid, params);
        if (fm == 0.0) {
            return mid;
        }
        if (std::signbit(fm) == std::signbit(f_lo)) {
            lo = mid;
            f_lo = fm;
        } else {
            hi = mid;
            f_hi = fm;
        }
    }
    (void)f_hi;
    return 0.5 * (lo + hi);
}

std::vector<double> pairwise_force(std::span<const double> mu_k, std::span<const double> mu_l,
                                   double d_kl, double df_kl, const PotentialParams& params) {
    if (mu_k.size() != mu_l.size()) {
        throw std::invalid_argument("pairwise_force: dimension mismatch");
    }
    std::vector<double> force(mu_k.size(), 0.0);
    if (d_kl <= 0.0) {
        return force;
    }
    double scalar = params.A / params.a * std::exp(-d_kl / params.a) -
                    params.R / params.r * std::exp(-d_kl / params.r);
    if (df_kl < params.cutoff_f) {
        scalar += params.A_f / params.a_f * std::exp(-df_kl / params.a_f) -
                  params.R_f / params.r_f * std::exp(-df_kl / params.r_f);
    }
    for (std::size_t i = 0; i < force.size(); ++i) {
        force[i] = scalar * (mu_k[i] - mu_l[i]) / d_kl;
    }
    return force;
}

}  // namespace mscbo
