#pragma once

#include <span>
#include <vector>

#include "mscbo/rng.hpp"

namespace mscbo {

/// Dominance with a numerical offset: z1 dominates z2 when z1 is no worse in
/// every coordinate and better by more than eps in at least one.
bool dominates(std::span<const double> z1, std::span<const double> z2, double eps);

/// Keep flag per point; points[i] survives when no other point dominates it.
std::vector<char> nondominated_mask(const std::vector<std::vector<double>>& points, double eps);

std::vector<std::vector<double>> nondominated_filter(const std::vector<std::vector<double>>& points,
                                                     double eps);

/// Mean Euclidean distance from each approximation point to its nearest
/// reference point.
double gd(const std::vector<std::vector<double>>& approximation,
          const std::vector<std::vector<double>>& reference);

/// gd with the arguments swapped: mean distance from reference to approximation.
double igd(const std::vector<std::vector<double>>& approximation,
           const std::vector<std::vector<double>>& reference);

/// Exact dominated hypervolume for 2 or 3 objectives. Points not strictly
/// below ref_point in every coordinate contribute nothing (their clipped box
/// is degenerate). Throws std::invalid_argument for other dimensions.
double hypervolume(const std::vector<std::vector<double>>& points,
                   std::span<const double> ref_point);

struct MonteCarloEstimate {
    double value = 0.0;
    double standard_error = 0.0;
};

/// Monte Carlo hypervolume over the box [lower_corner, ref_point], with the
/// binomial standard error. Oracle for the exact routine.
MonteCarloEstimate hv_monte_carlo(const std::vector<std::vector<double>>& points,
                                  std::span<const double> ref_point,
                                  std::span<const double> lower_corner,
                                  int samples, rng::Stream& stream);

struct IndicatorReport {
    double gd = 0.0;
    double igd = 0.0;
    double hv = 0.0;
    int ni = 0;  ///< count of epsilon-non-dominated points
};

/// Filters the approximation at eps_dom, then computes all indicators against
/// the reference set and reference point.
IndicatorReport report(const std::vector<std::vector<double>>& approximation,
                       const std::vector<std::vector<double>>& reference,
                       std::span<const double> ref_point, double eps_dom);

}  // namespace mscbo
