#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "mscbo/rng.hpp"

namespace mscbo {

/// Continuous box-constrained multi-objective test problem.
struct Problem {
    std::string name;
    int dim = 0;         ///< decision-space dimension
    int objectives = 0;  ///< number of objectives
    std::vector<double> lower;  ///< box lower bounds, size dim
    std::vector<double> upper;  ///< box upper bounds, size dim
    std::vector<double> hv_ref; ///< default hypervolume reference point, size objectives

    /// Objective evaluation; x has size dim, fx has size objectives.
    std::function<void(std::span<const double>, std::span<double>)> eval;

    /// Optional closed-form parameterization of the efficient set: returns n
    /// decision vectors spanning it. Null for problems without one.
    std::function<std::vector<std::vector<double>>(int)> efficient_samples;
};

/// Evaluate with dimension checking. Throws std::invalid_argument on mismatch.
std::vector<double> evaluate(const Problem& problem, std::span<const double> x);
void evaluate_into(const Problem& problem, std::span<const double> x, std::span<double> fx);

/// Componentwise projection onto the box (the Euclidean projection).
std::vector<double> project(const Problem& problem, std::vector<double> x);

/// n points sampled i.i.d. uniformly on the box.
std::vector<std::vector<double>> sample_uniform(const Problem& problem, int n, rng::Stream& stream);

enum class FrontSource { analytic, grid };

/// Discrete stand-in for the true Pareto front, with matching preimages.
struct ReferenceFront {
    std::vector<std::vector<double>> points;     ///< objective vectors, lexicographically sorted
    std::vector<std::vector<double>> preimages;  ///< decision vectors, points[i] = f(preimages[i])
    FrontSource source = FrontSource::grid;
};

/// Builds the reference front at the given resolution (points for an analytic
/// parameterization or 1-d grid, per-axis count for a 2-d grid).
/// resolution <= 0 selects the default: 2000 for 1-d decision spaces, 400 per
/// axis for 2-d.
ReferenceFront reference_front(const Problem& problem, int resolution = 0, double eps_dom = 1e-5);

/// Names with built-in factories, in registration order.
std::vector<std::string> problem_names();
bool is_registered(const std::string& name);
Problem make_problem(const std::string& name);

/// Hook for custom problems; later registrations shadow earlier ones.
void register_problem(const std::string& name, std::function<Problem()> factory);

}  // namespace mscbo
