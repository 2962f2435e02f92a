#include "mscbo/indicators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace mscbo {

bool dominates(std::span<const double> z1, std::span<const double> z2, double eps) {
    if (z1.size() != z2.size()) {
        throw std::invalid_argument("dominates: dimension mismatch");
    }
    bool strict = false;
    for (std::size_t i = 0; i < z1.size(); ++i) {
        if (z1[i] > z2[i]) {
            return false;
        }
        if (z1[i] < z2[i] - eps) {
            strict = true;
        }
    }
    return strict;
}

namespace {

bool lex_less(const std::vector<double>& a, const std::vector<double>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

std::vector<char> nondominated_mask(const std::vector<std::vector<double>>& points, double eps) {
    const std::size_t n = points.size();
    if (n == 0) {
        throw std::invalid_argument("nondominated_mask: empty point set");
    }
    std::vector<char> keep(n, 1);

    // Lexicographic order guarantees every dominator of a point precedes it,
    // and eps-dominance is transitive, so candidates only need checking
    // against previously kept points.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return lex_less(points[a], points[b]); });

    std::vector<std::size_t> kept;
    kept.reserve(n);
    for (std::size_t idx : order) {
        bool dominated = false;
        for (std::size_t k : kept) {
            if (dominates(points[k], points[idx], eps)) {
                dominated = true;
                break;
            }
        }
        if (dominated) {
            keep[idx] = 0;
        } else {
            kept.push_back(idx);
        }
    }
    return keep;
}

std::vector<std::vector<double>> nondominated_filter(const std::vector<std::vector<double>>& points,
                                                     double eps) {
    std::vector<char> keep = nondominated_mask(points, eps);
    std::vector<std::vector<double>> out;
    out.reserve(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (keep[i]) {
            out.push_back(points[i]);
        }
    }
    return out;
}

namespace {

double mean_nearest_distance(const std::vector<std::vector<double>>& from,
                             const std::vector<std::vector<double>>& to) {
    if (from.empty() || to.empty()) {
        throw std::invalid_argument("gd/igd: empty point set");
    }
    double total = 0.0;
    for (const auto& a : from) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& b : to) {
            double d2 = 0.0;
            for (std::size_t i = 0; i < a.size(); ++i) {
                double diff = a[i] - b[i];
                d2 += diff * diff;
            }
            best = std::min(best, d2);
        }
        total += std::sqrt(best);
    }
    return total / static_cast<double>(from.size());
}

// Points strictly inside the reference box in every coordinate; the rest have
// zero-volume clipped boxes.
std::vector<std::vector<double>> effective_points(const std::vector<std::vector<double>>& points,
                                                  std::span<const double> ref_point) {
    std::vector<std::vector<double>> out;
    out.reserve(points.size());
    for (const auto& z : points) {
        if (z.size() != ref_point.size()) {
            throw std::invalid_argument("hypervolume: point dimension mismatch");
        }
        bool inside = true;
        for (std::size_t i = 0; i < z.size(); ++i) {
            if (z[i] >= ref_point[i]) {
                inside = false;
                break;
            }
        }
        if (inside) {
            out.push_back(z);
        }
    }
    return out;
}

// Sweep over f1-sorted points; f2 of the surviving staircase is strictly
// decreasing, so each point contributes one rectangle.
double hv_2d(std::vector<std::vector<double>> pts, double r1, double r2) {
    if (pts.empty()) {
        return 0.0;
    }
    std::sort(pts.begin(), pts.end(), lex_less);
    double hv = 0.0;
    double best2 = std::numeric_limits<double>::infinity();
    std::vector<std::pair<double, double>> stairs;
    for (const auto& z : pts) {
        if (z[1] < best2) {
            stairs.emplace_back(z[0], z[1]);
            best2 = z[1];
        }
    }
    for (std::size_t i = 0; i < stairs.size(); ++i) {
        double right = (i + 1 < stairs.size()) ? stairs[i + 1].first : r1;
        hv += (right - stairs[i].first) * (r2 - stairs[i].second);
    }
    return hv;
}

// Slice along the third objective: each slab's area is the 2-d hypervolume of
// the points at or below its level.
double hv_3d(const std::vector<std::vector<double>>& pts, std::span<const double> ref) {
    if (pts.empty()) {
        return 0.0;
    }
    std::vector<double> levels;
    levels.reserve(pts.size());
    for (const auto& z : pts) {
        levels.push_back(z[2]);
    }
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

    double hv = 0.0;
    for (std::size_t i = 0; i < levels.size(); ++i) {
        double top = (i + 1 < levels.size()) ? levels[i + 1] : ref[2];
        std::vector<std::vector<double>> slice;
        for (const auto& z : pts) {
            if (z[2] <= levels[i]) {
                slice.push_back({z[0], z[1]});
            }
        }
        hv += hv_2d(std::move(slice), ref[0], ref[1]) * (top - levels[i]);
    }
    return hv;
}

}  // namespace

double gd(const std::vector<std::vector<double>>& approximation,
          const std::vector<std::vector<double>>& reference) {
    return mean_nearest_distance(approximation, reference);
}

double igd(const std::vector<std::vector<double>>& approximation,
           const std::vector<std::vector<double>>& reference) {
    return mean_nearest_distance(reference, approximation);
}

double hypervolume(const std::vector<std::vector<double>>& points,
                   std::span<const double> ref_point) {
    if (ref_point.size() == 2) {
        return hv_2d(effective_points(points, ref_point), ref_point[0], ref_point[1]);
    }
    if (ref_point.size() == 3) {
        return hv_3d(effective_points(points, ref_point), ref_point);
    }
    throw std::invalid_argument("hypervolume: only 2 or 3 objectives supported");
}

MonteCarloEstimate hv_monte_carlo(const std::vector<std::vector<double>>& points,
                                  std::span<const double> ref_point,
                                  std::span<const double> lower_corner,
                                  int samples, rng::Stream& stream) {
    if (lower_corner.size() != ref_point.size()) {
        throw std::invalid_argument("hv_monte_carlo: corner dimension mismatch");
    }
    if (samples <= 0) {
        throw std::invalid_argument("hv_monte_carlo: samples must be positive");
    }
    const std::size_t p = ref_point.size();
    double box = 1.0;
    for (std::size_t i = 0; i < p; ++i) {
        box *= ref_point[i] - lower_corner[i];
    }

    std::vector<double> z(p);
    long hits = 0;
    for (int s = 0; s < samples; ++s) {
        for (std::size_t i = 0; i < p; ++i) {
            z[i] = stream.uniform(lower_corner[i], ref_point[i]);
        }
        for (const auto& q : points) {
            bool covers = true;
            for (std::size_t i = 0; i < p; ++i) {
                if (q[i] > z[i]) {
                    covers = false;
                    break;
                }
            }
            if (covers) {
                ++hits;
                break;
            }
        }
    }
    double frac = static_cast<double>(hits) / static_cast<double>(samples);
    MonteCarloEstimate est;
    est.value = box * frac;
    est.standard_error = box * std::sqrt(frac * (1.0 - frac) / static_cast<double>(samples));
    return est;
}

IndicatorReport report(const std::vector<std::vector<double>>& approximation,
                       const std::vector<std::vector<double>>& reference,
                       std::span<const double> ref_point, double eps_dom) {
    std::vector<std::vector<double>> front = nondominated_filter(approximation, eps_dom);
    IndicatorReport out;
    out.ni = static_cast<int>(front.size());
    out.gd = gd(front, reference);
    out.igd = igd(front, reference);
    out.hv = hypervolume(front, ref_point);
    return out;
}

}  // namespace mscbo
