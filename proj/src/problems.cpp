#include "mscbo/problems.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <utility>

#include "mscbo/indicators.hpp"

namespace mscbo {

namespace {

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> out(static_cast<std::size_t>(n));
    if (n == 1) {
        out[0] = lo;
        return out;
    }
    for (int i = 0; i < n; ++i) {
        out[static_cast<std::size_t>(i)] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    }
    return out;
}

Problem make_schaffer1() {
    Problem p;
    p.name = "schaffer1";
    p.dim = 1;
    p.objectives = 2;
    p.lower = {0.0};
    p.upper = {2.0};
    p.hv_ref = {4.0, 2.0};
    p.eval = [](std::span<const double> x, std::span<double> fx) {
        fx[0] = (x[0] - 2.0) * (x[0] - 2.0);
        fx[1] = 0.5 * x[0] * x[0];
    };
    // f1 falls and f2 rises across the whole box, so every feasible point is
    // efficient.
    p.efficient_samples = [](int n) {
        std::vector<std::vector<double>> xs;
        xs.reserve(static_cast<std::size_t>(n));
        for (double t : linspace(0.0, 2.0, n)) {
            xs.push_back({t});
        }
        return xs;
    };
    return p;
}

Problem make_dent() {
    Problem p;
    p.name = "dent";
    p.dim = 2;
    p.objectives = 2;
    p.lower = {-2.0, -2.0};
    p.upper = {2.0, 2.0};
    p.hv_ref = {5.0, 5.0};
    p.eval = [](std::span<const double> x, std::span<double> fx) {
        double s = std::sqrt(1.0 + (x[0] + x[1]) * (x[0] + x[1]));
        double t = std::sqrt(1.0 + (x[0] - x[1]) * (x[0] - x[1]));
        double bump = 0.85 * std::exp(-(x[0] - x[1]) * (x[0] - x[1]));
        fx[0] = 0.5 * (s + t + x[0] - x[1]) + bump;
        fx[1] = 0.5 * (s + t - x[0] + x[1]) + bump;
    };
    return p;
}

Problem make_schaffer2() {
    Problem p;
    p.name = "schaffer2";
    p.dim = 1;
    p.objectives = 2;
    p.lower = {-5.0};
    p.upper = {10.0};
    p.hv_ref = {1.0, 16.0};
    p.eval = [](std::span<const double> x, std::span<double> fx) {
        double t = x[0];
        double f1;
        if (t <= 1.0) {
            f1 = -t;
        } else if (t <= 3.0) {
            f1 = t - 2.0;
        } else if (t <= 4.0) {
            f1 = 4.0 - t;
        } else {
            f1 = t - 4.0;
        }
        fx[0] = f1;
        fx[1] = (t - 5.0) * (t - 5.0);
    };
    // The efficient set splits into [1,2] and [4,5]; everywhere else some
    // point of those segments is at least as good in both objectives.
    p.efficient_samples = [](int n) {
        int half = n / 2;
        std::vector<std::vector<double>> xs;
        xs.reserve(static_cast<std::size_t>(n));
        for (double t : linspace(1.0, 2.0, half)) {
            xs.push_back({t});
        }
        for (double t : linspace(4.0, 5.0, n - half)) {
            xs.push_back({t});
        }
        return xs;
    };
    return p;
}

Problem make_three() {
    Problem p;
    p.name = "three";
    p.dim = 2;
    p.objectives = 3;
    p.lower = {-0.5, -0.5};
    p.upper = {3.5, 3.5};
    p.hv_ref = {25.0, 80.0, 50.0};
    p.eval = [](std::span<const double> x, std::span<double> fx) {
        double a = x[0] - 1.0;
        double b = x[1] - 1.0;
        fx[0] = 2.0 * a * a + 2.0 * a * b + 4.0 * b * b;
        double c = x[0] - 2.0;
        double d = x[1] - 3.0;
        fx[1] = c * c + 4.0 * c * d + 8.0 * d * d;
        fx[2] = 4.0 * x[0] * x[0] + 2.0 * x[0] * x[1] + x[1] * x[1];
    };
    return p;
}

using Factory = std::function<Problem()>;

struct Registry {
    std::vector<std::string> order;
    std::map<std::string, Factory> factories;
};

Registry& registry() {
    static Registry reg = [] {
        Registry r;
        auto add = [&r](const std::string& name, Factory f) {
            r.order.push_back(name);
            r.factories[name] = std::move(f);
        };
        add("schaffer1", make_schaffer1);
        add("dent", make_dent);
        add("schaffer2", make_schaffer2);
        add("three", make_three);
        return r;
    }();
    return reg;
}

}  // namespace

std::vector<double> evaluate(const Problem& problem, std::span<const double> x) {
    std::vector<double> fx(static_cast<std::size_t>(problem.objectives));
    evaluate_into(problem, x, fx);
    return fx;
}

void evaluate_into(const Problem& problem, std::span<const double> x, std::span<double> fx) {
    if (static_cast<int>(x.size()) != problem.dim) {
        throw std::invalid_argument("evaluate: expected " + std::to_string(problem.dim) +
                                    " decision variables, got " + std::to_string(x.size()));
    }
    if (static_cast<int>(fx.size()) != problem.objectives) {
        throw std::invalid_argument("evaluate: objective buffer size mismatch");
    }
    problem.eval(x, fx);
}

std::vector<double> project(const Problem& problem, std::vector<double> x) {
    if (static_cast<int>(x.size()) != problem.dim) {
        throw std::invalid_argument("project: dimension mismatch");
    }
    for (int i = 0; i < problem.dim; ++i) {
        auto idx = static_cast<std::size_t>(i);
        x[idx] = std::clamp(x[idx], problem.lower[idx], problem.upper[idx]);
    }
    return x;
}

std::vector<std::vector<double>> sample_uniform(const Problem& problem, int n, rng::Stream& stream) {
    std::vector<std::vector<double>> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        std::vector<double> x(static_cast<std::size_t>(problem.dim));
        for (int c = 0; c < problem.dim; ++c) {
            auto idx = static_cast<std::size_t>(c);
            x[idx] = stream.uniform(problem.lower[idx], problem.upper[idx]);
        }
        out.push_back(std::move(x));
    }
    return out;
}

namespace {

// Classical-dominance prefilter in lexicographic order. Removes a superset of
// what the eps-filter removes, so the survivors stay pairwise mutually
// eps-non-dominated; exact duplicates keep one representative.
void classical_prefilter(std::vector<std::vector<double>>& fx, std::vector<std::vector<double>>& xs) {
    const std::size_t n = fx.size();
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) {
        order[i] = i;
    }
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return std::lexicographical_compare(fx[a].begin(), fx[a].end(), fx[b].begin(), fx[b].end());
    });

    const std::size_t p = fx[0].size();
    std::vector<std::size_t> kept;
    kept.reserve(1024);
    if (p == 2) {
        double best2 = std::numeric_limits<double>::infinity();
        const std::vector<double>* prev = nullptr;
        for (std::size_t idx : order) {
            if (prev != nullptr && fx[idx] == *prev) {
                continue;
            }
            if (fx[idx][1] < best2) {
                kept.push_back(idx);
                best2 = fx[idx][1];
                prev = &fx[idx];
            }
        }
    } else {
        // Staircase over (f2, f3): map f2 -> smallest f3 among kept points
        // with that or smaller f2, kept strictly decreasing in f3.
        std::map<double, double> stairs;
        const std::vector<double>* prev = nullptr;
        for (std::size_t idx : order) {
            const auto& z = fx[idx];
            if (prev != nullptr && z == *prev) {
                continue;
            }
            auto it = stairs.upper_bound(z[1]);
            bool dominated = false;
            if (it != stairs.begin()) {
                dominated = std::prev(it)->second <= z[2];
            }
            if (dominated) {
                continue;
            }
            kept.push_back(idx);
            prev = &fx[idx];
            auto [pos, inserted] = stairs.insert_or_assign(z[1], z[2]);
            auto next = std::next(pos);
            while (next != stairs.end() && next->second >= pos->second) {
                next = stairs.erase(next);
            }
        }
    }

    std::vector<std::vector<double>> new_fx;
    std::vector<std::vector<double>> new_xs;
    new_fx.reserve(kept.size());
    new_xs.reserve(kept.size());
    for (std::size_t idx : kept) {
        new_fx.push_back(std::move(fx[idx]));
        new_xs.push_back(std::move(xs[idx]));
    }
    fx = std::move(new_fx);
    xs = std::move(new_xs);
}

}  // namespace

ReferenceFront reference_front(const Problem& problem, int resolution, double eps_dom) {
    if (problem.dim != 1 && problem.dim != 2) {
        throw std::invalid_argument("reference_front: only 1-d and 2-d decision spaces supported");
    }
    if (resolution <= 0) {
        resolution = (problem.dim == 1) ? 2000 : 400;
    }

    ReferenceFront front;
    std::vector<std::vector<double>> xs;
    if (problem.efficient_samples) {
        front.source = FrontSource::analytic;
        xs = problem.efficient_samples(resolution);
    } else {
        front.source = FrontSource::grid;
        if (problem.dim == 1) {
            for (double t : linspace(problem.lower[0], problem.upper[0], resolution)) {
                xs.push_back({t});
            }
        } else {
            auto axis0 = linspace(problem.lower[0], problem.upper[0], resolution);
            auto axis1 = linspace(problem.lower[1], problem.upper[1], resolution);
            xs.reserve(axis0.size() * axis1.size());
            for (double a : axis0) {
                for (double b : axis1) {
                    xs.push_back({a, b});
                }
            }
        }
    }

    std::vector<std::vector<double>> fx;
    fx.reserve(xs.size());
    for (const auto& x : xs) {
        fx.push_back(evaluate(problem, x));
    }

    if (front.source == FrontSource::grid) {
        classical_prefilter(fx, xs);
    }

    std::vector<char> keep = nondominated_mask(fx, eps_dom);
    std::vector<std::size_t> order;
    order.reserve(fx.size());
    for (std::size_t i = 0; i < fx.size(); ++i) {
        if (keep[i]) {
            order.push_back(i);
        }
    }
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return std::lexicographical_compare(fx[a].begin(), fx[a].end(), fx[b].begin(), fx[b].end());
    });
    for (std::size_t idx : order) {
        front.points.push_back(std::move(fx[idx]));
        front.preimages.push_back(std::move(xs[idx]));
    }
    return front;
}

std::vector<std::string> problem_names() {
    return registry().order;
}

bool is_registered(const std::string& name) {
    return registry().factories.count(name) > 0;
}

Problem make_problem(const std::string& name) {
    const auto& reg = registry();
    auto it = reg.factories.find(name);
    if (it == reg.factories.end()) {
        std::string known;
        for (const auto& n : reg.order) {
            known += known.empty() ? n : ", " + n;
        }
        throw std::invalid_argument("unknown problem '" + name + "' (known: " + known + ")");
    }
    return it->second();
}

void register_problem(const std::string& name, std::function<Problem()> factory) {
    auto& reg = registry();
    if (reg.factories.count(name) == 0) {
        reg.order.push_back(name);
    }
    reg.factories[name] = std::move(factory);
}

}  // namespace mscbo
