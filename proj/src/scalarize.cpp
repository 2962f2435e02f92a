#include "mscbo/scalarize.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mscbo {

double weighted_sum(std::span<const double> lambda, std::span<const double> fx) {
    if (lambda.size() != fx.size()) {
        throw std::invalid_argument("weighted_sum: dimension mismatch");
    }
    double acc = 0.0;
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        acc += lambda[i] * fx[i];
    }
    return acc;
}

double scalarized_cost_mu(std::span<const double> mu, std::span<const double> fx) {
    if (mu.size() != fx.size()) {
        throw std::invalid_argument("scalarized_cost_mu: dimension mismatch");
    }
    if (mu.empty()) {
        throw std::invalid_argument("scalarized_cost_mu: empty weight vector");
    }
    double m = *std::max_element(mu.begin(), mu.end());
    if (!std::isfinite(m)) {
        throw std::invalid_argument("scalarized_cost_mu: non-finite mu");
    }
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < mu.size(); ++i) {
        if (!std::isfinite(mu[i])) {
            throw std::invalid_argument("scalarized_cost_mu: non-finite mu");
        }
        double w = std::exp(mu[i] - m);
        num += w * fx[i];
        den += w;
    }
    return num / den;
}

std::vector<double> lambda_from_mu(std::span<const double> mu) {
    if (mu.empty()) {
        throw std::invalid_argument("lambda_from_mu: empty mu");
    }
    double m = *std::max_element(mu.begin(), mu.end());
    std::vector<double> lambda(mu.size());
    double den = 0.0;
    for (std::size_t i = 0; i < mu.size(); ++i) {
        lambda[i] = std::exp(mu[i] - m);
        den += lambda[i];
    }
    for (double& l : lambda) {
        l /= den;
    }
    return lambda;
}

std::vector<double> mu_from_lambda(std::span<const double> lambda) {
    std::vector<double> mu(lambda.size());
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        if (!(lambda[i] > 0.0)) {
            throw std::domain_error("mu_from_lambda: weights must be strictly positive");
        }
        mu[i] = std::log(lambda[i]);
    }
    return mu;
}

double penalty_uniform(std::span<const double> fx, const std::vector<std::vector<double>>& means_f,
                       double R_c, double r_c) {
    if (!(r_c > 0.0)) {
        throw std::invalid_argument("penalty_uniform: r_c must be positive");
    }
    if (R_c < 0.0) {
        throw std::invalid_argument("penalty_uniform: R_c must be non-negative");
    }
    double acc = 0.0;
    for (const auto& mean : means_f) {
        if (mean.size() != fx.size()) {
            throw std::invalid_argument("penalty_uniform: dimension mismatch");
        }
        double d2 = 0.0;
        for (std::size_t i = 0; i < fx.size(); ++i) {
            double diff = fx[i] - mean[i];
            d2 += diff * diff;
        }
        acc += R_c * std::exp(-std::sqrt(d2) / r_c);
    }
    return acc;
}

std::vector<double> sample_simplex(int p, rng::Stream& stream) {
    if (p < 1) {
        throw std::invalid_argument("sample_simplex: p must be at least 1");
    }
    std::vector<double> cuts(static_cast<std::size_t>(p - 1));
    for (double& c : cuts) {
        c = stream.uniform();
    }
    std::sort(cuts.begin(), cuts.end());
    std::vector<double> lambda(static_cast<std::size_t>(p));
    double prev = 0.0;
    for (std::size_t i = 0; i < cuts.size(); ++i) {
        lambda[i] = cuts[i] - prev;
        prev = cuts[i];
    }
    lambda[static_cast<std::size_t>(p - 1)] = 1.0 - prev;
    return lambda;
}

std::vector<std::vector<double>> equidistant_weights(int K, double eps) {
    if (K < 2) {
        throw std::invalid_argument("equidistant_weights: need at least 2 weight vectors");
    }
    if (!(eps > 0.0) || !(eps < 0.5)) {
        throw std::invalid_argument("equidistant_weights: eps must lie in (0, 0.5)");
    }
    std::vector<std::vector<double>> out;
    out.reserve(static_cast<std::size_t>(K));
    for (int k = 0; k < K; ++k) {
        double first = eps + (1.0 - 2.0 * eps) * static_cast<double>(k) / static_cast<double>(K - 1);
        out.push_back({first, 1.0 - first});
    }
    return out;
}

}  // namespace mscbo
