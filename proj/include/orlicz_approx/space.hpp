#pragma once

#include <cmath>
#include <map>
#include <stdexcept>
#include <utility>

namespace orlicz_approx {

// The pair (p, mu) defining a weighted variable-exponent sequence space:
// an exponent p_k and a nonnegative weight mu_k per integer frequency,
// with defaults for indices not listed explicitly.  Every exponent
// (including the default) must satisfy 1 < p_k <= bound_K.
class ExponentWeightPair {
public:
    ExponentWeightPair(double default_p, double default_mu, double bound_K,
                       std::map<int, double> exponents = {},
                       std::map<int, double> weights = {})
        : default_p_(default_p),
          default_mu_(default_mu),
          bound_K_(bound_K),
          exponents_(std::move(exponents)),
          weights_(std::move(weights)) {
        if (!std::isfinite(bound_K_)) throw std::invalid_argument("bound_K must be finite");
        check_exponent(default_p_);
        check_weight(default_mu_);
        for (const auto& [k, p] : exponents_) {
            (void)k;
            check_exponent(p);
        }
        for (const auto& [k, mu] : weights_) {
            (void)k;
            check_weight(mu);
        }
    }

    // Space with p_k = p and mu_k = mu everywhere.
    static ExponentWeightPair uniform(double p, double mu = 1.0) {
        return ExponentWeightPair(p, mu, p);
    }

    double exponent(int k) const {
        auto it = exponents_.find(k);
        return it == exponents_.end() ? default_p_ : it->second;
    }

    double weight(int k) const {
        auto it = weights_.find(k);
        return it == weights_.end() ? default_mu_ : it->second;
    }

    double default_exponent() const noexcept { return default_p_; }
    double default_weight() const noexcept { return default_mu_; }
    double bound() const noexcept { return bound_K_; }
    const std::map<int, double>& listed_exponents() const noexcept { return exponents_; }
    const std::map<int, double>& listed_weights() const noexcept { return weights_; }

private:
    void check_exponent(double p) const {
        if (!(p > 1.0) || !(p <= bound_K_))
            throw std::invalid_argument("exponent must satisfy 1 < p <= bound_K");
    }
    static void check_weight(double mu) {
        if (!(mu >= 0.0) || !std::isfinite(mu))
            throw std::invalid_argument("weight must be finite and >= 0");
    }

    double default_p_;
    double default_mu_;
    double bound_K_;
    std::map<int, double> exponents_;
    std::map<int, double> weights_;
};

// Accuracy request for the iterative norm solves: absolute tolerance on the
// returned value and an iteration budget.
struct NormQuery {
    double tolerance = 1e-12;
    int max_iterations = 200;

    NormQuery() = default;
    NormQuery(double tol, int max_iter) : tolerance(tol), max_iterations(max_iter) {
        if (!(tolerance > 0.0)) throw std::invalid_argument("tolerance must be > 0");
        if (max_iterations < 1) throw std::invalid_argument("max_iterations must be >= 1");
    }
};

}  // namespace orlicz_approx
