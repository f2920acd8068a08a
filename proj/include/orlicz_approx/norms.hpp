#pragma once

// Luxemburg and Orlicz norms of finitely supported coefficient sequences with
// variable exponents and nonnegative weights.
//
//   ||f||      = inf{ a > 0 : sum_k mu_k |f^(k) / a|^{p_k} <= 1 }
//   ||f||^*    = sup{ sum_k mu_k lambda_k |f^(k)| : sum_k mu_k |lambda_k|^{q_k} <= 1 },
//                1/p_k + 1/q_k = 1
//
// Both are computed by a certified scalar enclosure: an initial bracket that
// provably contains the root, shrunk by tangent/chord steps (bisection
// fallback) to the requested absolute tolerance.  Indices with mu_k = 0 or
// zero coefficient contribute nothing and are dropped up front; a sequence
// with no remaining terms has norm 0, and a single remaining term has the
// closed-form norm mu^{1/p} |c|.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "errors.hpp"
#include "space.hpp"
#include "spectral_function.hpp"

namespace orlicz_approx {

namespace detail {

// One summand of G(u) = sum exp(t - p u); u is log of the scale variable.
struct ExpTerm {
    double t;
    double p;
};

inline std::pair<double, double> exp_sum_with_derivative(const std::vector<ExpTerm>& terms,
                                                         double u) {
    double g = 0.0, dg = 0.0;
    for (const ExpTerm& term : terms) {
        const double e = std::exp(term.t - term.p * u);
        g += e;
        dg -= term.p * e;
    }
    return {g, dg};
}

struct Enclosure {
    double u_lo;
    double u_hi;
};

// Solves sum exp(t_k - p_k u) = 1 for u.  Requires G(u_lo) >= 1 >= G(u_hi)
// (widened first if rounding spoiled the initial bracket).  Convexity of G in
// u makes the tangent step a certified left bound and the chord step a
// certified right bound; a midpoint step covers non-finite cases.  Stops as
// soon as `narrow_enough(u_lo, u_hi)` holds.
inline Enclosure solve_unit_sum(const std::vector<ExpTerm>& terms, double u_lo, double u_hi,
                                const std::function<bool(double, double)>& narrow_enough,
                                int max_iterations, const char* what) {
    double g_lo, dg_lo;
    std::tie(g_lo, dg_lo) = exp_sum_with_derivative(terms, u_lo);
    double g_hi = exp_sum_with_derivative(terms, u_hi).first;
    int widen = 0;
    while (g_hi > 1.0 && widen++ < 128) {
        u_hi += 0.6931471805599453;
        g_hi = exp_sum_with_derivative(terms, u_hi).first;
    }
    while (g_lo < 1.0 && widen++ < 256) {
        u_lo -= 0.6931471805599453;
        std::tie(g_lo, dg_lo) = exp_sum_with_derivative(terms, u_lo);
    }

    int evals = 0;
    auto step = [&](bool from_left) {
        double u;
        if (from_left) {
            u = (std::isfinite(g_lo) && dg_lo < 0.0) ? u_lo + (g_lo - 1.0) / (-dg_lo)
                                                     : std::numeric_limits<double>::quiet_NaN();
        } else {
            u = (std::isfinite(g_lo) && g_lo > g_hi)
                    ? u_lo + (g_lo - 1.0) * (u_hi - u_lo) / (g_lo - g_hi)
                    : std::numeric_limits<double>::quiet_NaN();
        }
        if (!(u > u_lo && u < u_hi)) u = 0.5 * (u_lo + u_hi);
        double g, dg;
        std::tie(g, dg) = exp_sum_with_derivative(terms, u);
        ++evals;
        if (g >= 1.0) {
            u_lo = u;
            g_lo = g;
            dg_lo = dg;
        } else {
            u_hi = u;
            g_hi = g;
        }
    };

    // Below this width the bracket is at relative machine precision; no
    // representable double can narrow it further.
    auto at_ulp = [&]() { return u_hi - u_lo <= 4e-16 * (1.0 + std::abs(u_hi)); };
    while (!narrow_enough(u_lo, u_hi) && !at_ulp()) {
        if (evals >= max_iterations)
            throw ConvergenceError(what, std::exp(u_lo), std::exp(u_hi), evals);
        step(true);
        if (narrow_enough(u_lo, u_hi) || at_ulp()) break;
        if (evals >= max_iterations)
            throw ConvergenceError(what, std::exp(u_lo), std::exp(u_hi), evals);
        step(false);
    }
    return {u_lo, u_hi};
}

// One weighted power term mu (c / a)^p of the modular sum.
struct ModularTerm {
    double weight;
    double p;
    double c;
};

// Luxemburg norm of an explicit term list.  Terms must have weight > 0 and
// c > 0 (callers drop the rest).
inline double luxemburg_from_terms(const std::vector<ModularTerm>& terms, const NormQuery& query) {
    if (terms.empty()) return 0.0;
    if (terms.size() == 1)
        return std::pow(terms[0].weight, 1.0 / terms[0].p) * terms[0].c;

    const double n = static_cast<double>(terms.size());
    double a_hi = 0.0, a_lo = 0.0;
    std::vector<ExpTerm> exp_terms;
    exp_terms.reserve(terms.size());
    for (const ModularTerm& t : terms) {
        a_hi = std::max(a_hi, std::pow(n * t.weight, 1.0 / t.p) * t.c);
        a_lo = std::max(a_lo, std::pow(t.weight, 1.0 / t.p) * t.c / n);
        exp_terms.push_back({std::log(t.weight) + t.p * std::log(t.c), t.p});
    }

    const double tol = query.tolerance;
    auto narrow = [tol](double u_lo, double u_hi) {
        return std::exp(u_hi) - std::exp(u_lo) <= 2.0 * tol;
    };
    Enclosure enc = solve_unit_sum(exp_terms, std::log(a_lo), std::log(a_hi), narrow,
                                   query.max_iterations, "luxemburg_norm did not converge");
    return 0.5 * (std::exp(enc.u_lo) + std::exp(enc.u_hi));
}

inline std::vector<ModularTerm> collect_terms(const SpectralFunction& f,
                                              const ExponentWeightPair& space) {
    std::vector<ModularTerm> terms;
    terms.reserve(f.support_size());
    for (const auto& [k, v] : f.coefficients()) {
        const double w = space.weight(k);
        const double c = std::abs(v);
        if (w > 0.0 && c > 0.0) terms.push_back({w, space.exponent(k), c});
    }
    return terms;
}

}  // namespace detail

// Evaluates the modular sum Phi(a) = sum_k mu_k |f^(k)/a|^{p_k}.
inline double modular_sum(const SpectralFunction& f, const ExponentWeightPair& space, double a) {
    if (!(a > 0.0)) throw std::domain_error("modular_sum: a must be > 0");
    double sum = 0.0;
    for (const auto& [k, v] : f.coefficients()) {
        const double w = space.weight(k);
        const double c = std::abs(v);
        if (w > 0.0 && c > 0.0) sum += w * std::pow(c / a, space.exponent(k));
    }
    return sum;
}

// Luxemburg norm: the infimum of scales a with Phi(a) <= 1.
inline double luxemburg_norm(const SpectralFunction& f, const ExponentWeightPair& space,
                             const NormQuery& query = {}) {
    return detail::luxemburg_from_terms(detail::collect_terms(f, space), query);
}

// The conjugate space: q_k = p_k / (p_k - 1), same weights.
inline ExponentWeightPair dual_exponents(const ExponentWeightPair& space) {
    auto conj = [](double p) { return p / (p - 1.0); };
    std::map<int, double> duals;
    double bound = conj(space.default_exponent());
    for (const auto& [k, p] : space.listed_exponents()) {
        duals[k] = conj(p);
        bound = std::max(bound, duals[k]);
    }
    return ExponentWeightPair(conj(space.default_exponent()), space.default_weight(), bound,
                              std::move(duals), space.listed_weights());
}

// Orlicz norm: the dual pairing supremum.  The optimal multipliers are
// lambda_k = (c_k / (gamma q_k))^{1/(q_k-1)} with gamma > 0 fixed by the
// constraint sum; gamma is found by the same certified enclosure, and the
// stop criterion is on the width of the enclosed supremum value.
inline double orlicz_norm(const SpectralFunction& f, const ExponentWeightPair& space,
                          const NormQuery& query = {}) {
    std::vector<detail::ModularTerm> terms = detail::collect_terms(f, space);
    if (terms.empty()) return 0.0;
    if (terms.size() == 1)
        return std::pow(terms[0].weight, 1.0 / terms[0].p) * terms[0].c;

    // Constraint sum g(v) = sum w_k (c_k / (e^v q_k))^{q_k/(q_k-1)}, v = log gamma.
    std::vector<detail::ExpTerm> constraint;
    std::vector<detail::ExpTerm> value;
    constraint.reserve(terms.size());
    value.reserve(terms.size());
    for (const detail::ModularTerm& t : terms) {
        const double q = t.p / (t.p - 1.0);
        const double r = q / (q - 1.0);
        const double d = 1.0 / (q - 1.0);
        constraint.push_back({std::log(t.weight) + r * std::log(t.c / q), r});
        value.push_back({std::log(t.weight * t.c) + d * std::log(t.c / q), d});
    }

    auto value_at = [&value](double v) {
        double s = 0.0;
        for (const detail::ExpTerm& term : value) s += std::exp(term.t - term.p * v);
        return s;
    };

    // Geometric growth from gamma = 1 until the constraint sum straddles 1.
    double v_lo = 0.0, v_hi = 0.0;
    double g0 = detail::exp_sum_with_derivative(constraint, 0.0).first;
    int grow = 0;
    if (g0 >= 1.0) {
        do {
            v_hi += 0.6931471805599453;
            if (++grow > 1024)
                throw ConvergenceError("orlicz_norm: bracket growth failed", std::exp(v_lo),
                                       std::exp(v_hi), grow);
        } while (detail::exp_sum_with_derivative(constraint, v_hi).first > 1.0);
    } else {
        do {
            v_lo -= 0.6931471805599453;
            if (++grow > 1024)
                throw ConvergenceError("orlicz_norm: bracket growth failed", std::exp(v_lo),
                                       std::exp(v_hi), grow);
        } while (detail::exp_sum_with_derivative(constraint, v_lo).first < 1.0);
    }

    const double tol = query.tolerance;
    auto narrow = [&](double lo, double hi) { return value_at(lo) - value_at(hi) <= 2.0 * tol; };
    detail::Enclosure enc =
        detail::solve_unit_sum(constraint, v_lo, v_hi, narrow, query.max_iterations,
                               "orlicz_norm did not converge");
    return 0.5 * (value_at(enc.u_lo) + value_at(enc.u_hi));
}

}  // namespace orlicz_approx
