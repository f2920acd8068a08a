#pragma once

// Peetre K-functional K_alpha(delta, f) = inf_h { ||f - h|| + delta^alpha ||h^(alpha)|| }.
//
// The competitor can be restricted to h^(k) = t_k f^(k) with t_k in [0, 1]:
// projecting any candidate coefficient onto the segment [0, f^(k)] shrinks
// both |f^(k) - h^(k)| and |h^(k)| (the projection is nonexpansive to both
// segment endpoints), and both norms are monotone in coefficient moduli.
// The zero mode is matched exactly (it costs nothing in the derivative
// term), so the remaining objective
//
//   F(t) = ||(1 - t_k) f^(k)|| + delta^alpha || t_k |k|^alpha f^(k) ||
//
// is convex on [0,1]^m and minimized by coordinate descent: coordinates in
// increasing (|k|, k) order, each minimized by golden section plus explicit
// endpoint checks, until a full sweep improves F by less than the tolerance.

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fractional.hpp"
#include "norms.hpp"
#include "space.hpp"
#include "spectral_function.hpp"
#include "spectral_ops.hpp"

namespace orlicz_approx {

namespace detail {

struct KCoordinate {
    int k;
    double weight;
    double p;
    double c;        // |f^(k)|
    double deriv_c;  // |k|^alpha |f^(k)|
};

class KObjective {
public:
    KObjective(std::vector<KCoordinate> coords, double delta_pow, const NormQuery& query)
        : coords_(std::move(coords)), delta_pow_(delta_pow), query_(query) {}

    double operator()(const std::vector<double>& t) const {
        remainder_.clear();
        derivative_.clear();
        for (std::size_t i = 0; i < coords_.size(); ++i) {
            const KCoordinate& c = coords_[i];
            if (t[i] < 1.0) remainder_.push_back({c.weight, c.p, (1.0 - t[i]) * c.c});
            if (t[i] > 0.0) derivative_.push_back({c.weight, c.p, t[i] * c.deriv_c});
        }
        return luxemburg_from_terms(remainder_, query_) +
               delta_pow_ * luxemburg_from_terms(derivative_, query_);
    }

    std::size_t size() const noexcept { return coords_.size(); }

private:
    std::vector<KCoordinate> coords_;
    double delta_pow_;
    NormQuery query_;
    mutable std::vector<ModularTerm> remainder_;
    mutable std::vector<ModularTerm> derivative_;
};

}  // namespace detail

inline double k_functional(const SpectralFunction& f, const FractionalOrder& order, double delta,
                           const ExponentWeightPair& space, const NormQuery& query = {}) {
    if (!(delta > 0.0)) throw std::domain_error("k_functional: delta must be > 0");

    std::vector<detail::KCoordinate> coords;
    for (const auto& [k, v] : f.coefficients()) {
        if (k == 0) continue;
        const double w = space.weight(k);
        const double c = std::abs(v);
        if (w <= 0.0 || c <= 0.0) continue;
        coords.push_back({k, w, space.exponent(k), c,
                          std::pow(std::abs(static_cast<double>(k)), order.alpha) * c});
    }
    // Order the sweep by increasing |k|, ties by k.
    std::sort(coords.begin(), coords.end(), [](const auto& a, const auto& b) {
        return std::make_pair(std::abs(a.k), a.k) < std::make_pair(std::abs(b.k), b.k);
    });
    if (coords.empty()) return 0.0;

    // Inner norm solves run two digits tighter than the sweep stop so the
    // descent does not stall on solver noise.
    NormQuery inner = query;
    inner.tolerance = 0.01 * query.tolerance;
    const detail::KObjective objective(std::move(coords), std::pow(delta, order.alpha), inner);
    const std::size_t m = objective.size();
    std::vector<double> t(m, 0.0);
    double best = objective(t);

    constexpr double invphi = 0.6180339887498949;
    std::vector<double> probe = t;
    auto minimize_coordinate = [&](std::size_t i) {
        probe = t;
        auto at = [&](double x) {
            probe[i] = x;
            return objective(probe);
        };
        double a = 0.0, b = 1.0;
        double x1 = b - invphi * (b - a), x2 = a + invphi * (b - a);
        double f1 = at(x1), f2 = at(x2);
        for (int round = 0; round < 40; ++round) {
            if (f1 > f2) {
                a = x1;
                x1 = x2;
                f1 = f2;
                x2 = a + invphi * (b - a);
                f2 = at(x2);
            } else {
                b = x2;
                x2 = x1;
                f2 = f1;
                x1 = b - invphi * (b - a);
                f1 = at(x1);
            }
        }
        double arg = f1 < f2 ? x1 : x2;
        double val = std::min(f1, f2);
        // Endpoints are often optimal (the single-harmonic objective is linear).
        const double v0 = at(0.0);
        const double v1 = at(1.0);
        if (v0 <= val) {
            val = v0;
            arg = 0.0;
        }
        if (v1 < val) {
            val = v1;
            arg = 1.0;
        }
        if (val < best) {
            best = val;
            t[i] = arg;
        }
    };

    for (int sweep = 0; sweep < query.max_iterations; ++sweep) {
        const double before = best;
        for (std::size_t i = 0; i < m; ++i) minimize_coordinate(i);
        if (before - best < query.tolerance * (1.0 + std::abs(best))) return best;
    }
    throw ConvergenceError("k_functional: coordinate descent did not settle", best, best,
                           query.max_iterations);
}

// Upper bound from Fourier-sum competitors: min over n of
// ||f - S_n|| + delta^alpha ||S_n^(alpha)||, S_n the restriction to |k| <= n.
inline double k_functional_partial_sum_bound(const SpectralFunction& f,
                                             const FractionalOrder& order, double delta,
                                             const ExponentWeightPair& space,
                                             const NormQuery& query = {}) {
    if (!(delta > 0.0))
        throw std::domain_error("k_functional_partial_sum_bound: delta must be > 0");
    const double dpow = std::pow(delta, order.alpha);
    const int radius = f.support_radius();
    double bound = std::numeric_limits<double>::infinity();
    for (int n = 0; n <= radius + 1; ++n) {
        std::vector<detail::ModularTerm> tail, head;
        for (const auto& [k, v] : f.coefficients()) {
            const double w = space.weight(k);
            const double c = std::abs(v);
            if (w <= 0.0 || c <= 0.0) continue;
            if (std::abs(k) > n)
                tail.push_back({w, space.exponent(k), c});
            else if (k != 0)
                head.push_back({w, space.exponent(k),
                                std::pow(std::abs(static_cast<double>(k)), order.alpha) * c});
        }
        bound = std::min(bound, detail::luxemburg_from_terms(tail, query) +
                                    dpow * detail::luxemburg_from_terms(head, query));
    }
    return bound;
}

}  // namespace orlicz_approx
