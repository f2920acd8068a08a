#pragma once

// The modulus of smoothness omega_alpha(f, delta) = sup_{|h| <= delta}
// ||Delta_h^alpha f||.  The norm depends on h only through |sin(kh/2)|, so it
// is even in h and, on (0, pi/R] with R the support radius, nondecreasing in
// h; there the sup is the endpoint value, computed exactly.  Beyond that the
// search evaluates a dyadic ladder of h values (step pi/2^m, fixed per
// profile, so the evaluated grids for smaller delta are subsets of those for
// larger delta) plus the endpoint, then golden-section refinement around the
// best brackets.  The returned value is a lower bound of the true sup; the
// per-frequency envelope gives a cheap upper certificate.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "fractional.hpp"
#include "norms.hpp"
#include "space.hpp"
#include "spectral_function.hpp"

namespace orlicz_approx {

// Search effort knobs for the sup over h.
struct SupSearchPolicy {
    int coarse_points = 64;   // lower bound on ladder density (>= 8)
    int refine_rounds = 20;   // golden-section rounds per refined bracket
    bool guard = false;       // cross-check against the envelope certificate
};

// ||Delta_h^alpha f||: Luxemburg norm of the moduli 2^alpha |sin(kh/2)|^alpha |f^(k)|.
inline double difference_norm(const SpectralFunction& f, const FractionalOrder& order, double h,
                              const ExponentWeightPair& space, const NormQuery& query = {}) {
    std::vector<detail::ModularTerm> terms;
    terms.reserve(f.support_size());
    for (const auto& [k, v] : f.coefficients()) {
        if (k == 0) continue;
        const double w = space.weight(k);
        const double c = std::abs(v);
        if (w <= 0.0 || c <= 0.0) continue;
        const double m = difference_multiplier_modulus(order, k, h);
        if (m > 0.0) terms.push_back({w, space.exponent(k), m * c});
    }
    return detail::luxemburg_from_terms(terms, query);
}

// Cached h-sweep of the difference norm for one (f, alpha, space).  Reusable
// across delta values and across quadrature nodes; evaluation grids for
// smaller delta are subsets of those for larger delta.
class DifferenceNormProfile {
public:
    DifferenceNormProfile(const SpectralFunction& f, const FractionalOrder& order,
                          const ExponentWeightPair& space, SupSearchPolicy policy = {},
                          NormQuery query = {})
        : order_(order), policy_(policy), query_(query) {
        if (policy_.coarse_points < 8)
            throw std::invalid_argument("SupSearchPolicy: coarse_points must be >= 8");
        for (const auto& [k, v] : f.coefficients()) {
            if (k == 0) continue;
            const double w = space.weight(k);
            const double c = std::abs(v);
            if (w <= 0.0 || c <= 0.0) continue;
            freq_.push_back(k);
            terms_.push_back({w, space.exponent(k), c});
            radius_ = std::max(radius_, std::abs(k));
        }
        int density = std::max(policy_.coarse_points, 32 * std::max(radius_, 1));
        int level = 1;
        while (level < density) level *= 2;
        step_ = std::numbers::pi / level;
        values_.assign(1, 0.0);   // j = 0 slot
        prefix_.assign(1, 0.0);
    }

    bool trivial() const noexcept { return freq_.empty(); }
    int support_radius() const noexcept { return radius_; }
    double step() const noexcept { return step_; }

    // The difference norm at a single h.
    double value_at(double h) const {
        scratch_.clear();
        for (std::size_t i = 0; i < freq_.size(); ++i) {
            const double s = std::abs(std::sin(0.5 * freq_[i] * h));
            if (s == 0.0) continue;
            scratch_.push_back(
                {terms_[i].weight, terms_[i].p, std::pow(2.0 * s, order_.alpha) * terms_[i].c});
        }
        return detail::luxemburg_from_terms(scratch_, query_);
    }

    // Upper certificate: each frequency's multiplier replaced by its own sup
    // over (0, delta].  An upper bound of the true sup (maxima need not be
    // attained at a common h).
    double upper_envelope(double delta) const {
        scratch_.clear();
        for (std::size_t i = 0; i < freq_.size(); ++i) {
            const double phase = 0.5 * std::abs(freq_[i]) * std::min(delta, 2.0 * std::numbers::pi);
            const double s = phase >= 0.5 * std::numbers::pi ? 1.0 : std::sin(phase);
            if (s == 0.0) continue;
            scratch_.push_back(
                {terms_[i].weight, terms_[i].p, std::pow(2.0 * s, order_.alpha) * terms_[i].c});
        }
        return detail::luxemburg_from_terms(scratch_, query_);
    }

    // Lower-bounding sup over 0 < h <= delta.
    double evaluate(double delta) {
        if (!(delta > 0.0)) throw std::domain_error("modulus of smoothness: delta must be > 0");
        if (trivial()) return 0.0;
        const double two_pi = 2.0 * std::numbers::pi;
        const double d_eff = std::min(delta, two_pi);
        const std::size_t j_max =
            static_cast<std::size_t>(std::floor(d_eff / step_ * (1.0 + 1e-12)));
        extend_cache(j_max);

        double best = j_max >= 1 ? prefix_[j_max] : 0.0;
        best = std::max(best, value_at(d_eff));

        if (policy_.refine_rounds > 0 && j_max >= 1) {
            struct Bracket {
                double lo, hi, seed;
            };
            std::vector<Bracket> brackets;
            brackets.push_back({std::max(0.0, d_eff - step_), d_eff, best});
            std::vector<std::size_t> peaks;
            for (std::size_t j = 1; j + 1 <= j_max; ++j) {
                if (values_[j] >= values_[j - 1] && values_[j] >= values_[j + 1])
                    peaks.push_back(j);
            }
            std::sort(peaks.begin(), peaks.end(), [&](std::size_t a, std::size_t b) {
                return values_[a] > values_[b];
            });
            for (std::size_t i = 0; i < peaks.size() && i < 3; ++i) {
                const std::size_t j = peaks[i];
                brackets.push_back(
                    {(j - 1) * step_, std::min((j + 1) * step_, d_eff), values_[j]});
            }
            for (const Bracket& b : brackets)
                if (b.hi > b.lo) best = std::max(best, refine(b.lo, b.hi));
        }

        if (policy_.guard) {
            const double env = upper_envelope(d_eff);
            if (best > env * (1.0 + 1e-9) + 1e-9)
                throw std::logic_error("DifferenceNormProfile: value exceeds envelope certificate");
        }
        return best;
    }

private:
    void extend_cache(std::size_t j_max) {
        while (values_.size() <= j_max) {
            const std::size_t j = values_.size();
            const double v = value_at(j * step_);
            values_.push_back(v);
            prefix_.push_back(std::max(prefix_.back(), v));
        }
    }

    double refine(double a, double b) const {
        constexpr double invphi = 0.6180339887498949;
        double x1 = b - invphi * (b - a);
        double x2 = a + invphi * (b - a);
        double f1 = value_at(x1);
        double f2 = value_at(x2);
        double best = std::max(f1, f2);
        for (int round = 0; round < policy_.refine_rounds; ++round) {
            if (f1 < f2) {
                a = x1;
                x1 = x2;
                f1 = f2;
                x2 = a + invphi * (b - a);
                f2 = value_at(x2);
                best = std::max(best, f2);
            } else {
                b = x2;
                x2 = x1;
                f2 = f1;
                x1 = b - invphi * (b - a);
                f1 = value_at(x1);
                best = std::max(best, f1);
            }
        }
        return best;
    }

    FractionalOrder order_;
    SupSearchPolicy policy_;
    NormQuery query_;
    std::vector<int> freq_;
    std::vector<detail::ModularTerm> terms_;   // c holds |f^(k)|
    int radius_ = 0;
    double step_ = 0.0;
    std::vector<double> values_;
    std::vector<double> prefix_;
    mutable std::vector<detail::ModularTerm> scratch_;
};

// omega_alpha(f, delta): grid-plus-refinement lower bound of the sup.
inline double modulus_of_smoothness(const SpectralFunction& f, const FractionalOrder& order,
                                    double delta, const ExponentWeightPair& space,
                                    const SupSearchPolicy& policy = {},
                                    const NormQuery& query = {}) {
    if (!(delta > 0.0)) throw std::domain_error("modulus_of_smoothness: delta must be > 0");
    DifferenceNormProfile profile(f, order, space, policy, query);
    return profile.evaluate(delta);
}

}  // namespace orlicz_approx
