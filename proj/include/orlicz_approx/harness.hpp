#pragma once

// Executable checks of the direct/inverse approximation theorems, the
// sharpness example, the majorant-class characterization, and the
// K-functional equivalence.  Each check produces a Verdict whose pass rule
// is the single inequality lhs <= rhs + margin; asymptotic O(.) claims are
// tested as bounded-ratio properties over a finite range with a growth
// detector (max over the tail quarter vs overall median).

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "approx.hpp"
#include "fractional.hpp"
#include "k_functional.hpp"
#include "kernels.hpp"
#include "majorant.hpp"
#include "norms.hpp"
#include "smoothness.hpp"
#include "space.hpp"
#include "spectral_function.hpp"
#include "verdict.hpp"

namespace orlicz_approx {

// Both sides of the Abel-transform identity
//   sum_{v=m}^{M} a_v c_v = a_m sum_{v=m}^{N} c_v
//     + sum_{v=m+1}^{M} (a_v - a_{v-1}) sum_{i=v}^{N} c_i
//     - a_M sum_{v=M+1}^{N} c_v
// with 1-based indices and 1 <= m <= M < N <= length.
inline std::pair<double, double> abel_transform_sides(const std::vector<double>& a,
                                                      const std::vector<double>& c, int m, int M,
                                                      int N) {
    const int len = static_cast<int>(std::min(a.size(), c.size()));
    if (!(1 <= m && m <= M && M < N && N <= len))
        throw std::domain_error("abel_transform_sides: need 1 <= m <= M < N <= length");
    auto av = [&](int v) { return a[v - 1]; };
    auto cv = [&](int v) { return c[v - 1]; };

    double left = 0.0;
    for (int v = m; v <= M; ++v) left += av(v) * cv(v);

    std::vector<double> suffix(N + 2, 0.0);  // suffix[v] = sum_{i=v}^{N} c_i
    for (int v = N; v >= 1; --v) suffix[v] = suffix[v + 1] + cv(v);

    double right = av(m) * suffix[m];
    for (int v = m + 1; v <= M; ++v) right += (av(v) - av(v - 1)) * suffix[v];
    right -= av(M) * (suffix[M + 1] - suffix[N + 1]);
    return {left, right};
}

namespace detail {

// Weights v^alpha - (v-1)^alpha, v = 1..n, from cached powers.
inline std::vector<double> telescoping_weights(int n, double alpha) {
    std::vector<double> pows(n + 1);
    for (int v = 0; v <= n; ++v) pows[v] = std::pow(static_cast<double>(v), alpha);
    std::vector<double> w(n);
    for (int v = 1; v <= n; ++v) w[v - 1] = pows[v] - pows[v - 1];
    return w;
}

inline double median(std::vector<double> values) {
    if (values.empty()) return 0.0;
    std::sort(values.begin(), values.end());
    const std::size_t mid = values.size() / 2;
    return values.size() % 2 == 1 ? values[mid] : 0.5 * (values[mid - 1] + values[mid]);
}

// Growth detector for bounded-ratio sequences: the largest value on the last
// quarter of the range must not exceed twice the overall median.  Decaying
// sequences pass; sustained growth fails.
inline std::pair<double, double> tail_max_vs_median(const std::vector<double>& values) {
    if (values.size() < 4) return {0.0, 1.0};
    double tail_max = 0.0;
    for (std::size_t i = values.size() - values.size() / 4; i < values.size(); ++i)
        tail_max = std::max(tail_max, values[i]);
    return {tail_max, 2.0 * median(values)};
}

}  // namespace detail

// E_nu(f) for nu = 1..n_max (index nu-1).
inline std::vector<double> best_approximation_table(const SpectralFunction& f, int n_max,
                                                    const ExponentWeightPair& space,
                                                    const NormQuery& query = {}) {
    std::vector<double> table(n_max);
    for (int n = 1; n <= n_max; ++n) table[n - 1] = best_approximation(f, n, space, query);
    return table;
}

namespace detail {

inline Verdict inverse_theorem_verdict(const char* name, double omega,
                                       const std::vector<double>& en,
                                       const std::vector<double>& weights, int n, double alpha,
                                       const NormQuery& query) {
    double sum = 0.0;
    for (int v = 1; v <= n; ++v) sum += weights[v - 1] * en[v - 1];
    const double rhs = std::pow(std::numbers::pi / n, alpha) * sum;
    nlohmann::ordered_json params{{"n", n}, {"alpha", alpha}};
    return Verdict::of(name, omega, rhs, query.tolerance * n, std::move(params));
}

}  // namespace detail

// Inverse estimate with the exact constant pi^alpha:
//   omega_alpha(f, pi/n) <= (pi/n)^alpha sum_{v=1}^{n} (v^alpha - (v-1)^alpha) E_v(f).
inline Verdict inverse_theorem_check(const SpectralFunction& f, int n,
                                     const FractionalOrder& order,
                                     const ExponentWeightPair& space,
                                     const SupSearchPolicy& policy = {},
                                     const NormQuery& query = {}) {
    if (n < 1) throw std::domain_error("inverse_theorem_check: n must be >= 1");
    const double omega = modulus_of_smoothness(f, order, std::numbers::pi / n, space, policy, query);
    return detail::inverse_theorem_verdict(
        "inverse_theorem", omega, best_approximation_table(f, n, space, query),
        detail::telescoping_weights(n, order.alpha), n, order.alpha, query);
}

// The relaxed form with weights alpha v^{alpha-1}.  Requires alpha >= 1:
// the comparison v^alpha - (v-1)^alpha <= alpha v^{alpha-1} reverses for
// alpha < 1 (already false at v = 1), and so does the bound.
inline Verdict inverse_weighted_sum_bound(const SpectralFunction& f, int n,
                                          const FractionalOrder& order,
                                          const ExponentWeightPair& space,
                                          const SupSearchPolicy& policy = {},
                                          const NormQuery& query = {}) {
    if (n < 1) throw std::domain_error("inverse_weighted_sum_bound: n must be >= 1");
    if (order.alpha < 1.0)
        throw std::domain_error("inverse_weighted_sum_bound: requires alpha >= 1");
    const double omega = modulus_of_smoothness(f, order, std::numbers::pi / n, space, policy, query);
    const auto en = best_approximation_table(f, n, space, query);
    double sum = 0.0;
    for (int v = 1; v <= n; ++v) sum += std::pow(static_cast<double>(v), order.alpha - 1.0) * en[v - 1];
    const double rhs = std::pow(std::numbers::pi / n, order.alpha) * order.alpha * sum;
    nlohmann::ordered_json params{{"n", n}, {"alpha", order.alpha}};
    return Verdict::of("inverse_weighted_sum", omega, rhs, query.tolerance * n, std::move(params));
}

// Ratio lhs/rhs of the sharpness example f*(x) = e^{i k0 x}: equals
// (sin x / x)^alpha at x = k0 pi / (2n), increasing to 1, so the pi^alpha
// constant in the inverse estimate cannot be improved.
inline double sharpness_ratio(int k0, int n, const FractionalOrder& order,
                              const ExponentWeightPair& space, const SupSearchPolicy& policy = {},
                              const NormQuery& query = {}) {
    if (k0 < 1) throw std::domain_error("sharpness_ratio: k0 must be >= 1");
    if (n < 1) throw std::domain_error("sharpness_ratio: n must be >= 1");
    if (space.weight(k0) != 1.0)
        throw std::domain_error("sharpness_ratio: requires mu = 1 at k0");
    SpectralFunction f;
    f.set_coeff(k0, 1.0);
    const double omega = modulus_of_smoothness(f, order, std::numbers::pi / n, space, policy, query);
    const auto weights = detail::telescoping_weights(std::min(n, k0), order.alpha);
    double sum = 0.0;
    for (double w : weights) sum += w;  // E_v = 1 up to k0, then 0
    const double rhs = std::pow(std::numbers::pi / n, order.alpha) * sum;
    return omega / rhs;
}

// A function whose best-approximation sequence matches the prescribed
// strictly decreasing tail values exactly: coefficients are placed shell by
// shell from the outermost inward, each chosen so the tail modular sum
// equals 1 at the target scale.
inline SpectralFunction function_with_prescribed_tails(const std::vector<double>& targets,
                                                       const ExponentWeightPair& space) {
    const int n_max = static_cast<int>(targets.size());
    for (int n = 1; n <= n_max; ++n) {
        if (!(targets[n - 1] > 0.0))
            throw std::domain_error("function_with_prescribed_tails: targets must be positive");
        if (n < n_max && !(targets[n - 1] > targets[n]))
            throw std::domain_error("function_with_prescribed_tails: targets must decrease");
    }
    SpectralFunction f;
    for (int n = n_max; n >= 1; --n) {
        const double target = targets[n - 1];
        const double mu = space.weight(n);
        if (!(mu > 0.0))
            throw std::domain_error("function_with_prescribed_tails: needs mu > 0 on [1, n_max]");
        double s = 0.0;
        for (const auto& [k, v] : f.coefficients())
            s += space.weight(k) * std::pow(std::abs(v) / target, space.exponent(k));
        if (s >= 1.0)
            throw std::domain_error("function_with_prescribed_tails: infeasible targets");
        f.set_coeff(n, target * std::pow((1.0 - s) / mu, 1.0 / space.exponent(n)));
    }
    return f;
}

// (delta, omega_alpha(f_beta, delta)) profile for f_beta with E_n = n^{-beta},
// over a fixed log-spaced delta grid in [1e-3, 1e-1].
inline std::vector<std::pair<double, double>> decay_regime_profile(
    double beta, const FractionalOrder& order, int n_max, const ExponentWeightPair& space,
    int grid_points = 24, const SupSearchPolicy& policy = {}, const NormQuery& query = {}) {
    if (!(beta > 0.0)) throw std::domain_error("decay_regime_profile: beta must be > 0");
    if (n_max < 2) throw std::domain_error("decay_regime_profile: n_max must be >= 2");
    std::vector<double> targets(n_max);
    for (int n = 1; n <= n_max; ++n) targets[n - 1] = std::pow(static_cast<double>(n), -beta);
    const SpectralFunction f = function_with_prescribed_tails(targets, space);

    DifferenceNormProfile profile(f, order, space, policy, query);
    std::vector<std::pair<double, double>> out;
    out.reserve(grid_points);
    const double lo = std::log(1e-3), hi = std::log(1e-1);
    for (int i = 0; i < grid_points; ++i) {
        const double delta = std::exp(lo + (hi - lo) * i / (grid_points - 1));
        out.emplace_back(delta, profile.evaluate(delta));
    }
    return out;
}

// Least-squares slope of log omega against log delta.
inline double fit_log_slope(const std::vector<std::pair<double, double>>& profile) {
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    int n = 0;
    for (const auto& [delta, omega] : profile) {
        if (!(omega > 0.0)) continue;
        const double x = std::log(delta), y = std::log(omega);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++n;
    }
    if (n < 2) throw std::domain_error("fit_log_slope: not enough positive points");
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

// Bari-Stechkin-type condition (B_alpha): R(n) = [sum_{v<=n} v^{alpha-1}
// omega(1/v)] / [n^alpha omega(1/n)] stays bounded.  Bounded-ratio proxy:
// the largest R on the tail quarter must not exceed twice the median.
inline Verdict b_alpha_condition_check(const MajorantSpec& majorant, const FractionalOrder& order,
                                       int n_max) {
    if (n_max < 8) throw std::domain_error("b_alpha_condition_check: n_max must be >= 8");
    std::vector<double> ratios(n_max);
    double sum = 0.0;
    for (int n = 1; n <= n_max; ++n) {
        sum += std::pow(static_cast<double>(n), order.alpha - 1.0) * majorant(1.0 / n);
        ratios[n - 1] = sum / (std::pow(static_cast<double>(n), order.alpha) * majorant(1.0 / n));
    }
    const auto [tail_max, bound] = detail::tail_max_vs_median(ratios);
    nlohmann::ordered_json params{{"alpha", order.alpha},
                                  {"n_max", n_max},
                                  {"R_at_n_max", ratios.back()}};
    return Verdict::of("b_alpha_condition", tail_max, bound, 1e-12, std::move(params));
}

// Majorant-class membership diagnostic: compares sup_n E_n / omega(1/n) and
// sup_delta omega_alpha(f, delta) / omega(delta), checks the two implication
// chains with computable constants, and runs the growth detector on both
// ratio sequences.  Polynomial inputs (eventually zero E_n) pass vacuously.
inline Verdict class_membership_diagnostic(const SpectralFunction& f, const MajorantSpec& majorant,
                                           const FractionalOrder& order,
                                           const ExponentWeightPair& space, int n_max,
                                           const SupSearchPolicy& policy = {},
                                           const NormQuery& query = {}) {
    if (n_max < 4) throw std::domain_error("class_membership_diagnostic: n_max must be >= 4");
    std::vector<int> ns;
    for (int n = 1; n <= n_max; n *= 2) ns.push_back(n);

    DifferenceNormProfile profile(f, order, space, policy, query);
    const int beta = order.ceil_alpha;
    const double order_gap_factor = std::pow(2.0, std::max(0.0, std::ceil(beta - order.alpha)));

    std::vector<double> r1, r2;
    double s1 = 0.0, s2 = 0.0;
    double worst = -std::numeric_limits<double>::infinity();
    int nonzero_en = 0;
    for (int n : ns) {
        const double en = best_approximation(f, n, space, query);
        const double maj = majorant(1.0 / n);
        const double omega_inv_n = profile.evaluate(1.0 / n);
        r1.push_back(en / maj);
        r2.push_back(omega_inv_n / maj);
        s1 = std::max(s1, r1.back());
        s2 = std::max(s2, r2.back());
        if (en > 0.0) ++nonzero_en;

        // Direct chain with computable constants: E_n <= 2 M(beta, n)
        // 2^{ceil(beta-alpha)} omega_alpha(f, 1/n).
        const auto kernel = jackson_kernel_cached(n - 1, beta + 1);
        const double moment =
            kernel_moment_shifted(*kernel, beta, n,
                                  std::max(512, 16 * (kernel->degree() + 1))) *
            std::pow(static_cast<double>(n), beta);
        const double direct_bound = 2.0 * moment * order_gap_factor * omega_inv_n;
        worst = std::max(worst, (en - direct_bound) / std::max(1.0, direct_bound));
    }

    // Inverse chain: omega(f, pi/n) <= S1 (pi/n)^alpha sum weights maj(1/v).
    for (int n : ns) {
        const double omega_pi_n = profile.evaluate(std::numbers::pi / n);
        const auto weights = detail::telescoping_weights(n, order.alpha);
        double w_sum = 0.0;
        for (int v = 1; v <= n; ++v) w_sum += weights[v - 1] * majorant(1.0 / v);
        const double inverse_bound = s1 * std::pow(std::numbers::pi / n, order.alpha) * w_sum;
        worst = std::max(worst, (omega_pi_n - inverse_bound) / std::max(1.0, inverse_bound));
    }

    // Growth detectors, skipped when E_n dies out (polynomials).
    if (nonzero_en >= 4) {
        const auto [t1, b1] = detail::tail_max_vs_median(r1);
        worst = std::max(worst, (t1 - b1) / std::max(1.0, b1));
    }
    const auto [t2, b2] = detail::tail_max_vs_median(r2);
    worst = std::max(worst, (t2 - b2) / std::max(1.0, b2));

    nlohmann::ordered_json params{{"alpha", order.alpha},
                                  {"n_max", n_max},
                                  {"sup_en_over_majorant", s1},
                                  {"sup_omega_over_majorant", s2}};
    return Verdict::composite("class_membership", worst, 1e-6, std::move(params));
}

// The C_2(alpha) = pi^alpha (2^{ceil alpha} C(alpha) + 1) upper equivalence bound
// with C(alpha) instantiated through the computable direct-theorem route:
// C(alpha) = 2 * 2^{ceil(beta - alpha)} * sup_n n^beta int (|t|+1/n)^beta |K_{n-1}|,
// beta = ceil alpha (the shifted kernel moments are n-stable; n = 8 is
// representative).
inline double k_equivalence_upper_constant(const FractionalOrder& order) {
    const int beta = order.ceil_alpha;
    const int n = 8;
    const auto kernel = jackson_kernel_cached(n - 1, beta + 1);
    const double moment =
        kernel_moment_shifted(*kernel, beta, n, std::max(512, 16 * (kernel->degree() + 1))) *
        std::pow(static_cast<double>(n), beta);
    const double c_direct = 2.0 * std::pow(2.0, std::ceil(beta - order.alpha)) * moment;
    return std::pow(std::numbers::pi, order.alpha) *
           (std::pow(2.0, order.ceil_alpha) * c_direct + 1.0);
}

// K-functional equivalence: K >= 2^{-ceil alpha} omega at every delta (the exact proof
// constant), and K/omega stays below the instantiated C_2(alpha), i.e. the
// equivalence ratio is bounded across delta.
inline Verdict k_functional_equivalence_check(const SpectralFunction& f,
                                              const FractionalOrder& order,
                                              const std::vector<double>& deltas,
                                              const ExponentWeightPair& space,
                                              const SupSearchPolicy& policy = {},
                                              const NormQuery& query = {}) {
    const double two_pi = 2.0 * std::numbers::pi;
    DifferenceNormProfile profile(f, order, space, policy, query);
    const double lower_const = std::pow(2.0, -order.ceil_alpha);
    const double upper_const = k_equivalence_upper_constant(order);
    NormQuery descent = query;
    descent.max_iterations = std::max(query.max_iterations, 2000);

    double worst = -std::numeric_limits<double>::infinity();
    double max_ratio = 0.0;
    for (double delta : deltas) {
        if (!(delta > 0.0 && delta < two_pi))
            throw std::domain_error("k_functional_equivalence_check: deltas must lie in (0, 2 pi)");
        const double k = k_functional(f, order, delta, space, descent);
        const double omega = profile.evaluate(delta);
        worst = std::max(worst, lower_const * omega - k);
        if (omega > 0.0) max_ratio = std::max(max_ratio, k / omega);
    }
    worst = std::max(worst, max_ratio - upper_const);
    nlohmann::ordered_json params{{"alpha", order.alpha},
                                  {"deltas", deltas.size()},
                                  {"max_ratio", max_ratio},
                                  {"upper_constant", upper_const}};
    return Verdict::composite("k_functional_equivalence", worst, 1e-8, std::move(params));
}

}  // namespace orlicz_approx
