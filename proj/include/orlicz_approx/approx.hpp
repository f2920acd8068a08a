#pragma once

// Best approximation by trigonometric polynomials and the constructive
// near-best approximant.  In these spaces E_n(f) is exactly the Luxemburg
// norm of the coefficient tail |k| >= n, so no polynomial optimization is
// involved; the Jackson approximant sigma_{n-1} and the generalized
// Bernstein inequalities are computed directly in coefficient space.

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "fractional.hpp"
#include "kernels.hpp"
#include "norms.hpp"
#include "psi.hpp"
#include "smoothness.hpp"
#include "space.hpp"
#include "spectral_function.hpp"
#include "spectral_ops.hpp"

namespace orlicz_approx {

// E_n(f): Luxemburg norm of the tail {f^(k)}_{|k| >= n}.
inline double best_approximation(const SpectralFunction& f, int n,
                                 const ExponentWeightPair& space, const NormQuery& query = {}) {
    if (n < 1) throw std::domain_error("best_approximation: n must be >= 1");
    std::vector<detail::ModularTerm> tail;
    for (const auto& [k, v] : f.coefficients()) {
        if (std::abs(k) < n) continue;
        const double w = space.weight(k);
        const double c = std::abs(v);
        if (w > 0.0 && c > 0.0) tail.push_back({w, space.exponent(k), c});
    }
    return detail::luxemburg_from_terms(tail, query);
}

// Pair (E_n(f), eps_n E_n(f^psi)) with eps_n = max |psi_k| over the support
// tail and k = n; the first entry never exceeds the second.
inline std::pair<double, double> best_approx_by_psi_derivative_bound(
    const SpectralFunction& f, const PsiWeights& psi, int n, const ExponentWeightPair& space,
    const NormQuery& query = {}) {
    if (n < 1) throw std::domain_error("best_approx_by_psi_derivative_bound: n must be >= 1");
    double eps = psi.modulus(n);
    for (const auto& [k, v] : f.coefficients()) {
        (void)v;
        if (k != 0 && std::abs(k) >= n) eps = std::max(eps, psi.modulus(k));
    }
    const double en_f = best_approximation(f, n, space, query);
    const double en_deriv = best_approximation(psi_derivative(f, psi), n, space, query);
    return {en_f, eps * en_deriv};
}

// Pair (||tau^psi||, ||tau|| / eps_n) with eps_n = min_{0 < |k| <= n} |psi_k|.
// For psi_k = |k|^{-r} this is the Bernstein bound ||tau^(r)|| <= n^r ||tau||.
inline std::pair<double, double> bernstein_psi_bound(const SpectralFunction& tau,
                                                     const PsiWeights& psi, int n,
                                                     const ExponentWeightPair& space,
                                                     const NormQuery& query = {}) {
    if (n < 1) throw std::domain_error("bernstein_psi_bound: n must be >= 1");
    if (tau.support_radius() > n)
        throw std::domain_error("bernstein_psi_bound: support of tau exceeds n");
    double eps;
    if (psi.is_power()) {
        eps = std::pow(static_cast<double>(n), -psi.power_exponent());
    } else {
        eps = std::numeric_limits<double>::infinity();
        for (int k = 1; k <= n; ++k)
            eps = std::min({eps, psi.modulus(k), psi.modulus(-k)});
    }
    const double lhs = luxemburg_norm(psi_derivative(tau, psi), space, query);
    const double rhs = luxemburg_norm(tau, space, query) / eps;
    return {lhs, rhs};
}

// The near-best approximant sigma_{n-1} built from the Jackson kernel
// K_{n-1}: in coefficient space sigma^(k) = f^(k) (1 - m_k) with
// m_k = sum_{j=0}^{alpha} (-1)^j binom(alpha, j) 2 pi K^(jk), so that
// f - sigma has coefficients m_k f^(k) and sigma has degree <= n - 1.
inline SpectralFunction jackson_approximant(const SpectralFunction& f, int n, int alpha, int k0) {
    if (n < 1) throw std::domain_error("jackson_approximant: n must be >= 1");
    if (alpha < 1) throw std::domain_error("jackson_approximant: alpha must be a positive integer");
    if (k0 < 1) throw std::domain_error("jackson_approximant: k0 must be >= 1");
    const auto kernel = jackson_kernel_cached(n - 1, k0);
    const FractionalOrder order(static_cast<double>(alpha));

    SpectralFunction sigma;
    const double center = kernel->coefficient(0);
    for (const auto& [k, v] : f.coefficients()) {
        double m = 0.0;
        for (int j = 0; j <= alpha; ++j) {
            // 2 pi K^(jk), written as a coefficient ratio so that it is
            // exactly 1 at jk = 0 and exactly 0 beyond the degree.
            const double kappa = kernel->coefficient(j * k) / center;
            if (kappa != 0.0)
                m += (j % 2 == 0 ? 1.0 : -1.0) * binomial_fractional(order, j) * kappa;
        }
        sigma.set_coeff(k, v * (1.0 - m));
    }
    return sigma;
}

// Triple (lower, middle, upper) of the generalized Bernstein inequality
//   (sin(nh/2) / (n/2))^alpha ||tau^(alpha)||
//     <= ||Delta_h^alpha tau|| <= h^alpha ||tau^(alpha)||
// for polynomials of degree <= n and 0 < h < 2 pi / n.
inline std::tuple<double, double, double> bernstein_difference_bounds(const SpectralFunction& tau,
                                                        const FractionalOrder& order, double h,
                                                        int n, const ExponentWeightPair& space,
                                                        const NormQuery& query = {}) {
    if (n < 1) throw std::domain_error("bernstein_difference_bounds: n must be >= 1");
    if (!(h > 0.0) || !(h < 2.0 * std::numbers::pi / n))
        throw std::domain_error("bernstein_difference_bounds: h must lie in (0, 2 pi / n)");
    if (tau.support_radius() > n)
        throw std::domain_error("bernstein_difference_bounds: support of tau exceeds n");

    const double deriv_norm =
        luxemburg_norm(psi_derivative(tau, PsiWeights::power(order.alpha)), space, query);
    const double middle = difference_norm(tau, order, h, space, query);
    const double lower = std::pow(std::sin(0.5 * n * h) / (0.5 * n), order.alpha) * deriv_norm;
    const double upper = std::pow(h, order.alpha) * deriv_norm;
    return {lower, middle, upper};
}

// int_{-pi}^{pi} |K(t)| omega(f, |t|) dt evaluated with a shared h-sweep
// cache: the ladder values are computed once and each quadrature node costs
// one extra endpoint norm.
inline double modulus_kernel_integral(const Kernel& kernel, DifferenceNormProfile& profile,
                                      int quadrature_points) {
    detail::check_quadrature(kernel, quadrature_points);
    auto g = [&](double t) {
        const double w = t > 0.0 ? profile.evaluate(t) : 0.0;
        return std::abs(kernel.evaluate(t)) * w;
    };
    return 2.0 * detail::simpson_half_period(g, quadrature_points);
}

}  // namespace orlicz_approx
