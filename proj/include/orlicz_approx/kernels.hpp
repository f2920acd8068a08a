#pragma once

// Jackson kernels K_n(t) = b_p (sin(pt/2) / sin(t/2))^{2 k0}, stored by their
// exact cosine coefficients: the Fejer block (sin(pt/2)/sin(t/2))^2 has the
// triangular coefficients p - |l|, and the 2k0-th power is its k0-fold
// self-convolution (exact integer arithmetic), scaled so the kernel
// integrates to 1 over [-pi, pi].

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace orlicz_approx {

// An even trigonometric polynomial sum_l c_l e^{ilt}, c_{-l} = c_l, stored by
// nonnegative index.
class Kernel {
public:
    Kernel(std::vector<double> cosine_coeffs, double normalization)
        : coeffs_(std::move(cosine_coeffs)), normalization_(normalization) {
        if (coeffs_.empty()) throw std::invalid_argument("Kernel: empty coefficient list");
    }

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

    // Coefficient at signed index l (zero beyond the degree).
    // GCC 11 speculates the guarded subscript when l is a literal beyond the
    // degree and reports a bogus -Warray-bounds; the access is guarded.
#if defined(__GNUC__) && !defined(__clang__)
#pragma GCC diagnostic push
#pragma GCC diagnostic ignored "-Warray-bounds"
#endif
    double coefficient(int l) const noexcept {
        const std::size_t a = static_cast<std::size_t>(l < 0 ? -static_cast<long>(l) : l);
        if (a >= coeffs_.size()) return 0.0;
        return coeffs_[a];
    }
#if defined(__GNUC__) && !defined(__clang__)
#pragma GCC diagnostic pop
#endif

    double normalization() const noexcept { return normalization_; }

    double evaluate(double t) const {
        double v = coeffs_[0];
        for (int l = 1; l < static_cast<int>(coeffs_.size()); ++l)
            v += 2.0 * coeffs_[l] * std::cos(l * t);
        return v;
    }

private:
    std::vector<double> coeffs_;
    double normalization_;
};

namespace detail {

inline std::vector<double> convolve(const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<double> out(a.size() + b.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

}  // namespace detail

// Jackson kernel of order n and power parameter k0: block size p is the
// integer with n/(2 k0) < p <= n/(2 k0) + 1, and the normalization makes
// 2 pi c_0 = 1 (unit integral).  Degree k0 (p - 1) <= n.
inline Kernel jackson_kernel(int n, int k0) {
    if (k0 < 1) throw std::domain_error("jackson_kernel: k0 must be >= 1");
    if (n < 0) throw std::domain_error("jackson_kernel: n must be >= 0");
    const int p = n / (2 * k0) + 1;

    // Full coefficient line of one Fejer block, indices -(p-1) .. p-1.
    std::vector<double> block(2 * p - 1);
    for (int l = -(p - 1); l <= p - 1; ++l) block[l + p - 1] = static_cast<double>(p - std::abs(l));

    std::vector<double> full = block;
    for (int i = 1; i < k0; ++i) full = detail::convolve(full, block);

    const int degree = k0 * (p - 1);
    const double center = full[degree];
    const double b_p = 1.0 / (2.0 * std::numbers::pi * center);
    std::vector<double> half(degree + 1);
    for (int l = 0; l <= degree; ++l) half[l] = full[degree + l] * b_p;
    return Kernel(std::move(half), b_p);
}

// Memoized kernels keyed by (n, k0); safe for concurrent readers.
inline std::shared_ptr<const Kernel> jackson_kernel_cached(int n, int k0) {
    static std::mutex mutex;
    static std::map<std::pair<int, int>, std::shared_ptr<const Kernel>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto& slot = cache[{n, k0}];
    if (!slot) slot = std::make_shared<const Kernel>(jackson_kernel(n, k0));
    return slot;
}

namespace detail {

// Composite Simpson of g over [0, pi] with the requested resolution; the
// moment integrands are even, so integrals over [-pi, pi] double this.
template <typename G>
double simpson_half_period(const G& g, int points) {
    int intervals = points;
    if (intervals % 2 != 0) ++intervals;
    const double h = std::numbers::pi / intervals;
    double sum = g(0.0) + g(std::numbers::pi);
    for (int i = 1; i < intervals; ++i) sum += g(i * h) * (i % 2 == 1 ? 4.0 : 2.0);
    return sum * h / 3.0;
}

inline void check_quadrature(const Kernel& kernel, int points) {
    if (points < 16 * kernel.degree())
        throw std::domain_error("kernel moment: need at least 16 * degree quadrature points");
    if (points < 2) throw std::domain_error("kernel moment: need at least 2 quadrature points");
}

}  // namespace detail

// int_{-pi}^{pi} |t|^r |K(t)| dt by composite quadrature.
inline double kernel_moment(const Kernel& kernel, int r, int quadrature_points) {
    if (r < 0) throw std::domain_error("kernel_moment: r must be >= 0");
    detail::check_quadrature(kernel, quadrature_points);
    auto g = [&](double t) { return std::pow(t, r) * std::abs(kernel.evaluate(t)); };
    return 2.0 * detail::simpson_half_period(g, quadrature_points);
}

// int_{-pi}^{pi} (|t| + 1/n)^r |K(t)| dt, the shifted moment.
inline double kernel_moment_shifted(const Kernel& kernel, int r, int n, int quadrature_points) {
    if (r < 0) throw std::domain_error("kernel_moment_shifted: r must be >= 0");
    if (n < 1) throw std::domain_error("kernel_moment_shifted: n must be >= 1");
    detail::check_quadrature(kernel, quadrature_points);
    const double shift = 1.0 / n;
    auto g = [&](double t) { return std::pow(t + shift, r) * std::abs(kernel.evaluate(t)); };
    return 2.0 * detail::simpson_half_period(g, quadrature_points);
}

}  // namespace orlicz_approx
