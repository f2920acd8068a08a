#pragma once

#include <cmath>
#include <stdexcept>

namespace orlicz_approx {

// A positive difference order alpha together with its integer ceiling, the
// smallest positive integer >= alpha.
struct FractionalOrder {
    double alpha;
    int ceil_alpha;

    explicit FractionalOrder(double a) : alpha(a) {
        if (!(a > 0.0) || !std::isfinite(a))
            throw std::invalid_argument("FractionalOrder: alpha must be positive and finite");
        ceil_alpha = static_cast<int>(std::ceil(a));
    }
};

// Generalized binomial coefficient alpha (alpha-1) ... (alpha-j+1) / j!.
inline double binomial_fractional(const FractionalOrder& order, int j) {
    if (j < 0) throw std::domain_error("binomial_fractional: j must be >= 0");
    double b = 1.0;
    for (int i = 1; i <= j; ++i) b *= (order.alpha - (i - 1)) / i;
    return b;
}

// |1 - e^{-ikh}|^alpha = 2^alpha |sin(kh/2)|^alpha, the modulus picked up by
// the k-th coefficient under a fractional difference of step h.
inline double difference_multiplier_modulus(const FractionalOrder& order, int k, double h) {
    const double s = std::abs(std::sin(0.5 * k * h));
    if (s == 0.0) return 0.0;
    return std::pow(2.0 * s, order.alpha);
}

}  // namespace orlicz_approx
