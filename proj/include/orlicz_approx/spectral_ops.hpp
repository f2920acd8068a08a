#pragma once

// Construction and manipulation of spectral functions: DFT ingestion of
// sample vectors, partial Fourier sums, generalized derivatives, and
// fractional differences (which act on coefficients as multiplication by
// (1 - e^{-ikh})^alpha).

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "fractional.hpp"
#include "psi.hpp"
#include "spectral_function.hpp"

namespace orlicz_approx {

// Fourier coefficients f^(k), |k| <= cutoff, from samples on the uniform grid
// x_j = 2 pi j / N over [0, 2pi).  Normalized so that exact samples of
// e^{i k0 x} give coefficient 1 at k0.
inline SpectralFunction coefficients_from_samples(const std::vector<std::complex<double>>& samples,
                                                  int cutoff) {
    if (cutoff < 0) throw std::domain_error("coefficients_from_samples: cutoff must be >= 0");
    const int n = static_cast<int>(samples.size());
    if (n < 2 * cutoff + 1)
        throw std::domain_error("coefficients_from_samples: need at least 2*cutoff+1 samples");
    SpectralFunction f;
    const double step = 6.283185307179586 / n;
    for (int k = -cutoff; k <= cutoff; ++k) {
        std::complex<double> acc(0.0, 0.0);
        for (int j = 0; j < n; ++j) acc += samples[j] * std::polar(1.0, -k * step * j);
        f.set_coeff(k, acc / static_cast<double>(n));
    }
    return f;
}

// Restriction to |k| <= n-1 (the Fourier sum of order n-1); n = 0 gives 0.
inline SpectralFunction partial_sum(const SpectralFunction& f, int n) {
    if (n < 0) throw std::domain_error("partial_sum: n must be >= 0");
    SpectralFunction out;
    for (const auto& [k, v] : f.coefficients())
        if (std::abs(k) <= n - 1) out.set_coeff(k, v);
    return out;
}

// Generalized derivative: g^(k) = f^(k) / psi_k for k != 0, g^(0) = 0.
inline SpectralFunction psi_derivative(const SpectralFunction& f, const PsiWeights& psi) {
    SpectralFunction out;
    for (const auto& [k, v] : f.coefficients()) {
        if (k == 0) continue;
        out.set_coeff(k, v / psi.value(k));
    }
    return out;
}

// Fractional derivative of order r: psi_k = |k|^{-r}.
inline SpectralFunction fractional_derivative(const SpectralFunction& f, double r) {
    return psi_derivative(f, PsiWeights::power(r));
}

// Coefficients multiplied by (1 - e^{-ikh})^alpha, principal branch.  Exact
// for finite support; the factor vanishes when kh is a multiple of 2 pi.
inline SpectralFunction fractional_difference(const SpectralFunction& f,
                                              const FractionalOrder& order, double h) {
    SpectralFunction out;
    for (const auto& [k, v] : f.coefficients()) {
        const std::complex<double> z = 1.0 - std::polar(1.0, -k * h);
        if (z == std::complex<double>(0.0, 0.0)) continue;
        out.set_coeff(k, std::pow(z, order.alpha) * v);
    }
    return out;
}

}  // namespace orlicz_approx
