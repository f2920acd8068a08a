// Walkthrough: build a coefficient sequence, compute its norms and best
// approximations, probe smoothness, and compare against the K-functional.

#include <cstdio>
#include <numbers>

#include "orlicz_approx/orlicz_approx.hpp"

using namespace orlicz_approx;

int main() {
    // A variable-exponent space: p_k tightens away from the origin.
    std::map<int, double> exponents;
    for (int k = -8; k <= 8; ++k) exponents[k] = 1.5 + 0.125 * std::abs(k);
    ExponentWeightPair space(2.0, 1.0, 4.0, exponents, {});

    // f(x) = e^{ix} + 0.5 e^{3ix} + 0.25 e^{-5ix}.
    SpectralFunction f;
    f.set_coeff(1, 1.0);
    f.set_coeff(3, 0.5);
    f.set_coeff(-5, 0.25);

    const double lux = luxemburg_norm(f, space);
    const double orl = orlicz_norm(f, space);
    std::printf("Luxemburg norm : %.12f\n", lux);
    std::printf("Orlicz norm    : %.12f (ratio %.6f)\n", orl, orl / lux);

    std::printf("\nbest approximations\n");
    for (int n = 1; n <= 6; ++n)
        std::printf("  E_%d = %.12f\n", n, best_approximation(f, n, space));

    const FractionalOrder order(1.5);
    std::printf("\nmodulus of smoothness (alpha = 1.5) and K-functional\n");
    DifferenceNormProfile profile(f, order, space);
    for (double delta : {0.05, 0.2, 0.8}) {
        const double omega = profile.evaluate(delta);
        const double k = k_functional(f, order, delta, space);
        std::printf("  delta %.2f: omega = %.9f, K = %.9f, K/omega = %.4f\n", delta, omega, k,
                    k / omega);
    }

    // Near-best polynomial of degree <= 3 via the Jackson kernel.
    const auto sigma = jackson_approximant(f, 4, 1, 1);
    std::printf("\nJackson approximant of degree <= 3: ||f - sigma|| = %.9f (E_4 = %.9f)\n",
                luxemburg_norm(f - sigma, space), best_approximation(f, 4, space));

    save_kernel(*jackson_kernel_cached(3, 1), "jackson_kernel_n3_k1.json");
    std::printf("kernel written to jackson_kernel_n3_k1.json\n");
    return 0;
}
