#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <numbers>

#include "orlicz_approx/approx.hpp"
#include "orlicz_approx/random_families.hpp"

using namespace orlicz_approx;
using Catch::Approx;
using std::numbers::pi;

namespace {

SpectralFunction make(std::initializer_list<std::pair<int, std::complex<double>>> cs) {
    SpectralFunction f;
    for (const auto& [k, v] : cs) f.set_coeff(k, v);
    return f;
}

const auto l2 = ExponentWeightPair::uniform(2.0);

// The defining formula b_p (sin(pt/2)/sin(t/2))^{2k0}, for quadrature oracles.
double jackson_formula(double t, int p, int k0, double b_p) {
    const double denom = std::sin(0.5 * t);
    double ratio;
    if (std::abs(denom) < 1e-9)
        ratio = p;  // removable singularity
    else
        ratio = std::sin(0.5 * p * t) / denom;
    return b_p * std::pow(ratio, 2 * k0);
}

}  // namespace

TEST_CASE("best_approximation tail norms") {
    const auto f = make({{5, 1.0}});
    for (int n = 1; n <= 5; ++n) CHECK(best_approximation(f, n, l2) == 1.0);
    for (int n = 6; n <= 9; ++n) CHECK(best_approximation(f, n, l2) == 0.0);

    CHECK(best_approximation(make({{-2, 1.0}, {1, 0.5}}), 3, l2) == 0.0);

    const auto g = make({{1, 1.0}, {-1, 1.0}, {2, 0.5}, {-2, 0.5}});
    CHECK(best_approximation(g, 2, l2) == Approx(std::sqrt(0.5)).margin(1e-12));

    CHECK_THROWS_AS(best_approximation(g, 0, l2), std::domain_error);
}

TEST_CASE("E_n is nonincreasing and reaches zero past the support radius") {
    Rng rng(1011);
    for (int trial = 0; trial < 10; ++trial) {
        const auto f = random_function(rng);
        const auto space = random_space(rng);
        double prev = std::numeric_limits<double>::infinity();
        for (int n = 1; n <= f.support_radius() + 1; ++n) {
            const double en = best_approximation(f, n, space);
            CHECK(en <= prev + 1e-12);
            prev = en;
        }
        CHECK(best_approximation(f, f.support_radius() + 1, space) == 0.0);
    }
}

TEST_CASE("psi-derivative bound on the tail") {
    // Single harmonic at k0 = n: the bound is attained.
    for (int n : {1, 2, 5}) {
        const auto [lhs, rhs] = best_approx_by_psi_derivative_bound(
            make({{n, 2.0}}), PsiWeights::power(1.5), n, l2);
        CHECK(lhs == Approx(rhs).epsilon(1e-12));
        CHECK(lhs == Approx(2.0));
    }

    // Empty tail.
    const auto [z1, z2] =
        best_approx_by_psi_derivative_bound(make({{1, 1.0}}), PsiWeights::power(1.0), 2, l2);
    CHECK(z1 == 0.0);
    CHECK(z2 == 0.0);

    // Frozen two-shell instance: eps_3 = 1/3, E_3(f) = sqrt 2, E_3(f') = sqrt 50.
    const auto f = make({{2, 1.0}, {-2, 1.0}, {5, 1.0}, {-5, 1.0}});
    const auto [lhs, rhs] =
        best_approx_by_psi_derivative_bound(f, PsiWeights::power(1.0), 3, l2);
    CHECK(lhs == Approx(std::sqrt(2.0)).margin(1e-12));
    CHECK(rhs == Approx(std::sqrt(50.0) / 3.0).margin(1e-10));
    CHECK(lhs <= rhs + 1e-12);

    Rng rng(1022);
    for (int trial = 0; trial < 20; ++trial) {
        const auto g = random_function(rng);
        const auto space = random_space(rng);
        const double r = rng.uniform(0.25, 2.0);
        const int n = rng.uniform_int(1, 12);
        const auto [a, b] =
            best_approx_by_psi_derivative_bound(g, PsiWeights::power(r), n, space);
        CHECK(a <= b + 1e-9);
    }
}

TEST_CASE("Bernstein bounds for polynomial derivatives") {
    // Single harmonic at |k| = n: equality.
    for (int n : {1, 3, 6}) {
        const auto [lhs, rhs] =
            bernstein_psi_bound(make({{n, 1.5}}), PsiWeights::power(2.0), n, l2);
        CHECK(lhs == Approx(rhs).epsilon(1e-12));
        CHECK(lhs == Approx(1.5 * std::pow(n, 2.0)).epsilon(1e-12));
    }

    // Constant: derivative vanishes, bound stays finite.
    const auto [z, fin] = bernstein_psi_bound(make({{0, 4.0}}), PsiWeights::power(1.0), 2, l2);
    CHECK(z == 0.0);
    CHECK(fin == Approx(4.0 * 2.0));

    // Frozen: tau = e^{ix}+e^{-ix}+e^{3ix}+e^{-3ix}, r = 1, n = 3.
    const auto tau = make({{1, 1.0}, {-1, 1.0}, {3, 1.0}, {-3, 1.0}});
    const auto [lhs, rhs] = bernstein_psi_bound(tau, PsiWeights::power(1.0), 3, l2);
    CHECK(lhs == Approx(std::sqrt(20.0)).margin(1e-10));
    CHECK(rhs == Approx(6.0).margin(1e-10));
    CHECK(lhs <= rhs);

    CHECK_THROWS_AS(bernstein_psi_bound(make({{4, 1.0}}), PsiWeights::power(1.0), 3, l2),
                    std::domain_error);

    Rng rng(1033);
    for (int trial = 0; trial < 20; ++trial) {
        RandomFunctionOptions opt;
        opt.max_radius = 10;
        const auto g = random_function(rng, opt);
        const int n = std::max(1, g.support_radius());
        const auto space = random_space(rng);
        const double r = rng.uniform(0.25, 2.0);
        const auto [a, b] = bernstein_psi_bound(g, PsiWeights::power(r), n, space);
        CHECK(a <= b + 1e-9);
    }
}

TEST_CASE("jackson_kernel: Fejer case and structure") {
    const auto k = jackson_kernel(2, 1);   // block p = 2
    CHECK(k.degree() == 1);
    CHECK(2.0 * pi * k.coefficient(0) == Approx(1.0).margin(1e-14));
    CHECK(k.coefficient(1) == Approx(0.5 * k.coefficient(0)));
    CHECK(k.coefficient(-1) == k.coefficient(1));
    CHECK(k.coefficient(2) == 0.0);

    CHECK_THROWS_AS(jackson_kernel(4, 0), std::domain_error);
}

TEST_CASE("jackson_kernel matches quadrature of the defining formula") {
    for (auto [n, k0] : std::vector<std::pair<int, int>>{{2, 1}, {8, 2}, {13, 2}, {16, 3}}) {
        const auto kernel = jackson_kernel(n, k0);
        const int p = n / (2 * k0) + 1;
        CHECK(kernel.degree() == k0 * (p - 1));
        CHECK(kernel.degree() <= std::max(1, n));
        CHECK(2.0 * pi * kernel.coefficient(0) == Approx(1.0).margin(1e-13));

        // Oracle: c_l = (1/pi) int_0^pi K(t) cos(lt) dt by fine Simpson.
        // Two indices beyond the stored degree confirm the true kernel has
        // no further harmonics.
        const double b_p = kernel.normalization();
        for (int l = 0; l <= kernel.degree() + 2; ++l) {
            const int steps = 1 << 14;
            double acc = 0.0;
            for (int i = 0; i <= steps; ++i) {
                const double t = pi * i / steps;
                const double w = (i == 0 || i == steps) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
                acc += w * jackson_formula(t, p, k0, b_p) * std::cos(l * t);
            }
            acc *= (pi / steps) / 3.0 / pi;
            CHECK(kernel.coefficient(l) == Approx(acc).margin(1e-10));
        }

        // Even power: nonnegative on a dense grid.
        for (int i = 0; i <= 2000; ++i)
            CHECK(kernel.evaluate(-pi + 2.0 * pi * i / 2000) >= -1e-10);
    }
}

TEST_CASE("kernel cache returns shared instances") {
    const auto a = jackson_kernel_cached(12, 2);
    const auto b = jackson_kernel_cached(12, 2);
    CHECK(a.get() == b.get());
    CHECK(jackson_kernel_cached(12, 3).get() != a.get());
}

TEST_CASE("kernel moments") {
    const auto kernel = jackson_kernel(8, 2);
    CHECK(kernel_moment(kernel, 0, 1 << 12) == Approx(1.0).margin(1e-9));
    CHECK_THROWS_AS(kernel_moment(kernel, 0, 8), std::domain_error);

    // Frozen against a much finer quadrature oracle.
    const double fine = kernel_moment(kernel, 1, 1 << 16);
    CHECK(kernel_moment(kernel, 1, 1 << 12) == Approx(fine).epsilon(1e-9));

    // Moment decay: (n+1)^r * moment stays bounded for r <= 2 k0 - 2.
    for (int r = 0; r <= 2; ++r) {
        double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
        for (int n = 4; n <= 128; n *= 2) {
            const auto kn = jackson_kernel(n, 2);
            const double scaled =
                kernel_moment(kn, r, std::max(1 << 10, 16 * kn.degree())) * std::pow(n + 1, r);
            lo = std::min(lo, scaled);
            hi = std::max(hi, scaled);
        }
        CHECK(hi / lo < 8.0);
    }

    // Shifted moment dominates the plain one and scales the same way.
    const double shifted = kernel_moment_shifted(kernel, 2, 8, 1 << 12);
    CHECK(shifted >= kernel_moment(kernel, 2, 1 << 12));
}

TEST_CASE("jackson_approximant basics") {
    // Constants are reproduced exactly.
    const auto sigma0 = jackson_approximant(make({{0, 3.25}}), 4, 2, 2);
    CHECK(sigma0.support_size() == 1);
    CHECK(sigma0.coeff(0) == std::complex<double>(3.25, 0.0));

    Rng rng(1044);
    for (int trial = 0; trial < 8; ++trial) {
        RandomFunctionOptions opt;
        opt.max_radius = 12;
        const auto f = random_function(rng, opt);
        const auto space = random_space(rng);
        const int n = rng.uniform_int(2, 10);
        const int alpha = rng.uniform_int(1, 2);
        const auto sigma = jackson_approximant(f, n, alpha, alpha + 1);

        // sigma is a genuine polynomial of degree <= n - 1.
        CHECK(sigma.support_radius() <= n - 1);

        // E_n is an infimum over a superset of {sigma}.
        const double en = best_approximation(f, n, space);
        const double dist = luxemburg_norm(f - sigma, space);
        CHECK(en <= dist + 1e-9);
    }
}

TEST_CASE("direct chain: ||f - sigma|| <= 2 int |K| omega") {
    Rng rng(1055);
    for (int trial = 0; trial < 6; ++trial) {
        RandomFunctionOptions opt;
        opt.max_radius = 10;
        const auto f = random_function(rng, opt);
        const auto space = random_space(rng);
        const int n = rng.uniform_int(2, 12);
        const int alpha = rng.uniform_int(1, 2);
        const int k0 = alpha + 1;
        const auto sigma = jackson_approximant(f, n, alpha, k0);
        const double dist = luxemburg_norm(f - sigma, space);

        const auto kernel = jackson_kernel_cached(n - 1, k0);
        SupSearchPolicy cheap;
        cheap.refine_rounds = 0;
        DifferenceNormProfile profile(f, FractionalOrder(alpha), space, cheap);
        const double bound = 2.0 * modulus_kernel_integral(
                                       *kernel, profile,
                                       std::max(512, 32 * (kernel->degree() + 1)));
        CHECK(dist <= bound * (1.0 + 1e-9) + 1e-12);
    }
}

TEST_CASE("bernstein_difference_bounds ordering and closed forms") {
    const auto triple = bernstein_difference_bounds(make({{1, 1.0}}), FractionalOrder(1.0), pi, 1, l2);
    CHECK(std::get<0>(triple) == Approx(2.0).margin(1e-13));
    CHECK(std::get<1>(triple) == Approx(2.0).margin(1e-13));
    CHECK(std::get<2>(triple) == Approx(pi).margin(1e-13));

    // h -> 0: everything vanishes.
    const auto small = bernstein_difference_bounds(make({{3, 1.0}}), FractionalOrder(1.0), 1e-9, 3, l2);
    CHECK(std::get<0>(small) < 1e-8);
    CHECK(std::get<1>(small) < 1e-8);
    CHECK(std::get<2>(small) < 1e-8);

    CHECK_THROWS_AS(bernstein_difference_bounds(make({{1, 1.0}}), FractionalOrder(1.0), 7.0, 1, l2),
                    std::domain_error);
    CHECK_THROWS_AS(bernstein_difference_bounds(make({{3, 1.0}}), FractionalOrder(1.0), 0.1, 2, l2),
                    std::domain_error);

    Rng rng(1066);
    for (int trial = 0; trial < 25; ++trial) {
        RandomFunctionOptions opt;
        opt.max_radius = 8;
        const auto tau = random_function(rng, opt);
        const int n = std::max(1, tau.support_radius());
        const auto space = random_space(rng);
        const double alpha = rng.uniform(0.4, 2.5);
        const double h = rng.uniform(1e-3, 2.0 * pi / n * 0.999);
        const auto [lo, mid, up] = bernstein_difference_bounds(tau, FractionalOrder(alpha), h, n, space);
        CHECK(lo <= mid + 1e-8);
        CHECK(mid <= up + 1e-8);
    }
}
