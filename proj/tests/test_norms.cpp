#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>

#include "orlicz_approx/norms.hpp"
#include "orlicz_approx/random_families.hpp"

using namespace orlicz_approx;
using Catch::Approx;

namespace {

SpectralFunction make(std::initializer_list<std::pair<int, std::complex<double>>> cs) {
    SpectralFunction f;
    for (const auto& [k, v] : cs) f.set_coeff(k, v);
    return f;
}

// Independent oracle: plain bisection on the modular sum, no shared code with
// the production solver.
double bisection_oracle(const SpectralFunction& f, const ExponentWeightPair& space,
                        double tol = 1e-13) {
    double lo = 1e-9, hi = 1.0;
    while (modular_sum(f, space, hi) > 1.0) hi *= 2.0;
    while (modular_sum(f, space, lo) < 1.0) lo *= 0.5;
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        (modular_sum(f, space, mid) > 1.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double lp_norm(const SpectralFunction& f, double p) {
    double s = 0.0;
    for (const auto& [k, v] : f.coefficients()) {
        (void)k;
        s += std::pow(std::abs(v), p);
    }
    return std::pow(s, 1.0 / p);
}

}  // namespace

TEST_CASE("modular_sum basics") {
    const auto space = ExponentWeightPair::uniform(2.0);
    CHECK(modular_sum(make({{0, 1.0}}), space, 1.0) == Approx(1.0));
    CHECK(modular_sum(SpectralFunction{}, space, 1.0) == 0.0);
    CHECK_THROWS_AS(modular_sum(make({{0, 1.0}}), space, 0.0), std::domain_error);
    CHECK_THROWS_AS(modular_sum(make({{0, 1.0}}), space, -2.0), std::domain_error);
}

TEST_CASE("modular_sum mixed exponents hits 1 at the analytic scale") {
    // p_0 = 2, p_1 = 4: a^-2 + a^-4 = 1 at a = sqrt((1 + sqrt 5)/2).
    ExponentWeightPair space(2.0, 1.0, 4.0, {{1, 4.0}}, {});
    const double a = std::sqrt((1.0 + std::sqrt(5.0)) / 2.0);
    CHECK(modular_sum(make({{0, 1.0}, {1, 1.0}}), space, a) == Approx(1.0).margin(1e-14));
}

TEST_CASE("modular_sum strictly decreasing in a") {
    Rng rng(101);
    for (int trial = 0; trial < 20; ++trial) {
        const auto f = random_function(rng);
        const auto space = random_space(rng);
        if (modular_sum(f, space, 1.0) == 0.0) continue;
        double prev = modular_sum(f, space, 0.5);
        for (double a : {0.75, 1.0, 1.5, 2.5}) {
            const double cur = modular_sum(f, space, a);
            CHECK(cur < prev);
            prev = cur;
        }
    }
}

TEST_CASE("luxemburg_norm pinned values") {
    const auto space = ExponentWeightPair::uniform(2.0);
    CHECK(luxemburg_norm(SpectralFunction{}, space) == 0.0);
    CHECK(luxemburg_norm(make({{5, 1.0}}), ExponentWeightPair::uniform(3.5)) == 1.0);

    // Variable exponents: root of a^4 - a^2 - 1 = 0.
    ExponentWeightPair mixed(2.0, 1.0, 4.0, {{1, 4.0}}, {});
    const auto f = make({{0, 1.0}, {1, 1.0}});
    const double expected = std::sqrt((1.0 + std::sqrt(5.0)) / 2.0);
    CHECK(luxemburg_norm(f, mixed) == Approx(expected).margin(1e-11));
    CHECK(luxemburg_norm(f, mixed) == Approx(bisection_oracle(f, mixed)).margin(1e-11));

    // Constant exponent collapses to the classical l_2 norm.
    CHECK(luxemburg_norm(f, space) == Approx(std::sqrt(2.0)).margin(1e-11));
}

TEST_CASE("luxemburg_norm agrees with the bisection oracle on random instances") {
    Rng rng(202);
    for (int trial = 0; trial < 50; ++trial) {
        const auto f = random_function(rng);
        const auto space = random_space(rng);
        CHECK(luxemburg_norm(f, space) ==
              Approx(bisection_oracle(f, space)).margin(5e-11));
    }
}

TEST_CASE("luxemburg_norm convergence error carries the bracket") {
    ExponentWeightPair mixed(2.0, 1.0, 4.0, {{1, 4.0}}, {});
    const auto f = make({{0, 1.0}, {1, 1.0}});
    NormQuery strict;
    strict.tolerance = 1e-12;
    strict.max_iterations = 1;
    try {
        luxemburg_norm(f, mixed, strict);
        FAIL("expected ConvergenceError");
    } catch (const ConvergenceError& e) {
        CHECK(e.bracket_lo() > 0.0);
        CHECK(e.bracket_hi() >= e.bracket_lo());
        CHECK(e.iterations() >= 1);
    }
}

TEST_CASE("zero weights are ignored entirely") {
    ExponentWeightPair space(2.0, 1.0, 2.0, {}, {{7, 0.0}});
    const auto f = make({{7, 123.0}, {0, 1.0}});
    CHECK(luxemburg_norm(f, space) == Approx(1.0));
    const auto only_dead = make({{7, 123.0}});
    CHECK(luxemburg_norm(only_dead, space) == 0.0);
    CHECK(orlicz_norm(only_dead, space) == 0.0);
}

TEST_CASE("dual_exponents arithmetic") {
    CHECK(dual_exponents(ExponentWeightPair::uniform(2.0)).default_exponent() == Approx(2.0));
    ExponentWeightPair s4(4.0, 1.0, 4.0);
    CHECK(dual_exponents(s4).default_exponent() == Approx(4.0 / 3.0));
    ExponentWeightPair s125(1.25, 1.0, 4.0);
    CHECK(dual_exponents(s125).default_exponent() == Approx(5.0));

    // Involution and weight preservation.
    Rng rng(303);
    const auto space = random_space(rng);
    const auto back = dual_exponents(dual_exponents(space));
    for (int k = -4; k <= 4; ++k) {
        CHECK(back.exponent(k) == Approx(space.exponent(k)));
        CHECK(back.weight(k) == space.weight(k));
    }
}

TEST_CASE("orlicz_norm pinned values and 2-d sphere oracle") {
    const auto space = ExponentWeightPair::uniform(2.0);
    CHECK(orlicz_norm(SpectralFunction{}, space) == 0.0);

    const auto f = make({{0, 1.0}, {1, 1.0}});
    // Dense grid over the constraint sphere lambda_1^2 + lambda_2^2 = 1.
    double best = 0.0;
    const int grid = 200000;
    for (int i = 0; i <= grid; ++i) {
        const double l1 = static_cast<double>(i) / grid;
        const double l2 = std::sqrt(std::max(0.0, 1.0 - l1 * l1));
        best = std::max(best, l1 + l2);
    }
    CHECK(orlicz_norm(f, space) == Approx(best).margin(1e-9));
    CHECK(orlicz_norm(f, space) == Approx(std::sqrt(2.0)).margin(1e-10));
}

TEST_CASE("constant-exponent collapse: both norms equal the classical l_p norm") {
    Rng rng(404);
    for (double p : {1.5, 2.0, 3.0}) {
        const auto space = ExponentWeightPair::uniform(p);
        for (int trial = 0; trial < 25; ++trial) {
            const auto f = random_function(rng);
            const double reference = lp_norm(f, p);
            CHECK(luxemburg_norm(f, space) == Approx(reference).epsilon(1e-10));
            CHECK(orlicz_norm(f, space) == Approx(reference).epsilon(1e-10));
        }
    }
}

TEST_CASE("Luxemburg norm properties") {
    Rng rng(505);
    NormQuery q;
    for (int trial = 0; trial < 40; ++trial) {
        const auto f = random_function(rng);
        const auto g = random_function(rng);
        const auto space = random_space(rng);
        const double nf = luxemburg_norm(f, space, q);
        const double ng = luxemburg_norm(g, space, q);

        {
            // Homogeneity.
            const std::complex<double> c = rng.coefficient(0.3, 2.5);
            CHECK(luxemburg_norm(c * f, space, q) ==
                  Approx(std::abs(c) * nf).margin(2.0 * q.tolerance * (1.0 + std::abs(c))));

            // Triangle inequality.
            CHECK(luxemburg_norm(f + g, space, q) <= nf + ng + 2.0 * q.tolerance);

            // Monotonicity in coefficient moduli: g shrunk onto f's support.
            SpectralFunction shrunk;
            for (const auto& [k, v] : f.coefficients())
                shrunk.set_coeff(k, v * rng.uniform(0.0, 1.0));
            CHECK(luxemburg_norm(shrunk, space, q) <= nf + q.tolerance);

            // Phase invariance: both norms depend on moduli only.
            CHECK(luxemburg_norm(f.moduli(), space, q) == nf);
            CHECK(orlicz_norm(f.moduli(), space, q) == orlicz_norm(f, space, q));

            // The modular sum is 1 at the returned norm.
            if (nf > 0.0)
                CHECK(modular_sum(f, space, nf) == Approx(1.0).margin(1e-8));
        }
    }
}

TEST_CASE("Orlicz/Luxemburg sandwich on variable-exponent instances") {
    Rng rng(606);
    NormQuery q;
    q.tolerance = 1e-13;
    const double eps = 10.0 * q.tolerance;
    double max_ratio = 0.0;
    for (int trial = 0; trial < 60; ++trial) {
        RandomFunctionOptions fo;
        fo.modulus_lo = 0.5;
        fo.modulus_hi = 2.0;
        const auto f = random_function(rng, fo);
        const auto space = random_space(rng);
        const double lux = luxemburg_norm(f, space, q);
        const double orl = orlicz_norm(f, space, q);
        REQUIRE(lux > 0.0);
        const double ratio = orl / lux;
        CHECK(ratio >= 1.0 - eps);
        CHECK(ratio <= 2.0 + eps);
        max_ratio = std::max(max_ratio, ratio);
    }
    // The equivalence constants are attained away from 1 under variable p.
    CHECK(max_ratio >= 1.1);
}

TEST_CASE("norms survive extreme coefficient magnitudes") {
    const auto space = ExponentWeightPair::uniform(2.0);
    for (double scale : {1e-200, 1e-10, 1e10, 1e200}) {
        const auto f = make({{0, scale}, {1, scale}});
        CHECK(luxemburg_norm(f, space, NormQuery(1e-12 * scale, 200)) ==
              Approx(scale * std::sqrt(2.0)).epsilon(1e-9));
        CHECK(orlicz_norm(f, space, NormQuery(1e-12 * scale, 200)) ==
              Approx(scale * std::sqrt(2.0)).epsilon(1e-9));
    }
}

TEST_CASE("orlicz_norm convergence error carries the bracket") {
    ExponentWeightPair mixed(2.0, 1.0, 4.0, {{1, 4.0}}, {});
    const auto f = make({{0, 1.0}, {1, 1.0}});
    NormQuery strict;
    strict.tolerance = 1e-12;
    strict.max_iterations = 1;
    try {
        orlicz_norm(f, mixed, strict);
        FAIL("expected ConvergenceError");
    } catch (const ConvergenceError& e) {
        CHECK(e.iterations() >= 1);
    }
}

TEST_CASE("space invariants are enforced at construction") {
    CHECK_THROWS_AS(ExponentWeightPair(1.0, 1.0, 4.0), std::invalid_argument);
    CHECK_THROWS_AS(ExponentWeightPair(0.5, 1.0, 4.0), std::invalid_argument);
    CHECK_THROWS_AS(ExponentWeightPair(5.0, 1.0, 4.0), std::invalid_argument);
    CHECK_THROWS_AS(ExponentWeightPair(2.0, -1.0, 4.0), std::invalid_argument);
    CHECK_THROWS_AS(ExponentWeightPair(2.0, 1.0, 4.0, {{0, 1.0}}, {}), std::invalid_argument);
    CHECK_THROWS_AS(ExponentWeightPair(2.0, 1.0, 4.0, {}, {{0, -0.25}}), std::invalid_argument);
    CHECK_THROWS_AS(NormQuery(0.0, 10), std::invalid_argument);
    CHECK_THROWS_AS(NormQuery(1e-9, 0), std::invalid_argument);
}
