#pragma once

// The bundled verification corpus: seeded random sweeps over every theorem
// check, grouped into independent tasks.  Tasks may run concurrently; each
// task owns all of its state, so the verdict values are identical no matter
// how many threads execute them, and the output order is fixed by task order.

#include <atomic>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <string>
#include <thread>
#include <vector>

#include "harness.hpp"
#include "random_families.hpp"

namespace orlicz_approx {

struct SuiteTask {
    std::string group;
    std::function<std::vector<Verdict>()> run;
};

inline std::vector<Verdict> run_suite(const std::vector<SuiteTask>& tasks, int threads) {
    std::vector<std::vector<Verdict>> results(tasks.size());
    threads = std::max(1, std::min<int>(threads, static_cast<int>(tasks.size())));
    if (threads == 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i) results[i] = tasks[i].run();
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&]() {
            for (std::size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1))
                results[i] = tasks[i].run();
        };
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    std::vector<Verdict> flat;
    for (auto& r : results)
        for (auto& v : r) flat.push_back(std::move(v));
    return flat;
}

inline int suite_thread_cap_from_env() {
    if (const char* env = std::getenv("ORLICZ_APPROX_THREADS")) {
        const int cap = std::atoi(env);
        if (cap >= 1) return cap;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

namespace detail {

inline std::string idx(int i) {
    char buf[8];
    std::snprintf(buf, sizeof(buf), "%03d", i);
    return buf;
}

}  // namespace detail

// Builds the default suite.  All randomness is derived from the seed; the
// same seed always produces the same instances and verdict values.
inline std::vector<SuiteTask> build_default_suite(std::uint64_t seed) {
    std::vector<SuiteTask> tasks;

    // Abel-transform identity on integer sequences.
    tasks.push_back({"abel", [seed]() {
        Rng rng(seed ^ 0xA5A5A5A5ull);
        std::vector<Verdict> out;
        for (int i = 0; i < 20; ++i) {
            const int len = rng.uniform_int(6, 40);
            std::vector<double> a(len), c(len);
            for (int j = 0; j < len; ++j) {
                a[j] = rng.uniform_int(-100, 100);
                c[j] = rng.uniform_int(-100, 100);
            }
            const int m = rng.uniform_int(1, len - 2);
            const int M = rng.uniform_int(m, len - 2);
            const int N = rng.uniform_int(M + 1, len - 1);
            const auto [left, right] = abel_transform_sides(a, c, m, M, N);
            out.push_back(Verdict::of("abel/" + detail::idx(i), std::abs(left - right), 0.0,
                                      1e-12 * (1.0 + std::abs(left)),
                                      {{"m", m}, {"M", M}, {"N", N}}));
        }
        return out;
    }});

    // Orlicz/Luxemburg sandwich.
    tasks.push_back({"sandwich", [seed]() {
        Rng rng(seed ^ 0xB6B6B6B6ull);
        NormQuery q;
        q.tolerance = 1e-13;
        std::vector<Verdict> out;
        for (int i = 0; i < 20; ++i) {
            RandomFunctionOptions fo;
            fo.modulus_lo = 0.5;
            fo.modulus_hi = 2.0;
            const auto f = random_function(rng, fo);
            const auto space = random_space(rng);
            const double ratio =
                orlicz_norm(f, space, q) / luxemburg_norm(f, space, q);
            const double worst = std::max(1.0 - ratio, ratio - 2.0);
            out.push_back(Verdict::composite("norm_sandwich/" + detail::idx(i), worst, 1e-8,
                                             {{"ratio", ratio}}));
        }
        return out;
    }});

    // Inverse theorem, exact constant, and the relaxed weighted form.
    for (int fi = 0; fi < 12; ++fi) {
        tasks.push_back({"inverse", [seed, fi]() {
            Rng rng(seed ^ (0xC0FFEEull + 977u * fi));
            RandomFunctionOptions fo;
            fo.max_support = 10;
            fo.max_radius = 12;
            const auto f = random_function(rng, fo);
            const auto space = random_space(rng);
            NormQuery q;
            std::vector<Verdict> out;
            for (double alpha : {0.5, 1.0, 2.0}) {
                for (int n : {1, 2, 4, 8, 16}) {
                    auto v = inverse_theorem_check(f, n, FractionalOrder(alpha), space, {}, q);
                    v.name = "inverse_theorem/f" + detail::idx(fi) + "/a" +
                             std::to_string(alpha).substr(0, 3) + "/n" + std::to_string(n);
                    out.push_back(std::move(v));
                }
            }
            for (double alpha : {1.0, 2.0}) {
                for (int n : {3, 8}) {
                    auto v = inverse_weighted_sum_bound(f, n, FractionalOrder(alpha), space, {}, q);
                    v.name = "inverse_weighted/f" + detail::idx(fi) + "/a" +
                             std::to_string(alpha).substr(0, 3) + "/n" + std::to_string(n);
                    out.push_back(std::move(v));
                }
            }
            return out;
        }});
    }

    // Sharpness of the pi^alpha constant.
    tasks.push_back({"sharpness", []() {
        const auto l2 = ExponentWeightPair::uniform(2.0);
        std::vector<Verdict> out;
        for (int k0 : {1, 2, 3}) {
            for (int n : {4, 64, 1000}) {
                const FractionalOrder one(1.0);
                const double ratio = sharpness_ratio(k0, n, one, l2);
                const double x = k0 * std::numbers::pi / (2.0 * n);
                const double expected = n >= k0 ? std::sin(x) / x : ratio;
                out.push_back(Verdict::of(
                    "sharpness/k" + std::to_string(k0) + "/n" + std::to_string(n),
                    std::abs(ratio - expected), 0.0, 1e-11,
                    {{"ratio", ratio}, {"expected", expected}}));
            }
        }
        // Profile in n: ratio < 1, increasing, crossing 1 - 0.05/pi^alpha.
        for (double alpha : {0.5, 1.0, 2.0}) {
            const FractionalOrder order(alpha);
            const double threshold = 1.0 - 0.05 / std::pow(std::numbers::pi, alpha);
            double prev = 0.0;
            double worst = -1.0;
            int n0 = -1;
            for (int n = 1; n <= 1024; n *= 2) {
                const double ratio = sharpness_ratio(1, n, order, l2);
                worst = std::max(worst, ratio - 1.0);
                worst = std::max(worst, prev - ratio);
                if (n0 < 0 && ratio >= threshold) n0 = n;
                prev = ratio;
            }
            if (n0 < 0) worst = std::max(worst, 1.0);
            out.push_back(Verdict::composite(
                "sharpness_profile/a" + std::to_string(alpha).substr(0, 3), worst, 1e-9,
                {{"alpha", alpha}, {"epsilon", 0.05}, {"n0", n0}}));
        }
        return out;
    }});

    // Generalized Bernstein triple ordering.
    tasks.push_back({"bernstein_triple", [seed]() {
        Rng rng(seed ^ 0xD7D7D7D7ull);
        std::vector<Verdict> out;
        for (int i = 0; i < 30; ++i) {
            RandomFunctionOptions fo;
            fo.max_radius = 8;
            const auto tau = random_function(rng, fo);
            const int n = std::max(1, tau.support_radius());
            const auto space = random_space(rng);
            const double alpha = rng.uniform(0.4, 2.5);
            const double h = rng.uniform(1e-3, 2.0 * std::numbers::pi / n * 0.999);
            const auto [lo, mid, up] = bernstein_difference_bounds(tau, FractionalOrder(alpha), h, n, space);
            const double worst = std::max(lo - mid, mid - up);
            out.push_back(Verdict::composite("bernstein_triple/" + detail::idx(i), worst, 1e-8,
                                             {{"n", n}, {"h", h}, {"alpha", alpha}}));
        }
        return out;
    }});

    // K-functional equivalence.
    for (int fi = 0; fi < 6; ++fi) {
        tasks.push_back({"kfunc", [seed, fi]() {
            Rng rng(seed ^ (0xE8E8ull + 31337u * fi));
            RandomFunctionOptions fo;
            fo.max_support = 6;
            fo.max_radius = 6;
            const auto f = random_function(rng, fo);
            const auto space = random_space(rng);
            const int radius = std::max(1, f.support_radius());
            std::vector<double> deltas;
            for (double s : {0.15, 0.3, 0.5, 0.7, 0.85, 1.0})
                deltas.push_back(s * std::numbers::pi / radius);
            std::vector<Verdict> out;
            for (double alpha : {0.5, 1.0, 2.0}) {
                auto v = k_functional_equivalence_check(f, FractionalOrder(alpha), deltas, space);
                v.name = "kfunc_equivalence/f" + detail::idx(fi) + "/a" +
                         std::to_string(alpha).substr(0, 3);
                out.push_back(std::move(v));
            }
            return out;
        }});
    }

    // Majorant condition (B_alpha) for admissible powers.
    tasks.push_back({"b_alpha", []() {
        std::vector<Verdict> out;
        for (double alpha : {0.5, 1.0, 2.0}) {
            for (double frac : {0.5, 1.0}) {
                auto v = b_alpha_condition_check(MajorantSpec::power(frac * alpha),
                                                 FractionalOrder(alpha), 4096);
                v.name = "b_alpha/a" + std::to_string(alpha).substr(0, 3) + "/r" +
                         std::to_string(frac * alpha).substr(0, 4);
                out.push_back(std::move(v));
            }
        }
        return out;
    }});

    // Class membership for constructed decay and for polynomials.
    tasks.push_back({"class", [seed]() {
        Rng rng(seed ^ 0xF9F9F9F9ull);
        std::vector<Verdict> out;
        const auto space = ExponentWeightPair::uniform(2.0);
        {
            std::vector<double> targets(64);
            for (int n = 1; n <= 64; ++n) targets[n - 1] = std::pow(n, -0.5);
            const auto f = function_with_prescribed_tails(targets, space);
            auto v = class_membership_diagnostic(f, MajorantSpec::power(0.5), FractionalOrder(1.0),
                                                 space, 64);
            v.name = "class_membership/decay_r0.5";
            out.push_back(std::move(v));
        }
        {
            SpectralFunction f;
            f.set_coeff(rng.uniform_int(1, 4), 1.0);
            auto v = class_membership_diagnostic(f, MajorantSpec::power(0.75), FractionalOrder(1.0),
                                                 space, 64);
            v.name = "class_membership/polynomial";
            out.push_back(std::move(v));
        }
        return out;
    }});

    // Decay regimes of the modulus.
    tasks.push_back({"decay_regimes", []() {
        const auto space = ExponentWeightPair::uniform(2.0);
        const FractionalOrder one(1.0);
        SupSearchPolicy cheap;
        cheap.refine_rounds = 8;
        std::vector<Verdict> out;

        const auto below = decay_regime_profile(0.5, one, 1024, space, 24, cheap);
        out.push_back(Verdict::of("decay_regimes/slope_beta0.5",
                                  std::abs(fit_log_slope(below) - 0.5), 0.0, 0.1,
                                  {{"slope", fit_log_slope(below)}}));

        const auto above = decay_regime_profile(2.0, one, 1024, space, 24, cheap);
        out.push_back(Verdict::of("decay_regimes/slope_beta2.0",
                                  std::abs(fit_log_slope(above) - 1.0), 0.0, 0.1,
                                  {{"slope", fit_log_slope(above)}}));

        const auto critical = decay_regime_profile(1.0, one, 1024, space, 24, cheap);
        double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
        for (const auto& [delta, omega] : critical) {
            const double r = omega / (delta * std::abs(std::log(delta)));
            lo = std::min(lo, r);
            hi = std::max(hi, r);
        }
        out.push_back(Verdict::of("decay_regimes/critical_log_ratio", hi, 4.0 * lo, 1e-9,
                                  {{"min_ratio", lo}, {"max_ratio", hi}}));
        return out;
    }});

    return tasks;
}

}  // namespace orlicz_approx
