#pragma once

// Seeded generators for the randomized sweeps.  std::mt19937_64 is the
// engine, but the value distributions are written out explicitly so a given
// seed produces the same instances on every platform and standard library.

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

#include "space.hpp"
#include "spectral_function.hpp"

namespace orlicz_approx {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Uniform in [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Uniform integer in [lo, hi].
    int uniform_int(int lo, int hi) {
        return lo + static_cast<int>(uniform() * (static_cast<double>(hi) - lo + 1.0));
    }

    std::complex<double> coefficient(double mod_lo, double mod_hi) {
        const double r = uniform(mod_lo, mod_hi);
        const double phi = uniform(0.0, 6.283185307179586);
        return std::polar(r, phi);
    }

    std::uint64_t raw() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

struct RandomFunctionOptions {
    int max_support = 16;      // number of nonzero coefficients
    int max_radius = 16;       // indices drawn from [-max_radius, max_radius]
    double modulus_lo = 0.25;
    double modulus_hi = 1.25;
    bool allow_zero_index = true;
};

inline SpectralFunction random_function(Rng& rng, const RandomFunctionOptions& opt = {}) {
    SpectralFunction f;
    const int count = rng.uniform_int(1, opt.max_support);
    for (int i = 0; i < count; ++i) {
        int k = rng.uniform_int(-opt.max_radius, opt.max_radius);
        if (!opt.allow_zero_index && k == 0) k = 1;
        f.set_coeff(k, rng.coefficient(opt.modulus_lo, opt.modulus_hi));
    }
    return f;
}

struct RandomSpaceOptions {
    double p_lo = 1.0;   // exclusive
    double p_hi = 4.0;
    double mu_lo = 0.25;
    double mu_hi = 2.0;
    int radius = 48;     // indices with explicit entries
    bool log_uniform_p = true;
};

// Space with per-index exponents in (p_lo, p_hi] and weights in [mu_lo, mu_hi].
// Log-uniform exponents put real mass near the lower endpoint, where the
// Orlicz/Luxemburg ratio is farthest from 1.
inline ExponentWeightPair random_space(Rng& rng, const RandomSpaceOptions& opt = {}) {
    std::map<int, double> p, mu;
    for (int k = -opt.radius; k <= opt.radius; ++k) {
        double pk;
        if (opt.log_uniform_p) {
            const double span = std::log(opt.p_hi - opt.p_lo) - std::log(1e-3);
            pk = opt.p_lo + 1e-3 * std::exp(rng.uniform() * span);
            if (pk > opt.p_hi) pk = opt.p_hi;
        } else {
            pk = rng.uniform(opt.p_lo + 1e-6, opt.p_hi);
        }
        p[k] = pk;
        mu[k] = rng.uniform(opt.mu_lo, opt.mu_hi);
    }
    const double default_p = 2.0;
    return ExponentWeightPair(default_p, 1.0, opt.p_hi, std::move(p), std::move(mu));
}

}  // namespace orlicz_approx
