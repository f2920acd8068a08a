#pragma once

#include <cmath>
#include <complex>
#include <cstdlib>
#include <map>

namespace orlicz_approx {

// A finitely supported map k -> complex Fourier coefficient.  Exact zeros are
// pruned so the stored map is the support.  Indices may be any integers.
class SpectralFunction {
public:
    using Coefficients = std::map<int, std::complex<double>>;

    SpectralFunction() = default;

    explicit SpectralFunction(Coefficients coeffs) : coeffs_(std::move(coeffs)) {
        prune();
    }

    std::complex<double> coeff(int k) const {
        auto it = coeffs_.find(k);
        return it == coeffs_.end() ? std::complex<double>(0.0, 0.0) : it->second;
    }

    void set_coeff(int k, std::complex<double> value) {
        if (value == std::complex<double>(0.0, 0.0))
            coeffs_.erase(k);
        else
            coeffs_[k] = value;
    }

    const Coefficients& coefficients() const noexcept { return coeffs_; }
    bool empty() const noexcept { return coeffs_.empty(); }
    std::size_t support_size() const noexcept { return coeffs_.size(); }

    // Largest |k| over the support (0 for the zero function).
    int support_radius() const noexcept {
        int r = 0;
        for (const auto& [k, v] : coeffs_) {
            (void)v;
            r = std::max(r, std::abs(k));
        }
        return r;
    }

    std::complex<double> evaluate(double x) const {
        std::complex<double> s(0.0, 0.0);
        for (const auto& [k, v] : coeffs_) s += v * std::polar(1.0, k * x);
        return s;
    }

    friend SpectralFunction operator+(const SpectralFunction& a, const SpectralFunction& b) {
        Coefficients out = a.coeffs_;
        for (const auto& [k, v] : b.coeffs_) out[k] += v;
        return SpectralFunction(std::move(out));
    }

    friend SpectralFunction operator-(const SpectralFunction& a, const SpectralFunction& b) {
        Coefficients out = a.coeffs_;
        for (const auto& [k, v] : b.coeffs_) out[k] -= v;
        return SpectralFunction(std::move(out));
    }

    friend SpectralFunction operator*(std::complex<double> c, const SpectralFunction& f) {
        Coefficients out;
        for (const auto& [k, v] : f.coeffs_) out[k] = c * v;
        return SpectralFunction(std::move(out));
    }

    // Same support, every coefficient replaced by its modulus.
    SpectralFunction moduli() const {
        Coefficients out;
        for (const auto& [k, v] : coeffs_) out[k] = std::abs(v);
        return SpectralFunction(std::move(out));
    }

private:
    void prune() {
        for (auto it = coeffs_.begin(); it != coeffs_.end();) {
            if (it->second == std::complex<double>(0.0, 0.0))
                it = coeffs_.erase(it);
            else
                ++it;
        }
    }

    Coefficients coeffs_;
};

}  // namespace orlicz_approx
