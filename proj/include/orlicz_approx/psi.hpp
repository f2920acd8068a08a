#pragma once

#include <cmath>
#include <complex>
#include <map>
#include <stdexcept>

namespace orlicz_approx {

// The sequence psi_k defining generalized derivatives: coefficients of the
// derivative are f^(k) / psi_k for k != 0.  Either the canonical power family
// psi_k = |k|^{-r} or an explicit table of nonzero values.  Index 0 is never
// queried; the defining series runs over the nonzero frequencies.
class PsiWeights {
public:
    static PsiWeights power(double r) {
        if (!(r > 0.0)) throw std::invalid_argument("PsiWeights::power: r must be > 0");
        PsiWeights psi;
        psi.is_power_ = true;
        psi.exponent_ = r;
        return psi;
    }

    static PsiWeights table(std::map<int, std::complex<double>> values) {
        for (const auto& [k, v] : values) {
            if (k == 0) throw std::invalid_argument("PsiWeights::table: index 0 not allowed");
            if (v == std::complex<double>(0.0, 0.0))
                throw std::invalid_argument("PsiWeights::table: psi_k must be nonzero");
        }
        PsiWeights psi;
        psi.values_ = std::move(values);
        return psi;
    }

    bool is_power() const noexcept { return is_power_; }
    double power_exponent() const noexcept { return exponent_; }

    std::complex<double> value(int k) const {
        if (k == 0) throw std::domain_error("PsiWeights: psi_0 is not defined");
        if (is_power_) return std::pow(std::abs(static_cast<double>(k)), -exponent_);
        auto it = values_.find(k);
        if (it == values_.end())
            throw std::domain_error("PsiWeights: no value tabulated at k = " + std::to_string(k));
        return it->second;
    }

    double modulus(int k) const { return std::abs(value(k)); }

private:
    PsiWeights() = default;

    bool is_power_ = false;
    double exponent_ = 0.0;
    std::map<int, std::complex<double>> values_;
};

}  // namespace orlicz_approx
