#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

namespace orlicz_approx {

// A majorant omega(t) on [0, 1]: continuous, nondecreasing, positive on
// (0, 1], omega(0+) = 0.  Either the power family t^r (r > 0) or a tabulated
// function, validated pointwise and evaluated by linear interpolation.
class MajorantSpec {
public:
    static MajorantSpec power(double r) {
        if (!(r > 0.0)) throw std::invalid_argument("MajorantSpec::power: r must be > 0");
        MajorantSpec m;
        m.is_power_ = true;
        m.exponent_ = r;
        return m;
    }

    static MajorantSpec tabulated(std::vector<std::pair<double, double>> points) {
        if (points.size() < 2)
            throw std::invalid_argument("MajorantSpec::tabulated: need at least two points");
        std::sort(points.begin(), points.end());
        if (points.front().first != 0.0 || points.front().second != 0.0)
            throw std::invalid_argument("MajorantSpec::tabulated: must start at (0, 0)");
        if (points.back().first > 1.0)
            throw std::invalid_argument("MajorantSpec::tabulated: abscissae must lie in [0, 1]");
        for (std::size_t i = 1; i < points.size(); ++i) {
            if (points[i].first <= points[i - 1].first)
                throw std::invalid_argument("MajorantSpec::tabulated: abscissae must increase");
            if (points[i].second < points[i - 1].second)
                throw std::invalid_argument("MajorantSpec::tabulated: values must be nondecreasing");
            if (!(points[i].second > 0.0))
                throw std::invalid_argument("MajorantSpec::tabulated: values must be > 0 off 0");
        }
        MajorantSpec m;
        m.points_ = std::move(points);
        return m;
    }

    bool is_power() const noexcept { return is_power_; }
    double power_exponent() const noexcept { return exponent_; }

    double operator()(double t) const {
        if (!(t >= 0.0)) throw std::domain_error("MajorantSpec: t must be >= 0");
        if (is_power_) return std::pow(t, exponent_);
        if (t > points_.back().first)
            throw std::domain_error("MajorantSpec: t beyond the tabulated range");
        auto hi = std::lower_bound(points_.begin(), points_.end(), std::make_pair(t, -1.0));
        if (hi == points_.begin()) return 0.0;
        if (hi == points_.end() || hi->first != t) {
            auto lo = std::prev(hi);
            if (hi == points_.end()) return points_.back().second;
            const double s = (t - lo->first) / (hi->first - lo->first);
            return lo->second + s * (hi->second - lo->second);
        }
        return hi->second;
    }

private:
    MajorantSpec() = default;

    bool is_power_ = false;
    double exponent_ = 0.0;
    std::vector<std::pair<double, double>> points_;
};

}  // namespace orlicz_approx
