#pragma once

#include <stdexcept>
#include <string>

namespace orlicz_approx {

// Thrown when an iterative solve runs out of iterations before reaching the
// requested tolerance.  Carries the last certified bracket so callers can
// inspect how far the solve got.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double bracket_lo, double bracket_hi,
                     int iterations)
        : std::runtime_error(what + " (bracket [" + std::to_string(bracket_lo) + ", " +
                             std::to_string(bracket_hi) + "] after " +
                             std::to_string(iterations) + " iterations)"),
          bracket_lo_(bracket_lo),
          bracket_hi_(bracket_hi),
          iterations_(iterations) {}

    double bracket_lo() const noexcept { return bracket_lo_; }
    double bracket_hi() const noexcept { return bracket_hi_; }
    int iterations() const noexcept { return iterations_; }

private:
    double bracket_lo_;
    double bracket_hi_;
    int iterations_;
};

}  // namespace orlicz_approx
