#pragma once

#include <string>
#include <utility>

#include <json.hpp>

namespace orlicz_approx {

// One machine-readable check: an inequality lhs <= rhs + margin together with
// the parameters it was evaluated at.
struct Verdict {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;
    bool passed = false;
    nlohmann::ordered_json parameters = nlohmann::ordered_json::object();

    static Verdict of(std::string name, double lhs, double rhs, double margin,
                      nlohmann::ordered_json parameters = nlohmann::ordered_json::object()) {
        Verdict v;
        v.name = std::move(name);
        v.lhs = lhs;
        v.rhs = rhs;
        v.margin = margin;
        v.passed = lhs <= rhs + margin;
        v.parameters = std::move(parameters);
        return v;
    }

    // For checks that are a conjunction of conditions: lhs is the worst
    // violation max_i (lhs_i - rhs_i) over the sub-checks, rhs is 0, and the
    // pass rule is the same inequality as everywhere else.
    static Verdict composite(std::string name, double worst_violation, double margin,
                             nlohmann::ordered_json parameters = nlohmann::ordered_json::object()) {
        return of(std::move(name), worst_violation, 0.0, margin, std::move(parameters));
    }
};

}  // namespace orlicz_approx
