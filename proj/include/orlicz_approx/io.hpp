#pragma once

// File formats:
//   spectral function  {"coeffs": [[k, re, im], ...]}
//   space              {"default_p": x, "default_mu": y, "bound_K": z,
//                       "p": [[k, val], ...], "mu": [[k, val], ...]}
//   samples            [[re, im], ...]   (uniform grid over [0, 2 pi))
//   kernel             {"degree": d, "coeffs": [[l, val], ...]}
//   verdicts           JSON array of records; CSV summary
//                      name,lhs,rhs,margin,passed with 17 significant digits.

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "kernels.hpp"
#include "space.hpp"
#include "spectral_function.hpp"
#include "verdict.hpp"

namespace orlicz_approx {

// Malformed input file: carries the path and the parser/field context.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& path, const std::string& context)
        : std::runtime_error(path + ": " + context) {}
};

namespace detail {

inline nlohmann::json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path, "cannot open file");
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(path, e.what());
    }
}

inline void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError(path, "cannot open file for writing");
    out << text;
}

inline std::string digits17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

}  // namespace detail

inline SpectralFunction load_spectral_function(const std::string& path) {
    const auto j = detail::load_json(path);
    if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array())
        throw ParseError(path, "expected an object with a \"coeffs\" array");
    SpectralFunction f;
    int index = 0;
    for (const auto& row : j["coeffs"]) {
        if (!row.is_array() || row.size() != 3 || !row[0].is_number_integer() ||
            !row[1].is_number() || !row[2].is_number())
            throw ParseError(path, "coeffs[" + std::to_string(index) + "]: expected [k, re, im]");
        const int k = row[0].get<int>();
        if (f.coeff(k) != std::complex<double>(0.0, 0.0))
            throw ParseError(path, "coeffs[" + std::to_string(index) + "]: duplicate index " +
                                       std::to_string(k));
        f.set_coeff(k, {row[1].get<double>(), row[2].get<double>()});
        ++index;
    }
    return f;
}

inline void save_spectral_function(const SpectralFunction& f, const std::string& path) {
    nlohmann::ordered_json j;
    j["coeffs"] = nlohmann::json::array();
    for (const auto& [k, v] : f.coefficients())
        j["coeffs"].push_back({k, v.real(), v.imag()});
    detail::write_text(path, j.dump(2) + "\n");
}

inline ExponentWeightPair load_space(const std::string& path) {
    const auto j = detail::load_json(path);
    for (const char* field : {"default_p", "default_mu", "bound_K"})
        if (!j.contains(field) || !j[field].is_number())
            throw ParseError(path, std::string("missing or non-numeric field \"") + field + "\"");
    std::map<int, double> p, mu;
    for (const char* field : {"p", "mu"}) {
        if (!j.contains(field)) continue;
        if (!j[field].is_array()) throw ParseError(path, std::string(field) + ": expected array");
        int index = 0;
        for (const auto& row : j[field]) {
            if (!row.is_array() || row.size() != 2 || !row[0].is_number_integer() ||
                !row[1].is_number())
                throw ParseError(path, std::string(field) + "[" + std::to_string(index) +
                                           "]: expected [k, value]");
            (field[0] == 'p' ? p : mu)[row[0].get<int>()] = row[1].get<double>();
            ++index;
        }
    }
    try {
        return ExponentWeightPair(j["default_p"].get<double>(), j["default_mu"].get<double>(),
                                  j["bound_K"].get<double>(), std::move(p), std::move(mu));
    } catch (const std::invalid_argument& e) {
        throw ParseError(path, e.what());
    }
}

inline void save_space(const ExponentWeightPair& space, const std::string& path) {
    nlohmann::ordered_json j;
    j["default_p"] = space.default_exponent();
    j["default_mu"] = space.default_weight();
    j["bound_K"] = space.bound();
    j["p"] = nlohmann::json::array();
    for (const auto& [k, v] : space.listed_exponents()) j["p"].push_back({k, v});
    j["mu"] = nlohmann::json::array();
    for (const auto& [k, v] : space.listed_weights()) j["mu"].push_back({k, v});
    detail::write_text(path, j.dump(2) + "\n");
}

inline std::vector<std::complex<double>> load_samples(const std::string& path) {
    const auto j = detail::load_json(path);
    if (!j.is_array()) throw ParseError(path, "expected an array of [re, im] pairs");
    std::vector<std::complex<double>> samples;
    int index = 0;
    for (const auto& row : j) {
        if (!row.is_array() || row.size() != 2 || !row[0].is_number() || !row[1].is_number())
            throw ParseError(path, "sample[" + std::to_string(index) + "]: expected [re, im]");
        samples.emplace_back(row[0].get<double>(), row[1].get<double>());
        ++index;
    }
    return samples;
}

inline nlohmann::ordered_json kernel_to_json(const Kernel& kernel) {
    nlohmann::ordered_json j;
    j["degree"] = kernel.degree();
    j["coeffs"] = nlohmann::json::array();
    for (int l = 0; l <= kernel.degree(); ++l) j["coeffs"].push_back({l, kernel.coefficient(l)});
    return j;
}

inline void save_kernel(const Kernel& kernel, const std::string& path) {
    detail::write_text(path, kernel_to_json(kernel).dump(2) + "\n");
}

inline nlohmann::ordered_json verdict_to_json(const Verdict& v) {
    nlohmann::ordered_json j;
    j["name"] = v.name;
    j["lhs"] = v.lhs;
    j["rhs"] = v.rhs;
    j["margin"] = v.margin;
    j["passed"] = v.passed;
    j["parameters"] = v.parameters;
    return j;
}

inline nlohmann::ordered_json verdicts_to_json(const std::vector<Verdict>& verdicts) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const Verdict& v : verdicts) arr.push_back(verdict_to_json(v));
    return arr;
}

inline std::string verdicts_to_csv(const std::vector<Verdict>& verdicts) {
    std::ostringstream out;
    out << "name,lhs,rhs,margin,passed\n";
    for (const Verdict& v : verdicts)
        out << v.name << ',' << detail::digits17(v.lhs) << ',' << detail::digits17(v.rhs) << ','
            << detail::digits17(v.margin) << ',' << (v.passed ? "true" : "false") << '\n';
    return out.str();
}

}  // namespace orlicz_approx
