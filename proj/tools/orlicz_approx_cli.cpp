// Command-line front end: load coefficient files and space definitions, run
// norms / E_n tables / moduli / K-functionals / the theorem verification
// suite, and emit deterministic JSON or CSV reports.
//
// Exit codes: 0 success, 1 any verdict failed, 2 usage or I/O error.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "orlicz_approx/orlicz_approx.hpp"

namespace oa = orlicz_approx;

namespace {

struct IndexRange {
    int lo = 1;
    int hi = 16;
};

struct DeltaRange {
    double lo = 0.01;
    double hi = 1.0;
    int steps = 25;
};

IndexRange parse_index_range(const std::string& text) {
    IndexRange r;
    const auto dots = text.find("..");
    if (dots == std::string::npos) throw CLI::ValidationError("--n", "expected a..b");
    try {
        r.lo = std::stoi(text.substr(0, dots));
        r.hi = std::stoi(text.substr(dots + 2));
    } catch (...) {
        throw CLI::ValidationError("--n", "expected integers in a..b");
    }
    if (r.lo < 1 || r.hi < r.lo) throw CLI::ValidationError("--n", "need 1 <= a <= b");
    return r;
}

DeltaRange parse_delta_range(const std::string& text) {
    DeltaRange r;
    const auto dots = text.find("..");
    const auto colon = text.find(':', dots == std::string::npos ? 0 : dots + 2);
    if (dots == std::string::npos || colon == std::string::npos)
        throw CLI::ValidationError("--delta", "expected a..b:steps");
    try {
        r.lo = std::stod(text.substr(0, dots));
        r.hi = std::stod(text.substr(dots + 2, colon - dots - 2));
        r.steps = std::stoi(text.substr(colon + 1));
    } catch (...) {
        throw CLI::ValidationError("--delta", "expected numbers in a..b:steps");
    }
    if (!(r.lo > 0.0) || r.hi < r.lo || r.steps < 1)
        throw CLI::ValidationError("--delta", "need 0 < a <= b and steps >= 1");
    return r;
}

std::vector<double> delta_grid(const DeltaRange& r) {
    std::vector<double> out;
    if (r.steps == 1) {
        out.push_back(r.lo);
        return out;
    }
    for (int i = 0; i < r.steps; ++i)
        out.push_back(r.lo + (r.hi - r.lo) * i / (r.steps - 1));
    return out;
}

std::string d17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty())
        std::cout << text;
    else
        oa::detail::write_text(out_path, text);
}

nlohmann::ordered_json norm_section(const oa::SpectralFunction& f,
                                    const oa::ExponentWeightPair& space,
                                    const oa::NormQuery& query) {
    const double lux = oa::luxemburg_norm(f, space, query);
    const double orl = oa::orlicz_norm(f, space, query);
    nlohmann::ordered_json j;
    j["luxemburg"] = lux;
    j["orlicz"] = orl;
    j["ratio"] = lux > 0.0 ? orl / lux : 1.0;
    return j;
}

nlohmann::ordered_json en_section(const oa::SpectralFunction& f,
                                  const oa::ExponentWeightPair& space, const IndexRange& range,
                                  const oa::NormQuery& query) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (int n = range.lo; n <= range.hi; ++n)
        rows.push_back({n, oa::best_approximation(f, n, space, query)});
    return rows;
}

nlohmann::ordered_json modulus_section(const oa::SpectralFunction& f,
                                       const oa::ExponentWeightPair& space, double alpha,
                                       const DeltaRange& range, const oa::NormQuery& query) {
    oa::DifferenceNormProfile profile(f, oa::FractionalOrder(alpha), space, {}, query);
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (double delta : delta_grid(range)) rows.push_back({delta, profile.evaluate(delta)});
    return rows;
}

nlohmann::ordered_json kfunc_section(const oa::SpectralFunction& f,
                                     const oa::ExponentWeightPair& space, double alpha,
                                     const DeltaRange& range, const oa::NormQuery& query) {
    const oa::FractionalOrder order(alpha);
    oa::DifferenceNormProfile profile(f, order, space, {}, query);
    oa::NormQuery descent = query;
    descent.max_iterations = std::max(query.max_iterations, 2000);
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (double delta : delta_grid(range)) {
        const double k = oa::k_functional(f, order, delta, space, descent);
        const double omega = profile.evaluate(delta);
        rows.push_back({delta, k, omega, omega > 0.0 ? k / omega : 1.0});
    }
    return rows;
}

nlohmann::ordered_json verdict_summary(const std::vector<oa::Verdict>& verdicts) {
    int passed = 0;
    for (const auto& v : verdicts) passed += v.passed ? 1 : 0;
    nlohmann::ordered_json j;
    j["total"] = verdicts.size();
    j["passed"] = passed;
    j["all_passed"] = passed == static_cast<int>(verdicts.size());
    return j;
}

std::string csv_rows(const nlohmann::ordered_json& rows, const std::string& header) {
    std::string out = header + "\n";
    for (const auto& row : rows) {
        std::string line;
        for (const auto& cell : row) {
            if (!line.empty()) line += ',';
            line += cell.is_number_integer() ? std::to_string(cell.get<long long>())
                                             : d17(cell.get<double>());
        }
        out += line + "\n";
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Weighted variable-exponent sequence norms, best trigonometric "
                 "approximation, fractional moduli of smoothness, and K-functionals"};
    app.require_subcommand(1);

    std::string input_path, space_path, out_path;
    std::string format = "json";
    std::string n_text = "1..16", delta_text = "0.01..1:25";
    double alpha = 1.0;
    double tol = 1e-12;
    std::uint64_t seed = 42;

    auto add_common = [&](CLI::App* cmd, bool needs_input) {
        if (needs_input) {
            cmd->add_option("--input", input_path, "spectral function JSON file")
                ->required()
                ->check(CLI::ExistingFile);
            cmd->add_option("--space", space_path, "space definition JSON file")
                ->required()
                ->check(CLI::ExistingFile);
        }
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"json", "csv"}));
        cmd->add_option("--out", out_path, "write the report to this path");
        cmd->add_option("--tol", tol, "absolute tolerance for norm solves");
    };

    auto* norm_cmd = app.add_subcommand("norm", "Luxemburg and Orlicz norms and their ratio");
    add_common(norm_cmd, true);

    auto* en_cmd = app.add_subcommand("en-table", "best approximations E_n over an n range");
    add_common(en_cmd, true);
    en_cmd->add_option("--n", n_text, "range a..b");

    auto* mod_cmd = app.add_subcommand("modulus", "modulus of smoothness over a delta range");
    add_common(mod_cmd, true);
    mod_cmd->add_option("--alpha", alpha, "difference order (> 0)");
    mod_cmd->add_option("--delta", delta_text, "range a..b:steps");

    auto* kf_cmd = app.add_subcommand("kfunc", "K-functional and K/omega over a delta range");
    add_common(kf_cmd, true);
    kf_cmd->add_option("--alpha", alpha, "difference order (> 0)");
    kf_cmd->add_option("--delta", delta_text, "range a..b:steps");

    auto* verify_cmd = app.add_subcommand("verify", "run the bundled theorem verification suite");
    add_common(verify_cmd, false);
    verify_cmd->add_option("--seed", seed, "seed for the randomized sweeps");

    auto* report_cmd =
        app.add_subcommand("report", "bundle norms, tables, and the verification suite");
    add_common(report_cmd, true);
    report_cmd->add_option("--alpha", alpha, "difference order (> 0)");
    report_cmd->add_option("--n", n_text, "range a..b");
    report_cmd->add_option("--delta", delta_text, "range a..b:steps");
    report_cmd->add_option("--seed", seed, "seed for the randomized sweeps");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        oa::NormQuery query(tol, 200);
        if (!(alpha > 0.0)) {
            std::cerr << "error: --alpha must be > 0\n";
            return 2;
        }

        if (norm_cmd->parsed() || en_cmd->parsed() || mod_cmd->parsed() || kf_cmd->parsed()) {
            const auto f = oa::load_spectral_function(input_path);
            const auto space = oa::load_space(space_path);

            nlohmann::ordered_json doc;
            doc["schema_version"] = 1;
            std::string csv;

            if (norm_cmd->parsed()) {
                doc["command"] = "norm";
                const auto section = norm_section(f, space, query);
                doc["norm"] = section;
                csv = "quantity,value\n";
                for (const auto& [key, value] : section.items())
                    csv += key + "," + d17(value.get<double>()) + "\n";
                std::cout << "luxemburg = " << d17(section["luxemburg"].get<double>()) << "\n"
                          << "orlicz    = " << d17(section["orlicz"].get<double>()) << "\n"
                          << "ratio     = " << d17(section["ratio"].get<double>()) << "\n";
            } else if (en_cmd->parsed()) {
                doc["command"] = "en-table";
                const auto rows = en_section(f, space, parse_index_range(n_text), query);
                doc["en_table"] = rows;
                csv = csv_rows(rows, "n,E_n");
                std::cout << csv;
            } else if (mod_cmd->parsed()) {
                doc["command"] = "modulus";
                doc["alpha"] = alpha;
                const auto rows =
                    modulus_section(f, space, alpha, parse_delta_range(delta_text), query);
                doc["modulus"] = rows;
                csv = csv_rows(rows, "delta,omega");
                std::cout << csv;
            } else {
                doc["command"] = "kfunc";
                doc["alpha"] = alpha;
                const auto rows =
                    kfunc_section(f, space, alpha, parse_delta_range(delta_text), query);
                doc["kfunctional"] = rows;
                csv = csv_rows(rows, "delta,K,omega,ratio");
                std::cout << csv;
            }

            if (!out_path.empty())
                emit(format == "csv" ? csv : doc.dump(2) + "\n", out_path);
            return 0;
        }

        if (verify_cmd->parsed()) {
            const auto tasks = oa::build_default_suite(seed);
            const auto verdicts = oa::run_suite(tasks, oa::suite_thread_cap_from_env());
            const auto summary = verdict_summary(verdicts);

            nlohmann::ordered_json doc;
            doc["schema_version"] = 1;
            doc["command"] = "verify";
            doc["seed"] = seed;
            doc["verdicts"] = oa::verdicts_to_json(verdicts);
            doc["summary"] = summary;

            if (!out_path.empty())
                emit(format == "csv" ? oa::verdicts_to_csv(verdicts) : doc.dump(2) + "\n",
                     out_path);

            std::cout << summary["passed"].get<int>() << "/" << summary["total"].get<int>()
                      << " verdicts passed (seed " << seed << ")\n";
            for (const auto& v : verdicts)
                if (!v.passed)
                    std::cout << "FAILED " << v.name << ": lhs=" << d17(v.lhs)
                              << " rhs=" << d17(v.rhs) << " margin=" << d17(v.margin) << "\n";
            return summary["all_passed"].get<bool>() ? 0 : 1;
        }

        // report
        if (format == "csv") {
            std::cerr << "error: report is a single JSON document; use --format json\n";
            return 2;
        }
        const auto f = oa::load_spectral_function(input_path);
        const auto space = oa::load_space(space_path);
        const auto n_range = parse_index_range(n_text);
        const auto d_range = parse_delta_range(delta_text);

        nlohmann::ordered_json doc;
        doc["schema_version"] = 1;
        doc["command"] = "report";
        doc["seed"] = seed;
        doc["config"] = {{"input", input_path},
                         {"space", space_path},
                         {"alpha", alpha},
                         {"n", {n_range.lo, n_range.hi}},
                         {"delta", {d_range.lo, d_range.hi, d_range.steps}},
                         {"tolerance", tol}};
        doc["norm"] = norm_section(f, space, query);
        doc["en_table"] = en_section(f, space, n_range, query);
        doc["modulus"] = modulus_section(f, space, alpha, d_range, query);
        doc["kfunctional"] = kfunc_section(f, space, alpha, d_range, query);

        const auto tasks = oa::build_default_suite(seed);
        const auto verdicts = oa::run_suite(tasks, oa::suite_thread_cap_from_env());
        doc["verdicts"] = oa::verdicts_to_json(verdicts);
        doc["summary"] = verdict_summary(verdicts);

        emit(doc.dump(2) + "\n", out_path);
        if (out_path.empty()) std::cout << "\n";
        return doc["summary"]["all_passed"].get<bool>() ? 0 : 1;
    } catch (const oa::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
