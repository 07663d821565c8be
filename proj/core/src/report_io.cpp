#include "necklace/experiments.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace necklace {

namespace {

const char* side_name(Side side) { return side == Side::unstable ? "unstable" : "stable"; }

}  // namespace

std::string report_to_json(const ConvergenceReport& report, const std::string& tool_version) {
    nlohmann::json j;
    const SweepConfig& cfg = report.config;
    j["manifest"] = {
        {"command", "sweep"},
        {"tool_version", tool_version},
        {"r", cfg.r},
        {"N", cfg.N},
        {"n", cfg.n},
        {"m_min", cfg.m_min},
        {"m_max", cfg.m_max},
        {"side", side_name(cfg.side)},
        {"tol", cfg.tol},
        {"max_iter", cfg.max_iter},
        {"eps_tol", cfg.eps_tol},
        {"orbit_rtol", cfg.orbit_rtol},
    };
    j["base"] = {
        {"lambda", report.base_lambda},
        {"vector", {report.base_vector[0], report.base_vector[1]}},
    };
    j["records"] = nlohmann::json::array();
    for (const MRecord& r : report.records) {
        j["records"].push_back({
            {"m", r.m},
            {"K", r.K},
            {"lambda_m", r.lambda_m},
            {"lambda_m_pow_n", r.lambda_m_pow_n},
            {"boundary_entries", {{"a_m", r.a_m}, {"a_m1", r.a_m1}, {"b_m", r.b_m}, {"b_m1", r.b_m1}}},
            {"a_2m", r.a_2m},
            {"epsilon_residual", {r.eps_measured[0], r.eps_measured[1]}},
            {"epsilon_formula", {r.eps_formula[0], r.eps_formula[1]}},
            {"epsilon_formula_gap", r.eps_formula_gap},
            {"epsilon_formula_ok", r.eps_formula_ok},
            {"avg_vector", {{"a_sum", r.avg_a}, {"b_sum", r.avg_b}}},
            {"avg_gap", r.avg_gap},
            {"pairing_gaps", {{"c", r.pairing_gap_c}, {"d", r.pairing_gap_d}, {"max", r.pairing_gap_max}}},
            {"column_sum_bounds", {{"b", r.col_bound_b}, {"B", r.col_bound_B}}},
            {"power_identity_ok", r.power_identity_ok},
            {"colsum_bounds_ok", r.colsum_bounds_ok},
            {"prob_normalized_ok", r.prob_normalized_ok},
            {"a2m_bound_ok", r.a2m_bound_ok},
            {"perron_iterations", r.perron_iterations},
            {"perron_residual", r.perron_residual},
        });
    }
    j["tail_monotone_avg"] = report.tail_monotone_avg;
    j["tail_monotone_pairing"] = report.tail_monotone_pairing;
    j["hard_ok"] = report.hard_ok();
    return j.dump(2);
}

std::string report_to_csv(const ConvergenceReport& report) {
    std::ostringstream out;
    out << std::setprecision(17);
    out << "m,lambda_m,lambda_m_pow_n,a_m,a_m1,b_m,b_m1,eps_1,eps_2,avg_a,avg_b,avg_gap,"
           "pairing_gap_max\n";
    for (const MRecord& r : report.records) {
        out << r.m << ',' << r.lambda_m << ',' << r.lambda_m_pow_n << ',' << r.a_m << ','
            << r.a_m1 << ',' << r.b_m << ',' << r.b_m1 << ',' << r.eps_measured[0] << ','
            << r.eps_measured[1] << ',' << r.avg_a << ',' << r.avg_b << ',' << r.avg_gap << ','
            << r.pairing_gap_max << '\n';
    }
    return out.str();
}

void write_report_files(const ConvergenceReport& report, const std::string& json_path,
                        const std::string& csv_path, const std::string& tool_version) {
    if (!json_path.empty()) {
        std::ofstream out(json_path);
        if (!out) throw std::runtime_error("cannot open for writing: " + json_path);
        out << report_to_json(report, tool_version) << '\n';
    }
    if (!csv_path.empty()) {
        std::ofstream out(csv_path);
        if (!out) throw std::runtime_error("cannot open for writing: " + csv_path);
        out << report_to_csv(report);
    }
}

}  // namespace necklace
