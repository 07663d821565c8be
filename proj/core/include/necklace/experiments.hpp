#pragma once

#include "necklace/cover.hpp"
#include "necklace/pairing.hpp"
#include "necklace/twist.hpp"

#include <array>
#include <string>
#include <vector>

namespace necklace {

/// Parameters of a convergence sweep over the necklace family.
///
/// The iteration budget is deliberately generous: the subdominant spectral
/// gap of the necklace matrices closes like 1/K^2, so the m = 10 members
/// need a few million power-iteration steps at tight tolerances.
struct SweepConfig {
    long r = 1;
    long N = 1;
    long n = 2;
    long m_min = 2;
    long m_max = 10;
    Side side = Side::unstable;
    double tol = 1e-13;
    long max_iter = 20'000'000;
    double eps_tol = 1e-6;      // absolute tolerance on 2-vector checks
    double orbit_rtol = 1e-8;   // relative tolerance on eigenvalue identities

    FillingPairConfig base() const { return FillingPairConfig{r, N, n}; }
    void validate() const;
};

/// Everything recorded for one member of the family.
struct MRecord {
    long m = 0;
    long K = 0;

    double lambda_m = 0.0;        // Perron root of the psi matrix
    double lambda_m_pow_n = 0.0;  // lambda_m^n

    // Perron-vector entries at the twist-block boundary.
    double a_m = 0.0, a_m1 = 0.0, b_m = 0.0, b_m1 = 0.0;
    double a_2m = 0.0;

    std::array<double, 2> eps_measured{};  // lambda_m^n avg - M_Phi avg
    std::array<double, 2> eps_formula{};   // closed form from boundary entries

    double avg_a = 0.0, avg_b = 0.0;
    double avg_gap = 0.0;  // ||avg - base Perron vector||_1

    double pairing_gap_c = 0.0, pairing_gap_d = 0.0, pairing_gap_max = 0.0;

    double col_bound_b = 0.0, col_bound_B = 0.0;

    // Hard invariants.
    bool power_identity_ok = false;  // (M_psi)^n == (M_root)^{mn}, exact integers
    bool colsum_bounds_ok = false;   // 1 < b <= lambda_m^n <= B
    bool prob_normalized_ok = false;
    bool a2m_bound_ok = false;       // a_2m <= 1/(mn - 1)

    // Soft observations.
    bool eps_formula_ok = false;
    double eps_formula_gap = 0.0;

    long perron_iterations = 0;
    double perron_residual = 0.0;
};

struct ConvergenceReport {
    SweepConfig config;
    double base_lambda = 0.0;
    std::array<double, 2> base_vector{};  // L1-normalized base Perron vector
    std::vector<MRecord> records;

    // Soft observations over the last half of the m-range: reported, never
    // fatal (the construction promises convergence, not monotone rates).
    bool tail_monotone_avg = false;
    bool tail_monotone_pairing = false;

    bool hard_ok() const;
};

/// Builds the psi family for m in [m_min, m_max], extracts Perron data and
/// fills every record field.  Deterministic.  Spectral failures are rethrown
/// as ConvergenceError with the offending m in the message.
ConvergenceReport run_sweep(const SweepConfig& cfg);

/// Same pipeline on the inverse words (cfg.side forced to stable).
ConvergenceReport stable_side_sweep(SweepConfig cfg);

/// Per-m agreement between the measured residual and the boundary-entry
/// closed form, at cfg.eps_tol.
std::vector<bool> epsilon_formula_check(const ConvergenceReport& report);

struct OrbitCheckResult {
    long m = 0;
    double xi = 0.0;           // Perron root of the necklace root matrix
    double max_rel_err = 0.0;  // over i = 2 .. mn-1
    bool ok = false;
};

/// Verifies the geometric progression of Perron entries along chi-orbits,
/// a_{m+im} = xi^{i-1} a_{2m} for i = 2..mn-1, at cfg.orbit_rtol.  Requires a
/// strictly positive Perron vector.  (At i = mn the orbit wraps through the
/// twist block and the relation does not apply.)
std::vector<OrbitCheckResult> geometric_orbit_check(const SweepConfig& cfg);

/// Orbit check against an explicitly supplied matrix (negative controls).
OrbitCheckResult geometric_orbit_check_matrix(const CurveMatrix& root, long m, long n,
                                              double tol, long max_iter, double rtol);

/// Report serialization: JSON with the full record structure, and a flat CSV
/// with one row per m:
///   m, lambda_m, lambda_m_pow_n, a_m, a_m1, b_m, b_m1, eps_1, eps_2,
///   avg_a, avg_b, avg_gap, pairing_gap_max
std::string report_to_json(const ConvergenceReport& report, const std::string& tool_version);
std::string report_to_csv(const ConvergenceReport& report);
void write_report_files(const ConvergenceReport& report, const std::string& json_path,
                        const std::string& csv_path, const std::string& tool_version);

}  // namespace necklace
