#include "necklace/experiments.hpp"

#include "necklace/errors.hpp"
#include "necklace/spectral.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace necklace {

void SweepConfig::validate() const {
    base().validate();
    if (m_min < 2) throw std::invalid_argument("SweepConfig: m_min must be >= 2");
    if (m_max < m_min) throw std::invalid_argument("SweepConfig: m_max must be >= m_min");
    if (tol <= 0 || eps_tol <= 0 || orbit_rtol <= 0) {
        throw std::invalid_argument("SweepConfig: tolerances must be positive");
    }
    if (max_iter < 1) throw std::invalid_argument("SweepConfig: max_iter must be >= 1");
}

bool ConvergenceReport::hard_ok() const {
    for (const MRecord& rec : records) {
        if (!rec.power_identity_ok || !rec.colsum_bounds_ok || !rec.prob_normalized_ok ||
            !rec.a2m_bound_ok) {
            return false;
        }
    }
    return true;
}

namespace {

// 2x2 action of the downstairs curve matrix on averaged vectors.  The
// stable side compares against the inverse-word base matrix.
std::array<double, 2> base_apply(const SweepConfig& cfg, const std::array<double, 2>& v) {
    CurveMatrix base = cfg.side == Side::unstable ? base_curve_matrix(cfg.base())
                                                  : base_curve_matrix_stable(cfg.base());
    return {to_double(base.at(0, 0)) * v[0] + to_double(base.at(0, 1)) * v[1],
            to_double(base.at(1, 0)) * v[0] + to_double(base.at(1, 1)) * v[1]};
}

std::array<double, 2> eps_closed_form(const SweepConfig& cfg, const MRecord& rec) {
    double t = static_cast<double>(cfg.r * cfg.N);
    double t2 = t * t, t3 = t2 * t, t4 = t2 * t2;
    return {t2 * (rec.a_m + rec.a_m1),
            -t2 * rec.b_m1 + t3 * rec.a_m + (t2 - t + 1.0) * rec.a_m1 + t4 * rec.b_m};
}

MRecord run_one(const SweepConfig& cfg, long m, const PerronData& base_perron) {
    NecklaceConfig ncfg = NecklaceConfig::make(m, cfg.n);
    const long K = ncfg.K;
    CurveMatrix root = necklace_root_matrix(ncfg, cfg.r, cfg.N, cfg.side);
    CurveMatrix psi = root.pow(m);

    MRecord rec;
    rec.m = m;
    rec.K = K;

    PerronData pd;
    try {
        pd = perron(psi, cfg.tol, cfg.max_iter);
    } catch (const ConvergenceError& e) {
        throw ConvergenceError("sweep: perron failed at m=" + std::to_string(m) + ": " + e.what(),
                               e.residual, e.iterations);
    }
    rec.lambda_m = pd.root;
    rec.lambda_m_pow_n = std::pow(pd.root, static_cast<double>(cfg.n));
    rec.perron_iterations = pd.iterations;
    rec.perron_residual = pd.residual;

    auto entry = [&](long flat) { return pd.vec[static_cast<std::size_t>(flat)]; };
    rec.a_m = entry(psi.c_index(m));
    rec.a_m1 = entry(psi.c_index(m + 1));
    rec.b_m = entry(psi.d_index(m));
    rec.b_m1 = entry(psi.d_index(m + 1));
    rec.a_2m = entry(psi.c_index(2 * m));

    double sum = 0.0, min_entry = 0.0;
    for (double x : pd.vec) {
        sum += x;
        if (x < min_entry) min_entry = x;
    }
    rec.prob_normalized_ok = std::abs(sum - 1.0) <= 1e-12 && min_entry >= 0.0;

    AveragedWeights avg = averaged_vector(pd.vec, K);
    rec.avg_a = avg.a_sum;
    rec.avg_b = avg.b_sum;
    rec.avg_gap = std::abs(avg.a_sum - base_perron.vec[0]) + std::abs(avg.b_sum - base_perron.vec[1]);

    std::array<double, 2> applied = base_apply(cfg, {avg.a_sum, avg.b_sum});
    rec.eps_measured = {rec.lambda_m_pow_n * avg.a_sum - applied[0],
                        rec.lambda_m_pow_n * avg.b_sum - applied[1]};
    rec.eps_formula = eps_closed_form(cfg, rec);
    rec.eps_formula_gap = std::max(std::abs(rec.eps_measured[0] - rec.eps_formula[0]),
                                   std::abs(rec.eps_measured[1] - rec.eps_formula[1]));
    rec.eps_formula_ok = rec.eps_formula_gap <= cfg.eps_tol;

    // Pairing against the lifted test family {c, d}, evaluated at the
    // averaged weights on the base surface.
    IncidenceMap base_inc(1, cfg.r);
    double pair_c_m = pairing_weights({1.0}, {avg.b_sum}, base_inc);
    double pair_d_m = pairing_weights({avg.a_sum}, {1.0}, base_inc);
    double pair_c = pairing_weights({1.0}, {base_perron.vec[1]}, base_inc);
    double pair_d = pairing_weights({base_perron.vec[0]}, {1.0}, base_inc);
    rec.pairing_gap_c = std::abs(pair_c_m - pair_c);
    rec.pairing_gap_d = std::abs(pair_d_m - pair_d);
    rec.pairing_gap_max = std::max(rec.pairing_gap_c, rec.pairing_gap_d);

    // Hard invariants.
    CurveMatrix psi_pow_n = psi.pow(cfg.n);
    rec.power_identity_ok = psi_pow_n == root.pow(m * cfg.n);
    auto [b, B] = column_sum_bounds(psi_pow_n);
    rec.col_bound_b = b;
    rec.col_bound_B = B;
    rec.colsum_bounds_ok = b > 1.0 && rec.lambda_m_pow_n >= b * (1.0 - 1e-12) &&
                           rec.lambda_m_pow_n <= B * (1.0 + 1e-12);
    rec.a2m_bound_ok = rec.a_2m <= 1.0 / static_cast<double>(m * cfg.n - 1) + 1e-12;

    return rec;
}

}  // namespace

ConvergenceReport run_sweep(const SweepConfig& cfg) {
    cfg.validate();
    ConvergenceReport report;
    report.config = cfg;

    CurveMatrix base = cfg.side == Side::unstable ? base_curve_matrix(cfg.base())
                                                  : base_curve_matrix_stable(cfg.base());
    PerronData base_perron = perron(base, cfg.tol, cfg.max_iter);
    report.base_lambda = base_perron.root;
    report.base_vector = {base_perron.vec[0], base_perron.vec[1]};

    for (long m = cfg.m_min; m <= cfg.m_max; ++m) {
        report.records.push_back(run_one(cfg, m, base_perron));
    }

    report.tail_monotone_avg = true;
    report.tail_monotone_pairing = true;
    std::size_t half = report.records.size() / 2;
    for (std::size_t k = half; k + 1 < report.records.size(); ++k) {
        if (report.records[k + 1].avg_gap > report.records[k].avg_gap) {
            report.tail_monotone_avg = false;
        }
        if (report.records[k + 1].pairing_gap_max > report.records[k].pairing_gap_max) {
            report.tail_monotone_pairing = false;
        }
    }
    return report;
}

ConvergenceReport stable_side_sweep(SweepConfig cfg) {
    cfg.side = Side::stable;
    return run_sweep(cfg);
}

std::vector<bool> epsilon_formula_check(const ConvergenceReport& report) {
    std::vector<bool> out;
    out.reserve(report.records.size());
    for (const MRecord& rec : report.records) out.push_back(rec.eps_formula_ok);
    return out;
}

OrbitCheckResult geometric_orbit_check_matrix(const CurveMatrix& root, long m, long n,
                                              double tol, long max_iter, double rtol) {
    OrbitCheckResult res;
    res.m = m;
    PerronData pd = perron(root, tol, max_iter);
    res.xi = pd.root;
    const long K = root.curve_count();

    for (double x : pd.vec) {
        if (x <= 0.0) {
            res.ok = false;
            res.max_rel_err = 1.0;
            return res;  // relation presumes a strictly positive Perron vector
        }
    }
    auto a = [&](long i) {
        long z = (i - 1) % K;
        if (z < 0) z += K;
        return pd.vec[static_cast<std::size_t>(z)];
    };
    double max_err = 0.0;
    double scale = a(2 * m);
    double xi_pow = res.xi;  // xi^{i-1} at i = 2
    for (long i = 2; i <= m * n - 1; ++i) {
        double expected = xi_pow * scale;
        double actual = a(m + i * m);
        double err = std::abs(actual - expected) / std::max(std::abs(actual), std::abs(expected));
        if (err > max_err) max_err = err;
        xi_pow *= res.xi;
    }
    res.max_rel_err = max_err;
    res.ok = max_err <= rtol;
    return res;
}

std::vector<OrbitCheckResult> geometric_orbit_check(const SweepConfig& cfg) {
    cfg.validate();
    std::vector<OrbitCheckResult> out;
    for (long m = cfg.m_min; m <= cfg.m_max; ++m) {
        NecklaceConfig ncfg = NecklaceConfig::make(m, cfg.n);
        CurveMatrix root = necklace_root_matrix(ncfg, cfg.r, cfg.N, cfg.side);
        out.push_back(
            geometric_orbit_check_matrix(root, m, cfg.n, cfg.tol, cfg.max_iter, cfg.orbit_rtol));
    }
    return out;
}

}  // namespace necklace
