// Command-line front end: builds curve matrices, extracts Perron data, runs
// convergence sweeps over the necklace family, and searches for interlacing
// witnesses in mod-2 homology.
//
// Exit codes: 0 success, 1 usage, 2 parse failure, 3 numeric failure.

#include "necklace/errors.hpp"
#include "necklace/experiments.hpp"
#include "necklace/homology.hpp"
#include "necklace/spectral.hpp"
#include "necklace/twist.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <string>

namespace {

constexpr const char* kVersion = "0.1.0";

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitNumeric = 3;

int cmd_build_matrix(const std::string& kind, long r, long N, long n, long m,
                     const std::string& out_path) {
    necklace::FillingPairConfig base{r, N, n};
    base.validate();
    necklace::CurveMatrix matrix(1);
    bool report_det = false;
    if (kind == "base") {
        matrix = necklace::base_curve_matrix(base);
    } else {
        necklace::NecklaceConfig cfg = necklace::NecklaceConfig::make(base, m);
        if (kind == "lifted") {
            matrix = necklace::lifted_full_matrix(cfg, r, N);
        } else if (kind == "root") {
            matrix = necklace::necklace_root_matrix(cfg, r, N);
        } else if (kind == "psi") {
            matrix = necklace::psi_matrix(cfg, r, N);
            report_det = true;
        } else {
            throw CLI::ValidationError("--kind", "unknown kind: " + kind);
        }
    }
    necklace::write_matrix_file(matrix, out_path);
    auto [b, B] = necklace::column_sum_bounds(matrix);
    std::cout << "kind=" << kind << " dim=" << matrix.dim() << " nnz=" << matrix.nonzero_count()
              << " colsum_min=" << b << " colsum_max=" << B;
    if (report_det) std::cout << " det=" << matrix.determinant().get_str();
    std::cout << " out=" << out_path << '\n';
    return kExitOk;
}

int cmd_perron(const std::string& matrix_path, double tol, long max_iter) {
    necklace::CurveMatrix m = necklace::read_matrix_file(matrix_path);
    necklace::PerronData pd = necklace::perron(m, tol, max_iter);
    nlohmann::json j;
    j["root"] = pd.root;
    j["vector"] = pd.vec;
    j["residual"] = pd.residual;
    j["iterations"] = pd.iterations;
    std::cout << j.dump(2) << '\n';
    return kExitOk;
}

int cmd_sweep(const necklace::SweepConfig& cfg, const std::string& out_json,
              const std::string& out_csv) {
    necklace::ConvergenceReport report = necklace::run_sweep(cfg);
    necklace::write_report_files(report, out_json, out_csv, kVersion);
    for (const necklace::MRecord& rec : report.records) {
        std::cout << "m=" << rec.m << " lambda_m=" << rec.lambda_m
                  << " lambda_m^n=" << rec.lambda_m_pow_n << " avg_gap=" << rec.avg_gap
                  << " |eps|=" << std::abs(rec.eps_measured[0]) + std::abs(rec.eps_measured[1])
                  << (rec.power_identity_ok && rec.colsum_bounds_ok && rec.prob_normalized_ok &&
                              rec.a2m_bound_ok
                          ? ""
                          : "  [hard-invariant FAILURE]")
                  << '\n';
    }
    std::cout << (report.hard_ok() ? "hard invariants: ok" : "hard invariants: FAILED") << '\n';
    return report.hard_ok() ? kExitOk : kExitNumeric;
}

int cmd_interlace(long g, const std::string& c_bits, const std::string& d_bits) {
    necklace::HomologyClass c = necklace::HomologyClass::from_bit_string(c_bits);
    necklace::HomologyClass d = necklace::HomologyClass::from_bit_string(d_bits);
    if (c.genus() != g || d.genus() != g) {
        throw necklace::DimensionError("bit-strings must have length 2g");
    }
    auto witness = necklace::find_interlacing(c, d);
    if (witness) {
        std::cout << "alpha=" << witness->alpha.to_bit_string()
                  << " beta=" << witness->beta.to_bit_string() << '\n';
    } else {
        std::cout << "none\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Curve matrices, Perron data and convergence experiments for "
                 "necklace covers of filling pairs"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    // build-matrix
    auto* build = app.add_subcommand("build-matrix", "Build a curve matrix and write it to a file");
    std::string kind;
    long r = 1, N = 1, n = 2, m = 2;
    std::string out_path;
    build->add_option("--kind", kind, "base | lifted | root | psi")
        ->required()
        ->check(CLI::IsMember({"base", "lifted", "root", "psi"}));
    build->add_option("--r", r, "intersection count |c ∩ d|")->check(CLI::PositiveNumber);
    build->add_option("--N", N, "half twist exponent")->check(CLI::PositiveNumber);
    build->add_option("--n", n, "root degree (>= 2)")->check(CLI::Range(2l, 1000000l));
    build->add_option("--m", m, "family index (>= 2; unused for base)")
        ->check(CLI::Range(2l, 1000000l));
    build->add_option("--out", out_path, "output path")->required();

    // perron
    auto* per = app.add_subcommand("perron", "Perron root/vector of a matrix file");
    std::string matrix_path;
    double tol = 1e-12;
    long max_iter = 1'000'000;
    per->add_option("matrix", matrix_path, "matrix file")->required();
    per->add_option("--tol", tol, "residual tolerance");
    per->add_option("--max-iter", max_iter, "iteration budget");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "Convergence sweep over the necklace family");
    necklace::SweepConfig cfg;
    std::string side = "unstable", out_json, out_csv;
    sweep->add_option("--r", cfg.r)->check(CLI::PositiveNumber);
    sweep->add_option("--N", cfg.N)->check(CLI::PositiveNumber);
    sweep->add_option("--n", cfg.n)->check(CLI::Range(2l, 1000000l));
    sweep->add_option("--m-min", cfg.m_min)->check(CLI::Range(2l, 1000000l));
    sweep->add_option("--m-max", cfg.m_max)->check(CLI::Range(2l, 1000000l));
    sweep->add_option("--side", side)->check(CLI::IsMember({"unstable", "stable"}));
    sweep->add_option("--tol", cfg.tol);
    sweep->add_option("--max-iter", cfg.max_iter);
    sweep->add_option("--out-json", out_json, "JSON report path");
    sweep->add_option("--out-csv", out_csv, "CSV report path");

    // interlace
    auto* inter = app.add_subcommand("interlace", "Interlacing witness for two mod-2 classes");
    long g = 2;
    std::string c_bits, d_bits;
    inter->add_option("--g", g, "genus")->check(CLI::Range(1l, 16l));
    inter->add_option("--c", c_bits, "bit-string of c (length 2g)")->required();
    inter->add_option("--d", d_bits, "bit-string of d (length 2g)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (build->parsed()) return cmd_build_matrix(kind, r, N, n, m, out_path);
        if (per->parsed()) return cmd_perron(matrix_path, tol, max_iter);
        if (sweep->parsed()) {
            cfg.side = side == "stable" ? necklace::Side::stable : necklace::Side::unstable;
            return cmd_sweep(cfg, out_json, out_csv);
        }
        if (inter->parsed()) return cmd_interlace(g, c_bits, d_bits);
    } catch (const necklace::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitParse;
    } catch (const necklace::ConvergenceError& e) {
        std::cerr << "numeric error: " << e.what() << " (last residual " << e.residual << ")\n";
        return kExitNumeric;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid parameters: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNumeric;
    }
    return kExitUsage;
}
