// Integration tests that drive the installed command-line binary through a
// shell, checking exit codes, file outputs and cross-format consistency.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "necklace/spectral.hpp"
#include "necklace/twist.hpp"

#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(NECKLACE_CLI_PATH) + " " + args + " 2>&1";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buf.data(), buf.size(), pipe) != nullptr) out += buf.data();
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

std::string temp_path(const std::string& name) {
    return std::string("cli_test_") + name;
}

}  // namespace

TEST_CASE("build-matrix + perron round-trips against the in-process result") {
    std::string mat = temp_path("base.mat");
    RunResult built = run_cli("build-matrix --kind base --r 1 --N 1 --out " + mat);
    CHECK(built.exit_code == 0);
    CHECK(built.out.find("dim=2") != std::string::npos);

    RunResult per = run_cli("perron " + mat + " --tol 1e-12");
    REQUIRE(per.exit_code == 0);
    auto j = nlohmann::json::parse(per.out);
    necklace::PerronData direct =
        necklace::perron(necklace::base_curve_matrix({1, 1, 2}), 1e-12, 100000);
    CHECK(std::abs(j["root"].get<double>() - direct.root) <= 1e-12);
    CHECK(std::abs(j["vector"][0].get<double>() - direct.vec[0]) <= 1e-12);
    std::remove(mat.c_str());
}

TEST_CASE("build-matrix writes the documented psi file") {
    std::string mat = temp_path("psi.mat");
    RunResult built = run_cli("build-matrix --kind psi --m 2 --n 2 --r 1 --N 1 --out " + mat);
    CHECK(built.exit_code == 0);
    CHECK(built.out.find("dim=16") != std::string::npos);
    CHECK(built.out.find("det=1") != std::string::npos);
    std::ifstream in(mat);
    long dim = 0;
    in >> dim;
    CHECK(dim == 16);
    std::remove(mat.c_str());
}

TEST_CASE("root kind rejects m = 1") {
    RunResult res = run_cli("build-matrix --kind root --m 1 --out nowhere.mat");
    CHECK(res.exit_code == 1);
}

TEST_CASE("perron on a malformed file exits 2") {
    std::string mat = temp_path("bad.mat");
    {
        std::ofstream out(mat);
        out << "2 c_1 d_1\n1 1 not_an_integer\n";
    }
    RunResult res = run_cli("perron " + mat);
    CHECK(res.exit_code == 2);
    CHECK(res.out.find("parse error") != std::string::npos);
    std::remove(mat.c_str());

    RunResult missing = run_cli("perron does_not_exist.mat");
    CHECK(missing.exit_code == 2);
}

TEST_CASE("perron starves on a tiny budget and exits 3") {
    std::string mat = temp_path("root.mat");
    RunResult built = run_cli("build-matrix --kind root --m 2 --n 2 --r 1 --N 1 --out " + mat);
    REQUIRE(built.exit_code == 0);
    RunResult res = run_cli("perron " + mat + " --tol 1e-15 --max-iter 10");
    CHECK(res.exit_code == 3);
    CHECK(res.out.find("numeric error") != std::string::npos);
    std::remove(mat.c_str());
}

TEST_CASE("sweep writes CSV and JSON with identical numbers") {
    std::string csv_path = temp_path("sweep.csv");
    std::string json_path = temp_path("sweep.json");
    RunResult res = run_cli("sweep --r 1 --N 1 --n 2 --m-min 2 --m-max 4 --out-csv " + csv_path +
                            " --out-json " + json_path);
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("hard invariants: ok") != std::string::npos);

    std::ifstream csv(csv_path);
    std::string header;
    std::getline(csv, header);
    CHECK(header ==
          "m,lambda_m,lambda_m_pow_n,a_m,a_m1,b_m,b_m1,eps_1,eps_2,avg_a,avg_b,avg_gap,"
          "pairing_gap_max");
    std::ifstream jf(json_path);
    auto j = nlohmann::json::parse(jf);
    REQUIRE(j["records"].size() == 3);
    std::string line;
    for (const auto& rec : j["records"]) {
        REQUIRE(std::getline(csv, line));
        std::istringstream ls(line);
        std::string cell;
        std::getline(ls, cell, ',');
        CHECK(std::stol(cell) == rec["m"].get<long>());
        std::getline(ls, cell, ',');
        CHECK(std::stod(cell) == doctest::Approx(rec["lambda_m"].get<double>()).epsilon(1e-15));
        std::getline(ls, cell, ',');
        CHECK(std::stod(cell) ==
              doctest::Approx(rec["lambda_m_pow_n"].get<double>()).epsilon(1e-15));
    }
    CHECK(j["manifest"]["side"] == "unstable");
    std::remove(csv_path.c_str());
    std::remove(json_path.c_str());
}

TEST_CASE("stable sweep matches unstable entropies within 1e-8") {
    std::string ju = temp_path("u.json");
    std::string js = temp_path("s.json");
    RunResult ru = run_cli("sweep --m-min 2 --m-max 3 --out-json " + ju);
    RunResult rs = run_cli("sweep --m-min 2 --m-max 3 --side stable --out-json " + js);
    REQUIRE(ru.exit_code == 0);
    REQUIRE(rs.exit_code == 0);
    std::ifstream fu(ju), fs(js);
    auto u = nlohmann::json::parse(fu), s = nlohmann::json::parse(fs);
    REQUIRE(u["records"].size() == s["records"].size());
    for (std::size_t k = 0; k < u["records"].size(); ++k) {
        double lu = u["records"][k]["lambda_m"].get<double>();
        double ls = s["records"][k]["lambda_m"].get<double>();
        CHECK(std::abs(lu - ls) < 1e-8);
    }
    std::remove(ju.c_str());
    std::remove(js.c_str());
}

TEST_CASE("identical manifests reproduce identical outputs") {
    std::string j1 = temp_path("det1.json"), j2 = temp_path("det2.json");
    std::string args = "sweep --m-min 2 --m-max 3 --r 2 --N 1 --out-json ";
    REQUIRE(run_cli(args + j1).exit_code == 0);
    REQUIRE(run_cli(args + j2).exit_code == 0);
    std::ifstream f1(j1), f2(j2);
    std::stringstream s1, s2;
    s1 << f1.rdbuf();
    s2 << f2.rdbuf();
    CHECK(s1.str() == s2.str());
    CHECK(!s1.str().empty());
    std::remove(j1.c_str());
    std::remove(j2.c_str());
}

TEST_CASE("sweep rejects m_min = 1 as a usage error") {
    RunResult res = run_cli("sweep --m-min 1 --m-max 3");
    CHECK(res.exit_code == 1);
}

TEST_CASE("interlace prints witnesses and none") {
    RunResult w = run_cli("interlace --g 2 --c 1000 --d 0010");
    CHECK(w.exit_code == 0);
    CHECK(w.out == "alpha=0100 beta=0001\n");

    RunResult same = run_cli("interlace --g 2 --c 1100 --d 1100");
    CHECK(same.exit_code == 0);
    CHECK(same.out == "none\n");

    RunResult g3 = run_cli("interlace --g 3 --c 100000 --d 001000");
    CHECK(g3.exit_code == 0);
    CHECK(g3.out == "alpha=010000 beta=000100\n");

    RunResult bad = run_cli("interlace --g 2 --c 10x0 --d 0010");
    CHECK(bad.exit_code != 0);
}
