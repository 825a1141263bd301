#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "radlab/matrix_io.hpp"

using namespace radlab;
namespace fs = std::filesystem;

namespace {

struct CmdResult {
    int exit_code;
    std::string out;
};

CmdResult run_cli(const std::string& args) {
    const char* bin = std::getenv("RADIUS_LAB_BIN");
    REQUIRE_MESSAGE(bin != nullptr, "RADIUS_LAB_BIN must point at the radius-lab binary");
    const std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, got);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

struct Fixtures {
    fs::path dir;
    std::string shift2, id2, id3, diag_b, diag_c;

    Fixtures() {
        dir = fs::temp_directory_path() / "radlab_cli_fixtures";
        fs::create_directories(dir);
        auto put = [&](const char* name, const ComplexMatrix& m) {
            const fs::path p = dir / name;
            save_matrix(m, p.string());
            return p.string();
        };
        shift2 = put("shift2.json", ComplexMatrix{{0.0, 1.0}, {0.0, 0.0}});
        id2 = put("id2.json", ComplexMatrix::identity(2));
        id3 = put("id3.json", ComplexMatrix::identity(3));
        diag_b = put("diag_b.json", ComplexMatrix::diagonal({1.0, 0.0}));
        diag_c = put("diag_c.json", ComplexMatrix::diagonal({0.0, 2.0}));
    }
};

const Fixtures& fixtures() {
    static Fixtures f;
    return f;
}

std::vector<std::string> lines_of(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string line;
    while (std::getline(ss, line)) out.push_back(line);
    return out;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& s) {
    std::vector<std::vector<std::string>> rows;
    for (const std::string& line : lines_of(s)) {
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        rows.push_back(std::move(cells));
    }
    return rows;
}

} // namespace

TEST_CASE("compute: worked values and exit codes") {
    auto r = run_cli("compute --matrix " + fixtures().shift2 + " --quantity w");
    CHECK(r.exit_code == 0);
    CHECK(std::stod(r.out) == doctest::Approx(0.5).epsilon(1e-9));

    r = run_cli("compute --matrix " + fixtures().id2 + " --quantity c");
    CHECK(r.exit_code == 0);
    CHECK(std::stod(r.out) == doctest::Approx(1.0).epsilon(1e-9));

    r = run_cli("compute --matrix " + fixtures().diag_b + " --matrix2 " + fixtures().diag_c +
                " --quantity we");
    CHECK(r.exit_code == 0);
    CHECK(std::stod(r.out) == doctest::Approx(2.0).epsilon(1e-6));

    r = run_cli("compute --matrix " + fixtures().shift2 + " --quantity norm");
    CHECK(r.exit_code == 0);
    CHECK(std::stod(r.out) == doctest::Approx(1.0).epsilon(1e-9));

    // we/rho need a second matrix
    r = run_cli("compute --matrix " + fixtures().shift2 + " --quantity rho");
    CHECK(r.exit_code == 2);

    // dimension mismatch is its own exit code
    r = run_cli("compute --matrix " + fixtures().diag_b + " --matrix2 " + fixtures().id3 +
                " --quantity we");
    CHECK(r.exit_code == 3);

    // bad file
    r = run_cli("compute --matrix /nonexistent.json --quantity w");
    CHECK(r.exit_code == 2);

    // JSON mode carries the witness
    r = run_cli("compute --matrix " + fixtures().shift2 + " --quantity w --json");
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["value"].get<double>() == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(j.contains("witness"));
    CHECK(j["method"] == "angle_sweep");
}

TEST_CASE("bounds: table, tight rows, only-filter") {
    auto r = run_cli("bounds --matrix " + fixtures().diag_b + " --matrix2 " + fixtures().diag_c);
    CHECK(r.exit_code == 0);
    const auto rows = lines_of(r.out);
    CHECK(rows.size() >= 21); // header + 20 evaluations on a Hermitian pair
    for (const char* id : {"cor2.lower", "th1.upper", "th4.lower", "th5.remark.half",
                           "jensen.upper.derived"}) {
        bool found_tight = false;
        for (const auto& line : rows)
            if (line.find(id) != std::string::npos && line.find("TIGHT") != std::string::npos)
                found_tight = true;
        CHECK_MESSAGE(found_tight, "expected TIGHT row for ", id);
    }

    r = run_cli("bounds --matrix " + fixtures().shift2);
    CHECK(r.exit_code == 0);
    for (const char* id : {"k5.lower", "pcor.lower"}) {
        bool found_tight = false;
        for (const auto& line : lines_of(r.out))
            if (line.find(id) != std::string::npos && line.find("TIGHT") != std::string::npos)
                found_tight = true;
        CHECK_MESSAGE(found_tight, "expected TIGHT row for ", id);
    }

    r = run_cli("bounds --matrix " + fixtures().shift2 + " --only bogus.id");
    CHECK(r.exit_code == 2);

    r = run_cli("bounds --matrix " + fixtures().shift2 + " --only k5.lower,eqv.upper --format csv");
    CHECK(r.exit_code == 0);
    const auto csv = parse_csv(r.out);
    REQUIRE(csv.size() == 3);
    CHECK(csv[0][0] == "bound_id");
    CHECK(csv[1][0] == "eqv.upper");
    CHECK(csv[2][0] == "k5.lower");

    r = run_cli("bounds --matrix " + fixtures().shift2 + " --format json");
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.is_array());
    CHECK(j.size() == 30);
}

TEST_CASE("verify: summary, report file, exit codes") {
    auto r = run_cli("verify --kind general --dim 3 --trials 0 --seed 1");
    CHECK(r.exit_code == 2);

    r = run_cli("verify --kind bogus --dim 3 --trials 5 --seed 1");
    CHECK(r.exit_code == 2);

    const fs::path report_path = fixtures().dir / "report.json";
    r = run_cli("verify --kind nilpotent2 --dim 4 --trials 20 --seed 7 --bounds k5.lower --out " +
                report_path.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("confirmed violations: 0") != std::string::npos);
    std::ifstream in(report_path);
    REQUIRE(in.good());
    nlohmann::json rep;
    in >> rep;
    CHECK(rep["per_bound"]["k5.lower"]["trials"] == 20);
    CHECK(rep["per_bound"]["k5.lower"]["tightness_hits"] == 20);
    CHECK(rep["per_bound"]["k5.lower"]["violations"] == 0);

    // identical invocations produce byte-identical stdout
    const std::string cmd = "verify --kind general --dim 3 --trials 6 --seed 5 "
                            "--bounds eqv.lower,cor2.lower";
    const auto first = run_cli(cmd);
    const auto second = run_cli(cmd);
    CHECK(first.exit_code == 0);
    CHECK(first.out == second.out);

    // worker count must not change results
    const auto parallel = run_cli(cmd + " --workers 3");
    CHECK(parallel.out == first.out);
}

TEST_CASE("sweep: alpha, s and r grids") {
    auto r = run_cli("sweep --matrix " + fixtures().diag_b + " --matrix2 " + fixtures().diag_c +
                     " --param alpha --steps 101 --bound th4.lower");
    CHECK(r.exit_code == 0);
    auto csv = parse_csv(r.out);
    REQUIRE(csv.size() == 102);
    CHECK(csv[0] == std::vector<std::string>{"param", "bound_value", "target_value", "slack"});
    double best_val = -1.0, best_param = -1.0;
    for (std::size_t i = 1; i < csv.size(); ++i) {
        const double p = std::stod(csv[i][0]), v = std::stod(csv[i][1]);
        if (v > best_val) {
            best_val = v;
            best_param = p;
        }
    }
    CHECK(best_param == doctest::Approx(0.0)); // max at alpha = 0 with value 4
    CHECK(best_val == doctest::Approx(4.0).epsilon(1e-9));

    r = run_cli("sweep --matrix " + fixtures().diag_b + " --matrix2 " + fixtures().diag_c +
                " --param alpha --steps 7 --bound drag01.lower");
    CHECK(r.exit_code == 0);
    csv = parse_csv(r.out);
    for (std::size_t i = 1; i < csv.size(); ++i)
        CHECK(std::stod(csv[i][1]) == doctest::Approx(2.0).epsilon(1e-9)); // constant column

    r = run_cli("sweep --matrix " + fixtures().id2 + " --matrix2 " + fixtures().id2 +
                " --param s --steps 9 --bound buzano.lower");
    CHECK(r.exit_code == 0);
    csv = parse_csv(r.out);
    for (std::size_t i = 1; i < csv.size(); ++i)
        CHECK(std::stod(csv[i][3]) == doctest::Approx(0.0).epsilon(1e-6)); // tight for all s

    r = run_cli("sweep --matrix " + fixtures().diag_b + " --matrix2 " + fixtures().diag_c +
                " --param r --steps 5 --bound jensen.upper.derived");
    CHECK(r.exit_code == 0);
    csv = parse_csv(r.out);
    REQUIRE(csv.size() == 6);
    CHECK(std::stod(csv[1][0]) == doctest::Approx(2.0));

    // a bound that is not parameterized by the chosen parameter
    r = run_cli("sweep --matrix " + fixtures().diag_b + " --matrix2 " + fixtures().diag_c +
                " --param alpha --steps 5 --bound cor2.lower");
    CHECK(r.exit_code == 2);
}

TEST_CASE("range: boundary CSV") {
    auto r = run_cli("range --matrix " + fixtures().id2 + " --points 4");
    CHECK(r.exit_code == 0);
    auto csv = parse_csv(r.out);
    REQUIRE(csv.size() == 5);
    CHECK(csv[0] == std::vector<std::string>{"theta", "re", "im"});
    for (std::size_t i = 1; i < csv.size(); ++i) {
        CHECK(std::stod(csv[i][1]) == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(std::stod(csv[i][2]) == doctest::Approx(0.0).epsilon(1e-9));
    }

    r = run_cli("range --matrix " + fixtures().shift2 + " --points 90");
    CHECK(r.exit_code == 0);
    csv = parse_csv(r.out);
    REQUIRE(csv.size() == 91);
    for (std::size_t i = 1; i < csv.size(); ++i) {
        const double re = std::stod(csv[i][1]), im = std::stod(csv[i][2]);
        CHECK(std::hypot(re, im) == doctest::Approx(0.5).epsilon(1e-6));
    }

    r = run_cli("range --matrix " + fixtures().id2 + " --points 2");
    CHECK(r.exit_code == 2);
}
