// radius-lab: numerical radius / Euclidean operator radius toolkit.
//
// Exit codes: 0 success, 1 confirmed inequality violation, 2 usage or parse
// error, 3 dimension mismatch.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "radlab/radlab.hpp"

namespace {

using namespace radlab;

struct ToleranceFlags {
    ToleranceConfig cfg;
    void attach(CLI::App* cmd) {
        cmd->add_option("--tol-theta-grid", cfg.theta_grid, "initial angle samples per sweep");
        cmd->add_option("--tol-refine", cfg.refine_tol, "golden-section width target (radians)");
        cmd->add_option("--tol-eig", cfg.eig_tol, "Jacobi off-diagonal target, relative");
        cmd->add_option("--tol-sphere-restarts", cfg.sphere_restarts, "sphere-search restarts");
        cmd->add_option("--tol-sphere", cfg.sphere_tol, "sphere-search gradient tolerance");
        cmd->add_option("--tol-ineq", cfg.ineq_tol, "inequality slack tolerance");
    }
};

std::vector<std::string> split_ids(const std::string& csv) {
    std::vector<std::string> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

nlohmann::json witness_json(const Vector& x) {
    nlohmann::json arr = nlohmann::json::array();
    for (const cplx& z : x) arr.push_back({z.real(), z.imag()});
    return arr;
}

int cmd_compute(const std::string& matrix_path, const std::string& matrix2_path,
                const std::string& quantity, bool as_json, const ToleranceConfig& cfg) {
    const ComplexMatrix a = load_matrix(matrix_path);
    std::optional<ComplexMatrix> b;
    if (!matrix2_path.empty()) b = load_matrix(matrix2_path);

    RadiusResult res;
    if (quantity == "w") {
        res = numerical_radius(a, cfg);
    } else if (quantity == "c") {
        res = crawford_number(a, cfg);
    } else if (quantity == "norm") {
        res.value = operator_norm(a, cfg);
        res.argmax_theta.reset();
    } else if (quantity == "we" || quantity == "rho") {
        if (!b) {
            std::cerr << "error: --quantity " << quantity << " requires --matrix2\n";
            return 2;
        }
        res = quantity == "we" ? euclidean_radius(a, *b, cfg) : real_product_inf(a, *b, cfg);
    } else {
        std::cerr << "error: unknown quantity '" << quantity << "'\n";
        return 2;
    }

    if (as_json) {
        nlohmann::json j{{"value", res.value}, {"method", to_string(res.method)}};
        if (res.argmax_theta) j["theta"] = *res.argmax_theta;
        if (res.argmax_vector) j["witness"] = witness_json(*res.argmax_vector);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << fmt_double(res.value) << "\n";
    }
    return 0;
}

int cmd_bounds(const std::string& matrix_path, const std::string& matrix2_path,
               const std::string& only_csv, const std::string& format,
               const ToleranceConfig& cfg) {
    const ComplexMatrix a = load_matrix(matrix_path);
    std::optional<ComplexMatrix> c;
    if (!matrix2_path.empty()) c = load_matrix(matrix2_path);

    std::optional<std::set<std::string>> only;
    if (!only_csv.empty()) {
        only.emplace();
        const bool pair_input = c.has_value();
        const bool herm_pair =
            pair_input && a.is_exactly_hermitian() && c->is_exactly_hermitian();
        for (const std::string& id : split_ids(only_csv)) {
            if (std::find(catalog_ids().begin(), catalog_ids().end(), id) ==
                catalog_ids().end()) {
                std::cerr << "error: unknown bound id '" << id << "'\n";
                return 2;
            }
            if (pair_input && !is_pair_bound(id)) {
                std::cerr << "error: bound '" << id << "' applies to a single matrix\n";
                return 2;
            }
            if (pair_input && is_hermitian_only_bound(id) && !herm_pair) {
                std::cerr << "error: bound '" << id << "' requires a Hermitian pair\n";
                return 2;
            }
            only->insert(id);
        }
    }

    std::vector<BoundEvaluation> evals =
        evaluate_all(a, c ? &*c : nullptr, cfg, only ? &*only : nullptr);

    // Confirmation protocol: re-run raw violations at 4x resolution before
    // letting them fail the invocation.
    const ToleranceConfig confirm_cfg = cfg.scaled(4);
    std::set<std::string> confirmed;
    for (const BoundEvaluation& e : evals) {
        if (e.satisfied) continue;
        const std::set<std::string> one{e.bound_id};
        const auto again = evaluate_all(a, c ? &*c : nullptr, confirm_cfg, &one);
        bool still_bad = false;
        for (const auto& g : again)
            if (g.bound_id == e.bound_id && !g.satisfied) still_bad = true;
        if (still_bad) confirmed.insert(e.bound_id);
    }

    if (format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& e : evals) arr.push_back(to_json(e));
        std::cout << arr.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "bound_id,kind,target,bound_value,target_value,slack,satisfied\n";
        for (const auto& e : evals)
            std::cout << e.bound_id << ',' << to_string(e.kind) << ',' << to_string(e.target)
                      << ',' << fmt_double(e.bound_value) << ',' << fmt_double(e.target_value)
                      << ',' << fmt_double(e.slack) << ',' << (e.satisfied ? "true" : "false")
                      << "\n";
    } else {
        std::printf("%-20s %-5s %-8s %14s %14s %12s  %s\n", "bound_id", "kind", "target",
                    "bound", "target", "slack", "status");
        for (const auto& e : evals) {
            const double scale = std::max(1.0, e.target_value);
            const char* status = "OK";
            if (confirmed.count(e.bound_id)) status = "VIOL";
            else if (std::abs(e.slack) <= 10.0 * cfg.ineq_tol * scale) status = "TIGHT";
            std::printf("%-20s %-5s %-8s %14s %14s %12s  %s\n", e.bound_id.c_str(),
                        to_string(e.kind), to_string(e.target),
                        fmt_sig(e.bound_value).c_str(), fmt_sig(e.target_value).c_str(),
                        fmt_sig(e.slack).c_str(), status);
        }
    }
    return confirmed.empty() ? 0 : 1;
}

int cmd_verify(const std::string& kind_str, int dim, long trials, std::uint64_t seed,
               const std::string& bounds_csv, const std::string& out_path,
               const std::string& format, int workers, const ToleranceConfig& cfg) {
    EnsembleSpec spec;
    spec.kind = parse_ensemble_kind(kind_str);
    spec.dim = dim;
    spec.trials = trials;
    spec.seed = seed;
    spec.validate();

    std::vector<std::string> ids =
        bounds_csv.empty() ? catalog_ids() : split_ids(bounds_csv);

    const VerificationReport rep = run_verification(spec, ids, cfg, workers);

    // Deterministic per-bound summary on stdout; the full report (which
    // carries wall time) goes to --out.
    std::printf("%-20s %8s %10s %14s %14s %10s\n", "bound_id", "trials", "violations",
                "min_slack", "mean_slack", "tight");
    for (const auto& [id, st] : rep.per_bound)
        std::printf("%-20s %8ld %10ld %14s %14s %10ld\n", id.c_str(), st.trials, st.violations,
                    fmt_sig(st.min_slack).c_str(), fmt_sig(st.mean_slack()).c_str(),
                    st.tightness_hits);
    std::printf("confirmed violations: %ld\n", rep.total_violations());

    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "error: cannot write " << out_path << "\n";
            return 2;
        }
        out << emit_report(rep, format == "csv" ? ReportFormat::csv : ReportFormat::json);
    }
    return rep.total_violations() == 0 ? 0 : 1;
}

int cmd_sweep(const std::string& matrix_path, const std::string& matrix2_path,
              const std::string& param, int steps, const std::string& bound_id,
              const std::string& out_path, const ToleranceConfig& cfg) {
    if (steps < 2) {
        std::cerr << "error: --steps must be >= 2\n";
        return 2;
    }
    const ComplexMatrix b = load_matrix(matrix_path);
    const ComplexMatrix c = load_matrix(matrix2_path);

    const bool alpha_ok = bound_id == "th4.lower" || bound_id == "th5.upper" ||
                          bound_id == "drag01.lower";
    const bool s_ok = bound_id == "buzano.lower";
    const bool r_ok = bound_id == "jensen.upper.stated" || bound_id == "jensen.upper.derived";
    if ((param == "alpha" && !alpha_ok) || (param == "s" && !s_ok) || (param == "r" && !r_ok)) {
        std::cerr << "error: bound '" << bound_id << "' is not parameterized by " << param
                  << "\n";
        return 2;
    }
    if (param != "alpha" && param != "s" && param != "r") {
        std::cerr << "error: unknown sweep parameter '" << param << "'\n";
        return 2;
    }

    detail::PairContext ctx(b, c, cfg);
    std::ostringstream csv;
    csv << "param,bound_value,target_value,slack\n";
    for (int k = 0; k < steps; ++k) {
        double p = 0.0, bound = 0.0, target = 0.0, slack = 0.0;
        if (param == "alpha") {
            p = static_cast<double>(k) / (steps - 1);
            target = ctx.we_sq();
            if (bound_id == "th4.lower") bound = ctx.th4_value(p);
            else if (bound_id == "drag01.lower") bound = ctx.th4_value(0.5);
            else bound = ctx.th5_value(p, true);
            slack = bound_id == "th5.upper" ? bound - target : target - bound;
        } else if (param == "s") {
            p = static_cast<double>(k + 1) / (steps + 1); // s in open (0, 1)
            bound = ctx.buzano_product(p);
            target = 0.5 * ctx.norm_sum() * ctx.norm_sum();
            slack = bound - target;
        } else {
            p = 2.0 + 4.0 * static_cast<double>(k) / (steps - 1); // r in [2, 6]
            const double relax = 0.5 * std::pow(ctx.w_sum(), 2.0 * p) +
                                 0.5 * std::pow(ctx.w_diff(), 2.0 * p);
            const double rho = ctx.rho();
            bound = bound_id == "jensen.upper.stated"
                        ? relax - std::pow(2.0, p) * rho
                        : relax - std::pow(2.0, p) * std::pow(rho, p);
            target = std::pow(ctx.we_sq(), p);
            slack = bound - target;
        }
        csv << fmt_double(p) << ',' << fmt_double(bound) << ',' << fmt_double(target) << ','
            << fmt_double(slack) << "\n";
    }

    if (out_path.empty()) {
        std::cout << csv.str();
    } else {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "error: cannot write " << out_path << "\n";
            return 2;
        }
        out << csv.str();
    }
    return 0;
}

int cmd_range(const std::string& matrix_path, int points, const std::string& out_path,
              const ToleranceConfig& cfg) {
    if (points < 3) {
        std::cerr << "error: --points must be >= 3\n";
        return 2;
    }
    const ComplexMatrix a = load_matrix(matrix_path);
    const auto pts = numerical_range_boundary(a, points, cfg);
    std::ostringstream csv;
    csv << "theta,re,im\n";
    for (const auto& p : pts)
        csv << fmt_double(p.theta) << ',' << fmt_double(p.z.real()) << ','
            << fmt_double(p.z.imag()) << "\n";
    if (out_path.empty()) {
        std::cout << csv.str();
    } else {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "error: cannot write " << out_path << "\n";
            return 2;
        }
        out << csv.str();
    }
    return 0;
}

int run(int argc, char** argv) {
    CLI::App app{"numerical radius, Crawford number and Euclidean operator radius toolkit"};
    app.require_subcommand(1);

    // compute
    auto* compute = app.add_subcommand("compute", "compute one radius/norm quantity");
    std::string c_matrix, c_matrix2, c_quantity;
    bool c_json = false;
    ToleranceFlags c_tol;
    compute->add_option("--matrix", c_matrix, "matrix JSON file")->required();
    compute->add_option("--matrix2", c_matrix2, "second matrix JSON file (we, rho)");
    compute->add_option("--quantity", c_quantity, "one of w|c|norm|we|rho")->required();
    compute->add_flag("--json", c_json, "emit JSON with witness data");
    c_tol.attach(compute);

    // bounds
    auto* bounds = app.add_subcommand("bounds", "evaluate the bound catalog");
    std::string b_matrix, b_matrix2, b_only, b_format = "table";
    ToleranceFlags b_tol;
    bounds->add_option("--matrix", b_matrix, "matrix JSON file")->required();
    bounds->add_option("--matrix2", b_matrix2, "second matrix JSON file");
    bounds->add_option("--only", b_only, "comma-separated bound ids");
    bounds->add_option("--format", b_format, "table|json|csv")
        ->check(CLI::IsMember({"table", "json", "csv"}));
    b_tol.attach(bounds);

    // verify
    auto* verify = app.add_subcommand("verify", "random-ensemble inequality verification");
    std::string v_kind, v_bounds, v_out, v_format = "json";
    int v_dim = 0, v_workers = 1;
    long v_trials = 0;
    std::uint64_t v_seed = 42;
    ToleranceFlags v_tol;
    verify->add_option("--kind", v_kind,
                       "general|hermitian|normal|nilpotent|nilpotent2|unitary|diagonal")
        ->required();
    verify->add_option("--dim", v_dim, "matrix dimension (2..64)")->required();
    verify->add_option("--trials", v_trials, "trial count")->required();
    verify->add_option("--seed", v_seed, "ensemble seed")->envname("RADIUS_LAB_SEED");
    verify->add_option("--bounds", v_bounds, "comma-separated bound ids (default: all)");
    verify->add_option("--out", v_out, "report output file");
    verify->add_option("--format", v_format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
    verify->add_option("--workers", v_workers, "parallel trial workers");
    v_tol.attach(verify);

    // sweep
    auto* sweep = app.add_subcommand("sweep", "sweep a bound parameter and emit CSV");
    std::string s_matrix, s_matrix2, s_param, s_bound, s_out;
    int s_steps = 0;
    ToleranceFlags s_tol;
    sweep->add_option("--matrix", s_matrix, "matrix JSON file")->required();
    sweep->add_option("--matrix2", s_matrix2, "second matrix JSON file")->required();
    sweep->add_option("--param", s_param, "alpha|s|r")->required();
    sweep->add_option("--steps", s_steps, "grid size")->required();
    sweep->add_option("--bound", s_bound, "parameterized bound id")->required();
    sweep->add_option("--out", s_out, "CSV output file (default stdout)");
    s_tol.attach(sweep);

    // range
    auto* range = app.add_subcommand("range", "numerical range boundary points as CSV");
    std::string r_matrix, r_out;
    int r_points = 0;
    ToleranceFlags r_tol;
    range->add_option("--matrix", r_matrix, "matrix JSON file")->required();
    range->add_option("--points", r_points, "number of boundary points (>= 3)")->required();
    range->add_option("--out", r_out, "CSV output file (default stdout)");
    r_tol.attach(range);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    if (*compute) {
        c_tol.cfg.validate();
        return cmd_compute(c_matrix, c_matrix2, c_quantity, c_json, c_tol.cfg);
    }
    if (*bounds) {
        b_tol.cfg.validate();
        return cmd_bounds(b_matrix, b_matrix2, b_only, b_format, b_tol.cfg);
    }
    if (*verify) {
        v_tol.cfg.validate();
        return cmd_verify(v_kind, v_dim, v_trials, v_seed, v_bounds, v_out, v_format, v_workers,
                          v_tol.cfg);
    }
    if (*sweep) {
        s_tol.cfg.validate();
        return cmd_sweep(s_matrix, s_matrix2, s_param, s_steps, s_bound, s_out, s_tol.cfg);
    }
    if (*range) {
        r_tol.cfg.validate();
        return cmd_range(r_matrix, r_points, r_out, r_tol.cfg);
    }
    return 2;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const radlab::DimensionMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
