#pragma once

#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "radlab/bounds.hpp"
#include "radlab/ensemble.hpp"
#include "radlab/matrix_functions.hpp"
#include "radlab/matrix_io.hpp"
#include "radlab/num_format.hpp"
#include "radlab/radii.hpp"

namespace radlab {

struct PerBoundStats {
    long trials = 0;
    long violations = 0; // confirmed only
    double min_slack = std::numeric_limits<double>::infinity();
    double slack_sum = 0.0;
    long tightness_hits = 0;

    double mean_slack() const { return trials > 0 ? slack_sum / trials : 0.0; }
};

struct ViolationRecord {
    std::string bound_id;
    long trial_index = 0;
    std::uint64_t seed_used = 0;
    std::vector<ComplexMatrix> matrices;
    double bound_value = 0.0;
    double target_value = 0.0;
    double slack = 0.0;
    bool reverified = false; // recomputed at 4x resolution and still violated
};

struct VerificationReport {
    EnsembleSpec ensemble;
    std::map<std::string, PerBoundStats> per_bound;
    std::vector<ViolationRecord> violations;
    double wall_time_seconds = 0.0;

    long total_violations() const {
        long n = 0;
        for (const auto& [id, st] : per_bound) n += st.violations;
        return n;
    }
};

enum class ReportFormat { json, csv };

namespace detail {

struct TrialOutput {
    std::vector<BoundEvaluation> evals;
    std::vector<ViolationRecord> confirmed;
    bool failed = false;
};

inline void accumulate(VerificationReport& rep, const TrialOutput& t, double tightness_cut) {
    for (const BoundEvaluation& e : t.evals) {
        PerBoundStats& st = rep.per_bound[e.bound_id];
        ++st.trials;
        st.min_slack = std::min(st.min_slack, e.slack);
        st.slack_sum += e.slack;
        if (e.slack <= tightness_cut) ++st.tightness_hits;
    }
    for (const ViolationRecord& v : t.confirmed) {
        ++rep.per_bound[v.bound_id].violations;
        rep.violations.push_back(v);
    }
}

// Runs `fn(trial)` over [0, trials) on the requested worker count and folds
// results in trial order, so reports do not depend on scheduling.
template <class Fn>
std::vector<TrialOutput> run_trials(long trials, int workers, Fn&& fn) {
    std::vector<TrialOutput> slots(static_cast<std::size_t>(trials));
    const int w = std::max(1, workers);
    if (w == 1) {
        for (long t = 0; t < trials; ++t) slots[static_cast<std::size_t>(t)] = fn(t);
        return slots;
    }
    std::atomic<long> next{0};
    auto body = [&] {
        for (;;) {
            const long t = next.fetch_add(1);
            if (t >= trials) break;
            slots[static_cast<std::size_t>(t)] = fn(t);
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(w));
    for (int i = 0; i < w; ++i) pool.emplace_back(body);
    for (auto& th : pool) th.join();
    return slots;
}

} // namespace detail

/// Draws matrices per trial, evaluates the requested catalog subset, and
/// confirms any raw violation by re-running that bound at 4x resolution.
inline VerificationReport run_verification(const EnsembleSpec& spec,
                                           const std::vector<std::string>& bound_ids,
                                           const ToleranceConfig& cfg = {}, int workers = 1) {
    spec.validate();
    cfg.validate();
    if (bound_ids.empty()) throw InvalidSpec("bound id list must not be empty");
    std::set<std::string> pair_ids, single_ids;
    for (const std::string& id : bound_ids)
        (is_pair_bound(id) ? pair_ids : single_ids).insert(id);

    const auto t0 = std::chrono::steady_clock::now();
    const ToleranceConfig confirm_cfg = cfg.scaled(4);

    auto trial_fn = [&](long t) {
        detail::TrialOutput out;
        try {
            ComplexMatrix b, c;
            const bool want_pair = !pair_ids.empty();
            if (want_pair) {
                auto pr = generate_pair(spec, t);
                b = std::move(pr.first);
                c = std::move(pr.second);
            } else {
                b = generate_matrix(spec, t, 0);
            }
            if (want_pair) {
                auto evals = evaluate_pair_bounds(b, c, cfg, &pair_ids);
                out.evals.insert(out.evals.end(), evals.begin(), evals.end());
            }
            if (!single_ids.empty()) {
                auto evals = evaluate_single_bounds(b, cfg, &single_ids);
                out.evals.insert(out.evals.end(), evals.begin(), evals.end());
            }
            for (const BoundEvaluation& e : out.evals) {
                if (e.satisfied) continue;
                const std::set<std::string> one{e.bound_id};
                const auto again = is_pair_bound(e.bound_id)
                                       ? evaluate_pair_bounds(b, c, confirm_cfg, &one)
                                       : evaluate_single_bounds(b, confirm_cfg, &one);
                if (!again.empty() && again.front().satisfied) continue; // resolution artifact
                ViolationRecord v;
                v.bound_id = e.bound_id;
                v.trial_index = t;
                v.seed_used = spec.seed;
                v.matrices.push_back(b);
                if (is_pair_bound(e.bound_id)) v.matrices.push_back(c);
                v.bound_value = e.bound_value;
                v.target_value = e.target_value;
                v.slack = e.slack;
                v.reverified = true;
                out.confirmed.push_back(std::move(v));
            }
        } catch (const std::exception&) {
            out.failed = true;
            out.evals.clear();
            out.confirmed.clear();
        }
        return out;
    };

    const auto slots = detail::run_trials(spec.trials, workers, trial_fn);
    VerificationReport rep;
    rep.ensemble = spec;
    for (const auto& s : slots) detail::accumulate(rep, s, 10.0 * cfg.ineq_tol);
    rep.wall_time_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

// ---------------------------------------------------------------------------
// Scalar/vector lemma property suite.
//
// Slack conventions for identity/lemma rows: slack is the raw inequality
// margin (>= 0 when the statement holds); identities use
// tol - relative_error so a positive slack means "within tolerance".
// ---------------------------------------------------------------------------

inline VerificationReport lemma_property_suite(const EnsembleSpec& spec,
                                               const ToleranceConfig& cfg = {}) {
    spec.validate();
    cfg.validate();
    const auto t0 = std::chrono::steady_clock::now();
    constexpr double kAbsTol = 1e-10;

    auto trial_fn = [&](long t) {
        detail::TrialOutput out;
        Rng rng = detail::trial_rng(spec.seed, t, 7);
        const std::size_t n = static_cast<std::size_t>(spec.dim);

        ComplexMatrix a = generate_matrix(spec, t, 0);
        const double na = operator_norm(a, cfg);
        if (na > 0.0) a *= cplx(1.0 / na, 0.0); // unit scale for absolute tolerances

        const Vector x = rng.unit_vector(n);
        const Vector y = rng.unit_vector(n);
        const Vector e = rng.unit_vector(n);
        double alpha = rng.uniform();
        const double endpoint_draw = rng.uniform();
        if (endpoint_draw < 0.05) alpha = 0.0;
        else if (endpoint_draw < 0.10) alpha = 1.0;
        const double p = 2.0 + 2.0 * rng.uniform();
        const double s = 0.05 + 0.9 * rng.uniform();

        auto push = [&](const char* id, double slack) {
            BoundEvaluation ev;
            ev.bound_id = id;
            ev.kind = BoundKind::lower;
            ev.target = BoundTarget::norm_sq;
            ev.bound_value = 0.0;
            ev.target_value = slack;
            ev.slack = slack;
            ev.satisfied = slack >= -kAbsTol;
            ev.paper_id = "scalar/vector lemma";
            out.evals.push_back(ev);
            if (slack < -kAbsTol) {
                ViolationRecord v;
                v.bound_id = id;
                v.trial_index = t;
                v.seed_used = spec.seed;
                v.matrices.push_back(a);
                v.slack = slack;
                v.reverified = true;
                out.confirmed.push_back(std::move(v));
            }
        };

        // Mixed Cauchy-Schwarz: |<Ax,y>|^2 <= <|A|^{2a} x,x> <|A*|^{2(1-a)} y,y>
        {
            const ComplexMatrix pa = psd_power(detail::gram(a), alpha, cfg);
            const ComplexMatrix pb = psd_power(detail::cogram(a), 1.0 - alpha, cfg);
            const double lhs = std::norm(dot(matvec(a, x), y));
            const double rhs = std::real(quadratic_form(pa, x)) * std::real(quadratic_form(pb, y));
            push("lem1", rhs - lhs);
        }
        // Buzano: |<x,e><e,y>| <= (|<x,y>| + ||x|| ||y||) / 2 on scaled vectors.
        {
            Vector xs = x, ys = y;
            const double sx = 0.5 + 1.5 * rng.uniform(), sy = 0.5 + 1.5 * rng.uniform();
            for (auto& z : xs) z *= sx;
            for (auto& z : ys) z *= sy;
            const double lhs = std::abs(dot(xs, e) * dot(e, ys));
            const double rhs = 0.5 * (std::abs(dot(xs, ys)) + vec_norm(xs) * vec_norm(ys));
            push("lem11", rhs - lhs);
        }
        // Superquadratic Jensen on a positive sequence.
        {
            const int m = 2 + static_cast<int>(rng.uniform() * 7.0);
            std::vector<double> seq(static_cast<std::size_t>(m));
            for (double& v : seq) v = std::abs(rng.gaussian()) + 0.01;
            double mean = 0.0;
            for (double v : seq) mean += v;
            mean /= m;
            double power_mean = 0.0, spread = 0.0;
            for (double v : seq) {
                power_mean += std::pow(v, p);
                spread += std::pow(std::abs(v - mean), p);
            }
            power_mean /= m;
            spread /= m;
            push("b3", power_mean - spread - std::pow(mean, p));
        }
        // Generalized Cauchy-Schwarz: |<Ax,y>| <= || |A|^s x || * || |A*|^{1-s} y ||
        {
            const ComplexMatrix fs = psd_power(detail::gram(a), 0.5 * s, cfg);
            const ComplexMatrix gs = psd_power(detail::cogram(a), 0.5 * (1.0 - s), cfg);
            const double lhs = std::abs(dot(matvec(a, x), y));
            const double rhs = vec_norm(matvec(fs, x)) * vec_norm(matvec(gs, y));
            push("b2", rhs - lhs);
        }
        return out;
    };

    const auto slots = detail::run_trials(spec.trials, 1, trial_fn);
    VerificationReport rep;
    rep.ensemble = spec;
    for (const auto& s : slots) detail::accumulate(rep, s, 10.0 * cfg.ineq_tol);
    rep.wall_time_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

/// Identity checks: w_e(B+C, B-C)^2 = 2 w_e(B, C)^2 for any pair, and the
/// self-adjoint collapse w_e(P, Q) = w(P + iQ), each within 1e-6 relative.
inline VerificationReport identity_suite(const EnsembleSpec& spec,
                                         const ToleranceConfig& cfg = {}, int workers = 1) {
    spec.validate();
    cfg.validate();
    const auto t0 = std::chrono::steady_clock::now();
    constexpr double kRelTol = 1e-6;

    auto trial_fn = [&](long t) {
        detail::TrialOutput out;
        auto [b, c] = generate_pair(spec, t);

        auto push = [&](const char* id, double lhs, double rhs) {
            const double rel = std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs));
            BoundEvaluation ev;
            ev.bound_id = id;
            ev.kind = BoundKind::lower;
            ev.target = BoundTarget::we_sq;
            ev.bound_value = lhs;
            ev.target_value = rhs;
            ev.slack = kRelTol - rel;
            ev.satisfied = rel <= kRelTol;
            ev.paper_id = "radius identity";
            out.evals.push_back(ev);
            if (rel > kRelTol) {
                ViolationRecord v;
                v.bound_id = id;
                v.trial_index = t;
                v.seed_used = spec.seed;
                v.matrices.push_back(b);
                v.matrices.push_back(c);
                v.bound_value = lhs;
                v.target_value = rhs;
                v.slack = kRelTol - rel;
                v.reverified = true;
                out.confirmed.push_back(std::move(v));
            }
        };

        const double we = euclidean_radius(b, c, cfg).value;
        const double we_sd = euclidean_radius(b + c, b - c, cfg).value;
        push("identity.eq5", we_sd * we_sd, 2.0 * we * we);

        if (b.is_exactly_hermitian() && c.is_exactly_hermitian()) {
            const double lhs = we; // already the Hermitian pair
            const double rhs = numerical_radius(detail::hermitian_combo(b, c), cfg).value;
            push("identity.hermitian", lhs, rhs);
        } else {
            // Cartesian parts of B: w_e(Re B, Im B) must equal w(B).
            const double lhs = euclidean_radius(re_part(b), im_part(b), cfg).value;
            const double rhs = numerical_radius(b, cfg).value;
            push("identity.hermitian", lhs, rhs);
        }
        return out;
    };

    const auto slots = detail::run_trials(spec.trials, workers, trial_fn);
    VerificationReport rep;
    rep.ensemble = spec;
    for (const auto& s : slots) detail::accumulate(rep, s, 10.0 * cfg.ineq_tol);
    rep.wall_time_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

// ---------------------------------------------------------------------------
// Report emission.
// ---------------------------------------------------------------------------

inline nlohmann::json report_to_json(const VerificationReport& rep) {
    nlohmann::json per_bound = nlohmann::json::object();
    for (const auto& [id, st] : rep.per_bound)
        per_bound[id] = {{"trials", st.trials},
                         {"violations", st.violations},
                         {"min_slack", st.min_slack},
                         {"mean_slack", st.mean_slack()},
                         {"tightness_hits", st.tightness_hits}};
    nlohmann::json violations = nlohmann::json::array();
    for (const ViolationRecord& v : rep.violations) {
        nlohmann::json ms = nlohmann::json::array();
        for (const ComplexMatrix& m : v.matrices) ms.push_back(matrix_to_json(m));
        violations.push_back({{"bound_id", v.bound_id},
                              {"trial_index", v.trial_index},
                              {"seed_used", v.seed_used},
                              {"matrices", std::move(ms)},
                              {"bound_value", v.bound_value},
                              {"target_value", v.target_value},
                              {"slack", v.slack},
                              {"reverified", v.reverified}});
    }
    return {{"ensemble",
             {{"kind", to_string(rep.ensemble.kind)},
              {"dim", rep.ensemble.dim},
              {"trials", rep.ensemble.trials},
              {"seed", rep.ensemble.seed}}},
            {"per_bound", std::move(per_bound)},
            {"violations", std::move(violations)},
            {"wall_time", rep.wall_time_seconds}};
}

inline std::string emit_report(const VerificationReport& rep, ReportFormat format) {
    if (format == ReportFormat::json) return report_to_json(rep).dump(2) + "\n";
    std::string out = "bound_id,trials,violations,min_slack,mean_slack,tightness_hits\n";
    for (const auto& [id, st] : rep.per_bound) {
        out += id;
        out += ',';
        out += std::to_string(st.trials);
        out += ',';
        out += std::to_string(st.violations);
        out += ',';
        out += fmt_double(st.min_slack);
        out += ',';
        out += fmt_double(st.mean_slack());
        out += ',';
        out += std::to_string(st.tightness_hits);
        out += '\n';
    }
    return out;
}

} // namespace radlab
