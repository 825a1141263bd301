// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Heavy randomized runs use every available core.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <thread>
#include <vector>

#include "radlab/radlab.hpp"

using namespace radlab;

namespace {

int g_failures = 0;

int workers() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

template <class F>
void criterion(int id, const std::string& title, F&& body) {
    const auto t0 = std::chrono::steady_clock::now();
    bool pass = false;
    std::string detail;
    try {
        detail = body(pass);
    } catch (const std::exception& e) {
        pass = false;
        detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!pass) ++g_failures;
    std::printf("%s criterion %d [%6.1f s] %s%s%s\n", pass ? "PASS" : "FAIL", id, secs,
                title.c_str(), detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
}

ComplexMatrix scaled(const ComplexMatrix& m, double s) {
    ComplexMatrix out = m;
    out *= cplx(s, 0.0);
    return out;
}

std::string fmt_count(long violations, long trials) {
    return std::to_string(violations) + " violations / " + std::to_string(trials) + " trials";
}

} // namespace

int main() {
    const ToleranceConfig cfg; // spec defaults; ineq_tol = 1e-6

    // 1: worked diagonal example, including the strict-refinement gap 2 < 4.
    criterion(1, "worked example: drag01 = 2, alpha-grid max = 4, w_e = 2", [&](bool& pass) {
        const auto t0 = std::chrono::steady_clock::now();
        const ComplexMatrix b = ComplexMatrix::diagonal({1.0, 0.0});
        const ComplexMatrix c = ComplexMatrix::diagonal({0.0, 2.0});
        const auto evals = th4_lower(b, c, 9, cfg);
        double drag = 0.0, grid = 0.0;
        for (const auto& e : evals) {
            if (e.bound_id == "drag01.lower") drag = e.bound_value;
            if (e.bound_id == "th4.lower") grid = e.bound_value;
        }
        const double we = euclidean_radius(b, c, cfg).value;
        const double we_oracle = sphere_oracle_radius(b, &c, cfg).value;
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        pass = std::abs(drag - 2.0) <= 1e-9 && std::abs(grid - 4.0) <= 1e-9 &&
               std::abs(we - 2.0) <= 1e-6 && std::abs(we_oracle - we) <= 1e-4 && secs < 1.0;
        char buf[160];
        std::snprintf(buf, sizeof(buf), "drag01=%.12g gridmax=%.12g w_e=%.12g", drag, grid, we);
        return std::string(buf);
    });

    // 2: equality-case ensembles.
    criterion(2, "equality cases: square-zero lower bounds, normal upper bound",
              [&](bool& pass) {
        const auto t0 = std::chrono::steady_clock::now();
        long bad = 0;
        EnsembleSpec nil{EnsembleKind::nilpotent2, 4, 200, 2001};
        for (long t = 0; t < nil.trials; ++t) {
            const ComplexMatrix a = generate_matrix(nil, t);
            const double w = numerical_radius(a, cfg).value;
            const double nm = operator_norm(a, cfg);
            ComplexMatrix g = detail::gram(a) + detail::cogram(a);
            const double quarter = 0.25 * detail::jacobi_extremes_inplace(g, cfg.eig_tol).max;
            if (std::abs(w - 0.5 * nm) > 1e-6) ++bad;
            if (std::abs(w * w - quarter) > 1e-6) ++bad;
        }
        EnsembleSpec nrm{EnsembleKind::normal, 4, 200, 2002};
        for (long t = 0; t < nrm.trials; ++t) {
            const ComplexMatrix a = generate_matrix(nrm, t);
            if (std::abs(numerical_radius(a, cfg).value - operator_norm(a, cfg)) > 1e-6) ++bad;
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        pass = bad == 0 && secs < 30.0;
        return fmt_count(bad, 400);
    });

    // 3: full catalog over four ensembles, dims 2..8.
    criterion(3, "full inequality verification, 1000 trials per ensemble kind",
              [&](bool& pass) {
        const EnsembleKind kinds[] = {EnsembleKind::general, EnsembleKind::hermitian,
                                      EnsembleKind::normal, EnsembleKind::diagonal};
        long violations = 0, trials = 0;
        int kind_idx = 0;
        for (EnsembleKind kind : kinds) {
            for (int dim = 2; dim <= 8; ++dim) {
                const long count = dim == 8 ? 142 : 143; // 1000 per kind
                EnsembleSpec spec{kind, dim, count,
                                  static_cast<std::uint64_t>(3000 + 10 * kind_idx + dim)};
                const auto rep = run_verification(spec, catalog_ids(), cfg, workers());
                violations += rep.total_violations();
                trials += count;
            }
            ++kind_idx;
        }
        pass = violations == 0 && trials == 4000;
        return fmt_count(violations, trials);
    });

    // 4: sweep values against the sphere-search oracle.
    criterion(4, "oracle equivalence on 100 random draws, dims <= 5", [&](bool& pass) {
        long bad = 0;
        for (long i = 0; i < 100; ++i) {
            const int dim = 2 + static_cast<int>(i % 4);
            EnsembleSpec spec{EnsembleKind::general, dim, 100, 4004};
            const auto [a, b] = generate_pair(spec, i);

            const double w = numerical_radius(a, cfg).value;
            const double w_o = sphere_oracle_radius(a, nullptr, cfg).value;
            if (std::abs(w - w_o) > 1e-4 * std::max({1.0, w, w_o})) ++bad;

            const double c = crawford_number(a, cfg).value;
            const double c_o = sphere_oracle_crawford(a, cfg).value;
            if (std::abs(c - c_o) > 1e-4 * std::max({1.0, c, c_o})) ++bad;

            const double we = euclidean_radius(a, b, cfg).value;
            const double we_o = sphere_oracle_radius(a, &b, cfg).value;
            if (std::abs(we - we_o) > 1e-4 * std::max({1.0, we, we_o})) ++bad;
        }
        pass = bad == 0;
        return fmt_count(bad, 300);
    });

    // 5: identities, 500 trials each.
    criterion(5, "identity suite: doubling identity and self-adjoint collapse",
              [&](bool& pass) {
        long violations = 0;
        for (int dim = 2; dim <= 5; ++dim) {
            EnsembleSpec spec{EnsembleKind::general, dim, 125,
                              static_cast<std::uint64_t>(5000 + dim)};
            violations += identity_suite(spec, cfg, workers()).total_violations();
            spec.kind = EnsembleKind::hermitian;
            spec.seed = static_cast<std::uint64_t>(5100 + dim);
            violations += identity_suite(spec, cfg, workers()).total_violations();
        }
        pass = violations == 0;
        return fmt_count(violations, 1000);
    });

    // 6: dominance chains per trial.
    criterion(6, "dominance chains over 1000 general trials", [&](bool& pass) {
        long bad = 0;
        for (long i = 0; i < 1000; ++i) {
            const int dim = 2 + static_cast<int>(i % 5);
            EnsembleSpec spec{EnsembleKind::general, dim, 1000, 6006};
            const auto [b, c] = generate_pair(spec, i);
            detail::PairContext ctx(b, c, cfg);

            const double th1_lo = 0.5 * ctx.w_sq_sum() +
                                  0.5 * std::max(ctx.w_b(), ctx.w_c()) *
                                      std::abs(ctx.w_sum() - ctx.w_diff());
            const double d06_lo = 0.5 * ctx.w_sq_sum();
            if (th1_lo < d06_lo - cfg.ineq_tol * std::max(1.0, d06_lo)) ++bad;

            const double th2_lo =
                0.5 * std::max(ctx.w_sum() * ctx.w_sum() + ctx.c_diff() * ctx.c_diff(),
                               ctx.w_diff() * ctx.w_diff() + ctx.c_sum() * ctx.c_sum());
            const double weak =
                0.5 * std::max(ctx.w_sum() * ctx.w_sum(), ctx.w_diff() * ctx.w_diff());
            if (th2_lo < weak - cfg.ineq_tol * std::max(1.0, weak)) ++bad;

            detail::SingleContext sctx(b, cfg);
            const double pcor_up = [&] {
                const double w = sctx.w_abs_cartesian();
                return w * w;
            }();
            const double k5_up = 0.5 * sctx.norm_gram_sum();
            const double re_im = sctx.norm_re() * sctx.norm_re() +
                                 sctx.norm_im() * sctx.norm_im();
            if (pcor_up > k5_up + cfg.ineq_tol * std::max(1.0, k5_up)) ++bad;
            if (k5_up > re_im + cfg.ineq_tol * std::max(1.0, re_im)) ++bad;

            const double cor1_up = 0.5 * sctx.w_abs_a_astar() * sctx.w_abs_astar_a();
            if (cor1_up > k5_up + cfg.ineq_tol * std::max(1.0, k5_up)) ++bad;
        }
        pass = bad == 0;
        return fmt_count(bad, 1000);
    });

    // 7: scalar/vector lemma suites, 10^4 draws each.
    criterion(7, "lemma suites over 10^4 draws", [&](bool& pass) {
        EnsembleSpec spec{EnsembleKind::general, 4, 10000, 7007};
        const auto rep = lemma_property_suite(spec, cfg);
        long viol = rep.total_violations();
        double worst = 0.0;
        for (const char* id : {"lem1", "lem11", "b3", "b2"})
            worst = std::min(worst, rep.per_bound.at(id).min_slack);
        pass = viol == 0;
        char buf[96];
        std::snprintf(buf, sizeof(buf), "%ld violations, worst slack %.3e", viol, worst);
        return std::string(buf);
    });

    // 8: degree-2 homogeneity under (B, C) -> (sB, sC).
    criterion(8, "homogeneity of every catalog bound, 100 trials", [&](bool& pass) {
        long bad = 0;
        Rng srng(8008);
        for (long i = 0; i < 100; ++i) {
            const int dim = 2 + static_cast<int>(i % 3);
            EnsembleSpec spec{EnsembleKind::general, dim, 100, 8009};
            const auto [b, c] = generate_pair(spec, i);
            const double s = std::exp(std::log(0.1) + srng.uniform() * std::log(100.0));

            const auto base_pair = evaluate_pair_bounds(b, c, cfg, nullptr);
            const auto scal_pair = evaluate_pair_bounds(scaled(b, s), scaled(c, s), cfg, nullptr);
            const auto base_single = evaluate_single_bounds(b, cfg, nullptr);
            const auto scal_single = evaluate_single_bounds(scaled(b, s), cfg, nullptr);

            auto compare = [&](const std::vector<BoundEvaluation>& lo,
                               const std::vector<BoundEvaluation>& hi) {
                if (lo.size() != hi.size()) {
                    ++bad;
                    return;
                }
                for (std::size_t k = 0; k < lo.size(); ++k) {
                    // The stated jensen form mixes a degree-2r sum with a
                    // degree-2 subtrahend (the transcribed inequality drops
                    // the exponent), so no fixed power law applies to it.
                    if (lo[k].bound_id == "jensen.upper.stated") continue;
                    const double expo = lo[k].target == BoundTarget::we_2r ? 4.0 : 2.0;
                    const double factor = std::pow(s, expo);
                    const double want = factor * lo[k].bound_value;
                    if (std::abs(hi[k].bound_value - want) > 1e-9 * std::max(1.0, std::abs(want)))
                        ++bad;
                }
            };
            compare(base_pair, scal_pair);
            compare(base_single, scal_single);
        }
        pass = bad == 0;
        return fmt_count(bad, 100);
    });

    std::printf("%d of 8 criteria failed\n", g_failures);
    return g_failures;
}
