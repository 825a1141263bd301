#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "radlab/complex_matrix.hpp"
#include "radlab/matrix_functions.hpp"
#include "radlab/radii.hpp"
#include "radlab/tolerance.hpp"

namespace radlab {

enum class BoundKind { lower, upper };
enum class BoundTarget { w_sq, we_sq, norm_sq, we_2r };

inline const char* to_string(BoundKind k) { return k == BoundKind::lower ? "lower" : "upper"; }

inline const char* to_string(BoundTarget t) {
    switch (t) {
        case BoundTarget::w_sq: return "w_sq";
        case BoundTarget::we_sq: return "we_sq";
        case BoundTarget::norm_sq: return "norm_sq";
        case BoundTarget::we_2r: return "we_2r";
    }
    return "?";
}

/// One bound instance evaluated against its target quantity.
struct BoundEvaluation {
    std::string bound_id;
    BoundKind kind = BoundKind::lower;
    BoundTarget target = BoundTarget::w_sq;
    double bound_value = 0.0;
    double target_value = 0.0;
    double slack = 0.0; // target-bound for lower bounds, bound-target for upper
    bool satisfied = false;
    std::string paper_id;
};

inline nlohmann::json to_json(const BoundEvaluation& e) {
    return {{"bound_id", e.bound_id},   {"kind", to_string(e.kind)},
            {"target", to_string(e.target)}, {"bound_value", e.bound_value},
            {"target_value", e.target_value}, {"slack", e.slack},
            {"satisfied", e.satisfied}, {"paper_id", e.paper_id}};
}

namespace detail {

struct CatalogEntry {
    const char* id;
    BoundKind kind;
    BoundTarget target;
    bool pair;          // evaluated on a pair (B, C) rather than a single A
    bool hermitian_only;
    const char* label;
};

inline const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = {
        // single-operator bounds, target w^2(A)
        {"eqv.lower", BoundKind::lower, BoundTarget::w_sq, false, false,
         "classical norm equivalence"},
        {"eqv.upper", BoundKind::upper, BoundTarget::w_sq, false, false,
         "classical norm equivalence"},
        {"k5.lower", BoundKind::lower, BoundTarget::w_sq, false, false,
         "Kittaneh norm refinement"},
        {"k5.upper", BoundKind::upper, BoundTarget::w_sq, false, false,
         "Kittaneh norm refinement"},
        {"pcor.lower", BoundKind::lower, BoundTarget::w_sq, false, false,
         "Cartesian modulus-pair refinement"},
        {"pcor.upper", BoundKind::upper, BoundTarget::w_sq, false, false,
         "Cartesian modulus-pair refinement"},
        {"cor1.lower", BoundKind::lower, BoundTarget::w_sq, false, false,
         "adjoint-pair instantiation"},
        {"cor1.upper", BoundKind::upper, BoundTarget::w_sq, false, false,
         "adjoint-pair instantiation"},
        {"th3.remark.single", BoundKind::upper, BoundTarget::w_sq, false, false,
         "Buzano-route single-operator bound"},
        {"corn1.lower", BoundKind::lower, BoundTarget::w_sq, false, false,
         "Cartesian alpha-interpolation bound"},
        // pair bounds, target w_e^2(B, C) unless noted
        {"eqn1.lower", BoundKind::lower, BoundTarget::we_sq, true, false,
         "Popescu norm equivalence"},
        {"eqn1.upper", BoundKind::upper, BoundTarget::we_sq, true, false,
         "Popescu norm equivalence"},
        {"eqn2.lower", BoundKind::lower, BoundTarget::we_sq, true, true,
         "self-adjoint norm equivalence"},
        {"eqn2.upper", BoundKind::upper, BoundTarget::we_sq, true, true,
         "self-adjoint norm equivalence"},
        {"d06.lower", BoundKind::lower, BoundTarget::we_sq, true, false,
         "Dragomir pair lower bound"},
        {"th1.lower", BoundKind::lower, BoundTarget::we_sq, true, false,
         "weighted sum-difference lower bound"},
        {"th1.upper", BoundKind::upper, BoundTarget::we_sq, true, false,
         "modulus-pair product upper bound"},
        {"th1.remark.upper", BoundKind::upper, BoundTarget::we_sq, true, false,
         "gram-norm product upper bound"},
        {"eq2.lower", BoundKind::lower, BoundTarget::we_sq, true, true,
         "self-adjoint modulus-pair refinement"},
        {"eq2.upper", BoundKind::upper, BoundTarget::we_sq, true, true,
         "self-adjoint modulus-pair refinement"},
        {"th2.lower", BoundKind::lower, BoundTarget::we_sq, true, false,
         "radius-Crawford sum-difference lower bound"},
        {"cor2.lower", BoundKind::lower, BoundTarget::we_sq, true, false,
         "componentwise radius-Crawford lower bound"},
        {"th3.upper", BoundKind::upper, BoundTarget::we_sq, true, false,
         "Buzano-route pair upper bound"},
        {"th4.lower", BoundKind::lower, BoundTarget::we_sq, true, false,
         "alpha-interpolated squares lower bound"},
        {"drag01.lower", BoundKind::lower, BoundTarget::we_sq, true, false,
         "midpoint squares lower bound"},
        {"th5.upper", BoundKind::upper, BoundTarget::we_sq, true, false,
         "rotated-combination squares upper bound"},
        {"th5.remark.half", BoundKind::upper, BoundTarget::we_sq, true, false,
         "half sum-of-squares upper bound"},
        {"jensen.upper.stated", BoundKind::upper, BoundTarget::we_2r, true, false,
         "superquadratic power-mean bound, stated form"},
        {"jensen.upper.derived", BoundKind::upper, BoundTarget::we_2r, true, false,
         "superquadratic power-mean bound, derived form"},
        // the product of Euclidean radii dominates the squared norm; the
        // ".lower" id reflects the written direction of the inequality
        {"buzano.lower", BoundKind::upper, BoundTarget::norm_sq, true, false,
         "generalized Cauchy-Schwarz norm bound"},
    };
    return entries;
}

inline const CatalogEntry& catalog_entry(const std::string& id) {
    for (const CatalogEntry& e : catalog())
        if (id == e.id) return e;
    throw InvalidSpec("unknown bound id: " + id);
}

inline BoundEvaluation finish_eval(const char* id, double bound, double target,
                                   const ToleranceConfig& cfg) {
    const CatalogEntry& e = catalog_entry(id);
    BoundEvaluation ev;
    ev.bound_id = e.id;
    ev.kind = e.kind;
    ev.target = e.target;
    ev.bound_value = bound;
    ev.target_value = target;
    ev.slack = e.kind == BoundKind::lower ? target - bound : bound - target;
    ev.satisfied = ev.slack >= -cfg.ineq_tol * std::max(1.0, target);
    ev.paper_id = e.label;
    return ev;
}

inline ComplexMatrix hermitian_combo(const ComplexMatrix& p, const ComplexMatrix& q) {
    // P + iQ for Hermitian P, Q; then w_e(P, Q) = w(P + iQ).
    const std::size_t n = p.dim();
    ComplexMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = p(i, j) + cplx(0.0, 1.0) * q(i, j);
    return m;
}

// Lazily-shared quantities for the pair catalog. All radii flow through the
// `radii` sweeps so each bound evaluation is a genuine two-sided comparison.
struct PairContext {
    ComplexMatrix b, c;
    ToleranceConfig cfg;
    bool herm;

    PairContext(const ComplexMatrix& bb, const ComplexMatrix& cc, const ToleranceConfig& t)
        : b(bb), c(cc), cfg(t),
          herm(bb.is_exactly_hermitian() && cc.is_exactly_hermitian()) {
        b.check_same_dim(c);
    }

    double we_sq() { return memo(we_sq_, [&] { return sq(euclidean_radius(b, c, cfg).value); }); }
    double w_b() { return memo(w_b_, [&] { return numerical_radius(b, cfg).value; }); }
    double w_c() { return memo(w_c_, [&] { return numerical_radius(c, cfg).value; }); }
    double c_b() { return memo(c_b_, [&] { return crawford_number(b, cfg).value; }); }
    double c_c() { return memo(c_c_, [&] { return crawford_number(c, cfg).value; }); }
    double w_sum() { return memo(w_sum_, [&] { return numerical_radius(b + c, cfg).value; }); }
    double w_diff() { return memo(w_diff_, [&] { return numerical_radius(b - c, cfg).value; }); }
    double c_sum() { return memo(c_sum_, [&] { return crawford_number(b + c, cfg).value; }); }
    double c_diff() { return memo(c_diff_, [&] { return crawford_number(b - c, cfg).value; }); }
    double w_sq_sum() { return memo(w_sq_sum_, [&] {
        return numerical_radius(b2() + c2(), cfg).value; }); }
    double w_bc() { return memo(w_bc_, [&] { return numerical_radius(b * c, cfg).value; }); }
    double rho() { return memo(rho_, [&] { return real_product_inf(b, c, cfg).value; }); }

    double norm_gram_gram() { return memo(n_gg_, [&] {
        return hnorm(gram(b) + gram(c)); }); }          // ||B*B + C*C||
    double norm_cogram_cogram() { return memo(n_cc_, [&] {
        return hnorm(cogram(b) + cogram(c)); }); }      // ||BB* + CC*||
    double norm_gram_cogram() { return memo(n_gc_, [&] {
        return hnorm(gram(b) + cogram(c)); }); }        // ||B*B + CC*||
    double norm_cogram_gram() { return memo(n_cg_, [&] {
        return hnorm(cogram(b) + gram(c)); }); }        // ||BB* + C*C||
    double norm_sq_plus() { return memo(n_b2c2_, [&] { return hnorm(b2() + c2()); }); }
    double norm_b() { return memo(n_b_, [&] { return operator_norm(b, cfg); }); }
    double norm_c() { return memo(n_c_, [&] { return operator_norm(c, cfg); }); }
    double norm_sum() { return memo(n_sum_, [&] { return operator_norm(b + c, cfg); }); }
    double norm_diff() { return memo(n_diff_, [&] { return operator_norm(b - c, cfg); }); }

    double w_abs_pp() { return memo(w_abs_pp_, [&] {
        return numerical_radius(hermitian_combo(abs_b(), abs_c()), cfg).value; }); }
    double w_abs_ss() { return memo(w_abs_ss_, [&] {
        return numerical_radius(hermitian_combo(abs_bs(), abs_cs()), cfg).value; }); }
    double w_abs_ps() { return memo(w_abs_ps_, [&] {
        return numerical_radius(hermitian_combo(abs_b(), abs_cs()), cfg).value; }); }
    double w_abs_sp() { return memo(w_abs_sp_, [&] {
        return numerical_radius(hermitian_combo(abs_bs(), abs_c()), cfg).value; }); }

    double th4_value(double alpha) {
        if (alpha == 0.5 && th4_mid_) return *th4_mid_;
        ComplexMatrix m = b2();
        m *= cplx(alpha, 0.0);
        ComplexMatrix m2 = c2();
        m2 *= cplx(1.0 - alpha, 0.0);
        const double v = numerical_radius(m + m2, cfg).value;
        if (alpha == 0.5) th4_mid_ = v;
        return v;
    }

    double th5_value(double alpha, bool minus_form) {
        const double ra = std::sqrt(alpha), rb = std::sqrt(1.0 - alpha);
        ComplexMatrix first = b;
        first *= cplx(ra, 0.0);
        {
            ComplexMatrix t = c;
            t *= cplx(rb, 0.0);
            first += t;
        }
        ComplexMatrix second = b;
        second *= cplx(rb, 0.0);
        {
            ComplexMatrix t = c;
            t *= cplx(minus_form ? -ra : ra, 0.0);
            second += t;
        }
        return sq(numerical_radius(first, cfg).value) + sq(numerical_radius(second, cfg).value);
    }

    // w_e(|B|^{2s}, |C|^{2s}) * w_e(|B*|^{2(1-s)}, |C*|^{2(1-s)}); the
    // operands are Hermitian PSD so each factor reduces to one w sweep.
    double buzano_product(double s) {
        if (s == 0.5) return w_abs_pp() * w_abs_ss(); // |X|^{2s} = |X| exactly
        const ComplexMatrix fb = psd_power(gram(b), s, cfg);
        const ComplexMatrix fc = psd_power(gram(c), s, cfg);
        const ComplexMatrix gb = psd_power(cogram(b), 1.0 - s, cfg);
        const ComplexMatrix gc = psd_power(cogram(c), 1.0 - s, cfg);
        return numerical_radius(hermitian_combo(fb, fc), cfg).value *
               numerical_radius(hermitian_combo(gb, gc), cfg).value;
    }

    const ComplexMatrix& b2() {
        if (!b2_) b2_ = b * b;
        return *b2_;
    }
    const ComplexMatrix& c2() {
        if (!c2_) c2_ = c * c;
        return *c2_;
    }
    const ComplexMatrix& abs_b() {
        if (!abs_b_) abs_b_ = matrix_abs(b, cfg);
        return *abs_b_;
    }
    const ComplexMatrix& abs_bs() {
        if (!abs_bs_) abs_bs_ = matrix_abs(adjoint(b), cfg);
        return *abs_bs_;
    }
    const ComplexMatrix& abs_c() {
        if (!abs_c_) abs_c_ = matrix_abs(c, cfg);
        return *abs_c_;
    }
    const ComplexMatrix& abs_cs() {
        if (!abs_cs_) abs_cs_ = matrix_abs(adjoint(c), cfg);
        return *abs_cs_;
    }

private:
    static double sq(double v) { return v * v; }
    double hnorm(ComplexMatrix m) { // operator norm of a Hermitian matrix
        const Extremes e = jacobi_extremes_inplace(m, cfg.eig_tol);
        return std::max(std::abs(e.max), std::abs(e.min));
    }
    template <class F>
    double memo(std::optional<double>& slot, F&& f) {
        if (!slot) slot = f();
        return *slot;
    }
    std::optional<double> we_sq_, w_b_, w_c_, c_b_, c_c_, w_sum_, w_diff_, c_sum_, c_diff_,
        w_sq_sum_, w_bc_, rho_, n_gg_, n_cc_, n_gc_, n_cg_, n_b2c2_, n_b_, n_c_, n_sum_, n_diff_,
        w_abs_pp_, w_abs_ss_, w_abs_ps_, w_abs_sp_, th4_mid_;
    std::optional<ComplexMatrix> b2_, c2_, abs_b_, abs_bs_, abs_c_, abs_cs_;
};

// Shared quantities for the single-operator catalog.
struct SingleContext {
    ComplexMatrix a;
    ToleranceConfig cfg;

    SingleContext(const ComplexMatrix& aa, const ToleranceConfig& t) : a(aa), cfg(t) {}

    double w_sq() { return memo(w_sq_, [&] {
        const double w = numerical_radius(a, cfg).value;
        return w * w; }); }
    double w() { return std::sqrt(w_sq()); }
    double norm_a() { return memo(norm_a_, [&] { return operator_norm(a, cfg); }); }
    double norm_gram_sum() { return memo(norm_gram_sum_, [&] {
        ComplexMatrix m = gram(a) + cogram(a);
        const Extremes e = jacobi_extremes_inplace(m, cfg.eig_tol);
        return std::max(std::abs(e.max), std::abs(e.min)); }); }

    const ComplexMatrix& re_a() {
        if (!re_a_) re_a_ = re_part(a);
        return *re_a_;
    }
    const ComplexMatrix& im_a() {
        if (!im_a_) im_a_ = im_part(a);
        return *im_a_;
    }
    double norm_re() { return memo(norm_re_, [&] { return operator_norm(re_a(), cfg); }); }
    double norm_im() { return memo(norm_im_, [&] { return operator_norm(im_a(), cfg); }); }
    double norm_re_plus_im() { return memo(norm_rpi_, [&] {
        return operator_norm(re_a() + im_a(), cfg); }); }
    double norm_re_minus_im() { return memo(norm_rmi_, [&] {
        return operator_norm(re_a() - im_a(), cfg); }); }
    double w_abs_cartesian() { return memo(w_abs_cart_, [&] {
        return numerical_radius(
            hermitian_combo(matrix_abs(re_a(), cfg), matrix_abs(im_a(), cfg)), cfg).value; }); }
    double norm_re_a2() { return memo(norm_re_a2_, [&] {
        return operator_norm(re_part(a * a), cfg); }); }
    double w_a2() { return memo(w_a2_, [&] { return numerical_radius(a * a, cfg).value; }); }
    double w_abs_a_astar() { return memo(w_abs_aas_, [&] {
        return numerical_radius(hermitian_combo(abs_a(), abs_as()), cfg).value; }); }
    double w_abs_astar_a() { return memo(w_abs_asa_, [&] {
        return numerical_radius(hermitian_combo(abs_as(), abs_a()), cfg).value; }); }

    double corn1_value(double alpha) {
        ComplexMatrix m = re_sq();
        m *= cplx(alpha, 0.0);
        ComplexMatrix m2 = im_sq();
        m2 *= cplx(1.0 - alpha, 0.0);
        return operator_norm(m + m2, cfg);
    }

private:
    const ComplexMatrix& abs_a() {
        if (!abs_a_) abs_a_ = matrix_abs(a, cfg);
        return *abs_a_;
    }
    const ComplexMatrix& abs_as() {
        if (!abs_as_) abs_as_ = matrix_abs(adjoint(a), cfg);
        return *abs_as_;
    }
    const ComplexMatrix& re_sq() {
        if (!re_sq_) re_sq_ = re_a() * re_a();
        return *re_sq_;
    }
    const ComplexMatrix& im_sq() {
        if (!im_sq_) im_sq_ = im_a() * im_a();
        return *im_sq_;
    }
    template <class F>
    double memo(std::optional<double>& slot, F&& f) {
        if (!slot) slot = f();
        return *slot;
    }
    std::optional<double> w_sq_, norm_a_, norm_gram_sum_, norm_re_, norm_im_, norm_rpi_,
        norm_rmi_, w_abs_cart_, norm_re_a2_, w_a2_, w_abs_aas_, w_abs_asa_;
    std::optional<ComplexMatrix> re_a_, im_a_, abs_a_, abs_as_, re_sq_, im_sq_;
};

constexpr int kDefaultAlphaSteps = 9;

inline bool wanted(const std::set<std::string>* only, const char* id) {
    return !only || only->count(id) > 0;
}

// --- pair catalog workers --------------------------------------------------

inline void emit_classical_pair(PairContext& ctx, const std::set<std::string>* only,
                                std::vector<BoundEvaluation>& out) {
    if (wanted(only, "eqn1.lower"))
        out.push_back(finish_eval("eqn1.lower", ctx.norm_gram_gram() / 8.0, ctx.we_sq(), ctx.cfg));
    if (wanted(only, "eqn1.upper"))
        out.push_back(finish_eval("eqn1.upper", ctx.norm_gram_gram(), ctx.we_sq(), ctx.cfg));
    if (wanted(only, "d06.lower"))
        out.push_back(finish_eval("d06.lower", 0.5 * ctx.w_sq_sum(), ctx.we_sq(), ctx.cfg));
    if (ctx.herm) {
        if (wanted(only, "eqn2.lower"))
            out.push_back(
                finish_eval("eqn2.lower", ctx.norm_sq_plus() / 8.0, ctx.we_sq(), ctx.cfg));
        if (wanted(only, "eqn2.upper"))
            out.push_back(finish_eval("eqn2.upper", ctx.norm_sq_plus(), ctx.we_sq(), ctx.cfg));
    }
}

inline void emit_th1(PairContext& ctx, const std::set<std::string>* only,
                     std::vector<BoundEvaluation>& out) {
    if (wanted(only, "th1.lower")) {
        const double lower = 0.5 * ctx.w_sq_sum() +
                             0.5 * std::max(ctx.w_b(), ctx.w_c()) *
                                 std::abs(ctx.w_sum() - ctx.w_diff());
        out.push_back(finish_eval("th1.lower", lower, ctx.we_sq(), ctx.cfg));
    }
    if (wanted(only, "th1.upper")) {
        const double upper = std::min(ctx.w_abs_pp() * ctx.w_abs_ss(),
                                      ctx.w_abs_ps() * ctx.w_abs_sp());
        out.push_back(finish_eval("th1.upper", upper, ctx.we_sq(), ctx.cfg));
    }
    if (wanted(only, "th1.remark.upper")) {
        const double upper =
            std::min(std::sqrt(ctx.norm_gram_gram() * ctx.norm_cogram_cogram()),
                     std::sqrt(ctx.norm_gram_cogram() * ctx.norm_cogram_gram()));
        out.push_back(finish_eval("th1.remark.upper", upper, ctx.we_sq(), ctx.cfg));
    }
    if (ctx.herm) {
        if (wanted(only, "eq2.lower")) {
            const double lower = 0.5 * ctx.norm_sq_plus() +
                                 0.5 * std::max(ctx.norm_b(), ctx.norm_c()) *
                                     std::abs(ctx.norm_sum() - ctx.norm_diff());
            out.push_back(finish_eval("eq2.lower", lower, ctx.we_sq(), ctx.cfg));
        }
        if (wanted(only, "eq2.upper")) {
            const double w = ctx.w_abs_pp();
            out.push_back(finish_eval("eq2.upper", w * w, ctx.we_sq(), ctx.cfg));
        }
    }
}

inline void emit_th2(PairContext& ctx, const std::set<std::string>* only,
                     std::vector<BoundEvaluation>& out) {
    if (!wanted(only, "th2.lower")) return;
    const double lower =
        0.5 * std::max(ctx.w_sum() * ctx.w_sum() + ctx.c_diff() * ctx.c_diff(),
                       ctx.w_diff() * ctx.w_diff() + ctx.c_sum() * ctx.c_sum());
    out.push_back(finish_eval("th2.lower", lower, ctx.we_sq(), ctx.cfg));
}

inline void emit_cor2(PairContext& ctx, const std::set<std::string>* only,
                      std::vector<BoundEvaluation>& out) {
    if (!wanted(only, "cor2.lower")) return;
    const double lower = std::max(ctx.w_b() * ctx.w_b() + ctx.c_c() * ctx.c_c(),
                                  ctx.w_c() * ctx.w_c() + ctx.c_b() * ctx.c_b());
    out.push_back(finish_eval("cor2.lower", lower, ctx.we_sq(), ctx.cfg));
}

inline void emit_th3(PairContext& ctx, const std::set<std::string>* only,
                     std::vector<BoundEvaluation>& out) {
    if (!wanted(only, "th3.upper")) return;
    const double upper = std::min(ctx.w_sum() * ctx.w_sum(), ctx.w_diff() * ctx.w_diff()) +
                         0.5 * ctx.norm_cogram_gram() + ctx.w_bc();
    out.push_back(finish_eval("th3.upper", upper, ctx.we_sq(), ctx.cfg));
}

inline void emit_th4(PairContext& ctx, int alpha_steps, const std::set<std::string>* only,
                     std::vector<BoundEvaluation>& out) {
    if (alpha_steps < 2) throw InvalidSpec("alpha_steps must be >= 2");
    if (wanted(only, "th4.lower")) {
        double best = -std::numeric_limits<double>::infinity();
        for (int k = 0; k < alpha_steps; ++k) {
            const double alpha = static_cast<double>(k) / (alpha_steps - 1);
            best = std::max(best, ctx.th4_value(alpha));
        }
        out.push_back(finish_eval("th4.lower", best, ctx.we_sq(), ctx.cfg));
    }
    if (wanted(only, "drag01.lower"))
        out.push_back(finish_eval("drag01.lower", ctx.th4_value(0.5), ctx.we_sq(), ctx.cfg));
}

inline void emit_th5(PairContext& ctx, double alpha, const std::set<std::string>* only,
                     std::vector<BoundEvaluation>& out) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw AlphaOutOfRange("alpha must lie in [0, 1]");
    if (wanted(only, "th5.upper"))
        out.push_back(finish_eval("th5.upper", ctx.th5_value(alpha, true), ctx.we_sq(), ctx.cfg));
    if (alpha == 0.5 && wanted(only, "th5.remark.half")) {
        const double v = 0.5 * (ctx.w_sum() * ctx.w_sum() + ctx.w_diff() * ctx.w_diff());
        out.push_back(finish_eval("th5.remark.half", v, ctx.we_sq(), ctx.cfg));
    }
}

inline void emit_jensen(PairContext& ctx, double r, const std::set<std::string>* only,
                        std::vector<BoundEvaluation>& out) {
    if (r < 2.0) throw RTooSmall("jensen exponent requires r >= 2");
    const double target = std::pow(ctx.we_sq(), r);
    const double relaxation =
        0.5 * std::pow(ctx.w_sum(), 2.0 * r) + 0.5 * std::pow(ctx.w_diff(), 2.0 * r);
    const double rho = ctx.rho();
    // rho is an over-estimate of the true infimum, so pass/fail uses the
    // rho-free relaxation; the subtracted variants are reported as slack.
    const bool ok = target <= relaxation + ctx.cfg.ineq_tol * std::max(1.0, target);
    const double pow2r = std::pow(2.0, r);
    if (wanted(only, "jensen.upper.stated")) {
        BoundEvaluation ev =
            finish_eval("jensen.upper.stated", relaxation - pow2r * rho, target, ctx.cfg);
        ev.satisfied = ok;
        out.push_back(std::move(ev));
    }
    if (wanted(only, "jensen.upper.derived")) {
        BoundEvaluation ev = finish_eval("jensen.upper.derived",
                                         relaxation - pow2r * std::pow(rho, r), target, ctx.cfg);
        ev.satisfied = ok;
        out.push_back(std::move(ev));
    }
}

inline void emit_buzano(PairContext& ctx, double s, const std::set<std::string>* only,
                        std::vector<BoundEvaluation>& out) {
    if (!(s > 0.0 && s < 1.0)) throw SOutOfRange("power split s must lie in (0, 1)");
    if (!wanted(only, "buzano.lower")) return;
    const double target = 0.5 * ctx.norm_sum() * ctx.norm_sum();
    out.push_back(finish_eval("buzano.lower", ctx.buzano_product(s), target, ctx.cfg));
}

// --- single-operator catalog workers ----------------------------------------

inline void emit_classical_single(SingleContext& ctx, const std::set<std::string>* only,
                                  std::vector<BoundEvaluation>& out) {
    const double na = ctx.norm_a();
    if (wanted(only, "eqv.lower"))
        out.push_back(finish_eval("eqv.lower", 0.25 * na * na, ctx.w_sq(), ctx.cfg));
    if (wanted(only, "eqv.upper"))
        out.push_back(finish_eval("eqv.upper", na * na, ctx.w_sq(), ctx.cfg));
    if (wanted(only, "k5.lower"))
        out.push_back(finish_eval("k5.lower", 0.25 * ctx.norm_gram_sum(), ctx.w_sq(), ctx.cfg));
    if (wanted(only, "k5.upper"))
        out.push_back(finish_eval("k5.upper", 0.5 * ctx.norm_gram_sum(), ctx.w_sq(), ctx.cfg));
}

inline void emit_corollaries_single(SingleContext& ctx, const std::set<std::string>* only,
                                    std::vector<BoundEvaluation>& out) {
    if (wanted(only, "pcor.lower")) {
        const double mu = std::abs(ctx.norm_re_plus_im() - ctx.norm_re_minus_im());
        const double lower =
            0.25 * ctx.norm_gram_sum() + 0.5 * std::max(ctx.norm_re(), ctx.norm_im()) * mu;
        out.push_back(finish_eval("pcor.lower", lower, ctx.w_sq(), ctx.cfg));
    }
    if (wanted(only, "pcor.upper")) {
        const double w = ctx.w_abs_cartesian();
        out.push_back(finish_eval("pcor.upper", w * w, ctx.w_sq(), ctx.cfg));
    }
    if (wanted(only, "cor1.lower")) {
        const double lower = 0.5 * ctx.norm_re_a2() +
                             0.5 * ctx.w() * std::abs(ctx.norm_re() - ctx.norm_im());
        out.push_back(finish_eval("cor1.lower", lower, ctx.w_sq(), ctx.cfg));
    }
    if (wanted(only, "cor1.upper")) {
        const double upper = 0.5 * ctx.w_abs_a_astar() * ctx.w_abs_astar_a();
        out.push_back(finish_eval("cor1.upper", upper, ctx.w_sq(), ctx.cfg));
    }
}

inline void emit_th3_remark_single(SingleContext& ctx, const std::set<std::string>* only,
                                   std::vector<BoundEvaluation>& out) {
    if (!wanted(only, "th3.remark.single")) return;
    const double upper = 0.25 * ctx.norm_gram_sum() + 0.5 * ctx.w_a2();
    out.push_back(finish_eval("th3.remark.single", upper, ctx.w_sq(), ctx.cfg));
}

inline void emit_corn1(SingleContext& ctx, int alpha_steps, const std::set<std::string>* only,
                       std::vector<BoundEvaluation>& out) {
    if (!wanted(only, "corn1.lower")) return;
    if (alpha_steps < 2) throw InvalidSpec("alpha_steps must be >= 2");
    double best = -std::numeric_limits<double>::infinity();
    for (int k = 0; k < alpha_steps; ++k) {
        const double alpha = static_cast<double>(k) / (alpha_steps - 1);
        best = std::max(best, ctx.corn1_value(alpha));
    }
    out.push_back(finish_eval("corn1.lower", best, ctx.w_sq(), ctx.cfg));
}

// Numeric failures in one bound (eigensolver non-convergence, PSD drift)
// skip that entry and leave the rest of the batch intact.
template <class F>
void emit_guarded(F&& emit) {
    try {
        emit();
    } catch (const NoConvergence&) {
    } catch (const NegativeEigenvalue&) {
    } catch (const NotHermitian&) {
    }
}

inline void emit_pair_catalog(PairContext& ctx, const std::set<std::string>* only,
                              std::vector<BoundEvaluation>& out) {
    emit_guarded([&] { emit_classical_pair(ctx, only, out); });
    emit_guarded([&] { emit_th1(ctx, only, out); });
    emit_guarded([&] { emit_th2(ctx, only, out); });
    emit_guarded([&] { emit_cor2(ctx, only, out); });
    emit_guarded([&] { emit_th3(ctx, only, out); });
    emit_guarded([&] { emit_th4(ctx, kDefaultAlphaSteps, only, out); });
    emit_guarded([&] { emit_th5(ctx, 0.5, only, out); });
    emit_guarded([&] { emit_jensen(ctx, 2.0, only, out); });
    emit_guarded([&] { emit_buzano(ctx, 0.5, only, out); });
}

inline void emit_single_catalog(SingleContext& ctx, const std::set<std::string>* only,
                                std::vector<BoundEvaluation>& out) {
    emit_guarded([&] { emit_classical_single(ctx, only, out); });
    emit_guarded([&] { emit_corollaries_single(ctx, only, out); });
    emit_guarded([&] { emit_th3_remark_single(ctx, only, out); });
    emit_guarded([&] { emit_corn1(ctx, kDefaultAlphaSteps, only, out); });
}

} // namespace detail

inline const std::vector<std::string>& catalog_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (const auto& e : detail::catalog()) v.emplace_back(e.id);
        std::sort(v.begin(), v.end());
        return v;
    }();
    return ids;
}

inline bool is_pair_bound(const std::string& id) { return detail::catalog_entry(id).pair; }
inline bool is_hermitian_only_bound(const std::string& id) {
    return detail::catalog_entry(id).hermitian_only;
}

// --- public catalog operations ----------------------------------------------

inline std::vector<BoundEvaluation> classical_single(const ComplexMatrix& a,
                                                     const ToleranceConfig& cfg = {}) {
    detail::SingleContext ctx(a, cfg);
    std::vector<BoundEvaluation> out;
    detail::emit_classical_single(ctx, nullptr, out);
    return out;
}

inline std::vector<BoundEvaluation> classical_pair(const ComplexMatrix& b,
                                                   const ComplexMatrix& c,
                                                   const ToleranceConfig& cfg = {}) {
    detail::PairContext ctx(b, c, cfg);
    std::vector<BoundEvaluation> out;
    detail::emit_classical_pair(ctx, nullptr, out);
    return out;
}

inline std::vector<BoundEvaluation> th1_bounds(const ComplexMatrix& b, const ComplexMatrix& c,
                                               const ToleranceConfig& cfg = {}) {
    detail::PairContext ctx(b, c, cfg);
    std::vector<BoundEvaluation> out;
    detail::emit_th1(ctx, nullptr, out);
    return out;
}

inline std::vector<BoundEvaluation> corollaries_single(const ComplexMatrix& a,
                                                       const ToleranceConfig& cfg = {}) {
    detail::SingleContext ctx(a, cfg);
    std::vector<BoundEvaluation> out;
    detail::emit_corollaries_single(ctx, nullptr, out);
    return out;
}

inline BoundEvaluation th2_lower(const ComplexMatrix& b, const ComplexMatrix& c,
                                 const ToleranceConfig& cfg = {}) {
    detail::PairContext ctx(b, c, cfg);
    std::vector<BoundEvaluation> out;
    detail::emit_th2(ctx, nullptr, out);
    return out.front();
}

inline BoundEvaluation cor2_lower(const ComplexMatrix& b, const ComplexMatrix& c,
                                  const ToleranceConfig& cfg = {}) {
    detail::PairContext ctx(b, c, cfg);
    std::vector<BoundEvaluation> out;
    detail::emit_cor2(ctx, nullptr, out);
    return out.front();
}

inline BoundEvaluation th3_upper(const ComplexMatrix& b, const ComplexMatrix& c,
                                 const ToleranceConfig& cfg = {}) {
    detail::PairContext ctx(b, c, cfg);
    std::vector<BoundEvaluation> out;
    detail::emit_th3(ctx, nullptr, out);
    return out.front();
}

inline BoundEvaluation th3_remark_single(const ComplexMatrix& a,
                                         const ToleranceConfig& cfg = {}) {
    detail::SingleContext ctx(a, cfg);
    std::vector<BoundEvaluation> out;
    detail::emit_th3_remark_single(ctx, nullptr, out);
    return out.front();
}

inline std::vector<BoundEvaluation> th4_lower(const ComplexMatrix& b, const ComplexMatrix& c,
                                              int alpha_steps, const ToleranceConfig& cfg = {}) {
    detail::PairContext ctx(b, c, cfg);
    std::vector<BoundEvaluation> out;
    detail::emit_th4(ctx, alpha_steps, nullptr, out);
    return out;
}

inline BoundEvaluation corn1_lower(const ComplexMatrix& a, int alpha_steps,
                                   const ToleranceConfig& cfg = {}) {
    detail::SingleContext ctx(a, cfg);
    std::vector<BoundEvaluation> out;
    detail::emit_corn1(ctx, alpha_steps, nullptr, out);
    return out.front();
}

inline std::vector<BoundEvaluation> th5_upper(const ComplexMatrix& b, const ComplexMatrix& c,
                                              double alpha, const ToleranceConfig& cfg = {}) {
    detail::PairContext ctx(b, c, cfg);
    std::vector<BoundEvaluation> out;
    detail::emit_th5(ctx, alpha, nullptr, out);
    return out;
}

/// The plus-sign variant printed in the source statement; observed
/// empirically, never asserted. Returned for comparison only.
inline double th5_plus_form(const ComplexMatrix& b, const ComplexMatrix& c, double alpha,
                            const ToleranceConfig& cfg = {}) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw AlphaOutOfRange("alpha must lie in [0, 1]");
    detail::PairContext ctx(b, c, cfg);
    return ctx.th5_value(alpha, false);
}

inline std::vector<BoundEvaluation> jensen_upper(const ComplexMatrix& b, const ComplexMatrix& c,
                                                 double r, const ToleranceConfig& cfg = {}) {
    detail::PairContext ctx(b, c, cfg);
    std::vector<BoundEvaluation> out;
    detail::emit_jensen(ctx, r, nullptr, out);
    return out;
}

inline BoundEvaluation buzano_norm_lower(const ComplexMatrix& b, const ComplexMatrix& c,
                                         double s, const ToleranceConfig& cfg = {}) {
    detail::PairContext ctx(b, c, cfg);
    std::vector<BoundEvaluation> out;
    detail::emit_buzano(ctx, s, nullptr, out);
    return out.front();
}

/// Every applicable catalog entry: pair bounds when two matrices are given;
/// otherwise single-operator bounds on A plus the pair catalog instantiated
/// at the Cartesian parts (Re A, Im A). Deterministic bound_id ordering.
inline std::vector<BoundEvaluation> evaluate_all(const ComplexMatrix& b, const ComplexMatrix* c,
                                                 const ToleranceConfig& cfg = {},
                                                 const std::set<std::string>* only = nullptr) {
    if (only)
        for (const std::string& id : *only) detail::catalog_entry(id); // validates
    std::vector<BoundEvaluation> out;
    if (c) {
        detail::PairContext ctx(b, *c, cfg);
        detail::emit_pair_catalog(ctx, only, out);
    } else {
        detail::SingleContext sctx(b, cfg);
        detail::emit_single_catalog(sctx, only, out);
        detail::PairContext pctx(sctx.re_a(), sctx.im_a(), cfg);
        detail::emit_pair_catalog(pctx, only, out);
    }
    std::sort(out.begin(), out.end(),
              [](const BoundEvaluation& x, const BoundEvaluation& y) {
                  return x.bound_id < y.bound_id;
              });
    return out;
}

/// Pair catalog only, on (B, C); used by the verification harness.
inline std::vector<BoundEvaluation> evaluate_pair_bounds(const ComplexMatrix& b,
                                                         const ComplexMatrix& c,
                                                         const ToleranceConfig& cfg,
                                                         const std::set<std::string>* only) {
    detail::PairContext ctx(b, c, cfg);
    std::vector<BoundEvaluation> out;
    detail::emit_pair_catalog(ctx, only, out);
    std::sort(out.begin(), out.end(),
              [](const BoundEvaluation& x, const BoundEvaluation& y) {
                  return x.bound_id < y.bound_id;
              });
    return out;
}

/// Single-operator catalog only, on A; used by the verification harness.
inline std::vector<BoundEvaluation> evaluate_single_bounds(const ComplexMatrix& a,
                                                           const ToleranceConfig& cfg,
                                                           const std::set<std::string>* only) {
    detail::SingleContext ctx(a, cfg);
    std::vector<BoundEvaluation> out;
    detail::emit_single_catalog(ctx, only, out);
    std::sort(out.begin(), out.end(),
              [](const BoundEvaluation& x, const BoundEvaluation& y) {
                  return x.bound_id < y.bound_id;
              });
    return out;
}

} // namespace radlab
