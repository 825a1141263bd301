#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "radlab/complex_matrix.hpp"
#include "radlab/errors.hpp"
#include "radlab/tolerance.hpp"

namespace radlab {

/// Eigendecomposition of a Hermitian matrix. Eigenvalues sorted descending,
/// eigenvector columns orthonormal and aligned with the eigenvalue order.
struct HermitianEigen {
    std::vector<double> eigenvalues;
    ComplexMatrix eigenvectors;
};

namespace detail {

// One cyclic complex Jacobi pass structure. W is overwritten with the
// diagonalized matrix; V (when non-null) accumulates the rotations so that
// W_in = V * diag * V^*. Throws NoConvergence past 100*n^2 rotations.
inline void jacobi_inplace(ComplexMatrix& w, ComplexMatrix* v, double eig_tol) {
    const std::size_t n = w.dim();
    if (v) *v = ComplexMatrix::identity(n);
    if (n < 2) return;

    const double fro0 = w.frobenius_norm();
    if (fro0 == 0.0) return;
    // Converge to half the requested tolerance so the reconstruction
    // contract survives accumulated rotation rounding.
    const double off_target_sq = (0.5 * eig_tol * fro0) * (0.5 * eig_tol * fro0);
    // Per-pivot skip threshold; if every off-diagonal entry is below it, the
    // total off-diagonal mass is already under target.
    const double entry_skip_sq = off_target_sq / static_cast<double>(n * (n - 1));

    const long rotation_cap = 100L * static_cast<long>(n) * static_cast<long>(n);
    long rotations = 0;

    for (int sweep = 0; sweep < 200; ++sweep) {
        bool rotated = false;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const cplx b = w(p, q);
                const double babs2 = std::norm(b);
                if (babs2 <= entry_skip_sq) continue;
                if (++rotations > rotation_cap)
                    throw NoConvergence("Jacobi eigensolver exceeded rotation cap");
                rotated = true;

                const double babs = std::sqrt(babs2);
                const cplx phase = b / babs;
                const double a = w(p, p).real();
                const double d = w(q, q).real();
                const double tau = (d - a) / (2.0 * babs);
                const double t =
                    (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const cplx s = (t * c) * phase;
                const cplx s_conj = std::conj(s);

                // Right-multiply by the rotation, then left-multiply by its adjoint.
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx hp = w(k, p), hq = w(k, q);
                    w(k, p) = c * hp - s_conj * hq;
                    w(k, q) = s * hp + c * hq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx hp = w(p, k), hq = w(q, k);
                    w(p, k) = c * hp - s * hq;
                    w(q, k) = s_conj * hp + c * hq;
                }
                // Exact pivot results; keeps the matrix Hermitian to the bit.
                w(p, q) = 0.0;
                w(q, p) = 0.0;
                w(p, p) = a - t * babs;
                w(q, q) = d + t * babs;

                if (v) {
                    for (std::size_t k = 0; k < n; ++k) {
                        const cplx vp = (*v)(k, p), vq = (*v)(k, q);
                        (*v)(k, p) = c * vp - s_conj * vq;
                        (*v)(k, q) = s * vp + c * vq;
                    }
                }
            }
        }
        if (!rotated) return;

        double off_sq = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) off_sq += 2.0 * std::norm(w(i, j));
        if (off_sq <= off_target_sq) return;
    }
    throw NoConvergence("Jacobi eigensolver did not converge");
}

inline void check_hermitian_and_symmetrize(const ComplexMatrix& h, ComplexMatrix& out) {
    const std::size_t n = h.dim();
    double asym_sq = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) asym_sq += std::norm(h(i, j) - std::conj(h(j, i)));
    const double fro = h.frobenius_norm();
    if (std::sqrt(asym_sq) > 1e-12 * fro)
        throw NotHermitian("matrix is not Hermitian within 1e-12 relative tolerance");
    out = ComplexMatrix(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = 0.5 * (h(i, j) + std::conj(h(j, i)));
}

// Extreme eigenvalues of an already-Hermitian work matrix (destroyed).
struct Extremes {
    double max;
    double min;
};

inline Extremes jacobi_extremes_inplace(ComplexMatrix& w, double eig_tol) {
    jacobi_inplace(w, nullptr, eig_tol);
    double lo = w(0, 0).real(), hi = lo;
    for (std::size_t i = 1; i < w.dim(); ++i) {
        const double d = w(i, i).real();
        lo = std::min(lo, d);
        hi = std::max(hi, d);
    }
    return {hi, lo};
}

} // namespace detail

inline HermitianEigen hermitian_eigen(const ComplexMatrix& h, const ToleranceConfig& cfg = {}) {
    ComplexMatrix w;
    detail::check_hermitian_and_symmetrize(h, w);
    ComplexMatrix v;
    detail::jacobi_inplace(w, &v, cfg.eig_tol);

    const std::size_t n = h.dim();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return w(i, i).real() > w(j, j).real();
    });

    HermitianEigen out;
    out.eigenvalues.resize(n);
    out.eigenvectors = ComplexMatrix(n);
    for (std::size_t c = 0; c < n; ++c) {
        out.eigenvalues[c] = w(order[c], order[c]).real();
        for (std::size_t r = 0; r < n; ++r) out.eigenvectors(r, c) = v(r, order[c]);
    }
    return out;
}

/// (lambda_max, lambda_min) without eigenvector accumulation.
inline detail::Extremes hermitian_extremes(const ComplexMatrix& h,
                                           const ToleranceConfig& cfg = {}) {
    ComplexMatrix w;
    detail::check_hermitian_and_symmetrize(h, w);
    return detail::jacobi_extremes_inplace(w, cfg.eig_tol);
}

} // namespace radlab
