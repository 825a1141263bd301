#pragma once

#include <cmath>

#include "radlab/complex_matrix.hpp"
#include "radlab/hermitian_eigen.hpp"
#include "radlab/tolerance.hpp"

namespace radlab {

namespace detail {

// A*A; exactly Hermitian in floating point (conjugate pairs are computed
// from identical products).
inline ComplexMatrix gram(const ComplexMatrix& a) {
    const std::size_t n = a.dim();
    ComplexMatrix g(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            cplx s(0.0, 0.0);
            for (std::size_t k = 0; k < n; ++k) s += std::conj(a(k, i)) * a(k, j);
            g(i, j) = s;
        }
    return g;
}

inline ComplexMatrix cogram(const ComplexMatrix& a) { // A A*
    const std::size_t n = a.dim();
    ComplexMatrix g(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            cplx s(0.0, 0.0);
            for (std::size_t k = 0; k < n; ++k) s += a(i, k) * std::conj(a(j, k));
            g(i, j) = s;
        }
    return g;
}

// V f(diag) V^*, re-symmetrized to keep downstream Hermitian fast paths exact.
template <class F>
ComplexMatrix rebuild_from_eigen(const HermitianEigen& eig, F&& f) {
    const std::size_t n = eig.eigenvalues.size();
    ComplexMatrix m(n);
    const ComplexMatrix& v = eig.eigenvectors;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            cplx s(0.0, 0.0);
            for (std::size_t k = 0; k < n; ++k)
                s += f(eig.eigenvalues[k]) * v(i, k) * std::conj(v(j, k));
            if (i == j) {
                m(i, i) = cplx(s.real(), 0.0);
            } else {
                m(i, j) = s;
                m(j, i) = std::conj(s);
            }
        }
    return m;
}

} // namespace detail

/// Operator (spectral) norm: sqrt of the largest eigenvalue of A*A.
inline double operator_norm(const ComplexMatrix& a, const ToleranceConfig& cfg = {}) {
    if (a.dim() == 0) return 0.0;
    ComplexMatrix g = detail::gram(a);
    const double lam = detail::jacobi_extremes_inplace(g, cfg.eig_tol).max;
    return lam > 0.0 ? std::sqrt(lam) : 0.0;
}

/// |A| = (A*A)^{1/2}. Eigenvalues of A*A inside [-eig_tol*scale, 0) are
/// clamped to zero; anything more negative is a genuine failure.
inline ComplexMatrix matrix_abs(const ComplexMatrix& a, const ToleranceConfig& cfg = {}) {
    HermitianEigen eig = hermitian_eigen(detail::gram(a), cfg);
    const double scale = eig.eigenvalues.empty() ? 0.0 : std::abs(eig.eigenvalues.front());
    for (double& lam : eig.eigenvalues) {
        if (lam < -cfg.eig_tol * scale)
            throw NegativeEigenvalue("A*A has a significantly negative eigenvalue");
        if (lam < 0.0) lam = 0.0;
    }
    return detail::rebuild_from_eigen(eig, [](double lam) { return std::sqrt(lam); });
}

/// H^s for Hermitian PSD H, with 0^0 := 0 (s = 0 yields the projector onto
/// the numerical range space of H; s = 1 returns H unchanged).
inline ComplexMatrix psd_power(const ComplexMatrix& h, double s,
                               const ToleranceConfig& cfg = {}) {
    if (s < 0.0) throw InvalidSpec("psd_power exponent must be >= 0");
    if (s == 1.0) return h;
    HermitianEigen eig = hermitian_eigen(h, cfg);
    double scale = 0.0;
    for (double lam : eig.eigenvalues) scale = std::max(scale, std::abs(lam));
    for (double& lam : eig.eigenvalues) {
        if (lam < -cfg.eig_tol * scale)
            throw NegativeEigenvalue("matrix is not positive semidefinite");
        if (lam < 0.0) lam = 0.0;
    }
    return detail::rebuild_from_eigen(eig, [s](double lam) {
        if (lam == 0.0) return 0.0; // covers 0^0 := 0
        return std::pow(lam, s);
    });
}

} // namespace radlab
