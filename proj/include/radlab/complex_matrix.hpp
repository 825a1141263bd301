#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "radlab/errors.hpp"

namespace radlab {

using cplx = std::complex<double>;
using Vector = std::vector<cplx>;

/// Dense square complex matrix, row-major. The universal operand of the
/// library; all operations treat it as an immutable value.
class ComplexMatrix {
public:
    ComplexMatrix() = default;

    explicit ComplexMatrix(std::size_t dim) : n_(dim), a_(dim * dim, cplx(0.0, 0.0)) {}

    ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows) {
        n_ = rows.size();
        a_.reserve(n_ * n_);
        for (const auto& r : rows) {
            if (r.size() != n_) throw DimensionMismatch("matrix initializer is not square");
            a_.insert(a_.end(), r.begin(), r.end());
        }
    }

    static ComplexMatrix identity(std::size_t n) {
        ComplexMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    static ComplexMatrix diagonal(const Vector& d) {
        ComplexMatrix m(d.size());
        for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
        return m;
    }

    std::size_t dim() const { return n_; }

    cplx& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    cplx* data() { return a_.data(); }
    const cplx* data() const { return a_.data(); }

    bool all_finite() const {
        for (const cplx& z : a_)
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
        return true;
    }

    double frobenius_norm() const {
        double s = 0.0;
        for (const cplx& z : a_) s += std::norm(z);
        return std::sqrt(s);
    }

    /// Exact conjugate-symmetry test. Internal constructions ((A+A*)/2, A*A,
    /// real-linear combinations of those) are Hermitian bit-for-bit, so this
    /// needs no tolerance.
    bool is_exactly_hermitian() const {
        for (std::size_t i = 0; i < n_; ++i) {
            if ((*this)(i, i).imag() != 0.0) return false;
            for (std::size_t j = i + 1; j < n_; ++j)
                if ((*this)(i, j) != std::conj((*this)(j, i))) return false;
        }
        return true;
    }

    ComplexMatrix& operator+=(const ComplexMatrix& o) {
        check_same_dim(o);
        for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
        return *this;
    }

    ComplexMatrix& operator-=(const ComplexMatrix& o) {
        check_same_dim(o);
        for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
        return *this;
    }

    ComplexMatrix& operator*=(cplx s) {
        for (cplx& z : a_) z *= s;
        return *this;
    }

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }
    friend ComplexMatrix operator*(ComplexMatrix a, cplx s) { return a *= s; }

    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
        a.check_same_dim(b);
        const std::size_t n = a.n_;
        ComplexMatrix c(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t k = 0; k < n; ++k) {
                const cplx aik = a(i, k);
                if (aik == cplx(0.0, 0.0)) continue;
                for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
            }
        }
        return c;
    }

    friend bool operator==(const ComplexMatrix& a, const ComplexMatrix& b) {
        return a.n_ == b.n_ && a.a_ == b.a_;
    }

    void check_same_dim(const ComplexMatrix& o) const {
        if (n_ != o.n_) throw DimensionMismatch("matrix dimensions differ");
    }

private:
    std::size_t n_ = 0;
    std::vector<cplx> a_;
};

/// Conjugate transpose.
inline ComplexMatrix adjoint(const ComplexMatrix& a) {
    const std::size_t n = a.dim();
    ComplexMatrix r(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r(i, j) = std::conj(a(j, i));
    return r;
}

/// Hermitian part (A + A*)/2.
inline ComplexMatrix re_part(const ComplexMatrix& a) {
    const std::size_t n = a.dim();
    ComplexMatrix r(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));
    return r;
}

/// Skew part (A - A*)/(2i); Hermitian, and A = re_part(A) + i*im_part(A).
inline ComplexMatrix im_part(const ComplexMatrix& a) {
    const std::size_t n = a.dim();
    ComplexMatrix r(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const cplx u = a(i, j) - std::conj(a(j, i));
            r(i, j) = cplx(0.5 * u.imag(), -0.5 * u.real()); // u / (2i)
        }
    return r;
}

inline Vector matvec(const ComplexMatrix& a, const Vector& x) {
    const std::size_t n = a.dim();
    if (x.size() != n) throw DimensionMismatch("matvec size mismatch");
    Vector y(n, cplx(0.0, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        cplx s(0.0, 0.0);
        for (std::size_t j = 0; j < n; ++j) s += a(i, j) * x[j];
        y[i] = s;
    }
    return y;
}

/// <x, y> = sum_i x_i * conj(y_i)
inline cplx dot(const Vector& x, const Vector& y) {
    cplx s(0.0, 0.0);
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * std::conj(y[i]);
    return s;
}

inline double vec_norm(const Vector& x) {
    double s = 0.0;
    for (const cplx& z : x) s += std::norm(z);
    return std::sqrt(s);
}

inline void normalize(Vector& x) {
    const double nx = vec_norm(x);
    if (nx > 0.0)
        for (cplx& z : x) z /= nx;
}

/// <Ax, x>, the numerical-range evaluation map.
inline cplx quadratic_form(const ComplexMatrix& a, const Vector& x) {
    return dot(matvec(a, x), x);
}

} // namespace radlab
