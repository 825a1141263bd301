#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "radlab/complex_matrix.hpp"
#include "radlab/errors.hpp"
#include "radlab/rng.hpp"

namespace radlab {

enum class EnsembleKind {
    general,
    hermitian,
    normal,
    nilpotent,
    nilpotent2, // block square-zero: A^2 = 0 exactly
    unitary,
    diagonal,
};

inline const char* to_string(EnsembleKind k) {
    switch (k) {
        case EnsembleKind::general: return "general";
        case EnsembleKind::hermitian: return "hermitian";
        case EnsembleKind::normal: return "normal";
        case EnsembleKind::nilpotent: return "nilpotent";
        case EnsembleKind::nilpotent2: return "nilpotent2";
        case EnsembleKind::unitary: return "unitary";
        case EnsembleKind::diagonal: return "diagonal";
    }
    return "?";
}

inline EnsembleKind parse_ensemble_kind(const std::string& s) {
    if (s == "general") return EnsembleKind::general;
    if (s == "hermitian") return EnsembleKind::hermitian;
    if (s == "normal") return EnsembleKind::normal;
    if (s == "nilpotent") return EnsembleKind::nilpotent;
    if (s == "nilpotent2") return EnsembleKind::nilpotent2;
    if (s == "unitary") return EnsembleKind::unitary;
    if (s == "diagonal") return EnsembleKind::diagonal;
    throw InvalidSpec("unknown ensemble kind: " + s);
}

struct EnsembleSpec {
    EnsembleKind kind = EnsembleKind::general;
    int dim = 2;
    long trials = 1;
    std::uint64_t seed = 0;

    void validate() const {
        if (dim < 2 || dim > 64) throw InvalidSpec("ensemble dim must lie in [2, 64]");
        if (trials < 1 || trials > 1000000) throw InvalidSpec("trials must lie in [1, 10^6]");
    }
};

namespace detail {

// Per-trial generator state is a pure function of (seed, trial, stream), so
// any parallel schedule reproduces the same matrices.
inline Rng trial_rng(std::uint64_t seed, long trial, std::uint64_t stream) {
    return Rng(Rng::mix(Rng::mix(seed, static_cast<std::uint64_t>(trial) + 1), stream + 1));
}

inline ComplexMatrix gaussian_matrix(Rng& rng, std::size_t n) {
    ComplexMatrix g(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g(i, j) = rng.complex_gaussian();
    return g;
}

// Unitary factor of a Gaussian matrix via modified Gram-Schmidt with the
// R-diagonal phase fixed positive (Haar-like for test purposes).
inline ComplexMatrix haar_like_unitary(Rng& rng, std::size_t n) {
    ComplexMatrix g = gaussian_matrix(rng, n);
    ComplexMatrix q(n);
    for (std::size_t j = 0; j < n; ++j) {
        Vector v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = g(i, j);
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t k = 0; k < j; ++k) {
                cplx proj(0.0, 0.0);
                for (std::size_t i = 0; i < n; ++i) proj += v[i] * std::conj(q(i, k));
                for (std::size_t i = 0; i < n; ++i) v[i] -= proj * q(i, k);
            }
        }
        double nv = vec_norm(v);
        if (nv < 1e-12) { // degenerate draw; substitute a basis vector
            std::fill(v.begin(), v.end(), cplx(0.0, 0.0));
            v[j] = 1.0;
            nv = 1.0;
        }
        for (std::size_t i = 0; i < n; ++i) q(i, j) = v[i] / nv;
    }
    return q;
}

} // namespace detail

/// Deterministic draw: the matrix depends only on (spec.seed, trial, stream).
inline ComplexMatrix generate_matrix(const EnsembleSpec& spec, long trial,
                                     std::uint64_t stream = 0) {
    spec.validate();
    if (trial < 0 || trial >= spec.trials) throw InvalidSpec("trial index out of range");
    Rng rng = detail::trial_rng(spec.seed, trial, stream);
    const std::size_t n = static_cast<std::size_t>(spec.dim);
    switch (spec.kind) {
        case EnsembleKind::general: return detail::gaussian_matrix(rng, n);
        case EnsembleKind::hermitian: {
            const ComplexMatrix g = detail::gaussian_matrix(rng, n);
            return re_part(g);
        }
        case EnsembleKind::normal: {
            const ComplexMatrix u = detail::haar_like_unitary(rng, n);
            Vector d(n);
            for (auto& z : d) z = rng.complex_gaussian();
            return u * ComplexMatrix::diagonal(d) * adjoint(u);
        }
        case EnsembleKind::nilpotent: {
            ComplexMatrix a(n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j) a(i, j) = rng.complex_gaussian();
            return a;
        }
        case EnsembleKind::nilpotent2: {
            // [[0, X], [0, 0]] block shape; rows below the split are zero, so
            // A^2 = 0 holds exactly in floating point.
            ComplexMatrix a(n);
            const std::size_t split = (n + 1) / 2;
            for (std::size_t i = 0; i < split; ++i)
                for (std::size_t j = split; j < n; ++j) a(i, j) = rng.complex_gaussian();
            return a;
        }
        case EnsembleKind::unitary: return detail::haar_like_unitary(rng, n);
        case EnsembleKind::diagonal: {
            Vector d(n);
            for (auto& z : d) z = cplx(rng.gaussian(), 0.0);
            return ComplexMatrix::diagonal(d);
        }
    }
    throw InvalidSpec("unhandled ensemble kind");
}

/// Independent pair draw from decorrelated substreams of the same trial.
inline std::pair<ComplexMatrix, ComplexMatrix> generate_pair(const EnsembleSpec& spec,
                                                             long trial) {
    return {generate_matrix(spec, trial, 0), generate_matrix(spec, trial, 1)};
}

} // namespace radlab
