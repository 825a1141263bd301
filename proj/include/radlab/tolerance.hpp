#pragma once

#include <algorithm>

#include "radlab/errors.hpp"

namespace radlab {

/// Knobs governing every approximate quantity in the library. All radii and
/// bound evaluations are deterministic functions of (inputs, ToleranceConfig).
struct ToleranceConfig {
    int theta_grid = 360;        // initial angle samples per sweep
    double refine_tol = 1e-10;   // golden-section bracket width target (radians)
    double eig_tol = 1e-12;      // Jacobi off-diagonal target, relative
    int sphere_restarts = 32;    // projected-gradient restarts on the unit sphere
    double sphere_tol = 1e-9;    // gradient-norm stop for sphere searches
    double ineq_tol = 1e-6;      // inequality slack tolerance

    void validate() const {
        if (theta_grid < 8) throw InvalidSpec("theta_grid must be >= 8");
        if (refine_tol <= 0 || eig_tol <= 0 || sphere_tol <= 0 || ineq_tol <= 0)
            throw InvalidSpec("tolerances must be positive");
        if (sphere_restarts <= 0) throw InvalidSpec("sphere_restarts must be positive");
    }

    /// Same config with the search resolution multiplied; used by the
    /// violation-confirmation protocol (4x re-runs).
    ToleranceConfig scaled(int factor) const {
        ToleranceConfig c = *this;
        c.theta_grid = theta_grid * factor;
        c.sphere_restarts = sphere_restarts * factor;
        return c;
    }
};

} // namespace radlab
