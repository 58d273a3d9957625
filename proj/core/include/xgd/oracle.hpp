#pragma once

#include <array>

#include "xgd/density_matrix.hpp"

namespace xgd {

/// Sphere discretization for the brute-force minimizations: theta runs over
/// i * pi / n_theta (i = 0..n_theta), phi over j * 2 pi / n_phi
/// (j = 0..n_phi-1), so doubling either count nests the previous grid.
/// Requires n_theta >= 8, n_phi >= 16, refine_tol > 0, max_refine_iters >= 1.
struct SphereGrid {
    int n_theta = 64;
    int n_phi = 128;
    double refine_tol = 1e-10;
    int max_refine_iters = 200;
};

/// Outcome of a brute-force minimization.
struct OracleResult {
    double value = 0.0;              ///< minimum after local refinement
    double grid_min = 0.0;           ///< minimum over the raw grid (>= value)
    std::array<double, 3> e_min{};   ///< refined minimizing direction
    long grid_evals = 0;             ///< objective evaluations on the grid
    bool chi_psd_ok = false;         ///< classical state at e_min is positive
};

/// Brute-force minimum of the Hilbert-Schmidt distance to classical-quantum
/// states over measurement directions e(theta, phi), evaluating for each
/// direction the unconstrained inner optimum
///   dist(e) = (1/8) [ |x|^2 - (e.x)^2
///                     + sum_{(b,g) != (0,0)} ( sum_i T[i][b][g]^2
///                                              - (sum_i e_i T[i][b][g])^2 ) ]
/// from raw bloch3 traces only (the closed-form K entries are never used),
/// then refining the grid minimum by golden-section descent on (theta, phi)
/// with a Powell-style adaptive direction set, stopping when the improvement
/// per sweep drops below grid.refine_tol. Dim-8 input only.
OracleResult oracle_discord_sphere(const DensityMatrix& rho, const SphereGrid& grid);

/// Second independent oracle: minimizes hs_norm_sq(rho - chi(e)) where
/// chi(e) = P+ rho P+ + P- rho P- is the state after the projective
/// measurement of qubit 1 along +-e. Accepts dim 4 or 8.
OracleResult oracle_discord_measurement(const DensityMatrix& rho, const SphereGrid& grid);

/// hs_norm_sq(rho - chi); throws std::invalid_argument on shape mismatch.
double hs_distance_to_classical(const ComplexMatrix& rho, const ComplexMatrix& chi);

}  // namespace xgd
