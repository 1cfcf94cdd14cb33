#pragma once

#include <Eigen/Core>

#include "flipmatch/graph.hpp"

namespace flipmatch {

/// Spectrum of the transition operator P = A/d of a d-regular graph.
/// For a d-regular graph all eigenvalues lie in [-1, 1] and the top one is 1;
/// rho_plus and -rho_minus bound the spectrum on the orthocomplement of the
/// constants.
struct Spectrum {
    Eigen::VectorXd eigenvalues; ///< sorted descending; eigenvalues[0] == 1
    int degree = 0;
    double rho_plus = 0.0;  ///< second eigenvalue, sign retained (may be negative)
    double rho_minus = 0.0; ///< negated bottom eigenvalue
    double rho = 0.0;       ///< max(|rho_plus|, rho_minus)
};

/// Dense symmetric eigensolve of A/d. Throws std::invalid_argument unless the
/// graph is regular with degree >= 1.
Spectrum transition_spectrum(const Graph& g);

/// (P f)(x) = average of f over the neighbors of x. Requires a regular graph.
Eigen::VectorXd apply_transition(const Graph& g, const Eigen::VectorXd& f);

/// Indicator of B centered by its density: f_B = 1_B - (|B|/n) * ones.
Eigen::VectorXd centered_indicator(const Graph& g, const std::vector<int>& B);

/// Mean of u*v over vertices; the uniform-measure inner product, under which
/// ||f_B||^2 = b(1-b).
double mean_inner(const Eigen::VectorXd& u, const Eigen::VectorXd& v);

/// Lower estimate of the spectral radius of the transition operator of the
/// infinite d-regular tree (limit value 2*sqrt(d-1)/d), obtained by power
/// iteration for the top singular value of A/d on the radius-R ball with zero
/// boundary. Increasing in `radius`. The ball operator is reduced to its
/// radial (distance-from-root) form, which carries the same top eigenvalue,
/// so large radii stay cheap.
double estimate_tree_rho(int d, int radius = 256);

} // namespace flipmatch
