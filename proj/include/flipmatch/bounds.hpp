#pragma once

#include <optional>
#include <string>

#include "flipmatch/graph.hpp"
#include "flipmatch/spectrum.hpp"

namespace flipmatch {

/// Hoffman bound on the independence ratio of a regular graph:
/// alpha/n <= rho_minus / (1 + rho_minus).
double hoffman_bound(const Spectrum& spec);
double hoffman_bound(double rho_minus);

/// First sharpening of the Hoffman bound:
/// (d-1) / ((1+rho_minus) * (d*(2-rho_minus) - 1)).
/// Always a valid upper bound for regular graphs; strictly below the Hoffman
/// bound exactly when rho_minus > 1 - 1/d.
double improved_bound_1(int d, double rho_minus);

/// Second sharpening, applicable when d*rho_minus is not an integer (within
/// tolerance 1e-9): with k = floor(d*rho_minus), the bound is
/// max( k/(d+k), (k^2+k) / (k^2 + (1+2d)k + d - d^2*rho_minus) ).
/// Returns nullopt when inapplicable.
std::optional<double> improved_bound_2(int d, double rho_minus);

struct BestBound {
    double value = 0.0;
    std::string winner; ///< "hoffman", "improved1", or "improved2"
    double hoffman = 0.0;
    std::optional<double> improved1; ///< present when rho_minus >= 1 - 1/d
    std::optional<double> improved2; ///< present when applicable
};

/// Minimum of the applicable bounds, with the winner recorded. Ties resolve
/// in the order hoffman, improved1, improved2.
BestBound best_independence_bound(const Spectrum& spec);

/// True iff P f_B = -rho_minus f_B entrywise within tolerance 1e-7, which
/// characterizes equality in the Hoffman bound. Throws if B is not
/// independent.
bool hoffman_equality_check(const Graph& g, const Spectrum& spec,
                            const std::vector<int>& B);
bool hoffman_equality_check(const Graph& g, const std::vector<int>& B);

bool is_independent_set(const Graph& g, const std::vector<int>& B);

} // namespace flipmatch
