#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

#include "flipmatch/graph.hpp"
#include "flipmatch/spectrum.hpp"

namespace flipmatch {

inline constexpr double kInequalitySlack = 1e-7;
inline constexpr double kIdentitySlack = 1e-9;

struct SubsetStats {
    double density = 0.0;
    bool independent = false;
    bool maximal_independent = false;
};

SubsetStats subset_stats(const Graph& g, const std::vector<int>& B);

struct ExpansionResult {
    double phi = 0.0;
    std::vector<int> witness;
    bool exact = false;     ///< exhaustive minimum vs. best subset found
    bool connected = true;  ///< disconnected graphs have phi = 0
};

/// Expansion constant: min over nonempty proper B of
/// |boundary(B)| * n / (d |B| |B^c|). Exact (delegated to the exhaustive
/// oracle) for n <= exact_max_n; above that, an eigenvector-sweep upper bound
/// with exact = false.
ExpansionResult expansion_constant(const Graph& g, int exact_max_n = 24);

struct CheegerChainReport {
    double phi = 0.0;
    double rho_plus = 0.0;
    double rho = 0.0;
    double lower_quadratic = 0.0; ///< phi^2 / 8
    double lower_sqrt = 0.0;      ///< 1 - sqrt(1 - (phi/2)^2)
    double gap_plus = 0.0;        ///< 1 - rho_plus
    bool pass = false; ///< lower_quadratic <= lower_sqrt <= gap_plus <= phi

    // The variant with the full spectral radius is evaluated and recorded but
    // never asserted: on finite bipartite graphs rho = 1 makes 1 - rho = 0,
    // which can fall below lower_sqrt (C_6 is the standard counterexample).
    double gap_full = 0.0; ///< 1 - rho
    bool full_variant_holds = false;
};

/// Evaluates the inequality chain between the expansion constant and the
/// spectral gap on a connected regular graph with exact phi available.
CheegerChainReport verify_cheeger_chain(const Graph& g);

struct InequalityCheck {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    bool pass = false;
};

/// Level-set inequality for f >= 0:
/// 2 * (|{f = 0}|/n) * phi * mean(f) <= (1/(n d)) * sum over ordered adjacent
/// pairs (x, y) of |f(x) - f(y)|. Throws on negative entries.
InequalityCheck verify_level_sets(const Graph& g, const Eigen::VectorXd& f, double phi);
InequalityCheck verify_level_sets(const Graph& g, const Eigen::VectorXd& f);

struct SubsetBoundsReport {
    double density = 0.0;
    bool independent = false;
    bool independent_checks_skipped = false;
    std::vector<InequalityCheck> checks;
    bool all_pass = true;
};

/// Bundle of subset inequalities for a nonempty proper B:
///  - neighbor_expansion: |N(B)|/n >= b / (rho^2 (1-b) + b)
///  - variance: mean over x of (|N(x) cap B|/d - b)^2 <= rho^2 b (1-b)
/// and, when B is independent (skipped otherwise, with a flag):
///  - inner_product: (P f_B, f_B) = -b^2 exactly
///  - conditional_mean: E[q/d | B^c] = b/(1-b) exactly, q(x) = |N(x) cap B|
///  - conditional_variance: Var(q/d | B^c) <= b (rho_minus - m)(rho_plus + m)
///    with m = b/(1-b)
SubsetBoundsReport verify_subset_bounds(const Graph& g, const Spectrum& spec,
                                        const std::vector<int>& B);

/// Mixing bound:
/// |mean_x 1{x in B1} |N(x) cap B2|/d - b1 b2|
///   <= rho sqrt(b1 b2 (1-b1)(1-b2)).
InequalityCheck verify_mixing(const Graph& g, const Spectrum& spec,
                              const std::vector<int>& B1, const std::vector<int>& B2);

} // namespace flipmatch
