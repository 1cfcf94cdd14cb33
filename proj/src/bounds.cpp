#include "flipmatch/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace flipmatch {

double hoffman_bound(double rho_minus) {
    return rho_minus / (1.0 + rho_minus);
}

double hoffman_bound(const Spectrum& spec) {
    return hoffman_bound(spec.rho_minus);
}

double improved_bound_1(int d, double rho_minus) {
    if (d < 2) throw std::invalid_argument("improved bound 1: d must be >= 2");
    if (rho_minus < 0.0 || rho_minus > 1.0)
        throw std::invalid_argument("improved bound 1: rho_minus must lie in [0, 1]");
    return (d - 1.0) / ((1.0 + rho_minus) * (d * (2.0 - rho_minus) - 1.0));
}

std::optional<double> improved_bound_2(int d, double rho_minus) {
    if (d < 2) throw std::invalid_argument("improved bound 2: d must be >= 2");
    if (rho_minus <= 0.0 || rho_minus >= 1.0) return std::nullopt;
    const double dr = d * rho_minus;
    if (std::abs(dr - std::round(dr)) < 1e-9) return std::nullopt;
    const double k = std::floor(dr);
    const double low = k / (d + k);
    const double main = (k * k + k) / (k * k + (1.0 + 2.0 * d) * k + d - d * dr);
    return std::max(low, main);
}

BestBound best_independence_bound(const Spectrum& spec) {
    BestBound best;
    best.hoffman = hoffman_bound(spec);
    best.value = best.hoffman;
    best.winner = "hoffman";
    if (spec.rho_minus >= 1.0 - 1.0 / spec.degree) {
        best.improved1 = improved_bound_1(spec.degree, spec.rho_minus);
        if (*best.improved1 < best.value) {
            best.value = *best.improved1;
            best.winner = "improved1";
        }
    }
    best.improved2 = improved_bound_2(spec.degree, spec.rho_minus);
    if (best.improved2 && *best.improved2 < best.value) {
        best.value = *best.improved2;
        best.winner = "improved2";
    }
    return best;
}

bool is_independent_set(const Graph& g, const std::vector<int>& B) {
    auto mask = subset_mask(g.vertex_count(), B);
    for (auto [u, v] : g.edges())
        if (mask[u] && mask[v]) return false;
    return true;
}

bool hoffman_equality_check(const Graph& g, const Spectrum& spec,
                            const std::vector<int>& B) {
    if (!is_independent_set(g, B))
        throw std::invalid_argument("hoffman equality check: B is not independent");
    Eigen::VectorXd f = centered_indicator(g, B);
    Eigen::VectorXd residual = apply_transition(g, f) + spec.rho_minus * f;
    return residual.lpNorm<Eigen::Infinity>() <= 1e-7;
}

bool hoffman_equality_check(const Graph& g, const std::vector<int>& B) {
    return hoffman_equality_check(g, transition_spectrum(g), B);
}

} // namespace flipmatch
