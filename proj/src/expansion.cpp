#include "flipmatch/expansion.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "flipmatch/bounds.hpp"
#include "flipmatch/oracles.hpp"

namespace flipmatch {

SubsetStats subset_stats(const Graph& g, const std::vector<int>& B) {
    auto mask = subset_mask(g.vertex_count(), B);
    SubsetStats stats;
    stats.density = static_cast<double>(B.size()) / g.vertex_count();
    stats.independent = true;
    for (auto [u, v] : g.edges())
        if (mask[u] && mask[v]) stats.independent = false;
    if (stats.independent) {
        stats.maximal_independent = true;
        for (int v = 0; v < g.vertex_count() && stats.maximal_independent; ++v) {
            if (mask[v]) continue;
            bool dominated = false;
            for (int w : g.neighbors(v))
                if (mask[w]) { dominated = true; break; }
            if (!dominated) stats.maximal_independent = false;
        }
    }
    return stats;
}

namespace {

double phi_of_subset(const Graph& g, int d, const std::vector<char>& mask, int size) {
    const int n = g.vertex_count();
    return static_cast<double>(edge_boundary(g, mask)) * n /
           (static_cast<double>(d) * size * (n - size));
}

} // namespace

ExpansionResult expansion_constant(const Graph& g, int exact_max_n) {
    auto d = g.regular_degree();
    if (!d || *d < 1)
        throw std::invalid_argument("expansion constant: graph must be regular with d >= 1");
    const int n = g.vertex_count();
    if (n < 2) throw std::invalid_argument("expansion constant: need n >= 2");

    ExpansionResult result;
    if (!is_connected(g)) {
        // a union of components has a zero-boundary subset
        result.phi = 0.0;
        result.exact = true;
        result.connected = false;
        return result;
    }

    if (n <= exact_max_n) {
        auto exact = oracle::brute_cheeger(g, exact_max_n);
        result.phi = exact.phi;
        result.witness = exact.witness;
        result.exact = true;
        return result;
    }

    // Sampled mode: sweep prefixes of the second eigenvector's vertex order.
    // The best subset found certifies an upper bound on phi.
    Eigen::MatrixXd P = Eigen::MatrixXd::Zero(n, n);
    for (auto [u, v] : g.edges()) {
        P(u, v) = 1.0 / *d;
        P(v, u) = 1.0 / *d;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(P);
    Eigen::VectorXd second = solver.eigenvectors().col(n - 2);

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (second[a] != second[b]) return second[a] > second[b];
        return a < b;
    });

    std::vector<char> mask(n, 0);
    double best = std::numeric_limits<double>::infinity();
    int best_prefix = 0;
    for (int k = 0; k + 1 < n; ++k) {
        mask[order[k]] = 1;
        double phi = phi_of_subset(g, *d, mask, k + 1);
        if (phi < best) {
            best = phi;
            best_prefix = k + 1;
        }
    }
    result.phi = best;
    result.exact = false;
    result.witness.assign(order.begin(), order.begin() + best_prefix);
    std::sort(result.witness.begin(), result.witness.end());
    return result;
}

CheegerChainReport verify_cheeger_chain(const Graph& g) {
    if (!is_connected(g))
        throw std::invalid_argument("cheeger chain: graph must be connected");
    auto expansion = expansion_constant(g);
    if (!expansion.exact)
        throw std::invalid_argument("cheeger chain: exact expansion constant unavailable");
    Spectrum spec = transition_spectrum(g);

    CheegerChainReport report;
    report.phi = expansion.phi;
    report.rho_plus = spec.rho_plus;
    report.rho = spec.rho;
    report.lower_quadratic = report.phi * report.phi / 8.0;
    const double half = report.phi / 2.0;
    report.lower_sqrt = 1.0 - std::sqrt(std::max(0.0, 1.0 - half * half));
    report.gap_plus = 1.0 - spec.rho_plus;
    report.gap_full = 1.0 - spec.rho;
    report.pass = report.lower_quadratic <= report.lower_sqrt + kInequalitySlack &&
                  report.lower_sqrt <= report.gap_plus + kInequalitySlack &&
                  report.gap_plus <= report.phi + kInequalitySlack;
    report.full_variant_holds = report.lower_sqrt <= report.gap_full + kInequalitySlack;
    return report;
}

InequalityCheck verify_level_sets(const Graph& g, const Eigen::VectorXd& f, double phi) {
    auto d = g.regular_degree();
    if (!d || *d < 1)
        throw std::invalid_argument("level sets: graph must be regular with d >= 1");
    if (f.size() != g.vertex_count())
        throw std::invalid_argument("level sets: size mismatch");
    if ((f.array() < 0.0).any())
        throw std::invalid_argument("level sets: f must be nonnegative");

    const int n = g.vertex_count();
    const double zero_fraction =
        static_cast<double>((f.array() == 0.0).count()) / n;
    double variation = 0.0;
    for (auto [u, v] : g.edges()) variation += 2.0 * std::abs(f[u] - f[v]);

    InequalityCheck check;
    check.name = "level_sets";
    check.lhs = 2.0 * zero_fraction * phi * f.mean();
    check.rhs = variation / (static_cast<double>(n) * *d);
    check.pass = check.lhs <= check.rhs + kInequalitySlack;
    return check;
}

InequalityCheck verify_level_sets(const Graph& g, const Eigen::VectorXd& f) {
    auto expansion = expansion_constant(g);
    if (!expansion.exact)
        throw std::invalid_argument("level sets: exact expansion constant unavailable");
    return verify_level_sets(g, f, expansion.phi);
}

SubsetBoundsReport verify_subset_bounds(const Graph& g, const Spectrum& spec,
                                        const std::vector<int>& B) {
    const int n = g.vertex_count();
    if (B.empty() || static_cast<int>(B.size()) >= n)
        throw std::invalid_argument("subset bounds: B must be nonempty and proper");

    SubsetBoundsReport report;
    const double b = static_cast<double>(B.size()) / n;
    report.density = b;
    report.independent = is_independent_set(g, B);

    Eigen::VectorXd indicator = Eigen::VectorXd::Zero(n);
    for (int v : B) indicator[v] = 1.0;
    Eigen::VectorXd p_indicator = apply_transition(g, indicator); // |N(x) cap B| / d

    {
        InequalityCheck check;
        check.name = "neighbor_expansion";
        check.lhs = static_cast<double>(neighbor_set(g, B).size()) / n;
        check.rhs = b / (spec.rho * spec.rho * (1.0 - b) + b);
        check.pass = check.lhs + kInequalitySlack >= check.rhs;
        report.checks.push_back(check);
    }
    {
        InequalityCheck check;
        check.name = "variance";
        check.lhs = (p_indicator.array() - b).square().mean();
        check.rhs = spec.rho * spec.rho * b * (1.0 - b);
        check.pass = check.lhs <= check.rhs + kInequalitySlack;
        report.checks.push_back(check);
    }

    if (!report.independent) {
        report.independent_checks_skipped = true;
    } else {
        Eigen::VectorXd f = centered_indicator(g, B);
        {
            InequalityCheck check;
            check.name = "inner_product";
            check.lhs = mean_inner(apply_transition(g, f), f);
            check.rhs = -b * b;
            check.pass = std::abs(check.lhs - check.rhs) <= kIdentitySlack;
            report.checks.push_back(check);
        }
        const double m = b / (1.0 - b);
        auto mask = subset_mask(n, B);
        double sum = 0.0, sum_sq = 0.0;
        int complement = 0;
        for (int v = 0; v < n; ++v) {
            if (mask[v]) continue;
            ++complement;
            sum += p_indicator[v];
            sum_sq += p_indicator[v] * p_indicator[v];
        }
        const double cond_mean = sum / complement;
        const double cond_var = sum_sq / complement - cond_mean * cond_mean;
        {
            InequalityCheck check;
            check.name = "conditional_mean";
            check.lhs = cond_mean;
            check.rhs = m;
            check.pass = std::abs(check.lhs - check.rhs) <= kIdentitySlack;
            report.checks.push_back(check);
        }
        {
            InequalityCheck check;
            check.name = "conditional_variance";
            check.lhs = cond_var;
            check.rhs = b * (spec.rho_minus - m) * (spec.rho_plus + m);
            check.pass = check.lhs <= check.rhs + kInequalitySlack;
            report.checks.push_back(check);
        }
    }

    for (const auto& check : report.checks)
        report.all_pass = report.all_pass && check.pass;
    return report;
}

InequalityCheck verify_mixing(const Graph& g, const Spectrum& spec,
                              const std::vector<int>& B1, const std::vector<int>& B2) {
    const int n = g.vertex_count();
    auto mask1 = subset_mask(n, B1);
    const double b1 = static_cast<double>(B1.size()) / n;
    const double b2 = static_cast<double>(B2.size()) / n;

    Eigen::VectorXd indicator2 = Eigen::VectorXd::Zero(n);
    for (int v : B2) indicator2[v] = 1.0;
    Eigen::VectorXd p2 = apply_transition(g, indicator2);

    double cross = 0.0;
    for (int v = 0; v < n; ++v)
        if (mask1[v]) cross += p2[v];
    cross /= n;

    InequalityCheck check;
    check.name = "mixing";
    check.lhs = std::abs(cross - b1 * b2);
    check.rhs = spec.rho * std::sqrt(b1 * b2 * (1.0 - b1) * (1.0 - b2));
    check.pass = check.lhs <= check.rhs + kInequalitySlack;
    return check;
}

} // namespace flipmatch
