#include "flipmatch/spectrum.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace flipmatch {

Spectrum transition_spectrum(const Graph& g) {
    auto d = g.regular_degree();
    if (!d || *d < 1)
        throw std::invalid_argument("transition spectrum: graph must be regular with d >= 1");
    const int n = g.vertex_count();

    Eigen::MatrixXd P = Eigen::MatrixXd::Zero(n, n);
    const double w = 1.0 / *d;
    for (auto [u, v] : g.edges()) {
        P(u, v) = w;
        P(v, u) = w;
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(P, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("transition spectrum: eigensolver failed");

    Spectrum spec;
    spec.degree = *d;
    spec.eigenvalues = solver.eigenvalues().reverse();
    // clamp solver noise into the exact range [-1, 1]
    for (int i = 0; i < n; ++i) {
        double& lambda = spec.eigenvalues[i];
        if (std::abs(lambda) > 1.0 + 1e-9)
            throw std::runtime_error("transition spectrum: eigenvalue out of range");
        lambda = std::clamp(lambda, -1.0, 1.0);
    }
    if (std::abs(spec.eigenvalues[0] - 1.0) > 1e-9)
        throw std::runtime_error("transition spectrum: top eigenvalue is not 1");

    spec.rho_plus = n > 1 ? spec.eigenvalues[1] : -1.0;
    spec.rho_minus = -spec.eigenvalues[n - 1];
    spec.rho = std::max(std::abs(spec.rho_plus), spec.rho_minus);
    return spec;
}

Eigen::VectorXd apply_transition(const Graph& g, const Eigen::VectorXd& f) {
    auto d = g.regular_degree();
    if (!d || *d < 1)
        throw std::invalid_argument("apply transition: graph must be regular with d >= 1");
    if (f.size() != g.vertex_count())
        throw std::invalid_argument("apply transition: size mismatch");
    Eigen::VectorXd out = Eigen::VectorXd::Zero(f.size());
    for (auto [u, v] : g.edges()) {
        out[u] += f[v];
        out[v] += f[u];
    }
    return out / *d;
}

Eigen::VectorXd centered_indicator(const Graph& g, const std::vector<int>& B) {
    const int n = g.vertex_count();
    Eigen::VectorXd f = Eigen::VectorXd::Zero(n);
    for (int v : B) {
        if (v < 0 || v >= n) throw std::invalid_argument("subset: vertex out of range");
        f[v] = 1.0;
    }
    const double b = static_cast<double>(B.size()) / n;
    f.array() -= b;
    return f;
}

double mean_inner(const Eigen::VectorXd& u, const Eigen::VectorXd& v) {
    if (u.size() != v.size()) throw std::invalid_argument("mean_inner: size mismatch");
    return u.dot(v) / static_cast<double>(u.size());
}

double estimate_tree_rho(int d, int radius) {
    if (d < 2) throw std::invalid_argument("tree rho: d must be >= 2");
    if (radius < 1) throw std::invalid_argument("tree rho: radius must be >= 1");

    // Radial reduction of A/d on the tree ball: the Perron eigenvector is a
    // function of the distance from the root, so the top eigenvalue survives
    // restriction to the (radius+1)-dimensional radial subspace. In
    // sphere-weighted coordinates the restricted operator is the symmetric
    // tridiagonal with couplings 1/sqrt(d) at the root and sqrt(d-1)/d inside.
    const int m = radius + 1;
    Eigen::VectorXd coupling(m - 1);
    coupling[0] = 1.0 / std::sqrt(static_cast<double>(d));
    for (int k = 1; k < m - 1; ++k) coupling[k] = std::sqrt(d - 1.0) / d;

    auto apply = [&](const Eigen::VectorXd& x) {
        Eigen::VectorXd y = Eigen::VectorXd::Zero(m);
        for (int k = 0; k + 1 < m; ++k) {
            y[k] += coupling[k] * x[k + 1];
            y[k + 1] += coupling[k] * x[k];
        }
        return y;
    };

    // Power iteration on T^2 (T is bipartite-like, so iterate the square).
    // The Rayleigh quotient of T^2 never exceeds the top eigenvalue, so the
    // returned value is always a lower bound for the tree's rho.
    Eigen::VectorXd v = Eigen::VectorXd::Ones(m).normalized();
    double q = 0.0;
    for (long iter = 0; iter < 2000000; ++iter) {
        Eigen::VectorXd w = apply(apply(v));
        double q_next = v.dot(w);
        v = w.normalized();
        if (iter > 16 && std::abs(q_next - q) <= 1e-14 * std::max(q_next, 1e-300)) {
            q = q_next;
            break;
        }
        q = q_next;
    }
    return std::sqrt(q);
}

} // namespace flipmatch
