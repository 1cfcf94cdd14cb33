#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "flipmatch/graph.hpp"
#include "flipmatch/report.hpp"

namespace flipmatch {

struct SuiteConfig {
    std::uint64_t seed = 1;
    int oracle_nmax = 40;       ///< independence-oracle ceiling
    int matching_seeds = 200;   ///< seeds per graph in the matching suite
    int decay_seeds = 50;
    int decay_side = 500;
    int decay_degree = 3;
    int level_set_samples = 200;
    int edgefactor_samples = 100000;
    int subsets_nmax = 12;      ///< exhaustive subset sweep ceiling
    int mixing_nmax = 10;       ///< exhaustive subset-pair sweep ceiling
    int cheeger_nmax = 10;
    int levelset_nmax = 24;
    bool empty_corpus = false;  ///< run against no graphs (trivially passing)
};

struct CorpusEntry {
    std::string id;
    Graph graph;
};

/// Connected regular graphs every suite draws from: the named catalog,
/// Cayley constructions, and seeded random regular bipartite instances.
std::vector<CorpusEntry> builtin_corpus(const SuiteConfig& config);

/// Graphs the matching suite runs on (bipartite regular).
std::vector<CorpusEntry> matching_corpus(const SuiteConfig& config);

/// suite is one of "spectral", "cheeger", "subsets", "matching", "decay",
/// "all". Hard-assertion failures are reflected in the report's
/// hard_failures(); advisory records never fail a build.
VerificationReport run_suite(const std::string& suite, const SuiteConfig& config);

/// Upper quantile of the chi-square distribution via the Wilson-Hilferty
/// cube approximation; z is the standard-normal quantile.
double chi_square_quantile(int dof, double z);

} // namespace flipmatch
