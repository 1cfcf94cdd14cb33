#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "flipmatch/graph.hpp"
#include "flipmatch/group.hpp"
#include "flipmatch/matching.hpp"

namespace flipmatch::oracle {

// Independent ground-truth solvers used to certify the primary
// implementations. These deliberately use different algorithms from the
// primary code paths (breadth-first layered search instead of depth-first
// enumeration, exhaustive subset sweeps instead of spectral shortcuts).

struct MaxMatchingResult {
    int size = 0;
    Matching witness;
    std::string method;
};

/// Maximum matching size. Bipartite graphs use Hopcroft-Karp layered
/// augmentation; general graphs fall back to exhaustive branch and bound
/// (n <= 20).
MaxMatchingResult max_matching(const Graph& g);

struct MaxIndependentSetResult {
    int size = 0;
    std::vector<int> witness;
    std::string method;
};

/// Exact maximum independent set by branch and bound with degree pruning.
/// Throws when n exceeds `max_n`.
MaxIndependentSetResult max_independent_set(const Graph& g, int max_n = 40);

struct CheegerResult {
    double phi = 0.0;
    std::vector<int> witness;
    long long boundary = 0; ///< edge boundary of the witness
    int subset_size = 0;
    std::string method;
};

/// Exact expansion constant by exhaustive minimization of
/// |boundary(B)| * n / (d |B| |B^c|) over all nonempty proper subsets,
/// walking subsets in Gray-code order with vertex 0 pinned inside B
/// (the objective is symmetric under complement). Requires n <= 24 and a
/// regular graph.
CheegerResult brute_cheeger(const Graph& g, int max_n = 24);

/// True iff an augmenting chain of length <= length_cap exists (length_cap < 0
/// means unbounded). Bipartite graphs use layered breadth-first alternating
/// search, which finds the exact shortest chain; non-bipartite graphs use an
/// exhaustive simple-path search.
bool has_augmenting_chain(const Graph& g, const Matching& m, int length_cap = -1);

struct MassTransportResult {
    double sent = 0.0;
    double received = 0.0;
    bool equal = false;
};

/// For the diagonally invariant kernel F(x, y) = k(x^{-1} y), compares the
/// mass sent from the identity with the mass received by it. The two sums run
/// over the same multiset of values, so they are compared bitwise after
/// order-independent (sorted) accumulation.
MassTransportResult mass_transport_check(const GroupTable& table,
                                         const std::vector<double>& kernel);

} // namespace flipmatch::oracle
