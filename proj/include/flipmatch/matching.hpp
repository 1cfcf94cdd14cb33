#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "flipmatch/graph.hpp"

namespace flipmatch {

/// Partial matching as a symmetric mate map. mate(v) == -1 means unmatched.
class Matching {
public:
    Matching() = default;
    explicit Matching(int n) : mate_(n, -1) {}

    int vertex_count() const noexcept { return static_cast<int>(mate_.size()); }
    bool matched(int v) const { return mate_.at(v) != -1; }
    int mate(int v) const { return mate_.at(v); }
    int size() const noexcept { return pairs_; }
    int unmatched_count() const noexcept { return vertex_count() - 2 * pairs_; }
    bool is_perfect() const noexcept { return unmatched_count() == 0; }
    std::vector<int> unmatched_vertices() const;

    /// Pairs two currently unmatched vertices. Throws if either is matched.
    void match(int u, int v);
    /// Removes the pair (u, v). Throws unless they are currently mates.
    void unmatch(int u, int v);

    bool operator==(const Matching&) const = default;

private:
    std::vector<int> mate_;
    int pairs_ = 0;
};

/// True iff every matched pair is an edge of g (the mate map is symmetric by
/// construction).
bool is_valid_matching(const Graph& g, const Matching& m);

/// Augmenting chain: a simple path v_0 .. v_{2k+1} between unmatched vertices
/// whose edges alternate unmatched, matched, ..., unmatched. Stored in
/// canonical orientation (smaller endpoint first).
struct Chain {
    std::vector<int> vertices;

    int length() const noexcept { return static_cast<int>(vertices.size()) - 1; }
    bool operator==(const Chain&) const = default;
};

bool is_augmenting_chain(const Graph& g, const Matching& m, const Chain& c);

/// Per-vertex stream of fresh uniform [0,1) values. The value of draw k at
/// vertex v depends only on (seed, v, k), so runs are reproducible and
/// distinct (vertex, draw) pairs decorrelate through the keyed hash.
class RandomTape {
public:
    RandomTape(std::uint64_t seed, int n) : seed_(seed), counter_(n, 0) {}

    std::uint64_t seed() const noexcept { return seed_; }
    std::uint64_t counter(int v) const { return counter_.at(v); }

    /// Current value at v; does not consume it.
    double peek(int v) const;
    /// Discards the current value at v.
    void advance(int v) { ++counter_.at(v); }

private:
    std::uint64_t seed_;
    std::vector<std::uint64_t> counter_;
};

/// Order-sensitive keyed hash of a list of uniforms, as a 64-bit word and
/// mapped to [0,1). Distinct lists collide with probability about 2^-64 per
/// pair; ties among chains are broken by the canonical vertex sequence, so a
/// collision cannot break determinism. Throws on an empty list.
std::uint64_t composition_hash(std::span<const double> values);
double composition(std::span<const double> values);

/// All augmenting chains of length <= max_length (odd), each listed once in
/// canonical orientation, sorted lexicographically by vertex sequence.
/// Depth-first alternating-path search from each unmatched vertex.
std::vector<Chain> enumerate_chains(const Graph& g, const Matching& m, int max_length);

/// Exchanges matched and unmatched edges along c; the matching grows by one
/// pair and every vertex of c ends up matched. Throws unless c is a valid
/// augmenting chain for m.
Matching flip(const Graph& g, const Matching& m, const Chain& c);

struct StepResult {
    int candidate_count = 0;    ///< chains considered this step
    std::vector<Chain> flipped; ///< pairwise vertex-disjoint
};

/// One round of the randomized local rule: every current chain is assigned
/// the composition of the current tape values along its vertices, and a chain
/// flips iff its (composition, canonical key) exceeds that of every chain
/// sharing a vertex with it. Mutual dominance between intersecting chains is
/// impossible, so the flipped set is vertex-disjoint; if any chain exists,
/// the globally largest one flips, so the matching strictly grows.
/// Afterwards the tape advances at exactly the vertices that lay on at least
/// one candidate chain.
StepResult step(const Graph& g, Matching& m, int max_length, RandomTape& tape);

struct StageStats {
    int stage = 0; ///< chains up to length 2*stage - 1 were eliminated
    int steps = 0;
    int flips = 0;
    double unmatched_fraction = 0.0;
};

struct RunStats {
    std::uint64_t seed = 0;
    std::vector<StageStats> stages;
    std::vector<long long> edge_status_changes;
    long long edge_status_changes_total = 0;
    /// sum over flipped chains of 2 * (chain vertex count): total mass sent
    /// by chain endpoints when each sends 1 to every vertex of its chain
    double sent_mass_total = 0.0;
    int total_flips = 0;
    bool perfect = false;
    std::vector<std::string> warnings;
};

/// Repeats `step` with max_length = 2*stage - 1 until no chain of that length
/// remains. Terminates because each nonempty step strictly grows the
/// matching. Edge status changes and flip totals accumulate into `stats`.
StageStats run_stage(const Graph& g, Matching& m, int stage, RandomTape& tape,
                     RunStats& stats);

struct RunResult {
    Matching matching;
    RunStats stats;
};

/// Full run: stages n = 1, 2, ... until the matching is perfect or no
/// augmenting chain of any possible length remains. Requires a bipartite
/// graph (throws otherwise); non-regular bipartite graphs are accepted with a
/// warning and end at a maximum matching. Deterministic given (g, seed).
RunResult run(const Graph& g, std::uint64_t seed);

/// Alternating-reachability sets: A_0 = unmatched vertices; for even k,
/// A_{k+1} = vertices with a neighbor in A_k; for odd k, A_{k+1} = mates of
/// the matched vertices of A_k. Returns A_0..A_depth as sorted lists.
std::vector<std::vector<int>> alternating_sets(const Graph& g, const Matching& m,
                                               int depth);

/// Structural consequences of "no chain of length <= 2*stage - 1", checked on
/// the sets A_0..A_stage: even-indexed sets are independent, odd-step set
/// sizes are preserved by the mate bijection, and no unmatched vertex appears
/// past A_0.
struct AlternatingSetsCheck {
    bool even_levels_independent = true;
    bool odd_step_sizes_equal = true;
    bool no_unmatched_past_level0 = true;

    bool all_pass() const {
        return even_levels_independent && odd_step_sizes_equal &&
               no_unmatched_past_level0;
    }
};

AlternatingSetsCheck check_alternating_sets(const Graph& g, const Matching& m,
                                            int stage);

/// Per-stage expansion rate c = 2/(1+rho^2) and the stage bound
/// a_n = c^(-floor((n+1)/2)) on the unmatched fraction after stage n.
double decay_rate(double rho);
double decay_bound(int stage, double rho);

struct DecayRow {
    int stage = 0;
    double observed = 0.0;  ///< unmatched fraction after the stage
    double bound = 0.0;     ///< a_n
    double threshold = 0.0; ///< a_n + statistical margin
    bool soft_pass = false;
};

/// Advisory comparison of the observed per-stage unmatched fractions against
/// the decay schedule, never a hard assertion: the schedule bounds an
/// infinite-graph expectation that finite instances only emulate. The margin
/// is 3*sqrt(a_n / n_vertices) + eps_base per stage. Also reports the total
/// sent mass per vertex next to the schedule's partial sum of 2n * a_{n-1}.
struct DecayReport {
    double rho = 0.0;
    double rate = 0.0;
    std::vector<DecayRow> rows;
    double sent_mass_per_vertex = 0.0;
    double sent_mass_schedule = 0.0;
    bool all_soft_pass = true;
};

DecayReport decay_report(const RunStats& stats, int n_vertices, double rho,
                         double eps_base = 0.02);

/// xi(x) = fractional part of the sum of the values on the edges at x.
/// Expects one value per canonical edge index.
std::vector<double> edge_to_vertex_uniforms(const Graph& g,
                                            const std::vector<double>& edge_values);

} // namespace flipmatch
