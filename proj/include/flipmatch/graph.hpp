#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace flipmatch {

/// Simple undirected graph on vertices 0..n-1. Immutable after construction;
/// construction validates simplicity (no loops, no duplicate edges) and
/// records the uniform degree when the graph is regular.
class Graph {
public:
    using Edge = std::pair<int, int>;

    /// Builds a graph from an edge list. Edges may be given in either
    /// orientation; they are canonicalized to u < v and sorted.
    /// Throws std::invalid_argument on loops, duplicates, or out-of-range
    /// endpoints.
    static Graph from_edges(int n, std::vector<Edge> edges);

    int vertex_count() const noexcept { return n_; }
    int edge_count() const noexcept { return static_cast<int>(edges_.size()); }

    /// Canonical edge list: each edge (u, v) with u < v, lexicographically sorted.
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    /// Sorted neighbor list of v.
    const std::vector<int>& neighbors(int v) const { return adj_.at(v); }

    int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }

    /// Uniform degree if every vertex has the same degree, nullopt otherwise.
    std::optional<int> regular_degree() const noexcept { return degree_; }

    bool has_edge(int u, int v) const;

    /// Position of {u, v} in edges(), or -1 when absent.
    int edge_index(int u, int v) const;

private:
    Graph() = default;

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
    std::optional<int> degree_;
};

/// Two-coloring of a bipartite graph: side[v] in {0, 1} and every edge joins
/// side 0 to side 1.
struct Bipartition {
    std::vector<std::int8_t> side;

    std::vector<int> vertices_on(int s) const;
};

/// Built-in catalog: "petersen", "complete:k", "complete-bipartite:a,b",
/// "cycle:k", "hypercube:k", "path:k".
Graph named_graph(const std::string& id);

/// Text format: '#' comment lines, then "n m", then m lines "u v".
Graph read_graph(std::istream& in);
Graph load_graph_file(const std::string& path);
void write_graph(const Graph& g, std::ostream& out,
                 const std::vector<std::string>& comments = {});

/// Length of the shortest cycle; nullopt for forests.
std::optional<int> girth(const Graph& g);

/// Breadth-first two-coloring. Deterministic: component roots are the lowest
/// unvisited indices and get side 0. Returns nullopt when an odd cycle exists.
std::optional<Bipartition> bipartition_of(const Graph& g);

bool is_connected(const Graph& g);

/// Number of edges with exactly one endpoint in B.
int edge_boundary(const Graph& g, const std::vector<int>& B);
int edge_boundary(const Graph& g, const std::vector<char>& in_B);

/// Vertices adjacent to at least one member of B, as a sorted list.
std::vector<int> neighbor_set(const Graph& g, const std::vector<int>& B);

std::vector<char> subset_mask(int n, const std::vector<int>& B);

} // namespace flipmatch
