#include "flipmatch/graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace flipmatch {

Graph Graph::from_edges(int n, std::vector<Edge> edges) {
    if (n < 0) throw std::invalid_argument("graph: negative vertex count");
    for (auto& [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("graph: vertex index out of range (n=" +
                                        std::to_string(n) + ")");
        if (u == v)
            throw std::invalid_argument("graph: self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("graph: duplicate edge");

    Graph g;
    g.n_ = n;
    g.edges_ = std::move(edges);
    g.adj_.assign(n, {});
    for (auto [u, v] : g.edges_) {
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());

    if (n > 0) {
        int d = g.degree(0);
        bool regular = true;
        for (int v = 1; v < n; ++v)
            if (g.degree(v) != d) { regular = false; break; }
        if (regular) g.degree_ = d;
    }
    return g;
}

bool Graph::has_edge(int u, int v) const {
    const auto& nbrs = adj_.at(u);
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

int Graph::edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
    if (it == edges_.end() || *it != Edge{u, v}) return -1;
    return static_cast<int>(it - edges_.begin());
}

std::vector<int> Bipartition::vertices_on(int s) const {
    std::vector<int> out;
    for (int v = 0; v < static_cast<int>(side.size()); ++v)
        if (side[v] == s) out.push_back(v);
    return out;
}

namespace {

std::vector<int> parse_int_args(const std::string& id, const std::string& args,
                                std::size_t expected) {
    std::vector<int> out;
    std::stringstream ss(args);
    std::string tok;
    while (std::getline(ss, tok, ','))
        out.push_back(std::stoi(tok));
    if (out.size() != expected)
        throw std::invalid_argument("named graph '" + id + "': expected " +
                                    std::to_string(expected) + " parameter(s)");
    return out;
}

Graph make_petersen() {
    std::vector<Graph::Edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.push_back({i, (i + 1) % 5}); // outer 5-cycle
        edges.push_back({i, i + 5});       // spokes
        edges.push_back({5 + i, 5 + (i + 2) % 5}); // inner pentagram
    }
    return Graph::from_edges(10, std::move(edges));
}

} // namespace

Graph named_graph(const std::string& id) {
    std::string name = id;
    std::string args;
    if (auto pos = id.find(':'); pos != std::string::npos) {
        name = id.substr(0, pos);
        args = id.substr(pos + 1);
    }

    if (name == "petersen") {
        if (!args.empty()) throw std::invalid_argument("petersen takes no parameters");
        return make_petersen();
    }
    if (name == "complete") {
        int k = parse_int_args(id, args, 1)[0];
        if (k < 1) throw std::invalid_argument("complete:k requires k >= 1");
        std::vector<Graph::Edge> edges;
        for (int u = 0; u < k; ++u)
            for (int v = u + 1; v < k; ++v) edges.push_back({u, v});
        return Graph::from_edges(k, std::move(edges));
    }
    if (name == "complete-bipartite") {
        auto ab = parse_int_args(id, args, 2);
        int a = ab[0], b = ab[1];
        if (a < 1 || b < 1) throw std::invalid_argument("complete-bipartite:a,b requires a,b >= 1");
        std::vector<Graph::Edge> edges;
        for (int u = 0; u < a; ++u)
            for (int v = 0; v < b; ++v) edges.push_back({u, a + v});
        return Graph::from_edges(a + b, std::move(edges));
    }
    if (name == "cycle") {
        int k = parse_int_args(id, args, 1)[0];
        if (k < 3) throw std::invalid_argument("cycle:k requires k >= 3");
        std::vector<Graph::Edge> edges;
        for (int i = 0; i < k; ++i) edges.push_back({i, (i + 1) % k});
        return Graph::from_edges(k, std::move(edges));
    }
    if (name == "hypercube") {
        int k = parse_int_args(id, args, 1)[0];
        if (k < 1 || k > 20) throw std::invalid_argument("hypercube:k requires 1 <= k <= 20");
        int n = 1 << k;
        std::vector<Graph::Edge> edges;
        for (int x = 0; x < n; ++x)
            for (int j = 0; j < k; ++j)
                if (int y = x ^ (1 << j); x < y) edges.push_back({x, y});
        return Graph::from_edges(n, std::move(edges));
    }
    if (name == "path") {
        int k = parse_int_args(id, args, 1)[0];
        if (k < 1) throw std::invalid_argument("path:k requires k >= 1");
        std::vector<Graph::Edge> edges;
        for (int i = 0; i + 1 < k; ++i) edges.push_back({i, i + 1});
        return Graph::from_edges(k, std::move(edges));
    }
    throw std::invalid_argument("unknown named graph '" + id + "'");
}

Graph read_graph(std::istream& in) {
    std::string line;
    int lineno = 0;
    auto next_data_line = [&]() -> std::optional<std::string> {
        while (std::getline(in, line)) {
            ++lineno;
            auto first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos) continue;
            if (line[first] == '#') continue;
            return line;
        }
        return std::nullopt;
    };

    auto header = next_data_line();
    if (!header) throw std::runtime_error("graph parse error: missing header line");
    int n = 0, m = 0;
    {
        std::istringstream hs(*header);
        if (!(hs >> n >> m))
            throw std::runtime_error("graph parse error: bad header at line " +
                                     std::to_string(lineno));
    }
    std::vector<Graph::Edge> edges;
    edges.reserve(static_cast<std::size_t>(std::max(m, 0)));
    for (int i = 0; i < m; ++i) {
        auto data = next_data_line();
        if (!data)
            throw std::runtime_error("graph parse error: expected " + std::to_string(m) +
                                     " edges, found " + std::to_string(i));
        std::istringstream es(*data);
        int u = 0, v = 0;
        if (!(es >> u >> v))
            throw std::runtime_error("graph parse error: bad edge at line " +
                                     std::to_string(lineno));
        edges.push_back({u, v});
    }
    return Graph::from_edges(n, std::move(edges));
}

Graph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file '" + path + "'");
    return read_graph(in);
}

void write_graph(const Graph& g, std::ostream& out,
                 const std::vector<std::string>& comments) {
    for (const auto& c : comments) out << "# " << c << "\n";
    out << g.vertex_count() << " " << g.edge_count() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
}

std::optional<int> girth(const Graph& g) {
    const int n = g.vertex_count();
    int best = -1;
    std::vector<int> dist(n), parent(n);
    for (int root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        std::deque<int> queue{root};
        dist[root] = 0;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            // every cycle through root is found at depth <= girth/2
            if (best != -1 && 2 * dist[u] >= best) break;
            for (int w : g.neighbors(u)) {
                if (dist[w] == -1) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if (w != parent[u]) {
                    int len = dist[u] + dist[w] + 1;
                    if (best == -1 || len < best) best = len;
                }
            }
        }
    }
    if (best == -1) return std::nullopt;
    return best;
}

std::optional<Bipartition> bipartition_of(const Graph& g) {
    const int n = g.vertex_count();
    Bipartition bip;
    bip.side.assign(n, -1);
    for (int root = 0; root < n; ++root) {
        if (bip.side[root] != -1) continue;
        bip.side[root] = 0;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int w : g.neighbors(u)) {
                if (bip.side[w] == -1) {
                    bip.side[w] = static_cast<std::int8_t>(1 - bip.side[u]);
                    queue.push_back(w);
                } else if (bip.side[w] == bip.side[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    return bip;
}

bool is_connected(const Graph& g) {
    const int n = g.vertex_count();
    if (n <= 1) return true;
    std::vector<char> seen(n, 0);
    std::deque<int> queue{0};
    seen[0] = 1;
    int count = 1;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int w : g.neighbors(u)) {
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                queue.push_back(w);
            }
        }
    }
    return count == n;
}

std::vector<char> subset_mask(int n, const std::vector<int>& B) {
    std::vector<char> mask(n, 0);
    for (int v : B) {
        if (v < 0 || v >= n) throw std::invalid_argument("subset: vertex out of range");
        mask[v] = 1;
    }
    return mask;
}

int edge_boundary(const Graph& g, const std::vector<char>& in_B) {
    int count = 0;
    for (auto [u, v] : g.edges())
        if (in_B[u] != in_B[v]) ++count;
    return count;
}

int edge_boundary(const Graph& g, const std::vector<int>& B) {
    return edge_boundary(g, subset_mask(g.vertex_count(), B));
}

std::vector<int> neighbor_set(const Graph& g, const std::vector<int>& B) {
    std::vector<char> out(g.vertex_count(), 0);
    for (int v : B) {
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("subset: vertex out of range");
        for (int w : g.neighbors(v)) out[w] = 1;
    }
    std::vector<int> result;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (out[v]) result.push_back(v);
    return result;
}

} // namespace flipmatch
