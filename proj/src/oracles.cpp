#include "flipmatch/oracles.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <functional>
#include <limits>
#include <stdexcept>

namespace flipmatch::oracle {

namespace {

// Hopcroft-Karp over an explicit bipartition.
MaxMatchingResult hopcroft_karp(const Graph& g, const Bipartition& bip) {
    const int n = g.vertex_count();
    std::vector<int> left;
    for (int v = 0; v < n; ++v)
        if (bip.side[v] == 0) left.push_back(v);

    std::vector<int> mate(n, -1);
    std::vector<int> dist(n);
    constexpr int INF = std::numeric_limits<int>::max();

    auto bfs = [&]() {
        std::deque<int> queue;
        for (int u : left) {
            if (mate[u] == -1) {
                dist[u] = 0;
                queue.push_back(u);
            } else {
                dist[u] = INF;
            }
        }
        bool reachable_free = false;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int w : g.neighbors(u)) {
                int next = mate[w];
                if (next == -1) {
                    reachable_free = true;
                } else if (dist[next] == INF) {
                    dist[next] = dist[u] + 1;
                    queue.push_back(next);
                }
            }
        }
        return reachable_free;
    };

    std::function<bool(int)> augment = [&](int u) {
        for (int w : g.neighbors(u)) {
            int next = mate[w];
            if (next == -1 || (dist[next] == dist[u] + 1 && augment(next))) {
                mate[u] = w;
                mate[w] = u;
                return true;
            }
        }
        dist[u] = INF;
        return false;
    };

    int size = 0;
    while (bfs()) {
        for (int u : left)
            if (mate[u] == -1 && augment(u)) ++size;
    }

    MaxMatchingResult result;
    result.size = size;
    result.method = "hopcroft-karp";
    result.witness = Matching(n);
    for (int u : left)
        if (mate[u] != -1) result.witness.match(u, mate[u]);
    return result;
}

MaxMatchingResult matching_branch_and_bound(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 20)
        throw std::invalid_argument(
            "max matching oracle: non-bipartite graphs supported up to n = 20");

    std::vector<int> mate(n, -1), best_mate(n, -1);
    int best = 0;

    std::function<void(int, int)> rec = [&](int from, int size) {
        int v = from;
        while (v < n && mate[v] != -1) ++v;
        if (v == n) {
            if (size > best) {
                best = size;
                best_mate = mate;
            }
            return;
        }
        int avail = 0;
        for (int w = v; w < n; ++w)
            if (mate[w] == -1) ++avail;
        if (size + avail / 2 <= best) return;

        for (int w : g.neighbors(v)) {
            if (mate[w] != -1) continue;
            mate[v] = w;
            mate[w] = v;
            rec(v + 1, size + 1);
            mate[v] = -1;
            mate[w] = -1;
        }
        mate[v] = -2; // leave v unmatched for the rest of this branch
        rec(v + 1, size);
        mate[v] = -1;
    };
    rec(0, 0);

    MaxMatchingResult result;
    result.size = best;
    result.method = "branch-and-bound";
    result.witness = Matching(n);
    for (int v = 0; v < n; ++v)
        if (best_mate[v] >= 0 && v < best_mate[v]) result.witness.match(v, best_mate[v]);
    return result;
}

} // namespace

MaxMatchingResult max_matching(const Graph& g) {
    if (auto bip = bipartition_of(g)) return hopcroft_karp(g, *bip);
    return matching_branch_and_bound(g);
}

MaxIndependentSetResult max_independent_set(const Graph& g, int max_n) {
    const int n = g.vertex_count();
    if (n > max_n || n > 63)
        throw std::invalid_argument("independent set oracle: graph too large (n=" +
                                    std::to_string(n) + ")");

    std::vector<std::uint64_t> nbr(n, 0);
    for (auto [u, v] : g.edges()) {
        nbr[u] |= 1ULL << v;
        nbr[v] |= 1ULL << u;
    }

    // greedy min-degree seed so the bound prunes early
    std::uint64_t greedy_cand = (n == 64) ? ~0ULL : ((1ULL << n) - 1);
    std::uint64_t greedy = 0;
    while (greedy_cand) {
        int pick = -1, pick_deg = n + 1;
        for (std::uint64_t m = greedy_cand; m;) {
            int v = std::countr_zero(m);
            m &= m - 1;
            int deg = std::popcount(nbr[v] & greedy_cand);
            if (deg < pick_deg) {
                pick = v;
                pick_deg = deg;
            }
        }
        greedy |= 1ULL << pick;
        greedy_cand &= ~(nbr[pick] | (1ULL << pick));
    }

    int best = std::popcount(greedy);
    std::uint64_t best_set = greedy;

    std::function<void(std::uint64_t, int, std::uint64_t)> rec =
        [&](std::uint64_t cand, int size, std::uint64_t chosen) {
            while (true) {
                if (cand == 0) {
                    if (size > best) {
                        best = size;
                        best_set = chosen;
                    }
                    return;
                }
                if (size + std::popcount(cand) <= best) return;

                // vertices of degree <= 1 inside the candidate set are always
                // safe to take
                int low = -1, high = -1, high_deg = -1;
                for (std::uint64_t m = cand; m;) {
                    int v = std::countr_zero(m);
                    m &= m - 1;
                    int deg = std::popcount(nbr[v] & cand);
                    if (deg <= 1) {
                        low = v;
                        break;
                    }
                    if (deg > high_deg) {
                        high_deg = deg;
                        high = v;
                    }
                }
                if (low != -1) {
                    chosen |= 1ULL << low;
                    cand &= ~(nbr[low] | (1ULL << low));
                    ++size;
                    continue;
                }
                rec(cand & ~(nbr[high] | (1ULL << high)), size + 1,
                    chosen | (1ULL << high));
                cand &= ~(1ULL << high);
            }
        };
    rec((n == 64) ? ~0ULL : ((1ULL << n) - 1), 0, 0);

    MaxIndependentSetResult result;
    result.size = best;
    result.method = "branch-and-bound";
    for (int v = 0; v < n; ++v)
        if (best_set >> v & 1) result.witness.push_back(v);
    return result;
}

CheegerResult brute_cheeger(const Graph& g, int max_n) {
    const int n = g.vertex_count();
    auto d = g.regular_degree();
    if (!d || *d < 1)
        throw std::invalid_argument("cheeger oracle: graph must be regular with d >= 1");
    if (n < 2) throw std::invalid_argument("cheeger oracle: need n >= 2");
    if (n > max_n || n > 30)
        throw std::invalid_argument("cheeger oracle: graph too large (n=" +
                                    std::to_string(n) + ")");

    // Walk all subsets containing vertex 0 in Gray-code order over vertices
    // 1..n-1, maintaining the edge boundary incrementally. The objective is
    // invariant under complement, so pinning vertex 0 loses nothing.
    std::vector<char> in_B(n, 0);
    in_B[0] = 1;
    long long boundary = g.degree(0);
    int size = 1;

    double best_phi = std::numeric_limits<double>::infinity();
    std::uint32_t best_mask = 1; // bit v set <=> vertex v in B
    long long best_boundary = boundary;
    int best_size = size;
    std::uint32_t mask = 1;

    auto consider = [&]() {
        if (size == n) return;
        double phi = static_cast<double>(boundary) * n /
                     (static_cast<double>(*d) * size * (n - size));
        if (phi < best_phi) {
            best_phi = phi;
            best_mask = mask;
            best_boundary = boundary;
            best_size = size;
        }
    };
    consider();

    const std::uint64_t total = 1ULL << (n - 1);
    for (std::uint64_t code = 1; code < total; ++code) {
        int v = 1 + std::countr_zero(code);
        if (in_B[v]) {
            in_B[v] = 0;
            --size;
            mask &= ~(1u << v);
            for (int w : g.neighbors(v)) boundary += in_B[w] ? 1 : -1;
        } else {
            in_B[v] = 1;
            ++size;
            mask |= 1u << v;
            for (int w : g.neighbors(v)) boundary += in_B[w] ? -1 : 1;
        }
        consider();
    }

    CheegerResult result;
    result.phi = best_phi;
    result.boundary = best_boundary;
    result.subset_size = best_size;
    result.method = "exhaustive-gray";
    for (int v = 0; v < n; ++v)
        if (best_mask >> v & 1) result.witness.push_back(v);
    return result;
}

namespace {

bool has_chain_bipartite(const Graph& g, const Matching& m, int cap) {
    const int n = g.vertex_count();
    // states: (v, 0) = reached after an even number of edges (an unmatched
    // edge goes next), (v, 1) = just crossed an unmatched edge (a matched
    // edge goes next). In a bipartite graph the shortest alternating walk
    // between unmatched vertices is simple, so layered BFS is exact.
    std::vector<int> dist0(n, -1), dist1(n, -1);
    std::deque<int> queue;
    for (int v = 0; v < n; ++v) {
        if (!m.matched(v)) {
            dist0[v] = 0;
            queue.push_back(v << 1);
        }
    }
    while (!queue.empty()) {
        int state = queue.front();
        queue.pop_front();
        int v = state >> 1;
        if ((state & 1) == 0) {
            for (int w : g.neighbors(v)) {
                if (m.mate(v) == w) continue;
                if (!m.matched(w)) return dist0[v] + 1 <= cap;
                if (dist1[w] == -1) {
                    dist1[w] = dist0[v] + 1;
                    if (dist1[w] + 1 <= cap) queue.push_back(w << 1 | 1);
                }
            }
        } else {
            int x = m.mate(v);
            if (dist0[x] == -1) {
                dist0[x] = dist1[v] + 1;
                if (dist0[x] + 1 <= cap) queue.push_back(x << 1);
            }
        }
    }
    return false;
}

bool has_chain_exhaustive(const Graph& g, const Matching& m, int cap) {
    const int n = g.vertex_count();
    std::vector<char> on_path(n, 0);

    std::function<bool(int, int)> extend = [&](int v, int edges) -> bool {
        for (int w : g.neighbors(v)) {
            if (on_path[w] || m.mate(v) == w) continue;
            if (!m.matched(w)) return true;
            int x = m.mate(w);
            if (on_path[x] || edges + 3 > cap) continue;
            on_path[w] = on_path[x] = 1;
            bool found = extend(x, edges + 2);
            on_path[w] = on_path[x] = 0;
            if (found) return true;
        }
        return false;
    };

    for (int u = 0; u < n; ++u) {
        if (m.matched(u)) continue;
        std::fill(on_path.begin(), on_path.end(), 0);
        on_path[u] = 1;
        if (extend(u, 0)) return true;
    }
    return false;
}

} // namespace

bool has_augmenting_chain(const Graph& g, const Matching& m, int length_cap) {
    int cap = length_cap < 0 ? g.vertex_count() : length_cap;
    if (cap < 1) return false;
    if (bipartition_of(g)) return has_chain_bipartite(g, m, cap);
    return has_chain_exhaustive(g, m, cap);
}

MassTransportResult mass_transport_check(const GroupTable& table,
                                         const std::vector<double>& kernel) {
    if (static_cast<int>(kernel.size()) != table.order())
        throw std::invalid_argument("mass transport: kernel must cover every element");
    for (double k : kernel)
        if (k < 0.0) throw std::invalid_argument("mass transport: kernel must be nonnegative");

    const int id = table.identity();
    std::vector<double> sent, received;
    for (int x = 0; x < table.order(); ++x) {
        sent.push_back(kernel[table.mul(table.inverse(id), x)]);
        received.push_back(kernel[table.mul(table.inverse(x), id)]);
    }
    // sorted accumulation: both sums run over the same multiset, so they must
    // agree bitwise
    std::sort(sent.begin(), sent.end());
    std::sort(received.begin(), received.end());
    MassTransportResult result;
    for (double v : sent) result.sent += v;
    for (double v : received) result.received += v;
    result.equal = result.sent == result.received;
    return result;
}

} // namespace flipmatch::oracle
