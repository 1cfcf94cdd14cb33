#include "flipmatch/matching.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "flipmatch/rng.hpp"

namespace flipmatch {

std::vector<int> Matching::unmatched_vertices() const {
    std::vector<int> out;
    for (int v = 0; v < vertex_count(); ++v)
        if (mate_[v] == -1) out.push_back(v);
    return out;
}

void Matching::match(int u, int v) {
    if (u == v) throw std::invalid_argument("matching: cannot match a vertex to itself");
    if (mate_.at(u) != -1 || mate_.at(v) != -1)
        throw std::invalid_argument("matching: vertex already matched");
    mate_[u] = v;
    mate_[v] = u;
    ++pairs_;
}

void Matching::unmatch(int u, int v) {
    if (mate_.at(u) != v || mate_.at(v) != u)
        throw std::invalid_argument("matching: vertices are not mates");
    mate_[u] = -1;
    mate_[v] = -1;
    --pairs_;
}

bool is_valid_matching(const Graph& g, const Matching& m) {
    if (m.vertex_count() != g.vertex_count()) return false;
    for (int v = 0; v < g.vertex_count(); ++v) {
        int w = m.mate(v);
        if (w == -1) continue;
        if (m.mate(w) != v) return false;
        if (!g.has_edge(v, w)) return false;
    }
    return true;
}

bool is_augmenting_chain(const Graph& g, const Matching& m, const Chain& c) {
    const auto& vs = c.vertices;
    const int len = c.length();
    if (len < 1 || len % 2 == 0) return false;
    if (m.matched(vs.front()) || m.matched(vs.back())) return false;
    std::vector<char> seen(g.vertex_count(), 0);
    for (int v : vs) {
        if (v < 0 || v >= g.vertex_count() || seen[v]) return false;
        seen[v] = 1;
    }
    for (int i = 0; i < len; ++i) {
        if (!g.has_edge(vs[i], vs[i + 1])) return false;
        const bool in_matching = m.mate(vs[i]) == vs[i + 1];
        if (in_matching != (i % 2 == 1)) return false;
    }
    return true;
}

double RandomTape::peek(int v) const {
    return rng::to_unit(rng::keyed_hash(seed_, static_cast<std::uint64_t>(v),
                                        counter_.at(v)));
}

std::uint64_t composition_hash(std::span<const double> values) {
    if (values.empty()) throw std::invalid_argument("composition: empty list");
    std::uint64_t h = 0x243f6a8885a308d3ULL; // fixed key
    for (double x : values)
        h = rng::mix64(h ^ std::bit_cast<std::uint64_t>(x));
    return h;
}

double composition(std::span<const double> values) {
    return rng::to_unit(composition_hash(values));
}

std::vector<Chain> enumerate_chains(const Graph& g, const Matching& m, int max_length) {
    if (max_length < 1 || max_length % 2 == 0)
        throw std::invalid_argument("enumerate chains: max_length must be odd and >= 1");

    std::vector<Chain> chains;
    std::vector<int> path;
    std::vector<char> on_path(g.vertex_count(), 0);

    // Grow simple alternating paths from the unmatched root. The path always
    // ends at even edge count here; the next edge must be unmatched. Matched
    // continuations are forced (through the mate), so branching happens only
    // on unmatched edges.
    auto extend = [&](auto&& self) -> void {
        const int v = path.back();
        const int edges_so_far = static_cast<int>(path.size()) - 1;
        for (int w : g.neighbors(v)) {
            if (on_path[w] || m.mate(v) == w) continue;
            if (!m.matched(w)) {
                if (w > path.front()) { // canonical orientation, each chain once
                    Chain c;
                    c.vertices = path;
                    c.vertices.push_back(w);
                    chains.push_back(std::move(c));
                }
                continue;
            }
            const int x = m.mate(w);
            if (on_path[x] || edges_so_far + 3 > max_length) continue;
            path.push_back(w);
            path.push_back(x);
            on_path[w] = on_path[x] = 1;
            self(self);
            on_path[w] = on_path[x] = 0;
            path.pop_back();
            path.pop_back();
        }
    };

    for (int u = 0; u < g.vertex_count(); ++u) {
        if (m.matched(u)) continue;
        path.assign(1, u);
        std::fill(on_path.begin(), on_path.end(), 0);
        on_path[u] = 1;
        extend(extend);
    }

    std::sort(chains.begin(), chains.end(),
              [](const Chain& a, const Chain& b) { return a.vertices < b.vertices; });
    return chains;
}

Matching flip(const Graph& g, const Matching& m, const Chain& c) {
    if (!is_augmenting_chain(g, m, c))
        throw std::invalid_argument("flip: not an augmenting chain for this matching");
    Matching out = m;
    const auto& vs = c.vertices;
    for (int i = 1; i + 1 < static_cast<int>(vs.size()); i += 2)
        out.unmatch(vs[i], vs[i + 1]);
    for (int i = 0; i + 1 < static_cast<int>(vs.size()); i += 2)
        out.match(vs[i], vs[i + 1]);
    return out;
}

StepResult step(const Graph& g, Matching& m, int max_length, RandomTape& tape) {
    StepResult result;
    std::vector<Chain> chains = enumerate_chains(g, m, max_length);
    result.candidate_count = static_cast<int>(chains.size());
    if (chains.empty()) return result;

    // Shared reading: intersecting chains evaluated in the same step see the
    // same value at a common vertex.
    std::vector<double> values;
    std::vector<double> comp(chains.size());
    for (std::size_t i = 0; i < chains.size(); ++i) {
        values.clear();
        for (int v : chains[i].vertices) values.push_back(tape.peek(v));
        comp[i] = composition(values);
    }

    // The chain list is sorted by vertex sequence, so (composition, index) is
    // the total order used for dominance; index breaks exact ties.
    auto less = [&](int a, int b) {
        if (comp[a] != comp[b]) return comp[a] < comp[b];
        return a < b;
    };
    std::vector<int> best_at(g.vertex_count(), -1);
    std::vector<char> touched(g.vertex_count(), 0);
    for (std::size_t i = 0; i < chains.size(); ++i) {
        for (int v : chains[i].vertices) {
            touched[v] = 1;
            if (best_at[v] == -1 || less(best_at[v], static_cast<int>(i)))
                best_at[v] = static_cast<int>(i);
        }
    }

    std::vector<char> was_matched(g.vertex_count(), 0);
    for (int v = 0; v < g.vertex_count(); ++v) was_matched[v] = m.matched(v);

    std::vector<char> flipped_vertex(g.vertex_count(), 0);
    for (std::size_t i = 0; i < chains.size(); ++i) {
        bool dominant = true;
        for (int v : chains[i].vertices)
            if (best_at[v] != static_cast<int>(i)) { dominant = false; break; }
        if (!dominant) continue;
        for (int v : chains[i].vertices) {
            if (flipped_vertex[v])
                throw std::logic_error("step: flipped chains are not vertex-disjoint");
            flipped_vertex[v] = 1;
        }
        m = flip(g, m, chains[i]);
        result.flipped.push_back(chains[i]);
    }
    if (result.flipped.empty())
        throw std::logic_error("step: no chain flipped despite candidates");

    for (int v = 0; v < g.vertex_count(); ++v) {
        if (was_matched[v] && !m.matched(v))
            throw std::logic_error("step: a matched vertex became unmatched");
        if (touched[v]) tape.advance(v);
    }
    return result;
}

StageStats run_stage(const Graph& g, Matching& m, int stage, RandomTape& tape,
                     RunStats& stats) {
    if (stage < 1) throw std::invalid_argument("run stage: stage must be >= 1");
    const int max_length = 2 * stage - 1;
    StageStats s;
    s.stage = stage;
    while (true) {
        StepResult r = step(g, m, max_length, tape);
        if (r.candidate_count == 0) break;
        ++s.steps;
        s.flips += static_cast<int>(r.flipped.size());
        for (const Chain& c : r.flipped) {
            stats.sent_mass_total += 2.0 * static_cast<double>(c.vertices.size());
            for (int i = 0; i + 1 < static_cast<int>(c.vertices.size()); ++i) {
                int e = g.edge_index(c.vertices[i], c.vertices[i + 1]);
                ++stats.edge_status_changes.at(e);
                ++stats.edge_status_changes_total;
            }
        }
    }
    stats.total_flips += s.flips;
    s.unmatched_fraction =
        static_cast<double>(m.unmatched_count()) / g.vertex_count();
    return s;
}

RunResult run(const Graph& g, std::uint64_t seed) {
    if (!bipartition_of(g))
        throw std::invalid_argument(
            "run: graph is not bipartite; the chain-flipping construction needs "
            "bipartiteness");
    const int n = g.vertex_count();

    RunResult result;
    result.matching = Matching(n);
    result.stats.seed = seed;
    result.stats.edge_status_changes.assign(g.edge_count(), 0);
    if (n == 0) {
        result.stats.perfect = true;
        return result;
    }
    if (auto d = g.regular_degree(); !d || *d < 1)
        result.stats.warnings.push_back(
            "graph is not regular with degree >= 1; run ends at a maximum "
            "matching, which may not be perfect");

    RandomTape tape(seed, n);
    double prev_unmatched = 1.0;
    for (int stage = 1;; ++stage) {
        StageStats s = run_stage(g, result.matching, stage, tape, result.stats);
        if (s.unmatched_fraction > prev_unmatched + 1e-12)
            throw std::logic_error("run: unmatched fraction increased across stages");
        prev_unmatched = s.unmatched_fraction;
        result.stats.stages.push_back(s);
        if (result.matching.is_perfect()) {
            result.stats.perfect = true;
            break;
        }
        // a simple path has at most n-1 edges, so once 2*stage-1 covers that,
        // the matching is maximum
        if (2 * stage - 1 >= n - 1) break;
    }
    if (2 * result.stats.total_flips > n)
        throw std::logic_error("run: more than n/2 flips");
    return result;
}

std::vector<std::vector<int>> alternating_sets(const Graph& g, const Matching& m,
                                               int depth) {
    if (depth < 0) throw std::invalid_argument("alternating sets: negative depth");
    std::vector<std::vector<int>> sets;
    sets.reserve(depth + 1);
    sets.push_back(m.unmatched_vertices());
    for (int k = 0; k < depth; ++k) {
        if (k % 2 == 0) {
            sets.push_back(neighbor_set(g, sets[k]));
        } else {
            std::vector<int> next;
            for (int x : sets[k])
                if (m.matched(x)) next.push_back(m.mate(x));
            std::sort(next.begin(), next.end());
            sets.push_back(std::move(next));
        }
    }
    return sets;
}

AlternatingSetsCheck check_alternating_sets(const Graph& g, const Matching& m,
                                            int stage) {
    if (stage < 1) throw std::invalid_argument("alternating check: stage must be >= 1");
    auto sets = alternating_sets(g, m, stage);
    AlternatingSetsCheck check;

    std::vector<char> mask(g.vertex_count());
    for (int k = 0; k < stage; k += 2) {
        std::fill(mask.begin(), mask.end(), 0);
        for (int v : sets[k]) mask[v] = 1;
        for (auto [u, v] : g.edges())
            if (mask[u] && mask[v]) check.even_levels_independent = false;
    }
    for (int k = 1; k < stage; k += 2)
        if (sets[k + 1].size() != sets[k].size()) check.odd_step_sizes_equal = false;
    for (int k = 1; k < stage; ++k)
        for (int v : sets[k])
            if (!m.matched(v)) check.no_unmatched_past_level0 = false;
    return check;
}

double decay_rate(double rho) { return 2.0 / (1.0 + rho * rho); }

double decay_bound(int stage, double rho) {
    return std::pow(decay_rate(rho), -((stage + 1) / 2));
}

DecayReport decay_report(const RunStats& stats, int n_vertices, double rho,
                         double eps_base) {
    DecayReport report;
    report.rho = rho;
    report.rate = decay_rate(rho);
    for (const StageStats& s : stats.stages) {
        DecayRow row;
        row.stage = s.stage;
        row.observed = s.unmatched_fraction;
        row.bound = decay_bound(s.stage, rho);
        row.threshold = row.bound + 3.0 * std::sqrt(row.bound / n_vertices) + eps_base;
        row.soft_pass = row.observed <= row.threshold;
        report.all_soft_pass = report.all_soft_pass && row.soft_pass;
        report.rows.push_back(row);
        report.sent_mass_schedule +=
            2.0 * s.stage * decay_bound(s.stage - 1, rho);
    }
    report.sent_mass_per_vertex = stats.sent_mass_total / n_vertices;
    return report;
}

std::vector<double> edge_to_vertex_uniforms(const Graph& g,
                                            const std::vector<double>& edge_values) {
    if (static_cast<int>(edge_values.size()) != g.edge_count())
        throw std::invalid_argument("edge factor: need one value per edge");
    std::vector<double> xi(g.vertex_count(), 0.0);
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edges()[e];
        xi[u] += edge_values[e];
        xi[v] += edge_values[e];
    }
    for (double& x : xi) x -= std::floor(x);
    return xi;
}

} // namespace flipmatch
