#include "flipmatch/random_graph.hpp"

#include <algorithm>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>

#include "flipmatch/rng.hpp"

namespace flipmatch {

RandomBipartiteResult random_regular_bipartite(int side_size, int d, std::uint64_t seed,
                                               int retry_limit) {
    if (side_size < 1) throw std::invalid_argument("random bipartite: side_size must be >= 1");
    if (d < 1 || d > side_size)
        throw std::invalid_argument("random bipartite: need 1 <= d <= side_size");

    rng::SplitMix64 gen(seed);
    std::vector<std::vector<int>> perms(d, std::vector<int>(side_size));
    std::vector<int> targets(d);

    for (int attempt = 1; attempt <= retry_limit; ++attempt) {
        for (auto& perm : perms) {
            std::iota(perm.begin(), perm.end(), 0);
            rng::shuffle(std::span<int>(perm), gen);
        }
        bool collision = false;
        for (int i = 0; i < side_size && !collision; ++i) {
            for (int k = 0; k < d; ++k) targets[k] = perms[k][i];
            std::sort(targets.begin(), targets.end());
            collision = std::adjacent_find(targets.begin(), targets.end()) != targets.end();
        }
        if (collision) continue;

        std::vector<Graph::Edge> edges;
        edges.reserve(static_cast<std::size_t>(side_size) * d);
        for (int k = 0; k < d; ++k)
            for (int i = 0; i < side_size; ++i)
                edges.push_back({i, side_size + perms[k][i]});

        RandomBipartiteResult result{Graph::from_edges(2 * side_size, std::move(edges)),
                                     Bipartition{}, attempt};
        result.bipartition.side.assign(2 * side_size, 0);
        for (int v = side_size; v < 2 * side_size; ++v) result.bipartition.side[v] = 1;
        return result;
    }
    throw std::runtime_error("random bipartite: no simple instance after " +
                             std::to_string(retry_limit) + " attempts (side_size=" +
                             std::to_string(side_size) + ", d=" + std::to_string(d) +
                             ", seed=" + std::to_string(seed) + ")");
}

} // namespace flipmatch
