#pragma once

#include <cstdint>

#include "flipmatch/graph.hpp"

namespace flipmatch {

struct RandomBipartiteResult {
    Graph graph;
    Bipartition bipartition;
    int attempts = 0;
};

/// d-regular simple bipartite graph on side_size + side_size vertices
/// (side 0 = 0..side_size-1, side 1 = side_size..2*side_size-1), generated by
/// superimposing d uniformly random perfect matchings between the sides.
/// An attempt that produces a multi-edge is rejected wholesale and retried.
/// Bit-reproducible for a fixed seed.
RandomBipartiteResult random_regular_bipartite(int side_size, int d, std::uint64_t seed,
                                               int retry_limit = 10000);

} // namespace flipmatch
