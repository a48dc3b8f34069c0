#pragma once

#include <vector>

#include "graphcone/graph.hpp"

namespace graphcone {

struct IsoResult {
    bool isomorphic = false;
    std::vector<int> vertex_map; // g1 vertex index -> g2 vertex index
};

// Exact isomorphism test by backtracking over valency-respecting vertex
// bijections; loop counts and edge multiplicities are respected.  Throws
// DomainError when either graph exceeds the vertex bound.
IsoResult is_isomorphic(const TrivalentGraph& g1, const TrivalentGraph& g2,
                        int vertex_bound = 16);

} // namespace graphcone
