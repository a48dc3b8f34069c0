#pragma once

#include <vector>

#include "graphcone/cone.hpp"
#include "graphcone/graph.hpp"

namespace graphcone {

struct EnumOptions {
    long long budget = 0; // 0 = use default_budget()
    int threads = 1;
};

// Enumeration budget in visited search nodes; GRAPHCONE_BUDGET overrides the
// default of 1e8.
long long default_budget();

// All cone points of the given degree, found by exhaustive search over the
// box [0, m]^E with parity/triangle pruning at each completed inner vertex.
// Output is sorted lexicographically by the coefficient vector (edge-id
// order), so it is deterministic regardless of thread count.
std::vector<ConeElement> points_of_degree(const TrivalentGraph& g, long long m,
                                          const EnumOptions& opts = {});

} // namespace graphcone
