#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "graphcone/cone.hpp"
#include "graphcone/enumerate.hpp"
#include "graphcone/graph.hpp"

namespace graphcone {

struct Decomposition {
    std::vector<ConeElement> parts; // sorted by (degree, coefficients)
};

// Writes a cone element as a sum of minimal generators of degree <= 2
// (degree 1 only on trees).  Supports first Betti number <= 1; graphs with
// more cycles have no closed peeling rule here.
Decomposition decompose(const TrivalentGraph& g, const ConeElement& w,
                        const EnumOptions& opts = {});

// On a polygon graph, splits a degree-2 cone element into two networks, or
// returns nullopt when it is a minimal generator (all cycle edges 1, odd
// number of cycle legs equal to 2).
std::optional<std::pair<ConeElement, ConeElement>> split_degree2(const TrivalentGraph& g,
                                                                 const ConeElement& w);

// Greedy peel of a tree element into degree-1 networks.
std::vector<ConeElement> decompose_tree(const TrivalentGraph& g, const ConeElement& w);

// The unique cycle of a betti-1 graph in walk order: vertices[i] joins
// edges[i-1] and edges[i]; legs[i] is the non-cycle edge at vertices[i].
struct CycleStructure {
    std::vector<int> vertices;
    std::vector<int> edges;
    std::vector<int> legs;
};
CycleStructure cycle_structure(const TrivalentGraph& g);

} // namespace graphcone
