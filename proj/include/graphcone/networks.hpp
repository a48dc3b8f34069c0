#pragma once

#include <vector>

#include "graphcone/cone.hpp"
#include "graphcone/graph.hpp"

namespace graphcone {

// A 0/1 edge labeling whose support is a disjoint union of leaf-to-leaf
// paths and cycles (the empty labeling counts).  Exactly the degree-1 points
// of the cone.
struct Network {
    std::vector<char> support; // by edge index

    friend bool operator==(const Network&, const Network&) = default;
};

bool is_network_support(const TrivalentGraph& g, const std::vector<char>& support);

// All networks, in lexicographic order of the 0/1 vector (edge-id order);
// the empty network comes first.
std::vector<Network> enumerate_networks(const TrivalentGraph& g);

ConeElement network_element(const TrivalentGraph& g, const Network& n);

// Maximal chains of the support, each a list of edge indices; loops and
// cycles close up, paths run leaf to leaf.
struct Chain {
    bool cycle = false;
    std::vector<int> edges;
};
std::vector<Chain> network_chains(const TrivalentGraph& g, const Network& n);

} // namespace graphcone
