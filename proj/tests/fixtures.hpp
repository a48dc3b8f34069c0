#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "graphcone/graph.hpp"
#include "graphcone/mutation.hpp"

namespace graphcone::testing {

inline TrivalentGraph fixture(const std::string& name) {
    std::ifstream in(std::string(GRAPHCONE_FIXTURE_DIR) + "/" + name + ".graph");
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

inline std::string fixture_path(const std::string& name) {
    return std::string(GRAPHCONE_FIXTURE_DIR) + "/" + name + ".graph";
}

// A single bare edge; not parseable, but a legal value for surgery tests.
inline TrivalentGraph bare_edge(const std::string& e = "e", const std::string& a = "a",
                                const std::string& b = "b") {
    return TrivalentGraph::build({{e, a, b}}, true);
}

// Random connected trivalent graph: a random tree grown by edge subdivision,
// then `betti` random leaf gluings.  Deterministic for a fixed seed.
inline TrivalentGraph random_trivalent(std::mt19937& rng, int extra_leaves, int betti) {
    TrivalentGraph g = parse_graph("edge e1 c a\nedge e2 c b\nedge e3 c d\n");
    for (int i = 0; i < extra_leaves; ++i) {
        int e = std::uniform_int_distribution<int>(0, g.edge_count() - 1)(rng);
        std::string mid = g.fresh_vertex_name("m");
        std::string leaf = g.fresh_vertex_name("x");
        auto specs = g.edge_specs();
        // Subdivide edge e and hang a new leaf at the middle vertex.
        std::string far = specs[e][2];
        specs[e][2] = mid;
        specs.push_back({g.fresh_edge_name("t"), mid, far});
        specs.push_back({g.fresh_edge_name("u"), mid, leaf});
        g = TrivalentGraph::build(specs);
    }
    for (int i = 0; i < betti; ++i) {
        auto leaves = g.leaves();
        if (leaves.size() < 2)
            break;
        int a = std::uniform_int_distribution<int>(0, static_cast<int>(leaves.size()) - 1)(rng);
        int b = std::uniform_int_distribution<int>(0, static_cast<int>(leaves.size()) - 2)(rng);
        if (b >= a)
            ++b;
        g = glue_leaves(g, leaves[a], leaves[b]);
    }
    return g;
}

} // namespace graphcone::testing

namespace graphcone::testing {

// Polygon graph: a k-cycle with one pendant leg per cycle vertex.
inline TrivalentGraph polygon_graph(int k) {
    std::vector<std::array<std::string, 3>> specs;
    for (int i = 1; i <= k; ++i) {
        std::string vi = "v" + std::to_string(i);
        std::string vn = "v" + std::to_string(i % k + 1);
        if (k == 1)
            specs.push_back({"c1", vi, vi});
        else
            specs.push_back({"c" + std::to_string(i), vi, vn});
        specs.push_back({"g" + std::to_string(i), vi, "x" + std::to_string(i)});
    }
    return TrivalentGraph::build(specs);
}

} // namespace graphcone::testing
