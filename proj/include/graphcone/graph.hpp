#pragma once

#include <array>
#include <string>
#include <vector>

#include "graphcone/errors.hpp"

namespace graphcone {

// One end of an edge: `end` is 0 or 1.  A loop at v owns both ends at v.
struct HalfEdge {
    int edge = -1;
    int end = -1;

    friend bool operator==(const HalfEdge&, const HalfEdge&) = default;
    friend auto operator<=>(const HalfEdge&, const HalfEdge&) = default;
};

// An immutable multigraph in which every vertex has valency 1 (leaf) or 3
// (inner vertex).  Loops and parallel edges are allowed; a loop contributes
// 2 to the valency of its vertex.  Edges and vertices are identified by
// stable string names; indices are the rank of the name in sorted order, so
// index order is deterministic and survives a format/parse round trip.
class TrivalentGraph {
public:
    struct Edge {
        std::string name;
        std::array<int, 2> ends; // vertex indices; equal for a loop
    };

    TrivalentGraph() = default;

    // Builds from (edge-name, vertex-name, vertex-name) triples.
    // Throws ParseError on duplicate edge names and DomainError when a vertex
    // has valency other than 1 or 3.  A component consisting of a single bare
    // edge (both ends leaves) is rejected unless allow_degenerate is set.
    static TrivalentGraph build(const std::vector<std::array<std::string, 3>>& edge_specs,
                                bool allow_degenerate = false);

    int edge_count() const { return static_cast<int>(edges_.size()); }
    int vertex_count() const { return static_cast<int>(vertex_names_.size()); }
    bool empty() const { return edges_.empty(); }

    const Edge& edge(int e) const { return edges_[e]; }
    const std::string& edge_name(int e) const { return edges_[e].name; }
    const std::string& vertex_name(int v) const { return vertex_names_[v]; }
    int edge_index(const std::string& name) const;        // -1 when absent
    int vertex_index(const std::string& name) const;      // -1 when absent
    int require_edge(const std::string& name) const;      // throws DomainError

    bool is_loop(int e) const { return edges_[e].ends[0] == edges_[e].ends[1]; }
    const std::vector<HalfEdge>& incident(int v) const { return incidence_[v]; }
    int valency(int v) const { return static_cast<int>(incidence_[v].size()); }
    bool is_leaf(int v) const { return valency(v) == 1; }
    bool is_inner(int v) const { return valency(v) == 3; }
    // A petiole is an edge incident to a leaf.
    bool is_petiole(int e) const;
    // For a leaf vertex, its unique incident edge.
    int petiole_of(int leaf) const;
    int other_end(int e, int v) const;

    std::vector<int> leaves() const;
    std::vector<int> inner_vertices() const;

    int component_of(int v) const { return component_[v]; }
    int component_count() const { return component_count_; }
    bool connected() const { return component_count_ <= 1; }

    // Edge specs of this graph (name, end0, end1), index order.
    std::vector<std::array<std::string, 3>> edge_specs() const;

    // Picks an unused name of the form base, base_2, base_3, ...
    std::string fresh_edge_name(const std::string& base) const;
    std::string fresh_vertex_name(const std::string& base) const;

private:
    std::vector<Edge> edges_;                  // sorted by name
    std::vector<std::string> vertex_names_;   // sorted
    std::vector<std::vector<HalfEdge>> incidence_;
    std::vector<int> component_;
    int component_count_ = 0;
};

struct GraphInvariants {
    long long num_vertices = 0;
    long long num_edges = 0;
    long long num_leaves = 0;
    long long betti = 0;
    long long num_components = 0;
    long long dim_model = 0; // = num_edges

    friend bool operator==(const GraphInvariants&, const GraphInvariants&) = default;
};

enum class CycleTag { cycle_edge, cycle_leg, plain_inner };

// An edge can be a petiole and a cycle leg at the same time (the balloon's
// petiole), so the petiole flag is kept separate from the cycle tag.
struct EdgeClassification {
    bool petiole = false;
    CycleTag tag = CycleTag::plain_inner;
};

TrivalentGraph parse_graph(const std::string& text);
std::string format_graph(const TrivalentGraph& g); // canonical: edges sorted by id

GraphInvariants invariants(const TrivalentGraph& g);
std::vector<EdgeClassification> classify_edges(const TrivalentGraph& g);
std::string edge_class_string(const EdgeClassification& c);

// Surgery.  All operations return new graphs; edge names persist, new edges
// and vertices get fresh derived names.
TrivalentGraph cut_edge(const TrivalentGraph& g, int e);
TrivalentGraph glue_leaves(const TrivalentGraph& g, int leaf1, int leaf2);
TrivalentGraph disjoint_union(const TrivalentGraph& g1, const TrivalentGraph& g2);
TrivalentGraph graft(const TrivalentGraph& g1, int leaf1, const TrivalentGraph& g2, int leaf2);
std::vector<TrivalentGraph> components(const TrivalentGraph& g);

// Names of the two half edges created by cut_edge(g, e).
std::array<std::string, 2> cut_edge_names(const TrivalentGraph& g, int e);

} // namespace graphcone
