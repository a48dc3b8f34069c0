#pragma once

#include <string>
#include <vector>

#include "graphcone/graph.hpp"

namespace graphcone {

// A point of the graded lattice Z (+) ZE: an explicit degree plus one integer
// per edge, indexed like the graph's edges.  Two elements are equal iff the
// degree and all coefficients agree.
struct ConeElement {
    long long degree = 0;
    std::vector<long long> coeffs;

    friend bool operator==(const ConeElement&, const ConeElement&) = default;
    friend auto operator<=>(const ConeElement&, const ConeElement&) = default;
};

ConeElement zero_element(const TrivalentGraph& g);
ConeElement add(const ConeElement& a, const ConeElement& b);
ConeElement sub(const ConeElement& a, const ConeElement& b);
ConeElement scale(long long k, const ConeElement& a);
bool is_zero(const ConeElement& a);

// Exact half-integer, kept as twice the value.
struct HalfInt {
    long long twice = 0;
    bool integral() const { return twice % 2 == 0; }
    long long whole() const { return twice / 2; }

    friend bool operator==(const HalfInt&, const HalfInt&) = default;
};

// The three coefficients around an inner vertex (incidence order; a loop
// contributes the same edge twice) and the local path counts solving
// a = y+z, b = x+z, c = x+y.
struct LocalTriple {
    long long a = 0, b = 0, c = 0;
    long long x = 0, y = 0, z = 0;
};

struct ConeCheck {
    bool ok = true;
    std::string report; // names the violated condition when !ok
};

// Degree at an inner vertex: half the sum of incident coefficients, loops
// counted twice.
HalfInt deg_v(const TrivalentGraph& g, const ConeElement& w, int vertex);
// Max of deg_v over inner vertices (0 when there are none).
long long deg_min(const TrivalentGraph& g, const ConeElement& w);

bool in_lattice(const TrivalentGraph& g, const ConeElement& w);
ConeCheck in_cone_check(const TrivalentGraph& g, const ConeElement& w);
bool in_cone(const TrivalentGraph& g, const ConeElement& w);

LocalTriple local_paths(const TrivalentGraph& g, const ConeElement& w, int vertex);

// Cutting edge e embeds the cone of g into the cone of cut_edge(g, e): the
// coefficient of e is duplicated onto both new half edges.
struct LiftResult {
    TrivalentGraph graph;
    ConeElement element;
};
LiftResult lift_cut(const TrivalentGraph& g, const ConeElement& w, int e);

// For a non-cycle internal edge e the cut graph splits in two; project gives
// both restrictions (degree preserved on each factor).
struct ProjectResult {
    TrivalentGraph part1, part2;   // part1 contains e#1
    ConeElement elt1, elt2;
};
ProjectResult project(const TrivalentGraph& g, const ConeElement& w, int e);

// Text form `deg=<m>;<edge-id>=<int>,...`; omitted edges mean 0.
ConeElement parse_element(const TrivalentGraph& g, const std::string& text);
std::string format_element(const TrivalentGraph& g, const ConeElement& w);

// Restriction of w to a subgraph whose edges (matched by name) all occur in g.
ConeElement restrict_element(const TrivalentGraph& g, const ConeElement& w,
                             const TrivalentGraph& sub);

} // namespace graphcone
