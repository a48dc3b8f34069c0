#pragma once

#include <string>
#include <vector>

#include "graphcone/graph.hpp"

namespace graphcone {

// A mutation along an internal non-loop edge.  The two variants select the
// two alternative pairings of the four half edges adjacent to the edge's
// neighborhood; see mutate() for the numbering convention.
struct MutationStep {
    std::string edge;
    int variant = 1; // 1 or 2

    friend bool operator==(const MutationStep&, const MutationStep&) = default;
};

// Replaces the 4-leaf-tree neighborhood of the edge by one of the two
// alternative trees.  The four adjacent half edges ("stubs"), sorted globally
// by (edge-id, end), are s0 < s1 < s2 < s3; the variants are the two pairings
// other than the current one, ordered by the index of s0's new partner.
// Leaves map to leaves and (n, g, comp) are preserved.
TrivalentGraph mutate(const TrivalentGraph& g, const MutationStep& step);

TrivalentGraph replay(const TrivalentGraph& g, const std::vector<MutationStep>& steps);

struct NormalFormResult {
    TrivalentGraph graph; // the input with all steps applied
    std::vector<MutationStep> steps;
};

// Mutates g to the caterpillar-with-loops normal form: first every cycle is
// shortened to a loop, then the underlying tree is caterpillarized, then
// loops are moved to the leading slots.  Disconnected inputs are normalized
// per component unless strict is set.
NormalFormResult caterpillar_normal_form(const TrivalentGraph& g, bool strict = false);

// The abstract normal form for given leaf count and first Betti number: a
// caterpillar tree with n+g slots, loops on the g leading ones.
TrivalentGraph canonical_caterpillar(int num_leaves, int betti);

} // namespace graphcone
