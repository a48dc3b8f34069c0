#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "graphcone/cone.hpp"
#include "graphcone/enumerate.hpp"
#include "graphcone/graph.hpp"

namespace graphcone {

// Exact lattice-point counts indexed by (total degree, per-leaf petiole
// coefficients on the named axes), truncated at degree D.  Absent keys are 0;
// zero counts are never stored.
struct HilbertTable {
    long long D = 0;
    std::vector<std::string> axes;
    std::map<std::pair<long long, std::vector<long long>>, long long> counts;

    long long at(long long m, const std::vector<long long>& k) const {
        auto it = counts.find({m, k});
        return it == counts.end() ? 0 : it->second;
    }
    void bump(long long m, std::vector<long long> k, long long c) {
        if (c != 0)
            counts[{m, std::move(k)}] += c;
    }

    friend bool operator==(const HilbertTable&, const HilbertTable&) = default;
};

// Exact counts by exhaustive cone-point enumeration.
HilbertTable hilbert_brute(const TrivalentGraph& g, long long D,
                           const std::vector<std::string>& leaf_axes,
                           const EnumOptions& opts = {});

// H(m; k1,k2,k3) = 1 iff k1+k2+k3 is even, the triangle inequalities hold
// and (k1+k2+k3)/2 <= m.
HilbertTable tripod_table(long long D, const std::array<std::string, 3>& axes);

// Building blocks for caterpillar composition: a bare pendant edge (equal
// values on its slot and graft axes) and a loop with pendant edge.
HilbertTable leaf_unit_table(long long D, const std::string& slot_axis,
                             const std::string& graft_axis);
HilbertTable balloon_unit_table(long long D, const std::string& graft_axis);

// Grafting along l1 of t1 and l2 of t2: convolve both with a fresh tripod
// whose third leg becomes new_axis.
HilbertTable hilbert_graft(const HilbertTable& t1, const std::string& l1, const HilbertTable& t2,
                           const std::string& l2, const std::string& new_axis);

// Gluing two leaf axes: sum over the diagonal, both axes disappear.
HilbertTable hilbert_glue(const HilbertTable& t, const std::string& l1, const std::string& l2);

// Sums out all axes not in `keep` and reorders to `keep`.
HilbertTable marginalize(const HilbertTable& t, const std::vector<std::string>& keep);

// Table via the mutation normal form: graft leaf/balloon units along the
// caterpillar spine, with one glue when the graph has no leaves.  Axis names
// are leaves of g (mutations preserve leaf vertices).
HilbertTable hilbert_compose(const TrivalentGraph& g, long long D,
                             const std::vector<std::string>& leaf_axes,
                             const EnumOptions& opts = {});

struct MutationInvarianceReport {
    bool equal = false;
    std::string report; // first discrepancy or the invariant mismatch
};

// Entrywise comparison of the brute tables of g1 and g2 up to D, with leaf
// axes paired through the normal-form correspondence.
MutationInvarianceReport verify_mutation_invariance(const TrivalentGraph& g1,
                                                    const TrivalentGraph& g2, long long D,
                                                    const std::vector<std::string>& axes1,
                                                    const std::vector<std::string>& axes2,
                                                    const EnumOptions& opts = {});

} // namespace graphcone
