#pragma once

#include <optional>
#include <vector>

#include "graphcone/graph.hpp"
#include "graphcone/hilbert.hpp"

namespace graphcone {

// Multidegree (t, s_1..s_r) of a generator or relation of a graded ring.
struct GradedDegree {
    long long t = 1;
    std::vector<long long> s;
};

// Expands Prod(1 - x^rel) / Prod(1 - x^gen) to total degree D by exact
// integer convolution.  Throws when the expansion has a negative coefficient
// (inconsistent presentation).
HilbertTable ci_series(const std::vector<GradedDegree>& gens,
                       const std::vector<GradedDegree>& rels, long long D,
                       const std::vector<std::string>& axes);

// Complete-intersection presentation of a ring: generator degrees plus the
// degrees of a regular sequence cutting it out.
struct CiPresentation {
    std::vector<GradedDegree> gens;
    std::vector<GradedDegree> rels;
    std::vector<std::string> axes; // leaf names, sorted
};

// Built-in presentations for the worked small models (tripod, 4-leaf tree,
// balloon, littleman, hammock, theta, dumbbell), recognized by invariants.
// paper_literal selects the legacy balloon form 1/((1-t)(1-s^2 t^2)), which
// undercounts and is kept only for comparison.
std::optional<CiPresentation> builtin_presentation(const TrivalentGraph& g, bool paper_literal);

} // namespace graphcone
