#pragma once

#include <vector>

#include "graphcone/cone.hpp"
#include "graphcone/enumerate.hpp"
#include "graphcone/graph.hpp"

namespace graphcone {

enum class GenMethod { tree_degree1, closed_form_g1, brute_saturation };

struct GeneratorSet {
    std::vector<ConeElement> generators; // sorted by (degree, coefficients)
    GenMethod method = GenMethod::brute_saturation;
    long long degree_cap = 0;
    // Set when generators were found at the cap itself, so higher degrees
    // might hold more.
    bool truncation_warning = false;
};

// Minimal Z-generators of the cone.  Trees use the networks (degree 1 only);
// first Betti number one uses the closed form (networks plus the degree-2
// points whose cycle edges are all 1 with an odd number of cycle legs equal
// to 2); everything else falls back to brute saturation up to degree_cap.
GeneratorSet minimal_generators(const TrivalentGraph& g, long long degree_cap = 4,
                                const EnumOptions& opts = {});

// The semigroup identity behind a binomial of the toric ideal: componentwise
// sums of both sides agree (degree included).
bool verify_relation(const TrivalentGraph& g, const std::vector<ConeElement>& lhs,
                     const std::vector<ConeElement>& rhs);

} // namespace graphcone
