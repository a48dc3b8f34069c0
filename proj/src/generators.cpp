#include "graphcone/generators.hpp"

#include <algorithm>

#include "graphcone/errors.hpp"
#include "graphcone/networks.hpp"

namespace graphcone {

namespace {

bool dominates(const ConeElement& big, const ConeElement& small) {
    if (big.degree < small.degree)
        return false;
    for (size_t i = 0; i < big.coeffs.size(); ++i)
        if (big.coeffs[i] < small.coeffs[i])
            return false;
    return true;
}

void sort_generators(std::vector<ConeElement>& gens) {
    std::sort(gens.begin(), gens.end(), [](const ConeElement& a, const ConeElement& b) {
        if (a.degree != b.degree)
            return a.degree < b.degree;
        return a.coeffs < b.coeffs;
    });
}

// Degree-2 points whose unique-cycle profile makes them indecomposable:
// every cycle edge carries 1, an odd number of cycle legs carry 2 and the
// remaining cycle legs carry 0.
std::vector<ConeElement> degree2_generators_g1(const TrivalentGraph& g, const EnumOptions& opts) {
    auto cls = classify_edges(g);
    std::vector<ConeElement> out;
    for (const ConeElement& w : points_of_degree(g, 2, opts)) {
        bool profile = true;
        int two_legs = 0;
        for (int e = 0; e < g.edge_count() && profile; ++e) {
            if (cls[e].tag == CycleTag::cycle_edge) {
                profile = w.coeffs[e] == 1;
            } else if (cls[e].tag == CycleTag::cycle_leg) {
                if (w.coeffs[e] == 2)
                    ++two_legs;
                else if (w.coeffs[e] != 0)
                    profile = false;
            }
        }
        if (profile && two_legs % 2 == 1)
            out.push_back(w);
    }
    return out;
}

} // namespace

GeneratorSet minimal_generators(const TrivalentGraph& g, long long degree_cap,
                                const EnumOptions& opts) {
    if (degree_cap < 2)
        throw DomainError("degree cap must be at least 2");
    GeneratorSet set;
    set.degree_cap = degree_cap;
    GraphInvariants inv = invariants(g);

    if (inv.betti == 0) {
        set.method = GenMethod::tree_degree1;
        for (const Network& n : enumerate_networks(g))
            set.generators.push_back(network_element(g, n));
    } else if (inv.betti == 1) {
        set.method = GenMethod::closed_form_g1;
        for (const Network& n : enumerate_networks(g))
            set.generators.push_back(network_element(g, n));
        auto deg2 = degree2_generators_g1(g, opts);
        set.generators.insert(set.generators.end(), deg2.begin(), deg2.end());
    } else {
        set.method = GenMethod::brute_saturation;
        std::vector<std::vector<ConeElement>> by_degree(degree_cap + 1);
        for (long long d = 1; d <= degree_cap; ++d)
            by_degree[d] = points_of_degree(g, d, opts);
        for (long long d = 1; d <= degree_cap; ++d) {
            for (const ConeElement& w : by_degree[d]) {
                bool splits = false;
                for (long long d1 = 1; !splits && 2 * d1 <= d; ++d1) {
                    for (const ConeElement& part : by_degree[d1]) {
                        if (!dominates(w, part))
                            continue;
                        if (in_cone(g, sub(w, part))) {
                            splits = true;
                            break;
                        }
                    }
                }
                if (!splits) {
                    set.generators.push_back(w);
                    if (d == degree_cap)
                        set.truncation_warning = true;
                }
            }
        }
    }
    sort_generators(set.generators);
    return set;
}

bool verify_relation(const TrivalentGraph& g, const std::vector<ConeElement>& lhs,
                     const std::vector<ConeElement>& rhs) {
    ConeElement left = zero_element(g);
    ConeElement right = zero_element(g);
    for (const ConeElement& w : lhs) {
        if (static_cast<int>(w.coeffs.size()) != g.edge_count())
            throw DomainError("relation element does not match the graph's edge set");
        left = add(left, w);
    }
    for (const ConeElement& w : rhs) {
        if (static_cast<int>(w.coeffs.size()) != g.edge_count())
            throw DomainError("relation element does not match the graph's edge set");
        right = add(right, w);
    }
    return left == right;
}

} // namespace graphcone
