#include "graphcone/series.hpp"

#include <algorithm>
#include <map>

#include "graphcone/errors.hpp"

namespace graphcone {

namespace {

using Level = std::map<std::vector<long long>, long long>; // k-vector -> coeff

void validate_degree(const GradedDegree& d, size_t arity, const char* kind) {
    if (d.t < 1)
        throw DomainError(std::string(kind) + " degree must have t >= 1");
    if (d.s.size() != arity)
        throw DomainError(std::string(kind) + " degree has wrong leaf-vector length");
    for (long long v : d.s)
        if (v < 0)
            throw DomainError(std::string(kind) + " degree has a negative leaf weight");
}

} // namespace

HilbertTable ci_series(const std::vector<GradedDegree>& gens,
                       const std::vector<GradedDegree>& rels, long long D,
                       const std::vector<std::string>& axes) {
    for (const GradedDegree& d : gens)
        validate_degree(d, axes.size(), "generator");
    for (const GradedDegree& d : rels)
        validate_degree(d, axes.size(), "relation");

    std::vector<Level> levels(D + 1);
    levels[0][std::vector<long long>(axes.size(), 0)] = 1;

    // Multiply by 1/(1 - x^gen): prefix recurrence level by level.
    for (const GradedDegree& gen : gens) {
        for (long long m = gen.t; m <= D; ++m) {
            for (const auto& [k, c] : levels[m - gen.t]) {
                std::vector<long long> shifted = k;
                for (size_t i = 0; i < shifted.size(); ++i)
                    shifted[i] += gen.s[i];
                levels[m][std::move(shifted)] += c;
            }
        }
    }
    // Multiply by (1 - x^rel).
    for (const GradedDegree& rel : rels) {
        for (long long m = D; m >= rel.t; --m) {
            for (const auto& [k, c] : levels[m - rel.t]) {
                std::vector<long long> shifted = k;
                for (size_t i = 0; i < shifted.size(); ++i)
                    shifted[i] += rel.s[i];
                levels[m][std::move(shifted)] -= c;
            }
        }
    }

    HilbertTable t;
    t.D = D;
    t.axes = axes;
    for (long long m = 0; m <= D; ++m) {
        for (const auto& [k, c] : levels[m]) {
            if (c < 0)
                throw DomainError("series expansion has a negative coefficient; "
                                  "the presentation is inconsistent");
            t.bump(m, k, c);
        }
    }
    return t;
}

std::optional<CiPresentation> builtin_presentation(const TrivalentGraph& g, bool paper_literal) {
    GraphInvariants inv = invariants(g);
    int loops = 0;
    for (int e = 0; e < g.edge_count(); ++e)
        loops += g.is_loop(e) ? 1 : 0;

    CiPresentation p;
    for (int v : g.leaves())
        p.axes.push_back(g.vertex_name(v));

    auto key = std::tuple{inv.num_leaves, inv.betti, inv.num_components, inv.num_edges,
                          static_cast<long long>(loops)};

    if (key == std::tuple{3LL, 0LL, 1LL, 3LL, 0LL}) {
        // Tripod = P^3: the four even 0/1 leaf patterns, no relations.
        p.gens = {{1, {0, 0, 0}}, {1, {1, 1, 0}}, {1, {1, 0, 1}}, {1, {0, 1, 1}}};
        return p;
    }
    if (key == std::tuple{4LL, 0LL, 1LL, 5LL, 0LL}) {
        // 4-leaf tree: eight even patterns cut by two quadrics.
        for (int bits = 0; bits < 16; ++bits) {
            if (__builtin_popcount(static_cast<unsigned>(bits)) % 2 != 0)
                continue;
            p.gens.push_back({1,
                              {(bits >> 3) & 1, (bits >> 2) & 1, (bits >> 1) & 1, bits & 1}});
        }
        p.rels = {{2, {1, 1, 1, 1}}, {2, {1, 1, 1, 1}}};
        return p;
    }
    if (key == std::tuple{1LL, 1LL, 1LL, 2LL, 1LL}) {
        // Balloon = P(1,1,2).  The legacy closed form drops one degree-1
        // generator and undercounts from total degree 2 on.
        if (paper_literal)
            p.gens = {{1, {0}}, {2, {2}}};
        else
            p.gens = {{1, {0}}, {1, {0}}, {2, {2}}};
        return p;
    }
    if (key == std::tuple{2LL, 1LL, 1LL, 4LL, 1LL}) {
        // One loop, two leaves: quadric + quartic in P(1^4, 2^3).
        p.gens = {{1, {0, 0}}, {1, {0, 0}}, {1, {1, 1}}, {1, {1, 1}},
                  {2, {1, 1}}, {2, {2, 0}}, {2, {0, 2}}};
        p.rels = {{2, {1, 1}}, {4, {2, 2}}};
        return p;
    }
    if (key == std::tuple{2LL, 1LL, 1LL, 4LL, 0LL}) {
        // Two parallel edges, two leaves: quartic hypersurface in P(1^4, 2^2).
        p.gens = {{1, {0, 0}}, {1, {0, 0}}, {1, {1, 1}}, {1, {1, 1}}, {2, {2, 0}}, {2, {0, 2}}};
        p.rels = {{4, {2, 2}}};
        return p;
    }
    if (key == std::tuple{0LL, 2LL, 1LL, 3LL, 2LL}) {
        // Two loops and a bar: quadric in P(1^4, 2).
        p.gens = {{1, {}}, {1, {}}, {1, {}}, {1, {}}, {2, {}}};
        p.rels = {{2, {}}};
        return p;
    }
    if (key == std::tuple{0LL, 2LL, 1LL, 3LL, 0LL}) {
        // Three parallel edges = P^3.
        p.gens = {{1, {}}, {1, {}}, {1, {}}, {1, {}}};
        return p;
    }
    return std::nullopt;
}

} // namespace graphcone
