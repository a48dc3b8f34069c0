#include "graphcone/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace graphcone {

namespace {

// Per-vertex signature: (valency, loop count, sorted neighbour valencies).
struct Signature {
    int valency = 0;
    int loops = 0;
    std::vector<int> neighbour_valencies;

    friend bool operator==(const Signature&, const Signature&) = default;
    friend auto operator<=>(const Signature&, const Signature&) = default;
};

Signature signature(const TrivalentGraph& g, int v) {
    Signature s;
    s.valency = g.valency(v);
    for (const HalfEdge& he : g.incident(v)) {
        if (g.is_loop(he.edge)) {
            ++s.loops; // counted once per half edge; a loop yields 2
            continue;
        }
        s.neighbour_valencies.push_back(g.valency(g.other_end(he.edge, v)));
    }
    std::sort(s.neighbour_valencies.begin(), s.neighbour_valencies.end());
    return s;
}

int multiplicity(const TrivalentGraph& g, int u, int v) {
    int count = 0;
    for (const HalfEdge& he : g.incident(u))
        if (g.edge(he.edge).ends[1 - he.end] == v && (u != v || he.end == 0))
            ++count;
    return count;
}

struct Matcher {
    const TrivalentGraph& g1;
    const TrivalentGraph& g2;
    std::vector<Signature> sig1, sig2;
    std::vector<int> order;   // g1 vertices, most-connected-first
    std::vector<int> map12;   // g1 -> g2 or -1
    std::vector<char> used2;

    bool extend(size_t pos) {
        if (pos == order.size())
            return true;
        int v = order[pos];
        for (int w = 0; w < g2.vertex_count(); ++w) {
            if (used2[w] || !(sig1[v] == sig2[w]))
                continue;
            bool ok = multiplicity(g1, v, v) == multiplicity(g2, w, w);
            for (size_t j = 0; ok && j < pos; ++j) {
                int u = order[j];
                if (multiplicity(g1, v, u) != multiplicity(g2, w, map12[u]))
                    ok = false;
            }
            if (!ok)
                continue;
            map12[v] = w;
            used2[w] = 1;
            if (extend(pos + 1))
                return true;
            map12[v] = -1;
            used2[w] = 0;
        }
        return false;
    }
};

} // namespace

IsoResult is_isomorphic(const TrivalentGraph& g1, const TrivalentGraph& g2, int vertex_bound) {
    if (g1.vertex_count() > vertex_bound || g2.vertex_count() > vertex_bound)
        throw DomainError("isomorphism test size bound of " + std::to_string(vertex_bound) +
                          " vertices exceeded");
    IsoResult res;
    if (g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count())
        return res;

    Matcher m{g1, g2, {}, {}, {}, {}, {}};
    std::multiset<Signature> sigs2;
    for (int v = 0; v < g1.vertex_count(); ++v)
        m.sig1.push_back(signature(g1, v));
    for (int v = 0; v < g2.vertex_count(); ++v) {
        m.sig2.push_back(signature(g2, v));
        sigs2.insert(m.sig2.back());
    }
    {
        std::multiset<Signature> sigs1(m.sig1.begin(), m.sig1.end());
        if (sigs1 != sigs2)
            return res;
    }

    // Order vertices so each one (after the first of a component) touches an
    // already-placed vertex; that keeps the multiplicity pruning effective.
    std::vector<char> placed(g1.vertex_count(), 0);
    for (int seed = 0; seed < g1.vertex_count(); ++seed) {
        if (placed[seed])
            continue;
        std::vector<int> queue{seed};
        placed[seed] = 1;
        for (size_t i = 0; i < queue.size(); ++i) {
            int v = queue[i];
            m.order.push_back(v);
            for (const HalfEdge& he : g1.incident(v)) {
                int w = g1.other_end(he.edge, v);
                if (!placed[w]) {
                    placed[w] = 1;
                    queue.push_back(w);
                }
            }
        }
    }

    m.map12.assign(g1.vertex_count(), -1);
    m.used2.assign(g2.vertex_count(), 0);
    if (!m.extend(0))
        return res;
    res.isomorphic = true;
    res.vertex_map = m.map12;
    return res;
}

} // namespace graphcone
