#include "graphcone/decompose.hpp"

#include <algorithm>
#include <map>

#include "graphcone/errors.hpp"
#include "graphcone/networks.hpp"

namespace graphcone {

namespace {

bool dominates(const ConeElement& big, const Network& n) {
    for (size_t i = 0; i < big.coeffs.size(); ++i)
        if (big.coeffs[i] < n.support[i])
            return false;
    return true;
}

void sort_parts(std::vector<ConeElement>& parts) {
    std::sort(parts.begin(), parts.end(), [](const ConeElement& a, const ConeElement& b) {
        if (a.degree != b.degree)
            return a.degree < b.degree;
        return a.coeffs < b.coeffs;
    });
}

} // namespace

std::vector<ConeElement> decompose_tree(const TrivalentGraph& g, const ConeElement& w) {
    std::vector<Network> networks = enumerate_networks(g);
    std::vector<ConeElement> parts;
    ConeElement rest = w;
    while (rest.degree > 0) {
        bool peeled = false;
        for (const Network& n : networks) {
            if (!dominates(rest, n))
                continue;
            ConeElement candidate = sub(rest, network_element(g, n));
            if (in_cone(g, candidate)) {
                parts.push_back(network_element(g, n));
                rest = std::move(candidate);
                peeled = true;
                break;
            }
        }
        if (!peeled)
            throw DomainError("internal error: tree element does not peel into networks");
    }
    if (!is_zero(rest))
        throw DomainError("internal error: tree peel left a remainder");
    return parts;
}

CycleStructure cycle_structure(const TrivalentGraph& g) {
    auto cls = classify_edges(g);
    std::vector<int> cycle_edges;
    for (int e = 0; e < g.edge_count(); ++e)
        if (cls[e].tag == CycleTag::cycle_edge)
            cycle_edges.push_back(e);
    if (cycle_edges.empty())
        throw DomainError("graph has no cycle");

    CycleStructure cs;
    int start = cycle_edges[0];
    if (g.is_loop(start)) {
        if (cycle_edges.size() != 1)
            throw DomainError("graph has more than one cycle");
        int v = g.edge(start).ends[0];
        cs.vertices = {v};
        cs.edges = {start};
    } else {
        int v0 = std::min(g.edge(start).ends[0], g.edge(start).ends[1]);
        int v = g.other_end(start, v0);
        cs.vertices = {v0};
        cs.edges = {start};
        int prev = start;
        while (v != v0) {
            cs.vertices.push_back(v);
            int next = -1;
            for (const HalfEdge& he : g.incident(v))
                if (he.edge != prev && cls[he.edge].tag == CycleTag::cycle_edge)
                    next = he.edge;
            if (next < 0)
                throw DomainError("internal error: cycle walk broke off");
            cs.edges.push_back(next);
            prev = next;
            v = g.other_end(next, v);
        }
        if (cs.edges.size() != cycle_edges.size())
            throw DomainError("graph has more than one cycle");
    }
    for (int v : cs.vertices) {
        int leg = -1;
        for (const HalfEdge& he : g.incident(v))
            if (cls[he.edge].tag != CycleTag::cycle_edge)
                leg = he.edge;
        if (leg < 0)
            throw DomainError("internal error: cycle vertex without leg");
        cs.legs.push_back(leg);
    }
    return cs;
}

namespace {

// Degree-1 arc element: leg(from) + cycle edges walked forward + leg(to).
ConeElement arc_element(const TrivalentGraph& g, const CycleStructure& cs, int from, int to) {
    int k = static_cast<int>(cs.edges.size());
    ConeElement w = zero_element(g);
    w.degree = 1;
    w.coeffs[cs.legs[from]] += 1;
    for (int i = from; i != to; i = (i + 1) % k)
        w.coeffs[cs.edges[i]] += 1;
    w.coeffs[cs.legs[to]] += 1;
    return w;
}

ConeElement cycle_element(const TrivalentGraph& g, const CycleStructure& cs) {
    ConeElement w = zero_element(g);
    w.degree = 1;
    for (int e : cs.edges)
        w.coeffs[e] = 1;
    return w;
}

bool is_polygon(const TrivalentGraph& g, const CycleStructure& cs) {
    if (!g.connected() || invariants(g).betti != 1)
        return false;
    // Beyond the cycle, only one petiole per cycle vertex.
    return g.edge_count() == 2 * static_cast<int>(cs.edges.size()) &&
           std::all_of(cs.legs.begin(), cs.legs.end(),
                       [&](int leg) { return g.is_petiole(leg); });
}

} // namespace

std::optional<std::pair<ConeElement, ConeElement>> split_degree2(const TrivalentGraph& g,
                                                                 const ConeElement& w) {
    if (w.degree != 2)
        throw DomainError("split_degree2 needs a degree-2 element");
    ConeCheck check = in_cone_check(g, w);
    if (!check.ok)
        throw DomainError("element not in cone: " + check.report);
    CycleStructure cs = cycle_structure(g);
    if (!is_polygon(g, cs))
        throw DomainError("split_degree2 needs a polygon graph");
    const int k = static_cast<int>(cs.edges.size());

    long long lo = w.coeffs[cs.edges[0]], hi = lo;
    for (int e : cs.edges) {
        lo = std::min(lo, w.coeffs[e]);
        hi = std::max(hi, w.coeffs[e]);
    }

    auto finish = [&](ConeElement a, ConeElement b) {
        if (!(add(a, b) == w) || !in_cone(g, a) || !in_cone(g, b))
            throw DomainError("internal error: degree-2 split is inconsistent");
        return std::optional{std::pair{std::move(a), std::move(b)}};
    };

    // A zero cycle edge: cut it and peel the resulting tree element.
    if (lo == 0) {
        int e = -1;
        for (int c : cs.edges)
            if (w.coeffs[c] == 0)
                e = c;
        LiftResult lifted = lift_cut(g, w, e);
        auto parts = decompose_tree(lifted.graph, lifted.element);
        std::array<ConeElement, 2> back{zero_element(g), zero_element(g)};
        for (int i : {0, 1}) {
            back[i].degree = 1;
            for (int f = 0; f < g.edge_count(); ++f)
                if (f != e)
                    back[i].coeffs[f] = parts[i].coeffs[lifted.graph.require_edge(g.edge_name(f))];
        }
        return finish(back[0], back[1]);
    }

    // All cycle edges 2: twice the cycle.
    if (lo == 2)
        return finish(cycle_element(g, cs), cycle_element(g, cs));

    // Nonzero legs in cycle order, with their values.
    std::vector<int> leg_pos;
    for (int i = 0; i < k; ++i)
        if (w.coeffs[cs.legs[i]] != 0)
            leg_pos.push_back(i);
    const int p = static_cast<int>(leg_pos.size());

    if (hi == 1) {
        // All cycle edges 1; nonzero legs all carry 2 (parity).  Splittable
        // iff their number is even.
        if (p % 2 == 1)
            return std::nullopt;
        if (p == 0) {
            ConeElement empty = zero_element(g);
            empty.degree = 1;
            return finish(cycle_element(g, cs), empty);
        }
        ConeElement a = zero_element(g), b = zero_element(g);
        a.degree = b.degree = 1;
        for (int t = 0; t < p; ++t) {
            ConeElement arc = arc_element(g, cs, leg_pos[t], leg_pos[(t + 1) % p]);
            (t % 2 == 0 ? a : b) = add(t % 2 == 0 ? a : b, arc);
            (t % 2 == 0 ? a : b).degree = 1;
        }
        return finish(a, b);
    }

    // Mixed cycle values 1 and 2.  Legs with value 2 ("two-legs") have both
    // neighbouring cycle edges equal to 1; one-legs flip the value.
    std::vector<int> two_idx; // positions into leg_pos
    for (int t = 0; t < p; ++t)
        if (w.coeffs[cs.legs[leg_pos[t]]] == 2)
            two_idx.push_back(t);
    const int q = static_cast<int>(two_idx.size());

    // Cycle value on the segment between consecutive nonzero legs t, t+1.
    auto segment_value = [&](int t) {
        int from = leg_pos[t];
        return w.coeffs[cs.edges[from]]; // first edge after the leg's vertex
    };

    ConeElement a = zero_element(g), b = zero_element(g);
    a.degree = b.degree = 1;
    auto put = [&](ConeElement& side, int from_t, int to_t) {
        side = add(side, arc_element(g, cs, leg_pos[from_t % p], leg_pos[to_t % p]));
        side.degree = 1;
    };

    if (q == 0) {
        // Only one-legs: the full cycle plus arcs over the 2-segments.
        a = cycle_element(g, cs);
        int start = -1;
        for (int t = 0; t < p; ++t)
            if (segment_value(t) == 2 && segment_value((t + p - 1) % p) == 1)
                start = start < 0 ? t : start;
        if (start < 0)
            throw DomainError("internal error: no 2-segment among one-legs");
        for (int t = 0; t < p; t += 2)
            put(b, start + t, start + t + 1);
        return finish(a, b);
    }

    // Rotate so that the gap before the first two-leg holds one-legs when q
    // is odd (some gap does, since both cycle values occur).
    int rot = 0;
    if (q % 2 == 1) {
        while (true) {
            int prev = two_idx[(rot + q - 1) % q];
            int here = two_idx[rot];
            int gap = (here - prev + p - 1) % p + 1; // wraps fully when q == 1
            if (gap > 1)
                break;
            ++rot;
            if (rot == q)
                throw DomainError("internal error: odd two-legs but no one-leg gap");
        }
    }
    // Unwrapped two-leg positions: u[0] < u[1] < ... < u[q] = u[0] + p.
    std::vector<int> u(q + 1);
    u[0] = two_idx[rot % q];
    for (int j = 1; j < q; ++j) {
        u[j] = two_idx[(rot + j) % q];
        while (u[j] <= u[j - 1])
            u[j] += p;
    }
    u[q] = u[0] + p;

    // Big arcs between consecutive two-legs alternate sides; the one-leg
    // pairs inside a gap go to the other side.
    auto pair_gap = [&](ConeElement& side, int from, int to) {
        for (int t = from + 1; t + 1 < to; t += 2)
            put(side, t, t + 1);
    };
    int regular_gaps = q % 2 == 0 ? q : q - 1;
    for (int j = 0; j < regular_gaps; ++j) {
        put(j % 2 == 0 ? a : b, u[j], u[j + 1]);
        pair_gap(j % 2 == 0 ? b : a, u[j], u[j + 1]);
    }
    if (q % 2 == 1) {
        // Final gap: the last two one-legs stand in for the missing two-leg.
        put(a, u[q - 1], u[q] - 1); // two-leg .. last one-leg
        put(b, u[q] - 2, u[q]);     // second-last one-leg .. two-leg
        for (int t = u[q - 1] + 1; t + 1 < u[q] - 2; t += 2)
            put(b, t, t + 1);
    }
    return finish(a, b);
}

namespace {

struct DegreeTwoBuilder {
    const TrivalentGraph& g;
    const CycleStructure& cs;
    const ConeElement& w;

    // Local path counts at cycle vertex i, oriented along the walk:
    // z pairs the two cycle edges, x pairs the forward edge with the leg,
    // y pairs the backward edge with the leg.
    struct Local {
        long long x = 0, y = 0, z = 0;
    };

    Local local_at(int i) const {
        int k = static_cast<int>(cs.edges.size());
        long long back = w.coeffs[cs.edges[(i + k - 1) % k]];
        long long fwd = w.coeffs[cs.edges[i]];
        long long leg = w.coeffs[cs.legs[i]];
        if (cs.edges.size() == 1)
            back = fwd = w.coeffs[cs.edges[0]]; // loop counts on both sides
        Local l;
        l.x = (-back + fwd + leg) / 2;
        l.y = (back - fwd + leg) / 2;
        l.z = (back + fwd - leg) / 2;
        return l;
    }

    // mu locals: 0 = pass through (z=1), 1 = leg two (x=y=1), plus run
    // patterns for degree-deficient stretches.
    ConeElement build() const {
        const int k = static_cast<int>(cs.edges.size());
        for (int e : cs.edges)
            if (w.coeffs[e] < 1)
                throw DomainError("internal error: zero cycle edge in generator peel");

        std::vector<Local> mu(k, Local{0, 0, 1});
        std::vector<Local> loc(k);
        std::vector<char> deficient(k, 0);
        for (int i = 0; i < k; ++i)
            loc[i] = local_at(i);
        for (int i = 0; i < k; ++i)
            if (loc[i].z == 0)
                mu[i] = Local{1, 1, 0}; // triangle fix, leg gets 2
        for (int i = 0; i < k; ++i) {
            bool attained = loc[i].x + loc[i].y + loc[i].z == w.degree;
            if (!attained || mu[i].z == 0)
                continue;
            if (loc[i].x > 0 && loc[i].y > 0)
                mu[i] = Local{1, 1, 0};
            else
                deficient[i] = 1;
        }
        // Runs of adjacent deficient vertices: ends contribute one leg each,
        // interior vertices carry the doubled cycle edges.
        for (int i = 0; i < k; ++i) {
            if (!deficient[i] || (deficient[(i + k - 1) % k] && k > 1))
                continue;
            int len = 1;
            while (deficient[(i + len) % k] && len < k)
                ++len;
            int last = (i + len - 1) % k;
            if (len == k)
                throw DomainError("internal error: fully deficient cycle in generator peel");
            mu[i] = Local{1, 0, 1};
            mu[last] = Local{0, 1, 1};
            if (len == 1)
                mu[i] = Local{1, 1, 0}; // single vertex: both fixes coincide
            for (int j = 1; j + 1 < len; ++j)
                mu[(i + j) % k] = Local{0, 0, 2};
        }

        ConeElement out = zero_element(g);
        out.degree = 2;
        for (int i = 0; i < k; ++i) {
            // Forward cycle edge value is x+z seen from i and y+z from i+1;
            // both equal mu consistency by construction.
            out.coeffs[cs.edges[i]] = mu[i].x + mu[i].z;
            out.coeffs[cs.legs[i]] = mu[i].x + mu[i].y;
        }
        if (k == 1)
            out.coeffs[cs.edges[0]] = mu[0].z == 0 ? 1 : mu[0].z; // loop: a=b
        return out;
    }
};

} // namespace

Decomposition decompose(const TrivalentGraph& g, const ConeElement& w, const EnumOptions&) {
    ConeCheck check = in_cone_check(g, w);
    if (!check.ok)
        throw DomainError("element not in cone: " + check.report);
    GraphInvariants inv = invariants(g);
    if (inv.betti > 1)
        throw DomainError("decompose supports first Betti number <= 1 (got " +
                          std::to_string(inv.betti) + "); use brute saturation splitting");

    std::vector<Network> networks = enumerate_networks(g);
    std::vector<int> attained; // scratch
    Decomposition out;
    ConeElement rest = w;

    while (rest.degree > 0) {
        attained.clear();
        for (int v = 0; v < g.vertex_count(); ++v)
            if (g.is_inner(v) && deg_v(g, rest, v).twice == 2 * rest.degree)
                attained.push_back(v);
        bool peeled = false;
        for (const Network& n : networks) {
            if (!dominates(rest, n))
                continue;
            bool covers = true;
            for (int v : attained) {
                int count = 0;
                for (const HalfEdge& he : g.incident(v))
                    count += n.support[he.edge] ? 1 : 0;
                if (count == 0) {
                    covers = false;
                    break;
                }
            }
            if (!covers)
                continue;
            ConeElement candidate = sub(rest, network_element(g, n));
            if (in_cone(g, candidate)) {
                out.parts.push_back(network_element(g, n));
                rest = std::move(candidate);
                peeled = true;
                break;
            }
        }
        if (peeled)
            continue;

        // No network peels off: the element needs a degree-2 generator.
        CycleStructure cs = cycle_structure(g);
        ConeElement mu = DegreeTwoBuilder{g, cs, rest}.build();
        // Extend through the pendant trees: two networks of each pendant
        // decomposition whose values on the cut leg sum to mu's leg value.
        for (size_t i = 0; i < cs.legs.size(); ++i) {
            int leg = cs.legs[i];
            if (g.is_petiole(leg))
                continue;
            long long target = mu.coeffs[leg];
            auto names = cut_edge_names(g, leg);
            ProjectResult proj = project(g, rest, leg);
            const bool pendant_is_2 = proj.part1.edge_index(names[1]) < 0;
            const TrivalentGraph& tree = pendant_is_2 ? proj.part2 : proj.part1;
            const ConeElement& elt = pendant_is_2 ? proj.elt2 : proj.elt1;
            const std::string cut_name = pendant_is_2 ? names[1] : names[0];
            int cut_edge_idx = tree.require_edge(cut_name);

            auto pieces = decompose_tree(tree, elt);
            int first = -1, second = -1;
            for (long long want : {target > 0 ? 1LL : 0LL, target > 1 ? 1LL : 0LL}) {
                for (int j = 0; j < static_cast<int>(pieces.size()); ++j) {
                    if (j == first)
                        continue;
                    if (pieces[j].coeffs[cut_edge_idx] == want) {
                        (first < 0 ? first : second) = j;
                        break;
                    }
                }
                if (second >= 0)
                    break;
                if (first < 0)
                    throw DomainError("internal error: pendant completion infeasible");
            }
            if (second < 0)
                throw DomainError("internal error: pendant completion infeasible");
            ConeElement piece = add(pieces[first], pieces[second]);
            for (int f = 0; f < tree.edge_count(); ++f) {
                if (f == cut_edge_idx)
                    continue;
                mu.coeffs[g.require_edge(tree.edge_name(f))] = piece.coeffs[f];
            }
        }
        // Components away from the cycle contribute a degree-2 tree element
        // of their own (any two networks of their peel).
        if (!g.connected()) {
            for (const TrivalentGraph& comp : components(g)) {
                if (comp.edge_index(g.edge_name(cs.edges[0])) >= 0)
                    continue;
                ConeElement part = restrict_element(g, rest, comp);
                auto pieces = decompose_tree(comp, part);
                ConeElement piece = add(pieces.at(0), pieces.at(1));
                for (int f = 0; f < comp.edge_count(); ++f)
                    mu.coeffs[g.require_edge(comp.edge_name(f))] = piece.coeffs[f];
            }
        }
        ConeElement remainder = sub(rest, mu);
        if (!in_cone(g, mu) || !in_cone(g, remainder))
            throw DomainError("internal error: degree-2 peel is not a valid split");
        out.parts.push_back(std::move(mu));
        rest = std::move(remainder);
    }
    sort_parts(out.parts);
    return out;
}

} // namespace graphcone
