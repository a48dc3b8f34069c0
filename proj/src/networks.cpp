#include "graphcone/networks.hpp"

#include <algorithm>

namespace graphcone {

bool is_network_support(const TrivalentGraph& g, const std::vector<char>& support) {
    if (static_cast<int>(support.size()) != g.edge_count())
        return false;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (!g.is_inner(v))
            continue;
        int count = 0;
        for (const HalfEdge& he : g.incident(v))
            count += support[he.edge] ? 1 : 0;
        if (count != 0 && count != 2)
            return false;
    }
    return true;
}

std::vector<Network> enumerate_networks(const TrivalentGraph& g) {
    std::vector<Network> out;
    std::vector<char> support(g.edge_count(), 0);

    // Inner vertices become checkable once all their edges are decided.
    std::vector<int> last_edge_at(g.vertex_count(), -1);
    for (int v = 0; v < g.vertex_count(); ++v)
        for (const HalfEdge& he : g.incident(v))
            last_edge_at[v] = std::max(last_edge_at[v], he.edge);

    auto vertex_ok = [&](int v) {
        int count = 0;
        for (const HalfEdge& he : g.incident(v))
            count += support[he.edge] ? 1 : 0;
        return count == 0 || count == 2;
    };

    auto rec = [&](auto&& self, int e) -> void {
        if (e == g.edge_count()) {
            out.push_back(Network{support});
            return;
        }
        for (char val : {0, 1}) {
            support[e] = val;
            bool ok = true;
            for (int v = 0; ok && v < g.vertex_count(); ++v)
                if (g.is_inner(v) && last_edge_at[v] == e && !vertex_ok(v))
                    ok = false;
            if (ok)
                self(self, e + 1);
        }
        support[e] = 0;
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end(),
              [](const Network& a, const Network& b) { return a.support < b.support; });
    return out;
}

ConeElement network_element(const TrivalentGraph& g, const Network& n) {
    ConeElement w = zero_element(g);
    w.degree = 1;
    for (int e = 0; e < g.edge_count(); ++e)
        w.coeffs[e] = n.support[e];
    return w;
}

std::vector<Chain> network_chains(const TrivalentGraph& g, const Network& n) {
    std::vector<Chain> chains;
    std::vector<char> used(g.edge_count(), 0);

    // Successor of a support edge entering vertex v, or -1 at a leaf.
    auto next_edge = [&](int e, int v) {
        if (g.is_leaf(v))
            return -1;
        for (const HalfEdge& he : g.incident(v))
            if (he.edge != e && n.support[he.edge])
                return he.edge;
        return -1; // isolated endpoint cannot happen in a valid network
    };

    for (int start = 0; start < g.edge_count(); ++start) {
        if (!n.support[start] || used[start])
            continue;
        Chain chain;
        if (g.is_loop(start)) {
            chain.cycle = true;
            chain.edges = {start};
            used[start] = 1;
            chains.push_back(std::move(chain));
            continue;
        }
        // Walk both directions from `start` until hitting a leaf or closing up.
        std::vector<int> forward;
        int e = start, v = g.edge(start).ends[1];
        used[start] = 1;
        bool closed = false;
        while (true) {
            int f = next_edge(e, v);
            if (f < 0)
                break;
            if (f == start) {
                closed = true;
                break;
            }
            forward.push_back(f);
            used[f] = 1;
            v = g.other_end(f, v);
            e = f;
        }
        std::vector<int> backward;
        if (!closed) {
            e = start;
            v = g.edge(start).ends[0];
            while (true) {
                int f = next_edge(e, v);
                if (f < 0)
                    break;
                backward.push_back(f);
                used[f] = 1;
                v = g.other_end(f, v);
                e = f;
            }
        }
        chain.cycle = closed;
        chain.edges.assign(backward.rbegin(), backward.rend());
        chain.edges.push_back(start);
        chain.edges.insert(chain.edges.end(), forward.begin(), forward.end());
        chains.push_back(std::move(chain));
    }
    return chains;
}

} // namespace graphcone
