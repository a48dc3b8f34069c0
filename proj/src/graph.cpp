#include "graphcone/graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace graphcone {

TrivalentGraph TrivalentGraph::build(const std::vector<std::array<std::string, 3>>& edge_specs,
                                     bool allow_degenerate) {
    TrivalentGraph g;

    std::set<std::string> edge_names;
    std::set<std::string> vertex_names;
    for (const auto& spec : edge_specs) {
        if (!edge_names.insert(spec[0]).second)
            throw ParseError("duplicate edge id '" + spec[0] + "'");
        vertex_names.insert(spec[1]);
        vertex_names.insert(spec[2]);
    }
    g.vertex_names_.assign(vertex_names.begin(), vertex_names.end());

    std::map<std::string, int> vertex_rank;
    for (int v = 0; v < static_cast<int>(g.vertex_names_.size()); ++v)
        vertex_rank[g.vertex_names_[v]] = v;

    g.edges_.reserve(edge_specs.size());
    for (const auto& spec : edge_specs)
        g.edges_.push_back(Edge{spec[0], {vertex_rank[spec[1]], vertex_rank[spec[2]]}});
    std::sort(g.edges_.begin(), g.edges_.end(),
              [](const Edge& a, const Edge& b) { return a.name < b.name; });

    g.incidence_.resize(g.vertex_names_.size());
    for (int e = 0; e < g.edge_count(); ++e) {
        g.incidence_[g.edges_[e].ends[0]].push_back(HalfEdge{e, 0});
        g.incidence_[g.edges_[e].ends[1]].push_back(HalfEdge{e, 1});
    }
    for (auto& inc : g.incidence_)
        std::sort(inc.begin(), inc.end());

    for (int v = 0; v < g.vertex_count(); ++v) {
        int val = g.valency(v);
        if (val != 1 && val != 3)
            throw DomainError("vertex '" + g.vertex_names_[v] + "' has valency " +
                              std::to_string(val) + " (every vertex must have valency 1 or 3)");
    }
    if (!allow_degenerate) {
        for (int e = 0; e < g.edge_count(); ++e)
            if (g.is_leaf(g.edges_[e].ends[0]) && g.is_leaf(g.edges_[e].ends[1]))
                throw DomainError("edge '" + g.edges_[e].name +
                                  "' joins two leaves; the graph is non-trivalent "
                                  "(no inner vertex in its component)");
    }

    // Component labels by union over edges.
    g.component_.assign(g.vertex_count(), -1);
    g.component_count_ = 0;
    for (int start = 0; start < g.vertex_count(); ++start) {
        if (g.component_[start] >= 0)
            continue;
        int c = g.component_count_++;
        std::vector<int> stack{start};
        g.component_[start] = c;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (const HalfEdge& he : g.incidence_[v]) {
                int w = g.edges_[he.edge].ends[1 - he.end];
                if (g.component_[w] < 0) {
                    g.component_[w] = c;
                    stack.push_back(w);
                }
            }
        }
    }
    return g;
}

int TrivalentGraph::edge_index(const std::string& name) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), name,
                               [](const Edge& e, const std::string& n) { return e.name < n; });
    if (it == edges_.end() || it->name != name)
        return -1;
    return static_cast<int>(it - edges_.begin());
}

int TrivalentGraph::require_edge(const std::string& name) const {
    int e = edge_index(name);
    if (e < 0)
        throw DomainError("unknown edge '" + name + "'");
    return e;
}

int TrivalentGraph::vertex_index(const std::string& name) const {
    auto it = std::lower_bound(vertex_names_.begin(), vertex_names_.end(), name);
    if (it == vertex_names_.end() || *it != name)
        return -1;
    return static_cast<int>(it - vertex_names_.begin());
}

bool TrivalentGraph::is_petiole(int e) const {
    return is_leaf(edges_[e].ends[0]) || is_leaf(edges_[e].ends[1]);
}

int TrivalentGraph::petiole_of(int leaf) const {
    return incidence_[leaf].at(0).edge;
}

int TrivalentGraph::other_end(int e, int v) const {
    const auto& ends = edges_[e].ends;
    return ends[0] == v ? ends[1] : ends[0];
}

std::vector<int> TrivalentGraph::leaves() const {
    std::vector<int> out;
    for (int v = 0; v < vertex_count(); ++v)
        if (is_leaf(v))
            out.push_back(v);
    return out;
}

std::vector<int> TrivalentGraph::inner_vertices() const {
    std::vector<int> out;
    for (int v = 0; v < vertex_count(); ++v)
        if (is_inner(v))
            out.push_back(v);
    return out;
}

std::vector<std::array<std::string, 3>> TrivalentGraph::edge_specs() const {
    std::vector<std::array<std::string, 3>> specs;
    specs.reserve(edges_.size());
    for (const Edge& e : edges_)
        specs.push_back({e.name, vertex_names_[e.ends[0]], vertex_names_[e.ends[1]]});
    return specs;
}

namespace {

std::string fresh_name(const std::string& base, const auto& is_taken) {
    if (!is_taken(base))
        return base;
    for (int k = 2;; ++k) {
        std::string candidate = base + "_" + std::to_string(k);
        if (!is_taken(candidate))
            return candidate;
    }
}

} // namespace

std::string TrivalentGraph::fresh_edge_name(const std::string& base) const {
    return fresh_name(base, [&](const std::string& n) { return edge_index(n) >= 0; });
}

std::string TrivalentGraph::fresh_vertex_name(const std::string& base) const {
    return fresh_name(base, [&](const std::string& n) { return vertex_index(n) >= 0; });
}

TrivalentGraph parse_graph(const std::string& text) {
    std::vector<std::array<std::string, 3>> specs;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string keyword;
        if (!(ls >> keyword) || keyword[0] == '#')
            continue;
        if (keyword != "edge")
            throw ParseError("line " + std::to_string(lineno) + ": expected 'edge' or '#', got '" +
                             keyword + "'");
        std::string id, v1, v2, extra;
        if (!(ls >> id >> v1 >> v2))
            throw ParseError("line " + std::to_string(lineno) +
                             ": expected 'edge <id> <vertex> <vertex>'");
        if (ls >> extra)
            throw ParseError("line " + std::to_string(lineno) + ": trailing token '" + extra + "'");
        specs.push_back({id, v1, v2});
    }
    try {
        return TrivalentGraph::build(specs);
    } catch (const ParseError& err) {
        throw ParseError(std::string(err.what()) + " in graph file");
    }
}

std::string format_graph(const TrivalentGraph& g) {
    std::ostringstream out;
    for (int e = 0; e < g.edge_count(); ++e) {
        std::string a = g.vertex_name(g.edge(e).ends[0]);
        std::string b = g.vertex_name(g.edge(e).ends[1]);
        if (b < a)
            std::swap(a, b);
        out << "edge " << g.edge_name(e) << ' ' << a << ' ' << b << '\n';
    }
    return out.str();
}

GraphInvariants invariants(const TrivalentGraph& g) {
    GraphInvariants inv;
    inv.num_vertices = g.vertex_count();
    inv.num_edges = g.edge_count();
    inv.num_leaves = static_cast<long long>(g.leaves().size());
    inv.num_components = g.component_count();
    inv.betti = inv.num_edges - inv.num_vertices + inv.num_components;
    inv.dim_model = inv.num_edges;
    return inv;
}

namespace {

// Are the two end vertices of e still connected when e is removed?
bool still_connected_without(const TrivalentGraph& g, int e) {
    int from = g.edge(e).ends[0];
    int to = g.edge(e).ends[1];
    if (from == to)
        return true; // loop
    std::vector<char> seen(g.vertex_count(), 0);
    std::vector<int> stack{from};
    seen[from] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        if (v == to)
            return true;
        for (const HalfEdge& he : g.incident(v)) {
            if (he.edge == e)
                continue;
            int w = g.edge(he.edge).ends[1 - he.end];
            if (!seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
        }
    }
    return false;
}

} // namespace

std::vector<EdgeClassification> classify_edges(const TrivalentGraph& g) {
    std::vector<EdgeClassification> out(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) {
        out[e].petiole = g.is_petiole(e);
        if (!out[e].petiole && still_connected_without(g, e))
            out[e].tag = CycleTag::cycle_edge;
    }
    for (int e = 0; e < g.edge_count(); ++e) {
        if (out[e].tag == CycleTag::cycle_edge)
            continue;
        for (int end : {0, 1}) {
            int v = g.edge(e).ends[end];
            for (const HalfEdge& he : g.incident(v))
                if (he.edge != e && out[he.edge].tag == CycleTag::cycle_edge)
                    out[e].tag = CycleTag::cycle_leg;
        }
    }
    return out;
}

std::string edge_class_string(const EdgeClassification& c) {
    std::string tag = c.tag == CycleTag::cycle_edge  ? "cycle_edge"
                      : c.tag == CycleTag::cycle_leg ? "cycle_leg"
                                                     : "plain_inner";
    if (!c.petiole)
        return tag;
    return c.tag == CycleTag::plain_inner ? "petiole" : "petiole+" + tag;
}

std::array<std::string, 2> cut_edge_names(const TrivalentGraph& g, int e) {
    const std::string& base = g.edge_name(e);
    return {g.fresh_edge_name(base + "#1"), g.fresh_edge_name(base + "#2")};
}

TrivalentGraph cut_edge(const TrivalentGraph& g, int e) {
    if (e < 0 || e >= g.edge_count())
        throw DomainError("unknown edge");
    if (g.is_petiole(e))
        throw DomainError("cannot cut petiole '" + g.edge_name(e) + "'");
    auto names = cut_edge_names(g, e);
    std::string leaf1 = g.fresh_vertex_name(g.edge_name(e) + "#l1");
    std::string leaf2 = g.fresh_vertex_name(g.edge_name(e) + "#l2");

    std::vector<std::array<std::string, 3>> specs;
    for (int f = 0; f < g.edge_count(); ++f) {
        if (f == e)
            continue;
        specs.push_back({g.edge_name(f), g.vertex_name(g.edge(f).ends[0]),
                         g.vertex_name(g.edge(f).ends[1])});
    }
    specs.push_back({names[0], g.vertex_name(g.edge(e).ends[0]), leaf1});
    specs.push_back({names[1], g.vertex_name(g.edge(e).ends[1]), leaf2});
    return TrivalentGraph::build(specs);
}

TrivalentGraph glue_leaves(const TrivalentGraph& g, int leaf1, int leaf2) {
    if (leaf1 == leaf2)
        throw DomainError("cannot glue a leaf to itself");
    if (!g.is_leaf(leaf1) || !g.is_leaf(leaf2))
        throw DomainError("glue_leaves arguments must be leaves");
    int p1 = g.petiole_of(leaf1);
    int p2 = g.petiole_of(leaf2);
    if (p1 == p2)
        throw DomainError("cannot glue the two ends of a single edge");
    std::string merged = g.fresh_edge_name(g.edge_name(p1) + "~" + g.edge_name(p2));

    std::vector<std::array<std::string, 3>> specs;
    for (int f = 0; f < g.edge_count(); ++f) {
        if (f == p1 || f == p2)
            continue;
        specs.push_back({g.edge_name(f), g.vertex_name(g.edge(f).ends[0]),
                         g.vertex_name(g.edge(f).ends[1])});
    }
    specs.push_back({merged, g.vertex_name(g.other_end(p1, leaf1)),
                     g.vertex_name(g.other_end(p2, leaf2))});
    return TrivalentGraph::build(specs);
}

namespace {

// Union of edge specs; colliding names from g2 get primes appended.
// Returns the spec list plus the rename maps for g2.
struct UnionSpecs {
    std::vector<std::array<std::string, 3>> specs;
    std::map<std::string, std::string> edge_rename;
    std::map<std::string, std::string> vertex_rename;
};

UnionSpecs union_specs(const TrivalentGraph& g1, const TrivalentGraph& g2) {
    UnionSpecs u;
    u.specs = g1.edge_specs();
    std::set<std::string> edge_taken, vertex_taken;
    for (int e = 0; e < g1.edge_count(); ++e)
        edge_taken.insert(g1.edge_name(e));
    for (int v = 0; v < g1.vertex_count(); ++v)
        vertex_taken.insert(g1.vertex_name(v));

    auto rename = [](const std::string& name, std::set<std::string>& taken) {
        std::string out = name;
        while (taken.count(out))
            out += "'";
        taken.insert(out);
        return out;
    };
    for (int v = 0; v < g2.vertex_count(); ++v)
        u.vertex_rename[g2.vertex_name(v)] = rename(g2.vertex_name(v), vertex_taken);
    for (int e = 0; e < g2.edge_count(); ++e) {
        std::string name = rename(g2.edge_name(e), edge_taken);
        u.edge_rename[g2.edge_name(e)] = name;
        u.specs.push_back({name, u.vertex_rename[g2.vertex_name(g2.edge(e).ends[0])],
                           u.vertex_rename[g2.vertex_name(g2.edge(e).ends[1])]});
    }
    return u;
}

} // namespace

TrivalentGraph disjoint_union(const TrivalentGraph& g1, const TrivalentGraph& g2) {
    return TrivalentGraph::build(union_specs(g1, g2).specs);
}

TrivalentGraph graft(const TrivalentGraph& g1, int leaf1, const TrivalentGraph& g2, int leaf2) {
    if (!g1.is_leaf(leaf1) || !g2.is_leaf(leaf2))
        throw DomainError("graft arguments must be leaves");
    UnionSpecs u = union_specs(g1, g2);

    std::set<std::string> edge_taken, vertex_taken;
    for (const auto& s : u.specs) {
        edge_taken.insert(s[0]);
        vertex_taken.insert(s[1]);
        vertex_taken.insert(s[2]);
    }
    auto fresh = [](const std::string& base, const std::set<std::string>& taken) {
        if (!taken.count(base))
            return base;
        for (int k = 2;; ++k) {
            std::string c = base + "_" + std::to_string(k);
            if (!taken.count(c))
                return c;
        }
    };
    std::string center = fresh("graftv", vertex_taken);
    std::string new_leaf = fresh("graftl", vertex_taken);
    std::string new_edge = fresh("graft", edge_taken);

    std::string l1 = g1.vertex_name(leaf1);
    std::string l2 = u.vertex_rename.at(g2.vertex_name(leaf2));
    // Reattach the two petioles to the new tripod center.
    for (auto& s : u.specs)
        for (int i : {1, 2})
            if (s[static_cast<size_t>(i)] == l1 || s[static_cast<size_t>(i)] == l2)
                s[static_cast<size_t>(i)] = center;
    u.specs.push_back({new_edge, center, new_leaf});
    return TrivalentGraph::build(u.specs);
}

std::vector<TrivalentGraph> components(const TrivalentGraph& g) {
    std::vector<std::vector<std::array<std::string, 3>>> by_comp(g.component_count());
    for (int e = 0; e < g.edge_count(); ++e) {
        int c = g.component_of(g.edge(e).ends[0]);
        by_comp[c].push_back({g.edge_name(e), g.vertex_name(g.edge(e).ends[0]),
                              g.vertex_name(g.edge(e).ends[1])});
    }
    std::vector<TrivalentGraph> out;
    for (auto& specs : by_comp)
        if (!specs.empty())
            out.push_back(TrivalentGraph::build(specs, true));
    return out;
}

} // namespace graphcone
