#include "graphcone/mutation.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "graphcone/errors.hpp"

namespace graphcone {

namespace {

struct StubContext {
    int e = -1;
    int u = -1, w = -1;                 // e's endpoints, u < w
    std::array<HalfEdge, 4> stubs{};    // sorted by (edge, end)
    std::array<int, 4> side{};          // current vertex of each stub
    int current_partner = 0;            // stub index paired with stubs[0]
};

StubContext stub_context(const TrivalentGraph& g, const std::string& edge_name) {
    StubContext ctx;
    ctx.e = g.require_edge(edge_name);
    ctx.u = g.edge(ctx.e).ends[0];
    ctx.w = g.edge(ctx.e).ends[1];
    if (ctx.u == ctx.w)
        throw DomainError("cannot mutate along loop '" + edge_name + "'");
    if (g.is_leaf(ctx.u) || g.is_leaf(ctx.w))
        throw DomainError("cannot mutate along petiole '" + edge_name + "'");

    std::vector<std::pair<HalfEdge, int>> stubs;
    for (int v : {ctx.u, ctx.w})
        for (const HalfEdge& he : g.incident(v))
            if (he.edge != ctx.e)
                stubs.push_back({he, v});
    std::sort(stubs.begin(), stubs.end());
    for (int i = 0; i < 4; ++i) {
        ctx.stubs[i] = stubs[i].first;
        ctx.side[i] = stubs[i].second;
    }
    for (int i = 1; i < 4; ++i)
        if (ctx.side[i] == ctx.side[0])
            ctx.current_partner = i;
    return ctx;
}

TrivalentGraph apply_pairing(const TrivalentGraph& g, const StubContext& ctx, int new_partner) {
    // The pair containing stubs[0] stays on stubs[0]'s current side.
    std::array<int, 4> new_side{};
    int side0 = ctx.side[0];
    int other = side0 == ctx.u ? ctx.w : ctx.u;
    for (int i = 0; i < 4; ++i)
        new_side[i] = (i == 0 || i == new_partner) ? side0 : other;

    auto specs = g.edge_specs();
    for (int i = 0; i < 4; ++i) {
        const HalfEdge& he = ctx.stubs[i];
        specs[he.edge][static_cast<size_t>(1 + he.end)] = g.vertex_name(new_side[i]);
    }
    // Edge indices shift only through renames, which mutation never does, so
    // specs[e] still addresses the same edge.
    return TrivalentGraph::build(specs, true);
}

} // namespace

TrivalentGraph mutate(const TrivalentGraph& g, const MutationStep& step) {
    if (step.variant != 1 && step.variant != 2)
        throw DomainError("mutation variant must be 1 or 2");
    StubContext ctx = stub_context(g, step.edge);
    std::vector<int> alternatives;
    for (int i = 1; i < 4; ++i)
        if (i != ctx.current_partner)
            alternatives.push_back(i);
    return apply_pairing(g, ctx, alternatives[step.variant - 1]);
}

TrivalentGraph replay(const TrivalentGraph& g, const std::vector<MutationStep>& steps) {
    TrivalentGraph cur = g;
    for (const MutationStep& step : steps)
        cur = mutate(cur, step);
    return cur;
}

namespace {

// Variant (1 or 2) whose pairing puts `stub_a` and `stub_b` on one side.
// Throws if that is the current pairing already.
int variant_for_pair(const StubContext& ctx, const HalfEdge& stub_a, const HalfEdge& stub_b) {
    int ia = -1, ib = -1;
    for (int i = 0; i < 4; ++i) {
        if (ctx.stubs[i] == stub_a)
            ia = i;
        if (ctx.stubs[i] == stub_b)
            ib = i;
    }
    int partner; // index paired with stub 0 under the desired pairing
    if (ia == 0)
        partner = ib;
    else if (ib == 0)
        partner = ia;
    else
        partner = 6 - ia - ib; // the remaining index
    if (partner == ctx.current_partner)
        throw DomainError("requested mutation pairing equals the current one");
    std::vector<int> alternatives;
    for (int i = 1; i < 4; ++i)
        if (i != ctx.current_partner)
            alternatives.push_back(i);
    return partner == alternatives[0] ? 1 : 2;
}

bool edge_names_form_cycle(const TrivalentGraph& g, const std::set<std::string>& names) {
    if (names.empty())
        return false;
    std::map<int, int> cover; // vertex -> half-edge count
    std::set<int> edges;
    for (const auto& name : names) {
        int e = g.edge_index(name);
        if (e < 0)
            return false;
        edges.insert(e);
        cover[g.edge(e).ends[0]] += 1;
        cover[g.edge(e).ends[1]] += 1;
    }
    for (const auto& [v, count] : cover)
        if (count != 2)
            return false;
    // Connectivity over the chosen edges only.
    std::set<int> seen;
    std::vector<int> stack{g.edge(*edges.begin()).ends[0]};
    seen.insert(stack[0]);
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (const HalfEdge& he : g.incident(v)) {
            if (!edges.count(he.edge))
                continue;
            int w = g.edge(he.edge).ends[1 - he.end];
            if (seen.insert(w).second)
                stack.push_back(w);
        }
    }
    return seen.size() == cover.size();
}

// Shortest cycle of length >= 2, as a set of edge names (empty when all
// cycles are loops).  Ties break on the sorted name list.
std::set<std::string> shortest_long_cycle(const TrivalentGraph& g) {
    std::set<std::string> best;
    size_t best_len = 0;
    for (int e = 0; e < g.edge_count(); ++e) {
        if (g.is_loop(e) || g.is_petiole(e))
            continue;
        // BFS from one endpoint to the other avoiding e.
        int from = g.edge(e).ends[0], to = g.edge(e).ends[1];
        std::vector<int> parent_edge(g.vertex_count(), -1);
        std::vector<char> seen(g.vertex_count(), 0);
        std::vector<int> queue{from};
        seen[from] = 1;
        for (size_t i = 0; i < queue.size() && !seen[to]; ++i) {
            int v = queue[i];
            for (const HalfEdge& he : g.incident(v)) {
                if (he.edge == e)
                    continue;
                int w = g.edge(he.edge).ends[1 - he.end];
                if (!seen[w]) {
                    seen[w] = 1;
                    parent_edge[w] = he.edge;
                    queue.push_back(w);
                }
            }
        }
        if (!seen[to])
            continue; // bridge
        std::set<std::string> cycle{g.edge_name(e)};
        for (int v = to; v != from;) {
            int f = parent_edge[v];
            cycle.insert(g.edge_name(f));
            v = g.other_end(f, v);
        }
        if (best.empty() || cycle.size() < best_len ||
            (cycle.size() == best_len && cycle < best)) {
            best = std::move(cycle);
            best_len = best.size();
        }
    }
    return best;
}

bool has_incident_loop(const TrivalentGraph& g, int v) {
    for (const HalfEdge& he : g.incident(v))
        if (g.is_loop(he.edge))
            return true;
    return false;
}

// Inner vertices without loops; the spine candidates.
std::vector<int> core_vertices(const TrivalentGraph& g) {
    std::vector<int> core;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.is_inner(v) && !has_incident_loop(g, v))
            core.push_back(v);
    return core;
}

// Longest path in the core tree as a vertex list (double BFS).
std::vector<int> core_diameter_path(const TrivalentGraph& g, const std::vector<int>& core) {
    std::set<int> core_set(core.begin(), core.end());
    auto farthest = [&](int start) {
        std::map<int, int> dist, parent;
        dist[start] = 0;
        std::vector<int> queue{start};
        int far = start;
        for (size_t i = 0; i < queue.size(); ++i) {
            int v = queue[i];
            for (const HalfEdge& he : g.incident(v)) {
                int w = g.edge(he.edge).ends[1 - he.end];
                if (!core_set.count(w) || dist.count(w))
                    continue;
                dist[w] = dist[v] + 1;
                parent[w] = v;
                queue.push_back(w);
                if (dist[w] > dist[far] || (dist[w] == dist[far] && w < far))
                    far = w;
            }
        }
        return std::pair{far, parent};
    };
    auto [a, parent_a] = farthest(core[0]);
    auto [b, parent_b] = farthest(a);
    std::vector<int> path;
    for (int v = b;; v = parent_b.at(v)) {
        path.push_back(v);
        if (v == a)
            break;
    }
    std::reverse(path.begin(), path.end());
    return path; // runs a..b
}

// Slot = a non-spine edge hanging at a spine vertex: either a petiole to a
// leaf or the edge to a loop vertex.
struct Slot {
    int at = -1;    // spine vertex
    int edge = -1;  // hanging edge
    bool loop = false;
};

std::vector<Slot> slot_sequence(const TrivalentGraph& g, const std::vector<int>& path) {
    std::set<int> on_path(path.begin(), path.end());
    std::vector<Slot> slots;
    // Within one vertex the two slots are unordered; listing loops first
    // means any leaf-before-loop inversion spans two spine vertices.
    for (int v : path) {
        std::vector<Slot> here;
        for (const HalfEdge& he : g.incident(v)) {
            int w = g.edge(he.edge).ends[1 - he.end];
            if (on_path.count(w))
                continue;
            here.push_back(Slot{v, he.edge, has_incident_loop(g, w)});
        }
        std::stable_sort(here.begin(), here.end(),
                         [](const Slot& a, const Slot& b) { return a.loop > b.loop; });
        slots.insert(slots.end(), here.begin(), here.end());
    }
    return slots;
}

struct Normalizer {
    TrivalentGraph cur;
    std::vector<MutationStep> steps;

    void apply(const std::string& edge, int variant) {
        steps.push_back(MutationStep{edge, variant});
        cur = mutate(cur, steps.back());
    }

    // Phase 1: shorten every cycle to a loop.
    void shorten_cycles() {
        while (true) {
            std::set<std::string> cycle = shortest_long_cycle(cur);
            if (cycle.empty())
                return;
            const std::string edge = *cycle.begin();
            std::set<std::string> shorter = cycle;
            shorter.erase(edge);
            bool done = false;
            for (int variant : {1, 2}) {
                TrivalentGraph cand = mutate(cur, MutationStep{edge, variant});
                if (edge_names_form_cycle(cand, shorter)) {
                    apply(edge, variant);
                    done = true;
                    break;
                }
            }
            if (!done)
                throw DomainError("internal error: no mutation shortens cycle at '" + edge + "'");
        }
    }

    // Phase 2: pull off-spine inner vertices onto the spine.
    void caterpillarize() {
        while (true) {
            std::vector<int> core = core_vertices(cur);
            if (core.size() <= 1)
                return;
            std::vector<int> path = core_diameter_path(cur, core);
            if (path.size() == core.size())
                return;
            std::set<int> on_path(path.begin(), path.end());
            // First path vertex with a hanging core neighbour.
            int u = -1, hang = -1;
            for (int v : path) {
                for (const HalfEdge& he : cur.incident(v)) {
                    int w = cur.edge(he.edge).ends[1 - he.end];
                    if (!on_path.count(w) && cur.is_inner(w) && !has_incident_loop(cur, w)) {
                        u = v;
                        hang = he.edge;
                        break;
                    }
                }
                if (u >= 0)
                    break;
            }
            if (u < 0)
                throw DomainError("internal error: off-spine vertex not reachable");
            // Either variant splits the two spine edges at u apart, which
            // inserts the hanging vertex into the spine.
            apply(cur.edge_name(hang), 1);
        }
    }

    // Phase 3: bubble loop slots to the front of the spine.  Mutation may
    // relabel which physical vertex plays which spine role, so orientation
    // is chosen by content (fewest leaf-before-loop inversions), never by
    // vertex identity.
    void place_loops() {
        size_t guard = 0;
        while (true) {
            std::vector<int> core = core_vertices(cur);
            if (core.size() <= 1)
                return;
            std::vector<int> path = core_diameter_path(cur, core);
            std::vector<Slot> forward = slot_sequence(cur, path);
            std::reverse(path.begin(), path.end());
            std::vector<Slot> backward = slot_sequence(cur, path);
            auto inversions = [](const std::vector<Slot>& s) {
                size_t leaves_seen = 0, inv = 0;
                for (const Slot& slot : s) {
                    if (slot.loop)
                        inv += leaves_seen;
                    else
                        ++leaves_seen;
                }
                return inv;
            };
            size_t inv_f = inversions(forward);
            size_t inv_b = inversions(backward);
            if (inv_f == 0 || inv_b == 0)
                return;
            if (guard++ > forward.size() * forward.size() + 4)
                throw DomainError("internal error: loop placement does not converge");
            std::vector<Slot> slots = inv_f <= inv_b ? std::move(forward) : std::move(backward);
            // Leftmost leaf-before-loop inversion.
            size_t i = 0;
            while (i + 1 < slots.size() && !(!slots[i].loop && slots[i + 1].loop))
                ++i;
            if (i + 1 == slots.size())
                return;
            // The two slots hang at adjacent spine vertices; swap them by
            // mutating along the spine edge between.
            int a = slots[i].at, b = slots[i + 1].at;
            if (a == b)
                throw DomainError("internal error: unsorted slots at one vertex");
            int spine_edge = -1;
            for (const HalfEdge& he : cur.incident(a))
                if (cur.edge(he.edge).ends[1 - he.end] == b)
                    spine_edge = he.edge;
            if (spine_edge < 0)
                throw DomainError("internal error: slot vertices not adjacent");
            StubContext ctx = stub_context(cur, cur.edge_name(spine_edge));
            // Desired: slots[i] moves to b, slots[i+1] moves to a, so the
            // pair at a is {slots[i+1].edge, the remaining stub at a}.
            HalfEdge moved{}, kept{};
            for (int s = 0; s < 4; ++s) {
                if (ctx.stubs[s].edge == slots[i + 1].edge)
                    moved = ctx.stubs[s];
                if (ctx.side[s] == a && ctx.stubs[s].edge != slots[i].edge)
                    kept = ctx.stubs[s];
            }
            apply(cur.edge_name(spine_edge), variant_for_pair(ctx, moved, kept));
        }
    }
};

} // namespace

TrivalentGraph canonical_caterpillar(int num_leaves, int betti) {
    int slots = num_leaves + betti;
    if (num_leaves < 0 || betti < 0 || slots < 2 || (betti == 0 && num_leaves < 3))
        throw DomainError("no caterpillar normal form for n=" + std::to_string(num_leaves) +
                          ", g=" + std::to_string(betti));
    std::vector<std::array<std::string, 3>> specs;
    auto slot_name = [](const char* prefix, int j) { return prefix + std::to_string(j); };

    std::vector<std::string> attach(slots + 1);
    if (slots == 2) {
        // Degenerate spine: one edge joining the two slot ends.
        std::string end1 = betti >= 1 ? "b1" : "l1";
        std::string end2 = betti >= 2 ? "b2" : ("l" + std::to_string(num_leaves));
        specs.push_back({"q1", end1, end2});
        if (betti >= 1)
            specs.push_back({"o1", "b1", "b1"});
        if (betti >= 2)
            specs.push_back({"o2", "b2", "b2"});
        return TrivalentGraph::build(specs);
    }
    int spine = slots - 2;
    for (int i = 1; i < spine; ++i)
        specs.push_back({slot_name("s", i), slot_name("w", i), slot_name("w", i + 1)});
    attach[1] = attach[2] = "w1";
    for (int j = 3; j <= spine; ++j)
        attach[j] = slot_name("w", j - 1);
    attach[slots - 1] = attach[slots] = slot_name("w", spine);
    for (int j = 1; j <= slots; ++j) {
        if (j <= betti) {
            specs.push_back({slot_name("q", j), attach[j], slot_name("b", j)});
            specs.push_back({slot_name("o", j), slot_name("b", j), slot_name("b", j)});
        } else {
            specs.push_back({slot_name("p", j), attach[j], slot_name("l", j)});
        }
    }
    return TrivalentGraph::build(specs);
}

NormalFormResult caterpillar_normal_form(const TrivalentGraph& g, bool strict) {
    if (g.empty())
        return {g, {}};
    if (!g.connected()) {
        if (strict)
            throw DomainError("graph is disconnected (" + std::to_string(g.component_count()) +
                              " components); normal form requires a connected graph");
        NormalFormResult out;
        std::vector<std::array<std::string, 3>> specs;
        for (const TrivalentGraph& comp : components(g)) {
            NormalFormResult part = caterpillar_normal_form(comp, true);
            auto part_specs = part.graph.edge_specs();
            specs.insert(specs.end(), part_specs.begin(), part_specs.end());
            out.steps.insert(out.steps.end(), part.steps.begin(), part.steps.end());
        }
        out.graph = TrivalentGraph::build(specs);
        return out;
    }
    Normalizer n{g, {}};
    n.shorten_cycles();
    n.caterpillarize();
    n.place_loops();
    return {std::move(n.cur), std::move(n.steps)};
}

} // namespace graphcone
