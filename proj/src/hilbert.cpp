#include "graphcone/hilbert.hpp"

#include <algorithm>
#include <set>

#include "graphcone/errors.hpp"
#include "graphcone/isomorphism.hpp"
#include "graphcone/mutation.hpp"

namespace graphcone {

namespace {

int axis_position(const HilbertTable& t, const std::string& axis) {
    for (size_t i = 0; i < t.axes.size(); ++i)
        if (t.axes[i] == axis)
            return static_cast<int>(i);
    throw DomainError("table has no axis '" + axis + "'");
}

std::vector<long long> drop_index(const std::vector<long long>& k, int pos) {
    std::vector<long long> out;
    out.reserve(k.size() - 1);
    for (size_t i = 0; i < k.size(); ++i)
        if (static_cast<int>(i) != pos)
            out.push_back(k[i]);
    return out;
}

bool tripod_admissible(long long m, long long k1, long long k2, long long k3) {
    long long sum = k1 + k2 + k3;
    if (sum % 2 != 0 || sum > 2 * m)
        return false;
    return 2 * std::max({k1, k2, k3}) <= sum;
}

} // namespace

HilbertTable hilbert_brute(const TrivalentGraph& g, long long D,
                           const std::vector<std::string>& leaf_axes, const EnumOptions& opts) {
    HilbertTable t;
    t.D = D;
    t.axes = leaf_axes;
    std::vector<int> petioles;
    for (const std::string& name : leaf_axes) {
        int v = g.vertex_index(name);
        if (v < 0 || !g.is_leaf(v))
            throw DomainError("'" + name + "' is not a leaf");
        petioles.push_back(g.petiole_of(v));
    }
    for (long long m = 0; m <= D; ++m) {
        for (const ConeElement& w : points_of_degree(g, m, opts)) {
            std::vector<long long> k;
            k.reserve(petioles.size());
            for (int p : petioles)
                k.push_back(w.coeffs[p]);
            t.bump(m, std::move(k), 1);
        }
    }
    return t;
}

HilbertTable tripod_table(long long D, const std::array<std::string, 3>& axes) {
    HilbertTable t;
    t.D = D;
    t.axes.assign(axes.begin(), axes.end());
    for (long long m = 0; m <= D; ++m)
        for (long long k1 = 0; k1 <= m; ++k1)
            for (long long k2 = 0; k2 <= m; ++k2)
                for (long long k3 = 0; k3 <= m; ++k3)
                    if (tripod_admissible(m, k1, k2, k3))
                        t.bump(m, {k1, k2, k3}, 1);
    return t;
}

HilbertTable leaf_unit_table(long long D, const std::string& slot_axis,
                             const std::string& graft_axis) {
    HilbertTable t;
    t.D = D;
    t.axes = {slot_axis, graft_axis};
    for (long long m = 0; m <= D; ++m)
        for (long long k = 0; k <= m; ++k)
            t.bump(m, {k, k}, 1);
    return t;
}

HilbertTable balloon_unit_table(long long D, const std::string& graft_axis) {
    HilbertTable t;
    t.D = D;
    t.axes = {graft_axis};
    for (long long m = 0; m <= D; ++m)
        for (long long k = 0; k <= m; k += 2)
            t.bump(m, {k}, m - k + 1);
    return t;
}

HilbertTable hilbert_graft(const HilbertTable& t1, const std::string& l1, const HilbertTable& t2,
                           const std::string& l2, const std::string& new_axis) {
    if (t1.D != t2.D)
        throw DomainError("graft of tables with different truncation bounds");
    int p1 = axis_position(t1, l1);
    int p2 = axis_position(t2, l2);

    HilbertTable out;
    out.D = t1.D;
    for (size_t i = 0; i < t1.axes.size(); ++i)
        if (static_cast<int>(i) != p1)
            out.axes.push_back(t1.axes[i]);
    for (size_t i = 0; i < t2.axes.size(); ++i)
        if (static_cast<int>(i) != p2)
            out.axes.push_back(t2.axes[i]);
    out.axes.push_back(new_axis);
    {
        std::set<std::string> unique(out.axes.begin(), out.axes.end());
        if (unique.size() != out.axes.size())
            throw DomainError("graft would duplicate an axis name");
    }

    // Bucket rows of both tables by degree; convolve through the tripod.
    for (long long m = 0; m <= out.D; ++m) {
        std::vector<std::pair<std::vector<long long>, long long>> rows1, rows2;
        for (auto it = t1.counts.lower_bound({m, {}}); it != t1.counts.end() && it->first.first == m;
             ++it)
            rows1.push_back({it->first.second, it->second});
        for (auto it = t2.counts.lower_bound({m, {}}); it != t2.counts.end() && it->first.first == m;
             ++it)
            rows2.push_back({it->first.second, it->second});
        for (const auto& [k1, c1] : rows1) {
            long long j1 = k1[p1];
            for (const auto& [k2, c2] : rows2) {
                long long j2 = k2[p2];
                std::vector<long long> base = drop_index(k1, p1);
                std::vector<long long> rest2 = drop_index(k2, p2);
                base.insert(base.end(), rest2.begin(), rest2.end());
                long long hi = std::min(j1 + j2, 2 * m - j1 - j2);
                for (long long k = std::llabs(j1 - j2); k <= hi; k += 2) {
                    std::vector<long long> key = base;
                    key.push_back(k);
                    out.bump(m, std::move(key), c1 * c2);
                }
            }
        }
    }
    return out;
}

HilbertTable hilbert_glue(const HilbertTable& t, const std::string& l1, const std::string& l2) {
    if (l1 == l2)
        throw DomainError("glue needs two distinct axes");
    int p1 = axis_position(t, l1);
    int p2 = axis_position(t, l2);
    HilbertTable out;
    out.D = t.D;
    for (size_t i = 0; i < t.axes.size(); ++i)
        if (static_cast<int>(i) != p1 && static_cast<int>(i) != p2)
            out.axes.push_back(t.axes[i]);
    for (const auto& [key, c] : t.counts) {
        const auto& [m, k] = key;
        if (k[p1] != k[p2])
            continue;
        std::vector<long long> reduced;
        for (size_t i = 0; i < k.size(); ++i)
            if (static_cast<int>(i) != p1 && static_cast<int>(i) != p2)
                reduced.push_back(k[i]);
        out.bump(m, std::move(reduced), c);
    }
    return out;
}

HilbertTable marginalize(const HilbertTable& t, const std::vector<std::string>& keep) {
    std::vector<int> positions;
    for (const std::string& axis : keep)
        positions.push_back(axis_position(t, axis));
    HilbertTable out;
    out.D = t.D;
    out.axes = keep;
    for (const auto& [key, c] : t.counts) {
        std::vector<long long> k;
        k.reserve(positions.size());
        for (int p : positions)
            k.push_back(key.second[p]);
        out.bump(key.first, std::move(k), c);
    }
    return out;
}

namespace {

bool has_incident_loop(const TrivalentGraph& g, int v) {
    for (const HalfEdge& he : g.incident(v))
        if (g.is_loop(he.edge))
            return true;
    return false;
}

// Slots of a caterpillar-with-loops in spine order, loop slots leading.
struct CatSlot {
    bool loop = false;
    std::string leaf; // leaf vertex name when !loop
};

std::vector<CatSlot> caterpillar_slots(const TrivalentGraph& g) {
    std::vector<int> core;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.is_inner(v) && !has_incident_loop(g, v))
            core.push_back(v);

    auto slot_of = [&](int hanging_end) {
        CatSlot s;
        s.loop = has_incident_loop(g, hanging_end);
        if (!s.loop)
            s.leaf = g.vertex_name(hanging_end);
        return s;
    };

    std::vector<CatSlot> slots;
    if (core.empty())
        throw DomainError("graph is not a caterpillar with a spine");
    if (core.size() == 1) {
        for (const HalfEdge& he : g.incident(core[0]))
            slots.push_back(slot_of(g.other_end(he.edge, core[0])));
    } else {
        // Walk the spine from one end.
        std::set<int> core_set(core.begin(), core.end());
        auto core_neighbours = [&](int v) {
            std::vector<int> out;
            for (const HalfEdge& he : g.incident(v)) {
                int w = g.other_end(he.edge, v);
                if (core_set.count(w))
                    out.push_back(w);
            }
            return out;
        };
        int start = -1;
        for (int v : core)
            if (core_neighbours(v).size() == 1) {
                start = v;
                break;
            }
        if (start < 0)
            throw DomainError("graph is not a caterpillar with a spine");
        std::vector<int> spine{start};
        std::set<int> seen{start};
        while (true) {
            bool extended = false;
            for (int w : core_neighbours(spine.back()))
                if (!seen.count(w)) {
                    spine.push_back(w);
                    seen.insert(w);
                    extended = true;
                    break;
                }
            if (!extended)
                break;
        }
        if (spine.size() != core.size())
            throw DomainError("graph is not a caterpillar with a spine");
        for (int v : spine)
            for (const HalfEdge& he : g.incident(v)) {
                int w = g.other_end(he.edge, v);
                if (!core_set.count(w))
                    slots.push_back(slot_of(w));
            }
    }
    std::stable_sort(slots.begin(), slots.end(),
                     [](const CatSlot& a, const CatSlot& b) { return a.loop > b.loop; });
    return slots;
}

// Chain the unit tables of the slots by repeated grafting; the last slot
// becomes the final free leaf.
HilbertTable compose_chain(long long D, const std::vector<CatSlot>& slots) {
    size_t count = slots.size();
    if (count < 3)
        throw DomainError("internal error: caterpillar chain needs at least three slots");
    std::set<std::string> leaf_names;
    for (const CatSlot& s : slots)
        if (!s.loop)
            leaf_names.insert(s.leaf);
    auto temp = [&](const std::string& base) {
        std::string name = base;
        while (leaf_names.count(name))
            name += "'";
        return name;
    };
    auto unit = [&](const CatSlot& s, const std::string& end_axis) {
        return s.loop ? balloon_unit_table(D, end_axis)
                      : leaf_unit_table(D, s.leaf, end_axis);
    };
    HilbertTable t = unit(slots[0], temp("@end0"));
    for (size_t i = 1; i + 1 < count; ++i) {
        std::string next_axis =
            i + 2 == count ? slots[count - 1].leaf : temp("@end" + std::to_string(i));
        HilbertTable u = unit(slots[i], temp("@graft"));
        t = hilbert_graft(t, t.axes.back(), u, u.axes.back(), next_axis);
    }
    return t;
}

} // namespace

HilbertTable hilbert_compose(const TrivalentGraph& g, long long D,
                             const std::vector<std::string>& leaf_axes, const EnumOptions& opts) {
    if (g.empty()) {
        if (!leaf_axes.empty())
            throw DomainError("empty graph has no leaves");
        HilbertTable t;
        t.D = D;
        for (long long m = 0; m <= D; ++m)
            t.bump(m, {}, 1);
        return t;
    }
    if (!g.connected())
        throw DomainError("compose needs a connected graph");

    NormalFormResult nf = caterpillar_normal_form(g);
    GraphInvariants inv = invariants(nf.graph);
    HilbertTable full;

    if (inv.num_leaves == 0) {
        // No leaves: build the two-leaf caterpillar with one loop fewer and
        // glue its leaf pair.
        std::vector<CatSlot> slots;
        for (long long i = 1; i < inv.betti; ++i)
            slots.push_back(CatSlot{true, {}});
        slots.push_back(CatSlot{false, "@glue1"});
        slots.push_back(CatSlot{false, "@glue2"});
        HilbertTable t = compose_chain(D, slots);
        full = hilbert_glue(t, "@glue1", "@glue2");
    } else if (inv.num_leaves + inv.betti == 2) {
        // Balloon: a single unit, its leaf coefficient is the graft axis.
        full = balloon_unit_table(D, nf.graph.vertex_name(nf.graph.leaves().at(0)));
    } else {
        full = compose_chain(D, caterpillar_slots(nf.graph));
    }
    (void)opts;
    return marginalize(full, leaf_axes);
}

MutationInvarianceReport verify_mutation_invariance(const TrivalentGraph& g1,
                                                    const TrivalentGraph& g2, long long D,
                                                    const std::vector<std::string>& axes1,
                                                    const std::vector<std::string>& axes2,
                                                    const EnumOptions& opts) {
    if (axes1.size() != axes2.size())
        throw DomainError("leaf subsets must have equal size");
    GraphInvariants i1 = invariants(g1), i2 = invariants(g2);
    if (i1 != i2) {
        auto fmt = [](const GraphInvariants& i) {
            return "(n=" + std::to_string(i.num_leaves) + ", g=" + std::to_string(i.betti) +
                   ", comp=" + std::to_string(i.num_components) + ")";
        };
        return {false, "invariants differ: " + fmt(i1) + " vs " + fmt(i2)};
    }

    // Leaf correspondence: mutations fix leaf names, so the normal forms
    // carry the original leaves; an isomorphism between them pairs the axes.
    std::vector<std::string> mapped_axes2 = axes2;
    if (!axes1.empty()) {
        NormalFormResult n1 = caterpillar_normal_form(g1);
        NormalFormResult n2 = caterpillar_normal_form(g2);
        IsoResult iso = is_isomorphic(n1.graph, n2.graph);
        if (!iso.isomorphic)
            return {false, "normal forms are not isomorphic"};
        std::set<std::string> requested(axes2.begin(), axes2.end());
        mapped_axes2.clear();
        for (const std::string& axis : axes1) {
            int v = n1.graph.vertex_index(axis);
            if (v < 0)
                throw DomainError("'" + axis + "' is not a leaf of the first graph");
            std::string image = n2.graph.vertex_name(iso.vertex_map[v]);
            if (!requested.count(image))
                return {false, "leaf correspondence sends '" + axis + "' to '" + image +
                                   "', which is outside the requested axes"};
            mapped_axes2.push_back(image);
        }
    }

    HilbertTable t1 = hilbert_brute(g1, D, axes1, opts);
    HilbertTable t2 = hilbert_brute(g2, D, mapped_axes2, opts);
    t2.axes = t1.axes; // identified pairwise
    if (t1 == t2)
        return {true, ""};
    // First discrepancy in key order.
    for (const auto& [key, c] : t1.counts) {
        long long other = t2.at(key.first, key.second);
        if (other != c) {
            std::string k = "(";
            for (size_t i = 0; i < key.second.size(); ++i)
                k += (i ? "," : "") + std::to_string(key.second[i]);
            k += ")";
            return {false, "m=" + std::to_string(key.first) + " k=" + k + ": " +
                               std::to_string(c) + " vs " + std::to_string(other)};
        }
    }
    for (const auto& [key, c] : t2.counts) {
        if (t1.at(key.first, key.second) != c) {
            std::string k = "(";
            for (size_t i = 0; i < key.second.size(); ++i)
                k += (i ? "," : "") + std::to_string(key.second[i]);
            k += ")";
            return {false, "m=" + std::to_string(key.first) + " k=" + k + ": " +
                               std::to_string(t1.at(key.first, key.second)) + " vs " +
                               std::to_string(c)};
        }
    }
    return {false, "tables differ"};
}

} // namespace graphcone
