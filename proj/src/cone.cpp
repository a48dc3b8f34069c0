#include "graphcone/cone.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "graphcone/errors.hpp"

namespace graphcone {

ConeElement zero_element(const TrivalentGraph& g) {
    return ConeElement{0, std::vector<long long>(g.edge_count(), 0)};
}

ConeElement add(const ConeElement& a, const ConeElement& b) {
    ConeElement out = a;
    out.degree += b.degree;
    for (size_t i = 0; i < out.coeffs.size(); ++i)
        out.coeffs[i] += b.coeffs[i];
    return out;
}

ConeElement sub(const ConeElement& a, const ConeElement& b) {
    ConeElement out = a;
    out.degree -= b.degree;
    for (size_t i = 0; i < out.coeffs.size(); ++i)
        out.coeffs[i] -= b.coeffs[i];
    return out;
}

ConeElement scale(long long k, const ConeElement& a) {
    ConeElement out = a;
    out.degree *= k;
    for (auto& c : out.coeffs)
        c *= k;
    return out;
}

bool is_zero(const ConeElement& a) {
    if (a.degree != 0)
        return false;
    return std::all_of(a.coeffs.begin(), a.coeffs.end(), [](long long c) { return c == 0; });
}

namespace {

void check_shape(const TrivalentGraph& g, const ConeElement& w) {
    if (static_cast<int>(w.coeffs.size()) != g.edge_count())
        throw DomainError("element has " + std::to_string(w.coeffs.size()) +
                          " coefficients but the graph has " + std::to_string(g.edge_count()) +
                          " edges");
}

long long vertex_sum(const TrivalentGraph& g, const ConeElement& w, int v) {
    long long sum = 0;
    for (const HalfEdge& he : g.incident(v))
        sum += w.coeffs[he.edge]; // a loop appears with both half edges
    return sum;
}

} // namespace

HalfInt deg_v(const TrivalentGraph& g, const ConeElement& w, int vertex) {
    check_shape(g, w);
    if (!g.is_inner(vertex))
        throw DomainError("deg_v at leaf '" + g.vertex_name(vertex) + "'");
    return HalfInt{vertex_sum(g, w, vertex)};
}

long long deg_min(const TrivalentGraph& g, const ConeElement& w) {
    check_shape(g, w);
    long long max_twice = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.is_inner(v))
            max_twice = std::max(max_twice, vertex_sum(g, w, v));
    return (max_twice + 1) / 2; // exact for lattice elements, ceiling otherwise
}

bool in_lattice(const TrivalentGraph& g, const ConeElement& w) {
    check_shape(g, w);
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.is_inner(v) && vertex_sum(g, w, v) % 2 != 0)
            return false;
    return true;
}

ConeCheck in_cone_check(const TrivalentGraph& g, const ConeElement& w) {
    check_shape(g, w);
    for (int e = 0; e < g.edge_count(); ++e)
        if (w.coeffs[e] < 0)
            return {false, "negative coefficient at edge " + g.edge_name(e)};
    if (w.degree < 0)
        return {false, "negative degree"};
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (!g.is_inner(v))
            continue;
        const auto& inc = g.incident(v);
        long long a = w.coeffs[inc[0].edge];
        long long b = w.coeffs[inc[1].edge];
        long long c = w.coeffs[inc[2].edge];
        if ((a + b + c) % 2 != 0)
            return {false, "parity fails at vertex " + g.vertex_name(v)};
        long long mx = std::max({a, b, c});
        if (2 * mx > a + b + c)
            return {false, "triangle inequality fails at vertex " + g.vertex_name(v)};
    }
    long long mindeg = deg_min(g, w);
    if (w.degree < mindeg)
        return {false, "degree " + std::to_string(w.degree) + " below minimal degree " +
                           std::to_string(mindeg)};
    return {};
}

bool in_cone(const TrivalentGraph& g, const ConeElement& w) {
    return in_cone_check(g, w).ok;
}

LocalTriple local_paths(const TrivalentGraph& g, const ConeElement& w, int vertex) {
    check_shape(g, w);
    if (!g.is_inner(vertex))
        throw DomainError("local_paths at leaf '" + g.vertex_name(vertex) + "'");
    const auto& inc = g.incident(vertex);
    LocalTriple t;
    t.a = w.coeffs[inc[0].edge];
    t.b = w.coeffs[inc[1].edge];
    t.c = w.coeffs[inc[2].edge];
    long long sum = t.a + t.b + t.c;
    if (sum % 2 != 0)
        throw DomainError("parity fails at vertex " + g.vertex_name(vertex));
    t.x = (-t.a + t.b + t.c) / 2;
    t.y = (t.a - t.b + t.c) / 2;
    t.z = (t.a + t.b - t.c) / 2;
    if (t.x < 0 || t.y < 0 || t.z < 0)
        throw DomainError("triangle inequality fails at vertex " + g.vertex_name(vertex));
    return t;
}

LiftResult lift_cut(const TrivalentGraph& g, const ConeElement& w, int e) {
    check_shape(g, w);
    auto names = cut_edge_names(g, e);
    TrivalentGraph cut = cut_edge(g, e);
    ConeElement out = zero_element(cut);
    out.degree = w.degree;
    for (int f = 0; f < g.edge_count(); ++f) {
        if (f == e)
            continue;
        out.coeffs[cut.require_edge(g.edge_name(f))] = w.coeffs[f];
    }
    out.coeffs[cut.require_edge(names[0])] = w.coeffs[e];
    out.coeffs[cut.require_edge(names[1])] = w.coeffs[e];
    return {std::move(cut), std::move(out)};
}

ConeElement restrict_element(const TrivalentGraph& g, const ConeElement& w,
                             const TrivalentGraph& sub) {
    ConeElement out = zero_element(sub);
    out.degree = w.degree;
    for (int f = 0; f < sub.edge_count(); ++f)
        out.coeffs[f] = w.coeffs[g.require_edge(sub.edge_name(f))];
    return out;
}

ProjectResult project(const TrivalentGraph& g, const ConeElement& w, int e) {
    auto cls = classify_edges(g);
    if (cls[e].tag == CycleTag::cycle_edge)
        throw DomainError("cannot project along cycle edge '" + g.edge_name(e) + "'");
    auto names = cut_edge_names(g, e);
    LiftResult lifted = lift_cut(g, w, e);
    std::vector<TrivalentGraph> parts = components(lifted.graph);

    ProjectResult res;
    bool got1 = false, got2 = false;
    for (auto& part : parts) {
        if (part.edge_index(names[0]) >= 0) {
            res.elt1 = restrict_element(lifted.graph, lifted.element, part);
            res.part1 = std::move(part);
            got1 = true;
        } else if (part.edge_index(names[1]) >= 0) {
            res.elt2 = restrict_element(lifted.graph, lifted.element, part);
            res.part2 = std::move(part);
            got2 = true;
        }
    }
    if (!got1 || !got2)
        throw DomainError("projection of '" + g.edge_name(e) + "' did not split the graph");
    return res;
}

ConeElement parse_element(const TrivalentGraph& g, const std::string& text) {
    ConeElement out = zero_element(g);
    std::string s = text;
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }),
            s.end());
    if (s.rfind("deg=", 0) != 0)
        throw ParseError("element must start with 'deg=': '" + text + "'");
    size_t semi = s.find(';');
    if (semi == std::string::npos)
        throw ParseError("element is missing ';' after the degree: '" + text + "'");

    auto parse_int = [&](const std::string& tok) {
        try {
            size_t used = 0;
            long long v = std::stoll(tok, &used);
            if (used != tok.size())
                throw std::invalid_argument(tok);
            return v;
        } catch (const std::exception&) {
            throw ParseError("bad integer '" + tok + "' in element '" + text + "'");
        }
    };
    out.degree = parse_int(s.substr(4, semi - 4));

    std::string rest = s.substr(semi + 1);
    size_t pos = 0;
    while (pos < rest.size()) {
        size_t comma = rest.find(',', pos);
        std::string item = rest.substr(pos, comma == std::string::npos ? comma : comma - pos);
        pos = comma == std::string::npos ? rest.size() : comma + 1;
        if (item.empty())
            continue;
        size_t eq = item.find('=');
        if (eq == std::string::npos)
            throw ParseError("expected '<edge-id>=<int>', got '" + item + "'");
        std::string name = item.substr(0, eq);
        int e = g.edge_index(name);
        if (e < 0)
            throw DomainError("unknown edge key '" + name + "'");
        out.coeffs[e] = parse_int(item.substr(eq + 1));
    }
    return out;
}

std::string format_element(const TrivalentGraph& g, const ConeElement& w) {
    std::ostringstream out;
    out << "deg=" << w.degree << ';';
    bool first = true;
    for (int e = 0; e < g.edge_count(); ++e) {
        if (w.coeffs[e] == 0)
            continue;
        if (!first)
            out << ',';
        out << g.edge_name(e) << '=' << w.coeffs[e];
        first = false;
    }
    return out.str();
}

} // namespace graphcone
