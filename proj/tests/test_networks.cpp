#include <doctest.h>

#include <set>

#include "graphcone/enumerate.hpp"
#include "graphcone/networks.hpp"

#include "fixtures.hpp"

using namespace graphcone;
using graphcone::testing::fixture;

namespace {

std::set<std::set<std::string>> support_sets(const TrivalentGraph& g) {
    std::set<std::set<std::string>> out;
    for (const Network& n : enumerate_networks(g)) {
        std::set<std::string> s;
        for (int e = 0; e < g.edge_count(); ++e)
            if (n.support[e])
                s.insert(g.edge_name(e));
        out.insert(std::move(s));
    }
    return out;
}

} // namespace

TEST_CASE("littleman has four networks") {
    auto sets = support_sets(fixture("littleman"));
    CHECK(sets == std::set<std::set<std::string>>{
                      {}, {"loop"}, {"p3", "p4"}, {"loop", "p3", "p4"}});
}

TEST_CASE("dumbbell networks never use the bar") {
    auto sets = support_sets(fixture("dumbbell"));
    CHECK(sets == std::set<std::set<std::string>>{
                      {}, {"loopL"}, {"loopR"}, {"loopL", "loopR"}});
}

TEST_CASE("quartet networks are the even leaf patterns") {
    TrivalentGraph q = fixture("quartet");
    auto nets = enumerate_networks(q);
    CHECK(nets.size() == 8);
    std::set<std::vector<long long>> leaf_patterns;
    for (const Network& n : nets) {
        ConeElement w = network_element(q, n);
        std::vector<long long> k;
        long long total = 0;
        for (const char* p : {"p1", "p2", "p3", "p4"}) {
            k.push_back(w.coeffs[q.require_edge(p)]);
            total += k.back();
        }
        CHECK(total % 2 == 0);
        leaf_patterns.insert(k);
    }
    CHECK(leaf_patterns.size() == 8); // determined by their leaf values
}

TEST_CASE("networks come in lexicographic support order, empty first") {
    TrivalentGraph lm = fixture("littleman");
    auto nets = enumerate_networks(lm);
    REQUIRE(!nets.empty());
    CHECK(std::count(nets[0].support.begin(), nets[0].support.end(), 1) == 0);
    for (size_t i = 1; i < nets.size(); ++i)
        CHECK(nets[i - 1].support < nets[i].support);
}

TEST_CASE("network chains split into paths and cycles") {
    TrivalentGraph lm = fixture("littleman");
    for (const Network& n : enumerate_networks(lm)) {
        for (const Chain& chain : network_chains(lm, n)) {
            if (chain.cycle) {
                CHECK(chain.edges.size() == 1); // only the loop here
            } else {
                // A path runs leaf to leaf: its end edges are petioles.
                CHECK(lm.is_petiole(chain.edges.front()));
                CHECK(lm.is_petiole(chain.edges.back()));
            }
        }
    }
}

TEST_CASE("networks equal the degree-1 cone points (cross-module oracle)") {
    for (const char* name : {"tripod", "quartet", "caterpillar6", "balloon", "littleman",
                             "hammock", "theta", "dumbbell", "hexagon", "twoloops"}) {
        TrivalentGraph g = fixture(name);
        std::set<std::vector<long long>> from_networks;
        for (const Network& n : enumerate_networks(g))
            from_networks.insert(network_element(g, n).coeffs);
        std::set<std::vector<long long>> from_cone;
        for (const ConeElement& w : points_of_degree(g, 1)) {
            bool zero_one = true;
            for (long long c : w.coeffs)
                zero_one = zero_one && (c == 0 || c == 1);
            CHECK(zero_one);
            from_cone.insert(w.coeffs);
        }
        CHECK(from_networks == from_cone);
    }
}
