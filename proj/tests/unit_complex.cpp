#include <numeric>
#include <vector>

#include "doctest.h"

#include "core/pattern.hpp"
#include "lp/complex.hpp"
#include "oracle/generators.hpp"
#include "util/comb.hpp"

using namespace rf;

namespace {

// every r-subset of {0,...,n-1} at every level
Complex full_complex(int n, int k) {
    Complex c;
    c.n = n;
    c.k = k;
    c.levels.resize(static_cast<size_t>(k) + 1);
    c.levels[0] = {{}};
    for (int r = 1; r <= k; ++r) {
        for_each_subset(n, r, [&](const std::vector<int>& s) {
            c.levels[static_cast<size_t>(r)].push_back(s);
            return true;
        });
    }
    c.sort_levels();
    return c;
}

}  // namespace

TEST_CASE("full complex is downward closed with full degrees") {
    Complex c = full_complex(6, 3);
    CHECK(c.downward_closed());
    auto deg = degree_sequence(c);
    REQUIRE(deg.size() == 3);
    CHECK(deg[0] == 6);  // singletons over the empty set
    CHECK(deg[1] == 5);  // pairs through a vertex
    CHECK(deg[2] == 4);  // triples through a pair
    CHECK(degree_sequence_bound_met(c));
}

TEST_CASE("removing a top edge can break downward closure") {
    Complex c = full_complex(4, 2);
    c.levels[1].erase(c.levels[1].begin());  // drop vertex {0}, keep its pairs
    CHECK_FALSE(c.downward_closed());
}

TEST_CASE("degree bound fails on a starved complex") {
    Complex c = full_complex(6, 3);
    // strip every triple through vertex 0: deg at {0} pairs drops to 0
    auto& top = c.levels[3];
    top.erase(std::remove_if(top.begin(), top.end(),
                             [](const std::vector<Vertex>& e) { return e[0] == 0; }),
              top.end());
    CHECK_FALSE(degree_sequence_bound_met(c));
}

TEST_CASE("degree bound implies a perfect fractional matching at the top") {
    Complex c = full_complex(6, 3);
    auto r = check_degree_sequence_pfm(c);
    CHECK(r.bound_met);
    CHECK(r.pfm.has_pfm);
}

TEST_CASE("greedy low-rank edge selection stays under the rank bound") {
    Complex c = full_complex(6, 3);
    std::vector<Vertex> order(6);
    std::iota(order.begin(), order.end(), 0);
    auto g = greedy_low_index_edge(c, order);
    REQUIRE(g.ok);
    CHECK(g.edge.size() == 3);
    for (size_t j = 0; j < g.ranks.size(); ++j) {
        long long bound = static_cast<long long>(j) * c.n / c.k + 1;
        CHECK(g.ranks[j] <= bound);
    }
}

TEST_CASE("greedy reports the stuck prefix honestly") {
    Complex c = full_complex(4, 2);
    // no pair extends {3}: remove them all, keep level 1 intact
    auto& top = c.levels[2];
    top.erase(std::remove_if(top.begin(), top.end(),
                             [](const std::vector<Vertex>& e) { return e[1] == 3; }),
              top.end());
    std::vector<Vertex> order{3, 0, 1, 2};
    auto g = greedy_low_index_edge(c, order);
    CHECK_FALSE(g.ok);
    CHECK(g.stuck_prefix == std::vector<Vertex>{3});
}

TEST_CASE("clique complex of a complete slice holds every set") {
    System sys = gen_complete(6, 2, 3, false);
    Pattern F = Pattern::parse("clique:3");
    Complex c = clique_complex(sys, false);
    CHECK(c.k == F.b);
    CHECK(c.downward_closed());
    CHECK(c.levels[1].size() == 6);
    CHECK(c.levels[2].size() == binomial(6, 2));
    CHECK(c.levels[3].size() == binomial(6, 3));
    CHECK(degree_sequence_bound_met(c));
}

TEST_CASE("directed clique complex respects arc signs") {
    // plus arcs only: a 3-set spans an ordered clique only via its ascending
    // order, which is still one rainbow clique per set
    System plus = gen_complete(5, 2, 3, false);
    Complex c = clique_complex(plus, true);
    CHECK(c.levels[3].size() == binomial(5, 3));

    // directed complete host: both orientations available, same vertex sets
    System both = gen_complete(5, 2, 3, true);
    Complex c2 = clique_complex(both, true);
    CHECK(c2.levels[3].size() == binomial(5, 3));
}

TEST_CASE("partite degree sequence ranks inside classes") {
    System par = gen_complete_partite(9, 3, 3);
    Pattern F = Pattern::parse("pclique:3");
    Complex c = clique_complex(par, false);
    CHECK(c.partite());
    CHECK(c.num_classes == 3);
    auto deg = partite_degree_sequence(c);
    REQUIRE(deg.size() == 3);
    CHECK(deg[0] == 3);  // class size
    CHECK(degree_sequence_bound_met(c));

    std::vector<std::vector<Vertex>> orders(3);
    for (int v = 0; v < 9; ++v) orders[static_cast<size_t>(par.klass[static_cast<size_t>(v)])].push_back(v);
    auto g = greedy_low_index_edge_partite(c, orders);
    REQUIRE(g.ok);
    CHECK(g.edge.size() == 3);
}
