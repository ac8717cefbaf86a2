#include <doctest.h>

#include <random>
#include <set>

#include "irlab/canonical.hpp"
#include "irlab/enumerate.hpp"
#include "irlab/graph.hpp"
#include "test_util.hpp"

using namespace irlab;
using namespace irlab::test;

TEST_CASE("graph6 decoding of small named graphs") {
    Graph k2 = from_graph6("A_");
    CHECK(k2.order() == 2);
    CHECK(k2.edge_count() == 1);
    CHECK(k2.adjacent(0, 1));

    Graph e2 = from_graph6("A?");
    CHECK(e2.order() == 2);
    CHECK(e2.edge_count() == 0);

    Graph k3 = from_graph6("Bw");
    CHECK(k3 == complete(3));
}

TEST_CASE("graph6 encoding") {
    CHECK(to_graph6(complete(2)) == "A_");
    CHECK(to_graph6(Graph(0)) == "?");
    CHECK(to_graph6(complete(3)) == "Bw");
}

TEST_CASE("graph6 parse errors are distinct") {
    CHECK_THROWS_AS(from_graph6(""), Graph6Error);
    CHECK(from_graph6("Bw").order() == 3);

    // Nonzero padding bits.
    auto padded = [] {
        std::string s = to_graph6(path(3));
        s.back() = static_cast<char>(s.back() + 1);  // flips a pad bit
        return s;
    }();
    try {
        from_graph6(padded);
        FAIL("expected padding error");
    } catch (const Graph6Error& e) {
        CHECK(e.kind() == Graph6Error::Kind::BadPadding);
    }

    try {
        from_graph6("~~?????");  // eight-byte order field: n way above 64
        FAIL("expected size error");
    } catch (const Graph6Error& e) {
        CHECK(e.kind() == Graph6Error::Kind::TooLarge);
    }

    try {
        from_graph6("B");  // adjacency bytes missing
        FAIL("expected truncation error");
    } catch (const Graph6Error& e) {
        CHECK(e.kind() == Graph6Error::Kind::Truncated);
    }

    CHECK_THROWS_AS(from_graph6("A\t"), Graph6Error);
}

TEST_CASE("graph6 handles the 63/64 vertex boundary") {
    for (int n : {62, 63, 64}) {
        std::mt19937_64 rng(7 + static_cast<unsigned>(n));
        Graph g = random_graph(rng, n, 0.3);
        Graph back = from_graph6(to_graph6(g));
        CHECK(back == g);
    }
}

TEST_CASE("closed neighborhoods") {
    CHECK(closed_neighborhood(complete(3), 0) == full_mask(3));
    CHECK(closed_neighborhood(Graph(3), 0) == bit(0));
    CHECK(closed_neighborhood(path(3), 0) == (bit(0) | bit(1)));
    CHECK_THROWS_AS(closed_neighborhood(path(3), 3), std::out_of_range);

    CHECK(closed_neighborhood_of_set(path(3), bit(0) | bit(2)) == full_mask(3));
    CHECK(closed_neighborhood_of_set(path(3), 0) == 0);
    CHECK(closed_neighborhood_of_set(cycle(6), bit(1) | bit(4)) == full_mask(6));
}

TEST_CASE("closed neighborhood properties") {
    std::mt19937_64 rng(11);
    for (int iter = 0; iter < 200; ++iter) {
        Graph g = random_graph(rng, 1 + static_cast<int>(rng() % 9));
        int v = static_cast<int>(rng() % static_cast<unsigned>(g.order()));
        CHECK(has_bit(closed_neighborhood(g, v), v));
        Mask x = rng() & g.vertex_mask();
        Mask y = x & rng();  // y subset of x
        Mask nx = closed_neighborhood_of_set(g, x);
        Mask ny = closed_neighborhood_of_set(g, y);
        CHECK((ny & ~nx) == 0);
    }
}

TEST_CASE("induced subgraphs") {
    CHECK(induced_subgraph(cycle(6), bit(0) | bit(1) | bit(2)) == path(3));
    Graph g = from_graph6("DQc");
    CHECK(are_isomorphic(induced_subgraph(g, g.vertex_mask()), g));
    for (Mask s = 0; s <= full_mask(4); ++s)
        if (popcount(s & full_mask(4)) == 3)
            CHECK(induced_subgraph(complete(4), s) == complete(3));
}

TEST_CASE("canonical form is invariant under relabeling") {
    CHECK(canonical_form(path(3)) == canonical_form(relabel(path(3), {1, 0, 2})));
    CHECK(canonical_form(complete(3)) != canonical_form(path(3)));

    std::vector<int> perm{0, 1, 2, 3};
    std::set<std::string> forms;
    do {
        forms.insert(canonical_form(relabel(path(4), perm)).graph6);
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(forms.size() == 1);
}

TEST_CASE("canonical form is a complete invariant at n <= 6") {
    // All 208 isomorphism classes, pairwise checked against the permutation
    // brute force within each order.
    std::vector<Graph> reps;
    for (int n = 1; n <= 6; ++n)
        for (const auto& g6 : naive_enumeration(n)) reps.push_back(from_graph6(g6));
    REQUIRE(reps.size() == 208);
    std::mt19937_64 rng(3);
    for (const auto& g : reps) {
        // Same class, random relabeling: equal forms.
        std::vector<int> perm(static_cast<std::size_t>(g.order()));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(canonical_form(g) == canonical_form(relabel(g, perm)));
    }
    for (std::size_t i = 0; i < reps.size(); ++i)
        for (std::size_t j = i + 1; j < reps.size(); ++j) {
            if (reps[i].order() != reps[j].order()) continue;
            bool same_form = canonical_form(reps[i]) == canonical_form(reps[j]);
            CHECK(same_form == isomorphic_by_permutations(reps[i], reps[j]));
        }
}

TEST_CASE("are_isomorphic") {
    CHECK_FALSE(are_isomorphic(cycle(6), path(6)));
    std::mt19937_64 rng(17);
    for (int iter = 0; iter < 50; ++iter) {
        Graph g = random_graph(rng, 2 + static_cast<int>(rng() % 7));
        std::vector<int> perm(static_cast<std::size_t>(g.order()));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(are_isomorphic(g, relabel(g, perm)));
    }
    // K3 + isolated vertex against every 4-vertex class, against the
    // permutation oracle.
    Graph k3_plus(4);
    k3_plus.add_edge(0, 1);
    k3_plus.add_edge(1, 2);
    k3_plus.add_edge(0, 2);
    for (const auto& g6 : naive_enumeration(4)) {
        Graph h = from_graph6(g6);
        CHECK(are_isomorphic(k3_plus, h) == isomorphic_by_permutations(k3_plus, h));
    }
}

TEST_CASE("connected components") {
    Graph two_p4(8);
    for (int o : {0, 4})
        for (int i = 0; i < 3; ++i) two_p4.add_edge(o + i, o + i + 1);
    auto comps = connected_components(two_p4);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == full_mask(4));
    CHECK(is_connected(cycle(5)));
    CHECK_FALSE(is_connected(Graph(2)));
}
