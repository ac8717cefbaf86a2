#include <doctest.h>

#include <set>

#include "irlab/canonical.hpp"
#include "irlab/enumerate.hpp"
#include "test_util.hpp"

using namespace irlab;
using namespace irlab::test;

TEST_CASE("class counts at small orders") {
    CHECK(count_graphs({1, false}) == 1);
    CHECK(count_graphs({2, false}) == 2);
    CHECK(count_graphs({3, false}) == 4);
    CHECK(count_graphs({4, false}) == 11);
    CHECK(count_graphs({5, false}) == 34);
    CHECK(count_graphs({6, false}) == 156);
}

TEST_CASE("stream matches the naive labeled-enumeration oracle for n <= 6") {
    for (int n = 1; n <= 6; ++n) {
        auto naive = naive_enumeration(n);
        std::vector<std::string> stream;
        enumerate_stream({n, false}, [&](const Graph& g) { stream.push_back(to_graph6(g)); });
        CHECK(stream == naive);  // same classes, same canonical-lexicographic order
    }
}

TEST_CASE("no duplicates at n = 7") {
    std::set<std::string> forms;
    std::uint64_t total = 0;
    enumerate_stream({7, false}, [&](const Graph& g) {
        ++total;
        CHECK(forms.insert(canonical_form(g).graph6).second);
    });
    CHECK(total == 1044);
}

TEST_CASE("emitted graphs are canonically labeled and in order") {
    std::string prev;
    enumerate_stream({5, false}, [&](const Graph& g) {
        std::string g6 = to_graph6(g);
        CHECK(canonical_form(g).graph6 == g6);
        CHECK(prev < g6);
        prev = g6;
    });
}

TEST_CASE("connected-only equals the filtered full stream") {
    for (int n = 1; n <= 6; ++n) {
        std::vector<std::string> filtered;
        enumerate_stream({n, false}, [&](const Graph& g) {
            if (is_connected(g)) filtered.push_back(to_graph6(g));
        });
        std::vector<std::string> connected;
        enumerate_stream({n, true}, [&](const Graph& g) { connected.push_back(to_graph6(g)); });
        CHECK(connected == filtered);
    }
    CHECK(count_graphs({6, true}) == 112);  // connected graphs on 6 vertices
}

TEST_CASE("parallel generation matches serial") {
    auto serial = enumerate_levels(7, 1);
    auto parallel = enumerate_levels(7, 4);
    CHECK(serial == parallel);
}

TEST_CASE("config validation") {
    CHECK_THROWS_AS(count_graphs({0, false}), std::invalid_argument);
    CHECK_THROWS_AS(count_graphs({11, false}), std::invalid_argument);
    CHECK_THROWS_AS(naive_enumeration(7), std::invalid_argument);
}
