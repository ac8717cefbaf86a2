#include <doctest.h>

#include <cstdio>
#include <random>
#include <sstream>

#include "irlab/canonical.hpp"
#include "irlab/enumerate.hpp"
#include "irlab/solvers.hpp"
#include "irlab/verify.hpp"
#include "test_util.hpp"

#include <json.hpp>

using namespace irlab;
using namespace irlab::test;

TEST_CASE("perfection of simple families") {
    PerfectionCache cache;
    for (int n : {1, 2, 4, 6}) CHECK(is_irredundance_perfect(complete(n), cache));
    CHECK(is_irredundance_perfect(path(6), cache));
    CHECK_FALSE(is_irredundance_perfect(catalog_entry("F1").graph, cache));
    CHECK_THROWS_AS(is_irredundance_perfect(Graph(18), cache), std::invalid_argument);
}

TEST_CASE("classify examples") {
    PerfectionCache cache;

    ClassificationReport c6 = classify(cycle(6), cache);
    CHECK(c6.perfect);
    CHECK_FALSE(c6.witness.has_value());
    CHECK(c6.ir == 2);
    CHECK(c6.gamma == 2);

    ClassificationReport f1 = classify(catalog_entry("F1").graph, cache);
    CHECK_FALSE(f1.perfect);
    REQUIRE(f1.witness.has_value());
    CHECK(f1.witness->first == "F1");
    CHECK(f1.ir == 2);
    CHECK(f1.gamma == 3);
    CHECK_FALSE(f1.equal_here);
    CHECK(f1.p6_free);

    ClassificationReport k1 = classify(complete(1), cache);
    CHECK(k1.perfect);
    CHECK(k1.ir == 1);
    CHECK(k1.gamma == 1);
    CHECK(k1.p6_free);
}

TEST_CASE("every forbidden pattern classifies as imperfect with a self-witness") {
    PerfectionCache cache;
    for (const auto& name : forbidden_names()) {
        CAPTURE(name);
        ClassificationReport r = classify(catalog_entry(name).graph, cache);
        CHECK_FALSE(r.perfect);
        CHECK(r.equal_here == (r.ir == r.gamma));
        REQUIRE(r.witness.has_value());
        CHECK(embedding_is_induced(catalog_entry(name).graph,
                                   catalog_entry(r.witness->first).graph, r.witness->second));
    }
}

TEST_CASE("perfection is hereditary") {
    PerfectionCache cache;
    std::mt19937_64 rng(19);
    for (int iter = 0; iter < 100; ++iter) {
        Graph g = random_graph(rng, 2 + static_cast<int>(rng() % 6));
        if (!is_irredundance_perfect(g, cache)) continue;
        for (int v = 0; v < g.order(); ++v)
            CHECK(is_irredundance_perfect(delete_vertex(g, v), cache));
    }
}

TEST_CASE("main theorem holds at n <= 6 and fails under a corrupted catalog") {
    PerfectionCache cache;
    CHECK(verify_main_theorem(6, cache).empty());
    // Negative control: pretend the forbidden list is only F2-F11. Then F1
    // itself (7 vertices, P6-free, imperfect) has no witness and must show
    // up as a discrepancy at max_n = 7.
    std::vector<std::string> crippled(forbidden_names().begin() + 1, forbidden_names().end());
    bool f1_caught = false;
    {
        const Graph& f1 = catalog_entry("F1").graph;
        bool perfect = is_irredundance_perfect(f1, cache);
        bool witness = find_forbidden_witness(f1, crippled).has_value();
        f1_caught = perfect == witness;  // both false: the equivalence breaks
    }
    CHECK(f1_caught);
}

TEST_CASE("sufficient conditions hold at n <= 6") {
    PerfectionCache cache;
    for (const auto& id : condition_ids()) {
        CAPTURE(id);
        CHECK(verify_sufficient_condition(id, 6, cache).empty());
    }
    CHECK_THROWS_AS(verify_sufficient_condition("XX", 4, cache), std::invalid_argument);
}

TEST_CASE("sweep emits one report per class") {
    PerfectionCache cache;
    std::ostringstream out;
    SweepSummary s = sweep(4, out, cache);
    CHECK(s.reports == 18);  // 1 + 2 + 4 + 11 classes for n = 1..4
    CHECK(s.levels.size() == 4);
    CHECK(s.levels[3].total == 11);
    CHECK(s.levels[3].perfect == 11);  // no forbidden pattern fits in 4 vertices

    std::istringstream lines(out.str());
    std::string line;
    std::size_t parsed = 0;
    while (std::getline(lines, line)) {
        auto j = nlohmann::json::parse(line);
        ++parsed;
        CHECK(j["ir"].get<int>() <= j["gamma"].get<int>());
        CHECK(j.contains("graph6"));
        CHECK(j.contains("p6_free"));
        CHECK(j["equal_here"].is_boolean());
        CHECK(j["perfect"].is_boolean());
        if (j["perfect"].get<bool>()) CHECK(j["equal_here"].get<bool>());
    }
    CHECK(parsed == s.reports);

    SweepSummary one = sweep(1, out, cache);
    CHECK(one.reports == 1);
}

TEST_CASE("cold and warm cache classifications agree") {
    PerfectionCache warm;
    std::ostringstream sink;
    sweep(6, sink, warm);
    std::mt19937_64 rng(29);
    for (int iter = 0; iter < 50; ++iter) {
        Graph g = random_graph(rng, 1 + static_cast<int>(rng() % 7));
        PerfectionCache cold;
        ClassificationReport a = classify(g, cold);
        ClassificationReport b = classify(g, warm);
        CHECK(a.to_json() == b.to_json());
    }
}

TEST_CASE("parallel verification matches serial") {
    PerfectionCache serial_cache, parallel_cache;
    CHECK(verify_main_theorem(6, serial_cache, 1).empty());
    CHECK(verify_main_theorem(6, parallel_cache, 4).empty());
    std::ostringstream a, b;
    PerfectionCache ca, cb;
    SweepSummary sa = sweep(5, a, ca, 1);
    SweepSummary sb = sweep(5, b, cb, 4);
    CHECK(sa.reports == sb.reports);
    // Same multiset of report lines regardless of worker count.
    auto sorted_lines = [](const std::string& text) {
        std::vector<std::string> ls;
        std::istringstream is(text);
        std::string l;
        while (std::getline(is, l)) ls.push_back(l);
        std::sort(ls.begin(), ls.end());
        return ls;
    };
    CHECK(sorted_lines(a.str()) == sorted_lines(b.str()));
}

TEST_CASE("cache round-trips through its file format") {
    PerfectionCache cache;
    std::ostringstream sink;
    sweep(5, sink, cache);
    std::string file = "irlab_cache_test.tmp";
    cache.save(file);

    PerfectionCache loaded;
    loaded.load(file);
    CHECK(loaded.size() == cache.size());
    Graph p5 = path(5);
    std::string key = canonical_form(p5).graph6;
    auto a = cache.lookup(key);
    auto b = loaded.lookup(key);
    REQUIRE(a.has_value());
    REQUIRE(b.has_value());
    CHECK(*a == *b);

    PerfectionCache bad;
    CHECK_THROWS_AS(bad.load("does_not_exist.tmp"), std::runtime_error);
    std::remove(file.c_str());
}
