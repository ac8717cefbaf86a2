#include "irlab/enumerate.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "irlab/canonical.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace irlab {

namespace {

void check_config(int n) {
    if (n < 1 || n > 10) throw std::invalid_argument("enumeration order must be 1..10");
}

// Accepted canonical children of one parent (given as its canonical graph6
// line). Each surviving child is emitted in canonical labeling.
std::vector<std::string> children_of(const std::string& parent_g6) {
    Graph parent = from_graph6(parent_g6);
    int k = parent.order();
    std::set<std::string> local;  // parents with automorphisms can repeat a class
    for (Mask m = 0; m < (Mask{1} << k); ++m) {
        Graph child(k + 1);
        for (int v = 0; v < k; ++v)
            for (Mask nm = parent.neighbors(v) & ~full_mask(v + 1); nm; nm &= nm - 1)
                child.add_edge(v, lowest_bit(nm));
        for (Mask nm = m; nm; nm &= nm - 1) child.add_edge(k, lowest_bit(nm));

        CanonicalResult canon = canonicalize(child);
        int del = canon.last_vertex();
        // Canonical deletion must reproduce the parent class. When the added
        // vertex itself sits last in canonical order this holds by
        // construction.
        if (del != k && canonical_form(delete_vertex(child, del)).graph6 != parent_g6) continue;
        local.insert(std::move(canon.graph6));
    }
    return {local.begin(), local.end()};
}

std::vector<std::string> next_level(const std::vector<std::string>& level, int jobs) {
    std::vector<std::vector<std::string>> buckets(level.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(jobs > 0 ? jobs : 1)
#endif
    for (long i = 0; i < static_cast<long>(level.size()); ++i)
        buckets[static_cast<std::size_t>(i)] = children_of(level[static_cast<std::size_t>(i)]);
    std::vector<std::string> merged;
    for (auto& b : buckets) merged.insert(merged.end(), b.begin(), b.end());
    std::sort(merged.begin(), merged.end());
    return merged;
}

}  // namespace

std::vector<std::vector<std::string>> enumerate_levels(int max_n, int jobs) {
    check_config(max_n);
    std::vector<std::vector<std::string>> levels;
    levels.push_back({to_graph6(Graph(1))});
    for (int k = 2; k <= max_n; ++k) levels.push_back(next_level(levels.back(), jobs));
    return levels;
}

void enumerate_stream(const EnumerationConfig& config,
                      const std::function<void(const Graph&)>& sink, int jobs) {
    check_config(config.n);
    auto levels = enumerate_levels(config.n, jobs);
    for (const auto& g6 : levels.back()) {
        Graph g = from_graph6(g6);
        if (config.connected_only && !is_connected(g)) continue;
        sink(g);
    }
}

std::vector<Graph> enumerate_graphs(const EnumerationConfig& config, int jobs) {
    std::vector<Graph> out;
    enumerate_stream(config, [&](const Graph& g) { out.push_back(g); }, jobs);
    return out;
}

std::uint64_t count_graphs(const EnumerationConfig& config, int jobs) {
    std::uint64_t n = 0;
    enumerate_stream(config, [&](const Graph&) { ++n; }, jobs);
    return n;
}

std::vector<std::string> naive_enumeration(int n) {
    if (n < 1 || n > 6) throw std::invalid_argument("naive enumeration is limited to n <= 6");
    std::set<std::string> forms;
    int nbits = n * (n - 1) / 2;
    for (Mask edges = 0; edges < (Mask{1} << nbits); ++edges) {
        Graph g(n);
        int idx = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i, ++idx)
                if (has_bit(edges, idx)) g.add_edge(i, j);
        forms.insert(canonical_form(g).graph6);
    }
    return {forms.begin(), forms.end()};
}

}  // namespace irlab
