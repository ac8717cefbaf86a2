#ifndef IRLAB_ENUMERATE_HPP
#define IRLAB_ENUMERATE_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "irlab/graph.hpp"

namespace irlab {

struct EnumerationConfig {
    int n = 1;
    bool connected_only = false;
};

// One canonically labeled representative per isomorphism class on exactly
// config.n vertices, in canonical-form lexicographic order. Generation is by
// canonical augmentation: each (n-1)-vertex representative is extended by one
// vertex over all neighbor masks, and a child survives iff deleting its
// canonical-last vertex reproduces the parent class. jobs > 1 parallelizes
// over parents (OpenMP); results are identical to the serial path.
std::vector<Graph> enumerate_graphs(const EnumerationConfig& config, int jobs = 1);

void enumerate_stream(const EnumerationConfig& config,
                      const std::function<void(const Graph&)>& sink, int jobs = 1);

std::uint64_t count_graphs(const EnumerationConfig& config, int jobs = 1);

// Canonical graph6 strings for every level 1..max_n; level k is at index k-1.
std::vector<std::vector<std::string>> enumerate_levels(int max_n, int jobs = 1);

// Test oracle: all 2^(n(n-1)/2) labeled graphs deduplicated by canonical
// form. Feasible through n = 6.
std::vector<std::string> naive_enumeration(int n);

}  // namespace irlab

#endif
