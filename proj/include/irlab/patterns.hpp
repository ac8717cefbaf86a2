#ifndef IRLAB_PATTERNS_HPP
#define IRLAB_PATTERNS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "irlab/graph.hpp"

namespace irlab {

// Injective pattern-vertex -> host-vertex map witnessing an induced
// occurrence: pattern edges and non-edges are both preserved.
struct Embedding {
    std::vector<int> map;
};

// Independent validity checker, deliberately not sharing code with the search.
bool embedding_is_induced(const Graph& host, const Graph& pattern, const Embedding& e);

// Backtracking over pattern vertices in a static order (descending pattern
// degree), filtering candidates by degree and adjacency consistency with the
// already-mapped vertices. Disconnected patterns are handled by the same
// code path.
std::optional<Embedding> find_induced(const Graph& host, const Graph& pattern);

bool is_p6_free(const Graph& g);

struct CatalogEntry {
    std::string name;
    Graph graph;
    int expected_ir;
    int expected_gamma;
    std::string provenance;
};

// All 22 named pattern graphs: P4, P5, P6, C6, TWO_P4, G1-G5, H, F1-F11.
const std::vector<CatalogEntry>& catalog();

const CatalogEntry& catalog_entry(const std::string& name);  // throws on unknown name

// Scan the named patterns smallest-first (ties by catalog index), skipping
// patterns larger than the host; first hit wins.
std::optional<std::pair<std::string, Embedding>> find_forbidden_witness(
    const Graph& g, const std::vector<std::string>& names);

// True iff the graph has no pair of induced-P4 vertex sequences
// (a_i, b_i, c_i, d_i) with b1, b2, c1, c2, d1, d2 pairwise distinct and
// a1, a2 outside {c1, c2, d1, d2}.
bool bollobas_cockayne_condition(const Graph& g);

}  // namespace irlab

#endif
