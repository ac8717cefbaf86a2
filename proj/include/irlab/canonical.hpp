#ifndef IRLAB_CANONICAL_HPP
#define IRLAB_CANONICAL_HPP

#include <string>
#include <vector>

#include "irlab/graph.hpp"

namespace irlab {

// Canonical graph6 encoding of the relabeled-to-canonical graph. Equal forms
// iff isomorphic.
struct CanonicalForm {
    std::string graph6;
    bool operator==(const CanonicalForm&) const = default;
    auto operator<=>(const CanonicalForm&) const = default;
};

struct CanonicalResult {
    Graph graph;                  // the canonically relabeled graph
    std::vector<int> labeling;    // labeling[v] = canonical position of original v
    std::string graph6;           // encoding of `graph`

    // Original vertex occupying the last canonical position; the canonical
    // deletion vertex used by the enumerator.
    int last_vertex() const {
        for (std::size_t v = 0; v < labeling.size(); ++v)
            if (labeling[v] == static_cast<int>(labeling.size()) - 1) return static_cast<int>(v);
        return -1;
    }
};

// Iterated degree/neighborhood refinement plus backtracking over the coarsest
// partition; returns the relabeling with lexicographically smallest adjacency
// encoding among partition-consistent orders.
CanonicalResult canonicalize(const Graph& g);

CanonicalForm canonical_form(const Graph& g);

bool are_isomorphic(const Graph& g, const Graph& h);

}  // namespace irlab

#endif
