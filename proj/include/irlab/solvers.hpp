#ifndef IRLAB_SOLVERS_HPP
#define IRLAB_SOLVERS_HPP

#include "irlab/graph.hpp"

namespace irlab {

struct SolveResult {
    int value = 0;
    Mask witness = 0;  // lexicographically smallest qualifying set (by mask value)
};

// Y subset of N[X].
inline bool dominates(const Graph& g, Mask x, Mask y) {
    return (y & ~closed_neighborhood_of_set(g, x)) == 0;
}

// PN(x,X) = N[x] - N[X - {x}]; requires x in X.
Mask private_neighborhood(const Graph& g, Mask x_set, int x);

// Every member of X has a nonempty private neighborhood; the empty set is
// irredundant.
bool is_irredundant(const Graph& g, Mask x_set);

// Maximality via the N[U] domination criterion, U = V - N[X]. Requires X
// irredundant.
bool is_maximal_irredundant(const Graph& g, Mask x_set);

// Maximality by definition: no one-vertex extension is irredundant (subsets
// of irredundant sets are irredundant, so single additions suffice).
bool is_maximal_irredundant_by_extension(const Graph& g, Mask x_set);

// Exact gamma. Iterative deepening with a greedy upper bound and
// undominated-vertex branching, solved per connected component.
SolveResult domination_number(const Graph& g);

// Exact ir: for ascending k, depth-first extension over vertices pruning
// non-irredundant partial sets, testing maximality at size k.
SolveResult irredundance_number(const Graph& g);

// Exhaustive 2^n oracles, guarded to n <= 20. Test-only companions.
SolveResult brute_force_gamma(const Graph& g);
SolveResult brute_force_ir(const Graph& g);

}  // namespace irlab

#endif
