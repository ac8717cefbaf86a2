#include "irlab/solvers.hpp"

#include <stdexcept>
#include <vector>

namespace irlab {

Mask private_neighborhood(const Graph& g, Mask x_set, int x) {
    if (!has_bit(x_set, x)) throw std::invalid_argument("private_neighborhood: x not in X");
    return closed_neighborhood(g, x) & ~closed_neighborhood_of_set(g, x_set & ~bit(x));
}

bool is_irredundant(const Graph& g, Mask x_set) {
    for (Mask m = x_set; m; m &= m - 1)
        if (private_neighborhood(g, x_set, lowest_bit(m)) == 0) return false;
    return true;
}

bool is_maximal_irredundant(const Graph& g, Mask x_set) {
    if (!is_irredundant(g, x_set)) throw std::invalid_argument("is_maximal_irredundant: X not irredundant");
    Mask u = g.vertex_mask() & ~closed_neighborhood_of_set(g, x_set);
    Mask nu = closed_neighborhood_of_set(g, u);
    for (Mask m = nu; m; m &= m - 1) {
        int v = lowest_bit(m);
        Mask nv = closed_neighborhood(g, v);
        bool ok = false;
        for (Mask xm = x_set; xm && !ok; xm &= xm - 1)
            ok = (private_neighborhood(g, x_set, lowest_bit(xm)) & ~nv) == 0;
        if (!ok) return false;
    }
    return true;
}

bool is_maximal_irredundant_by_extension(const Graph& g, Mask x_set) {
    if (!is_irredundant(g, x_set)) return false;
    for (Mask m = g.vertex_mask() & ~x_set; m; m &= m - 1)
        if (is_irredundant(g, x_set | bit(lowest_bit(m)))) return false;
    return true;
}

namespace {

// Next larger mask with the same popcount (Gosper); masks of a fixed size in
// ascending integer order enumerate size-k sets lexicographically by value.
Mask next_subset_same_size(Mask m) {
    Mask c = m & (~m + 1);
    Mask r = m + c;
    return r | (((m ^ r) >> 2) / c);
}

template <typename Pred>
Mask lex_min_of_size(int n, int k, Pred&& pred) {
    if (k == 0) return pred(Mask{0}) ? Mask{0} : ~Mask{0};
    if (k > n) return ~Mask{0};
    Mask m = full_mask(k);
    Mask limit = full_mask(n);
    while (m <= limit) {
        if (pred(m)) return m;
        if (m == (limit & ~full_mask(n - k))) break;  // highest size-k mask
        m = next_subset_same_size(m);
    }
    return ~Mask{0};
}

struct GammaSearch {
    const Graph& g;
    Mask full;
    int max_cov;

    explicit GammaSearch(const Graph& gr) : g(gr), full(gr.vertex_mask()) {
        max_cov = 1;
        for (int v = 0; v < g.order(); ++v)
            max_cov = std::max(max_cov, popcount(closed_neighborhood(g, v)));
    }

    bool feasible(Mask dominated, int budget) {
        if (dominated == full) return true;
        int remaining = popcount(full & ~dominated);
        if (budget * max_cov < remaining) return false;
        if (budget == 0) return false;
        // Branch on an undominated vertex with the fewest dominators; one of
        // its closed neighbors must enter the set.
        int best_v = -1, best_deg = kMaxOrder + 1;
        for (Mask m = full & ~dominated; m; m &= m - 1) {
            int v = lowest_bit(m);
            int d = popcount(closed_neighborhood(g, v));
            if (d < best_deg) { best_deg = d; best_v = v; }
        }
        for (Mask m = closed_neighborhood(g, best_v); m; m &= m - 1) {
            int u = lowest_bit(m);
            if (feasible(dominated | closed_neighborhood(g, u), budget - 1)) return true;
        }
        return false;
    }
};

int gamma_value(const Graph& g) {
    if (g.order() == 0) return 0;
    GammaSearch search(g);
    // Greedy upper bound: always take the vertex covering the most
    // undominated vertices.
    Mask dominated = 0;
    int ub = 0;
    while (dominated != search.full) {
        int best_u = 0, best_gain = -1;
        for (int u = 0; u < g.order(); ++u) {
            int gain = popcount(closed_neighborhood(g, u) & ~dominated);
            if (gain > best_gain) { best_gain = gain; best_u = u; }
        }
        dominated |= closed_neighborhood(g, best_u);
        ++ub;
    }
    int lb = (g.order() + search.max_cov - 1) / search.max_cov;
    for (int k = lb; k < ub; ++k)
        if (search.feasible(0, k)) return k;
    return ub;
}

int ir_value(const Graph& g) {
    int n = g.order();
    if (n == 0) return 0;
    // Ascending k; subsets of irredundant sets are irredundant, so pruning
    // partial sets that lose irredundance is sound.
    struct Dfs {
        const Graph& g;
        int k;
        bool extend(Mask x, int next, int size) {
            if (size == k) return is_maximal_irredundant(g, x);
            for (int v = next; v < g.order(); ++v) {
                Mask cand = x | bit(v);
                if (is_irredundant(g, cand) && extend(cand, v + 1, size + 1)) return true;
            }
            return false;
        }
    };
    for (int k = 1; k <= n; ++k) {
        Dfs dfs{g, k};
        if (dfs.extend(0, 0, 0)) return k;
    }
    return n;  // unreachable: V(G) always contains a maximal irredundant set
}

std::vector<int> mask_to_vertices(Mask m) {
    std::vector<int> vs;
    for (; m; m &= m - 1) vs.push_back(lowest_bit(m));
    return vs;
}

// Both parameters are additive over components; solve each component on its
// induced subgraph and translate the witness back.
template <typename ValueFn, typename WitnessPred>
SolveResult solve_by_components(const Graph& g, ValueFn&& value_fn, WitnessPred&& witness_pred) {
    SolveResult total;
    for (Mask comp : connected_components(g)) {
        auto verts = mask_to_vertices(comp);
        Graph h = induced_subgraph(g, comp);
        int k = value_fn(h);
        Mask w = lex_min_of_size(h.order(), k,
                                 [&](Mask x) { return witness_pred(h, x); });
        total.value += k;
        for (Mask m = w; m; m &= m - 1)
            total.witness |= bit(verts[static_cast<std::size_t>(lowest_bit(m))]);
    }
    return total;
}

}  // namespace

SolveResult domination_number(const Graph& g) {
    return solve_by_components(
        g, [](const Graph& h) { return gamma_value(h); },
        [](const Graph& h, Mask x) { return dominates(h, x, h.vertex_mask()); });
}

SolveResult irredundance_number(const Graph& g) {
    return solve_by_components(
        g, [](const Graph& h) { return ir_value(h); },
        [](const Graph& h, Mask x) {
            return is_irredundant(h, x) && is_maximal_irredundant(h, x);
        });
}

SolveResult brute_force_gamma(const Graph& g) {
    int n = g.order();
    if (n > 20) throw std::invalid_argument("brute_force_gamma: n > 20");
    Mask full = g.vertex_mask();
    SolveResult best{n + 1, 0};
    for (Mask x = 0; ; ++x) {
        if (popcount(x) < best.value && dominates(g, x, full)) best = {popcount(x), x};
        if (x == full) break;
    }
    if (best.value == n + 1) best = {0, 0};  // only the 0-vertex graph
    return best;
}

SolveResult brute_force_ir(const Graph& g) {
    int n = g.order();
    if (n > 20) throw std::invalid_argument("brute_force_ir: n > 20");
    Mask full = g.vertex_mask();
    SolveResult best{n + 1, 0};
    for (Mask x = 0; ; ++x) {
        if (popcount(x) < best.value && is_maximal_irredundant_by_extension(g, x) && x != 0)
            best = {popcount(x), x};
        if (x == full) break;
    }
    if (best.value == n + 1) best = {0, 0};
    return best;
}

}  // namespace irlab
