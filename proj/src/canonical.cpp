#include "irlab/canonical.hpp"

#include <algorithm>
#include <array>

namespace irlab {

namespace {

// Ordered partition of the vertex set as a list of cell masks. Cell order is
// part of the invariant: splits insert sub-cells sorted by their signature,
// so the whole partition is labeling-invariant.
using Partition = std::vector<Mask>;

void refine(const Graph& g, Partition& cells) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t ci = 0; ci < cells.size(); ++ci) {
            if (popcount(cells[ci]) <= 1) continue;
            // Signature of v: degree into every current cell.
            std::vector<std::pair<std::vector<int>, int>> keyed;
            for (Mask m = cells[ci]; m; m &= m - 1) {
                int v = lowest_bit(m);
                std::vector<int> key;
                key.reserve(cells.size());
                for (Mask c : cells) key.push_back(popcount(g.neighbors(v) & c));
                keyed.emplace_back(std::move(key), v);
            }
            std::sort(keyed.begin(), keyed.end());
            if (keyed.front().first == keyed.back().first) continue;
            std::vector<Mask> groups;
            for (std::size_t k = 0; k < keyed.size(); ++k) {
                if (k == 0 || keyed[k].first != keyed[k - 1].first) groups.push_back(0);
                groups.back() |= bit(keyed[k].second);
            }
            cells.erase(cells.begin() + static_cast<long>(ci));
            cells.insert(cells.begin() + static_cast<long>(ci), groups.begin(), groups.end());
            changed = true;
        }
    }
}

// Backtracking search for the minimum adjacency encoding. Columns are the
// upper-triangle bits of one placed vertex against all earlier ones, with the
// earliest position most significant; comparing column by column matches the
// graph6 bit order.
class CanonSearch {
public:
    explicit CanonSearch(const Graph& g) : g_(g), n_(g.order()) {}

    CanonicalResult run() {
        placed_.assign(static_cast<std::size_t>(n_), -1);
        cols_.assign(static_cast<std::size_t>(n_), 0);
        have_best_ = false;
        if (n_ == 0) {
            best_placed_.clear();
        } else {
            Partition cells{full_mask(n_)};
            refine(g_, cells);
            descend(cells, 0, /*less=*/true);
        }
        CanonicalResult res;
        res.labeling.assign(static_cast<std::size_t>(n_), -1);
        res.graph = Graph(n_);
        for (int p = 0; p < n_; ++p) res.labeling[static_cast<std::size_t>(best_placed_[p])] = p;
        for (int p = 0; p < n_; ++p)
            for (Mask m = best_cols_[static_cast<std::size_t>(p)]; m; m &= m - 1)
                res.graph.add_edge(lowest_bit(m), p);
        res.graph6 = to_graph6(res.graph);
        return res;
    }

private:
    // a < b in bit order "lowest index most significant, 0 before 1".
    static bool col_less(Mask a, Mask b) {
        Mask d = a ^ b;
        if (!d) return false;
        return (a & (d & ~(d - 1))) == 0;
    }

    // less: current path is already strictly below the best (or no best yet).
    void descend(Partition cells, std::size_t next_cell, bool less) {
        // Pull leading singleton cells and place them.
        while (next_cell < cells.size() && popcount(cells[next_cell]) == 1) {
            int v = lowest_bit(cells[next_cell]);
            int pos = static_cast<int>(next_cell);
            Mask col = 0;
            for (int i = 0; i < pos; ++i)
                if (g_.adjacent(v, placed_[static_cast<std::size_t>(i)])) col |= bit(i);
            if (!less && have_best_) {
                Mask bc = best_cols_[static_cast<std::size_t>(pos)];
                if (col_less(bc, col)) return;  // worse than best, prune
                if (col_less(col, bc)) less = true;
            }
            placed_[static_cast<std::size_t>(pos)] = v;
            cols_[static_cast<std::size_t>(pos)] = col;
            ++next_cell;
        }
        if (next_cell == cells.size()) {
            if (less || !have_best_) {
                best_placed_ = placed_;
                best_cols_ = cols_;
                have_best_ = true;
                ++best_gen_;
            }
            return;
        }
        Mask target = cells[next_cell];
        for (Mask m = target; m; m &= m - 1) {
            int v = lowest_bit(m);
            Partition child = cells;
            child[next_cell] = bit(v);
            child.insert(child.begin() + static_cast<long>(next_cell) + 1, target & ~bit(v));
            refine(g_, child);
            std::uint64_t gen = best_gen_;
            descend(std::move(child), next_cell, less);
            // A best update inside the subtree means the current path prefix
            // now equals the best exactly, so later siblings start from
            // "equal so far" regardless of the state we entered with.
            if (best_gen_ != gen) less = false;
        }
    }

    const Graph& g_;
    int n_;
    std::vector<int> placed_;
    std::vector<Mask> cols_;
    std::vector<int> best_placed_;
    std::vector<Mask> best_cols_;
    bool have_best_ = false;
    std::uint64_t best_gen_ = 0;
};

}  // namespace

CanonicalResult canonicalize(const Graph& g) {
    CanonSearch s(g);
    return s.run();
}

CanonicalForm canonical_form(const Graph& g) {
    return CanonicalForm{canonicalize(g).graph6};
}

bool are_isomorphic(const Graph& g, const Graph& h) {
    if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
    return canonical_form(g) == canonical_form(h);
}

}  // namespace irlab
