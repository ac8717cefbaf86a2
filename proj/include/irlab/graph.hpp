#ifndef IRLAB_GRAPH_HPP
#define IRLAB_GRAPH_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace irlab {

// Vertex subsets are single 64-bit words; graph order is capped so that
// every set operation is one machine instruction.
using Mask = std::uint64_t;

constexpr int kMaxOrder = 64;

inline int popcount(Mask m) { return __builtin_popcountll(m); }

inline bool has_bit(Mask m, int v) { return (m >> v) & 1u; }

inline Mask bit(int v) { return Mask{1} << v; }

// All-ones mask over positions 0..n-1.
inline Mask full_mask(int n) {
    return n == 0 ? 0 : (n == 64 ? ~Mask{0} : (Mask{1} << n) - 1);
}

// Lowest set bit index; m must be nonzero.
inline int lowest_bit(Mask m) { return __builtin_ctzll(m); }

// Iterate set bits: for (Mask m = s; m; m &= m - 1) { int v = lowest_bit(m); ... }

class Graph6Error : public std::runtime_error {
public:
    enum class Kind { MalformedHeader, BadPadding, TooLarge, Truncated, BadCharacter };

    Graph6Error(Kind k, const std::string& msg) : std::runtime_error(msg), kind_(k) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

// Simple undirected graph on at most 64 vertices, adjacency stored as one
// neighborhood mask per vertex. Treated as immutable once shared.
class Graph {
public:
    Graph() = default;

    explicit Graph(int order) : n_(order), adj_(static_cast<std::size_t>(order), 0) {
        if (order < 0 || order > kMaxOrder)
            throw std::invalid_argument("graph order out of range 0..64");
    }

    Graph(int order, const std::vector<std::pair<int, int>>& edges) : Graph(order) {
        for (auto [u, v] : edges) add_edge(u, v);
    }

    int order() const { return n_; }

    int edge_count() const {
        int total = 0;
        for (Mask m : adj_) total += popcount(m);
        return total / 2;
    }

    Mask neighbors(int v) const {
        check_vertex(v);
        return adj_[static_cast<std::size_t>(v)];
    }

    int degree(int v) const { return popcount(neighbors(v)); }

    bool adjacent(int u, int v) const { return has_bit(neighbors(u), v); }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("self-loops are not allowed");
        adj_[static_cast<std::size_t>(u)] |= bit(v);
        adj_[static_cast<std::size_t>(v)] |= bit(u);
    }

    Mask vertex_mask() const { return full_mask(n_); }

    bool operator==(const Graph& o) const = default;

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("vertex index out of range");
    }

    int n_ = 0;
    std::vector<Mask> adj_;
};

// graph6 interchange (undirected, no ">>graph6<<" header line).
Graph from_graph6(const std::string& line);
std::string to_graph6(const Graph& g);

// N[v] = N(v) + v.
inline Mask closed_neighborhood(const Graph& g, int v) {
    return g.neighbors(v) | bit(v);
}

// N[X]; N[empty] is empty.
inline Mask closed_neighborhood_of_set(const Graph& g, Mask x) {
    Mask r = 0;
    for (Mask m = x; m; m &= m - 1) r |= closed_neighborhood(g, lowest_bit(m));
    return r;
}

// Subgraph induced by s, vertices relabeled by ascending original index.
Graph induced_subgraph(const Graph& g, Mask s);

// Induced subgraph with one vertex removed.
Graph delete_vertex(const Graph& g, int v);

// Vertex masks of the connected components.
std::vector<Mask> connected_components(const Graph& g);

inline bool is_connected(const Graph& g) {
    return connected_components(g).size() <= 1;
}

// Emit-only conveniences.
std::string to_adjacency_list(const Graph& g);
std::string to_dot(const Graph& g, const std::string& name = "g");

}  // namespace irlab

#endif
