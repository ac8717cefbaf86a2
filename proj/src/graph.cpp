#include "irlab/graph.hpp"

#include <sstream>

namespace irlab {

namespace {

// Column-major upper-triangle bit order: x(0,1), x(0,2), x(1,2), x(0,3), ...
std::vector<bool> triangle_bits(const Graph& g) {
    std::vector<bool> bits;
    int n = g.order();
    bits.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) bits.push_back(g.adjacent(i, j));
    return bits;
}

}  // namespace

std::string to_graph6(const Graph& g) {
    int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        // 63 <= n <= 64: three-byte order field introduced by '~'.
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    auto bits = triangle_bits(g);
    for (std::size_t i = 0; i < bits.size(); i += 6) {
        int group = 0;
        for (std::size_t k = 0; k < 6; ++k) {
            group <<= 1;
            if (i + k < bits.size() && bits[i + k]) group |= 1;
        }
        out.push_back(static_cast<char>(group + 63));
    }
    return out;
}

Graph from_graph6(const std::string& line) {
    using Kind = Graph6Error::Kind;
    if (line.empty()) throw Graph6Error(Kind::MalformedHeader, "graph6: empty line");
    for (char c : line)
        if (c < 63 || c > 126)
            throw Graph6Error(Kind::BadCharacter, "graph6: byte outside printable range 63..126");

    std::size_t pos = 0;
    long n;
    if (line[0] != '~') {
        n = line[0] - 63;
        pos = 1;
    } else {
        if (line.size() >= 2 && line[1] == '~')
            throw Graph6Error(Kind::TooLarge, "graph6: eight-byte order field implies n > 64");
        if (line.size() < 4)
            throw Graph6Error(Kind::MalformedHeader, "graph6: truncated order field");
        n = (static_cast<long>(line[1] - 63) << 12) | ((line[2] - 63) << 6) | (line[3] - 63);
        if (n <= 62)
            throw Graph6Error(Kind::MalformedHeader, "graph6: non-minimal order encoding");
        pos = 4;
    }
    if (n > kMaxOrder)
        throw Graph6Error(Kind::TooLarge, "graph6: order " + std::to_string(n) + " exceeds 64");

    long nbits = n * (n - 1) / 2;
    std::size_t need = static_cast<std::size_t>((nbits + 5) / 6);
    if (line.size() - pos < need)
        throw Graph6Error(Kind::Truncated, "graph6: adjacency bytes missing");
    if (line.size() - pos > need)
        throw Graph6Error(Kind::BadPadding, "graph6: trailing bytes after adjacency data");

    Graph g(static_cast<int>(n));
    long index = 0;
    for (std::size_t b = 0; b < need; ++b) {
        int group = line[pos + b] - 63;
        for (int k = 5; k >= 0; --k, ++index) {
            bool set = (group >> k) & 1;
            if (index >= nbits) {
                if (set) throw Graph6Error(Kind::BadPadding, "graph6: nonzero padding bits");
                continue;
            }
            if (set) {
                // Recover (i, j) from the running column-major index.
                long t = index;
                int j = 1;
                while (t >= j) { t -= j; ++j; }
                g.add_edge(static_cast<int>(t), j);
            }
        }
    }
    return g;
}

Graph induced_subgraph(const Graph& g, Mask s) {
    std::vector<int> verts;
    for (Mask m = s; m; m &= m - 1) verts.push_back(lowest_bit(m));
    Graph h(static_cast<int>(verts.size()));
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (g.adjacent(verts[i], verts[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
    return h;
}

Graph delete_vertex(const Graph& g, int v) {
    return induced_subgraph(g, g.vertex_mask() & ~bit(v));
}

std::vector<Mask> connected_components(const Graph& g) {
    std::vector<Mask> comps;
    Mask unseen = g.vertex_mask();
    while (unseen) {
        Mask comp = bit(lowest_bit(unseen));
        for (;;) {
            Mask grown = comp;
            for (Mask m = comp; m; m &= m - 1) grown |= g.neighbors(lowest_bit(m));
            if (grown == comp) break;
            comp = grown;
        }
        comps.push_back(comp);
        unseen &= ~comp;
    }
    return comps;
}

std::string to_adjacency_list(const Graph& g) {
    std::ostringstream os;
    for (int v = 0; v < g.order(); ++v) {
        os << v << ":";
        for (Mask m = g.neighbors(v); m; m &= m - 1) os << ' ' << lowest_bit(m);
        os << '\n';
    }
    return os.str();
}

std::string to_dot(const Graph& g, const std::string& name) {
    std::ostringstream os;
    os << "graph " << name << " {\n";
    for (int v = 0; v < g.order(); ++v) os << "  " << v << ";\n";
    for (int v = 0; v < g.order(); ++v)
        for (Mask m = g.neighbors(v) & ~full_mask(v + 1); m; m &= m - 1)
            os << "  " << v << " -- " << lowest_bit(m) << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace irlab
