#include "irlab/patterns.hpp"

#include <algorithm>
#include <stdexcept>

namespace irlab {

bool embedding_is_induced(const Graph& host, const Graph& pattern, const Embedding& e) {
    int np = pattern.order();
    if (static_cast<int>(e.map.size()) != np) return false;
    Mask used = 0;
    for (int hv : e.map) {
        if (hv < 0 || hv >= host.order() || has_bit(used, hv)) return false;
        used |= bit(hv);
    }
    for (int u = 0; u < np; ++u)
        for (int v = u + 1; v < np; ++v)
            if (pattern.adjacent(u, v) != host.adjacent(e.map[u], e.map[v])) return false;
    return true;
}

namespace {

struct InducedSearch {
    const Graph& host;
    const Graph& pattern;
    std::vector<int> order;   // pattern vertices, descending degree
    std::vector<int> assign;  // pattern vertex -> host vertex or -1

    bool extend(std::size_t depth, Mask used) {
        if (depth == order.size()) return true;
        int p = order[depth];
        Mask pn = pattern.neighbors(p);
        for (int h = 0; h < host.order(); ++h) {
            if (has_bit(used, h)) continue;
            if (host.degree(h) < pattern.degree(p)) continue;
            bool ok = true;
            for (std::size_t d = 0; d < depth && ok; ++d)
                ok = has_bit(pn, order[d]) == host.adjacent(h, assign[order[d]]);
            if (!ok) continue;
            assign[p] = h;
            if (extend(depth + 1, used | bit(h))) return true;
        }
        return false;
    }
};

}  // namespace

std::optional<Embedding> find_induced(const Graph& host, const Graph& pattern) {
    if (pattern.order() > host.order()) return std::nullopt;
    InducedSearch s{host, pattern, {}, {}};
    s.order.resize(static_cast<std::size_t>(pattern.order()));
    for (int v = 0; v < pattern.order(); ++v) s.order[static_cast<std::size_t>(v)] = v;
    std::stable_sort(s.order.begin(), s.order.end(),
                     [&](int a, int b) { return pattern.degree(a) > pattern.degree(b); });
    s.assign.assign(static_cast<std::size_t>(pattern.order()), -1);
    if (!s.extend(0, 0)) return std::nullopt;
    return Embedding{std::move(s.assign)};
}

bool is_p6_free(const Graph& g) {
    return !find_induced(g, catalog_entry("P6").graph).has_value();
}

namespace {

Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle_graph(int n) {
    Graph g = path_graph(n);
    g.add_edge(0, n - 1);
    return g;
}

using Edges = std::vector<std::pair<int, int>>;

Edges append(Edges e, const Edges& extra) {
    e.insert(e.end(), extra.begin(), extra.end());
    return e;
}

// Shared 8-vertex half of F7-F11: offset o maps local vertices
// a,b,c,p,q,d,e,f to o+0..o+7; vertex w is the shared hub.
Edges half_block(int o, int w) {
    Edges e = {{o + 0, o + 3}, {o + 3, o + 5}, {o + 5, o + 0}, {o + 0, o + 1},
               {o + 1, o + 2}, {o + 2, o + 7}, {o + 7, o + 6}, {o + 6, o + 5},
               {o + 1, o + 6}, {o + 6, o + 4}, {o + 4, o + 2}};
    Edges hub = {{o + 3, w}, {o + 0, w}, {o + 6, w}, {o + 1, w}, {o + 4, w}, {o + 7, w}};
    return append(std::move(e), hub);
}

std::vector<CatalogEntry> build_catalog() {
    std::vector<CatalogEntry> cat;
    auto add = [&](std::string name, Graph g, int ir, int gamma, std::string prov) {
        cat.push_back({std::move(name), std::move(g), ir, gamma, std::move(prov)});
    };

    add("P4", path_graph(4), 2, 2, "path on 4 vertices");
    add("P5", path_graph(5), 2, 2, "path on 5 vertices");
    add("P6", path_graph(6), 2, 2, "path on 6 vertices; the class-defining exclusion");
    add("C6", cycle_graph(6), 2, 2, "cycle on 6 vertices");
    {
        Graph g(8);
        for (int o : {0, 4})
            for (int i = 0; i < 3; ++i) g.add_edge(o + i, o + i + 1);
        add("TWO_P4", g, 4, 4, "disjoint union of two P4");
    }

    // G1-G5 on vertices a1=0, a2=1, a3=2, b1=3, b2=4, b3=5 (two columns read
    // bottom to top) plus apex t=6 for G3-G5.
    Edges g1 = {{0, 1}, {1, 2}, {2, 5}, {5, 4}, {4, 3}, {1, 4}};
    add("G1", Graph(6, g1), 2, 2, "two P3 columns joined by top edge and middle rung");
    add("G2", Graph(6, append(g1, {{0, 3}})), 2, 2, "C6 with one antipodal chord");
    Edges g3 = {{0, 1}, {1, 2}, {2, 6}, {6, 5}, {5, 4}, {4, 3}, {1, 4}};
    add("G3", Graph(7, g3), 3, 3, "G1 with an apex subdividing the top edge");
    Edges g4 = append(g3, {{2, 5}});
    add("G4", Graph(7, g4), 2, 3, "G3 plus the direct top edge; isomorphic to F1");
    add("G5", Graph(7, append(g4, {{0, 3}})), 2, 2, "G4 with the bottom rung closed");
    add("H", Graph(6, {{0, 1}, {1, 2}, {2, 5}, {5, 4}, {4, 3}, {1, 3}, {2, 4}}), 2, 2,
        "G4 with one pendant vertex deleted");

    // F1-F6 on vertices v=0, f1=1, f2=2, y1=3, y2=4, u1=5, u2=6 and, where
    // present, extra vertices 7 (a) and 8 (b).
    Edges f1 = {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 4}, {3, 4}, {3, 5}, {4, 6}};
    add("F1", Graph(7, f1), 2, 3, "triangle v f1 f2 with private pendant paths; minimal ir<gamma witness");
    add("F2", Graph(8, append(f1, {{5, 6}, {3, 7}, {4, 7}})), 2, 3,
        "F1 with the top edge closed and a vertex attached to y1, y2");
    Edges f3 = {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 4}, {3, 4}, {3, 5}, {4, 6},
                {5, 6}, {7, 8}, {3, 8}, {8, 6}, {5, 7}, {7, 4}};
    add("F3", Graph(9, f3), 2, 3, "F1 closed at the top with crossed pair a, b");
    add("F4", Graph(9, append(f3, {{7, 3}})), 2, 3, "F3 plus the edge a y1");
    Edges f5 = {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 4}, {3, 4}, {3, 5}, {4, 6},
                {5, 6}, {3, 7}, {4, 8}, {3, 8}, {8, 6}, {5, 7}, {7, 4}};
    add("F5", Graph(9, f5), 2, 3, "F1 closed at the top, a and b each joined to both y1 and y2");
    add("F6", Graph(9, append(f5, {{7, 8}})), 2, 3, "F5 plus the edge a b");

    // F7-F9: two symmetric 8-vertex blocks sharing the hub w=8; the second
    // block occupies 9..16. F8 adds one block chord, F9 both.
    Edges f7 = append(half_block(0, 8), half_block(9, 8));
    add("F7", Graph(17, f7), 4, 5, "two symmetric blocks on a shared hub");
    add("F8", Graph(17, append(f7, {{1, 4}})), 4, 5, "F7 plus one block chord");
    add("F9", Graph(17, append(f7, {{1, 4}, {10, 13}})), 4, 5, "F8 plus the mirrored chord");

    // F10, F11: the F7 left block plus an asymmetric right block on the same
    // hub. Right block vertices: sa=9, sb=10, sc=11, st=12, su=13, sd=14,
    // se=15, sf=16.
    Edges right = {{15, 14}, {14, 9}, {9, 10}, {10, 11}, {11, 16}, {16, 15},
                   {15, 13}, {13, 12}, {12, 10}, {12, 16}, {11, 13},
                   {9, 8},  {14, 8}, {11, 8},  {16, 8},  {12, 8},  {13, 8}};
    Edges f10 = append(half_block(0, 8), right);
    add("F10", Graph(17, f10), 4, 5, "one symmetric and one skewed block on a shared hub");
    add("F11", Graph(17, append(f10, {{1, 4}})), 4, 5, "F10 plus the block chord");

    return cat;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> cat = build_catalog();
    return cat;
}

const CatalogEntry& catalog_entry(const std::string& name) {
    for (const auto& e : catalog())
        if (e.name == name) return e;
    throw std::invalid_argument("unknown catalog name: " + name);
}

std::optional<std::pair<std::string, Embedding>> find_forbidden_witness(
    const Graph& g, const std::vector<std::string>& names) {
    if (names.empty()) throw std::invalid_argument("find_forbidden_witness: empty name list");
    std::vector<const CatalogEntry*> entries;
    entries.reserve(names.size());
    for (const auto& n : names) entries.push_back(&catalog_entry(n));
    std::stable_sort(entries.begin(), entries.end(), [](const CatalogEntry* a, const CatalogEntry* b) {
        return a->graph.order() < b->graph.order();
    });
    for (const CatalogEntry* e : entries) {
        if (e->graph.order() > g.order()) continue;
        if (auto emb = find_induced(g, e->graph)) return std::make_pair(e->name, *emb);
    }
    return std::nullopt;
}

bool bollobas_cockayne_condition(const Graph& g) {
    // All induced P4 vertex sequences (each path contributes both directions).
    struct Seq { int a, b, c, d; };
    std::vector<Seq> seqs;
    int n = g.order();
    for (int a = 0; a < n; ++a)
        for (Mask mb = g.neighbors(a); mb; mb &= mb - 1) {
            int b = lowest_bit(mb);
            for (Mask mc = g.neighbors(b) & ~bit(a) & ~g.neighbors(a); mc; mc &= mc - 1) {
                int c = lowest_bit(mc);
                for (Mask md = g.neighbors(c) & ~g.neighbors(a) & ~g.neighbors(b) & ~bit(a) & ~bit(b);
                     md; md &= md - 1)
                    seqs.push_back({a, b, c, lowest_bit(md)});
            }
        }
    auto bad_pair = [](const Seq& s, const Seq& t) {
        Mask mid = 0;
        for (int v : {s.b, s.c, s.d, t.b, t.c, t.d}) {
            if (has_bit(mid, v)) return false;  // not pairwise distinct
            mid |= bit(v);
        }
        Mask tails = bit(s.c) | bit(s.d) | bit(t.c) | bit(t.d);
        return !has_bit(tails, s.a) && !has_bit(tails, t.a);
    };
    for (std::size_t i = 0; i < seqs.size(); ++i)
        for (std::size_t j = i; j < seqs.size(); ++j)
            if (bad_pair(seqs[i], seqs[j])) return false;
    return true;
}

}  // namespace irlab
