#include "core/ladder_graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "core/ints.hpp"

namespace ringlad {

int LadderGraph::degree(int vertex) const {
    int d = 0;
    for (const Edge& e : edges) {
        if (e.u == vertex) ++d;
        if (e.v == vertex) ++d;
    }
    return d;
}

bool LadderGraph::is_cubic() const {
    for (int v = 0; v < vertex_count(); ++v)
        if (degree(v) != 3) return false;
    return true;
}

int LadderGraph::edge_by_label(const std::string& label) const {
    for (int i = 0; i < edge_count(); ++i)
        if (edges[static_cast<size_t>(i)].label == label) return i;
    return -1;
}

int LadderGraph::vertex_by_label(const std::string& label) const {
    for (int i = 0; i < vertex_count(); ++i)
        if (vertex_labels[static_cast<size_t>(i)] == label) return i;
    return -1;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    }
    bool merge(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[static_cast<size_t>(a)] = b;
        return true;
    }
};

void require(bool cond, const std::string& what) {
    if (!cond) throw internal_error("LadderGraph invariant failed: " + what);
}

}  // namespace

void LadderGraph::validate() const {
    const int V = vertex_count();
    const int E = edge_count();
    for (const Edge& e : edges) require(e.u >= 0 && e.u < V && e.v >= 0 && e.v < V, "edge endpoint out of range");

    // tree edges form a spanning tree, cotree is exactly the rest
    UnionFind uf(V);
    int tree_edges = 0;
    for (const Edge& e : edges) {
        if (!e.tree) continue;
        ++tree_edges;
        require(uf.merge(e.u, e.v), "tree edges contain a cycle");
    }
    require(tree_edges == V - 1, "tree edge count is not |V|-1");
    std::set<int> cotree_set(cotree.begin(), cotree.end());
    require(static_cast<int>(cotree_set.size()) == static_cast<int>(cotree.size()), "duplicate cotree entry");
    require(static_cast<int>(cotree.size()) == E - tree_edges, "cotree size mismatch");
    for (int id : cotree) require(!edges[static_cast<size_t>(id)].tree, "tree edge listed as cotree");
    require(betti() == static_cast<int>(cotree.size()), "Betti number disagrees with cotree count");

    if (kind == LadderKind::ringel) {
        require(V == 2 * n && E == 3 * n, "Ringel ladder size");
        require(is_cubic(), "Ringel ladder must be cubic");
        require(betti() == n + 1, "Ringel Betti number");
        require(edges[static_cast<size_t>(cotree.front())].label == "e", "first cotree edge must be e");
        for (int i = 1; i <= n; ++i)
            require(edges[static_cast<size_t>(cotree[static_cast<size_t>(i)])].label == "a" + std::to_string(i),
                    "cotree order must be e,a_1..a_n");

        // endpoint pattern of the drawing
        auto incident_labels = [&](int vertex) {
            std::set<std::string> labels;
            for (const Edge& e : edges)
                if (e.u == vertex || e.v == vertex) labels.insert(e.label);
            return labels;
        };
        require(incident_labels(0) == std::set<std::string>{"a1", "c1", "e"}, "v_1 incidence");
        require(incident_labels(n) ==
                    std::set<std::string>{"a" + std::to_string(n), "c" + std::to_string(n), "e"},
                "v_{n+1} incidence");
        for (int i = 1; i <= n - 1; ++i) {
            require(incident_labels(i) == std::set<std::string>{"c" + std::to_string(i),
                                                                "c" + std::to_string(i + 1),
                                                                "b" + std::to_string(i)},
                    "v_{i+1} incidence");
            require(incident_labels(n + i) == std::set<std::string>{"a" + std::to_string(i),
                                                                    "a" + std::to_string(i + 1),
                                                                    "b" + std::to_string(i)},
                    "u_{i+1} incidence");
        }

        // every dart appears exactly once in its tail vertex's rotation
        require(static_cast<int>(ref_rotation.size()) == V, "rotation table size");
        std::vector<int> seen(static_cast<size_t>(dart_count()), 0);
        for (int v = 0; v < V; ++v)
            for (int d : ref_rotation[static_cast<size_t>(v)]) {
                require(d >= 0 && d < dart_count(), "rotation dart id range");
                require(dart_tail(d) == v, "rotation dart not anchored at its vertex");
                seen[static_cast<size_t>(d)] += 1;
            }
        for (int c : seen) require(c == 1, "dart missing or repeated in rotations");
    } else {
        require(V == 2 * n && E == 3 * n, "closed-end ladder size");
        require(betti() == n + 1, "closed-end Betti number");
    }
}

LadderGraph build_ringel(int n) {
    if (n < 2)
        throw std::invalid_argument(
            "build_ringel: n must be >= 2 (the drawing and the matrix recurrences need at least two rungs)");
    LadderGraph g;
    g.kind = LadderKind::ringel;
    g.n = n;

    // vertex ids: v_i -> i-1 (i = 1..n+1), u_j -> n+j-1 (j = 2..n)
    for (int i = 1; i <= n + 1; ++i) g.vertex_labels.push_back("v" + std::to_string(i));
    for (int j = 2; j <= n; ++j) g.vertex_labels.push_back("u" + std::to_string(j));
    auto vid = [&](int i) { return i - 1; };
    auto uid = [&](int j) { return n + j - 1; };

    // edge ids: e = 0, a_i = i, b_j = n+j, c_k = 2n-1+k
    g.edges.push_back({"e", vid(1), vid(n + 1), false});
    for (int i = 1; i <= n; ++i) {
        int from = (i == 1) ? vid(1) : uid(i);
        int to = (i == n) ? vid(n + 1) : uid(i + 1);
        g.edges.push_back({"a" + std::to_string(i), from, to, false});
    }
    for (int j = 1; j <= n - 1; ++j) g.edges.push_back({"b" + std::to_string(j), vid(j + 1), uid(j + 1), true});
    for (int k = 1; k <= n; ++k) g.edges.push_back({"c" + std::to_string(k), vid(k), vid(k + 1), true});

    g.cotree.resize(static_cast<size_t>(n) + 1);
    std::iota(g.cotree.begin(), g.cotree.end(), 0);

    // Reference clockwise rotations read off the drawing.
    auto out_dart = [&](int edge, int vertex) {
        const LadderGraph::Edge& e = g.edges[static_cast<size_t>(edge)];
        if (e.u == vertex) return 2 * edge;
        if (e.v == vertex) return 2 * edge + 1;
        throw internal_error("out_dart: edge not incident");
    };
    const int e_id = 0;
    auto a_id = [&](int i) { return i; };
    auto b_id = [&](int j) { return n + j; };
    auto c_id = [&](int k) { return 2 * n - 1 + k; };

    g.ref_rotation.resize(static_cast<size_t>(g.vertex_count()));
    g.ref_rotation[static_cast<size_t>(vid(1))] = {out_dart(e_id, vid(1)), out_dart(c_id(1), vid(1)),
                                                   out_dart(a_id(1), vid(1))};
    for (int k = 1; k <= n - 1; ++k)
        g.ref_rotation[static_cast<size_t>(vid(k + 1))] = {out_dart(c_id(k), vid(k + 1)),
                                                           out_dart(c_id(k + 1), vid(k + 1)),
                                                           out_dart(b_id(k), vid(k + 1))};
    g.ref_rotation[static_cast<size_t>(vid(n + 1))] = {out_dart(e_id, vid(n + 1)), out_dart(a_id(n), vid(n + 1)),
                                                       out_dart(c_id(n), vid(n + 1))};
    for (int j = 1; j <= n - 1; ++j)
        g.ref_rotation[static_cast<size_t>(uid(j + 1))] = {out_dart(a_id(j), uid(j + 1)),
                                                           out_dart(b_id(j), uid(j + 1)),
                                                           out_dart(a_id(j + 1), uid(j + 1))};
    g.validate();
    return g;
}

LadderGraph build_closed_end(int k) {
    if (k < 1) throw std::invalid_argument("build_closed_end: k must be >= 1");
    LadderGraph g;
    g.kind = LadderKind::closed_end;
    g.n = k;
    for (int i = 1; i <= k; ++i) g.vertex_labels.push_back("v" + std::to_string(i));
    for (int i = 1; i <= k; ++i) g.vertex_labels.push_back("u" + std::to_string(i));
    auto vid = [&](int i) { return i - 1; };
    auto uid = [&](int i) { return k + i - 1; };

    for (int i = 1; i <= k; ++i) g.edges.push_back({"r" + std::to_string(i), vid(i), uid(i), true});
    for (int i = 1; i <= k - 1; ++i) g.edges.push_back({"t" + std::to_string(i), vid(i), vid(i + 1), true});
    for (int i = 1; i <= k - 1; ++i) g.edges.push_back({"s" + std::to_string(i), uid(i), uid(i + 1), false});
    g.edges.push_back({"r1'", vid(1), uid(1), false});
    g.edges.push_back({k == 1 ? "r1''" : "r" + std::to_string(k) + "'", vid(k), uid(k), false});

    for (int i = 0; i < g.edge_count(); ++i)
        if (!g.edges[static_cast<size_t>(i)].tree) g.cotree.push_back(i);
    g.validate();
    return g;
}

std::string LadderGraph::dot() const {
    std::ostringstream out;
    out << "graph " << (kind == LadderKind::ringel ? "R" + std::to_string(n - 1) : "L" + std::to_string(n))
        << " {\n";
    for (const std::string& v : vertex_labels) out << "  \"" << v << "\";\n";
    for (const Edge& e : edges) {
        out << "  \"" << vertex_labels[static_cast<size_t>(e.u)] << "\" -- \""
            << vertex_labels[static_cast<size_t>(e.v)] << "\" [label=\"" << e.label << '"';
        if (e.tree) out << ", style=bold";
        out << "];\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace ringlad
