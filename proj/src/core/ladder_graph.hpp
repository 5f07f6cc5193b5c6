#ifndef RINGLAD_LADDER_GRAPH_HPP
#define RINGLAD_LADDER_GRAPH_HPP

#include <array>
#include <string>
#include <vector>

namespace ringlad {

enum class LadderKind { ringel, closed_end };

// Labeled ladder graph with explicit edge ends (darts). Dart 2*e runs from
// edges[e].u to edges[e].v, dart 2*e+1 the other way.
//
// Ringel ladders follow the fixed drawing: vertices v_1..v_{n+1} on the top
// arc plus u_2..u_n on the bottom, edges e (the long chord), rungs b_j,
// top path c_k and bottom path a_i. The spanning tree is {all b_j, all c_k},
// so the cotree edges are exactly e, a_1, ..., a_n, and their order fixes
// the overlap-matrix row indices: row 0 = e, row i = a_i.
class LadderGraph {
public:
    struct Edge {
        std::string label;
        int u = 0, v = 0;
        bool tree = false;
    };

    LadderKind kind = LadderKind::ringel;
    int n = 0;  // ringel: builds R_{n-1}; closed_end: L_n
    std::vector<std::string> vertex_labels;
    std::vector<Edge> edges;
    std::vector<int> cotree;  // edge ids, fixed deterministic order
    // Ringel only: per vertex, the three outgoing darts in the reference
    // ("black", clockwise in the drawing) cyclic order.
    std::vector<std::array<int, 3>> ref_rotation;

    int vertex_count() const { return static_cast<int>(vertex_labels.size()); }
    int edge_count() const { return static_cast<int>(edges.size()); }
    int betti() const { return edge_count() - vertex_count() + 1; }
    int dart_count() const { return 2 * edge_count(); }

    int dart_edge(int d) const { return d >> 1; }
    int dart_tail(int d) const {
        const Edge& e = edges[static_cast<size_t>(d >> 1)];
        return (d & 1) ? e.v : e.u;
    }
    int dart_head(int d) const {
        const Edge& e = edges[static_cast<size_t>(d >> 1)];
        return (d & 1) ? e.u : e.v;
    }
    static int dart_reverse(int d) { return d ^ 1; }

    int degree(int vertex) const;
    bool is_cubic() const;
    int edge_by_label(const std::string& label) const;  // -1 when absent
    int vertex_by_label(const std::string& label) const;

    // Throws internal_error when any structural invariant fails.
    void validate() const;

    // Undirected DOT rendering; tree edges bold. Deterministic order.
    std::string dot() const;
};

LadderGraph build_ringel(int n);       // n >= 2, builds R_{n-1}
LadderGraph build_closed_end(int k);   // k >= 1, builds L_k

}  // namespace ringlad

#endif
