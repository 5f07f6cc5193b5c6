#ifndef RINGLAD_TESTS_SLOW_TRACE_HPP
#define RINGLAD_TESTS_SLOW_TRACE_HPP

// Independent face tracer: map-based walk over (edge, direction, side)
// states with explicit per-vertex rotation sequences. Deliberately shares no
// code or tables with the production tracer; face counts are invariant under
// the handedness choice, so agreement is a real cross-check.

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "core/ladder_graph.hpp"
#include "core/rotation.hpp"

namespace testsupport {

struct SlowGraph {
    int nverts = 0;
    std::vector<std::pair<int, int>> edges;  // endpoint vertex ids (u, v)
    // per vertex: incident (edge, end) pairs in cyclic order; end 0 = u side
    std::vector<std::vector<std::pair<int, int>>> rotation;
    std::vector<int> twist;  // per edge
};

inline int slow_face_count(const SlowGraph& g) {
    const int E = static_cast<int>(g.edges.size());
    // state = ((edge, dir), side); dir 0 travels u -> v
    std::set<int> visited;
    auto state_id = [&](int edge, int dir, int side) { return (edge * 2 + dir) * 2 + side; };
    int orbits = 0;
    for (int e = 0; e < E; ++e) {
        for (int dir = 0; dir < 2; ++dir) {
            for (int side = 0; side < 2; ++side) {
                int start = state_id(e, dir, side);
                if (visited.count(start)) continue;
                ++orbits;
                int ce = e, cdir = dir, cside = side;
                do {
                    visited.insert(state_id(ce, cdir, cside));
                    cside ^= g.twist[static_cast<size_t>(ce)];
                    const int arrive_end = cdir == 0 ? 1 : 0;
                    const int w = arrive_end == 0 ? g.edges[static_cast<size_t>(ce)].first
                                                  : g.edges[static_cast<size_t>(ce)].second;
                    const auto& rot = g.rotation[static_cast<size_t>(w)];
                    const auto pos = std::find(rot.begin(), rot.end(), std::make_pair(ce, arrive_end));
                    const int deg = static_cast<int>(rot.size());
                    const int p = static_cast<int>(pos - rot.begin());
                    const int np = cside == 0 ? (p + 1) % deg : (p + deg - 1) % deg;
                    ce = rot[static_cast<size_t>(np)].first;
                    cdir = rot[static_cast<size_t>(np)].second == 0 ? 0 : 1;
                } while (state_id(ce, cdir, cside) != start);
            }
        }
    }
    return orbits / 2;
}

// Builds the slow-tracer view of a Ringel ladder under one rotation system.
inline SlowGraph slow_graph_of(const ringlad::LadderGraph& g, const ringlad::RotationSystem& system) {
    SlowGraph out;
    out.nverts = g.vertex_count();
    for (const auto& e : g.edges) out.edges.emplace_back(e.u, e.v);
    out.twist.assign(static_cast<size_t>(g.edge_count()), 0);
    for (size_t slot = 0; slot < g.cotree.size(); ++slot)
        out.twist[static_cast<size_t>(g.cotree[slot])] = system.twist[slot];
    out.rotation.resize(static_cast<size_t>(out.nverts));
    for (int v = 0; v < out.nverts; ++v) {
        std::vector<std::pair<int, int>> cycle;
        for (int d : g.ref_rotation[static_cast<size_t>(v)]) cycle.emplace_back(d >> 1, d & 1);
        if (system.color[static_cast<size_t>(v)]) std::reverse(cycle.begin(), cycle.end());
        out.rotation[static_cast<size_t>(v)] = std::move(cycle);
    }
    return out;
}

// Overlap of two cotree edges, computed from the definition: restrict the
// pure rotation system to tree + both edges and test planarity by Euler
// characteristic.
inline bool direct_overlap(const ringlad::LadderGraph& g, const ringlad::RotationSystem& system,
                           int cotree_edge_a, int cotree_edge_b) {
    SlowGraph full = slow_graph_of(g, system);
    SlowGraph sub;
    sub.nverts = full.nverts;
    std::vector<int> edge_map(full.edges.size(), -1);
    for (int e = 0; e < static_cast<int>(full.edges.size()); ++e) {
        bool keep = g.edges[static_cast<size_t>(e)].tree || e == cotree_edge_a || e == cotree_edge_b;
        if (!keep) continue;
        edge_map[static_cast<size_t>(e)] = static_cast<int>(sub.edges.size());
        sub.edges.push_back(full.edges[static_cast<size_t>(e)]);
        sub.twist.push_back(0);  // overlap depends on the pure rotation only
    }
    sub.rotation.resize(static_cast<size_t>(sub.nverts));
    for (int v = 0; v < sub.nverts; ++v) {
        for (const auto& [e, end] : full.rotation[static_cast<size_t>(v)])
            if (edge_map[static_cast<size_t>(e)] >= 0)
                sub.rotation[static_cast<size_t>(v)].emplace_back(edge_map[static_cast<size_t>(e)], end);
    }
    const int chi = sub.nverts - static_cast<int>(sub.edges.size()) + slow_face_count(sub);
    return chi != 2;
}

}  // namespace testsupport

#endif
