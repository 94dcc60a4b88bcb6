#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "starcol/coloring.hpp"
#include "starcol/errors.hpp"
#include "starcol/ovs.hpp"
#include "starcol/tree.hpp"

namespace starcol {

/// The sequence whose realizability encodes "the profile's tree has a star
/// edge coloring with t + k colors": k fresh zero-outdegree vertices
/// v_{t+1}..v_{t+k} followed by (n_i, v_i) for the root neighbors.
inline Ovs extension_sequence(const TwoHProfile& profile, int k) {
    Ovs ovs;
    ovs.reserve(static_cast<size_t>(profile.t + k));
    for (int j = 1; j <= k; ++j) ovs.push_back({0, profile.t + j});
    for (int i = 1; i <= profile.t; ++i)
        ovs.push_back({profile.n[static_cast<size_t>(i - 1)], i});
    return ovs;
}

/// Smallest k for which extension_sequence(profile, k) is realizable.
/// Realizability is monotone in k, so the linear scan finds the minimum;
/// the scan is capped by the floor(3*M/2) palette bound.
inline int min_k(const TwoHProfile& profile) {
    if (profile.t < 1) throw DomainError("min_k: profile with t < 1");
    if (static_cast<int>(profile.n.size()) != profile.t)
        throw DomainError("min_k: profile has " + std::to_string(profile.n.size()) +
                          " entries for t=" + std::to_string(profile.t));
    const int m_cap = std::max(profile.t, profile.n_max() + 1);
    const int k_cap = (3 * m_cap) / 2 - profile.t;
    for (int k = 0; k <= k_cap; ++k) {
        if (realize(extension_sequence(profile, k))) return k;
    }
    throw InternalError("min_k: no realizable extension within the palette bound (t=" +
                        std::to_string(profile.t) + ")");
}

/// Translates a realization of extension_sequence(profile, k) into a star
/// edge coloring of the materialized tree: spoke i gets color i, and the
/// leaves of neighbor i get the out-neighbor indices of v_i, ascending
/// colors against ascending leaf ids.
inline EdgeColoring coloring_from_realization(const OrientedGraph& g, const TwoHProfile& profile) {
    for (int i = 1; i <= profile.t; ++i) {
        if (!g.has_vertex(i) || g.out_degree(i) != profile.n[static_cast<size_t>(i - 1)])
            throw ProfileMismatch("coloring_from_realization: outdegree of v_" +
                                  std::to_string(i) + " disagrees with profile");
    }
    for (int v : g.vertices())
        if (v > profile.t && g.out_degree(v) != 0)
            throw ProfileMismatch("coloring_from_realization: extension vertex v_" +
                                  std::to_string(v) + " has nonzero outdegree");

    EdgeColoring c;
    c.palette_size = g.vertex_count();
    int next_leaf = profile.t + 1;
    for (int i = 1; i <= profile.t; ++i) {
        c.set(0, i, i);
        const auto& outs = g.out_neighbors(i);  // std::set, ascending
        for (int color : outs) c.set(i, next_leaf++, color);
    }
    return c;
}

/// Inverse translation: reads a star edge coloring of the materialized
/// profile tree (spoke i colored i) back into the oriented graph with
/// v_i -> v_j whenever color j appears on a non-spoke edge at neighbor i.
inline OrientedGraph realization_from_coloring(const EdgeColoring& coloring,
                                               const TwoHProfile& profile) {
    const int m = coloring.palette_size;
    std::vector<int> vs(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) vs[static_cast<size_t>(i)] = i + 1;
    OrientedGraph g(vs);

    for (int i = 1; i <= profile.t; ++i)
        if (coloring.get(0, i) != i)
            throw ProfileMismatch("realization_from_coloring: spoke " + std::to_string(i) +
                                  " is not colored " + std::to_string(i));

    int next_leaf = profile.t + 1;
    for (int i = 1; i <= profile.t; ++i) {
        for (int j = 0; j < profile.n[static_cast<size_t>(i - 1)]; ++j) {
            int color = coloring.get(i, next_leaf++);
            if (g.has_edge(color, i))
                throw NotStarColoring("realization_from_coloring: colors " + std::to_string(i) +
                                      " and " + std::to_string(color) +
                                      " form a bi-colored 4-edge path");
            g.add_edge(i, color);
        }
    }
    return g;
}

struct Color2hResult {
    int index = 0;
    Tree tree;            // canonical materialization of the profile
    EdgeColoring coloring;
};

/// Optimum star edge coloring of the profile's tree: index t + min_k, with
/// the coloring obtained from the greedy realization at that k.
inline Color2hResult color_2h(const TwoHProfile& profile) {
    Color2hResult res;
    const int k = min_k(profile);
    res.index = profile.t + k;
    res.tree = materialize_profile(profile);
    auto outcome = realize(extension_sequence(profile, k));
    if (!outcome) throw InternalError("color_2h: realization vanished at the minimal k");
    res.coloring = coloring_from_realization(outcome.graph, profile);
    return res;
}

/// Exact star chromatic index of the profile's tree.
inline int star_index_2h(const TwoHProfile& profile) { return profile.t + min_k(profile); }

}  // namespace starcol
