#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "starcol/coloring.hpp"
#include "starcol/errors.hpp"
#include "starcol/ovs.hpp"
#include "starcol/star_2h.hpp"
#include "starcol/tree.hpp"

namespace starcol {

/// Star chromatic index of the tree: the maximum of the two-ball indices
/// over all vertices. Identical local profiles are memoized, since a tree
/// rarely has many distinct ones.
inline int star_index(const Tree& tree) {
    if (tree.vertex_count <= 1) return 0;
    std::map<std::vector<int>, int> cache;
    int best = 0;
    for (int v = 0; v < tree.vertex_count; ++v) {
        TwoHProfile p = two_ball(tree, v);
        auto it = cache.find(p.n);
        int idx;
        if (it != cache.end()) {
            idx = it->second;
        } else {
            idx = p.t + min_k(p);
            cache.emplace(p.n, idx);
        }
        best = std::max(best, idx);
    }
    return best;
}

struct ColorTreeResult {
    int index = 0;
    EdgeColoring coloring;
};

/// Optimum star edge coloring of an arbitrary tree.
///
/// The palette size m is fixed by star_index up front. Edges at the root
/// get colors 1..d(root); after that each vertex u' with grandchild edges
/// is handled by realizing an outdegree sequence over the full palette,
/// with the out-neighborhood of the parent-edge color preset to the colors
/// already present at u''s parent.
inline ColorTreeResult color_tree(const Tree& tree) {
    ColorTreeResult res;
    if (tree.vertex_count <= 1) return res;

    const int m = star_index(tree);
    res.index = m;
    res.coloring.palette_size = m;

    const RootedTree rooted = root_at(tree, 0);
    auto& color = res.coloring;

    const auto& root_nbrs = rooted.ordered_neighbors[static_cast<size_t>(rooted.root)];
    for (size_t i = 0; i < root_nbrs.size(); ++i)
        color.set(rooted.root, root_nbrs[i], static_cast<int>(i) + 1);

    // parents in level order, ascending id within a level
    std::vector<int> order(static_cast<size_t>(tree.vertex_count));
    for (int v = 0; v < tree.vertex_count; ++v) order[static_cast<size_t>(v)] = v;
    std::stable_sort(order.begin(), order.end(), [&rooted](int a, int b) {
        if (rooted.level[static_cast<size_t>(a)] != rooted.level[static_cast<size_t>(b)])
            return rooted.level[static_cast<size_t>(a)] < rooted.level[static_cast<size_t>(b)];
        return a < b;
    });

    for (int u : order) {
        const auto& nbrs = rooted.ordered_neighbors[static_cast<size_t>(u)];
        const bool at_root = (u == rooted.root);
        const size_t child_begin = at_root ? 0 : 1;

        bool work = false;
        for (size_t i = child_begin; i < nbrs.size(); ++i)
            if (tree.degree(nbrs[i]) >= 2) work = true;
        if (!work) continue;

        const int t = tree.degree(u);
        std::vector<int> q(static_cast<size_t>(t));
        std::set<int> at_u;
        for (int i = 0; i < t; ++i) {
            q[static_cast<size_t>(i)] = color.get(u, nbrs[static_cast<size_t>(i)]);
            at_u.insert(q[static_cast<size_t>(i)]);
        }
        std::vector<int> fresh;  // palette colors unused at u, ascending
        for (int c = 1; c <= m; ++c)
            if (!at_u.count(c)) fresh.push_back(c);

        Ovs ovs;
        ovs.reserve(static_cast<size_t>(m));
        for (int c : fresh) ovs.push_back({0, c});
        for (int i = 0; i < t; ++i)
            ovs.push_back({tree.degree(nbrs[static_cast<size_t>(i)]) - 1,
                           q[static_cast<size_t>(i)]});

        std::vector<std::pair<int, int>> preset;
        std::set<int> preset_fixed;
        if (!at_root) {
            // the parent's edge colors are already decided; pin them
            const int p = nbrs[0];
            const int pq = q[0];
            preset_fixed.insert(pq);
            for (int w : tree.neighbors(p)) {
                int c = color.get(p, w);
                if (c != pq) preset.emplace_back(pq, c);
            }
        }

        RealizeOutcome out = realize_constrained(ovs, preset, preset_fixed);
        if (!out)
            throw InternalError("color_tree: palette " + std::to_string(m) +
                                " starved at vertex " + std::to_string(u));

        for (size_t i = child_begin; i < nbrs.size(); ++i) {
            const int w = nbrs[i];
            if (tree.degree(w) < 2) continue;
            const auto& outs = out.graph.out_neighbors(q[i]);
            // fresh colors go on the trailing (highest-degree) grandchild
            // edges; this keeps the next level's preset consistent
            std::vector<int> lead, trail;
            for (int c : outs)
                (at_u.count(c) ? lead : trail).push_back(c);
            lead.insert(lead.end(), trail.begin(), trail.end());

            const auto& wn = rooted.ordered_neighbors[static_cast<size_t>(w)];
            for (size_t j = 1; j < wn.size(); ++j)
                color.set(w, wn[j], lead[j - 1]);
        }
    }

    if (static_cast<int>(color.size()) != tree.edge_count())
        throw InternalError("color_tree: not all edges were colored");
    return res;
}

}  // namespace starcol
