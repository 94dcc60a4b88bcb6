#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "starcol/errors.hpp"

namespace starcol {

/// Immutable undirected tree on dense 0-based vertex ids.
///
/// Invariants (enforced by build_tree): connected, acyclic, no self-loops,
/// no duplicate edges, per-vertex adjacency sorted ascending.
struct Tree {
    int vertex_count = 0;
    std::vector<std::vector<int>> adjacency;

    int degree(int v) const { return static_cast<int>(adjacency[static_cast<size_t>(v)].size()); }
    const std::vector<int>& neighbors(int v) const { return adjacency[static_cast<size_t>(v)]; }
    int edge_count() const { return vertex_count > 0 ? vertex_count - 1 : 0; }

    bool valid_vertex(int v) const { return v >= 0 && v < vertex_count; }

    /// Edges as (u, v) pairs with u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(static_cast<size_t>(edge_count()));
        for (int u = 0; u < vertex_count; ++u)
            for (int v : adjacency[static_cast<size_t>(u)])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    int max_degree() const {
        int d = 0;
        for (int v = 0; v < vertex_count; ++v) d = std::max(d, degree(v));
        return d;
    }
};

/// A tree with a designated root. level(root) = 1 and grows downward.
/// ordered_neighbors(v) lists the parent first (non-root vertices), then the
/// remaining neighbors by degree ascending, ties broken by vertex id.
struct RootedTree {
    Tree tree;
    int root = 0;
    std::vector<int> parent;  // -1 for the root
    std::vector<int> level;   // root has level 1
    std::vector<std::vector<int>> ordered_neighbors;

    int height() const {
        int h = 0;
        for (int l : level) h = std::max(h, l);
        return h;
    }
};

/// Shape of the two-ball around a vertex: root degree t and the sorted
/// counts n[i] of non-parent edges at each root neighbor. vertex_map, when
/// present, maps profile positions back to the concrete neighbor ids.
struct TwoHProfile {
    int t = 0;
    std::vector<int> n;          // ascending, size t
    std::vector<int> vertex_map; // empty for abstract profiles

    bool has_vertex_map() const { return !vertex_map.empty(); }

    int sigma() const { return std::accumulate(n.begin(), n.end(), 0); }
    int n_max() const { return n.empty() ? 0 : n.back(); }
    /// Maximum degree of the corresponding tree.
    int max_degree() const { return std::max(t, n_max() + 1); }
};

/// Builds a validated Tree from an edge list. Vertex ids must be dense
/// 0-based integers; the vertex count is max id + 1.
inline Tree build_tree(const std::vector<std::pair<int, int>>& edge_list) {
    if (edge_list.empty()) throw DomainError("build_tree: empty edge list");

    int n = 0;
    for (auto [u, v] : edge_list) {
        if (u < 0 || v < 0) throw InvalidVertex("build_tree: negative vertex id");
        n = std::max({n, u + 1, v + 1});
    }

    // union-find; merging two already-joined vertices means a cycle
    std::vector<int> uf(static_cast<size_t>(n));
    std::iota(uf.begin(), uf.end(), 0);
    auto find = [&uf](int x) {
        while (uf[static_cast<size_t>(x)] != x) {
            uf[static_cast<size_t>(x)] = uf[static_cast<size_t>(uf[static_cast<size_t>(x)])];
            x = uf[static_cast<size_t>(x)];
        }
        return x;
    };

    Tree t;
    t.vertex_count = n;
    t.adjacency.assign(static_cast<size_t>(n), {});

    for (auto [u, v] : edge_list) {
        if (u == v) throw SelfLoop("build_tree: self-loop at vertex " + std::to_string(u));
        const auto& au = t.adjacency[static_cast<size_t>(u)];
        if (std::find(au.begin(), au.end(), v) != au.end())
            throw DuplicateEdge("build_tree: duplicate edge " + std::to_string(u) + "-" +
                                std::to_string(v));
        int ru = find(u), rv = find(v);
        if (ru == rv)
            throw CycleDetected("build_tree: edge " + std::to_string(u) + "-" +
                                std::to_string(v) + " closes a cycle");
        uf[static_cast<size_t>(ru)] = rv;
        t.adjacency[static_cast<size_t>(u)].push_back(v);
        t.adjacency[static_cast<size_t>(v)].push_back(u);
    }

    if (static_cast<int>(edge_list.size()) != n - 1)
        throw Disconnected("build_tree: " + std::to_string(edge_list.size()) + " edges on " +
                           std::to_string(n) + " vertices");
    for (int v = 0; v < n; ++v)
        if (find(v) != find(0)) throw Disconnected("build_tree: vertex " + std::to_string(v) +
                                                   " unreachable");

    for (auto& a : t.adjacency) std::sort(a.begin(), a.end());
    return t;
}

/// A tree consisting of a single vertex (not expressible as an edge list).
inline Tree single_vertex_tree() {
    Tree t;
    t.vertex_count = 1;
    t.adjacency.assign(1, {});
    return t;
}

/// Roots the tree and computes parent/level arrays plus the canonical
/// neighbor ordering used throughout the coloring algorithms.
inline RootedTree root_at(const Tree& tree, int root) {
    if (!tree.valid_vertex(root))
        throw InvalidVertex("root_at: vertex " + std::to_string(root) + " out of range");

    RootedTree r;
    r.tree = tree;
    r.root = root;
    const size_t n = static_cast<size_t>(tree.vertex_count);
    r.parent.assign(n, -1);
    r.level.assign(n, 0);
    r.level[static_cast<size_t>(root)] = 1;

    std::vector<int> stack = {root};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : tree.neighbors(v)) {
            if (r.level[static_cast<size_t>(w)] != 0) continue;
            r.parent[static_cast<size_t>(w)] = v;
            r.level[static_cast<size_t>(w)] = r.level[static_cast<size_t>(v)] + 1;
            stack.push_back(w);
        }
    }

    r.ordered_neighbors.assign(n, {});
    for (int v = 0; v < tree.vertex_count; ++v) {
        std::vector<int> rest;
        for (int w : tree.neighbors(v))
            if (w != r.parent[static_cast<size_t>(v)]) rest.push_back(w);
        std::sort(rest.begin(), rest.end(), [&tree](int a, int b) {
            if (tree.degree(a) != tree.degree(b)) return tree.degree(a) < tree.degree(b);
            return a < b;
        });
        auto& ord = r.ordered_neighbors[static_cast<size_t>(v)];
        if (r.parent[static_cast<size_t>(v)] >= 0) ord.push_back(r.parent[static_cast<size_t>(v)]);
        ord.insert(ord.end(), rest.begin(), rest.end());
    }
    return r;
}

/// Profile of the subtree induced by vertices within distance two of v:
/// t = d(v), n[i] = d(neighbor) - 1 sorted ascending, with vertex_map
/// tracking which neighbor each position came from.
inline TwoHProfile two_ball(const Tree& tree, int v) {
    if (!tree.valid_vertex(v))
        throw InvalidVertex("two_ball: vertex " + std::to_string(v) + " out of range");

    std::vector<std::pair<int, int>> rows;  // (d(u)-1, u)
    rows.reserve(tree.neighbors(v).size());
    for (int u : tree.neighbors(v)) rows.emplace_back(tree.degree(u) - 1, u);
    std::sort(rows.begin(), rows.end());

    TwoHProfile p;
    p.t = static_cast<int>(rows.size());
    for (auto [cnt, u] : rows) {
        p.n.push_back(cnt);
        p.vertex_map.push_back(u);
    }
    return p;
}

/// True iff deleting all leaves yields a (possibly empty) path.
inline bool is_caterpillar(const Tree& tree) {
    if (tree.vertex_count <= 2) return true;
    // internal vertices of a tree always induce a subtree, so a path test
    // reduces to checking induced degrees
    for (int v = 0; v < tree.vertex_count; ++v) {
        if (tree.degree(v) == 1) continue;
        int internal_deg = 0;
        for (int w : tree.neighbors(v))
            if (tree.degree(w) > 1) ++internal_deg;
        if (internal_deg > 2) return false;
    }
    return true;
}

/// Concrete tree for an abstract profile: root 0, neighbors 1..t, then the
/// leaves of each neighbor in position order.
inline Tree materialize_profile(const TwoHProfile& profile) {
    if (profile.t < 1) throw DomainError("materialize_profile: t must be >= 1");
    if (static_cast<int>(profile.n.size()) != profile.t)
        throw DomainError("materialize_profile: entry count disagrees with t");
    std::vector<std::pair<int, int>> edges;
    int next = profile.t + 1;
    for (int i = 1; i <= profile.t; ++i) {
        edges.emplace_back(0, i);
        for (int j = 0; j < profile.n[static_cast<size_t>(i - 1)]; ++j)
            edges.emplace_back(i, next++);
    }
    return build_tree(edges);
}

}  // namespace starcol
