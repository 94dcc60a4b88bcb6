#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "starcol/coloring.hpp"
#include "starcol/errors.hpp"
#include "starcol/tree.hpp"

namespace starcol {

/// Outcome of validate_coloring. When invalid, `witness` is a vertex
/// sequence that re-checks as a genuine violation: three vertices x-v-y for
/// a propriety clash, five for a bi-colored 4-edge path.
struct Verdict {
    enum class Kind { NotProper, BiColoredP4 };

    bool valid = true;
    std::optional<Kind> kind;
    std::vector<int> witness;

    static Verdict ok() { return Verdict{}; }
    static Verdict violation(Kind k, std::vector<int> w) {
        Verdict v;
        v.valid = false;
        v.kind = k;
        v.witness = std::move(w);
        return v;
    }
};

/// Definition-level check: edges sharing a vertex get distinct colors and
/// every path with exactly four edges uses at least three colors. Scans
/// vertices and neighbors in ascending order, so the reported witness is
/// deterministic.
inline Verdict validate_coloring(const Tree& tree, const EdgeColoring& coloring) {
    coloring.check_covers(tree);

    for (int v = 0; v < tree.vertex_count; ++v) {
        const auto& nbrs = tree.neighbors(v);
        for (size_t i = 0; i < nbrs.size(); ++i)
            for (size_t j = i + 1; j < nbrs.size(); ++j)
                if (coloring.get(v, nbrs[i]) == coloring.get(v, nbrs[j]))
                    return Verdict::violation(Verdict::Kind::NotProper,
                                              {nbrs[i], v, nbrs[j]});
    }

    // a bi-colored 4-edge path a-b-c-d-e has c(ab)=c(cd) and c(bc)=c(de);
    // walk every 3-edge path and try to extend it one step
    for (int b = 0; b < tree.vertex_count; ++b) {
        for (int c : tree.neighbors(b)) {
            const int middle = coloring.get(b, c);
            for (int a : tree.neighbors(b)) {
                if (a == c) continue;
                const int outer = coloring.get(a, b);
                for (int d : tree.neighbors(c)) {
                    if (d == b || coloring.get(c, d) != outer) continue;
                    for (int e : tree.neighbors(d)) {
                        if (e == c) continue;
                        if (coloring.get(d, e) == middle)
                            return Verdict::violation(Verdict::Kind::BiColoredP4,
                                                      {a, b, c, d, e});
                    }
                }
            }
        }
    }
    return Verdict::ok();
}

namespace oracle_detail {

constexpr int kBruteforceEdgeCap = 16;

/// All paths with exactly four edges, as vertex quintuples with the smaller
/// endpoint first. BFS from every vertex suffices at oracle scale.
inline std::vector<std::vector<int>> four_edge_paths(const Tree& tree) {
    std::vector<std::vector<int>> paths;
    std::vector<int> walk;
    // depth-limited DFS enumerating simple paths of length 4 from each start
    auto extend = [&](auto&& self, int prev, int v, int depth) -> void {
        walk.push_back(v);
        if (depth == 4) {
            if (walk.front() < walk.back()) paths.push_back(walk);
        } else {
            for (int w : tree.neighbors(v))
                if (w != prev) self(self, v, w, depth + 1);
        }
        walk.pop_back();
    };
    for (int s = 0; s < tree.vertex_count; ++s) extend(extend, -1, s, 0);
    return paths;
}

}  // namespace oracle_detail

/// Smallest palette admitting a star edge coloring, by backtracking over
/// edges in DFS order. A fresh color is tried only as 1 + the largest color
/// used so far, which kills color-permutation symmetry. Returns nullopt
/// (Exceeded) when max_colors is too small.
inline std::optional<int> exact_index_bruteforce_capped(const Tree& tree, int max_colors) {
    if (tree.edge_count() > oracle_detail::kBruteforceEdgeCap)
        throw TooLarge("exact_index_bruteforce: " + std::to_string(tree.edge_count()) +
                       " edges exceeds the guard of " +
                       std::to_string(oracle_detail::kBruteforceEdgeCap));
    if (tree.edge_count() == 0) return 0;

    // edge order: DFS from vertex 0 keeps adjacent edges contiguous
    std::vector<std::pair<int, int>> order;
    std::map<std::pair<int, int>, int> edge_index;
    {
        std::vector<bool> seen(static_cast<size_t>(tree.vertex_count), false);
        auto dfs = [&](auto&& self, int v) -> void {
            seen[static_cast<size_t>(v)] = true;
            for (int w : tree.neighbors(v)) {
                if (seen[static_cast<size_t>(w)]) continue;
                edge_index[EdgeColoring::key(v, w)] = static_cast<int>(order.size());
                order.emplace_back(v, w);
                self(self, w);
            }
        };
        dfs(dfs, 0);
    }
    const int m = static_cast<int>(order.size());

    // per-edge incidences and the 4-edge paths through each edge
    std::vector<std::vector<int>> adjacent_edges(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            auto [a, b] = order[static_cast<size_t>(i)];
            auto [c, d] = order[static_cast<size_t>(j)];
            if (a == c || a == d || b == c || b == d) {
                adjacent_edges[static_cast<size_t>(i)].push_back(j);
                adjacent_edges[static_cast<size_t>(j)].push_back(i);
            }
        }
    std::vector<std::vector<std::array<int, 4>>> paths_through(static_cast<size_t>(m));
    for (const auto& p : oracle_detail::four_edge_paths(tree)) {
        std::array<int, 4> es{};
        for (int i = 0; i < 4; ++i)
            es[static_cast<size_t>(i)] =
                edge_index.at(EdgeColoring::key(p[static_cast<size_t>(i)],
                                                p[static_cast<size_t>(i + 1)]));
        for (int e : es) paths_through[static_cast<size_t>(e)].push_back(es);
    }

    std::vector<int> color(static_cast<size_t>(m), 0);  // 0 = uncolored

    auto feasible_here = [&](int e) {
        for (int f : adjacent_edges[static_cast<size_t>(e)])
            if (color[static_cast<size_t>(f)] == color[static_cast<size_t>(e)]) return false;
        for (const auto& es : paths_through[static_cast<size_t>(e)]) {
            std::set<int> used;
            bool complete = true;
            for (int f : es) {
                if (color[static_cast<size_t>(f)] == 0) {
                    complete = false;
                    break;
                }
                used.insert(color[static_cast<size_t>(f)]);
            }
            if (complete && used.size() < 3) return false;
        }
        return true;
    };

    auto search = [&](auto&& self, int e, int used_max, int cap) -> bool {
        if (e == m) return true;
        const int limit = std::min(cap, used_max + 1);
        for (int c = 1; c <= limit; ++c) {
            color[static_cast<size_t>(e)] = c;
            if (feasible_here(e) &&
                self(self, e + 1, std::max(used_max, c), cap))
                return true;
        }
        color[static_cast<size_t>(e)] = 0;
        return false;
    };

    for (int cap = tree.max_degree(); cap <= max_colors; ++cap)
        if (search(search, 0, 0, cap)) return cap;
    return std::nullopt;
}

/// As above but with the always-sufficient floor(3*Delta/2) cap, so the
/// result is the exact star chromatic index.
inline int exact_index_bruteforce(const Tree& tree) {
    if (tree.edge_count() == 0) return 0;
    auto r = exact_index_bruteforce_capped(tree, (3 * tree.max_degree()) / 2);
    if (!r) throw InternalError("exact_index_bruteforce: palette bound exceeded");
    return *r;
}

namespace oracle_detail {

/// Canonical form of a rooted tree (AHU-style bracket string).
inline std::string rooted_canon(const Tree& tree, int v, int parent) {
    std::vector<std::string> kids;
    for (int w : tree.neighbors(v))
        if (w != parent) kids.push_back(rooted_canon(tree, w, v));
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    for (const auto& k : kids) s += k;
    s += ")";
    return s;
}

/// Centers of the tree (one or two), by repeated leaf peeling.
inline std::vector<int> centers(const Tree& tree) {
    const int n = tree.vertex_count;
    if (n == 1) return {0};
    std::vector<int> deg(static_cast<size_t>(n));
    std::vector<int> frontier;
    for (int v = 0; v < n; ++v) {
        deg[static_cast<size_t>(v)] = tree.degree(v);
        if (deg[static_cast<size_t>(v)] == 1) frontier.push_back(v);
    }
    int remaining = n;
    while (remaining > 2) {
        std::vector<int> next;
        for (int v : frontier) {
            --remaining;
            for (int w : tree.neighbors(v))
                if (--deg[static_cast<size_t>(w)] == 1) next.push_back(w);
        }
        frontier = std::move(next);
    }
    std::sort(frontier.begin(), frontier.end());
    return frontier;
}

/// Isomorphism-invariant canonical string of a free tree.
inline std::string free_canon(const Tree& tree) {
    auto cs = centers(tree);
    if (cs.size() == 1) return rooted_canon(tree, cs[0], -1);
    std::string a = rooted_canon(tree, cs[0], cs[1]);
    std::string b = rooted_canon(tree, cs[1], cs[0]);
    if (b < a) std::swap(a, b);
    return a + "|" + b;
}

}  // namespace oracle_detail

/// One representative per isomorphism class of trees on n vertices, grown
/// by attaching a leaf to every vertex of every (n-1)-vertex class and
/// deduplicating on the canonical form. Order is deterministic.
inline std::vector<Tree> enumerate_trees(int n) {
    if (n < 1) throw DomainError("enumerate_trees: n must be positive");
    if (n > 10) throw TooLarge("enumerate_trees: n > 10");

    std::vector<Tree> current = {single_vertex_tree()};
    for (int size = 2; size <= n; ++size) {
        std::vector<Tree> grown;
        std::set<std::string> seen;
        for (const Tree& t : current) {
            for (int v = 0; v < t.vertex_count; ++v) {
                auto edges = t.edges();
                edges.emplace_back(v, t.vertex_count);
                Tree bigger = build_tree(edges);
                if (seen.insert(oracle_detail::free_canon(bigger)).second)
                    grown.push_back(std::move(bigger));
            }
        }
        current = std::move(grown);
    }
    return current;
}

}  // namespace starcol
