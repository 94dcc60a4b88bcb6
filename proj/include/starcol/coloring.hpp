#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "starcol/errors.hpp"
#include "starcol/tree.hpp"

namespace starcol {

/// Edge coloring keyed by unordered vertex pairs (stored with u < v).
/// Colors are 1-based and must lie in [1, palette_size].
struct EdgeColoring {
    std::map<std::pair<int, int>, int> assignment;
    int palette_size = 0;

    static std::pair<int, int> key(int u, int v) {
        return u < v ? std::make_pair(u, v) : std::make_pair(v, u);
    }

    void set(int u, int v, int color) { assignment[key(u, v)] = color; }

    bool has(int u, int v) const { return assignment.count(key(u, v)) > 0; }

    int get(int u, int v) const {
        auto it = assignment.find(key(u, v));
        if (it == assignment.end())
            throw CoverageMismatch("EdgeColoring: edge " + std::to_string(u) + "-" +
                                   std::to_string(v) + " not colored");
        return it->second;
    }

    size_t size() const { return assignment.size(); }

    /// Throws CoverageMismatch unless the domain is exactly the tree's edges.
    void check_covers(const Tree& tree) const {
        if (static_cast<int>(assignment.size()) != tree.edge_count())
            throw CoverageMismatch("coloring has " + std::to_string(assignment.size()) +
                                   " edges, tree has " + std::to_string(tree.edge_count()));
        for (const auto& [e, c] : assignment) {
            auto [u, v] = e;
            if (!tree.valid_vertex(u) || !tree.valid_vertex(v))
                throw CoverageMismatch("colored edge endpoint out of range");
            const auto& nbrs = tree.neighbors(u);
            if (std::find(nbrs.begin(), nbrs.end(), v) == nbrs.end())
                throw CoverageMismatch("colored pair " + std::to_string(u) + "-" +
                                       std::to_string(v) + " is not a tree edge");
        }
    }

    /// Colors used (ignores palette_size), handy in tests.
    std::vector<int> used_colors() const {
        std::vector<int> cs;
        for (const auto& [e, c] : assignment) cs.push_back(c);
        std::sort(cs.begin(), cs.end());
        cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
        return cs;
    }
};

}  // namespace starcol
