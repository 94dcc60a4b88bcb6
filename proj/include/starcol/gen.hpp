#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "starcol/errors.hpp"
#include "starcol/tree.hpp"

namespace starcol {

/// Uniform draw from [0, n) via plain modulo. The slight bias is irrelevant
/// here; what matters is that the stream is pinned by the seed alone, not
/// by the standard library's distribution internals.
inline std::uint64_t rng_below(std::mt19937_64& rng, std::uint64_t n) {
    return n == 0 ? 0 : rng() % n;
}

/// Labeled tree decoded from a random Pruefer-style sequence.
inline Tree random_tree(int n, std::uint64_t seed) {
    if (n < 1) throw DomainError("random_tree: n must be positive");
    if (n == 1) return single_vertex_tree();
    std::mt19937_64 rng(seed);
    if (n == 2) return build_tree({{0, 1}});

    std::vector<int> code(static_cast<size_t>(n - 2));
    for (auto& c : code) c = static_cast<int>(rng_below(rng, static_cast<std::uint64_t>(n)));

    std::vector<int> count(static_cast<size_t>(n), 0);
    for (int c : code) ++count[static_cast<size_t>(c)];

    std::vector<std::pair<int, int>> edges;
    std::set<int> leaves;
    for (int v = 0; v < n; ++v)
        if (count[static_cast<size_t>(v)] == 0) leaves.insert(v);
    for (int c : code) {
        int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.emplace_back(leaf, c);
        if (--count[static_cast<size_t>(c)] == 0) leaves.insert(c);
    }
    int a = *leaves.begin();
    int b = *std::next(leaves.begin());
    edges.emplace_back(a, b);
    return build_tree(edges);
}

/// Random caterpillar on n vertices: a spine path with the remaining
/// vertices attached as legs at seeded positions.
inline Tree random_caterpillar(int n, std::uint64_t seed) {
    if (n < 1) throw DomainError("random_caterpillar: n must be positive");
    if (n == 1) return single_vertex_tree();
    std::mt19937_64 rng(seed);
    const int spine = 1 + static_cast<int>(rng_below(rng, static_cast<std::uint64_t>(n)));

    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < spine; ++i) edges.emplace_back(i, i + 1);
    for (int v = spine; v < n; ++v)
        edges.emplace_back(static_cast<int>(rng_below(rng, static_cast<std::uint64_t>(spine))), v);
    return build_tree(edges);
}

/// Random two-ball profile with t in [1, max_t] and entries in [0, max_n].
inline TwoHProfile random_profile(int max_t, int max_n, std::uint64_t seed) {
    if (max_t < 1) throw DomainError("random_profile: max_t must be positive");
    std::mt19937_64 rng(seed);
    TwoHProfile p;
    p.t = 1 + static_cast<int>(rng_below(rng, static_cast<std::uint64_t>(max_t)));
    p.n.resize(static_cast<size_t>(p.t));
    for (auto& x : p.n)
        x = static_cast<int>(rng_below(rng, static_cast<std::uint64_t>(max_n + 1)));
    std::sort(p.n.begin(), p.n.end());
    return p;
}

/// Materialized regular two-ball T_(r,t): root of degree t, every neighbor
/// of total degree r.
inline Tree regular_2h_tree(int r, int t) {
    if (r < 1 || t < 1) throw DomainError("regular_2h_tree: r and t must be positive");
    TwoHProfile p;
    p.t = t;
    p.n.assign(static_cast<size_t>(t), r - 1);
    return materialize_profile(p);
}

}  // namespace starcol
