#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "starcol/coloring.hpp"
#include "starcol/errors.hpp"
#include "starcol/tree.hpp"

namespace starcol {

/// Closed-form bracket on a two-ball index, with tags recording which
/// formula produced each number.
struct BoundReport {
    int lower = 0;
    int upper = 0;
    std::optional<int> exact;
    std::string lower_source;
    std::string upper_source;
    std::string exact_source;
};

/// max(Delta, ceil(sigma/t + (t+1)/2)), evaluated in integer arithmetic as
/// ceil((2*sigma + t*(t+1)) / (2t)) so no floating-point rounding sneaks in.
inline int lower_bound_2h(const TwoHProfile& profile) {
    if (profile.t < 1) throw DomainError("lower_bound_2h: t must be >= 1");
    const long long t = profile.t;
    const long long num = 2LL * profile.sigma() + t * (t + 1);
    const long long den = 2LL * t;
    const int formula = static_cast<int>((num + den - 1) / den);
    return std::max(profile.max_degree(), formula);
}

inline int upper_bound_2h(const TwoHProfile& profile) {
    if (profile.t < 1) throw DomainError("upper_bound_2h: t must be >= 1");
    const int nt = profile.n_max();
    if (profile.t <= 2 * nt + 1) return nt + 1 + profile.t / 2;
    return profile.t;
}

inline BoundReport bound_report_2h(const TwoHProfile& profile) {
    BoundReport r;
    const long long t = profile.t;
    const long long num = 2LL * profile.sigma() + t * (t + 1);
    const long long den = 2LL * t;
    const int formula = static_cast<int>((num + den - 1) / den);
    const int delta = profile.max_degree();
    r.lower = std::max(delta, formula);
    // the averaging bound is read as ceil of the whole sum
    r.lower_source = formula >= delta ? "ceil(sigma/t+(t+1)/2)" : "max-degree";
    r.upper = upper_bound_2h(profile);
    r.upper_source = profile.t <= 2 * profile.n_max() + 1 ? "n_t+1+floor(t/2)" : "root-degree";
    return r;
}

/// Exact index of the regular two-ball T_(r,t): every root neighbor has
/// total degree r, so each carries r-1 leaves.
inline int regular_2h_index(int r, int t) {
    if (r < 1) throw DomainError("regular_2h_index: r must be >= 1");
    if (t < 2) throw DomainError("regular_2h_index: t must be >= 2");
    if (t <= 2 * r - 1) return r + t / 2;
    return t;
}

/// Exact index when all but the two largest root neighbors are leaves.
inline int near_star_2h_index(const TwoHProfile& profile) {
    if (profile.t < 2) throw ProfileShapeError("near_star_2h_index: t must be >= 2");
    if (static_cast<int>(profile.n.size()) != profile.t)
        throw ProfileShapeError("near_star_2h_index: entry count disagrees with t");
    for (int i = 0; i + 2 < profile.t; ++i)
        if (profile.n[static_cast<size_t>(i)] != 0)
            throw ProfileShapeError("near_star_2h_index: n_1..n_{t-2} must be zero");
    const int delta = profile.max_degree();
    const int top = profile.n[static_cast<size_t>(profile.t - 1)] + 1;
    const int second = profile.n[static_cast<size_t>(profile.t - 2)] + 1;
    return (top == delta && second == delta) ? delta + 1 : delta;
}

/// Exact index of a caterpillar: Delta, plus one exactly when two vertices
/// of degree Delta sit at distance two.
inline int caterpillar_index(const Tree& tree) {
    if (!is_caterpillar(tree)) throw NotCaterpillar("caterpillar_index: tree is not a caterpillar");
    if (tree.vertex_count <= 1) return 0;
    const int delta = tree.max_degree();
    for (int w = 0; w < tree.vertex_count; ++w) {
        int heavy = 0;
        for (int x : tree.neighbors(w))
            if (tree.degree(x) == delta) ++heavy;
        if (heavy >= 2) return delta + 1;
    }
    return delta;
}

struct RegularColoringResult {
    Tree tree;  // materialized T_(r,t)
    EdgeColoring coloring;
};

namespace bounds_detail {

/// Leaf ids of neighbor i (1-based) in the materialized regular two-ball,
/// position h = 2..r addressing the canonical child order.
inline int regular_child(int t, int r, int i, int h) { return t + (i - 1) * (r - 1) + (h - 1); }

}  // namespace bounds_detail

/// Round-robin coloring of T_(t,t) with t + floor(t/2) colors: each
/// neighbor's trailing floor(t/2) leaves reuse the shared high colors, the
/// leading leaves cycle through the spoke colors.
inline RegularColoringResult round_robin_color_regular(int t) {
    if (t < 2) throw DomainError("round_robin_color_regular: t must be >= 2");

    RegularColoringResult res;
    TwoHProfile profile;
    profile.t = t;
    profile.n.assign(static_cast<size_t>(t), t - 1);
    res.tree = materialize_profile(profile);
    res.coloring.palette_size = t + t / 2;

    for (int i = 0; i < t; ++i) res.coloring.set(0, i + 1, i + 1);
    for (int i = 0; i < t; ++i) {
        for (int j = 1; j <= t / 2; ++j)
            res.coloring.set(i + 1, bounds_detail::regular_child(t, t, i + 1, t - j + 1), t + j);
        for (int j = 1; j <= (t + 1) / 2 - 1; ++j) {
            int a = (i + j) % t + 1;
            res.coloring.set(i + 1, bounds_detail::regular_child(t, t, i + 1, j + 1), a);
        }
    }
    return res;
}

/// Star edge coloring of T_(r,t) derived from the T_(t,t) coloring: extend
/// with fresh colors when r > t, delete high colors (and renumber the
/// survivors down) when r < t. Palette is r + floor(t/2) for t <= 2r-1 and
/// t otherwise.
inline RegularColoringResult regular_2h_color(int r, int t) {
    if (r < 1) throw DomainError("regular_2h_color: r must be >= 1");
    if (t < 2) throw DomainError("regular_2h_color: t must be >= 2");
    if (r == t) return round_robin_color_regular(t);

    RegularColoringResult res;
    TwoHProfile profile;
    profile.t = t;
    profile.n.assign(static_cast<size_t>(t), r - 1);
    res.tree = materialize_profile(profile);

    const int half = t / 2;
    const int ceil_half = (t + 1) / 2;

    if (r > t) {
        res.coloring.palette_size = r + half;
        for (int i = 1; i <= t; ++i) res.coloring.set(0, i, i);
        for (int i = 0; i < t; ++i) {
            for (int j = 1; j <= half; ++j)
                res.coloring.set(i + 1, bounds_detail::regular_child(t, r, i + 1, t - j + 1),
                                 t + j);
            for (int j = 1; j <= ceil_half - 1; ++j)
                res.coloring.set(i + 1, bounds_detail::regular_child(t, r, i + 1, j + 1),
                                 (i + j) % t + 1);
            // the extra r-t leaves share one block of fresh colors
            for (int j = 1; j <= r - t; ++j)
                res.coloring.set(i + 1, bounds_detail::regular_child(t, r, i + 1, t + j),
                                 t + half + j);
        }
        return res;
    }

    if (t <= 2 * r - 1) {
        // drop the t-r lowest high colors; every neighbor carries all of
        // them on its trailing leaves, so position bookkeeping stays simple
        const int cut = t - r;
        res.coloring.palette_size = r + half;
        for (int i = 1; i <= t; ++i) res.coloring.set(0, i, i);
        for (int i = 0; i < t; ++i) {
            for (int h = 2; h <= ceil_half; ++h)
                res.coloring.set(i + 1, bounds_detail::regular_child(t, r, i + 1, h),
                                 (i + h - 1) % t + 1);
            for (int h = ceil_half + 1; h <= r; ++h)
                res.coloring.set(i + 1, bounds_detail::regular_child(t, r, i + 1, h),
                                 (2 * t - h + 1) - cut);
        }
        return res;
    }

    // t >= 2r: keep the r-1 smallest spoke-colors at each neighbor
    res.coloring.palette_size = t;
    for (int i = 1; i <= t; ++i) res.coloring.set(0, i, i);
    for (int i = 0; i < t; ++i) {
        std::vector<int> reuse;
        for (int j = 1; j <= ceil_half - 1; ++j) reuse.push_back((i + j) % t + 1);
        std::sort(reuse.begin(), reuse.end());
        for (int h = 2; h <= r; ++h)
            res.coloring.set(i + 1, bounds_detail::regular_child(t, r, i + 1, h),
                             reuse[static_cast<size_t>(h - 2)]);
    }
    return res;
}

}  // namespace starcol
