#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "starcol/errors.hpp"

namespace starcol {

/// One entry of an outdegree-vertex sequence.
struct OvsEntry {
    int outdegree = 0;
    int vertex = 0;

    friend bool operator==(const OvsEntry& a, const OvsEntry& b) {
        return a.outdegree == b.outdegree && a.vertex == b.vertex;
    }
};

using Ovs = std::vector<OvsEntry>;

/// Digraph whose underlying graph is simple: no loops and never both u->v
/// and v->u. Vertex ids are arbitrary ints; in_neighbors is kept as the
/// exact transpose of out_neighbors.
class OrientedGraph {
  public:
    OrientedGraph() = default;

    explicit OrientedGraph(const std::vector<int>& vertices) {
        for (int v : vertices) add_vertex(v);
    }

    void add_vertex(int v) {
        out_.try_emplace(v);
        in_.try_emplace(v);
    }

    void add_edge(int u, int v) {
        if (u == v) throw DomainError("OrientedGraph: loop at " + std::to_string(u));
        if (!out_.count(u) || !out_.count(v))
            throw InvalidVertex("OrientedGraph: unknown endpoint");
        if (out_.at(v).count(u))
            throw DomainError("OrientedGraph: anti-parallel pair " + std::to_string(u) + "<->" +
                              std::to_string(v));
        out_.at(u).insert(v);
        in_.at(v).insert(u);
    }

    bool has_edge(int u, int v) const {
        auto it = out_.find(u);
        return it != out_.end() && it->second.count(v) > 0;
    }

    bool has_vertex(int v) const { return out_.count(v) > 0; }

    const std::set<int>& out_neighbors(int v) const { return out_.at(v); }
    const std::set<int>& in_neighbors(int v) const { return in_.at(v); }

    int out_degree(int v) const { return static_cast<int>(out_.at(v).size()); }
    int in_degree(int v) const { return static_cast<int>(in_.at(v).size()); }

    int vertex_count() const { return static_cast<int>(out_.size()); }

    int edge_count() const {
        int m = 0;
        for (const auto& [v, nbrs] : out_) m += static_cast<int>(nbrs.size());
        return m;
    }

    std::vector<int> vertices() const {
        std::vector<int> vs;
        vs.reserve(out_.size());
        for (const auto& [v, nbrs] : out_) vs.push_back(v);
        return vs;
    }

    /// Structural self-check: transpose consistency, no loops, no
    /// anti-parallel pairs. Throws InternalError on violation.
    void check_invariants() const {
        for (const auto& [u, nbrs] : out_) {
            for (int v : nbrs) {
                if (u == v) throw InternalError("OrientedGraph invariant: loop");
                if (out_.at(v).count(u))
                    throw InternalError("OrientedGraph invariant: anti-parallel pair");
                if (!in_.at(v).count(u))
                    throw InternalError("OrientedGraph invariant: transpose mismatch");
            }
        }
        int in_total = 0;
        for (const auto& [v, nbrs] : in_) in_total += static_cast<int>(nbrs.size());
        if (in_total != edge_count())
            throw InternalError("OrientedGraph invariant: transpose size mismatch");
    }

    friend bool operator==(const OrientedGraph& a, const OrientedGraph& b) {
        return a.out_ == b.out_;
    }

  private:
    std::map<int, std::set<int>> out_;
    std::map<int, std::set<int>> in_;
};

/// Working state of the greedy realizer: the current arrangement of the
/// sequence, the set of vertices whose out-neighborhoods are final, and the
/// partially built graph.
struct RealizerState {
    Ovs arrangement;
    std::set<int> fixed;
    OrientedGraph graph;
};

/// Stable ascending sort by outdegree.
inline Ovs normalize(const Ovs& ovs) {
    Ovs out = ovs;
    std::stable_sort(out.begin(), out.end(), [](const OvsEntry& a, const OvsEntry& b) {
        return a.outdegree < b.outdegree;
    });
    return out;
}

/// Rearranges the state so fixed vertices occupy a prefix (keeping their
/// relative order) and the rest are sorted by outdegree plus indegree
/// accumulated so far, ties by outdegree, remaining ties stable.
inline RealizerState gw_normalize(const RealizerState& state) {
    RealizerState next = state;
    auto key = [&next](const OvsEntry& e) {
        return e.outdegree + next.graph.in_degree(e.vertex);
    };
    std::stable_sort(next.arrangement.begin(), next.arrangement.end(),
                     [&](const OvsEntry& a, const OvsEntry& b) {
                         bool fa = next.fixed.count(a.vertex) > 0;
                         bool fb = next.fixed.count(b.vertex) > 0;
                         if (fa != fb) return fa;
                         if (fa && fb) return false;
                         if (key(a) != key(b)) return key(a) < key(b);
                         return a.outdegree < b.outdegree;
                     });
    return next;
}

/// Candidate out-neighborhood of the entry at `position`: the first
/// `outdegree` vertices of the arrangement that are neither the vertex
/// itself nor already pointing at it. nullopt when fewer exist.
inline std::optional<std::vector<int>> leftmost_pon(const RealizerState& state, size_t position) {
    const OvsEntry& e = state.arrangement.at(position);
    if (state.fixed.count(e.vertex))
        throw DomainError("leftmost_pon: entry at position is already fixed");
    std::vector<int> chosen;
    chosen.reserve(static_cast<size_t>(e.outdegree));
    for (const OvsEntry& cand : state.arrangement) {
        if (static_cast<int>(chosen.size()) == e.outdegree) break;
        if (cand.vertex == e.vertex) continue;
        if (state.graph.has_edge(cand.vertex, e.vertex)) continue;  // in-neighbor
        chosen.push_back(cand.vertex);
    }
    if (static_cast<int>(chosen.size()) < e.outdegree) return std::nullopt;
    return chosen;
}

/// Result of realize/realize_constrained. On failure, `failed_position` is
/// the arrangement index that starved and `candidate_count` how many
/// candidates it had.
struct RealizeOutcome {
    bool realizable = false;
    OrientedGraph graph;
    int failed_position = -1;
    int candidate_count = -1;

    explicit operator bool() const { return realizable; }
};

namespace detail {

inline void check_distinct_vertices(const Ovs& ovs) {
    std::set<int> seen;
    for (const OvsEntry& e : ovs) {
        if (e.outdegree < 0) throw DomainError("ovs: negative outdegree");
        if (!seen.insert(e.vertex).second)
            throw DomainError("ovs: duplicate vertex id " + std::to_string(e.vertex));
    }
}

inline RealizeOutcome run_realizer(RealizerState state) {
    const size_t n = state.arrangement.size();
    while (state.fixed.size() < n) {
        state = gw_normalize(state);
        const size_t pos = state.fixed.size();  // first non-fixed entry
        const OvsEntry entry = state.arrangement[pos];
        auto pon = leftmost_pon(state, pos);
        if (!pon) {
            RealizeOutcome fail;
            fail.realizable = false;
            fail.failed_position = static_cast<int>(pos);
            int avail = 0;
            for (const OvsEntry& cand : state.arrangement) {
                if (cand.vertex == entry.vertex) continue;
                if (state.graph.has_edge(cand.vertex, entry.vertex)) continue;
                ++avail;
            }
            fail.candidate_count = avail;
            return fail;
        }
        for (int v : *pon) state.graph.add_edge(entry.vertex, v);
        state.fixed.insert(entry.vertex);
    }
    RealizeOutcome ok;
    ok.realizable = true;
    ok.graph = std::move(state.graph);
    return ok;
}

}  // namespace detail

/// Greedy recognition and construction: decides whether the sequence is
/// realizable by an oriented graph and, if so, builds the realization in
/// which every processed vertex receives its leftmost candidate set.
inline RealizeOutcome realize(const Ovs& ovs) {
    detail::check_distinct_vertices(ovs);
    RealizerState state;
    state.arrangement = normalize(ovs);
    for (const OvsEntry& e : state.arrangement) {
        state.graph.add_vertex(e.vertex);
        if (e.outdegree == 0) state.fixed.insert(e.vertex);
    }
    return detail::run_realizer(std::move(state));
}

/// Variant of realize that starts from a partial graph: `preset` edges are
/// installed up front and the out-neighborhoods of `preset_fixed` vertices
/// are never touched.
inline RealizeOutcome realize_constrained(const Ovs& ovs,
                                          const std::vector<std::pair<int, int>>& preset,
                                          const std::set<int>& preset_fixed) {
    detail::check_distinct_vertices(ovs);
    RealizerState state;
    state.arrangement = normalize(ovs);
    for (const OvsEntry& e : state.arrangement) {
        state.graph.add_vertex(e.vertex);
        if (e.outdegree == 0) state.fixed.insert(e.vertex);
    }
    for (auto [u, v] : preset) {
        if (!preset_fixed.count(u))
            throw DomainError("realize_constrained: preset source not in fixed set");
        state.graph.add_edge(u, v);  // rejects loops and anti-parallel pairs
    }
    for (int v : preset_fixed) {
        if (!state.graph.has_vertex(v))
            throw DomainError("realize_constrained: fixed vertex not in sequence");
        state.fixed.insert(v);
    }
    // preset out-neighborhoods must already meet their outdegrees
    for (const OvsEntry& e : state.arrangement)
        if (state.fixed.count(e.vertex) && state.graph.out_degree(e.vertex) != e.outdegree)
            throw DomainError("realize_constrained: preset outdegree mismatch at vertex " +
                              std::to_string(e.vertex));
    return detail::run_realizer(std::move(state));
}

}  // namespace starcol
