// Acceptance suite: nine top-level checks, one PASS/FAIL line each.
// Exit status is the number of failed checks.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "starcol/bounds.hpp"
#include "starcol/gen.hpp"
#include "starcol/oracle.hpp"
#include "starcol/ovs.hpp"
#include "starcol/star_2h.hpp"
#include "starcol/star_tree.hpp"
#include "starcol/tree.hpp"

using namespace starcol;

namespace {

int failures = 0;

class Criterion {
  public:
    explicit Criterion(int number, std::string title)
        : number_(number), title_(std::move(title)),
          start_(std::chrono::steady_clock::now()) {}

    void expect(bool ok, const std::string& what) {
        if (!ok && problem_.empty()) problem_ = what;
        ok_ = ok_ && ok;
    }

    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

    void finish(double budget_seconds = 0.0) {
        double elapsed = seconds();
        if (budget_seconds > 0.0 && elapsed >= budget_seconds) {
            ok_ = false;
            if (problem_.empty())
                problem_ = "runtime " + std::to_string(elapsed) + "s exceeds budget";
        }
        std::ostringstream line;
        line << (ok_ ? "PASS" : "FAIL") << " criterion " << number_ << ": " << title_ << " ["
             << elapsed << " s]";
        if (!ok_) line << " -- " << problem_;
        std::cout << line.str() << "\n";
        if (!ok_) ++failures;
    }

  private:
    int number_;
    std::string title_;
    bool ok_ = true;
    std::string problem_;
    std::chrono::steady_clock::time_point start_;
};

TwoHProfile make_profile(std::vector<int> n) {
    TwoHProfile p;
    p.t = static_cast<int>(n.size());
    p.n = std::move(n);
    std::sort(p.n.begin(), p.n.end());
    return p;
}

// re-drive the public realizer state machine and compare against the graph
bool replay_matches(const Ovs& ovs, const OrientedGraph& produced) {
    RealizerState state;
    state.arrangement = normalize(ovs);
    for (const OvsEntry& e : state.arrangement) {
        state.graph.add_vertex(e.vertex);
        if (e.outdegree == 0) state.fixed.insert(e.vertex);
    }
    while (state.fixed.size() < state.arrangement.size()) {
        state = gw_normalize(state);
        const OvsEntry entry = state.arrangement[state.fixed.size()];
        auto pon = leftmost_pon(state, state.fixed.size());
        if (!pon) return false;
        std::set<int> want(pon->begin(), pon->end());
        if (want != produced.out_neighbors(entry.vertex)) return false;
        for (int v : *pon) state.graph.add_edge(entry.vertex, v);
        state.fixed.insert(entry.vertex);
    }
    return state.graph == produced;
}

void criterion1_figure_reproduction() {
    Criterion c(1, "figure reproduction: example sequence and T_{2,3,3} coloring");

    Ovs fig = {{2, 1}, {3, 2}, {3, 3}, {0, 4}, {0, 5}};
    RealizeOutcome out = realize(fig);
    c.expect(out.realizable, "example sequence not realizable");
    if (out.realizable) {
        c.expect(out.graph.edge_count() == 8,
                 "expected 8 edges, got " + std::to_string(out.graph.edge_count()));
        c.expect(replay_matches(fig, out.graph), "replay invariant violated");
    }

    Color2hResult res = color_2h(make_profile({2, 3, 3}));
    c.expect(res.index == 5, "index of T_{2,3,3} is " + std::to_string(res.index));
    std::set<int> eu1;
    for (const auto& [e, col] : res.coloring.assignment)
        if (e.first == 1 && e.second > 3) eu1.insert(col);
    c.expect(eu1 == std::set<int>{4, 5}, "E_{u_1} colors are not {4,5}");
    c.expect(validate_coloring(res.tree, res.coloring).valid, "coloring rejected by validator");

    c.finish(1.0);
}

void criterion2_oracle_equivalence() {
    Criterion c(2, "oracle equivalence and validation on all trees up to 10 vertices");

    int classes = 0;
    for (int n = 1; n <= 10; ++n) {
        for (const Tree& tree : enumerate_trees(n)) {
            ++classes;
            ColorTreeResult res = color_tree(tree);
            int oracle = exact_index_bruteforce(tree);
            if (res.index != oracle) {
                c.expect(false, "index mismatch on a tree with " + std::to_string(n) +
                                    " vertices (" + std::to_string(res.index) + " vs oracle " +
                                    std::to_string(oracle) + ")");
            }
            if (tree.edge_count() > 0)
                c.expect(validate_coloring(tree, res.coloring).valid,
                         "invalid coloring on a tree with " + std::to_string(n) + " vertices");
        }
    }
    c.expect(classes == 201, "expected 201 classes, saw " + std::to_string(classes));

    c.finish(600.0);
}

void criterion3_regular_formula() {
    Criterion c(3, "regular two-ball formula r in 1..12, t in 2..12");
    for (int r = 1; r <= 12; ++r) {
        for (int t = 2; t <= 12; ++t) {
            TwoHProfile p;
            p.t = t;
            p.n.assign(static_cast<size_t>(t), r - 1);
            Color2hResult res = color_2h(p);
            if (regular_2h_index(r, t) != res.index)
                c.expect(false, "mismatch at r=" + std::to_string(r) + " t=" + std::to_string(t));
        }
    }
    c.finish(10.0);
}

void criterion4_bound_sandwich() {
    Criterion c(4, "bound sandwich on 1000 seeded random profiles (t<=30, n<=30)");
    for (int i = 0; i < 1000; ++i) {
        TwoHProfile p = random_profile(30, 30, 0xB0B + static_cast<std::uint64_t>(i));
        int exact = p.t + min_k(p);
        if (!(lower_bound_2h(p) <= exact && exact <= upper_bound_2h(p)))
            c.expect(false, "violation at seed offset " + std::to_string(i));
    }
    c.finish();
}

void criterion5_caterpillar_formula() {
    Criterion c(5, "caterpillar formula vs algorithm (1000 random) and vs oracle (<=10 vertices)");
    for (int i = 0; i < 1000; ++i) {
        Tree cat = random_caterpillar(2 + (i % 199), 0xCA7 + static_cast<std::uint64_t>(i));
        if (caterpillar_index(cat) != star_index(cat))
            c.expect(false, "random caterpillar mismatch at " + std::to_string(i));
    }
    for (int n = 2; n <= 10; ++n) {
        for (const Tree& tree : enumerate_trees(n)) {
            if (!is_caterpillar(tree)) continue;
            if (caterpillar_index(tree) != exact_index_bruteforce(tree))
                c.expect(false, "small caterpillar mismatch at n=" + std::to_string(n));
        }
    }
    c.finish();
}

void criterion6_near_star_formula() {
    Criterion c(6, "near-star formula on all conforming profiles (t<=8, n<=6)");
    for (int t = 2; t <= 8; ++t) {
        for (int a = 0; a <= 6; ++a) {
            for (int b = a; b <= 6; ++b) {
                TwoHProfile p;
                p.t = t;
                p.n.assign(static_cast<size_t>(t), 0);
                p.n[static_cast<size_t>(t - 2)] = a;
                p.n[static_cast<size_t>(t - 1)] = b;
                if (near_star_2h_index(p) != color_2h(p).index)
                    c.expect(false, "mismatch at t=" + std::to_string(t) + " n=(" +
                                        std::to_string(a) + "," + std::to_string(b) + ")");
            }
        }
    }
    c.finish();
}

void criterion7_constructive_colorings() {
    Criterion c(7, "constructive colorings: round-robin t<=50 and transforms r<=20, t<=20");
    for (int t = 2; t <= 50; ++t) {
        RegularColoringResult rc = round_robin_color_regular(t);
        if (rc.coloring.palette_size != t + t / 2)
            c.expect(false, "round-robin palette wrong at t=" + std::to_string(t));
        if (!validate_coloring(rc.tree, rc.coloring).valid)
            c.expect(false, "round-robin coloring rejected at t=" + std::to_string(t));
    }
    for (int r = 1; r <= 20; ++r) {
        for (int t = 2; t <= 20; ++t) {
            RegularColoringResult rc = regular_2h_color(r, t);
            int want = t <= 2 * r - 1 ? r + t / 2 : t;
            if (rc.coloring.palette_size != want)
                c.expect(false, "transform palette wrong at r=" + std::to_string(r) + " t=" +
                                    std::to_string(t));
            if (!validate_coloring(rc.tree, rc.coloring).valid)
                c.expect(false, "transform coloring rejected at r=" + std::to_string(r) + " t=" +
                                    std::to_string(t));
        }
    }
    c.finish();
}

void criterion8_ovgs_completeness() {
    Criterion c(8, "realizability matches exhaustive enumeration (<=5 vertices, outdeg<=4)");

    for (int n = 1; n <= 5; ++n) {
        // ground truth: outdegree multisets attainable over all orientations
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
        std::set<std::vector<int>> truth;
        std::vector<int> outdeg(static_cast<size_t>(n), 0);
        auto walk = [&](auto&& self, size_t p) -> void {
            if (p == pairs.size()) {
                std::vector<int> key = outdeg;
                std::sort(key.begin(), key.end());
                truth.insert(key);
                return;
            }
            auto [i, j] = pairs[p];
            self(self, p + 1);
            ++outdeg[static_cast<size_t>(i)];
            self(self, p + 1);
            --outdeg[static_cast<size_t>(i)];
            ++outdeg[static_cast<size_t>(j)];
            self(self, p + 1);
            --outdeg[static_cast<size_t>(j)];
        };
        walk(walk, 0);

        std::vector<int> tuple(static_cast<size_t>(n), 0);
        auto sweep = [&](auto&& self, int pos) -> void {
            if (pos == n) {
                Ovs ovs;
                for (int i = 0; i < n; ++i) ovs.push_back({tuple[static_cast<size_t>(i)], i + 1});
                std::vector<int> key = tuple;
                std::sort(key.begin(), key.end());
                if (realize(ovs).realizable != (truth.count(key) > 0)) {
                    std::string desc = "mismatch on (";
                    for (int d : key) desc += std::to_string(d) + ",";
                    c.expect(false, desc + ")");
                }
                return;
            }
            for (int d = 0; d <= 4; ++d) {
                tuple[static_cast<size_t>(pos)] = d;
                self(self, pos + 1);
            }
        };
        sweep(sweep, 0);
    }
    c.finish(300.0);
}

void criterion9_runtime_envelope() {
    Criterion c(9, "runtime envelope on random trees (n=1000 under 1 s, n=10000 under 60 s)");

    Tree small = random_tree(1000, 20260809);
    auto s0 = std::chrono::steady_clock::now();
    ColorTreeResult rs = color_tree(small);
    double small_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - s0).count();
    c.expect(small_s < 1.0, "n=1000 took " + std::to_string(small_s) + " s");
    c.expect(validate_coloring(small, rs.coloring).valid, "n=1000 coloring invalid");

    Tree big = random_tree(10000, 20260810);
    auto b0 = std::chrono::steady_clock::now();
    ColorTreeResult rb = color_tree(big);
    double big_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - b0).count();
    c.expect(big_s < 60.0, "n=10000 took " + std::to_string(big_s) + " s");
    c.expect(validate_coloring(big, rb.coloring).valid, "n=10000 coloring invalid");

    c.finish();
}

}  // namespace

int main() {
    criterion1_figure_reproduction();
    criterion2_oracle_equivalence();
    criterion3_regular_formula();
    criterion4_bound_sandwich();
    criterion5_caterpillar_formula();
    criterion6_near_star_formula();
    criterion7_constructive_colorings();
    criterion8_ovgs_completeness();
    criterion9_runtime_envelope();

    if (failures == 0)
        std::cout << "acceptance: all 9 criteria passed\n";
    else
        std::cout << "acceptance: " << failures << " criteria FAILED\n";
    return failures;
}
