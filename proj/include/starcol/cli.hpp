#pragma once

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "starcol/bounds.hpp"
#include "starcol/errors.hpp"
#include "starcol/gen.hpp"
#include "starcol/io.hpp"
#include "starcol/oracle.hpp"
#include "starcol/ovs.hpp"
#include "starcol/star_2h.hpp"
#include "starcol/star_tree.hpp"
#include "starcol/tree.hpp"

namespace starcol {

// exit codes shared by every subcommand
constexpr int kExitOk = 0;
constexpr int kExitInvalidColoring = 1;
constexpr int kExitInputError = 2;
constexpr int kExitInternalError = 3;

namespace cli_detail {

inline std::string read_text(const std::string& path, std::istream& stdin_stream) {
    if (path == "-") {
        std::ostringstream buf;
        buf << stdin_stream.rdbuf();
        return buf.str();
    }
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << f.rdbuf();
    return buf.str();
}

inline void write_text(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw ParseError("cannot open '" + path + "' for writing");
    f << text;
}

inline std::string profile_to_string(const TwoHProfile& p) {
    std::string s;
    for (size_t i = 0; i < p.n.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(p.n[i]);
    }
    return s;
}

inline std::vector<int> parse_sizes(const std::string& text) {
    std::vector<int> sizes;
    if (text.empty()) return sizes;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            sizes.push_back(std::stoi(item));
        } catch (const std::logic_error&) {
            throw ParseError("bad size '" + item + "'");
        }
    }
    return sizes;
}

struct PhaseLog {
    std::ostream& out;
    int failures = 0;

    void pass(const std::string& name, const std::string& detail) {
        out << "PASS " << name << " (" << detail << ")\n";
    }
    void fail(const std::string& name, const std::string& detail) {
        ++failures;
        out << "FAIL " << name << " (" << detail << ")\n";
    }
    void skip(const std::string& name, const std::string& detail) {
        out << "SKIP " << name << " (" << detail << ")\n";
    }
    void check(const std::string& name, bool ok, const std::string& detail) {
        if (ok)
            pass(name, detail);
        else
            fail(name, detail);
    }
};

inline int run_index(const std::string& input, const std::string& format, std::istream& in,
                     std::ostream& out) {
    LabeledTree lt = parse_tree(read_text(input, in));
    const Tree& tree = lt.tree;

    int best = 0, best_vertex = 0, attained = 0;
    TwoHProfile best_profile;
    for (int v = 0; v < tree.vertex_count; ++v) {
        TwoHProfile p = two_ball(tree, v);
        int idx = p.t + min_k(p);
        if (idx > best) {
            best = idx;
            best_vertex = v;
            best_profile = p;
            attained = 0;
        }
        if (idx == best) ++attained;
    }
    BoundReport rep = bound_report_2h(best_profile);

    if (format == "json") {
        nlohmann::ordered_json j;
        j["index"] = best;
        j["vertices"] = tree.vertex_count;
        j["edges"] = tree.edge_count();
        j["max_degree"] = tree.max_degree();
        j["argmax_vertex"] = lt.label_of(best_vertex);
        j["argmax_profile"] = best_profile.n;
        j["argmax_lower"] = rep.lower;
        j["argmax_upper"] = rep.upper;
        j["vertices_attaining_max"] = attained;
        out << j.dump(2) << "\n";
    } else {
        out << "star chromatic index: " << best << "\n";
        out << "vertices: " << tree.vertex_count << "  edges: " << tree.edge_count()
            << "  max degree: " << tree.max_degree() << "\n";
        out << "attained at vertex " << lt.label_of(best_vertex) << " (profile "
            << profile_to_string(best_profile) << "), " << attained
            << " vertex ball(s) reach the maximum\n";
        out << "bounds at that vertex: lower " << rep.lower << " (" << rep.lower_source
            << "), upper " << rep.upper << " (" << rep.upper_source << ")\n";
    }
    return kExitOk;
}

inline int run_color(const std::string& input, const std::string& output,
                     const std::string& format, std::istream& in, std::ostream& out) {
    LabeledTree lt = parse_tree(read_text(input, in));
    ColorTreeResult res = color_tree(lt.tree);

    Verdict v = validate_coloring(lt.tree, res.coloring);
    if (!v.valid) throw InternalError("emitted coloring failed validation");

    if (format == "dot")
        write_text(output, coloring_to_dot(lt.tree, res.coloring, lt), out);
    else
        write_text(output, coloring_to_json(res.coloring, lt), out);
    return kExitOk;
}

inline int run_bounds(const std::string& profile_text, const std::string& format,
                      std::ostream& out) {
    TwoHProfile p = parse_profile(profile_text);
    BoundReport rep = bound_report_2h(p);
    rep.exact = p.t + min_k(p);
    rep.exact_source = "greedy-realization";

    if (format == "json") {
        nlohmann::ordered_json j;
        j["profile"] = p.n;
        j["t"] = p.t;
        j["lower"] = rep.lower;
        j["lower_source"] = rep.lower_source;
        j["upper"] = rep.upper;
        j["upper_source"] = rep.upper_source;
        j["exact"] = *rep.exact;
        j["exact_source"] = rep.exact_source;
        out << j.dump(2) << "\n";
    } else {
        out << "profile " << profile_to_string(p) << " (t=" << p.t << ")\n";
        out << "lower " << rep.lower << " (" << rep.lower_source << ")\n";
        out << "upper " << rep.upper << " (" << rep.upper_source << ")\n";
        out << "exact " << *rep.exact << " (" << rep.exact_source << ")\n";
    }
    return kExitOk;
}

inline int run_validate(const std::string& input, const std::string& coloring_path,
                        std::istream& in, std::ostream& out) {
    LabeledTree lt = parse_tree(read_text(input, in));
    EdgeColoring coloring = coloring_from_json(read_text(coloring_path, in), lt);

    Verdict v = validate_coloring(lt.tree, coloring);
    if (v.valid) {
        out << "valid: palette " << coloring.palette_size << ", " << coloring.size()
            << " edges\n";
        return kExitOk;
    }
    out << "invalid: "
        << (v.kind == Verdict::Kind::NotProper ? "adjacent edges share a color"
                                               : "bi-colored 4-edge path")
        << ", witness vertices:";
    for (int w : v.witness) out << " " << lt.label_of(w);
    out << "\n";
    return kExitInvalidColoring;
}

inline int run_gen(const std::string& kind, int n, int r, int t, const std::string& profile_text,
                   std::uint64_t seed, const std::string& output, std::ostream& out) {
    Tree tree;
    if (kind == "random") {
        if (n < 2) throw ParseError("gen random: need --n >= 2");
        tree = random_tree(n, seed);
    } else if (kind == "caterpillar") {
        if (n < 2) throw ParseError("gen caterpillar: need --n >= 2");
        tree = random_caterpillar(n, seed);
    } else if (kind == "regular2h") {
        if (r < 1 || t < 1) throw ParseError("gen regular2h: need --r >= 1 and --t >= 1");
        tree = regular_2h_tree(r, t);
    } else if (kind == "profile") {
        if (profile_text.empty()) throw ParseError("gen profile: need --profile");
        tree = materialize_profile(parse_profile(profile_text));
    } else {
        throw ParseError("unknown generator kind '" + kind + "'");
    }
    std::ostringstream buf;
    write_tree(buf, tree);
    write_text(output, buf.str(), out);
    return kExitOk;
}

inline int run_selftest(int max_n, std::uint64_t seed, std::ostream& out) {
    PhaseLog log{out};
    const bool oracle_ok = max_n <= 10;

    if (!oracle_ok) {
        log.skip("oracle-equivalence", "TooLarge: exhaustive oracle is guarded at n=10");
        log.skip("palette-tightness", "TooLarge: exhaustive oracle is guarded at n=10");
        log.skip("caterpillar-vs-oracle", "TooLarge: exhaustive oracle is guarded at n=10");
    } else {
        int classes = 0, mismatches = 0, invalid = 0;
        for (int n = 2; n <= max_n; ++n) {
            for (const Tree& tree : enumerate_trees(n)) {
                ++classes;
                ColorTreeResult res = color_tree(tree);
                if (res.index != exact_index_bruteforce(tree)) ++mismatches;
                if (!validate_coloring(tree, res.coloring).valid) ++invalid;
            }
        }
        log.check("oracle-equivalence", mismatches == 0 && invalid == 0,
                  std::to_string(classes) + " classes, " + std::to_string(mismatches) +
                      " index mismatches, " + std::to_string(invalid) + " invalid colorings");

        int tight = 0, loose = 0;
        for (int n = 2; n <= std::min(max_n, 9); ++n) {
            for (const Tree& tree : enumerate_trees(n)) {
                int m = star_index(tree);
                if (m >= 1 && !exact_index_bruteforce_capped(tree, m - 1))
                    ++tight;
                else
                    ++loose;
            }
        }
        log.check("palette-tightness", loose == 0,
                  std::to_string(tight) + " trees pinned, " + std::to_string(loose) + " loose");

        int cats = 0, cat_bad = 0;
        for (int n = 2; n <= max_n; ++n) {
            for (const Tree& tree : enumerate_trees(n)) {
                if (!is_caterpillar(tree)) continue;
                ++cats;
                if (caterpillar_index(tree) != exact_index_bruteforce(tree)) ++cat_bad;
            }
        }
        log.check("caterpillar-vs-oracle", cat_bad == 0,
                  std::to_string(cats) + " caterpillars, " + std::to_string(cat_bad) +
                      " mismatches");
    }

    {
        int bad = 0, cases = 0;
        for (int r = 1; r <= 12; ++r) {
            for (int t = 2; t <= 12; ++t) {
                ++cases;
                TwoHProfile p;
                p.t = t;
                p.n.assign(static_cast<size_t>(t), r - 1);
                if (regular_2h_index(r, t) != p.t + min_k(p)) ++bad;
            }
        }
        log.check("formula-regular", bad == 0,
                  std::to_string(cases) + " (r,t) cases, " + std::to_string(bad) + " mismatches");
    }

    {
        int bad = 0, cases = 0;
        for (int t = 2; t <= 8; ++t) {
            for (int a = 0; a <= 6; ++a) {
                for (int b = a; b <= 6; ++b) {
                    ++cases;
                    TwoHProfile p;
                    p.t = t;
                    p.n.assign(static_cast<size_t>(t), 0);
                    p.n[static_cast<size_t>(t - 2)] = a;
                    p.n[static_cast<size_t>(t - 1)] = b;
                    if (near_star_2h_index(p) != p.t + min_k(p)) ++bad;
                }
            }
        }
        log.check("formula-near-star", bad == 0,
                  std::to_string(cases) + " profiles, " + std::to_string(bad) + " mismatches");
    }

    {
        int bad = 0;
        const int trials = 200;
        for (int i = 0; i < trials; ++i) {
            Tree cat = random_caterpillar(2 + static_cast<int>(i % 199), seed + static_cast<std::uint64_t>(i));
            if (caterpillar_index(cat) != star_index(cat)) ++bad;
        }
        log.check("formula-caterpillar", bad == 0,
                  std::to_string(trials) + " random caterpillars, " + std::to_string(bad) +
                      " mismatches");
    }

    {
        int bad = 0;
        const int trials = 1000;
        for (int i = 0; i < trials; ++i) {
            TwoHProfile p = random_profile(30, 30, seed + 1000 + static_cast<std::uint64_t>(i));
            int exact = p.t + min_k(p);
            if (!(lower_bound_2h(p) <= exact && exact <= upper_bound_2h(p))) ++bad;
        }
        log.check("bound-sandwich", bad == 0,
                  std::to_string(trials) + " random profiles, " + std::to_string(bad) +
                      " violations");
    }

    {
        int bad = 0, cases = 0;
        for (int t = 2; t <= 50; ++t) {
            ++cases;
            RegularColoringResult rc = round_robin_color_regular(t);
            if (!validate_coloring(rc.tree, rc.coloring).valid ||
                rc.coloring.palette_size != t + t / 2)
                ++bad;
        }
        for (int r = 1; r <= 20; ++r) {
            for (int t = 2; t <= 20; ++t) {
                ++cases;
                RegularColoringResult rc = regular_2h_color(r, t);
                int want = t <= 2 * r - 1 ? r + t / 2 : t;
                if (!validate_coloring(rc.tree, rc.coloring).valid ||
                    rc.coloring.palette_size != want)
                    ++bad;
            }
        }
        log.check("constructive-colorings", bad == 0,
                  std::to_string(cases) + " colorings, " + std::to_string(bad) + " rejected");
    }

    out << (log.failures == 0 ? "selftest: all phases passed\n"
                              : "selftest: " + std::to_string(log.failures) + " phase(s) failed\n");
    return log.failures == 0 ? kExitOk : kExitInternalError;
}

inline int run_bench(const std::string& sizes_text, std::uint64_t seed, std::ostream& out) {
    std::vector<int> sizes = parse_sizes(sizes_text);
    out << "n\tindex\tms\n";
    for (size_t i = 0; i < sizes.size(); ++i) {
        Tree tree = random_tree(sizes[i], seed + static_cast<std::uint64_t>(i));
        auto start = std::chrono::steady_clock::now();
        ColorTreeResult res = color_tree(tree);
        auto stop = std::chrono::steady_clock::now();
        double ms = std::chrono::duration<double, std::milli>(stop - start).count();
        out << sizes[i] << "\t" << res.index << "\t" << ms << "\n";
    }
    return kExitOk;
}

}  // namespace cli_detail

/// Entry point shared by the binary and the tests. argv-style args without
/// the program name.
inline int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
                   std::ostream& err) {
    CLI::App app{"exact star edge coloring of trees"};
    app.require_subcommand(1);

    std::string input = "-";
    std::string output;
    std::string format = "plain";
    std::string profile_text;
    std::string coloring_path;
    std::string sizes_text;
    std::string gen_kind;
    std::uint64_t seed = 1;
    int max_n = 8;
    int n = 0, r = 0, t = 0;

    auto* cmd_index = app.add_subcommand("index", "star chromatic index of a tree");
    cmd_index->add_option("--input", input, "edge-list file, '-' for stdin");
    cmd_index->add_option("--format", format)->check(CLI::IsMember({"plain", "json"}));

    auto* cmd_color = app.add_subcommand("color", "optimum star edge coloring of a tree");
    cmd_color->add_option("--input", input, "edge-list file, '-' for stdin");
    cmd_color->add_option("--output", output, "output file, stdout when omitted");
    cmd_color->add_option("--format", format)->check(CLI::IsMember({"json", "dot"}));

    auto* cmd_bounds = app.add_subcommand("bounds", "closed-form bounds for a two-ball profile");
    cmd_bounds->add_option("--profile", profile_text, "comma list n1,...,nt")->required();
    cmd_bounds->add_option("--format", format)->check(CLI::IsMember({"plain", "json"}));

    auto* cmd_validate = app.add_subcommand("validate", "check a coloring against a tree");
    cmd_validate->add_option("--input", input, "edge-list file")->required();
    cmd_validate->add_option("--coloring", coloring_path, "coloring json file")->required();

    auto* cmd_gen = app.add_subcommand("gen", "emit a tree file");
    cmd_gen->add_option("kind", gen_kind, "random | caterpillar | regular2h | profile")
        ->required();
    cmd_gen->add_option("--n", n, "vertex count for random/caterpillar");
    cmd_gen->add_option("--r", r, "neighbor degree for regular2h");
    cmd_gen->add_option("--t", t, "root degree for regular2h");
    cmd_gen->add_option("--profile", profile_text, "profile for kind=profile");
    cmd_gen->add_option("--seed", seed, "generator seed");
    cmd_gen->add_option("--output", output, "output file, stdout when omitted");

    auto* cmd_selftest = app.add_subcommand("selftest", "run the built-in checks");
    cmd_selftest->add_option("--max-n", max_n, "tree size ceiling for oracle phases");
    cmd_selftest->add_option("--seed", seed, "seed for randomized phases");

    auto* cmd_bench = app.add_subcommand("bench", "time color_tree on random trees");
    cmd_bench->add_option("--sizes", sizes_text, "comma list of vertex counts");
    cmd_bench->add_option("--seed", seed, "generator seed");

    std::vector<const char*> argv;
    argv.push_back("starcol");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (cmd_index->parsed()) return cli_detail::run_index(input, format, in, out);
        if (cmd_color->parsed()) return cli_detail::run_color(input, output, format, in, out);
        if (cmd_bounds->parsed()) return cli_detail::run_bounds(profile_text, format, out);
        if (cmd_validate->parsed()) return cli_detail::run_validate(input, coloring_path, in, out);
        if (cmd_gen->parsed())
            return cli_detail::run_gen(gen_kind, n, r, t, profile_text, seed, output, out);
        if (cmd_selftest->parsed()) return cli_detail::run_selftest(max_n, seed, out);
        if (cmd_bench->parsed()) return cli_detail::run_bench(sizes_text, seed, out);
        err << "error: no subcommand\n";
        return kExitInputError;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternalError;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}

}  // namespace starcol
