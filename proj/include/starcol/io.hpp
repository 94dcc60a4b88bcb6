#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <json.hpp>

#include "starcol/coloring.hpp"
#include "starcol/errors.hpp"
#include "starcol/tree.hpp"

namespace starcol {

/// A parsed tree plus the mapping between external labels and the dense
/// 0-based ids used internally. Labels are assigned ids in order of first
/// appearance in the input.
struct LabeledTree {
    Tree tree;
    std::vector<std::int64_t> labels;          // id -> external label
    std::map<std::int64_t, int> label_to_id;   // external label -> id

    std::int64_t label_of(int id) const { return labels[static_cast<size_t>(id)]; }

    int id_of(std::int64_t label) const {
        auto it = label_to_id.find(label);
        if (it == label_to_id.end())
            throw CoverageMismatch("unknown vertex label " + std::to_string(label));
        return it->second;
    }

    static LabeledTree identity(const Tree& t) {
        LabeledTree lt;
        lt.tree = t;
        for (int v = 0; v < t.vertex_count; ++v) {
            lt.labels.push_back(v);
            lt.label_to_id[v] = v;
        }
        return lt;
    }
};

/// Parses the plain edge-list format: one "u v" pair per line, '#' starts a
/// comment, blank lines are ignored. Labels may be arbitrary integers.
inline LabeledTree parse_tree(std::istream& in) {
    LabeledTree lt;
    std::vector<std::pair<int, int>> edges;
    std::string line;
    int lineno = 0;

    auto intern = [&lt](std::int64_t label) {
        auto it = lt.label_to_id.find(label);
        if (it != lt.label_to_id.end()) return it->second;
        int id = static_cast<int>(lt.labels.size());
        lt.labels.push_back(label);
        lt.label_to_id.emplace(label, id);
        return id;
    };

    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::int64_t a, b;
        if (!(ls >> a)) continue;  // blank or comment-only
        if (!(ls >> b))
            throw ParseError("line " + std::to_string(lineno) + ": expected two integers");
        std::int64_t extra;
        if (ls >> extra)
            throw ParseError("line " + std::to_string(lineno) + ": trailing token");
        int ia = intern(a);  // evaluation order matters: a interns first
        int ib = intern(b);
        edges.emplace_back(ia, ib);
    }
    if (edges.empty()) throw ParseError("no edges in input");

    try {
        lt.tree = build_tree(edges);
    } catch (const Error& e) {
        throw ParseError(std::string("input is not a tree: ") + e.what());
    }
    if (lt.tree.vertex_count != static_cast<int>(lt.labels.size()))
        throw ParseError("input is not a tree: isolated vertex id gap");
    return lt;
}

inline LabeledTree parse_tree(const std::string& text) {
    std::istringstream in(text);
    return parse_tree(in);
}

inline void write_tree(std::ostream& out, const Tree& tree) {
    for (auto [u, v] : tree.edges()) out << u << " " << v << "\n";
}

/// Comma-separated profile "n1,n2,...,nt"; entries are sorted ascending.
inline TwoHProfile parse_profile(const std::string& text) {
    TwoHProfile p;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        try {
            size_t used = 0;
            int v = std::stoi(item, &used);
            while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used])))
                ++used;
            if (used != item.size()) throw std::invalid_argument(item);
            if (v < 0) throw ParseError("profile entries must be non-negative");
            p.n.push_back(v);
        } catch (const std::logic_error&) {
            throw ParseError("bad profile entry '" + item + "'");
        }
    }
    if (p.n.empty()) throw ParseError("empty profile");
    std::sort(p.n.begin(), p.n.end());
    p.t = static_cast<int>(p.n.size());
    return p;
}

/// {"palette": m, "edges": {"u-v": color}} with u < v by label and keys in
/// ascending edge order, so byte-identical across runs.
inline std::string coloring_to_json(const EdgeColoring& coloring, const LabeledTree& lt) {
    nlohmann::ordered_json j;
    j["palette"] = coloring.palette_size;
    nlohmann::ordered_json edges = nlohmann::ordered_json::object();
    std::vector<std::tuple<std::int64_t, std::int64_t, int>> rows;
    for (const auto& [e, c] : coloring.assignment) {
        std::int64_t a = lt.label_of(e.first), b = lt.label_of(e.second);
        if (a > b) std::swap(a, b);
        rows.emplace_back(a, b, c);
    }
    std::sort(rows.begin(), rows.end());
    for (auto [a, b, c] : rows)
        edges[std::to_string(a) + "-" + std::to_string(b)] = c;
    j["edges"] = std::move(edges);
    return j.dump(2) + "\n";
}

inline EdgeColoring coloring_from_json(const std::string& text, const LabeledTree& lt) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad coloring json: ") + e.what());
    }
    if (!j.contains("palette") || !j.contains("edges"))
        throw ParseError("coloring json must contain 'palette' and 'edges'");

    EdgeColoring c;
    c.palette_size = j.at("palette").get<int>();
    for (const auto& [key, val] : j.at("edges").items()) {
        auto dash = key.find('-', key.front() == '-' ? 1 : 0);
        if (dash == std::string::npos) throw ParseError("bad edge key '" + key + "'");
        std::int64_t a, b;
        try {
            a = std::stoll(key.substr(0, dash));
            b = std::stoll(key.substr(dash + 1));
        } catch (const std::logic_error&) {
            throw ParseError("bad edge key '" + key + "'");
        }
        c.set(lt.id_of(a), lt.id_of(b), val.get<int>());
    }
    return c;
}

/// DOT rendering with color labels on edges and vertices grouped by their
/// distance from vertex 0 (rank per level).
inline std::string coloring_to_dot(const Tree& tree, const EdgeColoring& coloring,
                                   const LabeledTree& lt) {
    RootedTree rooted = root_at(tree, 0);
    std::ostringstream out;
    out << "graph startree {\n";
    out << "  rankdir=TB;\n  node [shape=circle];\n";
    const int height = rooted.height();
    for (int l = 1; l <= height; ++l) {
        out << "  { rank=same;";
        for (int v = 0; v < tree.vertex_count; ++v)
            if (rooted.level[static_cast<size_t>(v)] == l) out << " " << lt.label_of(v) << ";";
        out << " }\n";
    }
    for (auto [u, v] : tree.edges())
        out << "  " << lt.label_of(u) << " -- " << lt.label_of(v) << " [label=\""
            << coloring.get(u, v) << "\"];\n";
    out << "}\n";
    return out.str();
}

inline std::string tree_to_dot(const Tree& tree, const LabeledTree& lt) {
    RootedTree rooted = root_at(tree, 0);
    std::ostringstream out;
    out << "graph startree {\n";
    out << "  rankdir=TB;\n  node [shape=circle];\n";
    const int height = rooted.height();
    for (int l = 1; l <= height; ++l) {
        out << "  { rank=same;";
        for (int v = 0; v < tree.vertex_count; ++v)
            if (rooted.level[static_cast<size_t>(v)] == l) out << " " << lt.label_of(v) << ";";
        out << " }\n";
    }
    for (auto [u, v] : tree.edges())
        out << "  " << lt.label_of(u) << " -- " << lt.label_of(v) << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace starcol
