#include "treeuniv/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace treeuniv {

namespace {

struct RawGraph {
    int n = -1;
    std::vector<std::pair<int, int>> arcs;
    std::optional<int> root_r;     // `r <vertex>` (tree format)
    std::optional<int> root_end;   // `root <end>` (rooted path format)
};

RawGraph read_raw(std::istream& in, const std::string& source) {
    RawGraph raw;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;  // blank line
        if (tag[0] == '#') continue;
        if (tag == "n") {
            if (raw.n >= 0) throw ParseError(source, lineno, "duplicate vertex-count line");
            if (!(ls >> raw.n) || raw.n < 0) throw ParseError(source, lineno, "bad vertex count");
        } else if (tag == "a") {
            if (raw.n < 0) throw ParseError(source, lineno, "arc before vertex-count line");
            int u, v;
            if (!(ls >> u >> v)) throw ParseError(source, lineno, "bad arc line");
            if (u < 0 || u >= raw.n || v < 0 || v >= raw.n)
                throw ParseError(source, lineno, "arc endpoint out of range");
            if (u == v) throw ParseError(source, lineno, "self-loop");
            raw.arcs.emplace_back(u, v);
        } else if (tag == "r") {
            int v;
            if (!(ls >> v)) throw ParseError(source, lineno, "bad root line");
            raw.root_r = v;
        } else if (tag == "root") {
            int v;
            if (!(ls >> v)) throw ParseError(source, lineno, "bad root line");
            raw.root_end = v;
        } else {
            throw ParseError(source, lineno, "unknown directive '" + tag + "'");
        }
        std::string extra;
        if (ls >> extra && extra[0] != '#')
            throw ParseError(source, lineno, "trailing tokens");
    }
    if (raw.n < 0) throw ParseError(source, lineno + 1, "missing vertex-count line");
    return raw;
}

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return in;
}

}  // namespace

Digraph read_digraph(std::istream& in, const std::string& source) {
    auto raw = read_raw(in, source);
    if (raw.root_r || raw.root_end) throw ParseError(source, 1, "root line not allowed in digraph format");
    return Digraph::from_arcs(raw.n, raw.arcs);
}

Digraph read_digraph_file(const std::string& path) {
    auto in = open_or_throw(path);
    return read_digraph(in, path);
}

std::string format_digraph(const Digraph& d) {
    std::string out = "n " + std::to_string(d.order()) + "\n";
    for (auto [u, v] : d.arcs()) out += "a " + std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

void write_digraph_file(const std::string& path, const Digraph& d) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << format_digraph(d);
}

OrientedTree read_tree(std::istream& in, const std::string& source) {
    auto raw = read_raw(in, source);
    if (raw.root_end) throw ParseError(source, 1, "'root' line belongs to the rooted path format; use 'r'");
    try {
        return OrientedTree(raw.n, raw.arcs, raw.root_r);
    } catch (const std::invalid_argument& e) {
        throw ParseError(source, 1, e.what());
    }
}

OrientedTree read_tree_file(const std::string& path) {
    auto in = open_or_throw(path);
    return read_tree(in, path);
}

std::string format_tree(const OrientedTree& t) {
    std::string out = format_digraph(t.graph());
    if (t.root()) out += "r " + std::to_string(*t.root()) + "\n";
    return out;
}

void write_tree_file(const std::string& path, const OrientedTree& t) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << format_tree(t);
}

RootedOrientedPath read_rooted_path(std::istream& in, const std::string& source) {
    auto raw = read_raw(in, source);
    if (!raw.root_end) throw ParseError(source, 1, "rooted path format requires a 'root' line");
    int root = *raw.root_end;
    if (root < 0 || root >= raw.n) throw ParseError(source, 1, "root out of range");
    // Recover the traversal order from the underlying path structure.
    std::vector<std::vector<int>> nbrs(raw.n);
    for (auto [u, v] : raw.arcs) {
        nbrs[u].push_back(v);
        nbrs[v].push_back(u);
    }
    if (static_cast<int>(raw.arcs.size()) != raw.n - 1)
        throw ParseError(source, 1, "path must have order-1 arcs");
    for (int v = 0; v < raw.n; ++v)
        if (nbrs[v].size() > 2) throw ParseError(source, 1, "vertex of degree > 2; not a path");
    if (raw.n > 1 && nbrs[root].size() != 1) throw ParseError(source, 1, "root is not an extremity");
    std::vector<int> seq{root};
    std::vector<char> seen(raw.n, 0);
    seen[root] = 1;
    while (static_cast<int>(seq.size()) < raw.n) {
        int cur = seq.back();
        int next = -1;
        for (int w : nbrs[cur])
            if (!seen[w]) next = w;
        if (next < 0) throw ParseError(source, 1, "arcs do not form a connected path");
        seen[next] = 1;
        seq.push_back(next);
    }
    std::set<std::pair<int, int>> arc_set(raw.arcs.begin(), raw.arcs.end());
    std::vector<bool> steps(raw.n - 1);
    for (int i = 0; i + 1 < raw.n; ++i) {
        bool fwd = arc_set.count({seq[i], seq[i + 1]}) > 0;
        bool bwd = arc_set.count({seq[i + 1], seq[i]}) > 0;
        if (fwd == bwd) throw ParseError(source, 1, "consecutive path vertices need exactly one arc");
        steps[i] = fwd;
    }
    return RootedOrientedPath(std::move(seq), std::move(steps));
}

RootedOrientedPath read_rooted_path_file(const std::string& path) {
    auto in = open_or_throw(path);
    return read_rooted_path(in, path);
}

std::string format_rooted_path(const RootedOrientedPath& p) {
    int maxv = 0;
    for (int v : p.vertices()) maxv = std::max(maxv, v);
    std::string out = "n " + std::to_string(maxv + 1) + "\n";
    std::vector<std::pair<int, int>> arcs;
    for (int i = 0; i < p.length(); ++i) {
        int a = p.forward(i) ? p.vertices()[i] : p.vertices()[i + 1];
        int b = p.forward(i) ? p.vertices()[i + 1] : p.vertices()[i];
        arcs.emplace_back(a, b);
    }
    std::sort(arcs.begin(), arcs.end());
    for (auto [u, v] : arcs) out += "a " + std::to_string(u) + " " + std::to_string(v) + "\n";
    out += "root " + std::to_string(p.root()) + "\n";
    return out;
}

}  // namespace treeuniv
