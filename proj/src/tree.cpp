#include "treeuniv/tree.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace treeuniv {

OrientedTree::OrientedTree(int n, const std::vector<std::pair<int, int>>& arcs,
                           std::optional<int> root)
    : graph_(Digraph::from_arcs(n, arcs)), root_(root) {
    if (n < 1) throw std::invalid_argument("OrientedTree: order must be positive");
    if (graph_.arc_count() != n - 1)
        throw std::invalid_argument("OrientedTree: expected " + std::to_string(n - 1) + " arcs, got " +
                                    std::to_string(graph_.arc_count()));
    if (!graph_.is_oriented()) throw std::invalid_argument("OrientedTree: digon present");
    // Connectivity over the underlying graph.
    if (n > 0) {
        std::vector<char> seen(n, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int count = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : graph_.out_neighbours(v))
                if (!seen[w]) { seen[w] = 1; ++count; stack.push_back(w); }
            for (int w : graph_.in_neighbours(v))
                if (!seen[w]) { seen[w] = 1; ++count; stack.push_back(w); }
        }
        if (count != n) throw std::invalid_argument("OrientedTree: underlying graph not connected");
    }
    if (root_ && (*root_ < 0 || *root_ >= n))
        throw std::out_of_range("OrientedTree: root out of range");
}

void OrientedTree::set_root(std::optional<int> r) {
    if (r && (*r < 0 || *r >= order())) throw std::out_of_range("OrientedTree: root out of range");
    root_ = r;
}

int OrientedTree::unique_neighbour(int leaf) const {
    if (degree(leaf) != 1) throw std::invalid_argument("unique_neighbour: vertex is not a leaf");
    auto out = graph_.out_neighbours(leaf);
    if (!out.empty()) return out.front();
    return graph_.in_neighbours(leaf).front();
}

bool OrientedTree::same_arcs(const OrientedTree& other) const { return graph_ == other.graph_; }

bool OrientedTree::operator==(const OrientedTree& other) const {
    return graph_ == other.graph_ && root_ == other.root_;
}

RootedOrientedPath::RootedOrientedPath(std::vector<int> vertices, std::vector<bool> forward)
    : vertices_(std::move(vertices)), forward_(std::move(forward)) {
    if (vertices_.empty()) throw std::invalid_argument("RootedOrientedPath: empty vertex sequence");
    if (forward_.size() + 1 != vertices_.size())
        throw std::invalid_argument("RootedOrientedPath: step count must be order-1");
    std::set<int> uniq(vertices_.begin(), vertices_.end());
    if (uniq.size() != vertices_.size())
        throw std::invalid_argument("RootedOrientedPath: repeated vertex");
}

RootedOrientedPath RootedOrientedPath::directed(int length) {
    return from_shape(std::vector<bool>(length, true));
}

RootedOrientedPath RootedOrientedPath::from_shape(const std::vector<bool>& steps) {
    std::vector<int> verts(steps.size() + 1);
    for (size_t i = 0; i < verts.size(); ++i) verts[i] = static_cast<int>(i);
    return RootedOrientedPath(std::move(verts), steps);
}

bool RootedOrientedPath::is_directed() const {
    if (forward_.empty()) return true;
    return std::all_of(forward_.begin(), forward_.end(), [](bool f) { return f; }) ||
           std::none_of(forward_.begin(), forward_.end(), [](bool f) { return f; });
}

int RootedOrientedPath::block_count() const {
    if (forward_.empty()) return 0;
    int b = 1;
    for (size_t i = 1; i < forward_.size(); ++i)
        if (forward_[i] != forward_[i - 1]) ++b;
    return b;
}

RootedOrientedPath RootedOrientedPath::rerooted() const {
    std::vector<int> verts(vertices_.rbegin(), vertices_.rend());
    std::vector<bool> steps(forward_.rbegin(), forward_.rend());
    steps.flip();
    return RootedOrientedPath(std::move(verts), std::move(steps));
}

RootedOrientedPath RootedOrientedPath::subpath(int from, int to) const {
    if (from < 0 || to >= order() || from > to)
        throw std::out_of_range("RootedOrientedPath::subpath: bad range");
    std::vector<int> verts(vertices_.begin() + from, vertices_.begin() + to + 1);
    std::vector<bool> steps(forward_.begin() + from, forward_.begin() + to);
    return RootedOrientedPath(std::move(verts), std::move(steps));
}

OrientedTree RootedOrientedPath::to_pattern_tree() const {
    std::vector<std::pair<int, int>> arcs;
    for (int i = 0; i < length(); ++i)
        arcs.emplace_back(forward_[i] ? i : i + 1, forward_[i] ? i + 1 : i);
    return OrientedTree(order(), arcs, 0);
}

std::vector<RootedOrientedPath> blocks(const RootedOrientedPath& p) {
    if (p.length() < 1) throw PreconditionError("blocks: zero-length path");
    std::vector<RootedOrientedPath> out;
    int start = 0;
    for (int i = 1; i <= p.length(); ++i) {
        if (i == p.length() || p.forward(i) != p.forward(i - 1)) {
            out.push_back(p.subpath(start, i));
            start = i;
        }
    }
    return out;
}

LeafSets leaf_sets(const OrientedTree& t) {
    if (t.order() < 2) throw PreconditionError("leaf_sets: single-vertex tree");
    LeafSets s;
    for (int v = 0; v < t.order(); ++v) {
        if (t.degree(v) != 1) continue;
        if (t.graph().in_degree(v) == 1)
            s.out_leaves.push_back(v);  // arc points toward v
        else
            s.in_leaves.push_back(v);
    }
    return s;
}

StrippedTree strip_leaves(const OrientedTree& t, LeafMode mode) {
    auto ls = leaf_sets(t);
    std::set<int> drop;
    if (mode == LeafMode::out || mode == LeafMode::all)
        drop.insert(ls.out_leaves.begin(), ls.out_leaves.end());
    if (mode == LeafMode::in || mode == LeafMode::all)
        drop.insert(ls.in_leaves.begin(), ls.in_leaves.end());
    if (drop.size() >= static_cast<size_t>(t.order()))
        throw PreconditionError("strip_leaves: stripping would empty the tree");
    std::vector<int> keep;
    std::vector<int> new_of(t.order(), -1);
    for (int v = 0; v < t.order(); ++v)
        if (!drop.count(v)) {
            new_of[v] = static_cast<int>(keep.size());
            keep.push_back(v);
        }
    std::vector<std::pair<int, int>> arcs;
    for (auto [u, v] : t.graph().arcs())
        if (new_of[u] >= 0 && new_of[v] >= 0) arcs.emplace_back(new_of[u], new_of[v]);
    std::optional<int> root;
    if (t.root() && new_of[*t.root()] >= 0) root = new_of[*t.root()];
    return {OrientedTree(static_cast<int>(keep.size()), arcs, root), std::move(keep)};
}

namespace {

struct Rooting {
    std::vector<int> parent;
    std::vector<int> order;  // BFS order from the root
};

Rooting root_tree(const OrientedTree& t, int r) {
    if (r < 0 || r >= t.order()) throw std::out_of_range("root out of range");
    Rooting rt;
    rt.parent.assign(t.order(), -1);
    std::vector<char> seen(t.order(), 0);
    std::vector<int> queue{r};
    seen[r] = 1;
    for (size_t head = 0; head < queue.size(); ++head) {
        int v = queue[head];
        rt.order.push_back(v);
        std::vector<int> nbrs = t.graph().out_neighbours(v);
        auto in = t.graph().in_neighbours(v);
        nbrs.insert(nbrs.end(), in.begin(), in.end());
        std::sort(nbrs.begin(), nbrs.end());
        for (int w : nbrs)
            if (!seen[w]) {
                seen[w] = 1;
                rt.parent[w] = v;
                queue.push_back(w);
            }
    }
    return rt;
}

}  // namespace

PathDecomposition descending_decomposition(const OrientedTree& t, int r) {
    auto rt = root_tree(t, r);
    std::vector<int> leaves;
    for (int v = 0; v < t.order(); ++v)
        if (v != r && t.degree(v) == 1) leaves.push_back(v);
    if (leaves.empty()) throw PreconditionError("descending_decomposition: tree has no leaves when rooted here");

    std::vector<char> covered(t.order(), 0);
    PathDecomposition dec;
    for (size_t i = 0; i < leaves.size(); ++i) {
        // Climb from the leaf to the first vertex already covered (the root
        // for the first path); that vertex begins the new descending path.
        std::vector<int> climb{leaves[i]};
        int v = leaves[i];
        while (!covered[v] && v != r) {
            v = rt.parent[v];
            climb.push_back(v);
        }
        std::reverse(climb.begin(), climb.end());
        std::vector<bool> steps(climb.size() - 1);
        for (size_t j = 0; j + 1 < climb.size(); ++j)
            steps[j] = t.graph().has_arc(climb[j], climb[j + 1]);
        for (int w : climb) covered[w] = 1;
        dec.paths.emplace_back(std::move(climb), std::move(steps));
    }
    return dec;
}

PathDecomposition chunk_paths(const PathDecomposition& dec, int ell) {
    if (ell < 1) throw std::invalid_argument("chunk_paths: ell must be positive");
    PathDecomposition out;
    for (const auto& p : dec.paths) {
        for (int start = 0; start < p.length(); start += ell)
            out.paths.push_back(p.subpath(start, std::min(start + ell, p.length())));
    }
    return out;
}

std::vector<std::string> PathDecomposition::validate(const OrientedTree& t) const {
    std::vector<std::string> bad;
    if (paths.empty()) {
        bad.push_back("decomposition has no paths");
        return bad;
    }
    std::set<std::pair<int, int>> seen_arcs;
    std::set<int> seen_verts;
    for (size_t i = 0; i < paths.size(); ++i) {
        const auto& p = paths[i];
        int overlap = 0;
        for (int v : p.vertices()) overlap += seen_verts.count(v) ? 1 : 0;
        if (i == 0) {
            if (t.root() && p.root() != *t.root())
                bad.push_back("first path does not begin at the root");
        } else {
            if (!seen_verts.count(p.root()))
                bad.push_back("path " + std::to_string(i) + " does not begin inside the earlier union");
            if (overlap != 1)
                bad.push_back("path " + std::to_string(i) + " meets the earlier union in " +
                              std::to_string(overlap) + " vertices");
        }
        for (int j = 0; j < p.length(); ++j) {
            int a = p.forward(j) ? p.vertices()[j] : p.vertices()[j + 1];
            int b = p.forward(j) ? p.vertices()[j + 1] : p.vertices()[j];
            if (!t.graph().has_arc(a, b))
                bad.push_back("path " + std::to_string(i) + " uses a non-arc");
            else if (!seen_arcs.insert({a, b}).second)
                bad.push_back("arc reused by path " + std::to_string(i));
        }
        seen_verts.insert(p.vertices().begin(), p.vertices().end());
    }
    if (static_cast<int>(seen_arcs.size()) != t.graph().arc_count())
        bad.push_back("union of paths misses arcs of the tree");
    return bad;
}

namespace {

// Orientation-aware AHU string for the tree rooted at r.
std::string encode_rooted(const OrientedTree& t, int r) {
    auto rt = root_tree(t, r);
    std::vector<std::vector<int>> children(t.order());
    for (int v : rt.order)
        if (rt.parent[v] >= 0) children[rt.parent[v]].push_back(v);
    std::vector<std::string> code(t.order());
    for (auto it = rt.order.rbegin(); it != rt.order.rend(); ++it) {
        int v = *it;
        std::vector<std::string> parts;
        parts.reserve(children[v].size());
        for (int c : children[v]) {
            char dir = t.graph().has_arc(v, c) ? '+' : '-';
            parts.push_back(dir + code[c]);
        }
        std::sort(parts.begin(), parts.end());
        std::string s = "(";
        for (auto& part : parts) s += part;
        s += ")";
        code[v] = std::move(s);
    }
    return code[r];
}

}  // namespace

std::string canonical_code(const OrientedTree& t) {
    std::string best;
    for (int r = 0; r < t.order(); ++r) {
        std::string code = encode_rooted(t, r);
        if (best.empty() || code < best) best = std::move(code);
    }
    return best;
}

std::vector<OrientedTree> enumerate_oriented_trees(int k, const EnumerateOptions& opt) {
    if (k < 1) throw std::invalid_argument("enumerate_oriented_trees: k must be positive");
    if (k > opt.max_order)
        throw PreconditionError("enumerate_oriented_trees: k exceeds cap " + std::to_string(opt.max_order));
    std::vector<OrientedTree> current{OrientedTree(1, {})};
    for (int size = 2; size <= k; ++size) {
        std::map<std::string, OrientedTree> next;
        for (const auto& t : current) {
            for (int v = 0; v < t.order(); ++v) {
                for (int dir = 0; dir < 2; ++dir) {
                    auto arcs = t.graph().arcs();
                    if (dir == 0)
                        arcs.emplace_back(v, t.order());
                    else
                        arcs.emplace_back(t.order(), v);
                    OrientedTree grown(t.order() + 1, arcs);
                    next.try_emplace(canonical_code(grown), grown);
                }
            }
        }
        current.clear();
        for (auto& [code, tree] : next) current.push_back(std::move(tree));
    }
    return current;
}

StarKind is_star(const OrientedTree& t) {
    if (t.order() <= 2) return StarKind::out_star;  // degenerate, by convention
    int centre = -1;
    for (int v = 0; v < t.order(); ++v)
        if (t.degree(v) == t.order() - 1) centre = v;
    if (centre < 0) return StarKind::none;
    if (t.graph().out_degree(centre) == t.order() - 1) return StarKind::out_star;
    if (t.graph().in_degree(centre) == t.order() - 1) return StarKind::in_star;
    return StarKind::none;
}

std::optional<std::pair<ArboKind, int>> classify_arborescence(const OrientedTree& t) {
    if (t.order() == 1) return {{ArboKind::out_arbo, 0}};
    int out_root = -1, in_root = -1;
    bool out_ok = true, in_ok = true;
    for (int v = 0; v < t.order(); ++v) {
        if (t.graph().in_degree(v) == 0) {
            if (out_root >= 0) out_ok = false;
            out_root = v;
        } else if (t.graph().in_degree(v) != 1) {
            out_ok = false;
        }
        if (t.graph().out_degree(v) == 0) {
            if (in_root >= 0) in_ok = false;
            in_root = v;
        } else if (t.graph().out_degree(v) != 1) {
            in_ok = false;
        }
    }
    if (out_ok && out_root >= 0) return {{ArboKind::out_arbo, out_root}};
    if (in_ok && in_root >= 0) return {{ArboKind::in_arbo, in_root}};
    return std::nullopt;
}

OrientedTree append_directed_path(const OrientedTree& t, int attach, int length, PathEnd end) {
    std::vector<bool> steps(length, end == PathEnd::source);
    std::vector<int> verts(length + 1);
    for (int i = 0; i <= length; ++i) verts[i] = i;
    return append_path(t, attach, RootedOrientedPath(std::move(verts), std::move(steps)));
}

OrientedTree append_path(const OrientedTree& t, int attach, const RootedOrientedPath& q) {
    if (attach < 0 || attach >= t.order()) throw std::out_of_range("append_path: attach out of range");
    if (q.length() < 1) throw std::invalid_argument("append_path: empty path");
    auto arcs = t.graph().arcs();
    int prev = attach;
    for (int i = 0; i < q.length(); ++i) {
        int fresh = t.order() + i;
        if (q.forward(i))
            arcs.emplace_back(prev, fresh);
        else
            arcs.emplace_back(fresh, prev);
        prev = fresh;
    }
    return OrientedTree(t.order() + q.length(), arcs, t.root());
}

OrientedTree reverse(const OrientedTree& t) {
    std::vector<std::pair<int, int>> arcs;
    for (auto [u, v] : t.graph().arcs()) arcs.emplace_back(v, u);
    return OrientedTree(t.order(), arcs, t.root());
}

}  // namespace treeuniv
