#pragma once

#include <optional>
#include <string>
#include <vector>

#include "treeuniv/digraph.hpp"

namespace treeuniv {

/// Orientation of an undirected tree: connected, n-1 arcs, digon-free.
/// An optional root marks a distinguished vertex for rooted constructions.
class OrientedTree {
public:
    OrientedTree(int n, const std::vector<std::pair<int, int>>& arcs,
                 std::optional<int> root = std::nullopt);

    int order() const { return graph_.order(); }
    const Digraph& graph() const { return graph_; }
    std::optional<int> root() const { return root_; }
    void set_root(std::optional<int> r);

    int degree(int v) const { return graph_.degree(v); }
    /// The single neighbour of a degree-1 vertex.
    int unique_neighbour(int leaf) const;

    bool same_arcs(const OrientedTree& other) const;
    bool operator==(const OrientedTree& other) const;

private:
    Digraph graph_;
    std::optional<int> root_;
};

/// Oriented path with a distinguished end. Stored root-first: vertices
/// v0..vl with v0 the root; forward(i) means the arc is v_i -> v_{i+1}.
class RootedOrientedPath {
public:
    RootedOrientedPath(std::vector<int> vertices, std::vector<bool> forward);
    /// Directed path of the given length on canonical labels 0..length.
    static RootedOrientedPath directed(int length);
    /// Path with the given step pattern on canonical labels 0..steps.size().
    static RootedOrientedPath from_shape(const std::vector<bool>& steps);

    int length() const { return static_cast<int>(forward_.size()); }
    int order() const { return static_cast<int>(vertices_.size()); }
    const std::vector<int>& vertices() const { return vertices_; }
    bool forward(int i) const { return forward_[i]; }
    const std::vector<bool>& steps() const { return forward_; }
    int root() const { return vertices_.front(); }
    int tip() const { return vertices_.back(); }

    bool is_directed() const;
    int block_count() const;
    /// Same path rooted at the other extremity.
    RootedOrientedPath rerooted() const;
    /// Positions [from, to] of this path, rooted at position `from`.
    RootedOrientedPath subpath(int from, int to) const;
    /// The path as a tree on canonical labels 0..length (path order), root 0.
    OrientedTree to_pattern_tree() const;

    bool operator==(const RootedOrientedPath& other) const = default;

private:
    std::vector<int> vertices_;
    std::vector<bool> forward_;
};

/// Maximal directed runs of the path, in traversal order.
std::vector<RootedOrientedPath> blocks(const RootedOrientedPath& p);

enum class LeafMode { out, in, all };

struct LeafSets {
    std::vector<int> out_leaves;  // arc points toward the leaf
    std::vector<int> in_leaves;   // arc points away from the leaf
};

/// Degree-1 vertices split by the orientation of their incident arc.
/// Requires order >= 2.
LeafSets leaf_sets(const OrientedTree& t);

struct StrippedTree {
    OrientedTree tree;
    std::vector<int> orig_of;  // new label -> label in the source tree
};

/// Removes the selected leaf set; rejects a strip that would empty the tree.
StrippedTree strip_leaves(const OrientedTree& t, LeafMode mode);

/// Arc-disjoint descending paths covering the tree; paths[i] (i >= 1) meets
/// the union of the earlier ones exactly in its root vertex.
struct PathDecomposition {
    std::vector<RootedOrientedPath> paths;

    int attach_vertex(int i) const { return paths[i].root(); }
    /// Empty on success, otherwise one message per violated invariant.
    std::vector<std::string> validate(const OrientedTree& t) const;
};

/// One descending path per leaf of the tree rooted at r, leaves taken in
/// ascending order. A degree-1 root is not counted as a leaf.
PathDecomposition descending_decomposition(const OrientedTree& t, int r);

/// Splits every path into consecutive subpaths of length exactly ell,
/// except possibly a shorter final piece per original path.
PathDecomposition chunk_paths(const PathDecomposition& dec, int ell);

/// Canonical encoding: rooted orientation-aware AHU string, minimised over
/// all root choices. Equal strings iff isomorphic.
std::string canonical_code(const OrientedTree& t);

struct EnumerateOptions {
    int max_order = 8;
};

/// All oriented trees of order k, one per isomorphism class, sorted by
/// canonical code.
std::vector<OrientedTree> enumerate_oriented_trees(int k, const EnumerateOptions& opt = {});

enum class StarKind { none, out_star, in_star };

/// S_k^+ / S_k^- detection. Orders 1 and 2 report out_star by convention.
StarKind is_star(const OrientedTree& t);

enum class ArboKind { out_arbo, in_arbo };

/// (kind, root) when every arc points away from (toward) a single root.
std::optional<std::pair<ArboKind, int>> classify_arborescence(const OrientedTree& t);

enum class PathEnd { source, sink };

/// Appends a directed path of `length` arcs at `attach`; new vertices get
/// labels n..n+length-1 outward. `end` says which path end sits on attach.
OrientedTree append_directed_path(const OrientedTree& t, int attach, int length, PathEnd end);

/// Appends a path with q's step pattern, root on attach. Only the shape of
/// q is used; its vertex identities are ignored.
OrientedTree append_path(const OrientedTree& t, int attach, const RootedOrientedPath& q);

OrientedTree reverse(const OrientedTree& t);

}  // namespace treeuniv
