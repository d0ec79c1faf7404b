#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace treeuniv {

// Thrown when a construction step cannot produce the promised witness
// (e.g. exhaustive search came up empty above a conjectured bound).
struct EmbedFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when a caller violates a documented precondition.
struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Simple directed graph on vertices 0..n-1. No self-loops, no parallel
/// arcs; digons (both (u,v) and (v,u)) are allowed unless stated otherwise.
/// Adjacency is kept as bit rows in both directions for fast scans.
class Digraph {
public:
    Digraph() = default;
    explicit Digraph(int n);
    static Digraph from_arcs(int n, const std::vector<std::pair<int, int>>& arcs);

    int order() const { return n_; }
    int arc_count() const { return arc_count_; }

    void add_arc(int u, int v);
    void remove_arc(int u, int v);
    bool has_arc(int u, int v) const;
    bool adjacent(int u, int v) const { return has_arc(u, v) || has_arc(v, u); }
    bool has_digon(int u, int v) const { return has_arc(u, v) && has_arc(v, u); }
    bool is_oriented() const;  // digon-free

    int out_degree(int v) const;
    int in_degree(int v) const;
    int degree(int v) const;  // underlying graph degree
    std::vector<int> out_neighbours(int v) const;
    std::vector<int> in_neighbours(int v) const;
    std::vector<std::pair<int, int>> arcs() const;  // sorted (u, v)

    bool operator==(const Digraph& other) const;

private:
    void check_vertex(int v) const;
    uint64_t* out_row(int v) { return rows_.data() + static_cast<size_t>(2 * v) * words_; }
    uint64_t* in_row(int v) { return rows_.data() + static_cast<size_t>(2 * v + 1) * words_; }
    const uint64_t* out_row(int v) const { return rows_.data() + static_cast<size_t>(2 * v) * words_; }
    const uint64_t* in_row(int v) const { return rows_.data() + static_cast<size_t>(2 * v + 1) * words_; }

    int n_ = 0;
    int words_ = 0;
    int arc_count_ = 0;
    std::vector<uint64_t> rows_;  // out row / in row interleaved per vertex
};

enum class DigonRule {
    low_to_high,  // keep (u,v) with u < v
    high_to_low,
};

/// Replaces every digon by a single arc chosen by `rule`; all other arcs kept.
/// The result is oriented and has the same underlying graph, hence the same
/// chromatic number.
Digraph digon_collapse(const Digraph& d, DigonRule rule = DigonRule::low_to_high);

/// Every arc flipped. An involution.
Digraph reverse(const Digraph& d);

struct InducedSubdigraph {
    Digraph graph;
    std::vector<int> vertex_of;  // new index -> original vertex (ascending)
};

/// Subdigraph induced by `s` (need not be sorted; duplicates rejected).
InducedSubdigraph induced(const Digraph& d, const std::vector<int>& s);

struct AcyclicityCheck {
    bool acyclic = false;
    std::vector<int> topo_order;  // set when acyclic
    std::vector<int> cycle;       // a directed cycle (v0, v1, ..., vk-1), arcs vi -> vi+1, vk-1 -> v0
};

AcyclicityCheck is_acyclic(const Digraph& d);

/// Independent set K such that every vertex outside K has an out-neighbour
/// in K. Requires a DAG; computed by a reverse-topological sweep.
std::vector<int> out_kernel(const Digraph& d);
/// Symmetric: every outside vertex has an in-neighbour in K.
std::vector<int> in_kernel(const Digraph& d);

// Kernel restricted to the subdigraph induced by `alive` (original labels).
std::vector<int> out_kernel_on(const Digraph& d, const std::vector<int>& alive);
std::vector<int> in_kernel_on(const Digraph& d, const std::vector<int>& alive);

enum class ScanOrder { ascending, descending };

/// Grows `seed` into a vertex set Y, disjoint from `forbidden`, such that
/// D[Y] is acyclic and every remaining vertex would close a directed cycle.
/// Candidates are scanned in the given index order, so the result is
/// deterministic.
std::vector<int> maximal_acyclic_extension(const Digraph& d, const std::vector<int>& seed,
                                           const std::vector<int>& forbidden,
                                           ScanOrder order = ScanOrder::ascending);

/// True iff adding `v` to acyclic Y keeps D[Y ∪ {v}] acyclic.
bool extension_keeps_acyclic(const Digraph& d, const std::vector<int>& y, int v);

}  // namespace treeuniv
