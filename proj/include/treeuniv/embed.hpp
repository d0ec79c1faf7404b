#pragma once

#include <functional>
#include <map>
#include <optional>

#include "treeuniv/colouring.hpp"
#include "treeuniv/digraph.hpp"
#include "treeuniv/tree.hpp"

namespace treeuniv {

/// Injective, orientation-preserving vertex map witnessing containment.
struct Embedding {
    std::vector<int> map;  // tree vertex -> host vertex

    bool valid(const OrientedTree& t, const Digraph& host) const;
};

struct BruteForceOptions {
    int max_host = 32;  // exhaustive-search host cap
};

/// Exhaustive backtracking search, deterministic ascending order. `pin`
/// forces one tree vertex onto one host vertex.
std::optional<Embedding> brute_force_embed(const Digraph& host, const OrientedTree& t,
                                           std::optional<std::pair<int, int>> pin = std::nullopt,
                                           const BruteForceOptions& opt = {});

/// Same search with any number of pinned identifications.
std::optional<Embedding> brute_force_embed_pinned(const Digraph& host, const OrientedTree& t,
                                                  const std::vector<std::pair<int, int>>& pins,
                                                  const BruteForceOptions& opt = {});

struct DagEmbedOptions {
    bool check_preconditions = true;
    std::optional<int> known_chi;  // skips the exact solve when provided
    ColouringOptions chi;
};

/// Output of the bikernel construction on a DAG: a partition (X, K) with
/// chi(D[K]) <= |T|-1 and, for every x in X, an embedding of T sending the
/// root to x and everything else into K.
struct DagTreePartition {
    std::vector<int> x_set;  // sorted
    std::vector<int> k_set;  // sorted
    std::vector<Embedding> embeddings;  // parallel to x_set
};

DagTreePartition embed_tree_in_dag(const Digraph& d, const OrientedTree& t, int root,
                                   const DagEmbedOptions& opt = {});

/// Directed path of order k via the longest-path potential on a maximal
/// acyclic spanning subdigraph. Succeeds whenever chi(D) >= k; the map is
/// indexed by path position.
Embedding gallai_roy_path(const Digraph& d, int k);

/// Centre + k-1 out-neighbours (or in-neighbours). Map index 0 is the
/// centre. Succeeds whenever chi(D) >= 2k-2.
std::optional<Embedding> embed_star(const Digraph& d, int k, StarKind kind);

enum class PartitionTag { directed, directed_reversed, oriented };
enum class PartitionVariant { forward, reversed };

/// Partition (X, Y, Z) of the host with recorded witnesses. All witness
/// arcs live in `collapsed`, the digon-collapsed host, and are therefore
/// arcs of the original digraph as well.
struct Partition3 {
    PartitionTag tag = PartitionTag::directed;
    int ell = 0;
    std::optional<RootedOrientedPath> pattern;  // oriented tag only

    std::vector<int> x_set, y_set, z_set;  // sorted, disjoint, cover V
    Digraph collapsed;

    struct XWitness {
        int y_minus = -1;  // in-neighbour of x in Y
        int y_plus = -1;   // out-neighbour of x in Y
    };
    std::map<int, XWitness> x_witness;  // keyed by x in X

    // directed: keyed by the sinks of collapsed[Y]; vertices in arc order
    //   starting at the sink, length ell, remaining vertices in Z.
    // directed_reversed: keyed by the sources; arc order ending at the
    //   source, other vertices in Z.
    // oriented: keyed by every y in Y; the recorded copy of the pattern in
    //   root-first order, contained in Y u Z.
    std::map<int, std::vector<int>> y_witness;

    long long z_chromatic_bound() const;
    /// Empty on success; one message per violated invariant otherwise.
    std::vector<std::string> validate(const Digraph& original, bool check_chi = true,
                                      const ColouringOptions& chi = {}) const;
};

/// The scan order steers the arbitrary choices of the construction (which
/// maximal acyclic set gets built); any order satisfies the lemma.
Partition3 directed_partition(const Digraph& d, int ell,
                              PartitionVariant variant = PartitionVariant::forward,
                              ScanOrder order = ScanOrder::ascending);

Partition3 oriented_partition(const Digraph& d, const RootedOrientedPath& q);

/// A tree with a promised universality threshold and a way to produce an
/// embedding of it. The invariant: run() succeeds on every host whose
/// chromatic number is at least `threshold`.
struct Embedder {
    OrientedTree tree;
    long long threshold = 0;
    std::function<Embedding(const Digraph&)> run;  // throws EmbedFailure
};

struct GlueOptions {
    // Extra chromatic margin required by glue_directed_path on top of the
    // stated c' + k' + 2l - 3. The partition is invoked with l-1, which
    // guarantees the appended path even when the reached y+ is already a
    // sink; that guard costs one colour.
    int slack = 1;
    bool check_chromatic = true;
    std::optional<int> known_chi;
    ColouringOptions chi;
    BruteForceOptions brute;
    std::function<void(const std::string&)> on_event;  // fallback logging
};

/// T' + directed path of `ell` arcs at `attach`. `end` says which end of
/// the path is identified with the attach vertex (source: path points away
/// from T'). Embedding labels follow append_directed_path.
Embedding glue_directed_path(const Digraph& d, const Embedder& sub, int attach, int ell,
                             PathEnd end, const GlueOptions& opt = {});

/// T' + oriented path q rooted at `attach`. Threshold
/// c' + k' + l(l+1)/2 - 1, exactly as the gluing lemma states.
Embedding glue_oriented_path(const Digraph& d, const Embedder& sub, int attach,
                             const RootedOrientedPath& q, const GlueOptions& opt = {});

/// Re-attaches the out- (or in-) leaves of `t` onto an embedding of the
/// stripped tree: pinned backtracking first, full exhaustive search as the
/// fallback. Exhaustive failure throws EmbedFailure and is always reported
/// through on_event; above c + 2k - 4 it would be conjecture-relevant.
Embedding glue_leaves_fallback(const Digraph& d, const Embedder& sub, const OrientedTree& t,
                               LeafMode mode, const GlueOptions& opt = {});

/// Diagnostic record of a pipeline run.
struct PipelineTrace {
    std::string branch;
    long long ell = 0;
    std::vector<long long> c;  // tracked thresholds c_1..c_m (few-leaves chain)
    std::vector<long long> k;  // orders k_1..k_m alongside
};

struct PipelineOptions {
    GlueOptions glue;
    bool check_chromatic = true;
    std::optional<int> known_chi;
    ColouringOptions chi;
    PipelineTrace* trace = nullptr;
};

/// b-block oriented path, threshold (b-1)(k-3)+3, b >= 2. Two-block base
/// is the exhaustive oracle; further blocks are glued one at a time.
/// The map is indexed by path position.
Embedding embed_bblock_path(const Digraph& d, const RootedOrientedPath& p,
                            const PipelineOptions& opt = {});

/// Arborescence pipeline, threshold g(k) = sqrt(4/3) k sqrt(k) + k/2.
Embedding embed_arborescence(const Digraph& d, const OrientedTree& t,
                             const PipelineOptions& opt = {});

/// General oriented tree pipeline, threshold
/// f(k) = 8 sqrt(2/15) k sqrt(k) + 11k/3 + sqrt(5/6) sqrt(k) + 1.
Embedding embed_oriented_tree(const Digraph& d, const OrientedTree& t,
                              const PipelineOptions& opt = {});

}  // namespace treeuniv
