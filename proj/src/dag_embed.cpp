#include <algorithm>

#include "treeuniv/embed.hpp"

namespace treeuniv {

namespace {

struct LeafStrip {
    OrientedTree tree;           // the tree minus one leaf
    std::vector<int> new_of;     // old label -> new label (-1 for the leaf)
};

LeafStrip remove_leaf(const OrientedTree& t, int leaf) {
    std::vector<int> new_of(t.order(), -1);
    int next = 0;
    for (int v = 0; v < t.order(); ++v)
        if (v != leaf) new_of[v] = next++;
    std::vector<std::pair<int, int>> arcs;
    for (auto [u, v] : t.graph().arcs())
        if (u != leaf && v != leaf) arcs.emplace_back(new_of[u], new_of[v]);
    return {OrientedTree(t.order() - 1, arcs), std::move(new_of)};
}

DagTreePartition bikernel_recurse(const Digraph& d, const std::vector<int>& alive,
                                  const OrientedTree& t, int root) {
    if (t.order() == 1) {
        DagTreePartition res;
        res.x_set = alive;
        for (int x : res.x_set) {
            Embedding e;
            e.map = {x};
            res.embeddings.push_back(std::move(e));
        }
        return res;
    }
    // Smallest leaf different from the root.
    int leaf = -1;
    for (int v = 0; v < t.order(); ++v)
        if (v != root && t.degree(v) == 1) {
            leaf = v;
            break;
        }
    int anchor = t.unique_neighbour(leaf);
    bool out_leaf = t.graph().has_arc(anchor, leaf);  // arc points toward the leaf

    // Peel the kernel matching the leaf's orientation: an out-leaf needs
    // the anchor's image to keep an out-neighbour in the removed layer.
    std::vector<int> kernel = out_leaf ? out_kernel_on(d, alive) : in_kernel_on(d, alive);
    std::vector<char> in_kernel_set(d.order(), 0);
    for (int v : kernel) in_kernel_set[v] = 1;
    std::vector<int> alive2;
    for (int v : alive)
        if (!in_kernel_set[v]) alive2.push_back(v);

    LeafStrip strip = remove_leaf(t, leaf);
    DagTreePartition sub = bikernel_recurse(d, alive2, strip.tree, strip.new_of[root]);

    DagTreePartition res;
    res.x_set = std::move(sub.x_set);
    res.k_set = std::move(sub.k_set);
    res.k_set.insert(res.k_set.end(), kernel.begin(), kernel.end());
    std::sort(res.k_set.begin(), res.k_set.end());
    res.embeddings.reserve(res.x_set.size());
    for (auto& se : sub.embeddings) {
        Embedding e;
        e.map.assign(t.order(), -1);
        for (int v = 0; v < t.order(); ++v)
            if (v != leaf) e.map[v] = se.map[strip.new_of[v]];
        int w = e.map[anchor];
        int img = -1;
        const auto nbrs = out_leaf ? d.out_neighbours(w) : d.in_neighbours(w);
        for (int cand : nbrs)
            if (in_kernel_set[cand]) {
                img = cand;
                break;
            }
        if (img < 0) throw std::logic_error("bikernel: kernel domination violated");
        e.map[leaf] = img;
        res.embeddings.push_back(std::move(e));
    }
    return res;
}

}  // namespace

DagTreePartition embed_tree_in_dag(const Digraph& d, const OrientedTree& t, int root,
                                   const DagEmbedOptions& opt) {
    if (root < 0 || root >= t.order()) throw std::out_of_range("embed_tree_in_dag: bad root");
    if (!is_acyclic(d).acyclic) throw PreconditionError("embed_tree_in_dag: host is not a DAG");
    if (opt.check_preconditions) {
        int chi = opt.known_chi ? *opt.known_chi : chromatic_number(d, opt.chi);
        if (chi < t.order())
            throw PreconditionError("embed_tree_in_dag: chi(D) = " + std::to_string(chi) +
                                    " below |T| = " + std::to_string(t.order()));
    }
    std::vector<int> all(d.order());
    for (int v = 0; v < d.order(); ++v) all[v] = v;
    return bikernel_recurse(d, all, t, root);
}

Embedding gallai_roy_path(const Digraph& d, int k) {
    if (k < 1) throw std::invalid_argument("gallai_roy_path: k must be positive");
    if (k > d.order()) throw PreconditionError("gallai_roy_path: k exceeds host order");

    // Arc-maximal acyclic spanning subdigraph, arcs considered in
    // ascending order; an arc joins unless it closes a directed cycle.
    Digraph acyc(d.order());
    auto reaches = [&](int from, int to) {
        std::vector<char> seen(d.order(), 0);
        std::vector<int> stack{from};
        seen[from] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            if (v == to) return true;
            for (int w : acyc.out_neighbours(v))
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        return false;
    };
    for (auto [u, v] : d.arcs())
        if (!reaches(v, u)) acyc.add_arc(u, v);

    // Longest-path potential: phi(v) = order of the longest directed path
    // starting at v. This is a proper colouring of the underlying graph,
    // so max phi >= chi(D).
    auto topo = is_acyclic(acyc);
    std::vector<int> phi(d.order(), 1);
    for (auto it = topo.topo_order.rbegin(); it != topo.topo_order.rend(); ++it)
        for (int w : acyc.out_neighbours(*it)) phi[*it] = std::max(phi[*it], phi[w] + 1);

    int start = -1;
    for (int v = 0; v < d.order(); ++v)
        if (phi[v] >= k) {
            start = v;
            break;
        }
    if (start < 0)
        throw EmbedFailure("gallai_roy_path: no path of order " + std::to_string(k) +
                           "; chi(D) >= k cannot hold");
    Embedding e;
    e.map.push_back(start);
    int cur = start;
    while (static_cast<int>(e.map.size()) < k) {
        int next = -1;
        for (int w : acyc.out_neighbours(cur))
            if (phi[w] >= phi[cur] - 1) {
                next = w;
                break;
            }
        if (next < 0) throw std::logic_error("gallai_roy_path: potential not decreasing");
        e.map.push_back(next);
        cur = next;
    }
    return e;
}

std::optional<Embedding> embed_star(const Digraph& d, int k, StarKind kind) {
    if (k < 1 || kind == StarKind::none) throw std::invalid_argument("embed_star: bad arguments");
    for (int c = 0; c < d.order(); ++c) {
        const auto nbrs =
            kind == StarKind::out_star ? d.out_neighbours(c) : d.in_neighbours(c);
        if (static_cast<int>(nbrs.size()) >= k - 1) {
            Embedding e;
            e.map.push_back(c);
            e.map.insert(e.map.end(), nbrs.begin(), nbrs.begin() + (k - 1));
            return e;
        }
    }
    return std::nullopt;
}

}  // namespace treeuniv
