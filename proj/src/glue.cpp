#include <algorithm>

#include "treeuniv/embed.hpp"

namespace treeuniv {

namespace {

void note(const GlueOptions& opt, const std::string& msg) {
    if (opt.on_event) opt.on_event(msg);
}

int host_chi(const Digraph& d, const GlueOptions& opt) {
    return opt.known_chi ? *opt.known_chi : chromatic_number(d, opt.chi);
}

// Embedding of `combined` wholly inside the acyclic part Y of a partition.
Embedding embed_in_y(const Digraph& collapsed, const std::vector<int>& y_set, int chi_y,
                     const OrientedTree& combined) {
    auto ind = induced(collapsed, y_set);
    DagEmbedOptions deo;
    deo.known_chi = chi_y;
    DagTreePartition bk = embed_tree_in_dag(ind.graph, combined, 0, deo);
    Embedding e = bk.embeddings.front();
    for (int& v : e.map) v = ind.vertex_of[v];
    return e;
}

Embedding run_sub_on_x(const Digraph& d, const Embedder& sub, const Partition3& part,
                       std::vector<int>* image_out) {
    auto ind = induced(d, part.x_set);
    Embedding se = sub.run(ind.graph);
    std::vector<int> img(sub.tree.order());
    for (int v = 0; v < sub.tree.order(); ++v) img[v] = ind.vertex_of[se.map[v]];
    *image_out = img;
    Embedding e;
    e.map = std::move(img);
    return e;
}

// First step of the appended path: an out-neighbour (in-neighbour) of x
// inside Y. A vertex that keeps moving inside Y buys one extra arc, so
// non-sinks (non-sources) are preferred; the recorded witness guarantees
// at least one candidate exists.
int first_step(const Digraph& dc, const std::vector<int>& y_set, int x, bool forward) {
    std::vector<char> in_y(dc.order(), 0);
    for (int u : y_set) in_y[u] = 1;
    const auto nbrs = forward ? dc.out_neighbours(x) : dc.in_neighbours(x);
    int fallback = -1;
    for (int w : nbrs) {
        if (!in_y[w]) continue;
        if (fallback < 0) fallback = w;
        const auto next = forward ? dc.out_neighbours(w) : dc.in_neighbours(w);
        for (int z : next)
            if (in_y[z]) return w;  // w is not a sink/source of dc[Y]
    }
    return fallback;
}

int step_down(const Digraph& dc, const std::vector<int>& y_set, int v, bool forward) {
    std::vector<char> in_y(dc.order(), 0);
    for (int u : y_set) in_y[u] = 1;
    const auto nbrs = forward ? dc.out_neighbours(v) : dc.in_neighbours(v);
    for (int w : nbrs)
        if (in_y[w]) return w;
    return -1;
}

// One construction attempt at a fixed partition parameter and scan order.
Embedding attempt_directed_glue(const Digraph& d, const Embedder& sub, int attach, int ell,
                                PathEnd end, const OrientedTree& combined, int param,
                                ScanOrder order) {
    const long long k1 = sub.tree.order();
    PartitionVariant variant =
        end == PathEnd::source ? PartitionVariant::forward : PartitionVariant::reversed;
    Partition3 part = directed_partition(d, param, variant, order);

    int chi_y = part.y_set.empty() ? 0 : chromatic_number(induced(part.collapsed, part.y_set).graph);
    if (chi_y >= combined.order()) {
        Embedding e = embed_in_y(part.collapsed, part.y_set, chi_y, combined);
        if (!e.valid(combined, d)) throw std::logic_error("glue_directed_path: bad DAG-case embedding");
        return e;
    }

    if (static_cast<long long>(part.x_set.size()) < k1)
        throw EmbedFailure("glue_directed_path: X smaller than T'");
    std::vector<int> img;
    Embedding e = run_sub_on_x(d, sub, part, &img);
    e.map.resize(combined.order(), -1);
    int x = img[attach];

    if (end == PathEnd::source) {
        // x -> y+ -> ... -> sink -> (recorded Z-path); take the first ell arcs.
        std::vector<int> walk{x, first_step(part.collapsed, part.y_set, x, true)};
        if (walk.back() < 0) throw std::logic_error("glue_directed_path: property (X) broken");
        while (!part.y_witness.count(walk.back())) {
            int next = step_down(part.collapsed, part.y_set, walk.back(), true);
            if (next < 0) throw std::logic_error("glue_directed_path: walk stuck before a sink");
            walk.push_back(next);
        }
        const auto& tail = part.y_witness.at(walk.back());
        walk.insert(walk.end(), tail.begin() + 1, tail.end());
        if (static_cast<int>(walk.size()) < ell + 1)
            throw EmbedFailure("glue_directed_path: assembled path too short (sink case)");
        for (int i = 0; i < ell; ++i) e.map[k1 + i] = walk[i + 1];
    } else {
        // (recorded Z-path) -> source -> ... -> y- -> x; take the last ell arcs.
        std::vector<int> back{x, first_step(part.collapsed, part.y_set, x, false)};
        if (back.back() < 0) throw std::logic_error("glue_directed_path: property (X) broken");
        while (!part.y_witness.count(back.back())) {
            int next = step_down(part.collapsed, part.y_set, back.back(), false);
            if (next < 0) throw std::logic_error("glue_directed_path: walk stuck before a source");
            back.push_back(next);
        }
        const auto& head = part.y_witness.at(back.back());  // arc order, ends at the source
        std::vector<int> walk(head.begin(), head.end() - 1);
        walk.insert(walk.end(), back.rbegin(), back.rend());
        if (static_cast<int>(walk.size()) < ell + 1)
            throw EmbedFailure("glue_directed_path: assembled path too short (source case)");
        // combined label k1+i sits i+1 arcs before x on the appended path
        int last = static_cast<int>(walk.size()) - 1;
        for (int i = 0; i < ell; ++i) e.map[k1 + i] = walk[last - 1 - i];
    }
    if (!e.valid(combined, d)) throw std::logic_error("glue_directed_path: invalid embedding assembled");
    return e;
}

}  // namespace

Embedding glue_directed_path(const Digraph& d, const Embedder& sub, int attach, int ell,
                             PathEnd end, const GlueOptions& opt) {
    if (ell < 1) throw std::invalid_argument("glue_directed_path: ell must be positive");
    if (attach < 0 || attach >= sub.tree.order())
        throw std::out_of_range("glue_directed_path: attach out of range");
    const long long k1 = sub.tree.order();
    const long long stated = sub.threshold + k1 + 2LL * ell - 3;
    if (opt.check_chromatic) {
        int chi = host_chi(d, opt);
        if (chi < stated + opt.slack)
            throw PreconditionError("glue_directed_path: chi(D) = " + std::to_string(chi) +
                                    " below threshold " + std::to_string(stated + opt.slack));
    }
    OrientedTree combined = append_directed_path(sub.tree, attach, ell, end);

    // Attempt schedule over the free choices of the construction: the
    // guarded partition parameter ell-1 first (sound under the +1 slack),
    // then the stated ell-2, each under both scan orders.
    std::vector<std::pair<int, ScanOrder>> attempts = {{ell - 1, ScanOrder::ascending},
                                                       {ell - 1, ScanOrder::descending}};
    if (ell >= 2) {
        attempts.push_back({ell - 2, ScanOrder::ascending});
        attempts.push_back({ell - 2, ScanOrder::descending});
    }
    std::string last_error;
    for (size_t i = 0; i < attempts.size(); ++i) {
        auto [param, order] = attempts[i];
        try {
            return attempt_directed_glue(d, sub, attach, ell, end, combined, param, order);
        } catch (const EmbedFailure& e) {
            last_error = e.what();
        } catch (const PreconditionError& e) {
            last_error = e.what();
        }
        if (i + 1 < attempts.size())
            note(opt, "glue_directed_path: attempt " + std::to_string(i + 1) + " failed (" +
                          last_error + "), retrying");
    }
    throw EmbedFailure("glue_directed_path: all attempts failed; last: " + last_error);
}

Embedding glue_oriented_path(const Digraph& d, const Embedder& sub, int attach,
                             const RootedOrientedPath& q, const GlueOptions& opt) {
    const int ell = q.length();
    if (ell < 1) throw std::invalid_argument("glue_oriented_path: path must have an arc");
    if (attach < 0 || attach >= sub.tree.order())
        throw std::out_of_range("glue_oriented_path: attach out of range");
    const long long k1 = sub.tree.order();
    const long long stated = sub.threshold + k1 + static_cast<long long>(ell) * (ell + 1) / 2 - 1;
    if (opt.check_chromatic) {
        int chi = host_chi(d, opt);
        if (chi < stated)
            throw PreconditionError("glue_oriented_path: chi(D) = " + std::to_string(chi) +
                                    " below threshold " + std::to_string(stated));
    }
    OrientedTree combined = append_path(sub.tree, attach, q);

    Partition3 part = oriented_partition(d, q.subpath(1, ell));  // q minus its root

    int chi_y = part.y_set.empty() ? 0 : chromatic_number(induced(part.collapsed, part.y_set).graph);
    if (chi_y >= combined.order()) {
        Embedding e = embed_in_y(part.collapsed, part.y_set, chi_y, combined);
        if (!e.valid(combined, d)) throw std::logic_error("glue_oriented_path: bad DAG-case embedding");
        return e;
    }

    std::vector<int> img;
    Embedding e = run_sub_on_x(d, sub, part, &img);
    e.map.resize(combined.order(), -1);
    int x = img[attach];
    const auto& wit = part.x_witness.at(x);
    // First step of q leaves the root; pick the matching neighbour of x and
    // its recorded copy of q - root.
    int anchor = q.forward(0) ? wit.y_plus : wit.y_minus;
    const auto& copy = part.y_witness.at(anchor);
    for (int i = 0; i < ell; ++i) e.map[k1 + i] = copy[i];
    if (!e.valid(combined, d)) throw std::logic_error("glue_oriented_path: invalid embedding assembled");
    return e;
}

Embedding glue_leaves_fallback(const Digraph& d, const Embedder& sub, const OrientedTree& t,
                               LeafMode mode, const GlueOptions& opt) {
    if (mode == LeafMode::all)
        throw std::invalid_argument("glue_leaves_fallback: one leaf orientation per round");
    StrippedTree stripped = strip_leaves(t, mode);
    if (!sub.tree.same_arcs(stripped.tree))
        throw std::invalid_argument("glue_leaves_fallback: sub embeds a different tree");
    const long long stated = sub.threshold + 2LL * t.order() - 4;
    if (opt.check_chromatic) {
        int chi = host_chi(d, opt);
        if (chi < stated)
            throw PreconditionError("glue_leaves_fallback: chi(D) = " + std::to_string(chi) +
                                    " below threshold " + std::to_string(stated));
    }

    Embedding se = sub.run(d);
    std::vector<std::pair<int, int>> pins;
    for (int v = 0; v < stripped.tree.order(); ++v)
        pins.emplace_back(stripped.orig_of[v], se.map[v]);

    // Local completion: the stripped image is pinned, only leaves move.
    BruteForceOptions local = opt.brute;
    local.max_host = d.order();
    if (auto done = brute_force_embed_pinned(d, t, pins, local)) {
        note(opt, "glue_leaves_fallback: pinned completion on n=" + std::to_string(d.order()) +
                      ", k=" + std::to_string(t.order()));
        return *done;
    }

    note(opt, "glue_leaves_fallback: pinned completion failed, exhaustive fallback on n=" +
                  std::to_string(d.order()) + ", k=" + std::to_string(t.order()));
    if (d.order() > opt.brute.max_host)
        throw PreconditionError("glue_leaves_fallback: host exceeds exhaustive cap " +
                                std::to_string(opt.brute.max_host));
    if (auto done = brute_force_embed(d, t, std::nullopt, opt.brute)) return *done;

    std::string msg = "glue_leaves_fallback: exhaustive search found no copy (n=" +
                      std::to_string(d.order()) + ", k=" + std::to_string(t.order()) +
                      "); conjecture-relevant above threshold " + std::to_string(stated);
    note(opt, msg);
    throw EmbedFailure(msg);
}

}  // namespace treeuniv
