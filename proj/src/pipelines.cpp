#include <algorithm>

#include "treeuniv/bounds.hpp"
#include "treeuniv/embed.hpp"

namespace treeuniv {

namespace {

GlueOptions inner_glue(const PipelineOptions& opt) {
    GlueOptions g = opt.glue;
    g.check_chromatic = false;  // thresholds are enforced once, at the top
    g.known_chi.reset();
    return g;
}

int pipeline_chi(const Digraph& d, const PipelineOptions& opt) {
    return opt.known_chi ? *opt.known_chi : chromatic_number(d, opt.chi);
}

Embedding run_or_fail(const std::optional<Embedding>& e, const std::string& what) {
    if (!e) throw EmbedFailure(what);
    return *e;
}

// Base embedders ----------------------------------------------------------

Embedder single_vertex_embedder() {
    Embedder e{OrientedTree(1, {}), 1, {}};
    e.run = [](const Digraph& host) {
        if (host.order() == 0) throw EmbedFailure("empty host");
        Embedding emb;
        emb.map = {0};
        return emb;
    };
    return e;
}

Embedder single_arc_embedder(const OrientedTree& t) {
    Embedder e{t, 2, {}};
    bool zero_to_one = t.graph().has_arc(0, 1);
    e.run = [zero_to_one](const Digraph& host) {
        auto arcs = host.arcs();
        if (arcs.empty()) throw EmbedFailure("single arc: host has no arc");
        auto [a, b] = arcs.front();
        Embedding emb;
        emb.map = zero_to_one ? std::vector<int>{a, b} : std::vector<int>{b, a};
        return emb;
    };
    return e;
}

Embedder star_embedder(const OrientedTree& t, StarKind kind) {
    // Map the tree's labels onto the centre + neighbour layout of embed_star.
    int centre = 0;
    for (int v = 0; v < t.order(); ++v)
        if (t.degree(v) == t.order() - 1) centre = v;
    int k = t.order();
    Embedder e{t, 2LL * k - 2, {}};
    e.run = [k, kind, centre](const Digraph& host) {
        auto star = embed_star(host, k, kind);
        if (!star)
            throw EmbedFailure("star: no vertex of degree k-1; chi(D) >= 2k-2 cannot hold");
        Embedding emb;
        emb.map.assign(k, -1);
        emb.map[centre] = star->map[0];
        int next = 1;
        for (int v = 0; v < k; ++v)
            if (v != centre) emb.map[v] = star->map[next++];
        return emb;
    };
    return e;
}

// The tree's labels walked as a path from one end, or nullopt if the tree
// is not an underlying path.
std::optional<RootedOrientedPath> as_path(const OrientedTree& t) {
    if (t.order() == 1) return std::nullopt;
    int end = -1;
    for (int v = 0; v < t.order(); ++v) {
        if (t.degree(v) > 2) return std::nullopt;
        if (t.degree(v) == 1 && end < 0) end = v;
    }
    std::vector<int> seq{end};
    std::vector<char> seen(t.order(), 0);
    seen[end] = 1;
    while (static_cast<int>(seq.size()) < t.order()) {
        int cur = seq.back();
        int next = -1;
        for (int w : t.graph().out_neighbours(cur))
            if (!seen[w]) next = w;
        for (int w : t.graph().in_neighbours(cur))
            if (!seen[w]) next = w;
        if (next < 0) return std::nullopt;
        seen[next] = 1;
        seq.push_back(next);
    }
    std::vector<bool> steps(t.order() - 1);
    for (size_t i = 0; i + 1 < seq.size(); ++i) steps[i] = t.graph().has_arc(seq[i], seq[i + 1]);
    return RootedOrientedPath(std::move(seq), std::move(steps));
}

Embedder directed_path_embedder(const OrientedTree& t, const RootedOrientedPath& walk) {
    // walk is directed; align it source-first so gallai_roy output maps on.
    RootedOrientedPath src_first = walk.forward(0) ? walk : walk.rerooted();
    Embedder e{t, t.order(), {}};
    std::vector<int> labels = src_first.vertices();
    int k = t.order();
    e.run = [labels, k](const Digraph& host) {
        Embedding path = gallai_roy_path(host, k);
        Embedding emb;
        emb.map.assign(k, -1);
        for (int i = 0; i < k; ++i) emb.map[labels[i]] = path.map[i];
        return emb;
    };
    return e;
}

Embedder brute_force_embedder(const OrientedTree& t, long long threshold,
                              const BruteForceOptions& brute) {
    Embedder e{t, threshold, {}};
    e.run = [t, brute](const Digraph& host) {
        return run_or_fail(brute_force_embed(host, t, std::nullopt, brute),
                           "exhaustive base embedder found no copy (n=" +
                               std::to_string(host.order()) + ", k=" + std::to_string(t.order()) + ")");
    };
    return e;
}

// b-block chain ------------------------------------------------------------

Embedder bblock_embedder(const RootedOrientedPath& p, const GlueOptions& glue,
                         const BruteForceOptions& brute) {
    auto blist = blocks(p);
    int b = static_cast<int>(blist.size());
    if (b <= 2) return brute_force_embedder(p.to_pattern_tree(), p.order(), brute);

    const RootedOrientedPath& last = blist.back();
    int ell = last.length();
    int attach = p.order() - 1 - ell;
    RootedOrientedPath prefix = p.subpath(0, attach);
    Embedder sub = bblock_embedder(prefix, glue, brute);
    PathEnd end = last.forward(0) ? PathEnd::source : PathEnd::sink;

    Embedder e{p.to_pattern_tree(),
               (static_cast<long long>(b) - 1) * (p.order() - 3) + 3, {}};
    e.run = [sub, attach, ell, end, glue](const Digraph& host) {
        return glue_directed_path(host, sub, attach, ell, end, glue);
    };
    return e;
}

// Few-leaves chain: grow the tree path by path, composing glue embedders.
struct GrowingChain {
    OrientedTree cur;
    std::vector<int> orig_of;  // chain label -> label in the target tree
    std::vector<int> pos_of;   // target label -> chain label
    Embedder embedder;
};

GrowingChain start_chain(const RootedOrientedPath& first, int target_order,
                         Embedder base) {
    GrowingChain chain{base.tree, first.vertices(), std::vector<int>(target_order, -1),
                       std::move(base)};
    for (size_t i = 0; i < chain.orig_of.size(); ++i) chain.pos_of[chain.orig_of[i]] = static_cast<int>(i);
    return chain;
}

// Many-leaves route for the general pipeline, following the two-round
// corollary: strip one orientation, then the other, landing on a subtree
// of the all-leaves-stripped tree.
Embedder leaves_route_embedder(const OrientedTree& t,
                               const std::function<Embedder(const OrientedTree&)>& recurse,
                               const PipelineOptions& opt) {
    const int k = t.order();
    auto ls = leaf_sets(t);
    LeafMode mode1 = !ls.out_leaves.empty() ? LeafMode::out : LeafMode::in;
    LeafMode mode2 = mode1 == LeafMode::out ? LeafMode::in : LeafMode::out;

    StrippedTree t1 = strip_leaves(t, mode1);
    GlueOptions glue = inner_glue(opt);

    Embedder sub1 = [&]() -> Embedder {
        if (is_star(t1.tree) != StarKind::none) {
            // The once-stripped tree is a star: its Burr bound stands on its own.
            if (t1.tree.order() == 1) return single_vertex_embedder();
            if (t1.tree.order() == 2) return single_arc_embedder(t1.tree);
            return star_embedder(t1.tree, is_star(t1.tree));
        }
        StrippedTree tl = strip_leaves(t, LeafMode::all);
        Embedder sub_tl = recurse(tl.tree);

        StrippedTree t2 = strip_leaves(t1.tree, mode2);
        // t2 is a subtree of tl; restrict tl's embedding to it.
        std::vector<int> tl_pos(t.order(), -1);
        for (size_t i = 0; i < tl.orig_of.size(); ++i) tl_pos[tl.orig_of[i]] = static_cast<int>(i);
        std::vector<int> t2_in_tl(t2.tree.order(), -1);
        for (int v = 0; v < t2.tree.order(); ++v) {
            int orig = t1.orig_of[t2.orig_of[v]];
            t2_in_tl[v] = tl_pos[orig];
            if (t2_in_tl[v] < 0) throw std::logic_error("twice-stripped tree not inside T - L(T)");
        }
        Embedder sub2{t2.tree, sub_tl.threshold, {}};
        sub2.run = [sub_tl, t2_in_tl](const Digraph& host) {
            Embedding full = sub_tl.run(host);
            Embedding emb;
            emb.map.reserve(t2_in_tl.size());
            for (int pos : t2_in_tl) emb.map.push_back(full.map[pos]);
            return emb;
        };

        OrientedTree t1_tree = t1.tree;
        Embedder once{t1_tree, sub2.threshold + 2LL * t1_tree.order() - 4, {}};
        once.run = [sub2, t1_tree, mode2, glue](const Digraph& host) {
            return glue_leaves_fallback(host, sub2, t1_tree, mode2, glue);
        };
        return once;
    }();

    Embedder e{t, sub1.threshold + 2LL * k - 4, {}};
    OrientedTree target = t;
    e.run = [sub1, target, mode1, glue](const Digraph& host) {
        return glue_leaves_fallback(host, sub1, target, mode1, glue);
    };
    return e;
}

}  // namespace

Embedding embed_bblock_path(const Digraph& d, const RootedOrientedPath& p,
                            const PipelineOptions& opt) {
    int b = p.block_count();
    if (b < 2) throw PreconditionError("embed_bblock_path: path must have at least 2 blocks");
    long long threshold = (static_cast<long long>(b) - 1) * (p.order() - 3) + 3;
    if (opt.check_chromatic) {
        int chi = pipeline_chi(d, opt);
        if (chi < threshold)
            throw PreconditionError("embed_bblock_path: chi(D) = " + std::to_string(chi) +
                                    " below (b-1)(k-3)+3 = " + std::to_string(threshold));
    }
    if (opt.trace) opt.trace->branch = b == 2 ? "two-block-base" : "end-block-gluing";
    Embedder e = bblock_embedder(p, inner_glue(opt), opt.glue.brute);
    Embedding emb = e.run(d);
    if (!emb.valid(p.to_pattern_tree(), d))
        throw std::logic_error("embed_bblock_path: invalid embedding produced");
    return emb;
}

namespace {

Embedder arborescence_embedder(const OrientedTree& t, int root, const PipelineOptions& opt,
                               bool top_level) {
    const int k = t.order();
    if (k == 1) return single_vertex_embedder();
    if (k == 2) return single_arc_embedder(t);
    if (is_star(t) == StarKind::out_star) {
        if (top_level && opt.trace) opt.trace->branch = "star";
        return star_embedder(t, StarKind::out_star);
    }

    GlueOptions glue = inner_glue(opt);
    auto ls = leaf_sets(t);
    long long p = static_cast<long long>(ls.out_leaves.size());

    if (3 * p * p >= 4 * k) {
        // Many out-leaves: strip them, recurse, re-attach.
        if (top_level && opt.trace) opt.trace->branch = "many-leaves";
        StrippedTree stripped = strip_leaves(t, LeafMode::out);
        int sub_root = -1;
        for (size_t i = 0; i < stripped.orig_of.size(); ++i)
            if (stripped.orig_of[i] == root) sub_root = static_cast<int>(i);
        if (sub_root < 0) throw std::logic_error("arborescence root stripped away");
        Embedder sub = arborescence_embedder(stripped.tree, sub_root, opt, false);
        Embedder e{t, sub.threshold + 2LL * k - 4, {}};
        OrientedTree target = t;
        e.run = [sub, target, glue](const Digraph& host) {
            return glue_leaves_fallback(host, sub, target, LeafMode::out, glue);
        };
        return e;
    }

    // Few leaves: decompose into descending (hence directed) paths and glue
    // them one at a time from a Gallai-Roy base.
    if (top_level && opt.trace) opt.trace->branch = "path-gluing";
    PathDecomposition dec = descending_decomposition(t, root);
    GrowingChain chain = start_chain(
        dec.paths[0], k,
        directed_path_embedder(dec.paths[0].to_pattern_tree(), RootedOrientedPath::directed(dec.paths[0].length())));
    for (size_t i = 1; i < dec.paths.size(); ++i) {
        const auto& path = dec.paths[i];
        int attach = chain.pos_of[path.root()];
        int ell = path.length();
        long long c_next = chain.embedder.threshold + chain.cur.order() + 2LL * ell - 2;
        OrientedTree grown = append_directed_path(chain.cur, attach, ell, PathEnd::source);
        Embedder prev = chain.embedder;
        Embedder next{grown, c_next, {}};
        next.run = [prev, attach, ell, glue](const Digraph& host) {
            return glue_directed_path(host, prev, attach, ell, PathEnd::source, glue);
        };
        for (int j = 1; j <= ell; ++j) {
            chain.pos_of[path.vertices()[j]] = chain.cur.order() + j - 1;
            chain.orig_of.push_back(path.vertices()[j]);
        }
        chain.cur = std::move(grown);
        chain.embedder = std::move(next);
    }
    // Remap chain labels back onto the tree's own labels.
    Embedder final_e{t, chain.embedder.threshold, {}};
    Embedder produced = chain.embedder;
    std::vector<int> orig_of = chain.orig_of;
    final_e.run = [produced, orig_of, k](const Digraph& host) {
        Embedding inner = produced.run(host);
        Embedding emb;
        emb.map.assign(k, -1);
        for (size_t pos = 0; pos < orig_of.size(); ++pos) emb.map[orig_of[pos]] = inner.map[pos];
        return emb;
    };
    return final_e;
}

}  // namespace

Embedding embed_arborescence(const Digraph& d, const OrientedTree& t, const PipelineOptions& opt) {
    auto cls = classify_arborescence(t);
    if (!cls) throw PreconditionError("embed_arborescence: tree is not an arborescence");
    if (opt.check_chromatic) {
        int chi = pipeline_chi(d, opt);
        long long need = bound_ceiling({.name = BoundName::arbo, .k = t.order()});
        if (chi < need)
            throw PreconditionError("embed_arborescence: chi(D) = " + std::to_string(chi) +
                                    " below ceil(g(k)) = " + std::to_string(need));
    }
    if (cls->first == ArboKind::in_arbo && t.order() > 1) {
        // Mirror: embed the reversed arborescence in the reversed host.
        PipelineOptions mirrored = opt;
        mirrored.check_chromatic = false;
        Embedding e = embed_arborescence(reverse(d), reverse(t), mirrored);
        if (!e.valid(t, d)) throw std::logic_error("embed_arborescence: reversal produced bad embedding");
        return e;
    }
    Embedder e = arborescence_embedder(t, cls->second, opt, true);
    Embedding emb = e.run(d);
    if (!emb.valid(t, d)) throw std::logic_error("embed_arborescence: invalid embedding produced");
    return emb;
}

namespace {

Embedder oriented_tree_embedder(const OrientedTree& t, const PipelineOptions& opt, bool top_level) {
    const int k = t.order();
    if (k == 1) return single_vertex_embedder();
    if (k == 2) return single_arc_embedder(t);
    StarKind star = is_star(t);
    if (star != StarKind::none) {
        if (top_level && opt.trace) opt.trace->branch = "star";
        return star_embedder(t, star);
    }
    if (auto walk = as_path(t); walk && walk->is_directed()) {
        if (top_level && opt.trace) opt.trace->branch = "directed-path";
        return directed_path_embedder(t, *walk);
    }

    auto ls = leaf_sets(t);
    long long p = static_cast<long long>(ls.out_leaves.size() + ls.in_leaves.size());

    if (6 * p * p >= 5 * k) {
        if (top_level && opt.trace) opt.trace->branch = "many-leaves";
        auto recurse = [&opt](const OrientedTree& sub) {
            return oriented_tree_embedder(sub, opt, false);
        };
        return leaves_route_embedder(t, recurse, opt);
    }

    // Few leaves: decompose, cut into chunks of length at most
    // l = ceil(sqrt(6k/5)), and glue oriented paths one at a time.
    if (top_level && opt.trace) opt.trace->branch = "path-gluing";
    long long ell = 1;
    while (5 * ell * ell < 6 * k) ++ell;

    int root = 0;
    while (root < k && t.degree(root) < 2) ++root;  // an internal vertex exists for k >= 3
    PathDecomposition dec = chunk_paths(descending_decomposition(t, root), static_cast<int>(ell));

    GlueOptions glue = inner_glue(opt);
    long long c1 = ell * (ell + 1) / 2 + 1;
    GrowingChain chain = start_chain(
        dec.paths[0], k,
        brute_force_embedder(dec.paths[0].to_pattern_tree(), c1, opt.glue.brute));
    if (top_level && opt.trace) {
        opt.trace->ell = ell;
        opt.trace->c = {c1};
        opt.trace->k = {chain.cur.order()};
    }
    for (size_t i = 1; i < dec.paths.size(); ++i) {
        const auto& q = dec.paths[i];
        int attach = chain.pos_of[q.root()];
        long long c_next = chain.embedder.threshold + chain.cur.order() + ell * (ell + 1) / 2 - 1;
        OrientedTree grown = append_path(chain.cur, attach, q);
        Embedder prev = chain.embedder;
        Embedder next{grown, c_next, {}};
        RootedOrientedPath q_copy = q;
        next.run = [prev, attach, q_copy, glue](const Digraph& host) {
            return glue_oriented_path(host, prev, attach, q_copy, glue);
        };
        for (int j = 1; j <= q.length(); ++j) {
            chain.pos_of[q.vertices()[j]] = chain.cur.order() + j - 1;
            chain.orig_of.push_back(q.vertices()[j]);
        }
        chain.cur = std::move(grown);
        chain.embedder = std::move(next);
        if (top_level && opt.trace) {
            opt.trace->c.push_back(c_next);
            opt.trace->k.push_back(chain.cur.order());
        }
    }
    Embedder final_e{t, chain.embedder.threshold, {}};
    Embedder produced = chain.embedder;
    std::vector<int> orig_of = chain.orig_of;
    final_e.run = [produced, orig_of, k](const Digraph& host) {
        Embedding inner = produced.run(host);
        Embedding emb;
        emb.map.assign(k, -1);
        for (size_t pos = 0; pos < orig_of.size(); ++pos) emb.map[orig_of[pos]] = inner.map[pos];
        return emb;
    };
    return final_e;
}

}  // namespace

Embedding embed_oriented_tree(const Digraph& d, const OrientedTree& t, const PipelineOptions& opt) {
    if (opt.check_chromatic) {
        int chi = pipeline_chi(d, opt);
        long long need = bound_ceiling({.name = BoundName::main, .k = t.order()});
        if (chi < need)
            throw PreconditionError("embed_oriented_tree: chi(D) = " + std::to_string(chi) +
                                    " below ceil(f(k)) = " + std::to_string(need));
    }
    Embedder e = oriented_tree_embedder(t, opt, true);
    Embedding emb = e.run(d);
    if (!emb.valid(t, d)) throw std::logic_error("embed_oriented_tree: invalid embedding produced");
    return emb;
}

}  // namespace treeuniv
