#include <algorithm>

#include "treeuniv/embed.hpp"

namespace treeuniv {

bool Embedding::valid(const OrientedTree& t, const Digraph& host) const {
    if (static_cast<int>(map.size()) != t.order()) return false;
    std::vector<char> used(host.order(), 0);
    for (int img : map) {
        if (img < 0 || img >= host.order()) return false;
        if (used[img]) return false;  // injectivity
        used[img] = 1;
    }
    for (auto [a, b] : t.graph().arcs())
        if (!host.has_arc(map[a], map[b])) return false;
    return true;
}

namespace {

struct SearchPlan {
    // BFS order over the pattern; each vertex after the first carries its
    // already-placed neighbour and the arc direction between them.
    std::vector<int> order;
    std::vector<int> parent;        // -1 for the start
    std::vector<char> arc_to_child; // parent -> child arc?
};

SearchPlan plan_from(const OrientedTree& t, int start) {
    SearchPlan plan;
    plan.parent.assign(t.order(), -1);
    plan.arc_to_child.assign(t.order(), 0);
    std::vector<char> seen(t.order(), 0);
    std::vector<int> queue{start};
    seen[start] = 1;
    for (size_t head = 0; head < queue.size(); ++head) {
        int v = queue[head];
        plan.order.push_back(v);
        std::vector<int> nbrs = t.graph().out_neighbours(v);
        auto in = t.graph().in_neighbours(v);
        nbrs.insert(nbrs.end(), in.begin(), in.end());
        std::sort(nbrs.begin(), nbrs.end());
        for (int w : nbrs)
            if (!seen[w]) {
                seen[w] = 1;
                plan.parent[w] = v;
                plan.arc_to_child[w] = t.graph().has_arc(v, w) ? 1 : 0;
                queue.push_back(w);
            }
    }
    return plan;
}

struct Search {
    const Digraph& host;
    const OrientedTree& t;
    const SearchPlan& plan;
    std::vector<int> pinned;  // tree vertex -> forced host vertex or -1
    std::vector<int> img;
    std::vector<char> used;

    bool degree_ok(int tv, int hv) const {
        return host.out_degree(hv) >= t.graph().out_degree(tv) &&
               host.in_degree(hv) >= t.graph().in_degree(tv);
    }

    bool place(size_t depth) {
        if (depth == plan.order.size()) return true;
        int tv = plan.order[depth];
        std::vector<int> candidates;
        if (plan.parent[tv] < 0) {
            if (pinned[tv] >= 0) {
                candidates.push_back(pinned[tv]);
            } else {
                candidates.resize(host.order());
                for (int v = 0; v < host.order(); ++v) candidates[v] = v;
            }
        } else {
            int anchor = img[plan.parent[tv]];
            candidates = plan.arc_to_child[tv] ? host.out_neighbours(anchor)
                                               : host.in_neighbours(anchor);
            if (pinned[tv] >= 0) {
                bool ok = std::find(candidates.begin(), candidates.end(), pinned[tv]) !=
                          candidates.end();
                candidates.clear();
                if (ok) candidates.push_back(pinned[tv]);
            }
        }
        for (int hv : candidates) {
            if (used[hv] || !degree_ok(tv, hv)) continue;
            img[tv] = hv;
            used[hv] = 1;
            if (place(depth + 1)) return true;
            used[hv] = 0;
            img[tv] = -1;
        }
        return false;
    }
};

}  // namespace

std::optional<Embedding> brute_force_embed_pinned(const Digraph& host, const OrientedTree& t,
                                                  const std::vector<std::pair<int, int>>& pins,
                                                  const BruteForceOptions& opt) {
    if (t.order() > host.order())
        throw PreconditionError("brute_force_embed: pattern larger than host");
    if (host.order() > opt.max_host)
        throw PreconditionError("brute_force_embed: host exceeds exhaustive cap " +
                                std::to_string(opt.max_host));
    std::vector<int> pinned(t.order(), -1);
    std::vector<char> pin_used(host.order(), 0);
    for (auto [tv, hv] : pins) {
        if (tv < 0 || tv >= t.order() || hv < 0 || hv >= host.order())
            throw std::out_of_range("brute_force_embed: pin out of range");
        if (pinned[tv] >= 0 && pinned[tv] != hv) return std::nullopt;  // contradictory pins
        if (pinned[tv] < 0 && pin_used[hv]) return std::nullopt;
        pinned[tv] = hv;
        pin_used[hv] = 1;
    }
    int start = pins.empty() ? 0 : pins.front().first;
    SearchPlan plan = plan_from(t, start);
    Search search{host, t, plan, std::move(pinned),
                  std::vector<int>(t.order(), -1), std::vector<char>(host.order(), 0)};
    if (!search.place(0)) return std::nullopt;
    Embedding e;
    e.map = std::move(search.img);
    return e;
}

std::optional<Embedding> brute_force_embed(const Digraph& host, const OrientedTree& t,
                                           std::optional<std::pair<int, int>> pin,
                                           const BruteForceOptions& opt) {
    std::vector<std::pair<int, int>> pins;
    if (pin) pins.push_back(*pin);
    return brute_force_embed_pinned(host, t, pins, opt);
}

}  // namespace treeuniv
