#include <algorithm>
#include <set>

#include "treeuniv/embed.hpp"

namespace treeuniv {

namespace {

std::vector<int> sinks_within(const Digraph& d, const std::vector<int>& y) {
    std::vector<char> in_y(d.order(), 0);
    for (int v : y) in_y[v] = 1;
    std::vector<int> sinks;
    for (int v : y) {
        bool has_out = false;
        for (int w : d.out_neighbours(v))
            if (in_y[w]) {
                has_out = true;
                break;
            }
        if (!has_out) sinks.push_back(v);
    }
    return sinks;
}

std::vector<int> sources_within(const Digraph& d, const std::vector<int>& y) {
    std::vector<char> in_y(d.order(), 0);
    for (int v : y) in_y[v] = 1;
    std::vector<int> src;
    for (int v : y) {
        bool has_in = false;
        for (int w : d.in_neighbours(v))
            if (in_y[w]) {
                has_in = true;
                break;
            }
        if (!has_in) src.push_back(v);
    }
    return src;
}

// For each x: the in/out-neighbour pair on some directed cycle through x
// in D[Y ∪ {x}]. Maximality of Y guarantees one exists; the collapsed host
// is oriented, so the two neighbours are distinct and y+ keeps an out-arc
// inside Y (it is not a sink of D[Y]).
std::map<int, Partition3::XWitness> cycle_witnesses(const Digraph& dc, const std::vector<int>& y,
                                                    const std::vector<int>& x) {
    std::vector<char> in_y(dc.order(), 0);
    for (int v : y) in_y[v] = 1;
    std::map<int, Partition3::XWitness> out;
    for (int xv : x) {
        Partition3::XWitness w;
        for (int yplus : dc.out_neighbours(xv)) {
            if (!in_y[yplus]) continue;
            // reachability from yplus within D[Y]
            std::vector<char> seen(dc.order(), 0);
            std::vector<int> stack{yplus};
            seen[yplus] = 1;
            int best_in = -1;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                if (dc.has_arc(v, xv) && (best_in < 0 || v < best_in)) best_in = v;
                for (int nb : dc.out_neighbours(v))
                    if (in_y[nb] && !seen[nb]) {
                        seen[nb] = 1;
                        stack.push_back(nb);
                    }
            }
            if (best_in >= 0) {
                w.y_plus = yplus;
                w.y_minus = best_in;
                break;
            }
        }
        if (w.y_plus < 0)
            throw std::logic_error("partition: no cycle through an X vertex; maximality violated");
        out.emplace(xv, w);
    }
    return out;
}

std::vector<int> complement_of(int n, const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<char> taken(n, 0);
    for (int v : a) taken[v] = 1;
    for (int v : b) taken[v] = 1;
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if (!taken[v]) out.push_back(v);
    return out;
}

Partition3 directed_partition_forward(const Digraph& d, int ell, ScanOrder order) {
    Partition3 p;
    p.tag = PartitionTag::directed;
    p.ell = ell;
    p.collapsed = digon_collapse(d);
    const Digraph& dc = p.collapsed;

    // Base level: Y maximal acyclic, Z empty; sinks start length-0 paths.
    p.y_set = maximal_acyclic_extension(dc, {}, {}, order);
    p.z_set = {};
    p.x_set = complement_of(d.order(), p.y_set, p.z_set);
    for (int s : sinks_within(dc, p.y_set)) p.y_witness[s] = {s};

    for (int level = 1; level <= ell; ++level) {
        std::vector<int> s_old = sinks_within(dc, p.y_set);
        std::vector<char> is_sink(d.order(), 0);
        for (int s : s_old) is_sink[s] = 1;

        std::vector<int> z_new = p.z_set;
        z_new.insert(z_new.end(), s_old.begin(), s_old.end());
        std::sort(z_new.begin(), z_new.end());

        std::vector<int> seed;
        for (int v : p.y_set)
            if (!is_sink[v]) seed.push_back(v);

        std::vector<int> y_new = maximal_acyclic_extension(dc, seed, z_new, order);

        std::map<int, std::vector<int>> wit_new;
        for (int s : sinks_within(dc, y_new)) {
            // s was not a sink before the transfer, so it keeps an
            // out-neighbour among the removed sinks; extend that path.
            int via = -1;
            for (int w : dc.out_neighbours(s))
                if (is_sink[w]) {
                    via = w;
                    break;
                }
            if (via < 0) throw std::logic_error("directed_partition: sink lost its extension");
            std::vector<int> path{s};
            const auto& tail = p.y_witness.at(via);
            path.insert(path.end(), tail.begin(), tail.end());
            wit_new[s] = std::move(path);
        }

        p.z_set = std::move(z_new);
        p.y_set = std::move(y_new);
        p.x_set = complement_of(d.order(), p.y_set, p.z_set);
        p.y_witness = std::move(wit_new);
    }
    p.x_witness = cycle_witnesses(dc, p.y_set, p.x_set);
    return p;
}

}  // namespace

Partition3 directed_partition(const Digraph& d, int ell, PartitionVariant variant,
                              ScanOrder order) {
    if (ell < 0) throw std::invalid_argument("directed_partition: ell must be non-negative");
    if (variant == PartitionVariant::forward) return directed_partition_forward(d, ell, order);

    Partition3 rev = directed_partition_forward(reverse(d), ell, order);
    Partition3 p;
    p.tag = PartitionTag::directed_reversed;
    p.ell = ell;
    p.collapsed = reverse(rev.collapsed);
    p.x_set = std::move(rev.x_set);
    p.y_set = std::move(rev.y_set);
    p.z_set = std::move(rev.z_set);
    for (auto& [x, w] : rev.x_witness) p.x_witness[x] = {w.y_plus, w.y_minus};
    for (auto& [s, path] : rev.y_witness) {
        std::vector<int> flipped(path.rbegin(), path.rend());
        p.y_witness[s] = std::move(flipped);  // ends at the source s
    }
    return p;
}

Partition3 oriented_partition(const Digraph& d, const RootedOrientedPath& q) {
    Partition3 p;
    p.tag = PartitionTag::oriented;
    p.ell = q.length();
    p.pattern = q;
    p.collapsed = digon_collapse(d);
    const Digraph& dc = p.collapsed;

    // Base: the length-0 suffix of q; every y starts the trivial copy.
    p.y_set = maximal_acyclic_extension(dc, {}, {});
    p.z_set = {};
    p.x_set = complement_of(d.order(), p.y_set, p.z_set);
    p.x_witness = cycle_witnesses(dc, p.y_set, p.x_set);
    for (int y : p.y_set) p.y_witness[y] = {y};

    for (int level = 1; level <= q.length(); ++level) {
        // Target pattern: the suffix of q with `level` arcs.
        RootedOrientedPath target = q.subpath(q.length() - level, q.length());
        bool root_out = target.forward(0);  // arc from the root toward the rest

        auto ind_y = induced(dc, p.y_set);
        int chi_y = p.y_set.empty() ? 0 : chromatic_number(ind_y.graph);

        std::vector<int> k_prime;
        std::map<int, std::vector<int>> direct_copies;  // y in Y'\K' -> full copy
        if (chi_y <= level) {
            k_prime = p.y_set;
        } else {
            // chi(D[Y']) >= level+1 = |target|: the bikernel partition of
            // D[Y'] hands every surviving y a copy of the target lying in K'.
            DagEmbedOptions deo;
            deo.known_chi = chi_y;
            OrientedTree pattern_tree = target.to_pattern_tree();
            DagTreePartition bk = embed_tree_in_dag(ind_y.graph, pattern_tree, 0, deo);
            for (int kv : bk.k_set) k_prime.push_back(ind_y.vertex_of[kv]);
            std::sort(k_prime.begin(), k_prime.end());
            for (size_t i = 0; i < bk.x_set.size(); ++i) {
                std::vector<int> copy(pattern_tree.order());
                for (int pos = 0; pos < pattern_tree.order(); ++pos)
                    copy[pos] = ind_y.vertex_of[bk.embeddings[i].map[pos]];
                direct_copies[ind_y.vertex_of[bk.x_set[i]]] = std::move(copy);
            }
        }

        std::vector<char> in_kp(d.order(), 0);
        for (int v : k_prime) in_kp[v] = 1;
        std::vector<int> z_new = p.z_set;
        z_new.insert(z_new.end(), k_prime.begin(), k_prime.end());
        std::sort(z_new.begin(), z_new.end());

        std::vector<int> seed;
        for (int v : p.y_set)
            if (!in_kp[v]) seed.push_back(v);
        std::vector<int> y_new = maximal_acyclic_extension(dc, seed, z_new);

        std::vector<char> was_y(d.order(), 0);
        for (int v : p.y_set) was_y[v] = 1;

        std::map<int, std::vector<int>> wit_new;
        for (int y : y_new) {
            if (was_y[y]) {
                wit_new[y] = std::move(direct_copies.at(y));
            } else {
                // y came from X': extend a recorded copy of the shorter
                // suffix through the recorded in/out-neighbour.
                const auto& xw = p.x_witness.at(y);
                int next = root_out ? xw.y_plus : xw.y_minus;
                std::vector<int> copy{y};
                const auto& tail = p.y_witness.at(next);
                copy.insert(copy.end(), tail.begin(), tail.end());
                wit_new[y] = std::move(copy);
            }
        }

        p.z_set = std::move(z_new);
        p.y_set = std::move(y_new);
        p.x_set = complement_of(d.order(), p.y_set, p.z_set);
        p.y_witness = std::move(wit_new);
        p.x_witness = cycle_witnesses(dc, p.y_set, p.x_set);
    }
    return p;
}

long long Partition3::z_chromatic_bound() const {
    if (tag == PartitionTag::oriented) return static_cast<long long>(ell) * (ell + 1) / 2;
    return ell;
}

std::vector<std::string> Partition3::validate(const Digraph& original, bool check_chi,
                                              const ColouringOptions& chi) const {
    std::vector<std::string> bad;
    const int n = original.order();

    std::vector<int> owner(n, -1);
    auto mark = [&](const std::vector<int>& set, int id, const char* name) {
        for (int v : set) {
            if (v < 0 || v >= n) {
                bad.push_back(std::string(name) + " contains an out-of-range vertex");
                continue;
            }
            if (owner[v] != -1) bad.push_back("vertex " + std::to_string(v) + " in two sets");
            owner[v] = id;
        }
    };
    mark(x_set, 0, "X");
    mark(y_set, 1, "Y");
    mark(z_set, 2, "Z");
    for (int v = 0; v < n; ++v)
        if (owner[v] == -1) bad.push_back("vertex " + std::to_string(v) + " not covered");
    if (!bad.empty()) return bad;

    // The collapsed host must be an orientation-preserving digon collapse
    // of the original: a digon-free subdigraph with the same underlying graph.
    if (collapsed.order() != n) {
        bad.push_back("collapsed host has wrong order");
        return bad;
    }
    for (auto [u, v] : collapsed.arcs())
        if (!original.has_arc(u, v)) bad.push_back("collapsed host invents an arc");
    if (!collapsed.is_oriented()) bad.push_back("collapsed host keeps a digon");
    for (auto [u, v] : original.arcs())
        if (!collapsed.has_arc(u, v) && !collapsed.has_arc(v, u))
            bad.push_back("collapsed host drops the edge {" + std::to_string(u) + "," +
                          std::to_string(v) + "}");

    auto ind_y = induced(collapsed, y_set);
    if (!is_acyclic(ind_y.graph).acyclic) bad.push_back("collapsed[Y] has a directed cycle");

    // Property (X).
    if (x_witness.size() != x_set.size()) bad.push_back("X witness count mismatch");
    for (int x : x_set) {
        auto it = x_witness.find(x);
        if (it == x_witness.end()) {
            bad.push_back("x " + std::to_string(x) + " has no witness");
            continue;
        }
        auto [ym, yp] = it->second;
        if (owner[ym] != 1 || owner[yp] != 1)
            bad.push_back("x " + std::to_string(x) + " witness endpoints not in Y");
        else if (!collapsed.has_arc(ym, x) || !collapsed.has_arc(x, yp))
            bad.push_back("x " + std::to_string(x) + " witness arcs missing");
    }

    // Property (Y) per tag.
    auto distinct = [](const std::vector<int>& vs) {
        std::set<int> s(vs.begin(), vs.end());
        return s.size() == vs.size();
    };
    if (tag == PartitionTag::oriented) {
        if (!pattern) {
            bad.push_back("oriented partition without a pattern");
            return bad;
        }
        for (int y : y_set) {
            auto it = y_witness.find(y);
            if (it == y_witness.end()) {
                bad.push_back("y " + std::to_string(y) + " has no recorded copy");
                continue;
            }
            const auto& copy = it->second;
            if (static_cast<int>(copy.size()) != pattern->order() || copy.front() != y ||
                !distinct(copy)) {
                bad.push_back("y " + std::to_string(y) + " copy malformed");
                continue;
            }
            for (int i = 0; i < pattern->length(); ++i) {
                int a = pattern->forward(i) ? copy[i] : copy[i + 1];
                int b = pattern->forward(i) ? copy[i + 1] : copy[i];
                if (!collapsed.has_arc(a, b))
                    bad.push_back("y " + std::to_string(y) + " copy misses an arc");
            }
            for (int v : copy)
                if (owner[v] == 0) bad.push_back("y " + std::to_string(y) + " copy leaves Y u Z");
        }
        if (y_witness.size() != y_set.size()) bad.push_back("copies recorded for non-Y vertices");
    } else {
        bool fwd = tag == PartitionTag::directed;
        std::vector<int> ends = fwd ? sinks_within(collapsed, y_set) : sources_within(collapsed, y_set);
        std::set<int> end_set(ends.begin(), ends.end());
        std::set<int> keys;
        for (auto& [k, v] : y_witness) keys.insert(k);
        if (keys != end_set) bad.push_back("witness keys differ from the sinks/sources of Y");
        for (auto& [s, path] : y_witness) {
            if (static_cast<int>(path.size()) != ell + 1 || !distinct(path)) {
                bad.push_back("path at " + std::to_string(s) + " malformed");
                continue;
            }
            int anchor = fwd ? path.front() : path.back();
            if (anchor != s) bad.push_back("path at " + std::to_string(s) + " anchored wrongly");
            for (size_t i = 0; i + 1 < path.size(); ++i)
                if (!collapsed.has_arc(path[i], path[i + 1]))
                    bad.push_back("path at " + std::to_string(s) + " misses an arc");
            for (size_t i = 0; i < path.size(); ++i) {
                int v = path[i];
                bool is_anchor = fwd ? i == 0 : i + 1 == path.size();
                if (is_anchor) continue;
                if (owner[v] != 2)
                    bad.push_back("path at " + std::to_string(s) + " strays outside Z");
            }
        }
    }

    if (check_chi && !z_set.empty()) {
        int chi_z = chromatic_number(induced(original, z_set).graph, chi);
        if (chi_z > z_chromatic_bound())
            bad.push_back("chi(D[Z]) = " + std::to_string(chi_z) + " exceeds bound " +
                          std::to_string(z_chromatic_bound()));
    }
    return bad;
}

}  // namespace treeuniv
