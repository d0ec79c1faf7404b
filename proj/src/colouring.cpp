#include "treeuniv/colouring.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace treeuniv {

bool Colouring::proper(const Digraph& d) const {
    if (static_cast<int>(colour.size()) != d.order()) return false;
    int used_max = -1;
    for (int c : colour) {
        if (c < 0) return false;
        used_max = std::max(used_max, c);
    }
    std::vector<char> seen(used_max + 1, 0);
    for (int c : colour) seen[c] = 1;
    int distinct = std::accumulate(seen.begin(), seen.end(), 0);
    if (distinct != num_colours) return false;
    for (auto [u, v] : d.arcs())
        if (colour[u] == colour[v]) return false;
    return true;
}

namespace {

struct Solver {
    int n;
    std::vector<uint64_t> adj;  // underlying adjacency, single word per row

    explicit Solver(const Digraph& d) : n(d.order()), adj(n, 0) {
        for (auto [u, v] : d.arcs()) {
            adj[u] |= uint64_t{1} << v;
            adj[v] |= uint64_t{1} << u;
        }
    }

    // Greedy clique from every start vertex; best one is the lower bound
    // and gets pre-coloured to break symmetry.
    std::vector<int> greedy_clique() const {
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return std::popcount(adj[a]) > std::popcount(adj[b]); });
        std::vector<int> best;
        for (int start : order) {
            std::vector<int> clique{start};
            uint64_t common = adj[start];
            while (common) {
                // next clique member: highest-degree candidate, low index ties
                int pick = -1, pick_deg = -1;
                uint64_t bits = common;
                while (bits) {
                    int v = std::countr_zero(bits);
                    bits &= bits - 1;
                    int deg = std::popcount(adj[v] & common);
                    if (deg > pick_deg) {
                        pick_deg = deg;
                        pick = v;
                    }
                }
                clique.push_back(pick);
                common &= adj[pick];
            }
            if (clique.size() > best.size()) best = clique;
        }
        return best;
    }

    // DSATUR greedy, used for the initial upper bound.
    Colouring dsatur_greedy() const {
        Colouring col;
        col.colour.assign(n, -1);
        std::vector<uint64_t> sat(n, 0);  // neighbouring colour mask
        for (int step = 0; step < n; ++step) {
            int pick = -1, pick_sat = -1, pick_deg = -1;
            for (int v = 0; v < n; ++v) {
                if (col.colour[v] >= 0) continue;
                int s = std::popcount(sat[v]);
                int deg = std::popcount(adj[v]);
                if (s > pick_sat || (s == pick_sat && deg > pick_deg)) {
                    pick = v;
                    pick_sat = s;
                    pick_deg = deg;
                }
            }
            int c = std::countr_zero(~sat[pick]);
            col.colour[pick] = c;
            col.num_colours = std::max(col.num_colours, c + 1);
            uint64_t bits = adj[pick];
            while (bits) {
                int w = std::countr_zero(bits);
                bits &= bits - 1;
                sat[w] |= uint64_t{1} << c;
            }
        }
        return col;
    }

    std::vector<int> assignment;
    std::vector<uint64_t> sat;
    int k_target = 0;

    bool extend(int coloured, int used) {
        if (coloured == n) return true;
        int pick = -1, pick_sat = -1, pick_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (assignment[v] >= 0) continue;
            int s = std::popcount(sat[v]);
            if (s >= k_target) return false;  // wipe-out
            int deg = std::popcount(adj[v]);
            if (s > pick_sat || (s == pick_sat && deg > pick_deg)) {
                pick = v;
                pick_sat = s;
                pick_deg = deg;
            }
        }
        int c_max = std::min(used, k_target - 1);  // at most one fresh colour
        for (int c = 0; c <= c_max; ++c) {
            if ((sat[pick] >> c) & 1) continue;
            assignment[pick] = c;
            std::vector<std::pair<int, uint64_t>> undo;
            uint64_t bits = adj[pick];
            bool dead = false;
            while (bits) {
                int w = std::countr_zero(bits);
                bits &= bits - 1;
                if (assignment[w] < 0 && !((sat[w] >> c) & 1)) {
                    undo.emplace_back(w, sat[w]);
                    sat[w] |= uint64_t{1} << c;
                    if (std::popcount(sat[w]) >= k_target) dead = true;
                }
            }
            if (!dead && extend(coloured + 1, std::max(used, c + 1))) return true;
            for (auto& [w, old] : undo) sat[w] = old;
            assignment[pick] = -1;
        }
        return false;
    }

    bool colourable(int k, const std::vector<int>& clique, Colouring& out) {
        k_target = k;
        assignment.assign(n, -1);
        sat.assign(n, 0);
        int used = 0;
        for (int v : clique) {
            if (used >= k) return false;
            assignment[v] = used;
            uint64_t bits = adj[v];
            while (bits) {
                int w = std::countr_zero(bits);
                bits &= bits - 1;
                sat[w] |= uint64_t{1} << used;
            }
            ++used;
        }
        if (!extend(used, used)) return false;
        out.colour = assignment;
        out.num_colours = k;
        return true;
    }
};

}  // namespace

Colouring optimal_colouring(const Digraph& d, const ColouringOptions& opt) {
    if (d.order() == 0) throw PreconditionError("chromatic_number: empty digraph");
    if (opt.max_vertices > 64)
        throw std::invalid_argument("chromatic_number: cap above the 64-vertex solver limit");
    if (d.order() > opt.max_vertices)
        throw PreconditionError("chromatic_number: instance too large for exact solve (n=" +
                                std::to_string(d.order()) + ", cap=" + std::to_string(opt.max_vertices) + ")");

    Solver s(d);
    auto clique = s.greedy_clique();
    Colouring best = s.dsatur_greedy();
    int lb = static_cast<int>(clique.size());
    for (int k = lb; k < best.num_colours; ++k) {
        Colouring cand;
        if (s.colourable(k, clique, cand)) {
            best = cand;
            break;
        }
    }
    // Compact colour indices so num_colours matches the distinct count.
    std::vector<int> remap(best.num_colours, -1);
    int next = 0;
    for (int& c : best.colour) {
        if (remap[c] < 0) remap[c] = next++;
        c = remap[c];
    }
    best.num_colours = next;
    return best;
}

int chromatic_number(const Digraph& d, const ColouringOptions& opt) {
    return optimal_colouring(d, opt).num_colours;
}

}  // namespace treeuniv
