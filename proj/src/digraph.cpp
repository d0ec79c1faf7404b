#include "treeuniv/digraph.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace treeuniv {

namespace {

bool test_bit(const uint64_t* row, int v) { return (row[v >> 6] >> (v & 63)) & 1u; }
void set_bit(uint64_t* row, int v) { row[v >> 6] |= uint64_t{1} << (v & 63); }
void clear_bit(uint64_t* row, int v) { row[v >> 6] &= ~(uint64_t{1} << (v & 63)); }

int popcount_row(const uint64_t* row, int words) {
    int c = 0;
    for (int w = 0; w < words; ++w) c += std::popcount(row[w]);
    return c;
}

std::vector<int> row_to_vector(const uint64_t* row, int words) {
    std::vector<int> out;
    for (int w = 0; w < words; ++w) {
        uint64_t bits = row[w];
        while (bits) {
            int b = std::countr_zero(bits);
            out.push_back(w * 64 + b);
            bits &= bits - 1;
        }
    }
    return out;
}

}  // namespace

Digraph::Digraph(int n) : n_(n), words_((n + 63) / 64) {
    if (n < 0) throw std::invalid_argument("Digraph: negative order");
    rows_.assign(static_cast<size_t>(2 * n_) * words_, 0);
}

Digraph Digraph::from_arcs(int n, const std::vector<std::pair<int, int>>& arcs) {
    Digraph d(n);
    for (auto [u, v] : arcs) d.add_arc(u, v);
    return d;
}

void Digraph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("Digraph: vertex " + std::to_string(v) + " out of range");
}

void Digraph::add_arc(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("Digraph: self-loop rejected");
    if (has_arc(u, v)) return;
    set_bit(out_row(u), v);
    set_bit(in_row(v), u);
    ++arc_count_;
}

void Digraph::remove_arc(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (!has_arc(u, v)) return;
    clear_bit(out_row(u), v);
    clear_bit(in_row(v), u);
    --arc_count_;
}

bool Digraph::has_arc(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return test_bit(out_row(u), v);
}

bool Digraph::is_oriented() const {
    for (auto [u, v] : arcs())
        if (u < v && has_arc(v, u)) return false;
    return true;
}

int Digraph::out_degree(int v) const {
    check_vertex(v);
    return popcount_row(out_row(v), words_);
}

int Digraph::in_degree(int v) const {
    check_vertex(v);
    return popcount_row(in_row(v), words_);
}

int Digraph::degree(int v) const {
    check_vertex(v);
    int c = 0;
    for (int w = 0; w < words_; ++w) c += std::popcount(out_row(v)[w] | in_row(v)[w]);
    return c;
}

std::vector<int> Digraph::out_neighbours(int v) const {
    check_vertex(v);
    return row_to_vector(out_row(v), words_);
}

std::vector<int> Digraph::in_neighbours(int v) const {
    check_vertex(v);
    return row_to_vector(in_row(v), words_);
}

std::vector<std::pair<int, int>> Digraph::arcs() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(arc_count_);
    for (int u = 0; u < n_; ++u)
        for (int v : out_neighbours(u)) out.emplace_back(u, v);
    return out;
}

bool Digraph::operator==(const Digraph& other) const {
    return n_ == other.n_ && rows_ == other.rows_;
}

Digraph digon_collapse(const Digraph& d, DigonRule rule) {
    Digraph out(d.order());
    for (auto [u, v] : d.arcs()) {
        if (d.has_arc(v, u)) {
            bool keep = (rule == DigonRule::low_to_high) ? u < v : u > v;
            if (keep) out.add_arc(u, v);
        } else {
            out.add_arc(u, v);
        }
    }
    return out;
}

Digraph reverse(const Digraph& d) {
    Digraph out(d.order());
    for (auto [u, v] : d.arcs()) out.add_arc(v, u);
    return out;
}

InducedSubdigraph induced(const Digraph& d, const std::vector<int>& s) {
    std::set<int> uniq(s.begin(), s.end());
    if (uniq.size() != s.size()) throw std::invalid_argument("induced: duplicate vertices");
    std::vector<int> verts(uniq.begin(), uniq.end());
    std::vector<int> new_of(d.order(), -1);
    for (size_t i = 0; i < verts.size(); ++i) {
        if (verts[i] < 0 || verts[i] >= d.order())
            throw std::out_of_range("induced: vertex out of range");
        new_of[verts[i]] = static_cast<int>(i);
    }
    Digraph g(static_cast<int>(verts.size()));
    for (int u : verts)
        for (int v : d.out_neighbours(u))
            if (new_of[v] >= 0) g.add_arc(new_of[u], new_of[v]);
    return {std::move(g), std::move(verts)};
}

AcyclicityCheck is_acyclic(const Digraph& d) {
    const int n = d.order();
    AcyclicityCheck res;
    // Iterative DFS with colours; a back edge yields the cycle witness.
    std::vector<int> colour(n, 0);  // 0 white, 1 grey, 2 black
    std::vector<int> parent(n, -1);
    std::vector<int> order;
    order.reserve(n);

    for (int root = 0; root < n; ++root) {
        if (colour[root] != 0) continue;
        std::vector<std::pair<int, size_t>> stack;
        std::vector<std::vector<int>> adj_cache;
        stack.emplace_back(root, 0);
        adj_cache.push_back(d.out_neighbours(root));
        colour[root] = 1;
        while (!stack.empty()) {
            auto& [v, idx] = stack.back();
            const auto& nbrs = adj_cache.back();
            if (idx < nbrs.size()) {
                int w = nbrs[idx++];
                if (colour[w] == 0) {
                    colour[w] = 1;
                    parent[w] = v;
                    stack.emplace_back(w, 0);
                    adj_cache.push_back(d.out_neighbours(w));
                } else if (colour[w] == 1) {
                    // cycle: w ... v -> w
                    std::vector<int> cyc;
                    for (int x = v; x != w; x = parent[x]) cyc.push_back(x);
                    cyc.push_back(w);
                    std::reverse(cyc.begin(), cyc.end());
                    res.acyclic = false;
                    res.cycle = std::move(cyc);
                    return res;
                }
            } else {
                colour[v] = 2;
                order.push_back(v);
                stack.pop_back();
                adj_cache.pop_back();
            }
        }
    }
    std::reverse(order.begin(), order.end());
    res.acyclic = true;
    res.topo_order = std::move(order);
    return res;
}

std::vector<int> out_kernel_on(const Digraph& d, const std::vector<int>& alive) {
    auto [sub, vertex_of] = induced(d, alive);
    auto check = is_acyclic(sub);
    if (!check.acyclic) throw PreconditionError("out_kernel: digraph is not acyclic");
    std::vector<char> in_k(sub.order(), 0);
    // Sinks first: v joins K iff no out-neighbour is already in K.
    for (auto it = check.topo_order.rbegin(); it != check.topo_order.rend(); ++it) {
        bool blocked = false;
        for (int w : sub.out_neighbours(*it))
            if (in_k[w]) {
                blocked = true;
                break;
            }
        if (!blocked) in_k[*it] = 1;
    }
    std::vector<int> kernel;
    for (int v = 0; v < sub.order(); ++v)
        if (in_k[v]) kernel.push_back(vertex_of[v]);
    return kernel;
}

std::vector<int> in_kernel_on(const Digraph& d, const std::vector<int>& alive) {
    return out_kernel_on(reverse(d), alive);
}

std::vector<int> out_kernel(const Digraph& d) {
    std::vector<int> all(d.order());
    for (int v = 0; v < d.order(); ++v) all[v] = v;
    return out_kernel_on(d, all);
}

std::vector<int> in_kernel(const Digraph& d) { return out_kernel(reverse(d)); }

bool extension_keeps_acyclic(const Digraph& d, const std::vector<int>& y, int v) {
    // A cycle through v in D[Y ∪ {v}] exists iff some out-neighbour of v in Y
    // reaches an in-neighbour of v within D[Y].
    std::vector<char> in_y(d.order(), 0);
    for (int u : y) in_y[u] = 1;
    if (in_y[v]) throw std::invalid_argument("extension_keeps_acyclic: v already in Y");
    std::vector<char> seen(d.order(), 0);
    std::vector<int> stack;
    for (int w : d.out_neighbours(v))
        if (in_y[w] && !seen[w]) {
            seen[w] = 1;
            stack.push_back(w);
        }
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        if (d.has_arc(x, v)) return false;
        for (int w : d.out_neighbours(x))
            if (in_y[w] && !seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
    }
    return true;
}

std::vector<int> maximal_acyclic_extension(const Digraph& d, const std::vector<int>& seed,
                                           const std::vector<int>& forbidden, ScanOrder order) {
    std::vector<char> in_y(d.order(), 0), banned(d.order(), 0);
    for (int v : forbidden) banned[v] = 1;
    std::vector<int> y;
    for (int v : seed) {
        if (banned[v]) throw std::invalid_argument("maximal_acyclic_extension: seed meets forbidden");
        if (!in_y[v]) {
            in_y[v] = 1;
            y.push_back(v);
        }
    }
    {
        auto check = is_acyclic(induced(d, y).graph);
        if (!check.acyclic) throw PreconditionError("maximal_acyclic_extension: seed induces a cycle");
    }
    std::sort(y.begin(), y.end());
    for (int i = 0; i < d.order(); ++i) {
        int v = order == ScanOrder::ascending ? i : d.order() - 1 - i;
        if (in_y[v] || banned[v]) continue;
        if (extension_keeps_acyclic(d, y, v)) {
            in_y[v] = 1;
            y.insert(std::lower_bound(y.begin(), y.end(), v), v);
        }
    }
    return y;
}

}  // namespace treeuniv
