#pragma once

#include <random>
#include <vector>

#include "treeuniv/embed.hpp"
#include "treeuniv/harness.hpp"
#include "treeuniv/tree.hpp"

namespace testhelp {

using namespace treeuniv;

inline Digraph gnp(int n, double p, uint64_t seed) {
    return generate({FamilyKind::random_gnp_digraph, n, p, seed, {}});
}

inline Digraph tournament(int n, uint64_t seed) {
    return generate({FamilyKind::random_tournament, n, 0.0, seed, {}});
}

inline Digraph random_dag(int n, double p, uint64_t seed) {
    return generate({FamilyKind::layered_dag, n, p, seed, {}});
}

/// Uniform-ish random labelled tree (random Pruefer word) with independently
/// flipped arc orientations.
inline OrientedTree random_tree(int k, uint64_t seed) {
    std::mt19937_64 eng(seed);
    std::vector<std::pair<int, int>> edges;
    if (k >= 2) {
        if (k == 2) {
            edges.push_back({0, 1});
        } else {
            std::vector<int> pruefer(k - 2);
            for (int& v : pruefer) v = static_cast<int>(eng() % k);
            std::vector<int> deg(k, 1);
            for (int v : pruefer) ++deg[v];
            std::vector<char> used(k, 0);
            for (int v : pruefer) {
                int leaf = -1;
                for (int u = 0; u < k; ++u)
                    if (deg[u] == 1 && !used[u]) {
                        leaf = u;
                        break;
                    }
                edges.push_back({leaf, v});
                used[leaf] = 1;
                --deg[v];
            }
            std::vector<int> rest;
            for (int u = 0; u < k; ++u)
                if (!used[u] && deg[u] == 1) rest.push_back(u);
            edges.push_back({rest[0], rest[1]});
        }
    }
    std::vector<std::pair<int, int>> arcs;
    for (auto [u, v] : edges) arcs.push_back(eng() & 1 ? std::pair{v, u} : std::pair{u, v});
    return OrientedTree(k, arcs);
}

/// All labelled trees on k vertices by Pruefer enumeration (oracle side).
inline std::vector<std::vector<std::pair<int, int>>> all_labelled_trees(int k) {
    std::vector<std::vector<std::pair<int, int>>> out;
    if (k == 1) {
        out.push_back({});
        return out;
    }
    if (k == 2) {
        out.push_back({{0, 1}});
        return out;
    }
    std::vector<int> pruefer(k - 2, 0);
    while (true) {
        std::vector<int> deg(k, 1);
        for (int v : pruefer) ++deg[v];
        std::vector<std::pair<int, int>> edges;
        std::vector<char> used(k, 0);
        for (int v : pruefer) {
            int leaf = -1;
            for (int u = 0; u < k; ++u)
                if (deg[u] == 1 && !used[u]) {
                    leaf = u;
                    break;
                }
            edges.push_back({leaf, v});
            used[leaf] = 1;
            --deg[v];
        }
        std::vector<int> rest;
        for (int u = 0; u < k; ++u)
            if (!used[u] && deg[u] == 1) rest.push_back(u);
        edges.push_back({rest[0], rest[1]});
        out.push_back(std::move(edges));
        int pos = k - 3;
        while (pos >= 0 && pruefer[pos] == k - 1) pruefer[pos--] = 0;
        if (pos < 0) break;
        ++pruefer[pos];
    }
    return out;
}

/// Isomorphism through the exhaustive embedder: between trees of equal
/// order, an arc-preserving injection is an isomorphism.
inline bool trees_isomorphic(const OrientedTree& a, const OrientedTree& b) {
    if (a.order() != b.order()) return false;
    BruteForceOptions opt;
    opt.max_host = 16;
    return brute_force_embed(b.graph(), a, std::nullopt, opt).has_value();
}

inline OrientedTree out_star(int k) {
    std::vector<std::pair<int, int>> arcs;
    for (int v = 1; v < k; ++v) arcs.emplace_back(0, v);
    return OrientedTree(k, arcs);
}

inline OrientedTree directed_path_tree(int k) {
    std::vector<std::pair<int, int>> arcs;
    for (int v = 0; v + 1 < k; ++v) arcs.emplace_back(v, v + 1);
    return OrientedTree(k, arcs);
}

}  // namespace testhelp
