#include "doctest.h"
#include "helpers.hpp"
#include "treeuniv/embed.hpp"

using namespace treeuniv;
using testhelp::directed_path_tree;
using testhelp::random_dag;
using testhelp::random_tree;

namespace {

void check_dag_partition(const Digraph& d, const OrientedTree& t, int root,
                         const DagTreePartition& res) {
    // partition
    std::vector<int> owner(d.order(), -1);
    for (int x : res.x_set) owner[x] = 0;
    for (int k : res.k_set) {
        CHECK(owner[k] == -1);
        owner[k] = 1;
    }
    for (int v = 0; v < d.order(); ++v) CHECK(owner[v] != -1);
    // chi(D[K]) <= |T| - 1
    if (!res.k_set.empty())
        CHECK(chromatic_number(induced(d, res.k_set).graph) <= t.order() - 1);
    // every embedding: valid, root at x, everything else in K
    REQUIRE(res.embeddings.size() == res.x_set.size());
    for (size_t i = 0; i < res.x_set.size(); ++i) {
        const Embedding& e = res.embeddings[i];
        CHECK(e.valid(t, d));
        CHECK(e.map[root] == res.x_set[i]);
        for (int v = 0; v < t.order(); ++v)
            if (v != root) CHECK(owner[e.map[v]] == 1);
    }
}

}  // namespace

TEST_CASE("order-1 tree: X is everything, K empty") {
    Digraph d = random_dag(8, 0.5, 1);
    auto res = embed_tree_in_dag(d, OrientedTree(1, {}), 0);
    CHECK(res.x_set.size() == 8);
    CHECK(res.k_set.empty());
    CHECK(res.embeddings.size() == 8);
}

TEST_CASE("single arc in a directed path host") {
    Digraph host = Digraph::from_arcs(3, {{0, 1}, {1, 2}});
    OrientedTree arc = directed_path_tree(2);
    auto res = embed_tree_in_dag(host, arc, 0);
    check_dag_partition(host, arc, 0, res);
    CHECK(!res.x_set.empty());
}

TEST_CASE("preconditions") {
    Digraph cyclic(3);
    cyclic.add_arc(0, 1);
    cyclic.add_arc(1, 2);
    cyclic.add_arc(2, 0);
    CHECK_THROWS_AS(embed_tree_in_dag(cyclic, directed_path_tree(2), 0), PreconditionError);

    Digraph tiny = Digraph::from_arcs(2, {{0, 1}});  // chi = 2 < 3
    CHECK_THROWS_AS(embed_tree_in_dag(tiny, directed_path_tree(3), 0), PreconditionError);
}

TEST_CASE("random DAGs, every tree k <= 5, every root") {
    int hosts_used = 0;
    for (uint64_t seed = 0; hosts_used < 12 && seed < 200; ++seed) {
        Digraph d = random_dag(13, 0.75, seed);
        int chi = chromatic_number(d);
        if (chi < 5) continue;
        ++hosts_used;
        for (int k = 1; k <= 5; ++k) {
            for (const auto& t : enumerate_oriented_trees(k)) {
                for (int root = 0; root < k; ++root) {
                    DagEmbedOptions opt;
                    opt.known_chi = chi;
                    auto res = embed_tree_in_dag(d, t, root, opt);
                    check_dag_partition(d, t, root, res);
                    CHECK(!res.x_set.empty());
                }
            }
        }
    }
    CHECK(hosts_used == 12);
}

TEST_CASE("gallai-roy paths") {
    SUBCASE("transitive tournament: hamiltonian directed path") {
        Digraph d(6);
        for (int u = 0; u < 6; ++u)
            for (int v = u + 1; v < 6; ++v) d.add_arc(u, v);
        Embedding e = gallai_roy_path(d, 6);
        CHECK(e.valid(directed_path_tree(6), d));
    }
    SUBCASE("directed 3-cycle holds a path of order 3") {
        Digraph cyc(3);
        cyc.add_arc(0, 1);
        cyc.add_arc(1, 2);
        cyc.add_arc(2, 0);
        Embedding e = gallai_roy_path(cyc, 3);
        CHECK(e.valid(directed_path_tree(3), cyc));
    }
    SUBCASE("random digraphs: a path of order chi(D) always appears") {
        for (uint64_t seed = 0; seed < 40; ++seed) {
            int n = 2 + static_cast<int>(seed % 14);
            Digraph d = testhelp::gnp(n, 0.45, seed);
            int chi = chromatic_number(d);
            Embedding e = gallai_roy_path(d, chi);
            CHECK(e.valid(directed_path_tree(chi), d));
        }
    }
}

TEST_CASE("star embedder") {
    Digraph host = testhelp::tournament(7, 3);
    auto e = embed_star(host, 4, StarKind::out_star);
    REQUIRE(e.has_value());
    for (int i = 1; i < 4; ++i) CHECK(host.has_arc(e->map[0], e->map[i]));
    auto in = embed_star(host, 4, StarKind::in_star);
    REQUIRE(in.has_value());
    for (int i = 1; i < 4; ++i) CHECK(host.has_arc(in->map[i], in->map[0]));
    // directed 3-cycle: no out-degree 2 vertex
    Digraph cyc(3);
    cyc.add_arc(0, 1);
    cyc.add_arc(1, 2);
    cyc.add_arc(2, 0);
    CHECK(!embed_star(cyc, 3, StarKind::out_star).has_value());
}
