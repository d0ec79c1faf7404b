#include "doctest.h"
#include "helpers.hpp"
#include "treeuniv/digraph.hpp"

using namespace treeuniv;
using testhelp::gnp;
using testhelp::random_dag;

namespace {

Digraph directed_cycle(int n) {
    Digraph d(n);
    for (int v = 0; v < n; ++v) d.add_arc(v, (v + 1) % n);
    return d;
}

bool valid_out_kernel(const Digraph& d, const std::vector<int>& k) {
    std::vector<char> in_k(d.order(), 0);
    for (int v : k) in_k[v] = 1;
    for (int u : k)
        for (int v : k)
            if (u != v && d.adjacent(u, v)) return false;
    for (int v = 0; v < d.order(); ++v) {
        if (in_k[v]) continue;
        bool dominated = false;
        for (int w : d.out_neighbours(v))
            if (in_k[w]) dominated = true;
        if (!dominated) return false;
    }
    return true;
}

bool valid_in_kernel(const Digraph& d, const std::vector<int>& k) {
    return valid_out_kernel(reverse(d), k);
}

}  // namespace

TEST_CASE("digraph basics and invariants") {
    Digraph d(3);
    d.add_arc(0, 1);
    d.add_arc(1, 0);
    d.add_arc(1, 2);
    CHECK(d.arc_count() == 3);
    CHECK(d.has_digon(0, 1));
    CHECK(!d.is_oriented());
    CHECK(d.adjacent(2, 1));
    CHECK(!d.adjacent(0, 2));
    d.add_arc(0, 1);  // set semantics
    CHECK(d.arc_count() == 3);
    CHECK_THROWS_AS(d.add_arc(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(d.add_arc(0, 5), std::out_of_range);
}

TEST_CASE("digon collapse") {
    SUBCASE("single digon keeps the low-to-high arc") {
        Digraph d = Digraph::from_arcs(2, {{0, 1}, {1, 0}});
        Digraph c = digon_collapse(d);
        CHECK(c.arc_count() == 1);
        CHECK(c.has_arc(0, 1));
        Digraph c2 = digon_collapse(d, DigonRule::high_to_low);
        CHECK(c2.has_arc(1, 0));
    }
    SUBCASE("identity on oriented input") {
        Digraph d = Digraph::from_arcs(4, {{0, 1}, {1, 2}, {3, 0}});
        CHECK(digon_collapse(d) == d);
    }
    SUBCASE("collapse is oriented and preserves the underlying graph") {
        for (uint64_t seed = 0; seed < 20; ++seed) {
            Digraph d = gnp(10, 0.6, seed);
            Digraph c = digon_collapse(d);
            CHECK(c.is_oriented());
            for (int u = 0; u < 10; ++u)
                for (int v = 0; v < 10; ++v) CHECK(c.adjacent(u, v) == d.adjacent(u, v));
        }
    }
}

TEST_CASE("acyclicity with witnesses") {
    SUBCASE("directed 3-cycle") {
        auto res = is_acyclic(directed_cycle(3));
        REQUIRE(!res.acyclic);
        REQUIRE(res.cycle.size() == 3);
        Digraph d = directed_cycle(3);
        for (size_t i = 0; i < res.cycle.size(); ++i)
            CHECK(d.has_arc(res.cycle[i], res.cycle[(i + 1) % res.cycle.size()]));
    }
    SUBCASE("transitive tournament has its unique topological order") {
        Digraph d(5);
        for (int u = 0; u < 5; ++u)
            for (int v = u + 1; v < 5; ++v) d.add_arc(u, v);
        auto res = is_acyclic(d);
        REQUIRE(res.acyclic);
        CHECK(res.topo_order == std::vector<int>{0, 1, 2, 3, 4});
    }
    SUBCASE("random permutation DAGs are acyclic with a consistent order") {
        for (uint64_t seed = 0; seed < 10; ++seed) {
            Digraph d = random_dag(14, 0.5, seed);
            auto res = is_acyclic(d);
            REQUIRE(res.acyclic);
            std::vector<int> pos(d.order());
            for (size_t i = 0; i < res.topo_order.size(); ++i) pos[res.topo_order[i]] = static_cast<int>(i);
            for (auto [u, v] : d.arcs()) CHECK(pos[u] < pos[v]);
        }
    }
}

TEST_CASE("kernels") {
    SUBCASE("single arc") {
        Digraph d = Digraph::from_arcs(2, {{0, 1}});
        CHECK(in_kernel(d) == std::vector<int>{0});
        CHECK(out_kernel(d) == std::vector<int>{1});
    }
    SUBCASE("cyclic input rejected") {
        CHECK_THROWS_AS(out_kernel(directed_cycle(3)), PreconditionError);
    }
    SUBCASE("random DAGs validated by the domination/independence scan") {
        for (uint64_t seed = 0; seed < 30; ++seed) {
            int n = 4 + static_cast<int>(seed % 17);
            Digraph d = random_dag(n, 0.4, seed);
            CHECK(valid_out_kernel(d, out_kernel(d)));
            CHECK(valid_in_kernel(d, in_kernel(d)));
        }
    }
}

TEST_CASE("maximal acyclic extension") {
    SUBCASE("directed 3-cycle keeps two vertices") {
        auto y = maximal_acyclic_extension(directed_cycle(3), {}, {});
        CHECK(y.size() == 2);
    }
    SUBCASE("DAG input keeps everything") {
        Digraph d = random_dag(12, 0.5, 3);
        CHECK(maximal_acyclic_extension(d, {}, {}).size() == 12);
    }
    SUBCASE("cyclic seed rejected") {
        CHECK_THROWS_AS(maximal_acyclic_extension(directed_cycle(3), {0, 1, 2}, {}), PreconditionError);
    }
    SUBCASE("per-vertex maximality on random digraphs") {
        for (uint64_t seed = 0; seed < 20; ++seed) {
            int n = 5 + static_cast<int>(seed % 16);
            Digraph d = gnp(n, 0.5, seed);
            auto y = maximal_acyclic_extension(d, {}, {});
            CHECK(is_acyclic(induced(d, y).graph).acyclic);
            std::vector<char> in_y(n, 0);
            for (int v : y) in_y[v] = 1;
            for (int v = 0; v < n; ++v)
                if (!in_y[v]) CHECK(!extension_keeps_acyclic(d, y, v));
        }
    }
}

TEST_CASE("reverse and induced") {
    SUBCASE("single arc flips") {
        Digraph d = Digraph::from_arcs(2, {{0, 1}});
        CHECK(reverse(d).has_arc(1, 0));
    }
    SUBCASE("reverse round-trips and keeps digon-freeness") {
        for (uint64_t seed = 0; seed < 10; ++seed) {
            Digraph d = gnp(9, 0.4, seed);
            CHECK(reverse(reverse(d)) == d);
            CHECK(digon_collapse(d).is_oriented());
            CHECK(reverse(digon_collapse(d)).is_oriented());
        }
    }
    SUBCASE("induced subgraph arc counts match a direct filter") {
        for (uint64_t seed = 0; seed < 10; ++seed) {
            Digraph d = gnp(12, 0.5, seed);
            std::vector<int> s{0, 2, 3, 7, 11};
            auto [sub, vertex_of] = induced(d, s);
            CHECK(vertex_of == s);
            int direct = 0;
            for (int u : s)
                for (int v : s)
                    if (u != v && d.has_arc(u, v)) ++direct;
            CHECK(sub.arc_count() == direct);
        }
        Digraph d = gnp(6, 0.5, 1);
        CHECK(induced(d, {}).graph.order() == 0);
        std::vector<int> everything{0, 1, 2, 3, 4, 5};
        CHECK(induced(d, everything).graph == d);
        CHECK_THROWS_AS(induced(d, {0, 9}), std::out_of_range);
    }
}
