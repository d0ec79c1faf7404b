#include "doctest.h"
#include "helpers.hpp"
#include "treeuniv/bounds.hpp"
#include "treeuniv/embed.hpp"

using namespace treeuniv;
using testhelp::directed_path_tree;
using testhelp::out_star;
using testhelp::tournament;

namespace {

PipelineOptions with_chi(int chi) {
    PipelineOptions opt;
    opt.known_chi = chi;
    opt.glue.brute.max_host = 64;
    return opt;
}

}  // namespace

TEST_CASE("b-block paths") {
    SUBCASE("two blocks, order 4, all small tournaments") {
        RootedOrientedPath p = RootedOrientedPath::from_shape({true, true, false});
        for (uint64_t seed = 0; seed < 8; ++seed) {
            Digraph host = tournament(4 + static_cast<int>(seed % 3), seed);
            Embedding e = embed_bblock_path(host, p, with_chi(host.order()));
            CHECK(e.valid(p.to_pattern_tree(), host));
        }
    }
    SUBCASE("three blocks, k = 5, threshold 2k-3 = 7") {
        RootedOrientedPath p = RootedOrientedPath::from_shape({true, false, false, true});
        REQUIRE(p.block_count() == 3);
        int found = 0;
        for (uint64_t seed = 0; found < 10 && seed < 80; ++seed) {
            Digraph host = seed % 2 ? tournament(7 + static_cast<int>(seed % 6), seed)
                                    : testhelp::gnp(16, 0.75, seed);
            int chi = chromatic_number(host);
            if (chi < 7) continue;
            ++found;
            Embedding e = embed_bblock_path(host, p, with_chi(chi));
            CHECK(e.valid(p.to_pattern_tree(), host));
        }
        CHECK(found == 10);
    }
    SUBCASE("preconditions") {
        RootedOrientedPath directed = RootedOrientedPath::directed(3);
        CHECK_THROWS_AS(embed_bblock_path(tournament(9, 1), directed, {}), PreconditionError);
        RootedOrientedPath p = RootedOrientedPath::from_shape({true, false, false, true});
        CHECK_THROWS_AS(embed_bblock_path(tournament(5, 1), p, {}), PreconditionError);  // chi 5 < 7
    }
}

TEST_CASE("arborescences") {
    SUBCASE("directed path reduces to the potential construction") {
        OrientedTree p4 = directed_path_tree(4);
        long long need = bound_ceiling({.name = BoundName::arbo, .k = 4});
        Digraph host = tournament(static_cast<int>(need), 5);
        PipelineTrace trace;
        PipelineOptions opt = with_chi(host.order());
        opt.trace = &trace;
        Embedding e = embed_arborescence(host, p4, opt);
        CHECK(e.valid(p4, host));
        CHECK(trace.branch == "path-gluing");
    }
    SUBCASE("out-star short-circuits") {
        OrientedTree star = out_star(5);
        long long need = bound_ceiling({.name = BoundName::arbo, .k = 5});
        Digraph host = tournament(static_cast<int>(need), 6);
        PipelineTrace trace;
        PipelineOptions opt = with_chi(host.order());
        opt.trace = &trace;
        Embedding e = embed_arborescence(host, star, opt);
        CHECK(e.valid(star, host));
        CHECK(trace.branch == "star");
    }
    SUBCASE("out-spider with three legs of length two (k = 7)") {
        OrientedTree spider(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
        REQUIRE(classify_arborescence(spider).has_value());
        long long need = bound_ceiling({.name = BoundName::arbo, .k = 7});  // g(7) ~ 24.9
        Digraph host = tournament(static_cast<int>(need), 7);
        Embedding e = embed_arborescence(host, spider, with_chi(host.order()));
        CHECK(e.valid(spider, host));
    }
    SUBCASE("in-arborescences mirror") {
        OrientedTree in_spider(5, {{1, 0}, {2, 1}, {3, 0}, {4, 3}});
        long long need = bound_ceiling({.name = BoundName::arbo, .k = 5});
        Digraph host = tournament(static_cast<int>(need), 8);
        Embedding e = embed_arborescence(host, in_spider, with_chi(host.order()));
        CHECK(e.valid(in_spider, host));
    }
    SUBCASE("every arborescence of order <= 5 on tournament hosts") {
        for (int k = 1; k <= 5; ++k) {
            long long need = bound_ceiling({.name = BoundName::arbo, .k = k});
            Digraph host = tournament(static_cast<int>(need), 40 + k);
            for (const auto& t : enumerate_oriented_trees(k)) {
                if (!classify_arborescence(t)) continue;
                Embedding e = embed_arborescence(host, t, with_chi(host.order()));
                CHECK(e.valid(t, host));
            }
        }
    }
    SUBCASE("non-arborescence and low chi are rejected") {
        OrientedTree zigzag(4, {{0, 1}, {2, 1}, {2, 3}});
        CHECK_THROWS_AS(embed_arborescence(tournament(13, 1), zigzag, {}), PreconditionError);
        CHECK_THROWS_AS(embed_arborescence(tournament(3, 1), directed_path_tree(4), {}),
                        PreconditionError);
    }
}

TEST_CASE("general oriented trees") {
    SUBCASE("all trees of order <= 4 on tournaments at ceil(f(k))") {
        for (int k = 1; k <= 4; ++k) {
            long long need = bound_ceiling({.name = BoundName::main, .k = k});
            Digraph host = tournament(static_cast<int>(need), 90 + k);
            for (const auto& t : enumerate_oriented_trees(k)) {
                Embedding e = embed_oriented_tree(host, t, with_chi(host.order()));
                CHECK(e.valid(t, host));
            }
        }
    }
    SUBCASE("order 5: every tree, plus the chunked-path branch trace") {
        long long need = bound_ceiling({.name = BoundName::main, .k = 5});  // f(5) ~ 54.03
        Digraph host = tournament(static_cast<int>(need), 123);
        for (const auto& t : enumerate_oriented_trees(5)) {
            PipelineTrace trace;
            PipelineOptions opt = with_chi(host.order());
            opt.trace = &trace;
            Embedding e = embed_oriented_tree(host, t, opt);
            CHECK(e.valid(t, host));
            if (trace.branch == "path-gluing" && !trace.c.empty()) {
                // tracked recurrence: c_{i+1} = c_i + k_i + l(l+1)/2 - 1
                long long step = trace.ell * (trace.ell + 1) / 2 - 1;
                for (size_t i = 0; i + 1 < trace.c.size(); ++i)
                    CHECK(trace.c[i + 1] == trace.c[i] + trace.k[i] + step);
                CHECK(static_cast<double>(trace.c.back()) <=
                      evaluate_bound_interval({.name = BoundName::main, .k = 5}).lo);
            }
        }
    }
    SUBCASE("an oriented path of order 5 takes the path-gluing branch") {
        OrientedTree zig(5, {{0, 1}, {2, 1}, {2, 3}, {4, 3}});
        long long need = bound_ceiling({.name = BoundName::main, .k = 5});
        Digraph host = tournament(static_cast<int>(need), 321);
        PipelineTrace trace;
        PipelineOptions opt = with_chi(host.order());
        opt.trace = &trace;
        Embedding e = embed_oriented_tree(host, zig, opt);
        CHECK(e.valid(zig, host));
        CHECK(trace.branch == "path-gluing");
        CHECK(trace.ell == 3);  // ceil(sqrt(30/5)) with 5l^2 >= 6k
    }
    SUBCASE("oracle dominance on every success") {
        long long need = bound_ceiling({.name = BoundName::main, .k = 4});
        Digraph host = tournament(static_cast<int>(need), 77);
        BruteForceOptions oracle;
        oracle.max_host = 64;
        for (const auto& t : enumerate_oriented_trees(4)) {
            Embedding e = embed_oriented_tree(host, t, with_chi(host.order()));
            CHECK(e.valid(t, host));
            CHECK(brute_force_embed(host, t, std::nullopt, oracle).has_value());
        }
    }
    SUBCASE("monotone consistency: dominated supergraph still embeds") {
        OrientedTree t(4, {{0, 1}, {2, 1}, {2, 3}});
        long long need = bound_ceiling({.name = BoundName::main, .k = 4});
        Digraph host = tournament(static_cast<int>(need), 15);
        Digraph bigger(host.order() + 1);
        for (auto [u, v] : host.arcs()) bigger.add_arc(u, v);
        bigger.add_arc(0, host.order());
        bigger.add_arc(host.order(), 0);
        Embedding e = embed_oriented_tree(bigger, t, with_chi(host.order()));
        CHECK(e.valid(t, bigger));
    }
    SUBCASE("chromatic precondition is enforced") {
        OrientedTree t(4, {{0, 1}, {2, 1}, {2, 3}});
        CHECK_THROWS_AS(embed_oriented_tree(tournament(10, 2), t, {}), PreconditionError);
    }
}
