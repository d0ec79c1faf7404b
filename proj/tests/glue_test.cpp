#include "doctest.h"
#include "helpers.hpp"
#include "treeuniv/embed.hpp"

using namespace treeuniv;
using testhelp::directed_path_tree;
using testhelp::out_star;
using testhelp::tournament;

namespace {

Embedder single_vertex() {
    Embedder e{OrientedTree(1, {}), 1, {}};
    e.run = [](const Digraph& host) {
        if (host.order() == 0) throw EmbedFailure("empty host");
        Embedding emb;
        emb.map = {0};
        return emb;
    };
    return e;
}

Embedder gallai_roy_embedder(int k) {
    Embedder e{directed_path_tree(k), k, {}};
    e.run = [k](const Digraph& host) { return gallai_roy_path(host, k); };
    return e;
}

Embedder oracle_embedder(const OrientedTree& t, long long threshold) {
    Embedder e{t, threshold, {}};
    e.run = [t](const Digraph& host) {
        BruteForceOptions opt;
        opt.max_host = 64;
        auto found = brute_force_embed(host, t, std::nullopt, opt);
        if (!found) throw EmbedFailure("oracle embedder: no copy");
        return *found;
    };
    return e;
}

}  // namespace

TEST_CASE("directed glue: a single appended arc") {
    // T' a single vertex, l = 1: stated threshold c'+k'+2l-3 = 1, +1 slack.
    for (uint64_t seed = 0; seed < 10; ++seed) {
        Digraph host = testhelp::gnp(8, 0.5, seed);
        if (chromatic_number(host) < 2) continue;
        GlueOptions opt;
        opt.known_chi = chromatic_number(host);
        Embedding e = glue_directed_path(host, single_vertex(), 0, 1, PathEnd::source, opt);
        OrientedTree combined = append_directed_path(OrientedTree(1, {}), 0, 1, PathEnd::source);
        CHECK(e.valid(combined, host));
    }
}

TEST_CASE("directed glue onto a directed path, both ends") {
    OrientedTree p3 = directed_path_tree(3);
    // conservative threshold: 3 + 3 + 2*2 - 3 + 1 = 8
    int found = 0;
    for (uint64_t seed = 0; found < 12 && seed < 60; ++seed) {
        Digraph host = seed % 2 ? tournament(8 + seed % 4, seed)
                                : testhelp::gnp(17, 0.8, seed);
        int chi = chromatic_number(host);
        if (chi < 8) continue;
        ++found;
        GlueOptions opt;
        opt.known_chi = chi;
        for (PathEnd end : {PathEnd::source, PathEnd::sink}) {
            for (int attach = 0; attach < 3; ++attach) {
                Embedding e = glue_directed_path(host, gallai_roy_embedder(3), attach, 2, end, opt);
                CHECK(e.valid(append_directed_path(p3, attach, 2, end), host));
            }
        }
    }
    CHECK(found == 12);
}

TEST_CASE("directed glue threshold checks") {
    Digraph host = tournament(7, 1);  // chi = 7
    GlueOptions opt;
    opt.known_chi = 7;
    // conservative threshold 8: rejected
    CHECK_THROWS_AS(glue_directed_path(host, gallai_roy_embedder(3), 0, 2, PathEnd::source, opt),
                    PreconditionError);
    // at the paper threshold (slack 0) the attempt proceeds
    GlueOptions paper = opt;
    paper.slack = 0;
    Embedding e = glue_directed_path(host, gallai_roy_embedder(3), 0, 2, PathEnd::source, paper);
    CHECK(e.valid(append_directed_path(directed_path_tree(3), 0, 2, PathEnd::source), host));
    CHECK_THROWS_AS(glue_directed_path(host, gallai_roy_embedder(3), 0, 0, PathEnd::source, opt),
                    std::invalid_argument);
}

TEST_CASE("oriented glue: length 1 reduces to appending a leaf at c'+k'") {
    OrientedTree p3 = directed_path_tree(3);
    RootedOrientedPath leaf_in = RootedOrientedPath::from_shape({false});
    int found = 0;
    for (uint64_t seed = 0; found < 8 && seed < 60; ++seed) {
        Digraph host = testhelp::gnp(14, 0.7, seed + 10);
        int chi = chromatic_number(host);
        if (chi < 6) continue;  // c' + k' = 3 + 3
        ++found;
        GlueOptions opt;
        opt.known_chi = chi;
        Embedding e = glue_oriented_path(host, gallai_roy_embedder(3), 1, leaf_in, opt);
        CHECK(e.valid(append_path(p3, 1, leaf_in), host));
    }
    CHECK(found == 8);
}

TEST_CASE("oriented glue: 2-block path of length 2 onto a directed path") {
    OrientedTree p3 = directed_path_tree(3);
    RootedOrientedPath q = RootedOrientedPath::from_shape({true, false});
    // threshold 3 + 3 + 3 - 1 = 8
    int found = 0;
    for (uint64_t seed = 0; found < 10 && seed < 80; ++seed) {
        Digraph host = seed % 2 ? tournament(8 + seed % 5, seed)
                                : testhelp::gnp(18, 0.8, seed + 50);
        int chi = chromatic_number(host);
        if (chi < 8) continue;
        ++found;
        GlueOptions opt;
        opt.known_chi = chi;
        for (int attach = 0; attach < 3; ++attach) {
            Embedding e = glue_oriented_path(host, gallai_roy_embedder(3), attach, q, opt);
            OrientedTree combined = append_path(p3, attach, q);
            CHECK(e.valid(combined, host));
            // the appended copy meets the subtree copy only at the attach image
            std::vector<char> sub_used(host.order(), 0);
            for (int v = 0; v < 3; ++v) sub_used[e.map[v]] = 1;
            for (int v = 3; v < combined.order(); ++v) CHECK(!sub_used[e.map[v]]);
        }
    }
    CHECK(found == 10);
}

TEST_CASE("leaf gluing fallback") {
    SUBCASE("S_3^+ from its centre in a strong tournament of order 4") {
        Digraph host = tournament(4, 2);
        GlueOptions opt;
        opt.known_chi = 4;
        Embedding e = glue_leaves_fallback(host, single_vertex(), out_star(3), LeafMode::out, opt);
        CHECK(e.valid(out_star(3), host));
    }
    SUBCASE("path of order 4 with both ends out-leaves, from its middle arc") {
        // 0 <- 1 <- 2 -> 3: stripping out-leaves {0, 3} leaves arc 2 -> 1.
        OrientedTree t(4, {{1, 0}, {2, 1}, {2, 3}});
        auto stripped = strip_leaves(t, LeafMode::out);
        REQUIRE(stripped.tree.order() == 2);
        Embedder sub = oracle_embedder(stripped.tree, 2);
        int found = 0;
        for (uint64_t seed = 0; found < 10 && seed < 50; ++seed) {
            Digraph host = testhelp::gnp(12, 0.6, seed);
            int chi = chromatic_number(host);
            if (chi < 2 + 2 * 4 - 4) continue;
            ++found;
            GlueOptions opt;
            opt.known_chi = chi;
            Embedding e = glue_leaves_fallback(host, sub, t, LeafMode::out, opt);
            CHECK(e.valid(t, host));
        }
        CHECK(found == 10);
    }
    SUBCASE("regular tournament of order 2k-3 defeats the star, loudly") {
        for (int k : {4, 5}) {
            Digraph host = generate({FamilyKind::regular_tournament, 2 * k - 3, 0.0, 0, {}});
            std::vector<std::string> events;
            GlueOptions opt;
            opt.known_chi = 2 * k - 3;  // meets c + 2k - 4 with c = 1
            opt.on_event = [&](const std::string& msg) { events.push_back(msg); };
            CHECK_THROWS_AS(
                glue_leaves_fallback(host, single_vertex(), out_star(k), LeafMode::out, opt),
                EmbedFailure);
            REQUIRE(!events.empty());
            CHECK(events.back().find("conjecture-relevant") != std::string::npos);
        }
    }
    SUBCASE("tree mismatch between sub and strip is rejected") {
        Digraph host = tournament(6, 3);
        GlueOptions opt;
        opt.known_chi = 6;
        CHECK_THROWS_AS(
            glue_leaves_fallback(host, gallai_roy_embedder(2), out_star(4), LeafMode::out, opt),
            std::invalid_argument);
    }
}

TEST_CASE("glue results always validate or fail loudly, never silently corrupt") {
    // Hosts straddling the paper threshold: every non-throwing return is valid.
    OrientedTree p2 = directed_path_tree(2);
    for (uint64_t seed = 0; seed < 30; ++seed) {
        Digraph host = testhelp::gnp(10, 0.55, seed + 900);
        GlueOptions opt;
        opt.check_chromatic = false;
        try {
            Embedding e = glue_directed_path(host, gallai_roy_embedder(2), 1, 2, PathEnd::source, opt);
            CHECK(e.valid(append_directed_path(p2, 1, 2, PathEnd::source), host));
        } catch (const EmbedFailure&) {
        }
        try {
            RootedOrientedPath q = RootedOrientedPath::from_shape({false, true});
            Embedding e = glue_oriented_path(host, gallai_roy_embedder(2), 0, q, opt);
            CHECK(e.valid(append_path(p2, 0, q), host));
        } catch (const EmbedFailure&) {
        }
    }
}
