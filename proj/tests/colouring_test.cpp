#include "doctest.h"
#include "helpers.hpp"
#include "treeuniv/colouring.hpp"

using namespace treeuniv;
using testhelp::gnp;

TEST_CASE("chromatic number on small anchors") {
    CHECK(chromatic_number(Digraph(1)) == 1);

    Digraph cycle3(3);
    cycle3.add_arc(0, 1);
    cycle3.add_arc(1, 2);
    cycle3.add_arc(2, 0);
    CHECK(chromatic_number(cycle3) == 3);

    Digraph trans5(5);
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v) trans5.add_arc(u, v);
    CHECK(chromatic_number(trans5) == 5);

    // odd cycle vs even cycle of the underlying graph
    Digraph cycle4(4);
    for (int v = 0; v < 4; ++v) cycle4.add_arc(v, (v + 1) % 4);
    CHECK(chromatic_number(cycle4) == 2);
    Digraph cycle5(5);
    for (int v = 0; v < 5; ++v) cycle5.add_arc(v, (v + 1) % 5);
    CHECK(chromatic_number(cycle5) == 3);
}

TEST_CASE("witness colouring is proper and digons force inequality") {
    Digraph d = Digraph::from_arcs(4, {{0, 1}, {1, 0}, {1, 2}, {3, 1}});
    Colouring col = optimal_colouring(d);
    CHECK(col.proper(d));
    CHECK(col.num_colours == 2);
    CHECK(col.colour[0] != col.colour[1]);
}

TEST_CASE("errors: empty input and cap") {
    CHECK_THROWS_AS(chromatic_number(Digraph(0)), PreconditionError);
    ColouringOptions tight;
    tight.max_vertices = 4;
    CHECK_THROWS_AS(chromatic_number(gnp(5, 0.5, 1), tight), PreconditionError);
    ColouringOptions too_big;
    too_big.max_vertices = 100;
    CHECK_THROWS_AS(chromatic_number(gnp(5, 0.5, 1), too_big), std::invalid_argument);
}

TEST_CASE("digon collapse preserves the chromatic number") {
    for (uint64_t seed = 0; seed < 25; ++seed) {
        int n = 2 + static_cast<int>(seed % 13);
        Digraph d = gnp(n, 0.55, seed);
        Colouring col = optimal_colouring(d);
        CHECK(col.proper(d));
        CHECK(chromatic_number(digon_collapse(d)) == col.num_colours);
    }
}

TEST_CASE("solver agrees with exhaustive colour counting on tiny graphs") {
    // Oracle: smallest c such that some assignment in [0,c)^n is proper.
    auto brute_chi = [](const Digraph& d) {
        int n = d.order();
        for (int c = 1; c <= n; ++c) {
            std::vector<int> colour(n, 0);
            while (true) {
                bool ok = true;
                for (auto [u, v] : d.arcs())
                    if (colour[u] == colour[v]) ok = false;
                if (ok) return c;
                int pos = n - 1;
                while (pos >= 0 && colour[pos] == c - 1) colour[pos--] = 0;
                if (pos < 0) break;
                ++colour[pos];
            }
        }
        return d.order();
    };
    for (uint64_t seed = 0; seed < 30; ++seed) {
        int n = 2 + static_cast<int>(seed % 6);
        Digraph d = gnp(n, 0.5, 1000 + seed);
        CHECK(chromatic_number(d) == brute_chi(d));
    }
}

TEST_CASE("tournaments colour with exactly n colours") {
    for (int n : {1, 5, 17, 33, 55}) {
        Digraph t = testhelp::tournament(n, 42);
        CHECK(chromatic_number(t) == n);
    }
}
