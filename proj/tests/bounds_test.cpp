#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "treeuniv/bounds.hpp"

using namespace treeuniv;

TEST_CASE("bound anchors") {
    CHECK(evaluate_bound({.name = BoundName::bblock, .k = 10, .b = 2}) == 10);  // equals k
    CHECK(evaluate_bound({.name = BoundName::bblock, .k = 10, .b = 3}) == 17);
    CHECK(evaluate_bound({.name = BoundName::arbo, .k = 3}) == doctest::Approx(7.5).epsilon(1e-12));
    CHECK(evaluate_bound({.name = BoundName::burr, .k = 5}) == 8);
    CHECK(evaluate_bound({.name = BoundName::burr_quadratic, .k = 5}) == 16);
    CHECK(evaluate_bound({.name = BoundName::addario_general, .k = 5}) == 11);
    CHECK(evaluate_bound({.name = BoundName::glue_directed, .ell = 2, .c_prime = 3, .k_prime = 3}) == 7);
    CHECK(evaluate_bound({.name = BoundName::glue_oriented, .ell = 2, .c_prime = 3, .k_prime = 3}) == 8);
    CHECK(evaluate_bound({.name = BoundName::glue_leaves_once, .k = 4, .c = 2}) == 6);
    CHECK(evaluate_bound({.name = BoundName::glue_leaves_twice, .k = 4, .c = 2}) == 9);
    // b = 3 gives 2k - 3 across the board
    for (long long k = 4; k <= 12; ++k)
        CHECK(evaluate_bound({.name = BoundName::bblock, .k = k, .b = 3}) == 2 * k - 3);
}

TEST_CASE("interval evaluation brackets the value tightly") {
    for (long long k : {1, 2, 3, 7, 30, 1000, 999983}) {
        Interval f = evaluate_bound_interval({.name = BoundName::main, .k = k});
        Interval g = evaluate_bound_interval({.name = BoundName::arbo, .k = k});
        CHECK(f.lo <= f.hi);
        CHECK(g.lo <= g.hi);
        CHECK(f.hi - f.lo < 1e-9 * std::max(1.0, f.hi));
        double fk = 8 * std::sqrt(2.0 / 15.0) * k * std::sqrt(k) + 11.0 * k / 3 +
                    std::sqrt(5.0 / 6.0) * std::sqrt(k) + 1;
        CHECK(fk == doctest::Approx((f.lo + f.hi) / 2).epsilon(1e-9));
        double gk = std::sqrt(4.0 / 3.0) * k * std::sqrt(k) + k / 2.0;
        CHECK(gk == doctest::Approx((g.lo + g.hi) / 2).epsilon(1e-9));
    }
}

TEST_CASE("ceilings, including the exact-integer traps") {
    CHECK(bound_ceiling({.name = BoundName::bblock, .k = 10, .b = 3}) == 17);
    CHECK(bound_ceiling({.name = BoundName::arbo, .k = 3}) == 8);    // 7.5
    CHECK(bound_ceiling({.name = BoundName::arbo, .k = 12}) == 54);  // g(12) = 48 + 6 exactly
    CHECK(bound_ceiling({.name = BoundName::main, .k = 30}) == 596); // f(30) = 480+110+5+1 exactly
    CHECK(bound_ceiling({.name = BoundName::main, .k = 3}) == 29);
    CHECK(bound_ceiling({.name = BoundName::main, .k = 4}) == 41);
    CHECK(bound_ceiling({.name = BoundName::main, .k = 5}) == 55);
}

TEST_CASE("bound ordering and monotonicity") {
    for (long long k = 1; k <= 2000; ++k) {
        double f = evaluate_bound({.name = BoundName::main, .k = k});
        double g = evaluate_bound({.name = BoundName::arbo, .k = k});
        CHECK(f >= g);
        CHECK(g >= 2 * k - 2);
        if (k > 1) {
            CHECK(f > evaluate_bound({.name = BoundName::main, .k = k - 1}));
            CHECK(g > evaluate_bound({.name = BoundName::arbo, .k = k - 1}));
            CHECK(evaluate_bound({.name = BoundName::burr, .k = k}) >
                  evaluate_bound({.name = BoundName::burr, .k = k - 1}));
        }
    }
    CHECK(evaluate_bound({.name = BoundName::main, .k = 1}) >= 1);
    CHECK(evaluate_bound({.name = BoundName::main, .k = 2}) >= 2);
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(evaluate_bound({.name = BoundName::bblock, .k = 10, .b = 1}), std::invalid_argument);
    CHECK_THROWS_AS(evaluate_bound({.name = BoundName::arbo, .k = 0}), std::invalid_argument);
    CHECK_THROWS_AS(evaluate_bound({.name = BoundName::glue_directed, .k_prime = 1}), std::invalid_argument);
    CHECK(bound_name_from_string("main") == BoundName::main);
    CHECK_THROWS_AS(bound_name_from_string("nope"), std::invalid_argument);
}

TEST_CASE("inequality sweeps at desk scale") {
    SweepReport arbo = verify_inequality_arbo(3000);
    CHECK(arbo.all_passed());
    CHECK(arbo.checked == 2998);
    CHECK(arbo.min_margin > 0);

    MainSweepReport main_rep = verify_inequality_main(3000);
    CHECK(main_rep.displayed.all_passed());
    CHECK(main_rep.variant_4k9.all_passed());
    CHECK(main_rep.displayed.min_margin > 0);
    // the two readings are the same inequality
    CHECK(main_rep.displayed.min_margin ==
          doctest::Approx(main_rep.variant_4k9.min_margin).epsilon(1e-9));
}

TEST_CASE("recurrence chain") {
    SUBCASE("m = 1 returns c1") {
        RecurrenceResult r = recurrence_chain(3, 1, 11);
        CHECK(r.c_m == 11);
        CHECK(r.pass_general);
    }
    SUBCASE("worked example: l = 2, m = 3, c1 = 4") {
        RecurrenceResult r = recurrence_chain(2, 3, 4);
        // c2 = 4 + 3 + 2 = 9, c3 = 9 + 5 + 2 = 16
        CHECK(r.c_m == 16);
        CHECK(r.cap_general == 16);  // equality
        CHECK(r.pass_general);
        CHECK(r.closed_applicable);  // c1 = l(l+1)/2 + 1 = 4
        CHECK(r.cap_closed == 16);
        CHECK(r.pass_closed);
    }
    SUBCASE("sweep against f(k)") {
        SweepReport rep = recurrence_sweep_vs_main(2000);
        CHECK(rep.all_passed());
        CHECK(rep.min_margin > 0);
    }
    CHECK_THROWS_AS(recurrence_chain(0, 1, 1), std::invalid_argument);
}

TEST_CASE("b-block chain inequalities") {
    ChainBBlockReport rep = verify_chain_bblock(10, 200);
    CHECK(rep.all_passed());
    CHECK(rep.checked > 0);
    CHECK_THROWS_AS(verify_chain_bblock(2, 100), std::invalid_argument);
    // boundary l = k - 3 in isolation
    ChainBBlockReport edge = verify_chain_bblock(3, 4);
    CHECK(edge.all_passed());
    CHECK(edge.checked == 1);  // b=3, k=4, l=1
}
