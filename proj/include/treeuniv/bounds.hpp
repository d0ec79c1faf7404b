#pragma once

#include <string>
#include <vector>

namespace treeuniv {

enum class BoundName {
    burr,              // 2k - 2
    burr_quadratic,    // (k-1)^2
    addario_general,   // k^2/2 - k/2 + 1
    bblock,            // (b-1)(k-3) + 3
    arbo,              // g(k) = sqrt(4/3) k sqrt(k) + k/2
    main,              // f(k) = 8 sqrt(2/15) k sqrt(k) + 11k/3 + sqrt(5/6) sqrt(k) + 1
    glue_directed,     // c' + k' + 2l - 3
    glue_oriented,     // c' + k' + l(l+1)/2 - 1
    glue_leaves_once,  // c + 2k - 4
    glue_leaves_twice, // c + 4k - 9
};

std::string to_string(BoundName name);
BoundName bound_name_from_string(const std::string& s);

struct BoundSpec {
    BoundName name = BoundName::burr;
    long long k = 0;
    long long b = 0;
    long long ell = 0;
    long long c = 0;
    long long c_prime = 0;
    long long k_prime = 0;
};

struct Interval {
    double lo = 0;
    double hi = 0;
};

/// Bound value. Polynomial bounds are exact; the irrational ones are
/// evaluated in 128-bit MPFR arithmetic and rounded once at the end.
double evaluate_bound(const BoundSpec& spec);

/// Certified enclosure (outward-rounded) of the bound value.
Interval evaluate_bound_interval(const BoundSpec& spec);

/// Smallest integer >= the bound. Near-integer cases of f and g are
/// settled by exact integer-square reasoning, not by rounding.
long long bound_ceiling(const BoundSpec& spec);

struct SweepReport {
    long long k_min = 0;
    long long k_max = 0;
    long long checked = 0;
    std::vector<long long> failures;
    double min_margin = 0;  // smallest certified margin across the sweep
    long long argmin_k = 0;

    bool all_passed() const { return failures.empty(); }
};

/// g(k) >= g(k - sqrt(4k/3)) + 2k - 4 for k in [3, k_max]; a pass needs the
/// whole lower interval of the left side above the right side.
SweepReport verify_inequality_arbo(long long k_max);

struct MainSweepReport {
    SweepReport displayed;    // f(k) >= f-terms(k - sqrt(5k/6)) + 4k - 8
    SweepReport variant_4k9;  // f(k) >= f(k - sqrt(5k/6)) + 4k - 9
};

/// Both readings of the main-theorem inequality. They coincide: the
/// displayed +4k-8 absorbs the formula's trailing +1.
MainSweepReport verify_inequality_main(long long k_max);

struct RecurrenceResult {
    double c_m = 0;
    double cap_general = 0;  // c1 + l(m-1)(l+m+1)/2
    bool pass_general = false;
    double cap_closed = 0;  // lm(l+m)/2 + 1
    bool closed_applicable = false;  // requires c1 = l(l+1)/2 + 1
    bool pass_closed = false;
};

/// Iterates c_{i+1} = c_i + k_i + l(l+1)/2 - 1 with k_i = i*l + 1 and
/// checks the two closed-form caps (non-strict).
RecurrenceResult recurrence_chain(long long ell, long long m, double c1);

/// With l = ceil(sqrt(6k/5)), m = floor(2 sqrt(5k/6)) and
/// c1 = l(l+1)/2 + 1, checks c_m <= f(k) for k in [3, k_max].
SweepReport recurrence_sweep_vs_main(long long k_max);

struct ChainBBlockReport {
    long long checked = 0;
    std::vector<std::string> failures;

    bool all_passed() const { return failures.empty(); }
};

/// The two displayed inequalities of the b-block induction step, for all
/// b in [3, b_max], k in [4, k_max], l in [1, k-3]. Exact integers.
ChainBBlockReport verify_chain_bblock(long long b_max, long long k_max);

}  // namespace treeuniv
