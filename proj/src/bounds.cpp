#include "treeuniv/bounds.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace treeuniv {

namespace {

constexpr mpfr_prec_t kPrec = 128;

// Small outward-rounded interval on top of MPFR. Only what the bound
// formulas need: +, -, *, sqrt, x^{3/2} on non-negative arguments.
class MpI {
public:
    MpI() {
        mpfr_init2(lo_, kPrec);
        mpfr_init2(hi_, kPrec);
        mpfr_set_zero(lo_, 1);
        mpfr_set_zero(hi_, 1);
    }
    MpI(const MpI& o) : MpI() {
        mpfr_set(lo_, o.lo_, MPFR_RNDD);
        mpfr_set(hi_, o.hi_, MPFR_RNDU);
    }
    MpI& operator=(const MpI& o) {
        mpfr_set(lo_, o.lo_, MPFR_RNDD);
        mpfr_set(hi_, o.hi_, MPFR_RNDU);
        return *this;
    }
    ~MpI() {
        mpfr_clear(lo_);
        mpfr_clear(hi_);
    }

    static MpI integer(long long v) {
        MpI r;
        mpfr_set_si(r.lo_, v, MPFR_RNDD);
        mpfr_set_si(r.hi_, v, MPFR_RNDU);
        return r;
    }
    static MpI ratio(long long num, long long den) {
        MpI r;
        mpfr_set_si(r.lo_, num, MPFR_RNDD);
        mpfr_div_si(r.lo_, r.lo_, den, MPFR_RNDD);
        mpfr_set_si(r.hi_, num, MPFR_RNDU);
        mpfr_div_si(r.hi_, r.hi_, den, MPFR_RNDU);
        return r;
    }
    static MpI sqrt_ratio(long long num, long long den) { return ratio(num, den).sqrt(); }

    MpI operator+(const MpI& o) const {
        MpI r;
        mpfr_add(r.lo_, lo_, o.lo_, MPFR_RNDD);
        mpfr_add(r.hi_, hi_, o.hi_, MPFR_RNDU);
        return r;
    }
    MpI operator-(const MpI& o) const {
        MpI r;
        mpfr_sub(r.lo_, lo_, o.hi_, MPFR_RNDD);
        mpfr_sub(r.hi_, hi_, o.lo_, MPFR_RNDU);
        return r;
    }
    MpI operator*(const MpI& o) const {
        // Sign-correct: min/max over the four endpoint products.
        MpI r;
        mpfr_t t;
        mpfr_init2(t, kPrec);
        bool first = true;
        for (int i = 0; i < 4; ++i) {
            const mpfr_t& a = (i & 1) ? hi_ : lo_;
            const mpfr_t& b = (i & 2) ? o.hi_ : o.lo_;
            mpfr_mul(t, a, b, MPFR_RNDD);
            if (first || mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
            mpfr_mul(t, a, b, MPFR_RNDU);
            if (first || mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
            first = false;
        }
        mpfr_clear(t);
        return r;
    }
    MpI sqrt() const {
        if (mpfr_sgn(lo_) < 0) throw std::domain_error("interval sqrt of a negative value");
        MpI r;
        mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
        mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
        return r;
    }
    MpI pow32() const { return *this * this->sqrt(); }

    bool strictly_above(const MpI& o) const { return mpfr_cmp(lo_, o.hi_) > 0; }
    bool at_least(const MpI& o) const { return mpfr_cmp(lo_, o.hi_) >= 0; }
    /// Certified lower estimate of (this - o), as a double.
    double margin_over(const MpI& o) const {
        mpfr_t t;
        mpfr_init2(t, kPrec);
        mpfr_sub(t, lo_, o.hi_, MPFR_RNDD);
        double m = mpfr_get_d(t, MPFR_RNDD);
        mpfr_clear(t);
        return m;
    }
    double lo_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
    double hi_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }
    double mid_double() const {
        mpfr_t t;
        mpfr_init2(t, kPrec);
        mpfr_add(t, lo_, hi_, MPFR_RNDN);
        mpfr_div_ui(t, t, 2, MPFR_RNDN);
        double m = mpfr_get_d(t, MPFR_RNDN);
        mpfr_clear(t);
        return m;
    }
    long long floor_ll() const { return static_cast<long long>(std::floor(lo_double())); }

    long long ceil_lo() const {
        mpfr_t t;
        mpfr_init2(t, kPrec);
        mpfr_ceil(t, lo_);
        long long v = mpfr_get_si(t, MPFR_RNDN);
        mpfr_clear(t);
        return v;
    }
    long long ceil_hi() const {
        mpfr_t t;
        mpfr_init2(t, kPrec);
        mpfr_ceil(t, hi_);
        long long v = mpfr_get_si(t, MPFR_RNDN);
        mpfr_clear(t);
        return v;
    }

private:
    mpfr_t lo_, hi_;
};

// g(x) = sqrt(4/3) x^{3/2} + x/2
MpI g_interval(const MpI& x) {
    return MpI::sqrt_ratio(4, 3) * x.pow32() + MpI::ratio(1, 2) * x;
}

// f(x) without the trailing +1 (the displayed right side of the main
// inequality carries the +1 inside its constant term).
MpI f_terms_interval(const MpI& x) {
    return MpI::sqrt_ratio(128, 15) * x.pow32() + MpI::ratio(11, 3) * x +
           MpI::sqrt_ratio(5, 6) * x.sqrt();
}

MpI f_interval(const MpI& x) { return f_terms_interval(x) + MpI::integer(1); }

using i128 = __int128;

i128 isqrt128(i128 v) {
    if (v < 0) throw std::domain_error("isqrt of negative");
    i128 r = static_cast<i128>(std::sqrt(static_cast<double>(v)));
    while (r > 0 && r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

long long exact_polynomial(const BoundSpec& s) {
    switch (s.name) {
        case BoundName::burr: return 2 * s.k - 2;
        case BoundName::burr_quadratic: return (s.k - 1) * (s.k - 1);
        case BoundName::addario_general: return s.k * (s.k - 1) / 2 + 1;
        case BoundName::bblock: return (s.b - 1) * (s.k - 3) + 3;
        case BoundName::glue_directed: return s.c_prime + s.k_prime + 2 * s.ell - 3;
        case BoundName::glue_oriented: return s.c_prime + s.k_prime + s.ell * (s.ell + 1) / 2 - 1;
        case BoundName::glue_leaves_once: return s.c + 2 * s.k - 4;
        case BoundName::glue_leaves_twice: return s.c + 4 * s.k - 9;
        default: throw std::logic_error("not a polynomial bound");
    }
}

void check_spec(const BoundSpec& s) {
    auto need_k = [&](long long min_k) {
        if (s.k < min_k)
            throw std::invalid_argument("bound '" + to_string(s.name) + "' needs k >= " +
                                        std::to_string(min_k));
    };
    switch (s.name) {
        case BoundName::bblock:
            if (s.b < 2) throw std::invalid_argument("bblock bound needs b >= 2");
            need_k(1);
            break;
        case BoundName::glue_directed:
        case BoundName::glue_oriented:
            if (s.ell < 1 || s.k_prime < 1 || s.c_prime < 1)
                throw std::invalid_argument("glue bound needs ell, k', c' >= 1");
            break;
        case BoundName::glue_leaves_once:
        case BoundName::glue_leaves_twice:
            if (s.c < 1) throw std::invalid_argument("leaf-glue bound needs c >= 1");
            need_k(3);
            break;
        default: need_k(1);
    }
}

}  // namespace

std::string to_string(BoundName name) {
    switch (name) {
        case BoundName::burr: return "burr";
        case BoundName::burr_quadratic: return "burr_quadratic";
        case BoundName::addario_general: return "addario_general";
        case BoundName::bblock: return "bblock";
        case BoundName::arbo: return "arbo";
        case BoundName::main: return "main";
        case BoundName::glue_directed: return "glue_directed";
        case BoundName::glue_oriented: return "glue_oriented";
        case BoundName::glue_leaves_once: return "glue_leaves_once";
        case BoundName::glue_leaves_twice: return "glue_leaves_twice";
    }
    return "?";
}

BoundName bound_name_from_string(const std::string& s) {
    static const std::map<std::string, BoundName> table = {
        {"burr", BoundName::burr},
        {"burr_quadratic", BoundName::burr_quadratic},
        {"addario_general", BoundName::addario_general},
        {"bblock", BoundName::bblock},
        {"arbo", BoundName::arbo},
        {"main", BoundName::main},
        {"glue_directed", BoundName::glue_directed},
        {"glue_oriented", BoundName::glue_oriented},
        {"glue_leaves_once", BoundName::glue_leaves_once},
        {"glue_leaves_twice", BoundName::glue_leaves_twice},
    };
    auto it = table.find(s);
    if (it == table.end()) throw std::invalid_argument("unknown bound name '" + s + "'");
    return it->second;
}

Interval evaluate_bound_interval(const BoundSpec& s) {
    check_spec(s);
    if (s.name == BoundName::arbo) {
        MpI v = g_interval(MpI::integer(s.k));
        return {v.lo_double(), v.hi_double()};
    }
    if (s.name == BoundName::main) {
        MpI v = f_interval(MpI::integer(s.k));
        return {v.lo_double(), v.hi_double()};
    }
    double v = static_cast<double>(exact_polynomial(s));
    return {v, v};
}

double evaluate_bound(const BoundSpec& s) {
    check_spec(s);
    if (s.name == BoundName::arbo) return g_interval(MpI::integer(s.k)).mid_double();
    if (s.name == BoundName::main) return f_interval(MpI::integer(s.k)).mid_double();
    return static_cast<double>(exact_polynomial(s));
}

long long bound_ceiling(const BoundSpec& s) {
    check_spec(s);
    if (s.name != BoundName::arbo && s.name != BoundName::main) return exact_polynomial(s);
    MpI v = s.name == BoundName::arbo ? g_interval(MpI::integer(s.k))
                                      : f_interval(MpI::integer(s.k));
    long long clo = v.ceil_lo(), chi = v.ceil_hi();
    if (clo == chi) return clo;
    // The enclosure straddles the integer ceil(lo); that only happens when
    // the value is that integer. Certify with exact integer-square identities.
    long long t = clo;
    i128 k = s.k;
    if (s.name == BoundName::arbo) {
        // g(k) = sqrt(12k^3)/3 + k/2  ->  integer iff 12k^3 is a square and
        // 2*sqrt(12k^3) + 3k = 6t.
        i128 sq = 12 * k * k * k;
        i128 r = isqrt128(sq);
        if (r * r == sq && 2 * r + 3 * k == static_cast<i128>(6) * t) return t;
    } else {
        // f(k) = sqrt(1920k^3)/15 + 11k/3 + sqrt(30k)/6 + 1 -> integer iff
        // both radicands are squares and 2a + 110k + 5b + 30 = 30t.
        i128 sq_a = 1920 * k * k * k, sq_b = 30 * k;
        i128 a = isqrt128(sq_a), b = isqrt128(sq_b);
        if (a * a == sq_a && b * b == sq_b &&
            2 * a + 110 * k + 5 * b + 30 == static_cast<i128>(30) * t)
            return t;
    }
    throw std::logic_error("bound_ceiling: ambiguous enclosure for a non-integer value");
}

SweepReport verify_inequality_arbo(long long k_max) {
    if (k_max < 3) throw std::invalid_argument("verify_inequality_arbo: k_max >= 3 required");
    SweepReport rep;
    rep.k_min = 3;
    rep.k_max = k_max;
    bool first = true;
    for (long long k = 3; k <= k_max; ++k) {
        MpI ik = MpI::integer(k);
        MpI t = ik - (MpI::integer(4) * ik * MpI::ratio(1, 3)).sqrt();
        MpI lhs = g_interval(ik);
        MpI rhs = g_interval(t) + MpI::integer(2 * k - 4);
        double margin = lhs.margin_over(rhs);
        if (!lhs.strictly_above(rhs)) rep.failures.push_back(k);
        if (first || margin < rep.min_margin) {
            rep.min_margin = margin;
            rep.argmin_k = k;
            first = false;
        }
        ++rep.checked;
    }
    return rep;
}

MainSweepReport verify_inequality_main(long long k_max) {
    if (k_max < 3) throw std::invalid_argument("verify_inequality_main: k_max >= 3 required");
    MainSweepReport rep;
    rep.displayed.k_min = rep.variant_4k9.k_min = 3;
    rep.displayed.k_max = rep.variant_4k9.k_max = k_max;
    bool first = true;
    for (long long k = 3; k <= k_max; ++k) {
        MpI ik = MpI::integer(k);
        MpI t = ik - (MpI::integer(5) * ik * MpI::ratio(1, 6)).sqrt();
        MpI lhs = f_interval(ik);
        MpI rhs_displayed = f_terms_interval(t) + MpI::integer(4 * k - 8);
        MpI rhs_variant = f_interval(t) + MpI::integer(4 * k - 9);
        double md = lhs.margin_over(rhs_displayed);
        double mv = lhs.margin_over(rhs_variant);
        if (!lhs.strictly_above(rhs_displayed)) rep.displayed.failures.push_back(k);
        if (!lhs.strictly_above(rhs_variant)) rep.variant_4k9.failures.push_back(k);
        if (first || md < rep.displayed.min_margin) {
            rep.displayed.min_margin = md;
            rep.displayed.argmin_k = k;
        }
        if (first || mv < rep.variant_4k9.min_margin) {
            rep.variant_4k9.min_margin = mv;
            rep.variant_4k9.argmin_k = k;
        }
        first = false;
        ++rep.displayed.checked;
        ++rep.variant_4k9.checked;
    }
    return rep;
}

RecurrenceResult recurrence_chain(long long ell, long long m, double c1) {
    if (ell < 1 || m < 1) throw std::invalid_argument("recurrence_chain: ell, m >= 1 required");
    RecurrenceResult res;
    const double step_const = static_cast<double>(ell) * (ell + 1) / 2 - 1;
    double c = c1;
    for (long long i = 1; i < m; ++i) {
        double k_i = static_cast<double>(i) * ell + 1;
        c = c + k_i + step_const;
    }
    res.c_m = c;
    res.cap_general = c1 + 0.5 * static_cast<double>(ell) * (m - 1) * (ell + m + 1);
    res.pass_general = res.c_m <= res.cap_general;
    res.cap_closed = 0.5 * static_cast<double>(ell) * m * (ell + m) + 1;
    res.closed_applicable = c1 == static_cast<double>(ell) * (ell + 1) / 2 + 1;
    res.pass_closed = !res.closed_applicable || res.c_m <= res.cap_closed;
    return res;
}

SweepReport recurrence_sweep_vs_main(long long k_max) {
    if (k_max < 3) throw std::invalid_argument("recurrence_sweep_vs_main: k_max >= 3 required");
    SweepReport rep;
    rep.k_min = 3;
    rep.k_max = k_max;
    bool first = true;
    for (long long k = 3; k <= k_max; ++k) {
        long long ell = 1;
        while (5 * ell * ell < 6 * k) ++ell;  // ceil(sqrt(6k/5))
        long long m = 1;
        while (3 * (m + 1) * (m + 1) <= 10 * k) ++m;  // floor(2 sqrt(5k/6))
        long long c1 = ell * (ell + 1) / 2 + 1;
        long long c = c1;
        for (long long i = 1; i < m; ++i) c += i * ell + 1 + ell * (ell + 1) / 2 - 1;
        MpI f = f_interval(MpI::integer(k));
        double margin = f.margin_over(MpI::integer(c));
        if (!f.at_least(MpI::integer(c))) rep.failures.push_back(k);
        if (first || margin < rep.min_margin) {
            rep.min_margin = margin;
            rep.argmin_k = k;
            first = false;
        }
        ++rep.checked;
    }
    return rep;
}

ChainBBlockReport verify_chain_bblock(long long b_max, long long k_max) {
    if (b_max < 3) throw std::invalid_argument("verify_chain_bblock: b >= 3 required");
    ChainBBlockReport rep;
    for (long long b = 3; b <= b_max; ++b) {
        for (long long k = 4; k <= k_max; ++k) {
            for (long long ell = 1; ell <= k - 3; ++ell) {
                long long lhs1 = (b - 2) * (k - ell - 3) + 3 + (k - ell) + 2 * ell - 3;
                long long mid = (b - 1) * (k - ell - 3) + 2 * ell + 3;
                long long rhs = (b - 1) * (k - 3) + 3;
                if (lhs1 > mid)
                    rep.failures.push_back("step1 fails at b=" + std::to_string(b) +
                                           " k=" + std::to_string(k) + " l=" + std::to_string(ell));
                if (mid > rhs)
                    rep.failures.push_back("step2 fails at b=" + std::to_string(b) +
                                           " k=" + std::to_string(k) + " l=" + std::to_string(ell));
                ++rep.checked;
            }
        }
    }
    return rep;
}

}  // namespace treeuniv
