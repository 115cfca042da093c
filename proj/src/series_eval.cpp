#include "rpe/series_eval.hpp"

#include <future>

namespace rpe {

namespace {

Rat term_ratio_rat(long n) {
    Int num = Int(6 * n + 1) * Int(6 * n + 3) * Int(6 * n + 5);
    Int den = 216 * ipow(Int(n + 1), 3);
    return Rat(num, den);
}

// t_N at the precision of z.
Real leading_term(const Real& z, long N) {
    Real t(1, z.ctx());
    for (long n = 0; n < N; ++n) t = t * z * term_ratio_rat(n);
    return t;
}

}  // namespace

TruncationBound truncation_bound(const SeriesParams& p, long terms) {
    if (terms < 0) throw domain_error("truncation_bound needs terms >= 0");
    Ctx w(std::max<long>(p.z.digits(), 30));
    Real az = abs(round_to(p.z, w));
    if (az >= 1L) throw divergent_input("truncation bound needs |z| < 1");
    if (az.is_zero()) return {terms, Real(0, w)};
    Real tN = abs(leading_term(round_to(p.z, w), terms));
    Real ab = abs(round_to(p.a, w)), bb = abs(round_to(p.b, w));
    Real geo = 1 - az;
    Real bound = tN * (ab + bb * terms + bb / geo) / geo;
    return {terms, bound};
}

Real level1_partial_sum(const SeriesParams& p, long terms, const Ctx& c) {
    Ctx w = c.boosted(10);
    Real z = round_to(p.z, w), a = round_to(p.a, w), b = round_to(p.b, w);
    Real t(1, w), s(0, w);
    for (long n = 0; n < terms; ++n) {
        s = s + t * (a + b * n);
        t = t * z * term_ratio_rat(n);
    }
    return round_to(s, c);
}

Real eval_level1_series(const SeriesParams& p, long target_digits, long* terms_used) {
    if (target_digits < 1) throw domain_error("eval_level1_series needs target_digits >= 1");
    if (abs(p.z) >= 1L) throw divergent_input("series needs |z| < 1");
    Ctx out(std::max(p.z.digits(), target_digits));

    long N = 1;
    if (!p.z.is_zero()) {
        Real dpt = digits_per_term(p.z);
        N = static_cast<long>((Real(target_digits, dpt.ctx()) / dpt).to_double()) + 1 + 2;
        Real cap = pow10(-target_digits, Ctx(30));
        while (truncation_bound(p, N).bound >= cap) N += std::max<long>(4, N / 8);
    }
    if (terms_used) *terms_used = N;
    return level1_partial_sum(p, N, out.boosted(10));
}

namespace {

struct PQT {
    Int P, Q, T;
};

const Int& chud_q_factor() {
    static const Int c = 216 * ipow(Int(53360), 3);
    return c;
}

PQT chud_range(long lo, long hi, int depth) {
    if (hi - lo == 1) {
        long n = lo;
        Int P = -(Int(6 * n + 1) * Int(6 * n + 3) * Int(6 * n + 5));
        Int Q = chud_q_factor() * ipow(Int(n + 1), 3);
        Int T = (Int(13591409) + Int(545140134) * n) * Q;
        return {P, Q, T};
    }
    long mid = lo + (hi - lo) / 2;
    PQT l, r;
    if (depth > 0 && hi - lo >= 256) {
        auto fut = std::async(std::launch::async, chud_range, lo, mid, depth - 1);
        r = chud_range(mid, hi, depth - 1);
        l = fut.get();
    } else {
        l = chud_range(lo, mid, 0);
        r = chud_range(mid, hi, 0);
    }
    return {l.P * r.P, l.Q * r.Q, l.T * r.Q + l.P * r.T};
}

long chud_terms_needed(long digits) {
    // ceil(digits / 14.18) + 2, exactly: 14.18 = 1418/100
    return (100 * digits + 1417) / 1418 + 2;
}

}  // namespace

std::string chudnovsky_pi(long digits, unsigned workers) {
    if (digits < 1) throw domain_error("chudnovsky_pi needs digits >= 1");
    if (workers < 1) workers = 1;
    int depth = 0;
    while ((1u << depth) < workers && depth < 8) ++depth;

    long N = chud_terms_needed(digits);
    PQT s = chud_range(0, N, depth);

    Ctx w(digits + 15);
    Real pi = Real(426880, w) * sqrt(Real(10005, w)) * Real(s.Q, w) / Real(s.T, w);
    return pi.str(digits);
}

Real chudnovsky_partial_sum(long terms, const Ctx& c) {
    if (terms < 1) throw domain_error("chudnovsky_partial_sum needs terms >= 1");
    PQT s = chud_range(0, terms, 0);
    Ctx w = c.boosted(10);
    return round_to(Real(s.T, w) / (6 * Real(s.Q, w)), c);
}

namespace {

// sum_n ((1/2)_n / n!)^3 x^n; term ratio x ((2n+1)/(2n+2))^3.
Real central_binomial_cubed_sum(const Real& x, const Ctx& w) {
    Real t(1, w), s(0, w);
    Real tol = pow10(-(w.digits + 10), w);
    for (long n = 0;; ++n) {
        s = s + t;
        t = t * x * Rat(ipow(Int(2 * n + 1), 3), ipow(Int(2 * n + 2), 3));
        if (abs(t) < tol) break;
    }
    return s;
}

// sum_n t_n w^n with the level-1 term ratio.
Real level1_unit_sum(const Real& z, const Ctx& w) {
    Real t(1, w), s(0, w);
    Real tol = pow10(-(w.digits + 10), w);
    for (long n = 0;; ++n) {
        s = s + t;
        t = t * z * term_ratio_rat(n);
        if (abs(t) < tol) break;
    }
    return s;
}

}  // namespace

Real bailey_transform_residual(const Real& x, const Ctx& c) {
    Ctx w = c.boosted(20);
    Real xx = round_to(x, w);
    if (abs(xx) >= 1L) throw divergent_input("bailey transform needs |x| < 1");
    Real u = 1 - 4 * xx;
    if (u.sgn() <= 0) throw domain_error("bailey transform needs x < 1/4");
    Real arg = -27 * xx / (u * u * u);
    if (abs(arg) >= 1L) throw divergent_input("bailey transform: |27x/(1-4x)^3| >= 1");
    Real lhs = central_binomial_cubed_sum(xx, w);
    Real rhs = level1_unit_sum(arg, w) / sqrt(u);
    return round_to(abs(lhs - rhs), c);
}

Real k2_generating_residual(const Real& x, const Ctx& c) {
    Ctx w = c.boosted(20);
    Real xx = round_to(x, w);
    if (xx.sgn() < 0 || xx >= 1L) throw domain_error("k2 generating check needs x in [0, 1)");
    Real lhs = central_binomial_cubed_sum(xx, w);
    Real m = sqrt((1 - sqrt(1 - xx)) / 2);
    Real K = elliptic_KE(m, w).K;
    Real pi = pi_reference(w);
    Real rhs = 4 * K * K / (pi * pi);
    return round_to(abs(lhs - rhs), c);
}

}  // namespace rpe
