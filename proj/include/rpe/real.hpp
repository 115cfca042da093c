#pragma once

// Arbitrary-precision real/complex scalars on top of MPFR.
//
// Precision model: a PrecisionContext asks for P significant decimal digits
// and maps to ceil(P*log2(10)) + 64 bits of mantissa. All MPFR operations
// round to nearest-even, so each primitive is correctly rounded at that
// width; the 64 extra bits absorb the guard-digit policy. Composite
// functions that accumulate error across many primitives either work at a
// boosted context internally or go through stabilized() below.

#include <gmpxx.h>
#include <mpfr.h>

#include <cmath>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rpe/error.hpp"
#include "rpe/exact.hpp"

namespace rpe {

struct PrecisionContext {
    long digits;      // requested significant decimal digits P
    long guard = 10;  // decimal guard digits honored by the bit budget

    explicit PrecisionContext(long p) : digits(p) {
        if (p < 1 || p > 10'000'000) throw domain_error("precision out of range");
    }
    long bits() const {
        return static_cast<long>(std::ceil(static_cast<double>(digits) * 3.321928094887363)) + 64;
    }
    PrecisionContext boosted(long extra) const { return PrecisionContext(digits + extra); }
};

using Ctx = PrecisionContext;

class Real {
  public:
    Real() : digits_(1) { mpfr_init2(v_, 64); mpfr_set_zero(v_, 1); }
    explicit Real(const Ctx& c) : digits_(c.digits) {
        mpfr_init2(v_, c.bits());
        mpfr_set_zero(v_, 1);
    }
    Real(long v, const Ctx& c) : Real(c) { mpfr_set_si(v_, v, MPFR_RNDN); }
    Real(const Int& v, const Ctx& c) : Real(c) { mpfr_set_z(v_, v.get_mpz_t(), MPFR_RNDN); }
    Real(const Rat& v, const Ctx& c) : Real(c) { mpfr_set_q(v_, v.get_mpq_t(), MPFR_RNDN); }

    Real(const Real& o) : digits_(o.digits_) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    Real(Real&& o) noexcept : digits_(o.digits_) {
        mpfr_init2(v_, 64);
        mpfr_swap(v_, o.v_);
    }
    Real& operator=(const Real& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
            digits_ = o.digits_;
        }
        return *this;
    }
    Real& operator=(Real&& o) noexcept {
        if (this != &o) {
            mpfr_swap(v_, o.v_);
            digits_ = o.digits_;
        }
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    // Parses decimal: optional sign, digits, optional fraction, optional
    // e/E exponent. Rejects anything else.
    static Real parse(std::string_view text, const Ctx& c);

    long digits() const { return digits_; }
    long prec_bits() const { return mpfr_get_prec(v_); }
    Ctx ctx() const { return Ctx(digits_); }

    int sgn() const { return mpfr_sgn(v_); }
    bool is_zero() const { return mpfr_zero_p(v_); }
    bool is_finite() const { return mpfr_number_p(v_); }

    // floor(log10 |x|), the decimal exponent of the leading digit.
    // Exact enough for digit counting; throws on zero.
    long exponent10() const;

    // Decimal string with min(digits(), sig) significant digits (all of them
    // when sig < 0), nearest-even rounding. Plain notation when the exponent
    // is small, otherwise d.ddd...e±XX.
    std::string str(long sig = -1) const;

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    Int to_int_nearest() const {
        Int r;
        mpfr_get_z(r.get_mpz_t(), v_, MPFR_RNDN);
        return r;
    }

    mpfr_srcptr mp() const { return v_; }
    mpfr_ptr mp() { return v_; }

    // Tag a value with the digit count it should print/round as.
    Real& with_digits(long d) { digits_ = d; return *this; }

  private:
    mpfr_t v_;
    long digits_;
};

namespace detail {
inline Real binop(const Real& a, const Real& b,
                  int (*op)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t)) {
    Real r(Ctx(std::max(a.digits(), b.digits())));
    op(r.mp(), a.mp(), b.mp(), MPFR_RNDN);
    return r;
}
}  // namespace detail

inline Real operator+(const Real& a, const Real& b) { return detail::binop(a, b, mpfr_add); }
inline Real operator-(const Real& a, const Real& b) { return detail::binop(a, b, mpfr_sub); }
inline Real operator*(const Real& a, const Real& b) { return detail::binop(a, b, mpfr_mul); }
inline Real operator/(const Real& a, const Real& b) {
    if (b.is_zero()) throw domain_error("division by zero");
    return detail::binop(a, b, mpfr_div);
}
inline Real operator-(const Real& a) {
    Real r(a);
    mpfr_neg(r.mp(), r.mp(), MPFR_RNDN);
    return r;
}

inline Real operator+(const Real& a, long b) {
    Real r(a);
    mpfr_add_si(r.mp(), a.mp(), b, MPFR_RNDN);
    return r;
}
inline Real operator+(long a, const Real& b) { return b + a; }
inline Real operator-(const Real& a, long b) { return a + (-b); }
inline Real operator-(long a, const Real& b) {
    Real r(b);
    mpfr_si_sub(r.mp(), a, b.mp(), MPFR_RNDN);
    return r;
}
inline Real operator*(const Real& a, long b) {
    Real r(a);
    mpfr_mul_si(r.mp(), a.mp(), b, MPFR_RNDN);
    return r;
}
inline Real operator*(long a, const Real& b) { return b * a; }
inline Real operator/(const Real& a, long b) {
    if (b == 0) throw domain_error("division by zero");
    Real r(a);
    mpfr_div_si(r.mp(), a.mp(), b, MPFR_RNDN);
    return r;
}
inline Real operator/(long a, const Real& b) {
    if (b.is_zero()) throw domain_error("division by zero");
    Real r(b);
    mpfr_si_div(r.mp(), a, b.mp(), MPFR_RNDN);
    return r;
}
inline Real operator*(const Real& a, const Rat& b) {
    Real r(a);
    mpfr_mul_q(r.mp(), a.mp(), b.get_mpq_t(), MPFR_RNDN);
    return r;
}
inline Real operator*(const Real& a, const Int& b) {
    Real r(a);
    mpfr_mul_z(r.mp(), a.mp(), b.get_mpz_t(), MPFR_RNDN);
    return r;
}

inline bool operator==(const Real& a, const Real& b) { return mpfr_cmp(a.mp(), b.mp()) == 0; }
inline bool operator!=(const Real& a, const Real& b) { return !(a == b); }
inline bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.mp(), b.mp()) < 0; }
inline bool operator>(const Real& a, const Real& b) { return b < a; }
inline bool operator<=(const Real& a, const Real& b) { return !(b < a); }
inline bool operator>=(const Real& a, const Real& b) { return !(a < b); }
inline bool operator<(const Real& a, long b) { return mpfr_cmp_si(a.mp(), b) < 0; }
inline bool operator>(const Real& a, long b) { return mpfr_cmp_si(a.mp(), b) > 0; }
inline bool operator<=(const Real& a, long b) { return mpfr_cmp_si(a.mp(), b) <= 0; }
inline bool operator>=(const Real& a, long b) { return mpfr_cmp_si(a.mp(), b) >= 0; }

inline Real abs(const Real& a) {
    Real r(a);
    mpfr_abs(r.mp(), a.mp(), MPFR_RNDN);
    return r;
}
inline Real max(const Real& a, const Real& b) { return a < b ? b : a; }
inline Real min(const Real& a, const Real& b) { return a < b ? a : b; }

Real sqrt(const Real& a);
Real nth_root(const Real& a, unsigned long n);
Real exp(const Real& a);
Real log(const Real& a);
Real log10(const Real& a);
Real pow_int(const Real& a, long e);
Real atan2(const Real& y, const Real& x);
void sin_cos(const Real& a, Real& s, Real& c);

// 10^e at the given context.
Real pow10(long e, const Ctx& c);

// Value re-rounded (to nearest-even) at a target context.
Real round_to(const Real& a, const Ctx& c);

// |a - b| <= 10^-digits * max(|a|, |b|); equal values always agree.
bool rel_agree(const Real& a, const Real& b, long digits);

// Runs `f` (Ctx -> vector<Real>) at P and 2P (then 4P, 8P), accepting once
// consecutive evaluations agree componentwise to P - 20 digits. Escalation
// loop for composites whose raw primitives cannot be error-bounded a priori.
template <typename F>
std::vector<Real> stabilized_vec(const Ctx& ctx, F&& f) {
    std::vector<Real> prev = f(ctx);
    for (long mult = 2; mult <= 8; mult *= 2) {
        std::vector<Real> cur = f(Ctx(ctx.digits * mult));
        bool ok = prev.size() == cur.size();
        for (size_t i = 0; ok && i < cur.size(); ++i)
            ok = rel_agree(prev[i], cur[i], ctx.digits - 20);
        if (ok) {
            for (auto& v : cur) v = round_to(v, ctx);
            return cur;
        }
        prev = std::move(cur);
    }
    throw consistency_error("precision escalation failed to stabilize");
}

template <typename F>
Real stabilized(const Ctx& ctx, F&& f) {
    return stabilized_vec(ctx, [&](const Ctx& c) { return std::vector<Real>{f(c)}; })[0];
}

struct Complex {
    Real re, im;

    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    explicit Complex(Real r) : re(std::move(r)), im(Real(0L, re.ctx())) {}
    Complex(long v, const Ctx& c) : re(v, c), im(0L, c) {}
    Complex(const Rat& v, const Ctx& c) : re(v, c), im(0L, c) {}
};

Complex operator+(const Complex& a, const Complex& b);
Complex operator-(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Complex& b);
Complex operator/(const Complex& a, const Complex& b);  // throws eval_error near zero divisor
Complex operator-(const Complex& a);
Real abs(const Complex& a);
Complex pow_int(const Complex& a, long e);

// n-th root on branch b: principal root times e^(2*pi*i*b/n), b in [0, n).
// Exception (branch 0, odd n, negative real input): the real negative root,
// so that cbrt(-8) = -2 rather than the principal complex root.
Complex nth_root_branch(const Complex& a, unsigned long n, unsigned long branch);

}  // namespace rpe
