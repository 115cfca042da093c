#include "rpe/real.hpp"

#include <cctype>
#include <cstdlib>

namespace rpe {

namespace {

bool valid_decimal(std::string_view s) {
    size_t i = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    size_t mantissa_digits = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) { ++i; ++mantissa_digits; }
    if (i < s.size() && s[i] == '.') {
        ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) { ++i; ++mantissa_digits; }
    }
    if (mantissa_digits == 0) return false;
    if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
        ++i;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
        size_t exp_digits = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) { ++i; ++exp_digits; }
        if (exp_digits == 0) return false;
    }
    return i == s.size();
}

}  // namespace

Real Real::parse(std::string_view text, const Ctx& c) {
    if (!valid_decimal(text))
        throw eval_error("malformed decimal literal: '" + std::string(text) + "'");
    Real r(c);
    mpfr_set_str(r.mp(), std::string(text).c_str(), 10, MPFR_RNDN);
    return r;
}

long Real::exponent10() const {
    if (is_zero()) throw domain_error("exponent10 of zero");
    if (!is_finite()) throw range_error("exponent10 of non-finite value");
    mpfr_exp_t e;
    char* s = mpfr_get_str(nullptr, &e, 10, 2, v_, MPFR_RNDZ);
    mpfr_free_str(s);
    return static_cast<long>(e) - 1;  // |x| = 0.dd... * 10^e
}

std::string Real::str(long sig) const {
    if (!is_finite()) throw range_error("cannot print non-finite value");
    if (is_zero()) return "0";
    long n = (sig < 0) ? digits_ : std::min(digits_, sig);
    if (n < 1) n = 1;

    mpfr_exp_t e;
    char* raw = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(n), v_, MPFR_RNDN);
    std::string ds(raw);
    mpfr_free_str(raw);

    std::string sign;
    if (!ds.empty() && ds[0] == '-') {
        sign = "-";
        ds.erase(0, 1);
    }
    long exp = static_cast<long>(e);  // value = 0.ds * 10^exp

    std::string body;
    if (exp >= 1 && exp <= n) {
        body = ds.substr(0, static_cast<size_t>(exp));
        if (exp < n) body += "." + ds.substr(static_cast<size_t>(exp));
    } else if (exp <= 0 && exp > -5) {
        body = "0." + std::string(static_cast<size_t>(-exp), '0') + ds;
    } else {
        body = ds.substr(0, 1);
        if (n > 1) body += "." + ds.substr(1);
        body += "e" + std::to_string(exp - 1);
    }
    return sign + body;
}

Real sqrt(const Real& a) {
    if (a.sgn() < 0) throw domain_error("sqrt of negative value");
    Real r(a.ctx());
    mpfr_sqrt(r.mp(), a.mp(), MPFR_RNDN);
    return r;
}

Real nth_root(const Real& a, unsigned long n) {
    if (n == 0) throw domain_error("0th root");
    if (a.sgn() < 0 && n % 2 == 0) throw domain_error("even root of negative value");
    Real r(a.ctx());
    mpfr_rootn_ui(r.mp(), a.mp(), n, MPFR_RNDN);
    return r;
}

Real exp(const Real& a) {
    if (mpfr_cmpabs_ui(a.mp(), 1'000'000) > 0)
        throw range_error("exp argument magnitude above 10^6");
    Real r(a.ctx());
    mpfr_exp(r.mp(), a.mp(), MPFR_RNDN);
    return r;
}

Real log(const Real& a) {
    if (a.sgn() <= 0) throw domain_error("log of non-positive value");
    Real r(a.ctx());
    mpfr_log(r.mp(), a.mp(), MPFR_RNDN);
    return r;
}

Real log10(const Real& a) {
    if (a.sgn() <= 0) throw domain_error("log10 of non-positive value");
    Real r(a.ctx());
    mpfr_log10(r.mp(), a.mp(), MPFR_RNDN);
    return r;
}

Real pow_int(const Real& a, long e) {
    if (a.is_zero() && e < 0) throw domain_error("zero to a negative power");
    Real r(a.ctx());
    mpfr_pow_si(r.mp(), a.mp(), e, MPFR_RNDN);
    return r;
}

Real atan2(const Real& y, const Real& x) {
    Real r(Ctx(std::max(y.digits(), x.digits())));
    mpfr_atan2(r.mp(), y.mp(), x.mp(), MPFR_RNDN);
    return r;
}

void sin_cos(const Real& a, Real& s, Real& c) {
    s = Real(a.ctx());
    c = Real(a.ctx());
    mpfr_sin_cos(s.mp(), c.mp(), a.mp(), MPFR_RNDN);
}

Real pow10(long e, const Ctx& c) {
    Real ten(10, c);
    Real r(c);
    mpfr_pow_si(r.mp(), ten.mp(), e, MPFR_RNDN);
    return r;
}

Real round_to(const Real& a, const Ctx& c) {
    Real r(c);
    mpfr_set(r.mp(), a.mp(), MPFR_RNDN);
    return r;
}

bool rel_agree(const Real& a, const Real& b, long digits) {
    if (a == b) return true;
    Real diff = abs(a - b);
    Real scale = max(abs(a), abs(b));
    return diff <= scale * pow10(-digits, diff.ctx());
}

Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
Complex operator-(const Complex& a) { return {-a.re, -a.im}; }

Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

Complex operator/(const Complex& a, const Complex& b) {
    Real den = b.re * b.re + b.im * b.im;
    if (den.is_zero()) throw eval_error("complex division by zero");
    return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
}

Real abs(const Complex& a) {
    Real r(Ctx(std::max(a.re.digits(), a.im.digits())));
    mpfr_hypot(r.mp(), a.re.mp(), a.im.mp(), MPFR_RNDN);
    return r;
}

Complex pow_int(const Complex& a, long e) {
    Ctx c(std::max(a.re.digits(), a.im.digits()));
    if (e == 0) return Complex(1, c);
    unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
    Complex acc(1, c);
    Complex base = a;
    while (n > 0) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    if (e < 0) return Complex(1, c) / acc;
    return acc;
}

Complex nth_root_branch(const Complex& a, unsigned long n, unsigned long branch) {
    if (n == 0) throw domain_error("0th root");
    if (branch >= n) throw domain_error("branch index out of range");
    Ctx c(std::max(a.re.digits(), a.im.digits()));

    if (a.re.is_zero() && a.im.is_zero()) return Complex(0, c);
    if (a.im.is_zero() && branch == 0) {
        if (a.re.sgn() > 0) return Complex(nth_root(a.re, n));
        if (n % 2 == 1) return Complex(-nth_root(-a.re, n));  // real convention
    }

    Real r = abs(a);
    Real theta = atan2(a.im, a.re);
    Real mag = nth_root(r, n);
    Real pi(c);
    mpfr_const_pi(pi.mp(), MPFR_RNDN);
    Real angle = (theta + (2 * static_cast<long>(branch)) * pi) / static_cast<long>(n);
    Real s(c), co(c);
    sin_cos(angle, s, co);
    return {mag * co, mag * s};
}

}  // namespace rpe
