#include "rpe/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace rpe {

IntPoly::IntPoly(std::vector<Int> ascending) : c_(std::move(ascending)) {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::parse_line(std::string_view line) {
    std::istringstream in{std::string(line)};
    std::vector<Int> cs;
    std::string tok;
    while (in >> tok) cs.push_back(parse_int(tok));
    if (cs.empty()) throw eval_error("empty polynomial line");
    return IntPoly(std::move(cs));
}

std::string IntPoly::to_line() const {
    if (is_zero()) return "0";
    std::string out;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) out += ' ';
        out += c_[i].get_str();
    }
    return out;
}

const Int& IntPoly::leading() const {
    if (is_zero()) throw domain_error("leading coefficient of zero polynomial");
    return c_.back();
}

Int IntPoly::content() const {
    Int g = 0;
    for (const Int& x : c_) g = gcd(g, x);
    return g;
}

IntPoly IntPoly::canonical() const {
    if (is_zero()) return {};
    Int g = content();
    if (c_.back() < 0) g = -g;
    std::vector<Int> out;
    out.reserve(c_.size());
    for (const Int& x : c_) out.push_back(x / g);
    return IntPoly(std::move(out));
}

IntPoly IntPoly::derivative() const {
    if (degree() < 1) return {};
    std::vector<Int> out;
    out.reserve(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) out.push_back(c_[i] * static_cast<long>(i));
    return IntPoly(std::move(out));
}

Rat IntPoly::eval(const Rat& x) const {
    Rat acc = 0;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

Real IntPoly::eval(const Real& x) const {
    Real acc(0, x.ctx());
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + Real(c_[i], x.ctx());
    return acc;
}

int IntPoly::sign_at(const Rat& x) const { return sgn(eval(x)); }

namespace {

// Dense rational polynomials, ascending; only used inside Sturm machinery.
using RatPoly = std::vector<Rat>;

RatPoly to_rat(const IntPoly& p) {
    RatPoly out;
    out.reserve(p.coeffs().size());
    for (const Int& x : p.coeffs()) out.emplace_back(x);
    return out;
}

void trim(RatPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

RatPoly derivative(const RatPoly& p) {
    RatPoly out;
    for (size_t i = 1; i < p.size(); ++i) out.push_back(p[i] * static_cast<long>(i));
    return out;
}

Rat eval(const RatPoly& p, const Rat& x) {
    Rat acc = 0;
    for (size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

// Remainder of a by b, b nonzero.
RatPoly rem(RatPoly a, const RatPoly& b) {
    trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        Rat q = a.back() / b.back();
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= q * b[i];
        a.pop_back();
        trim(a);
    }
    return a;
}

// Normalize so coefficients stay small: divide by the max |coeff|.
void scale_down(RatPoly& p) {
    Rat m = 0;
    for (const Rat& x : p) {
        Rat ax = abs(x);
        if (ax > m) m = ax;
    }
    if (m != 0)
        for (Rat& x : p) x /= m;
}

RatPoly poly_gcd(RatPoly a, RatPoly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        RatPoly r = rem(a, b);
        scale_down(r);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

RatPoly divide_exact(const RatPoly& a, const RatPoly& b) {
    RatPoly rem_part = a, q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rat(0));
    trim(rem_part);
    while (rem_part.size() >= b.size() && !rem_part.empty()) {
        Rat f = rem_part.back() / b.back();
        size_t shift = rem_part.size() - b.size();
        q[shift] = f;
        for (size_t i = 0; i < b.size(); ++i) rem_part[i + shift] -= f * b[i];
        trim(rem_part);
    }
    return q;
}

RatPoly squarefree_part(const IntPoly& p) {
    RatPoly rp = to_rat(p);
    trim(rp);
    if (rp.size() <= 1) return rp;
    RatPoly g = poly_gcd(rp, derivative(rp));
    if (g.size() <= 1) return rp;
    RatPoly q = divide_exact(rp, g);
    trim(q);
    return q;
}

std::vector<RatPoly> sturm_chain(const RatPoly& q) {
    std::vector<RatPoly> chain;
    chain.push_back(q);
    chain.push_back(derivative(q));
    trim(chain.back());
    while (!chain.back().empty() && chain.back().size() > 1) {
        RatPoly r = rem(chain[chain.size() - 2], chain.back());
        for (Rat& x : r) x = -x;
        scale_down(r);
        if (r.empty()) break;
        chain.push_back(std::move(r));
    }
    return chain;
}

long sign_variations(const std::vector<RatPoly>& chain, const Rat& x) {
    long v = 0;
    int prev = 0;
    for (const RatPoly& p : chain) {
        if (p.empty()) continue;
        int s = sgn(eval(p, x));
        if (s != 0 && prev != 0 && s != prev) ++v;
        if (s != 0) prev = s;
    }
    return v;
}

// 1 + max |c_i| / |c_d|, rounded up to an integer: every real root has
// absolute value strictly below this.
Rat cauchy_bound(const RatPoly& q) {
    Rat m = 0;
    for (size_t i = 0; i + 1 < q.size(); ++i) {
        Rat ax = abs(q[i]);
        if (ax > m) m = ax;
    }
    Rat b = 1 + m / abs(q.back());
    Int num = b.get_num(), den = b.get_den();
    Int cb;
    mpz_cdiv_q(cb.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return Rat(cb + 1);
}

struct SturmContext {
    std::vector<RatPoly> chain;
    const RatPoly& q() const { return chain.front(); }
    long count(const Rat& lo, const Rat& hi) const {
        return sign_variations(chain, lo) - sign_variations(chain, hi);
    }
};

void isolate(const SturmContext& sc, const Rat& lo, const Rat& hi,
             std::vector<RootInterval>& out) {
    long n = sc.count(lo, hi);
    if (n == 0) return;
    if (n == 1) {
        out.push_back({lo, hi});
        return;
    }
    Rat mid = (lo + hi) / 2;
    while (sgn(eval(sc.q(), mid)) == 0) mid = (lo + mid) / 2;
    isolate(sc, lo, mid, out);
    isolate(sc, mid, hi, out);
}

}  // namespace

std::vector<RootInterval> isolate_real_roots(const IntPoly& p) {
    if (p.is_zero()) throw domain_error("cannot isolate roots of the zero polynomial");
    RatPoly q = squarefree_part(p);
    if (q.size() <= 1) return {};
    SturmContext sc{sturm_chain(q)};
    Rat bound = cauchy_bound(q);
    std::vector<RootInterval> out;
    isolate(sc, -bound, bound, out);
    return out;
}

long sturm_root_count(const IntPoly& p, const Rat& lo, const Rat& hi) {
    if (p.is_zero()) throw domain_error("zero polynomial");
    if (!(lo < hi)) throw domain_error("empty interval");
    RatPoly q = squarefree_part(p);
    if (q.size() <= 1) return 0;
    SturmContext sc{sturm_chain(q)};
    return sc.count(lo, hi);
}

namespace {

Real eval_rat_poly(const RatPoly& p, const Real& x) {
    Real acc(0, x.ctx());
    for (size_t i = p.size(); i-- > 0;) acc = acc * x + Real(p[i], x.ctx());
    return acc;
}

}  // namespace

Real refine_root(const IntPoly& p, const RootInterval& iv, const Ctx& c) {
    RatPoly q = squarefree_part(p);
    if (q.size() <= 1) throw domain_error("polynomial has no roots");
    Rat lo = iv.lo, hi = iv.hi;
    int slo = sgn(eval(q, lo));
    int shi = sgn(eval(q, hi));
    if (slo == 0 || shi == 0 || slo == shi)
        throw domain_error("interval endpoints do not bracket a sign change");

    // Exact bisection until the bracket is relatively tight (or absurdly
    // small in absolute terms, for roots near zero).
    Rat abs_floor(Int(1), ipow(Int(2), 240));
    Rat rel_floor(Int(1), ipow(Int(2), 30));
    for (int i = 0; i < 4000; ++i) {
        Rat width = hi - lo;
        Rat mid = (lo + hi) / 2;
        Rat scale = abs(mid);
        if (width <= scale * rel_floor || width <= abs_floor) break;
        int sm = sgn(eval(q, mid));
        if (sm == 0) {  // rational root, nail it exactly
            lo = hi = mid;
            break;
        }
        (sm == slo ? lo : hi) = mid;
    }

    if (lo == hi) return Real(lo, c);

    RatPoly dq = derivative(q);
    long target = c.digits + 30;
    long prec = 40;
    Real x(Rat((lo + hi) / 2), Ctx(prec));
    while (true) {
        prec = std::min(2 * prec, 2 * target);
        Ctx w(prec);
        x = round_to(x, w);
        Real fx = eval_rat_poly(q, x);
        Real dfx = eval_rat_poly(dq, x);
        if (dfx.is_zero()) throw consistency_error("Newton derivative vanished");
        Real step = fx / dfx;
        Real xn = x - step;
        if (Real(lo, w) > xn || xn > Real(hi, w)) xn = (Real(lo, w) + Real(hi, w)) / 2;
        x = xn;
        if (prec >= 2 * target) {
            // two polishing iterations at full width
            for (int i = 0; i < 2; ++i) {
                Real corr = eval_rat_poly(q, x) / eval_rat_poly(dq, x);
                x = x - corr;
            }
            break;
        }
    }

    Real residual = abs(eval_rat_poly(q, x));
    Real slope = abs(eval_rat_poly(dq, x));
    if (!(residual < slope * pow10(-(c.digits - 20), x.ctx())))
        throw consistency_error("root refinement failed certification");
    return round_to(x, c);
}

std::vector<Real> real_roots(const IntPoly& p, const Ctx& c) {
    std::vector<Real> out;
    for (const RootInterval& iv : isolate_real_roots(p)) out.push_back(refine_root(p, iv, c));
    return out;
}

Real root_by_spec(const RootSpec& s, const Ctx& c) {
    std::vector<RootInterval> ivs = isolate_real_roots(s.poly);
    if (s.index < 1 || static_cast<size_t>(s.index) > ivs.size())
        throw domain_error("root index out of range: polynomial has " +
                           std::to_string(ivs.size()) + " real roots");
    return refine_root(s.poly, ivs[static_cast<size_t>(s.index) - 1], c);
}

}  // namespace rpe
