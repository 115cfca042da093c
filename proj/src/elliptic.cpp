#include "rpe/elliptic.hpp"

namespace rpe {

namespace {

// Loop guard for quadratically convergent iterations; generous by a wide
// margin (Brent-Salamin needs ~log2(bits) steps).
constexpr int kMaxAgmIter = 10'000;

bool close_enough(const Real& a, const Real& b, long spare_bits) {
    Real diff = a - b;
    if (diff.is_zero()) return true;
    return mpfr_get_exp(diff.mp()) <= mpfr_get_exp(a.mp()) - (a.prec_bits() - spare_bits);
}

}  // namespace

Real pi_reference(const Ctx& c) {
    Ctx w = c.boosted(c.guard + 15);
    Real a(1, w), t(Rat(1, 4), w), p(1, w);
    Real b = sqrt(Real(Rat(1, 2), w));
    for (int i = 0; i < kMaxAgmIter; ++i) {
        Real an = (a + b) / 2;
        Real ch = a - an;
        t = t - p * ch * ch;
        b = sqrt(a * b);
        bool done = close_enough(an, b, 6);
        a = an;
        p = p * 2;
        if (done) break;
    }
    Real sum = a + b;
    return round_to(sum * sum / (4 * t), c);
}

Real agm(const Real& a0, const Real& b0) {
    if (a0.sgn() <= 0 || b0.sgn() <= 0) throw domain_error("agm needs positive operands");
    Ctx w(std::max(a0.digits(), b0.digits()));
    Real a = round_to(a0, w), b = round_to(b0, w);
    for (int i = 0; i < kMaxAgmIter; ++i) {
        if (close_enough(a, b, 2)) break;
        Real an = (a + b) / 2;
        b = sqrt(a * b);
        a = an;
    }
    return (a + b) / 2;
}

EllipticKE elliptic_KE(const Real& k, const Ctx& c) {
    if (k.sgn() < 0 || k >= 1L) throw domain_error("elliptic_KE needs k in [0, 1)");
    Ctx w = c.boosted(20);
    Real kk = round_to(k, w);
    Real a(1, w);
    Real b = sqrt(1 - kk * kk);
    Real two_pow(Rat(1, 2), w);  // 2^(n-1)
    Real sum = two_pow * kk * kk;
    for (int i = 0; i < kMaxAgmIter; ++i) {
        Real cn = (a - b) / 2;
        two_pow = two_pow * 2;
        if (!cn.is_zero()) sum = sum + two_pow * cn * cn;
        Real an = (a + b) / 2;
        b = sqrt(a * b);
        a = an;
        // Stop once c_n^2 is below the precision floor. The threshold must
        // sit well above one ulp: at some precisions the iteration ends in
        // a 1-ulp oscillation of a and b instead of exact equality, and the
        // doubling weight would amplify that noise without bound.
        if (cn.is_zero() || mpfr_get_exp(cn.mp()) < -(w.bits() / 2 + 8)) break;
    }
    Real K = pi_reference(w) / (2 * a);  // a has converged to agm(1, k')
    Real E = K * (1 - sum);
    return {round_to(K, c), round_to(E, c)};
}

Real ratio_Kprime_over_K(const Real& k, const Ctx& c) {
    if (k.sgn() <= 0 || k >= 1L) throw domain_error("ratio needs k in (0, 1)");
    Ctx w = c.boosted(20);
    Real kk = round_to(k, w);
    Real kp = sqrt(1 - kk * kk);
    Real one(1, w);
    return round_to(agm(one, kp) / agm(one, kk), c);
}

namespace {

Real lambda_star_theta_once(const Rat& r, const Ctx& c) {
    Ctx w = c.boosted(20);
    Real srt = sqrt(Real(r, w));
    Real pis = pi_reference(w) * srt;
    Real q = exp(-pis);
    Real q2 = q * q;
    Real tol = pow10(-(w.digits + 20), w);

    // theta2 = 2 q^(1/4) sum_{n>=0} q^(n(n+1)); term ratio q^(2(n+1))
    Real s2(1, w), t2(1, w), m2 = q2;
    while (true) {
        t2 = t2 * m2;
        if (abs(t2) < tol) break;
        s2 = s2 + t2;
        m2 = m2 * q2;
    }
    // theta3 = 1 + 2 sum_{n>=1} q^(n^2); term ratio q^(2n+1)
    Real s3(1, w), t3 = q, m3 = q * q2;
    while (abs(t3) >= tol) {
        s3 = s3 + 2 * t3;
        t3 = t3 * m3;
        m3 = m3 * q2;
    }
    Real theta2 = 2 * exp(-pis / 4) * s2;
    Real ratio = theta2 / s3;
    return ratio * ratio;
}

Real lambda_star_bisect(const Rat& r, const Ctx& c) {
    Ctx w = c.boosted(30);
    Real srt = sqrt(Real(r, w));
    Real u_lo = -pi_reference(w) * srt;           // k = exp(u_lo): K'/K > sqrt(r)
    Real u_hi = log(Real(Rat(1023, 1024), w));    // k near 1:    K'/K < sqrt(r)
    Real width_tol = pow10(-(c.digits + 10), w);
    while (u_hi - u_lo > width_tol) {
        Real um = (u_lo + u_hi) / 2;
        Real km = exp(um);
        if (ratio_Kprime_over_K(km, w) > srt)
            u_lo = um;
        else
            u_hi = um;
    }
    return round_to(exp((u_lo + u_hi) / 2), c);
}

}  // namespace

Real lambda_star(const Rat& r, const Ctx& c, LambdaMethod m) {
    if (r < 1) throw domain_error("lambda_star needs r >= 1");
    if (m == LambdaMethod::bisect) return lambda_star_bisect(r, c);
    return stabilized(c, [&](const Ctx& cc) { return lambda_star_theta_once(r, cc); });
}

Real elliptic_alpha(const Rat& r, const Ctx& c) {
    if (r < 1) throw domain_error("elliptic_alpha needs r >= 1");
    return stabilized(c, [&](const Ctx& cc) {
        Ctx w = cc.boosted(20);
        Real k = lambda_star(r, w);
        EllipticKE ke = elliptic_KE(k, w);
        Real srt = sqrt(Real(r, w));
        return pi_reference(w) / (4 * ke.K * ke.K) - srt * (ke.E / ke.K - 1);
    });
}

}  // namespace rpe
