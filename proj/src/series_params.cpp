#include "rpe/series_params.hpp"

namespace rpe {

Real x_from_k(const Real& k) {
    if (k.sgn() <= 0 || k >= 1L) throw domain_error("x_from_k needs k in (0, 1)");
    return 4 * k * k * (1 - k * k);
}

namespace {

// Shared scaffolding: x, alpha, sqrt(r) at a boosted context.
struct SingularData {
    Real x, alpha, srt;
};

SingularData singular_data(const Rat& r, const Ctx& w) {
    Real k = lambda_star(r, w);
    return {x_from_k(k), elliptic_alpha(r, w), sqrt(Real(r, w))};
}

std::vector<Real> positive_triple(const Rat& r, const Ctx& c) {
    Ctx w = c.boosted(20);
    SingularData s = singular_data(r, w);
    Real d = 4 - s.x;
    Real z = 27 * s.x * s.x / (d * d * d);
    if (abs(z) >= Real(1, w)) throw family_inapplicable("positive family: |z| >= 1");
    Real d32 = d * sqrt(d);
    Real a = (2 * d * s.alpha + (s.x - 4 + 4 * sqrt(1 - s.x)) * s.srt) / d32;
    Real b = 2 * (s.x + 8) * sqrt(1 - s.x) * s.srt / d32;
    return {z, a, b};
}

std::vector<Real> negative_triple(const Rat& r, const Ctx& c) {
    Ctx w = c.boosted(20);
    SingularData s = singular_data(r, w);
    Real u = 1 - 4 * s.x;
    if (u.sgn() <= 0) throw family_inapplicable("negative family: x >= 1/4");
    Real z = -27 * s.x / (u * u * u);
    if (abs(z) >= Real(1, w)) throw family_inapplicable("negative family: |z| >= 1");
    Real u32 = u * sqrt(u);
    Real a = (2 * u * s.alpha + (4 * s.x - 1 + sqrt(1 - s.x)) * s.srt) / (2 * u32);
    Real b = (1 + 8 * s.x) * sqrt(1 - s.x) * s.srt / u32;
    return {z, a, b};
}

SeriesParams finish(const Rat& r, Family f, std::vector<Real> t) {
    SeriesParams p{r, f, std::move(t[0]), std::move(t[1]), std::move(t[2])};
    if (abs(p.z) >= 1L) throw family_inapplicable("series params: |z| >= 1");
    if (p.b.sgn() <= 0) throw consistency_error("series params: b must be positive");
    return p;
}

}  // namespace

SeriesParams params_positive(const Rat& r, const Ctx& c) {
    if (r < 1) throw domain_error("params_positive needs r >= 1");
    return finish(r, Family::positive,
                  stabilized_vec(c, [&](const Ctx& cc) { return positive_triple(r, cc); }));
}

SeriesParams params_negative(const Rat& r, const Ctx& c) {
    if (r < 1) throw domain_error("params_negative needs r >= 1");
    return finish(r, Family::negative,
                  stabilized_vec(c, [&](const Ctx& cc) { return negative_triple(r, cc); }));
}

BGNormalized bg_J_T(const SeriesParams& p, const Ctx& c) {
    if (p.family != Family::positive) throw domain_error("bg_J_T needs positive-family params");
    Ctx w = c.boosted(10);
    Real srt = sqrt(Real(p.r, w));
    Real T = 1 - 3 * p.a / (srt * sqrt(1 - p.z));
    return {round_to(p.z, c), round_to(T, c)};
}

SeriesParams params_from_J_T(const Rat& r, const Real& J, const Real& T, const Ctx& c) {
    Ctx w = c.boosted(10);
    Real scale = sqrt(1 - round_to(J, w)) * sqrt(Real(r, w));
    Real a = scale * (1 - round_to(T, w)) / 3;
    Real b = 2 * scale;
    return finish(r, Family::positive, {round_to(J, c), round_to(a, c), round_to(b, c)});
}

Real borwein_f(const Rat& N, long n, const Ctx& c) {
    if (N < 1) throw domain_error("borwein_f needs N >= 1");
    // N = 1 gives x = 1 and alpha = sqrt(N) k^2 = 1/2, so both the constant
    // and the slope term vanish exactly; escalation would only compare noise.
    if (N == 1) return Real(0, c);
    return stabilized(c, [&](const Ctx& cc) {
        Ctx w = cc.boosted(20);
        Real k = lambda_star(N, w);
        Real x = x_from_k(k);
        Real alpha = elliptic_alpha(N, w);
        Real srtN = sqrt(Real(N, w));
        Real inv_3s3 = 1 / (3 * sqrt(Real(3, w)));
        Real f0 = inv_3s3 * (srtN * sqrt(1 - x) + 2 * (alpha - srtN * k * k) * (4 / x - 1));
        Real slope = srtN * (2 * inv_3s3) * (8 / x + 1) * sqrt(1 - x);
        return f0 + n * slope;
    });
}

Real digits_per_term(const Real& z) {
    Real az = abs(z);
    if (az.is_zero() || az >= 1L) throw domain_error("digits_per_term needs 0 < |z| < 1");
    return -log10(az);
}

}  // namespace rpe
