#pragma once

// Level-1 Ramanujan-type series data. Both families map the singular value
// data (lambda*(r), alpha(r)) through x = 4k^2(1-k^2) to a triple (z, a, b)
// with
//
//   1/pi = sum_{n>=0} (1/6)_n (1/2)_n (5/6)_n / n!^3 * (a + b n) * z^n
//
// positive family:  z = 27 x^2 / (4-x)^3
//   a = (2(4-x) alpha + (x-4+4 sqrt(1-x)) sqrt(r)) / (4-x)^(3/2)
//   b = 2 (x+8) sqrt(1-x) sqrt(r) / (4-x)^(3/2)
// negative family:  z = -27 x / (1-4x)^3   (needs x < 1/4)
//   a = (2(1-4x) alpha + (4x-1+sqrt(1-x)) sqrt(r)) / (2 (1-4x)^(3/2))
//   b = (1+8x) sqrt(1-x) sqrt(r) / (1-4x)^(3/2)
//
// The (J, T) form rescales the positive family so the closed-form constants
// stay compact: J = z, T = 1 - 3a / (sqrt(r) sqrt(1-z)).

#include "rpe/elliptic.hpp"
#include "rpe/real.hpp"

namespace rpe {

enum class Family { positive, negative };

struct SeriesParams {
    Rat r;
    Family family;
    Real z, a, b;
};

// 4k^2(1-k^2) for k in (0, 1). Hits 1 exactly at k = 1/sqrt(2).
Real x_from_k(const Real& k);

// Throw family_inapplicable when the family degenerates at r (|z| >= 1, or
// x >= 1/4 for the negative family).
SeriesParams params_positive(const Rat& r, const Ctx& c);
SeriesParams params_negative(const Rat& r, const Ctx& c);

struct BGNormalized {
    Real J, T;
};

// Positive-family params only.
BGNormalized bg_J_T(const SeriesParams& p, const Ctx& c);

// Inverse map: z = J, a = sqrt(1-J) sqrt(r) (1-T)/3, b = 2 sqrt(1-J) sqrt(r).
SeriesParams params_from_J_T(const Rat& r, const Real& J, const Real& T, const Ctx& c);

// Borwein-style linear coefficient f_n = f_0 + n * slope built from
// x = G_N^(-24) = 4k^2(1-k^2), k = lambda*(N):
//   f_0   = (1/(3 sqrt(3))) (sqrt(N) sqrt(1-x) + 2 (alpha - sqrt(N) k^2)(4/x - 1))
//   slope = sqrt(N) (2/(3 sqrt(3))) (8/x + 1) sqrt(1-x)
// Satisfies f_n * sqrt(J) = a + b n against the positive family at r = N.
Real borwein_f(const Rat& N, long n, const Ctx& c);

// -log10 |z| for 0 < |z| < 1.
Real digits_per_term(const Real& z);

}  // namespace rpe
