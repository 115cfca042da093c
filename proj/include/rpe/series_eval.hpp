#pragma once

// Evaluation of level-1 series sum t_n (a + b n) z^n with
// t_n = (1/6)_n (1/2)_n (5/6)_n / n!^3, term ratio
//
//   t_{n+1}/t_n = z (6n+1)(6n+3)(6n+5) / (216 (n+1)^3),
//
// plus the exact-rational Chudnovsky instance by binary splitting, and two
// hypergeometric identity checks used as series-level cross-validation.

#include <string>

#include "rpe/series_params.hpp"

namespace rpe {

struct TruncationBound {
    long terms;
    Real bound;  // rigorous tail bound after `terms` terms
};

// Tail majorant |t_N| (|a| + |b| N + |b|/(1-|z|)) / (1-|z|).
TruncationBound truncation_bound(const SeriesParams& p, long terms);

// Sum with N picked so the tail bound is below 10^(-target_digits).
Real eval_level1_series(const SeriesParams& p, long target_digits, long* terms_used = nullptr);

// Plain forward partial sum of the first `terms` terms, no tail logic.
Real level1_partial_sum(const SeriesParams& p, long terms, const Ctx& c);

// pi to `digits` significant digits from the Chudnovsky series by integer
// binary splitting over [0, N), N = ceil(digits/14.18) + 2. The split tree
// is a fixed function of N, so the result is byte-identical for any worker
// count; workers > 1 evaluates independent subtrees concurrently.
std::string chudnovsky_pi(long digits, unsigned workers = 1);

// Partial sum of the same series through the binary-splitting route,
// as a Real: sum_{n<terms} t_n (13591409/6 + 90856689 n) (-1/53360^3)^n.
Real chudnovsky_partial_sum(long terms, const Ctx& c);

// |sum_n ((1/2)_n / n!)^3 x^n - (1-4x)^(-1/2) sum_n t_n w^n|,
// w = -27x/(1-4x)^3. Needs |x| < 1, x < 1/4, |w| < 1. The identity holds
// on the branch through x = 0: the cubic map folds at x = -1/8 (w = 1
// there), and for x below the fold the two sides are genuinely different
// numbers, so the residual comes back O(1) rather than rounding-small.
Real bailey_transform_residual(const Real& x, const Ctx& c);

// |sum_n ((1/2)_n / n!)^3 x^n - 4 K(m)^2 / pi^2|, m = sqrt((1-sqrt(1-x))/2).
// Needs 0 <= x < 1.
Real k2_generating_residual(const Real& x, const Ctx& c);

}  // namespace rpe
