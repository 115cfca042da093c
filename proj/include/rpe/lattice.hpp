#pragma once

// Exact-integer LLL reduction (delta = 99/100) and algebraic-number
// recognition: find a small integer polynomial q with q(v) ~ 0 from the
// lattice spanned by rows [round(10^m v^i) | e_i], m = P - 10.

#include <optional>
#include <vector>

#include "rpe/polynomial.hpp"
#include "rpe/real.hpp"

namespace rpe {

using IntVec = std::vector<Int>;
using IntMat = std::vector<IntVec>;

// Rows are basis vectors; all rows must have equal length and be linearly
// independent (domain_error otherwise). Lovasz parameter  delta = 99/100.
IntMat lll_reduce(IntMat basis);

// Minimal polynomial of v up to degree max_degree, or nullopt. The result
// is primitive with a positive leading coefficient. A candidate q from the
// reduced lattice is accepted only when
//   |q(v)| < 10^(-P/2)                      (smallness), and
//   |q(v)| < ||q||_inf * 10^(-m) * 10^(-5)  (significance: true relations sit
//                                            far below the rounding floor of
//                                            the scaled lattice, LLL noise
//                                            vectors sit at it),
// with P = min(v.digits(), c.digits). Degrees are tried in increasing
// order, so the reported polynomial has minimal degree.
std::optional<IntPoly> recognize_min_poly(const Real& v, int max_degree, const Ctx& c);

}  // namespace rpe
