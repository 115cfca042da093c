#pragma once

// Complete elliptic integrals via the arithmetic-geometric mean, the
// singular modulus lambda*(r), and the elliptic alpha function.
//
//   K(k)  = pi / (2 agm(1, k'))
//   E(k)  = K (1 - sum_{n>=0} 2^(n-1) c_n^2),  c_0 = k, c_n = (a_{n-1}-b_{n-1})/2
//   K'(k)/K(k) = agm(1, k') / agm(1, k)
//   lambda*(r) solves K'/K = sqrt(r);  alpha(r) = pi/(4K^2) - sqrt(r)(E/K - 1)
//
// pi itself comes from Brent-Salamin AGM iteration, so every 1/pi series
// check in this library is measured against an AGM-derived pi, not against
// any series.

#include "rpe/real.hpp"

namespace rpe {

// Brent-Salamin. Quadratic convergence, ~log2(bits) iterations.
Real pi_reference(const Ctx& c);

// Both operands must be positive. Computed at the operands' precision.
Real agm(const Real& a, const Real& b);

struct EllipticKE {
    Real K, E;
};

// k in [0, 1).
EllipticKE elliptic_KE(const Real& k, const Ctx& c);

// agm(1, k')/agm(1, k) for k in (0, 1). Strictly decreasing in k.
Real ratio_Kprime_over_K(const Real& k, const Ctx& c);

enum class LambdaMethod {
    theta,   // q-series of theta2/theta3 at q = exp(-pi sqrt(r)), escalated
    bisect,  // sign bisection of K'/K - sqrt(r) in u = ln k, bracket-certified
};

// Singular modulus, rational r >= 1.
Real lambda_star(const Rat& r, const Ctx& c, LambdaMethod m = LambdaMethod::theta);

// alpha(r), rational r >= 1. alpha(1) = 1/2 exactly.
Real elliptic_alpha(const Rat& r, const Ctx& c);

}  // namespace rpe
