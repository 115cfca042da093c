#pragma once

// Class numbers of imaginary quadratic fields by two independent routes:
// the Dirichlet character sum
//
//   h(-d) = -(w(d) / 2d) sum_{n=1}^{d-1} (-d|n) n,   w(3)=6, w(4)=4, else 2
//
// and a direct count of reduced primitive forms (A, B, C), B^2 - 4AC = -d,
// |B| <= A <= C, B >= 0 when |B| = A or A = C, gcd(A, B, C) = 1.

#include "rpe/exact.hpp"

namespace rpe {

// Kronecker symbol (a|n), the Jacobi symbol extended to all integers.
int kronecker(const Int& a, const Int& n);

// -d must be a discriminant: d >= 3 and d ≡ 0 or 3 (mod 4).
// The character sum must come out a positive integer (consistency_error
// otherwise). Meaningful for fundamental -d.
long class_number_sum(const Int& d);

// Reduced-forms count for the same discriminant convention.
long class_number_forms(const Int& d);

// True when -d is a fundamental discriminant: d ≡ 3 (mod 4) squarefree, or
// d = 4m with m squarefree and m ≡ 1 or 2 (mod 4).
bool is_fundamental_neg(const Int& d);

}  // namespace rpe
