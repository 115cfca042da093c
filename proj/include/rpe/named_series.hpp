#pragma once

// The concrete series and closed-form constants this library certifies:
//
//  * the Chudnovsky series, normalized to the level-1 shape with
//    z = -1/53360^3 (negative family at r = 163),
//  * Bagis-Glasser's conjectured radicals for J_163 and T_163 and the
//    matching radical for lambda*(163),
//  * the closed form of alpha(163) in terms of x = 4k^2(1-k^2),
//  * the r = 243 series whose z, a, b are real algebraic numbers given by
//    explicit integer polynomials,
//  * the cubic satisfied by 2^(1/4) x_163^(-1/24).

#include <string>

#include "rpe/polynomial.hpp"
#include "rpe/series_params.hpp"

namespace rpe {

// Exact rational data of the normalized Chudnovsky series
//   1/pi = sum t_n (a + b n) z^n,  pi = 426880 sqrt(10005) / (6 sum).
Rat chudnovsky_z();  // -1/53360^3
Rat chudnovsky_a();  // 13591409/6
Rat chudnovsky_b();  // 90856689

// The same series with the sqrt(10005) normalization folded in, so that the
// sum itself is 1/pi: a = 13591409/(426880 sqrt(10005)),
// b = 545140134/(426880 sqrt(10005)).
SeriesParams chudnovsky_params(const Ctx& c);

// Radical closed forms in the grammar of parse_radical.
std::string bg163_J_text();             // 2 root nodes
std::string bg163_T_text();             // 3 root nodes, shared sqrt(489)
std::string lambda163_radical_text();   // 5 root nodes

// alpha(163) = 13591409 sqrt(1-4x)/(426880 sqrt(10005))
//            + sqrt(163) sqrt(1-x)/(8x-2) + sqrt(163)/2,
// evaluated at the argument's precision.
Real alpha163_closed_form(const Real& x);

// A real algebraic number: 1-based index into the ascending real roots of
// an integer polynomial, with an optional sign flip applied afterwards.
struct AlgebraicConstant {
    IntPoly poly;
    int index = 1;
    bool negate = false;
};
Real value_of(const AlgebraicConstant& a, const Ctx& c);

// r = 243 series parameters. z is the first real root of a cubic; a and b
// are negated first roots of even degree-6 polynomials.
AlgebraicConstant r243_z();
AlgebraicConstant r243_a();
AlgebraicConstant r243_b();

// x^3 - 6x^2 + 4x - 2, satisfied by 2^(1/4) x_163^(-1/24).
IntPoly g163_cubic();

}  // namespace rpe
