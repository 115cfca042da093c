#pragma once

// Integer polynomials, exact real-root isolation (Sturm sequences over Q),
// and certified high-precision refinement.
//
// Text form of a polynomial: ascending decimal integer coefficients,
// space-separated, one polynomial per line ("-2 0 1" is x^2 - 2).

#include <string>
#include <string_view>
#include <vector>

#include "rpe/real.hpp"

namespace rpe {

class IntPoly {
  public:
    IntPoly() = default;  // zero polynomial
    explicit IntPoly(std::vector<Int> ascending);

    static IntPoly parse_line(std::string_view line);
    std::string to_line() const;

    const std::vector<Int>& coeffs() const { return c_; }
    long degree() const { return static_cast<long>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const Int& leading() const;

    Int content() const;    // gcd of coefficients, positive; 0 for zero poly
    IntPoly canonical() const;  // primitive with positive leading coefficient
    IntPoly derivative() const;

    Rat eval(const Rat& x) const;
    Real eval(const Real& x) const;  // Horner at the argument's precision
    int sign_at(const Rat& x) const;

    bool operator==(const IntPoly&) const = default;

  private:
    std::vector<Int> c_;  // ascending, no trailing zeros
};

// Open isolating intervals with rational endpoints that are never roots,
// ascending; one interval per distinct real root of p.
struct RootInterval {
    Rat lo, hi;
};
std::vector<RootInterval> isolate_real_roots(const IntPoly& p);

// Number of distinct real roots of p in (lo, hi].
long sturm_root_count(const IntPoly& p, const Rat& lo, const Rat& hi);

// Bisection into the Newton basin, then Newton with doubling precision.
// Certifies |p(rho)| < |p'(rho)| * 10^(-(P-20)) against the squarefree part
// and throws consistency_error if certification fails.
Real refine_root(const IntPoly& p, const RootInterval& iv, const Ctx& c);

// All distinct real roots, ascending, each certified as above.
std::vector<Real> real_roots(const IntPoly& p, const Ctx& c);

// 1-based index into the ascending distinct real roots.
struct RootSpec {
    IntPoly poly;
    int index;
};
Real root_by_spec(const RootSpec& s, const Ctx& c);

}  // namespace rpe
