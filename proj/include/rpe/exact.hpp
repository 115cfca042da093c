#pragma once

// Exact integer / rational layer. GMP classes are used directly; this header
// only adds the few helpers the rest of the library keeps reaching for.

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "rpe/error.hpp"

namespace rpe {

using Int = mpz_class;
using Rat = mpq_class;

inline Int ipow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Int pow10z(unsigned long e) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
    return r;
}

inline Int parse_int(std::string_view s) {
    try {
        return Int(std::string(s));
    } catch (const std::invalid_argument&) {
        throw eval_error("not an integer literal: '" + std::string(s) + "'");
    }
}

// Accepts "p" or "p/q", q > 0 after canonicalization.
inline Rat parse_rat(std::string_view s) {
    try {
        Rat r{std::string(s)};
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw eval_error("not a rational literal: '" + std::string(s) + "'");
    }
}

// Round to nearest integer, ties toward +infinity (only used where the value
// is provably far from a tie).
inline Int round_rat(const Rat& x) {
    Int num = x.get_num(), den = x.get_den();
    Int twice = 2 * num + den;  // floor((2n+d)/(2d)) = round(n/d) for den > 0
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), twice.get_mpz_t(), Int(2 * den).get_mpz_t());
    return q;
}

}  // namespace rpe
