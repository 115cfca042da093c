#include "rpe/numtheory.hpp"

namespace rpe {

int kronecker(const Int& a, const Int& n) {
    return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t());
}

namespace {

unsigned long checked_small_d(const Int& d) {
    if (d < 3) throw domain_error("discriminant parameter needs d >= 3");
    unsigned long r = mpz_fdiv_ui(d.get_mpz_t(), 4);
    if (r != 0 && r != 3) throw domain_error("-d is not a discriminant: need d ≡ 0 or 3 (mod 4)");
    if (!d.fits_ulong_p() || d.get_ui() > 100'000'000ul)
        throw range_error("discriminant too large for enumeration");
    return d.get_ui();
}

long unit_count(unsigned long d) { return d == 3 ? 6 : d == 4 ? 4 : 2; }

}  // namespace

long class_number_sum(const Int& d) {
    unsigned long du = checked_small_d(d);
    Int minus_d = -d;
    Int s = 0;
    for (unsigned long n = 1; n < du; ++n) {
        int chi = mpz_kronecker_ui(minus_d.get_mpz_t(), n);
        if (chi == 1)
            s += n;
        else if (chi == -1)
            s -= n;
    }
    Int num = -unit_count(du) * s;
    Int den = 2 * d;
    Int h, rem;
    mpz_tdiv_qr(h.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (rem != 0) throw consistency_error("class number sum is not integral");
    if (h <= 0) throw consistency_error("class number sum is not positive");
    return h.get_si();
}

long class_number_forms(const Int& d) {
    unsigned long du = checked_small_d(d);
    long count = 0;
    for (unsigned long A = 1; 3 * A * A <= du; ++A) {
        // B ≡ d (mod 2), -A < B <= A
        long b0 = (du % 2 == 0) ? 0 : 1;
        for (long B = b0; B <= static_cast<long>(A); B += 2) {
            for (int sign = 0; sign < 2; ++sign) {
                long Bs = sign ? -B : B;
                if (sign && (B == 0 || B == static_cast<long>(A))) continue;  // |B| = A needs B >= 0
                unsigned long num = static_cast<unsigned long>(B) * B + du;
                if (num % (4 * A) != 0) continue;
                unsigned long C = num / (4 * A);
                if (C < A) continue;
                if (Bs < 0 && C == A) continue;  // A = C needs B >= 0
                Int g = gcd(gcd(Int(A), Int(B)), Int(C));
                if (g == 1) ++count;
            }
        }
    }
    return count;
}

bool is_fundamental_neg(const Int& d) {
    if (d < 3) return false;
    auto squarefree = [](const Int& n) {
        Int m = n;
        for (Int p = 2; p * p <= m; ++p) {
            if (m % p == 0) {
                m /= p;
                if (m % p == 0) return false;
            }
        }
        return true;
    };
    unsigned long r = mpz_fdiv_ui(d.get_mpz_t(), 4);
    if (r == 3) return squarefree(d);
    if (r == 0) {
        Int m = d / 4;
        unsigned long mr = mpz_fdiv_ui(m.get_mpz_t(), 4);
        return (mr == 1 || mr == 2) && squarefree(m);
    }
    return false;
}

}  // namespace rpe
