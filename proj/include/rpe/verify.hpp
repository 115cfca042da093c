#pragma once

// End-to-end certification suites. Each suite re-derives one of the named
// closed forms by at least two independent routes and reports per-check
// residuals against the uniform tolerance 10^(-(P-20)).
//
// Structural checks (polynomial recovered exactly, branch assignment found)
// are encoded as residual 0 or 1 against tolerance 1/2 so that the
// invariant pass == (residual < tolerance) holds for every check.
//
// Digits-per-term checks measure the realized rate from a partial sum whose
// tail is still visible at P digits: N' = max(3, floor((P-80)/nominal)),
// realized = -log10 |pi * S_N' - 1| / N', matched against the claimed rate
// with a +-0.5 window.
//
// Branch-search outcomes are metadata, not pass/fail: the binding checks
// are dual-route agreement and the fixed-point identity.

#include <string>
#include <utility>
#include <vector>

#include "rpe/real.hpp"

namespace rpe {

struct CheckResult {
    std::string name;
    Real residual;
    Real tolerance;
    bool pass = false;  // always residual < tolerance
    long precision = 0;
};

struct VerificationReport {
    std::string suite;
    long precision = 0;
    std::vector<CheckResult> checks;
    std::vector<std::pair<std::string, std::string>> metadata;

    bool all_passed() const;
};

// lambda*(163): theta-series route vs bisection route, the fixed point
// -27x/(1-4x)^3 = -1/53360^3, and (as metadata) the branch assignment under
// which the printed radical matches the solver value.
VerificationReport verify_lambda163(const Ctx& c);

// alpha(163): AGM route vs the printed closed form at x = 4k^2(1-k^2).
VerificationReport verify_alpha163(const Ctx& c);

// J_163 and T_163 radicals against the positive family at r = 163, plus the
// series they parameterize: sum * pi = 1, and the ~32 digits-per-term rate.
VerificationReport verify_bg163(const Ctx& c);

// r = 243 series: polynomial-root parameters sum to 1/pi, match the numeric
// negative family, the cubic for z is recovered by lattice recognition, and
// the rate is ~18 digits per term.
VerificationReport verify_r243(const Ctx& c);

// x_hat = 2^(1/4) x_163^(-1/24) satisfies x^3-6x^2+4x-2, and the cubic's
// root maps back to sqrt(1-x) within tolerance.
VerificationReport verify_g163(const Ctx& c);

// All suites, fixed order: lambda163, alpha163, bg163, r243, g163.
std::vector<VerificationReport> verify_all(const Ctx& c);

// Line-oriented key/value rendering, one check per line. Deterministic for
// fixed precision.
std::string report_text(const VerificationReport& r);

// JSON with fields {name, residual (decimal string), tolerance, pass,
// precision} per check plus suite/precision/overall/metadata.
std::string report_json(const VerificationReport& r);
std::string reports_json(const std::vector<VerificationReport>& rs);

}  // namespace rpe
