#include "rpe/verify.hpp"

#include <json.hpp>

#include "rpe/elliptic.hpp"
#include "rpe/error.hpp"
#include "rpe/lattice.hpp"
#include "rpe/named_series.hpp"
#include "rpe/radical.hpp"
#include "rpe/series_eval.hpp"
#include "rpe/series_params.hpp"

namespace rpe {

namespace {

// Stored residual/tolerance are exactly the compared values, so the
// pass == (residual < tolerance) invariant survives serialization.
CheckResult make_check(std::string name, const Real& residual, const Real& tolerance, long p) {
    CheckResult r;
    r.name = std::move(name);
    r.residual = round_to(residual, Ctx(30));
    r.tolerance = round_to(tolerance, Ctx(30));
    r.pass = r.residual < r.tolerance;
    r.precision = p;
    return r;
}

CheckResult structural_check(std::string name, bool ok, long p) {
    Ctx c30(30);
    return make_check(std::move(name), Real(ok ? 0L : 1L, c30), Real(Rat(1, 2), c30), p);
}

Real uniform_tol(long p) { return pow10(-(p - 20), Ctx(30)); }

void require_digits(const Ctx& c) {
    if (c.digits < 40) throw domain_error("verification needs at least 40 digits");
}

// Realized digits per term: the slope of -log10 |pi S_N - 1| between two
// truncations whose tails are still visible at P digits. The two-point
// slope cancels the slowly varying term prefactor that would bias a
// single-point measurement by several tenths at small N.
CheckResult rate_check(const std::string& suite, const SeriesParams& p, long claimed,
                       const Ctx& c, std::vector<std::pair<std::string, std::string>>& meta) {
    Ctx w = c.boosted(10);
    Real nominal = digits_per_term(p.z);
    double nom = mpfr_get_d(nominal.mp(), MPFR_RNDN);
    long n2 = std::max(3L, static_cast<long>(static_cast<double>(c.digits - 80) / nom));
    long n1 = std::max(1L, n2 - 6);
    Real pi = pi_reference(w);
    Real r1 = abs(pi * level1_partial_sum(p, n1, w) - 1L);
    Real r2 = abs(pi * level1_partial_sum(p, n2, w) - 1L);
    Real realized = (log10(r1) - log10(r2)) / (n2 - n1);
    meta.emplace_back(suite + ".rate_nominal", nominal.str(12));
    meta.emplace_back(suite + ".rate_realized", realized.str(12));
    meta.emplace_back(suite + ".rate_terms",
                      std::to_string(n1) + ".." + std::to_string(n2));
    return make_check(suite + ".digits_per_term", abs(realized - claimed),
                      Real(Rat(1, 2), Ctx(30)), c.digits);
}

Real series_unit_residual(const SeriesParams& p, const Ctx& c, long* terms_used) {
    Real s = eval_level1_series(p, c.digits - 10, terms_used);
    return abs(pi_reference(c.boosted(10)) * s - 1L);
}

}  // namespace

bool VerificationReport::all_passed() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

VerificationReport verify_lambda163(const Ctx& c) {
    require_digits(c);
    long P = c.digits;
    VerificationReport rep{"lambda163", P, {}, {}};
    Real tol = uniform_tol(P);

    Real lt = lambda_star(163, c, LambdaMethod::theta);
    Real lb = lambda_star(163, c, LambdaMethod::bisect);
    rep.checks.push_back(make_check("lambda163.theta_vs_bisect", abs(lt - lb), tol, P));

    Ctx w = c.boosted(10);
    Real k = lambda_star(163, w, LambdaMethod::theta);
    Real x = x_from_k(k);
    Real z = -(x * 27L) / pow_int(1 - x * 4L, 3);
    Real fixed_point = abs(z + Real(Rat(1, ipow(Int(53360), 3)), w));
    rep.checks.push_back(make_check("lambda163.fixed_point", fixed_point, tol, P));

    RadicalExpr expr = parse_radical(lambda163_radical_text());
    auto br = branch_search(expr, lt, c);
    rep.metadata.emplace_back("lambda163.radical_branch",
                              br ? format_assignment(*br) : "no principal-branch match");
    if (br) {
        Complex v = eval_radical(expr, *br, c);
        rep.metadata.emplace_back("lambda163.radical_residual",
                                  abs(v - Complex(lt)).str(3));
    }
    return rep;
}

VerificationReport verify_alpha163(const Ctx& c) {
    require_digits(c);
    long P = c.digits;
    VerificationReport rep{"alpha163", P, {}, {}};

    Real agm_route = elliptic_alpha(163, c);
    Ctx w = c.boosted(10);
    Real x = x_from_k(lambda_star(163, w));
    Real closed = alpha163_closed_form(x);
    rep.checks.push_back(
        make_check("alpha163.closed_form", abs(agm_route - closed), uniform_tol(P), P));
    return rep;
}

VerificationReport verify_bg163(const Ctx& c) {
    require_digits(c);
    long P = c.digits;
    VerificationReport rep{"bg163", P, {}, {}};
    Real tol = uniform_tol(P);
    Ctx w = c.boosted(10);

    SeriesParams pos = params_positive(163, w);
    BGNormalized bg = bg_J_T(pos, w);

    RadicalExpr jexpr = parse_radical(bg163_J_text());
    RadicalExpr texpr = parse_radical(bg163_T_text());

    auto jbr = branch_search(jexpr, pos.z, c);
    Complex jval = jbr ? eval_radical(jexpr, *jbr, w) : eval_radical(jexpr, w);
    rep.metadata.emplace_back("bg163.J_branch",
                              jbr ? format_assignment(*jbr) : "no principal-branch match");
    rep.checks.push_back(make_check("bg163.J_match", abs(jval - Complex(pos.z)), tol, P));

    auto tbr = branch_search(texpr, bg.T, c);
    Complex tval = tbr ? eval_radical(texpr, *tbr, w) : eval_radical(texpr, w);
    rep.metadata.emplace_back("bg163.T_branch",
                              tbr ? format_assignment(*tbr) : "no principal-branch match");
    rep.checks.push_back(make_check("bg163.T_match", abs(tval - Complex(bg.T)), tol, P));

    SeriesParams from_radicals = params_from_J_T(163, jval.re, tval.re, w);
    long terms = 0;
    Real unit = series_unit_residual(from_radicals, c, &terms);
    rep.metadata.emplace_back("bg163.series_terms", std::to_string(terms));
    rep.checks.push_back(make_check("bg163.series_unit", unit, tol, P));

    rep.checks.push_back(rate_check("bg163", from_radicals, 32, c, rep.metadata));
    return rep;
}

VerificationReport verify_r243(const Ctx& c) {
    require_digits(c);
    long P = c.digits;
    VerificationReport rep{"r243", P, {}, {}};
    Real tol = uniform_tol(P);
    Ctx w = c.boosted(10);

    SeriesParams p;
    p.r = 243;
    p.family = Family::negative;
    p.z = value_of(r243_z(), w);
    p.a = value_of(r243_a(), w);
    p.b = value_of(r243_b(), w);

    long terms = 0;
    Real unit = series_unit_residual(p, c, &terms);
    rep.metadata.emplace_back("r243.series_terms", std::to_string(terms));
    rep.checks.push_back(make_check("r243.series_unit", unit, tol, P));

    SeriesParams numeric = params_negative(243, w);
    rep.checks.push_back(make_check("r243.z_match", abs(p.z - numeric.z), tol, P));
    rep.checks.push_back(make_check("r243.a_match", abs(p.a - numeric.a), tol, P));
    rep.checks.push_back(make_check("r243.b_match", abs(p.b - numeric.b), tol, P));

    auto q = recognize_min_poly(p.z, 3, c);
    bool recovered = q && *q == r243_z().poly.canonical();
    rep.metadata.emplace_back("r243.recognized",
                              q ? q->to_line() : "no relation found");
    rep.checks.push_back(structural_check("r243.recognize_cubic", recovered, P));

    rep.checks.push_back(rate_check("r243", p, 18, c, rep.metadata));
    return rep;
}

VerificationReport verify_g163(const Ctx& c) {
    require_digits(c);
    long P = c.digits;
    VerificationReport rep{"g163", P, {}, {}};
    Real tol = uniform_tol(P);
    Ctx w = c.boosted(10);

    Real x = x_from_k(lambda_star(163, w));
    Real xhat = nth_root(Real(2L, w), 4) / nth_root(x, 24);
    rep.metadata.emplace_back("g163.xhat", xhat.str(20));
    rep.checks.push_back(
        make_check("g163.cubic_residual", abs(g163_cubic().eval(xhat)), tol, P));

    // Back through the cubic: its single real root, divided by 2^(1/4),
    // is x^(-1/24), so sqrt(1 - root^(-24) * 64) must reproduce sqrt(1-x).
    std::vector<Real> roots = real_roots(g163_cubic(), w);
    Real ghat = roots.at(0) / nth_root(Real(2L, w), 4);
    Real x_back = 1L / pow_int(ghat, 24);
    Real roundtrip = abs(sqrt(1 - x_back) - sqrt(1 - x));
    rep.checks.push_back(make_check("g163.roundtrip", roundtrip, tol, P));
    return rep;
}

std::vector<VerificationReport> verify_all(const Ctx& c) {
    return {verify_lambda163(c), verify_alpha163(c), verify_bg163(c), verify_r243(c),
            verify_g163(c)};
}

std::string report_text(const VerificationReport& r) {
    std::string out;
    out += "suite: " + r.suite + "\n";
    out += "precision: " + std::to_string(r.precision) + "\n";
    for (const auto& ck : r.checks) {
        out += "check: name=" + ck.name + " residual=" + ck.residual.str(3) +
               " tolerance=" + ck.tolerance.str(3) + " pass=" + (ck.pass ? "true" : "false") +
               " precision=" + std::to_string(ck.precision) + "\n";
    }
    for (const auto& [k, v] : r.metadata) out += "meta: " + k + "=" + v + "\n";
    out += "overall: " + std::string(r.all_passed() ? "pass" : "fail") + "\n";
    return out;
}

namespace {

nlohmann::ordered_json report_obj(const VerificationReport& r) {
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& ck : r.checks) {
        checks.push_back({{"name", ck.name},
                          {"residual", ck.residual.str(6)},
                          {"tolerance", ck.tolerance.str(6)},
                          {"pass", ck.pass},
                          {"precision", ck.precision}});
    }
    nlohmann::ordered_json meta = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.metadata) meta[k] = v;
    return {{"suite", r.suite},
            {"precision", r.precision},
            {"overall", r.all_passed()},
            {"checks", checks},
            {"metadata", meta}};
}

}  // namespace

std::string report_json(const VerificationReport& r) { return report_obj(r).dump(2) + "\n"; }

std::string reports_json(const std::vector<VerificationReport>& rs) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : rs) arr.push_back(report_obj(r));
    return arr.dump(2) + "\n";
}

}  // namespace rpe
