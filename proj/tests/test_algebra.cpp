#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "rpe/elliptic.hpp"
#include "rpe/lattice.hpp"
#include "rpe/named_series.hpp"
#include "rpe/polynomial.hpp"
#include "rpe/radical.hpp"

using namespace rpe;

namespace {

Real R(const std::string& s, long digits) { return Real::parse(s, Ctx(digits)); }

IntPoly P(const char* line) { return IntPoly::parse_line(line); }

const char* kXhat = "5.318628217750185659109680153318022467722";
const char* kJ163 = "2.5070404225226733832068477568811785342852972329328e-32";

}  // namespace

TEST_CASE("polynomial line format round-trips, ascending coefficients") {
    IntPoly p = P("-2 0 1");
    CHECK(p.degree() == 2);
    CHECK(p.to_line() == "-2 0 1");
    CHECK(p.coeffs()[0] == -2);
    CHECK(p.leading() == 1);
    CHECK(P("  3  0 1 ").to_line() == "3 0 1");  // whitespace is free
    CHECK(IntPoly(std::vector<Int>{Int(1), Int(2), Int(0), Int(0)}).degree() == 1);
    CHECK(P("0 0").is_zero());
    IntPoly zero;
    CHECK(zero.degree() == -1);
    CHECK(zero.to_line() == "0");
    CHECK(zero.content() == 0);
    CHECK_THROWS_AS(zero.leading(), domain_error);
    CHECK_THROWS_AS(P(""), eval_error);
    CHECK_THROWS_AS(P("1 x 2"), eval_error);
}

TEST_CASE("content, canonical form and derivative") {
    CHECK(P("6 -9 12").content() == 3);
    CHECK(P("-4 0 2").canonical() == P("-2 0 1"));
    CHECK(P("-3 3").canonical() == P("-1 1"));  // sign fixed by the leader
    CHECK(P("3 -3").canonical() == P("-1 1"));
    CHECK(P("-2 0 1").canonical() == P("-2 0 1"));
    CHECK(P("5 -2 0 7").derivative() == P("-2 0 21"));
    CHECK(P("42").derivative().is_zero());
    CHECK(P("-2 0 1").eval(Rat(3, 2)) == Rat(1, 4));
    CHECK(P("-2 0 1").sign_at(Rat(0)) == -1);
    CHECK(P("-2 0 1").sign_at(Rat(2)) == 1);
    CHECK(P("-4 0 1").sign_at(Rat(2)) == 0);
    Ctx c(60);
    CHECK(abs(P("-2 0 1").eval(sqrt(Real(2, c)))) < pow10(-57, c));
}

TEST_CASE("root isolation returns ascending non-root-bounded intervals") {
    auto ivs = isolate_real_roots(P("-2 0 1"));
    REQUIRE(ivs.size() == 2);
    CHECK(ivs[0].hi <= ivs[1].lo);
    CHECK(ivs[0].lo < ivs[0].hi);
    // Distinct roots only: (x^2-2)(x-1)^2 still isolates three.
    CHECK(isolate_real_roots(P("-2 4 -1 -2 1")).size() == 3);
    CHECK(isolate_real_roots(P("1 0 1")).empty());  // x^2 + 1
    CHECK(isolate_real_roots(P("5")).empty());
    CHECK_THROWS_AS(isolate_real_roots(IntPoly()), domain_error);
}

TEST_CASE("sturm counting is half-open on the right") {
    IntPoly p = P("-4 0 1");  // roots -2, 2
    CHECK(sturm_root_count(p, Rat(0), Rat(2)) == 1);   // includes hi
    CHECK(sturm_root_count(p, Rat(-2), Rat(2)) == 1);  // excludes lo
    CHECK(sturm_root_count(p, Rat(-3), Rat(3)) == 2);
    CHECK(sturm_root_count(p, Rat(3), Rat(5)) == 0);
    CHECK_THROWS_AS(sturm_root_count(p, Rat(2), Rat(2)), domain_error);
    CHECK_THROWS_AS(sturm_root_count(IntPoly(), Rat(0), Rat(1)), domain_error);
}

TEST_CASE("refinement certifies roots and nails rational ones exactly") {
    Ctx c(50);
    auto roots = real_roots(P("-2 0 1"), c);
    REQUIRE(roots.size() == 2);
    CHECK(rel_agree(roots[1], sqrt(Real(2, c)), 48));
    CHECK(roots[0] == -roots[1]);
    CHECK(real_roots(P("-1 2"), c)[0] == Real(Rat(1, 2), c));

    // Repeated roots refine against the squarefree part.
    auto mixed = real_roots(P("-2 4 -1 -2 1"), c);  // (x^2-2)(x-1)^2
    REQUIRE(mixed.size() == 3);
    CHECK(mixed[1] == Real(1, c));

    auto wilkinson = real_roots(P("-120 274 -225 85 -15 1"), c);
    REQUIRE(wilkinson.size() == 5);
    for (long k = 1; k <= 5; ++k) CHECK(wilkinson[k - 1] == Real(k, c));

    CHECK_THROWS_AS(refine_root(P("-2 0 1"), RootInterval{Rat(2), Rat(3)}, c),
                    domain_error);
}

TEST_CASE("root_by_spec uses 1-based ascending indexing") {
    Ctx c(40);
    CHECK(root_by_spec(RootSpec{P("-2 0 1"), 2}, c) > 0);
    CHECK(root_by_spec(RootSpec{P("-2 0 1"), 1}, c) < 0);
    CHECK_THROWS_AS(root_by_spec(RootSpec{P("-2 0 1"), 3}, c), domain_error);
    CHECK_THROWS_AS(root_by_spec(RootSpec{P("-2 0 1"), 0}, c), domain_error);
    Real xhat = root_by_spec(RootSpec{P("-2 4 -6 1"), 1}, c);
    CHECK(rel_agree(xhat, R(kXhat, 40), 38));
    CHECK(real_roots(P("-2 4 -6 1"), c).size() == 1);
}

TEST_CASE("radical grammar: constants, arithmetic, nesting") {
    Ctx c(40);
    auto val = [&](const char* text) { return eval_radical(parse_radical(text), c); };
    CHECK(val("7/3").re == Real(Rat(7, 3), c));
    CHECK(val("(add 1 2 3)").re == Real(6, c));
    CHECK(val("(mul 2 3 4)").re == Real(24, c));
    CHECK(val("(sub 5 2)").re == Real(3, c));
    CHECK(val("(div 7 2)").re == Real(Rat(7, 2), c));
    CHECK(val("(neg 4)").re == Real(-4, c));
    CHECK(val("(pow 3 4)").re == Real(81, c));
    CHECK(val("(pow 2 -2)").re == Real(Rat(1, 4), c));
    CHECK(val("(sqrt 4)").re == Real(2, c));
    CHECK(val("(cbrt -8)").re == Real(-2, c));
    CHECK(val("(root 32 5)").re == Real(2, c));
    CHECK(val("(root 2 1)").re == Real(2, c));
    CHECK(val("(sqrt (add 1 (mul 4 2)))").re == Real(3, c));
    Complex i2 = val("(sqrt -4)");
    CHECK(rel_agree(i2.im, Real(2, c), 38));
    CHECK(abs(i2.re) < pow10(-35, c));
}

TEST_CASE("root ids are assigned in textual parse order") {
    RadicalExpr e = parse_radical("(root (sqrt 16) 4)");
    REQUIRE(e.root_count() == 2);
    CHECK(e.root_degrees[0] == 4);  // the outer root is written first
    CHECK(e.root_degrees[1] == 2);
    RadicalExpr f = parse_radical("(let X (cbrt 55) (div (sqrt (add -1 (mul 80040 X))) 2))");
    REQUIRE(f.root_count() == 2);
    CHECK(f.root_degrees[0] == 3);  // the binding precedes the body
    CHECK(f.root_degrees[1] == 2);
    Complex v = eval_radical(f, Ctx(40));
    CHECK(v.re.str(20) == "275.85653651823341612");
}

TEST_CASE("let binds one shared node, and shadowing restores") {
    Ctx c(50);
    RadicalExpr shared = parse_radical("(let X (sqrt 2) (sub (mul X X) X))");
    CHECK(shared.root_count() == 1);  // both uses are the same node
    CHECK(rel_agree(eval_radical(shared, {0}, c).re, 2 - sqrt(Real(2, c)), 48));
    CHECK(rel_agree(eval_radical(shared, {1}, c).re, 2 + sqrt(Real(2, c)), 48));
    RadicalExpr spelled = parse_radical("(sub (mul (sqrt 2) (sqrt 2)) (sqrt 2))");
    CHECK(spelled.root_count() == 3);
    Complex six = eval_radical(parse_radical("(let X 2 (mul (let X 3 X) X))"), c);
    CHECK(six.re == Real(6, c));
}

TEST_CASE("radical parse and eval failures are eval_errors") {
    Ctx c(40);
    for (const char* bad : {"", "(sqrt 2", "(sqrt 2))", "()", "(frob 2 2)", "(sqrt)",
                            "(div 1)", "Y", "(let 5 2 2)", "(root 2 0)", "(root 2 65)",
                            "(pow 2 99999999999999999999)", "(add 1 2("})
        CHECK_THROWS_AS(parse_radical(bad), eval_error);
    CHECK_THROWS_AS(eval_radical(parse_radical("(div 1 (sub (sqrt 2) (sqrt 2)))"), c),
                    eval_error);
    CHECK_THROWS_AS(eval_radical(parse_radical("(pow (sub (sqrt 2) (sqrt 2)) -1)"), c),
                    eval_error);
    RadicalExpr two = parse_radical("(mul (sqrt 2) (sqrt 3))");
    CHECK_THROWS_AS(eval_radical(two, {0}, c), eval_error);       // wrong length
    CHECK_THROWS_AS(eval_radical(two, {7, 0}, c), eval_error);    // branch >= n
}

TEST_CASE("branch search walks assignments lexicographically") {
    Ctx c(40);
    RadicalExpr e = parse_radical("(mul (sqrt 4) (sqrt 9))");
    auto plus = branch_search(e, Real(6, c), c);
    REQUIRE(plus.has_value());
    CHECK(*plus == BranchAssignment{0, 0});
    auto minus = branch_search(e, Real(-6, c), c);
    REQUIRE(minus.has_value());
    CHECK(*minus == BranchAssignment{0, 1});  // last id increments first
    CHECK(format_assignment(*minus) == "(0,1)");
    CHECK_FALSE(branch_search(e, Real(5, c), c).has_value());

    RadicalExpr s4 = parse_radical("(sqrt 4)");
    auto neg = branch_search(s4, Real(-2, c), c);
    REQUIRE(neg.has_value());
    CHECK(*neg == BranchAssignment{1});
    CHECK(format_assignment(*neg) == "(1)");
}

TEST_CASE("branch search sees through complex intermediates") {
    Ctx c(40);
    // (2i)(3i) = -6: real target, complex legs.
    RadicalExpr e = parse_radical("(mul (sqrt -4) (sqrt -9))");
    auto m = branch_search(e, Real(-6, c), c);
    REQUIRE(m.has_value());
    CHECK(*m == BranchAssignment{0, 0});
    auto p = branch_search(e, Real(6, c), c);
    REQUIRE(p.has_value());
    CHECK(*p == BranchAssignment{0, 1});
    // Sums of the same legs are never real.
    RadicalExpr s = parse_radical("(add (sqrt -4) (sqrt -9))");
    CHECK_FALSE(branch_search(s, Real(1, c), c).has_value());
    CHECK_FALSE(branch_search(s, Real(-5, c), c).has_value());
}

TEST_CASE("branch search skips assignments that fail to evaluate") {
    Ctx c(40);
    // Branch (0) divides by zero and must be passed over, not fatal.
    RadicalExpr e = parse_radical("(div 1 (sub (sqrt 4) 2))");
    auto found = branch_search(e, Real(Rat(-1, 4), c), c);
    REQUIRE(found.has_value());
    CHECK(*found == BranchAssignment{1});
}

TEST_CASE("branch search enforces its size limits") {
    Ctx c(30);
    RadicalExpr nine = parse_radical(
        "(mul (sqrt 2) (sqrt 3) (sqrt 5) (sqrt 7) (sqrt 11) (sqrt 13) (sqrt 17) "
        "(sqrt 19) (sqrt 23))");
    CHECK_THROWS_AS(branch_search(nine, Real(1, c), c), range_error);
    RadicalExpr wide = parse_radical(
        "(mul (root 2 10) (root 3 10) (root 5 10) (root 7 10) (root 11 10) "
        "(root 13 10) (root 15 10))");
    CHECK_THROWS_AS(branch_search(wide, Real(1, c), c), range_error);
}

TEST_CASE("the printed J radical is reachable by branch search") {
    Ctx c(60);
    RadicalExpr j = parse_radical(bg163_J_text());
    CHECK(j.root_count() == 2);
    Real target = R(kJ163, 60);
    auto br = branch_search(j, target, c);
    REQUIRE(br.has_value());
    Complex v = eval_radical(j, *br, c);
    CHECK(abs(v.re - target) < pow10(-40, c));
    CHECK(abs(v.im) < pow10(-30, c));
}

TEST_CASE("exact LLL reduction finds short vectors and guards bad input") {
    IntMat id{{Int(1), Int(0)}, {Int(0), Int(1)}};
    CHECK(lll_reduce(id) == id);
    IntMat m{{Int(1), Int(0)}, {Int(4), Int(1)}};
    IntMat red = lll_reduce(m);
    CHECK(red == id);  // the lattice is all of Z^2
    // Exhaustive shortest vector of the same lattice for cross-checking.
    Int shortest = Int(1000000000);
    for (int a = -10; a <= 10; ++a)
        for (int b = -10; b <= 10; ++b) {
            if (a == 0 && b == 0) continue;
            Int x = a * m[0][0] + b * m[1][0], y = a * m[0][1] + b * m[1][1];
            Int n2 = x * x + y * y;
            if (n2 < shortest) shortest = n2;
        }
    Int best = red[0][0] * red[0][0] + red[0][1] * red[0][1];
    for (const IntVec& row : red) {
        Int n2 = row[0] * row[0] + row[1] * row[1];
        if (n2 < best) best = n2;
    }
    CHECK(best == shortest);

    CHECK_THROWS_AS(lll_reduce(IntMat{{Int(1), Int(2)}, {Int(2), Int(4)}}), domain_error);
    CHECK_THROWS_AS(lll_reduce(IntMat{{Int(1), Int(2)}, {Int(3)}}), domain_error);
    CHECK_THROWS_AS(lll_reduce(IntMat{{Int(1), Int(0)}, {Int(0), Int(1)}, {Int(1), Int(1)}}),
                    domain_error);
}

TEST_CASE("minimal polynomial recognition on exact algebraic numbers") {
    Ctx c(120);
    auto rec = [&](const Real& v, int deg) { return recognize_min_poly(v, deg, c); };

    Real inv_s2 = 1 / sqrt(Real(2, Ctx(100)));
    auto q1 = rec(inv_s2, 4);
    REQUIRE(q1.has_value());
    CHECK(q1->to_line() == "-1 0 2");
    CHECK(q1->degree() == 2);  // minimal, not a degree-4 multiple

    Real golden = (1 + sqrt(Real(5, Ctx(100)))) / 2;
    auto q2 = rec(golden, 3);
    REQUIRE(q2.has_value());
    CHECK(q2->to_line() == "-1 -1 1");

    auto q3 = rec(Real(Rat(1, 3), Ctx(100)), 3);
    REQUIRE(q3.has_value());
    CHECK(q3->to_line() == "-1 3");
    auto q4 = rec(Real(7, Ctx(100)), 2);
    REQUIRE(q4.has_value());
    CHECK(q4->to_line() == "-7 1");

    Real cb = nth_root(Real(2, c), 3) + 1;
    auto q5 = rec(cb, 3);
    REQUIRE(q5.has_value());
    CHECK(q5->to_line() == "-3 3 -3 1");

    Real s2s3 = sqrt(Real(2, c)) + sqrt(Real(3, c));
    auto q6 = rec(s2s3, 4);
    REQUIRE(q6.has_value());
    CHECK(q6->to_line() == "1 0 -10 0 1");
    CHECK_FALSE(rec(s2s3, 3).has_value());  // no cubic relation exists
}

TEST_CASE("recognition rejects transcendental input instead of inventing") {
    Ctx c(60);
    Real pi = pi_reference(c);
    for (int deg : {1, 2, 3, 4})
        CHECK_FALSE(recognize_min_poly(pi, deg, c).has_value());
    CHECK_THROWS_AS(recognize_min_poly(pi, 0, c), domain_error);
    CHECK_THROWS_AS(recognize_min_poly(Real(2, Ctx(25)), 2, c), domain_error);
    CHECK_THROWS_AS(recognize_min_poly(pi, 2, Ctx(25)), domain_error);
}
