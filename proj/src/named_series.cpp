#include "rpe/named_series.hpp"

#include "rpe/polynomial.hpp"

namespace rpe {

Rat chudnovsky_z() { return Rat(-1) / Rat(ipow(Int(53360), 3)); }
Rat chudnovsky_a() { return Rat(13591409, 6); }
Rat chudnovsky_b() { return Rat(90856689); }

SeriesParams chudnovsky_params(const Ctx& c) {
    Ctx w = c.boosted(10);
    Real scale = Real(426880L, w) * sqrt(Real(10005L, w));
    SeriesParams p;
    p.r = 163;
    p.family = Family::negative;
    p.z = round_to(Real(chudnovsky_z(), w), c);
    p.a = round_to(Real(13591409L, w) / scale, c);
    p.b = round_to(Real(545140134L, w) / scale, c);
    return p;
}

std::string bg163_J_text() {
    return "(let U (cbrt (add (neg "
           "12737965652562547164590026038483234248161827096523072256574968383) "
           "(mul (sqrt 489) "
           "229038073182066825378006485964950394558349727761749294205546402325349)))"
           " (div (mul 4 (add 8808429913332498766352891"
           " (neg (div 902206261147132595923169636910570558029813352485594880 U))"
           " (mul 30591288 U)))"
           " 10792555251621895860488211571345343375))";
}

std::string bg163_T_text() {
    return "(let S (sqrt 489)"
           " (div (mul 5 (add 12948195754365757115"
           " (mul 8 (cbrt (sub 3802386862487392962897493239274992371253057854289262"
           " (mul 3865464212119923579732688315287754932290919450 S))))"
           " (mul 8 (cbrt (add 3802386862487392962897493239274992371253057854289262"
           " (mul 3865464212119923579732688315287754932290919450 S))))))"
           " 83470787671093501833))";
}

std::string lambda163_radical_text() {
    return "(let C (cbrt (add 1 (mul 557403 (sqrt 489))))"
           " (let W (add -1 (neg (div 4270934400 C)) (mul 80040 C))"
           " (div (sqrt (div W 2))"
           " (mul 2 (sqrt (add -1 (neg (sqrt (add 1 (div W 4))))))))))";
}

Real alpha163_closed_form(const Real& x) {
    Ctx w(x.digits() + 10);
    Real s163 = sqrt(Real(163L, w));
    Real first = Real(13591409L, w) * sqrt(1 - x * 4L) / (Real(426880L, w) * sqrt(Real(10005L, w)));
    Real middle = s163 * sqrt(1 - x) / (x * 8L - 2L);
    return round_to(first + middle + s163 / 2L, Ctx(x.digits()));
}

Real value_of(const AlgebraicConstant& a, const Ctx& c) {
    Real v = root_by_spec({a.poly, a.index}, c);
    return a.negate ? -v : v;
}

AlgebraicConstant r243_z() {
    return {IntPoly({Int("6561"), Int("7046099782711303104000"),
                     Int("-8241190499340288000000"), Int("4245232549888000000000")}),
            1, false};
}

AlgebraicConstant r243_a() {
    return {IntPoly({Int("-529386137841972399112323"), Int(0),
                     Int("5193712075415612200704000"), Int(0),
                     Int("279610488520114176000000"), Int(0),
                     Int("271694883192832000000000")}),
            1, true};
}

AlgebraicConstant r243_b() {
    return {IntPoly({Int("-43766201502243114733034506827"), Int(0),
                     Int("194827240993239940764096000"), Int(0),
                     Int("-1092165237528662016000000"), Int(0),
                     Int("4245232549888000000000")}),
            1, true};
}

IntPoly g163_cubic() { return IntPoly({Int(-2), Int(4), Int(-6), Int(1)}); }

}  // namespace rpe
