#include "spin7/circle.hpp"
#include "spin7/random.hpp"

#include <doctest.h>

using namespace spin7;
using Q = Rational;
using C = CirclePoint<Q>;

TEST_CASE("rationals serialize canonically") {
    CHECK(to_string(make_rational(6, -4)) == "-3/2");
    CHECK(to_string(Q(0)) == "0/1");
    CHECK(to_string(Q(7)) == "7/1");
    CHECK(to_string(0.1) == "0.10000000000000001");
    CHECK(to_string(-2.0) == "-2");
}

TEST_CASE("rational parsing") {
    CHECK(parse_rational("3/5") == make_rational(3, 5));
    CHECK(parse_rational("-08/12") == make_rational(-2, 3));
    CHECK(parse_rational("0.25") == make_rational(1, 4));
    CHECK(parse_rational("-.5") == make_rational(-1, 2));
    CHECK(parse_rational(" 17 ") == Q(17));
    CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
    CHECK_THROWS_AS(parse_rational("abc"), DomainError);
    CHECK_THROWS_AS(parse_rational(""), DomainError);
    CHECK_THROWS_AS(parse_rational("1.2.3"), DomainError);
}

TEST_CASE("parse_rational inverts to_string") {
    RationalRng rng(7, 0);
    for (int k = 0; k < 300; ++k) {
        const Q q = rng.rational(1000, 997);
        CHECK(parse_rational(to_string(q)) == q);
    }
}

TEST_CASE("float equality is relative-absolute") {
    CHECK(equal(1.0, 1.0 + 5e-10));
    CHECK_FALSE(equal(1.0, 1.0 + 5e-9));
    CHECK(equal(1e6, 1e6 + 1e-4));
    CHECK_FALSE(equal(1e6, 1e6 + 1e-2));
    CHECK(equal(0.0, 1e-10));
    CHECK(equal(1.0, 1.001, Tolerance{1e-2}));
}

TEST_CASE("circle_from_parameter examples") {
    CHECK(circle_from_parameter(Q(0)) == C{1, 0});
    CHECK(circle_from_parameter(Q(1)) == C{0, 1});
    CHECK(circle_from_parameter(make_rational(1, 2)) == C{make_rational(3, 5), make_rational(4, 5)});
}

TEST_CASE("double_angle examples") {
    CHECK(double_angle(C{1, 0}) == C{1, 0});
    CHECK(double_angle(C{0, 1}) == C{-1, 0});
    CHECK(double_angle(C{make_rational(3, 5), make_rational(4, 5)}) ==
          C{make_rational(-7, 25), make_rational(24, 25)});
}

TEST_CASE("angle_sum examples") {
    const C q{make_rational(5, 13), make_rational(-12, 13)};
    CHECK(angle_sum(C{1, 0}, q) == q);
    CHECK(angle_sum(C{0, 1}, C{0, 1}) == C{-1, 0});
    CHECK(angle_sum(C{make_rational(3, 5), make_rational(4, 5)}, C{make_rational(3, 5), make_rational(-4, 5)}) ==
          C{1, 0});
}

TEST_CASE("circle group laws on random exact points") {
    RationalRng rng(11, 0);
    for (int k = 0; k < 1000; ++k) {
        const C p = circle_from_parameter(rng.rational(50, 37));
        REQUIRE(p.c * p.c + p.s * p.s == Q(1));
        if (k % 10 != 0) continue;
        const C q = rng.circle_point();
        const C r = rng.circle_point();
        CHECK(double_angle(p) == angle_sum(p, p));
        CHECK(angle_sum(p, q) == angle_sum(q, p));
        CHECK(angle_sum(angle_sum(p, q), r) == angle_sum(p, angle_sum(q, r)));
        CHECK(angle_sum(p, inverse_angle(p)) == C{1, 0});
        CHECK(on_unit_circle(angle_sum(p, q)));
    }
}
