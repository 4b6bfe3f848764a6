#include "spin7/degree.hpp"
#include "spin7/random.hpp"

#include <doctest.h>

using namespace spin7;
using Q = Rational;
using C = CirclePoint<Q>;
using F = CirclePoint<double>;

namespace {

template <Scalar S>
CirclePoint<S> power(const CirclePoint<S>& p, int n) {
    CirclePoint<S> r{S(1), S(0)};
    const CirclePoint<S> step = n >= 0 ? p : inverse_angle(p);
    for (int k = 0; k < (n >= 0 ? n : -n); ++k) r = angle_sum(r, step);
    return r;
}

}  // namespace

TEST_CASE("circle samples") {
    const auto pts = circle_samples<Q>(256);
    REQUIRE(pts.size() == 256);
    CHECK(pts.front() == C{-1, 0});
    for (const auto& p : pts) CHECK(on_unit_circle(p));
    CHECK(pts[128] == C{1, 0});
    const auto fl = circle_samples<double>(16);
    CHECK(equal(fl[0], F{-1.0, 0.0}));
}

TEST_CASE("winding degree examples, exact") {
    CHECK(winding_degree<Q>([](const C& p) { return p; }) == 1);
    CHECK(winding_degree<Q>([](const C& p) { return double_angle(p); }) == 2);
    CHECK(winding_degree<Q>([](const C& p) { return inverse_angle(p); }) == -1);
    CHECK(winding_degree<Q>([](const C&) { return C{0, 1}; }) == 0);
    for (int n = -5; n <= 5; ++n) {
        CHECK(winding_degree<Q>([n](const C& p) { return power(p, n); }) == n);
    }
}

TEST_CASE("winding degree examples, float") {
    CHECK(winding_degree<double>([](const F& p) { return p; }) == 1);
    CHECK(winding_degree<double>([](const F& p) { return double_angle(p); }) == 2);
    CHECK(winding_degree<double>([](const F& p) { return inverse_angle(p); }) == -1);
    CHECK(winding_degree<double>([](const F&) { return F{1.0, 0.0}; }) == 0);
}

TEST_CASE("sample count does not change the degree") {
    for (int n : {-3, 2, 4}) {
        auto f = [n](const C& p) { return power(p, n); };
        CHECK(winding_degree<Q>(f, 256) == winding_degree<Q>(f, 1024));
        auto g = [n](const F& p) { return power(p, n); };
        CHECK(winding_degree<double>(g, 256) == winding_degree<double>(g, 1024));
        CHECK(winding_degree<double>(g) == winding_degree<Q>(f));
    }
}

TEST_CASE("winding degree errors") {
    CHECK_THROWS_AS(winding_degree<Q>([](const C& p) { return p; }, 4), DomainError);
    // Quadrupling 8 equally spaced samples sends neighbours to antipodes.
    CHECK_THROWS_AS(winding_degree<double>([](const F& p) { return power(p, 4); }, 8), DomainError);
    CHECK_THROWS_AS(winding_degree<Q>([](const C& p) { return p.c > 0 ? C{1, 0} : C{-1, 0}; }, 8), DomainError);
}

TEST_CASE("commutative square") {
    const auto exact = verify_square<Q>(42, 20);
    CHECK(exact.pass());
    CHECK(exact.trials == 20);
    CHECK(exact.max_residual == 0.0);

    const auto fl = verify_square<double>(42, 20);
    CHECK(fl.pass());
    CHECK(fl.max_residual <= 1e-9);

    // The standard instance: [e1,e2] at a quarter turn, [e4,e5] fixed.
    using V = Vector8<Q>;
    const OrientedPlane<Q> p7{V::unit(1), V::unit(2)};
    const OrientedPlane<Q> p5{V::unit(4), V::unit(5)};
    const auto [lhs, rhs] = square_sides(p7, C{0, 1}, p5, C{1, 0});
    CHECK(lhs == rhs);
    CHECK(lhs == plane_rotation(p7, C{-1, 0}));
}

TEST_CASE("square instances are reproducible") {
    const auto a = square_instance(7, 3);
    const auto b = square_instance(7, 3);
    CHECK(a.p7 == b.p7);
    CHECK(a.t == b.t);
    CHECK(a.p5 == b.p5);
    CHECK(a.t5 == b.t5);
    CHECK_FALSE(square_instance(7, 4).p7 == a.p7);
}

TEST_CASE("degree ledger") {
    SquareReport ok;
    ok.trials = 10;
    const auto rep = degree_ledger(ok, 2, 2);
    CHECK(rep.p_degree.value == 4);
    CHECK(rep.p_degree.provenance == Provenance::Computed);
    CHECK(rep.cover_multiplier.value == 2);
    CHECK(rep.cover_multiplier.provenance == Provenance::Cited);
    CHECK(rep.h_multiplier_magnitude.value == 4);
    CHECK(rep.h_multiplier_magnitude.provenance == Provenance::Cited);
    CHECK(rep.conclusion_magnitude == 8);
    CHECK_FALSE(rep.sign_determined);

    CHECK(degree_ledger(ok, 1, 1).conclusion_magnitude == 2);
    CHECK(degree_ledger(ok, -2, 2).conclusion_magnitude == 8);

    SquareReport bad;
    bad.trials = 10;
    bad.failures.push_back(3);
    CHECK_THROWS_AS(degree_ledger(bad, 2, 2), DomainError);
}
