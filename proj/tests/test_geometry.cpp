#include "spin7/geometry.hpp"
#include "spin7/random.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace spin7;
using Q = Rational;
using V = Vector8<Q>;
using M = Matrix8<Q>;
using P = OrientedPlane<Q>;
using C = CirclePoint<Q>;

namespace {

V e(int i, Q scale = 1) { return V::unit(i, scale); }

// Leibniz formula: sum over all 8! permutations.
Q leibniz_determinant(const M& m) {
    std::array<std::size_t, 8> perm;
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    Q total = 0;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < 8; ++i)
            for (std::size_t j = i + 1; j < 8; ++j)
                if (perm[i] > perm[j]) ++inversions;
        Q term = inversions % 2 == 0 ? 1 : -1;
        for (std::size_t i = 0; i < 8 && term != 0; ++i) term *= m(i, perm[i]);
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

}  // namespace

TEST_CASE("quarter turn in [e1,e2]") {
    const M r = plane_rotation(P{e(1), e(2)}, C{0, 1});
    CHECK(apply(r, e(1)) == e(2));
    CHECK(apply(r, e(2)) == -e(1));
    for (int k : {0, 3, 4, 5, 6, 7}) CHECK(apply(r, e(k)) == e(k));
    CHECK(so_check(r).pass);
}

TEST_CASE("trivial angle is the identity, half turn negates the plane") {
    RationalRng rng(11, 0);
    for (int k = 0; k < 20; ++k) {
        const P p = random_orthonormal_pair(rng, Subspace::R7);
        CHECK(plane_rotation(p, C{1, 0}) == M::identity());
        const M half = plane_rotation(p, C{-1, 0});
        CHECK(apply(half, p.u) == -p.u);
        CHECK(apply(half, p.v) == -p.v);
    }
}

TEST_CASE("rotation laws (property)") {
    RationalRng rng(12, 0);
    for (int k = 0; k < 100; ++k) {
        const P p = random_orthonormal_pair(rng, Subspace::R7);
        const C t = rng.circle_point(), t2 = rng.circle_point();
        const M r = plane_rotation(p, t);
        CHECK(so_check(r).pass);
        CHECK(compose(r, plane_rotation(p, t2)) == plane_rotation(p, angle_sum(t, t2)));
        CHECK(apply(r, p.u) == t.c * p.u + t.s * p.v);
        CHECK(apply(r, p.v) == -t.s * p.u + t.c * p.v);
        CHECK(plane_rotation(p.reversed(), t) == plane_rotation(p, inverse_angle(t)));

        const Q lambda = rng.rational(9, 9) + Q(10);
        CHECK(plane_rotation(P{lambda * p.u, lambda * p.v}, t) == r);
        CHECK(plane_rotation(rotate_plane_basis(p, rng.circle_point()), t) == r);

        // Vectors orthogonal to the plane are fixed.
        V z = rng.octonion();
        z -= inner(z, p.u) * p.u;
        z -= inner(z, p.v) * p.v;
        CHECK(apply(r, z) == z);
    }
}

TEST_CASE("rotate_plane_basis examples") {
    const P p{e(1), e(2)};
    CHECK(rotate_plane_basis(p, C{1, 0}) == p);
    CHECK(rotate_plane_basis(p, C{0, 1}) == P{e(2), -e(1)});
}

TEST_CASE("invalid planes are rejected") {
    CHECK_THROWS_AS(plane_rotation(P{e(1), e(1)}, C{0, 1}), DomainError);
    CHECK_THROWS_AS(plane_rotation(P{e(1), e(2, 2)}, C{0, 1}), DomainError);
    CHECK_THROWS_AS(plane_rotation(P{V{}, V{}}, C{0, 1}), DomainError);
}

TEST_CASE("so_check") {
    const auto id = so_check(M::identity());
    CHECK(id.pass);
    CHECK(id.orthogonality_residual == 0);
    CHECK(id.determinant == 1);

    std::array<Q, 8> d;
    d.fill(1);
    d[0] = -1;
    const auto refl = so_check(M::diagonal(d));
    CHECK_FALSE(refl.pass);
    CHECK(refl.determinant == -1);
    CHECK(refl.orthogonality_residual == 0);

    d.fill(1);
    d[3] = 2;
    CHECK_FALSE(so_check(M::diagonal(d)).pass);
}

TEST_CASE("determinant agrees with the Leibniz formula") {
    RationalRng rng(13, 0);
    for (int k = 0; k < 3; ++k) {
        M m;
        for (std::size_t i = 0; i < 8; ++i)
            for (std::size_t j = 0; j < 8; ++j) m(i, j) = rng.rational(3, 2);
        const Q expected = leibniz_determinant(m);
        CHECK(determinant(m) == expected);
        CHECK(equal(determinant(convert<double>(m)), to_double(expected), Tolerance{1e-9}));
    }
    M singular = M::identity();
    singular(4, 4) = 0;
    CHECK(determinant(singular) == 0);
    CHECK_FALSE(inverse(singular).has_value());
}

TEST_CASE("Cayley transform") {
    M a;
    a(1, 2) = 1;
    a(2, 1) = -1;
    const M q = cayley_orthogonal(a);
    // Oracle: (I + A) Q = I - A.
    CHECK(compose(M(M::identity() + a), q) == M::identity() - a);
    CHECK(q(1, 1) == 0);
    CHECK(q(1, 2) == -1);
    CHECK(q(2, 1) == 1);
    CHECK(q(2, 2) == 0);
    CHECK(apply(q, e(1)) == e(2));
    CHECK(apply(q, e(2)) == -e(1));
    CHECK(so_check(q).pass);

    M not_anti;
    not_anti(1, 2) = 1;
    CHECK_THROWS_AS(cayley_orthogonal(not_anti), DomainError);

    RationalRng rng(14, 0);
    for (int k = 0; k < 20; ++k) {
        const M r = rng.antisymmetric(1, 7);
        const M c = cayley_orthogonal(r);
        CHECK(so_check(c).pass);
        CHECK(compose(M(M::identity() + r), c) == M::identity() - r);
    }
}

TEST_CASE("random orthonormal pairs") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const P p7 = random_orthonormal_pair(seed, Subspace::R7);
        CHECK(is_unit_plane(p7));
        CHECK(is_purely_imaginary(p7.u));
        CHECK(is_purely_imaginary(p7.v));
        const V xy = mul(p7.u, p7.v);
        CHECK(is_purely_imaginary(xy));
        CHECK(norm_sq(xy) == 1);

        const P p5 = random_orthonormal_pair(seed, Subspace::R5);
        CHECK(is_unit_plane(p5));
        for (std::size_t i : {0u, 6u, 7u}) {
            CHECK(p5.u[i] == 0);
            CHECK(p5.v[i] == 0);
        }
    }
    CHECK(random_orthonormal_pair(7, Subspace::R7, 3) == random_orthonormal_pair(7, Subspace::R7, 3));
    CHECK(random_orthonormal_pair(7, Subspace::R7, 3) != random_orthonormal_pair(7, Subspace::R7, 4));
}

TEST_CASE("choose_w") {
    CHECK(choose_w(P{e(1), e(2)}) == e(4));
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const P p = random_orthonormal_pair(seed, Subspace::R7);
        const V w = choose_w(p);
        CHECK(norm_sq(w) != 0);
        CHECK(inner(w, e(0)) == 0);
        CHECK(inner(w, p.u) == 0);
        CHECK(inner(w, p.v) == 0);
        CHECK(inner(w, mul(p.u, p.v)) == 0);
    }
}

TEST_CASE("float rotation matches the exact rotation") {
    RationalRng rng(15, 0);
    for (int k = 0; k < 20; ++k) {
        const P p = random_orthonormal_pair(rng, Subspace::R7);
        const C t = rng.circle_point();
        const M exact = plane_rotation(p, t);
        const auto fl = plane_rotation(convert<double>(p), to_float(t));
        CHECK(max_abs_difference(convert<double>(exact), fl) <= 1e-12);
        CHECK(so_check(fl).pass);
    }
}
