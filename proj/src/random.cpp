#include "spin7/random.hpp"

namespace spin7 {

RationalRng::RationalRng(std::uint64_t seed, std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    engine_.seed(seq);
}

std::int64_t RationalRng::integer(std::int64_t lo, std::int64_t hi) {
    // Plain modulo keeps the stream identical across standard libraries.
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(engine_() % span);
}

Rational RationalRng::rational(std::int64_t num_bound, std::int64_t den_bound) {
    const std::int64_t p = integer(-num_bound, num_bound);
    const std::int64_t q = integer(1, den_bound);
    return make_rational(p, q);
}

Octonion<Rational> RationalRng::octonion() {
    Octonion<Rational> o;
    for (std::size_t i = 0; i < 8; ++i) o[i] = rational(20, 10);
    return o;
}

Octonion<Rational> RationalRng::imaginary_octonion() {
    Octonion<Rational> o = octonion();
    o[0] = 0;
    return o;
}

CirclePoint<Rational> RationalRng::circle_point() {
    return circle_from_parameter(rational(9, 9));
}

Matrix8<Rational> RationalRng::antisymmetric(std::size_t lo, std::size_t hi) {
    Matrix8<Rational> a;
    for (std::size_t i = lo; i <= hi; ++i) {
        for (std::size_t j = i + 1; j <= hi; ++j) {
            const Rational v = rational(5, 4);
            a(i, j) = v;
            a(j, i) = -v;
        }
    }
    return a;
}

OrientedPlane<Rational> random_orthonormal_pair(RationalRng& rng, Subspace restrict_to) {
    const std::size_t hi = restrict_to == Subspace::R7 ? 7 : 5;
    const Matrix8<Rational> q = cayley_orthogonal(rng.antisymmetric(1, hi));
    // Q is the identity outside [1, hi], so columns 1 and 2 are supported there.
    return {q.column(1), q.column(2)};
}

OrientedPlane<Rational> random_orthonormal_pair(std::uint64_t seed, Subspace restrict_to,
                                                std::uint64_t stream) {
    RationalRng rng(seed, stream);
    return random_orthonormal_pair(rng, restrict_to);
}

}  // namespace spin7
