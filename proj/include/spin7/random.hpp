#pragma once
// Seeded exact random inputs. Every stream is derived from (seed, stream id), so
// trials can be generated independently and in any order.

#include "spin7/geometry.hpp"

#include <cstdint>
#include <random>

namespace spin7 {

/// Which coordinate subspace a random plane lives in: Im 𝕆 (e1..e7) or e1..e5.
enum class Subspace { R7, R5 };

class RationalRng {
public:
    RationalRng(std::uint64_t seed, std::uint64_t stream);

    /// Uniform integer in [lo, hi].
    std::int64_t integer(std::int64_t lo, std::int64_t hi);

    /// p/q with p in [-num_bound, num_bound], q in [1, den_bound].
    Rational rational(std::int64_t num_bound, std::int64_t den_bound);

    /// Octonion with coordinates p/q, p in [-20, 20], q in [1, 10].
    Octonion<Rational> octonion();
    Octonion<Rational> imaginary_octonion();

    /// Stereographic circle point from a random rational parameter.
    CirclePoint<Rational> circle_point();

    /// Antisymmetric matrix with entries p/q, p in [-5,5], q in [1,4], supported on coords [lo, hi].
    Matrix8<Rational> antisymmetric(std::size_t lo, std::size_t hi);

private:
    std::mt19937_64 engine_;
};

/// Exact rational orthonormal pair of imaginary vectors supported on the subspace.
OrientedPlane<Rational> random_orthonormal_pair(std::uint64_t seed, Subspace restrict_to,
                                                std::uint64_t stream = 0);
OrientedPlane<Rational> random_orthonormal_pair(RationalRng& rng, Subspace restrict_to);

}  // namespace spin7
