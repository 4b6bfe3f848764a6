#include "spin7/degree.hpp"

#include <cstdlib>

namespace spin7 {

SquareInstance square_instance(std::uint64_t seed, std::uint64_t trial) {
    RationalRng rng(seed, trial);
    SquareInstance in;
    in.p7 = random_orthonormal_pair(rng, Subspace::R7);
    in.t = rng.circle_point();
    in.p5 = random_orthonormal_pair(rng, Subspace::R5);
    in.t5 = rng.circle_point();
    return in;
}

DegreeReport degree_ledger(const SquareReport& square, int p_deg_t, int p_deg_t5) {
    if (!square.pass()) {
        throw DomainError("degree_ledger: the commutative square check failed");
    }
    DegreeReport rep{
        {p_deg_t * p_deg_t5, Provenance::Computed, "product of the winding degrees of p on both circle factors"},
        {kCoverMultiplier, Provenance::Cited,
         "degree of the double covering Spin(7) -> SO(7) on top homology"},
        {kHMultiplierMagnitude, Provenance::Cited,
         "magnitude of the degree of h70 (product of two plane rotations) on top homology"},
        0,
        false};
    const int numerator = rep.h_multiplier_magnitude.value * rep.p_degree.value;
    if (numerator % rep.cover_multiplier.value != 0) {
        throw DomainError("degree_ledger: no integer degree solves the square");
    }
    rep.conclusion_magnitude = std::abs(numerator / rep.cover_multiplier.value);
    if (rep.conclusion_magnitude * rep.cover_multiplier.value != std::abs(numerator)) {
        throw DomainError("degree_ledger: inconsistent ledger");
    }
    return rep;
}

}  // namespace spin7
