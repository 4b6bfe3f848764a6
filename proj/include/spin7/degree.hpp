#pragma once
/**
 * @file degree.hpp
 * @brief Degree bookkeeping for f7×f5: circle-map winding numbers, the pointwise
 *        commutative square c∘(f7×f5) = h70∘p, and the resulting degree ledger.
 *
 * Homology of Spin(7) is not computed. The two multipliers that come from the
 * literature (covering map degree 2, |deg h70| = 4) enter the ledger as cited
 * constants; the degree of p is measured.
 */

#include "spin7/random.hpp"
#include "spin7/spinmaps.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

namespace spin7 {

template <Scalar S>
using CircleMap = std::function<CirclePoint<S>(const CirclePoint<S>&)>;

/// `samples` points of the unit circle in counter-clockwise order starting at (-1, 0).
template <Scalar S>
std::vector<CirclePoint<S>> circle_samples(int samples) {
    std::vector<CirclePoint<S>> pts;
    pts.reserve(static_cast<std::size_t>(samples));
    for (int k = 0; k < samples; ++k) {
        const double theta = -std::numbers::pi + 2.0 * std::numbers::pi * k / samples;
        if constexpr (is_exact_v<S>) {
            if (k == 0) {
                pts.push_back({S(-1), S(0)});
                continue;
            }
            // u = tan(θ/2) on a 2^-20 grid; tan is increasing so the order is kept.
            constexpr std::int64_t grid = std::int64_t{1} << 20;
            const auto num = static_cast<std::int64_t>(std::llround(std::tan(theta / 2) * grid));
            pts.push_back(circle_from_parameter(make_rational(num, grid)));
        } else {
            pts.push_back({std::cos(theta), std::sin(theta)});
        }
    }
    return pts;
}

namespace detail {

/// 0 for angles in [0, π), 1 for [π, 2π).
template <Scalar S>
int half_plane(const CirclePoint<S>& p) {
    return (p.s > S(0) || (p.s == S(0) && p.c > S(0))) ? 0 : 1;
}

/// Strict order of angles taken in [0, 2π).
template <Scalar S>
bool angle_less(const CirclePoint<S>& a, const CirclePoint<S>& b) {
    const int ha = half_plane(a);
    const int hb = half_plane(b);
    if (ha != hb) return ha < hb;
    return a.c * b.s - a.s * b.c > S(0);
}

}  // namespace detail

/**
 * Winding number of a circle self-map.
 *
 * Exact backend: counts signed passages through angle 0 along shorter arcs.
 * Float backend: accumulates atan2 increments. Throws if two consecutive images
 * are antipodal (the shorter arc is ambiguous); use more samples.
 */
template <Scalar S>
int winding_degree(const CircleMap<S>& f, int samples = 256, Tolerance tol = {}) {
    if (samples < 8) {
        throw DomainError("winding_degree: need at least 8 samples");
    }
    std::vector<CirclePoint<S>> image;
    for (const auto& p : circle_samples<S>(samples)) image.push_back(f(p));

    if constexpr (is_exact_v<S>) {
        int turns = 0;
        for (std::size_t k = 0; k < image.size(); ++k) {
            const auto& a = image[k];
            const auto& b = image[(k + 1) % image.size()];
            const S cross = a.c * b.s - a.s * b.c;
            const S dot = a.c * b.c + a.s * b.s;
            if (cross == S(0)) {
                if (dot < S(0)) throw DomainError("winding_degree: antipodal consecutive images");
                continue;
            }
            if (cross > S(0) && detail::angle_less(b, a)) ++turns;
            if (cross < S(0) && detail::angle_less(a, b)) --turns;
        }
        return turns;
    } else {
        double total = 0.0;
        for (std::size_t k = 0; k < image.size(); ++k) {
            const auto& a = image[k];
            const auto& b = image[(k + 1) % image.size()];
            const double cross = a.c * b.s - a.s * b.c;
            const double dot = a.c * b.c + a.s * b.s;
            if (std::fabs(cross) <= tol.eps && dot < 0) {
                throw DomainError("winding_degree: antipodal consecutive images");
            }
            total += std::atan2(cross, dot);
        }
        return static_cast<int>(std::lround(total / (2.0 * std::numbers::pi)));
    }
}

struct SquareReport {
    std::size_t trials = 0;
    /// Trial indices where c∘(f7×f5) and h70∘p disagree.
    std::vector<std::size_t> failures;
    /// Largest entry-wise discrepancy (always 0 on the exact backend).
    double max_residual = 0.0;
    bool pass() const { return failures.empty(); }
};

/// One random instance (P7, t, P5, t') of the commutative square.
struct SquareInstance {
    OrientedPlane<Rational> p7;
    CirclePoint<Rational> t;
    OrientedPlane<Rational> p5;
    CirclePoint<Rational> t5;
};

SquareInstance square_instance(std::uint64_t seed, std::uint64_t trial);

/// Both composites around the square, for one instance.
template <Scalar S>
std::pair<Matrix8<S>, Matrix8<S>> square_sides(const OrientedPlane<S>& p7, const CirclePoint<S>& t,
                                               const OrientedPlane<S>& p5, const CirclePoint<S>& t5,
                                               Tolerance tol = {}) {
    const auto [t2, t52] = p_map(t, t5);
    return {project_double_cover(f7xf5(p7, t, p5, t5, tol)), h70(p7, t2, p5, t52, tol)};
}

template <Scalar S>
SquareReport verify_square(std::uint64_t seed, std::size_t trials, Tolerance tol = {}) {
    SquareReport rep;
    rep.trials = trials;
    for (std::size_t k = 0; k < trials; ++k) {
        const SquareInstance in = square_instance(seed, k);
        const auto [lhs, rhs] = square_sides(convert<S>(in.p7), CirclePoint<S>{from_rational<S>(in.t.c), from_rational<S>(in.t.s)},
                                             convert<S>(in.p5), CirclePoint<S>{from_rational<S>(in.t5.c), from_rational<S>(in.t5.s)},
                                             tol);
        rep.max_residual = std::max(rep.max_residual, to_double(max_abs_difference(lhs, rhs)));
        if (!equal(lhs, rhs, tol)) rep.failures.push_back(k);
    }
    return rep;
}

enum class Provenance { Computed, Cited };

struct LedgerEntry {
    int value;
    Provenance provenance;
    std::string source;
};

struct DegreeReport {
    LedgerEntry p_degree;
    LedgerEntry cover_multiplier;
    LedgerEntry h_multiplier_magnitude;
    int conclusion_magnitude = 0;
    bool sign_determined = false;
};

/// Degree of the covering Spin(7) → SO(7) on top homology (cited).
inline constexpr int kCoverMultiplier = 2;
/// |degree| of h70 on top homology (cited).
inline constexpr int kHMultiplierMagnitude = 4;

/**
 * Solves deg(f7×f5) · deg(c) = deg(h70) · deg(p) for |deg(f7×f5)|.
 *
 * Throws if the square check failed or the quotient is not an integer.
 */
DegreeReport degree_ledger(const SquareReport& square, int p_deg_t, int p_deg_t5);

}  // namespace spin7
