#pragma once
/**
 * @file spinmaps.hpp
 * @brief Octonionic maps Gr̃₂(ℝ⁷)×S¹ → Spin(7) ⊂ SO(8) and their verifiers.
 *
 * For an oriented orthonormal pair [x, y] of imaginary octonions and a w
 * orthogonal to {e0, x, y, xy}, the eight vectors
 *
 *   B = (e0, x, y, xy, w, wx, wy, w(xy))
 *
 * form an orthogonal basis of 𝕆 that multiplies like the standard units. f7
 * rotates the four planes [x,y], [e0,xy], [w,w(xy)], [wx,wy] simultaneously by
 * the same angle. The result lies in Spin(7), i.e. there is g ∈ SO(7) with
 * g(a)·f7(b) = f7(ab) for all octonions a, b, and that g is the rotation of
 * [x,y] by twice the angle.
 */

#include "spin7/geometry.hpp"

#include <optional>
#include <type_traits>
#include <utility>
#include <vector>

namespace spin7 {

template <Scalar S>
struct FrameB {
    std::array<Vector8<S>, 8> elements;
    /// Common squared norm of w, wx, wy, w(xy).
    S norm_w;

    const Vector8<S>& operator[](std::size_t i) const { return elements[i]; }
};

namespace frame {
inline constexpr std::size_t kOne = 0, kX = 1, kY = 2, kXY = 3, kW = 4, kWX = 5, kWY = 6, kWXY = 7;
}

namespace detail {

template <Scalar S>
void require_unit_imaginary_pair(const OrientedPlane<S>& p, Tolerance tol, const char* who) {
    if (!is_unit_plane(p, tol) || !is_purely_imaginary(p.u, tol) || !is_purely_imaginary(p.v, tol)) {
        throw DomainError(std::string(who) + ": plane must be a unit orthonormal imaginary pair");
    }
}

template <Scalar S>
bool supported_on_r5(const OrientedPlane<S>& p, Tolerance tol) {
    for (std::size_t i : {0u, 6u, 7u}) {
        if (!is_zero(p.u[i], tol) || !is_zero(p.v[i], tol)) return false;
    }
    return true;
}

}  // namespace detail

/// Builds and validates the orthogonal frame (e0, x, y, xy, w, wx, wy, w(xy)).
template <Scalar S>
FrameB<S> basis_b(const OrientedPlane<S>& p, const Vector8<S>& w, Tolerance tol = {}) {
    detail::require_unit_imaginary_pair(p, tol, "basis_b");
    const Vector8<S>& x = p.u;
    const Vector8<S>& y = p.v;
    const Vector8<S> xy = mul(x, y);
    const S nw = norm_sq(w);
    if (is_zero(nw, tol)) {
        throw DomainError("basis_b: w must be nonzero");
    }
    for (const auto& b : {Vector8<S>::unit(0), x, y, xy}) {
        if (!is_zero(S(inner(w, b) / nw), tol)) {
            throw DomainError("basis_b: w must be orthogonal to e0, x, y and xy");
        }
    }
    FrameB<S> f{{Vector8<S>::unit(0), x, y, xy, w, mul(w, x), mul(w, y), mul(w, xy)}, nw};
    for (std::size_t i = 0; i < 8; ++i) {
        const S expected = i < 4 ? S(1) : nw;
        if (!equal(norm_sq(f[i]), expected, tol)) {
            throw DomainError("basis_b: frame element has the wrong norm");
        }
        for (std::size_t j = i + 1; j < 8; ++j) {
            if (!is_zero(S(inner(f[i], f[j]) / expected), tol)) {
                throw DomainError("basis_b: frame elements are not orthogonal");
            }
        }
    }
    return f;
}

/// Fᵢ·Fⱼ = sign · (norm_w if scaled) · F_index.
struct FrameProduct {
    int sign;
    int index;
    bool scaled;
};
using FrameTable = std::array<std::array<FrameProduct, 8>, 8>;

/// Multiplication table of a frame, derived from and checked against octonion products.
template <Scalar S>
FrameTable frame_table(const FrameB<S>& f, Tolerance tol = {}) {
    FrameTable table{};
    for (std::size_t i = 0; i < 8; ++i) {
        for (std::size_t j = 0; j < 8; ++j) {
            const Vector8<S> prod = mul(f[i], f[j]);
            const bool scaled = i >= 4 && j >= 4;
            const S magnitude = scaled ? f.norm_w : S(1);
            bool found = false;
            for (std::size_t k = 0; k < 8 && !found; ++k) {
                const S coeff = inner(prod, f[k]) / norm_sq(f[k]);
                for (int sign : {1, -1}) {
                    if (equal(coeff, S(sign) * magnitude, tol) && equal(prod, S(coeff) * f[k], tol)) {
                        table[i][j] = {sign, static_cast<int>(k), scaled};
                        found = true;
                        break;
                    }
                }
            }
            if (!found) {
                throw DomainError("frame_table: product of frame elements is not a signed frame element");
            }
        }
    }
    return table;
}

/// Product of the four rotations through the frame planes, all at angle t.
template <Scalar S>
Matrix8<S> f7(const OrientedPlane<S>& p, const CirclePoint<S>& t,
              const std::optional<std::type_identity_t<Vector8<S>>>& w = std::nullopt, Tolerance tol = {}) {
    detail::require_unit_imaginary_pair(p, tol, "f7");
    const FrameB<S> b = basis_b(p, w ? *w : choose_w(p, tol), tol);
    using namespace frame;
    Matrix8<S> r = plane_rotation(OrientedPlane<S>{b[kX], b[kY]}, t, tol);
    r = compose(r, plane_rotation(OrientedPlane<S>{b[kOne], b[kXY]}, t, tol));
    r = compose(r, plane_rotation(OrientedPlane<S>{b[kW], b[kWXY]}, t, tol));
    r = compose(r, plane_rotation(OrientedPlane<S>{b[kWX], b[kWY]}, t, tol));
    return r;
}

/// f7 restricted to planes inside span{e1..e5}.
template <Scalar S>
Matrix8<S> f5(const OrientedPlane<S>& p, const CirclePoint<S>& t,
              const std::optional<std::type_identity_t<Vector8<S>>>& w = std::nullopt, Tolerance tol = {}) {
    if (!detail::supported_on_r5(p, tol)) {
        throw DomainError("f5: plane must lie in span{e1,...,e5}");
    }
    return f7(p, t, w, tol);
}

template <Scalar S>
Matrix8<S> f7xf5(const OrientedPlane<S>& p7, const CirclePoint<S>& t, const OrientedPlane<S>& p5,
                 const CirclePoint<S>& t5, Tolerance tol = {}) {
    return compose(f7(p7, t, std::nullopt, tol), f5(p5, t5, std::nullopt, tol));
}

/// ψ_{P7,t}·ψ_{P5,t'}, an SO(7) element fixing e0.
template <Scalar S>
Matrix8<S> h70(const OrientedPlane<S>& p7, const CirclePoint<S>& t, const OrientedPlane<S>& p5,
               const CirclePoint<S>& t5, Tolerance tol = {}) {
    if (!is_purely_imaginary(p7.u, tol) || !is_purely_imaginary(p7.v, tol)) {
        throw DomainError("h70: first plane must be purely imaginary");
    }
    if (!detail::supported_on_r5(p5, tol)) {
        throw DomainError("h70: second plane must lie in span{e1,...,e5}");
    }
    return compose(plane_rotation(p7, t, tol), plane_rotation(p5, t5, tol));
}

/// Angle doubling on both circle factors; plane arguments pass through unchanged.
template <Scalar S>
std::pair<CirclePoint<S>, CirclePoint<S>> p_map(const CirclePoint<S>& t, const CirclePoint<S>& t5) {
    return {double_angle(t), double_angle(t5)};
}

/// g with g(eᵢ) = g̃(eᵢ) / g̃(e0): the relation g(a)g̃(b) = g̃(ab) at b = e0.
template <Scalar S>
Matrix8<S> project_double_cover(const Matrix8<S>& spin) {
    const Vector8<S> image_of_one = spin.column(0);
    std::array<Vector8<S>, 8> cols;
    cols[0] = Vector8<S>::unit(0);
    for (std::size_t i = 1; i < 8; ++i) {
        cols[i] = right_divide(spin.column(i), image_of_one);
    }
    return Matrix8<S>::from_columns(cols);
}

template <Scalar S>
struct MembershipReport {
    Matrix8<S> candidate_g;
    std::vector<std::pair<int, int>> relation_failures;
    bool g_in_so7 = false;
    bool is_member = false;
};

/// Decides g̃ ∈ Spin(7) by checking the relation on all 64 basis pairs.
template <Scalar S>
MembershipReport<S> verify_spin7(const Matrix8<S>& spin, Tolerance tol = {}) {
    MembershipReport<S> rep;
    rep.candidate_g = project_double_cover(spin);
    const Matrix8<S>& g = rep.candidate_g;

    bool preserves_imaginary = equal(g.column(0), Vector8<S>::unit(0), tol);
    for (std::size_t j = 1; j < 8; ++j) preserves_imaginary = preserves_imaginary && is_zero(g(0, j), tol);
    rep.g_in_so7 = preserves_imaginary && so_check(g, tol).pass;

    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) {
            const auto [sign, k] = basis_product(i, j);
            const Vector8<S> lhs = mul(g.column(static_cast<std::size_t>(i)), spin.column(static_cast<std::size_t>(j)));
            const Vector8<S> rhs = S(sign) * spin.column(static_cast<std::size_t>(k));
            if (!equal(lhs, rhs, tol)) rep.relation_failures.emplace_back(i, j);
        }
    }
    rep.is_member = rep.relation_failures.empty() && rep.g_in_so7;
    return rep;
}

struct TrialityReport {
    /// Frame index pairs (α, β) with g(α)ψ_t(β) ≠ ψ_t(αβ).
    std::vector<std::pair<int, int>> failures;
    /// Pairs with α ∉ {x, y} where α·ψ_{π/2}(β) ≠ ψ_{π/2}(αβ).
    std::vector<std::pair<int, int>> half_turn_failures;
    bool pass() const { return failures.empty() && half_turn_failures.empty(); }
};

/// g(α)·ψ_t(β) = ψ_t(αβ) over the frame, with ψ_t = f7 and g the rotation of [x,y] by 2t.
template <Scalar S>
TrialityReport triality_check(const OrientedPlane<S>& p, const CirclePoint<S>& t, const Vector8<S>& w,
                              Tolerance tol = {}) {
    const FrameB<S> b = basis_b(p, w, tol);
    const Matrix8<S> psi = f7(p, t, std::optional<Vector8<S>>(w), tol);
    const Matrix8<S> g = plane_rotation(p, double_angle(t), tol);
    const Matrix8<S> quarter = f7(p, CirclePoint<S>{S(0), S(1)}, std::optional<Vector8<S>>(w), tol);

    TrialityReport rep;
    for (std::size_t a = 0; a < 8; ++a) {
        for (std::size_t c = 0; c < 8; ++c) {
            const Vector8<S> ab = mul(b[a], b[c]);
            if (!equal(mul(apply(g, b[a]), apply(psi, b[c])), apply(psi, ab), tol)) {
                rep.failures.emplace_back(static_cast<int>(a), static_cast<int>(c));
            }
            if (a == frame::kX || a == frame::kY) continue;
            if (!equal(mul(b[a], apply(quarter, b[c])), apply(quarter, ab), tol)) {
                rep.half_turn_failures.emplace_back(static_cast<int>(a), static_cast<int>(c));
            }
        }
    }
    return rep;
}

/// Spin(8) ≅ Spin(7) × S⁷ in product coordinates.
template <Scalar S>
std::pair<Matrix8<S>, Vector8<S>> spin8_map(const OrientedPlane<S>& p7, const CirclePoint<S>& t,
                                            const OrientedPlane<S>& p5, const CirclePoint<S>& t5,
                                            const Vector8<S>& s, Tolerance tol = {}) {
    if (!equal(norm_sq(s), S(1), tol)) {
        throw DomainError("spin8_map: sphere coordinate must be a unit vector");
    }
    return {f7xf5(p7, t, p5, t5, tol), s};
}

}  // namespace spin7
