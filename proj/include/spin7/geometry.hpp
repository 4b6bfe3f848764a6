#pragma once
/**
 * @file geometry.hpp
 * @brief Oriented planes in ℝ⁸, plane rotations and 8×8 orthogonal matrices.
 *
 * Planes carry an ordered orthogonal pair [u, v] of equal (not necessarily
 * unit) norm N. The rotation by t in such a plane is
 *
 *   I + ((c-1)/N)(uuᵀ + vvᵀ) + (s/N)(vuᵀ - uvᵀ),
 *
 * which needs no square roots and stays exact when u, v are rational.
 * SO(7) elements are 8×8 matrices fixing e0.
 */

#include "spin7/circle.hpp"
#include "spin7/octonion.hpp"

#include <array>
#include <optional>
#include <utility>

namespace spin7 {

template <Scalar S>
class Matrix8 {
public:
    Matrix8() {
        for (auto& row : m_) row.fill(S(0));
    }

    static Matrix8 identity() {
        Matrix8 r;
        for (std::size_t i = 0; i < 8; ++i) r.m_[i][i] = S(1);
        return r;
    }

    static Matrix8 diagonal(const std::array<S, 8>& d) {
        Matrix8 r;
        for (std::size_t i = 0; i < 8; ++i) r.m_[i][i] = d[i];
        return r;
    }

    /// Matrix whose j-th column is cols[j].
    static Matrix8 from_columns(const std::array<Vector8<S>, 8>& cols) {
        Matrix8 r;
        for (std::size_t j = 0; j < 8; ++j)
            for (std::size_t i = 0; i < 8; ++i) r.m_[i][j] = cols[j][i];
        return r;
    }

    S& operator()(std::size_t i, std::size_t j) { return m_[i][j]; }
    const S& operator()(std::size_t i, std::size_t j) const { return m_[i][j]; }

    Vector8<S> column(std::size_t j) const {
        Vector8<S> v;
        for (std::size_t i = 0; i < 8; ++i) v[i] = m_[i][j];
        return v;
    }

    Matrix8 transposed() const {
        Matrix8 r;
        for (std::size_t i = 0; i < 8; ++i)
            for (std::size_t j = 0; j < 8; ++j) r.m_[j][i] = m_[i][j];
        return r;
    }

    friend Matrix8 operator+(Matrix8 a, const Matrix8& b) {
        for (std::size_t i = 0; i < 8; ++i)
            for (std::size_t j = 0; j < 8; ++j) a.m_[i][j] += b.m_[i][j];
        return a;
    }
    friend Matrix8 operator-(Matrix8 a, const Matrix8& b) {
        for (std::size_t i = 0; i < 8; ++i)
            for (std::size_t j = 0; j < 8; ++j) a.m_[i][j] -= b.m_[i][j];
        return a;
    }
    friend Matrix8 operator-(Matrix8 a) {
        for (auto& row : a.m_)
            for (auto& x : row) x = -x;
        return a;
    }

    friend bool operator==(const Matrix8&, const Matrix8&) = default;

private:
    std::array<std::array<S, 8>, 8> m_;
};

/// Elements of SO(8), Spin(7) and SO(7) share this representation.
template <Scalar S>
using OrthoMatrix = Matrix8<S>;

template <Scalar S>
Matrix8<S> compose(const Matrix8<S>& a, const Matrix8<S>& b) {
    Matrix8<S> r;
    for (std::size_t i = 0; i < 8; ++i) {
        for (std::size_t k = 0; k < 8; ++k) {
            const S& aik = a(i, k);
            if (aik == S(0)) continue;
            for (std::size_t j = 0; j < 8; ++j) r(i, j) += aik * b(k, j);
        }
    }
    return r;
}

template <Scalar S>
Vector8<S> apply(const Matrix8<S>& a, const Vector8<S>& z) {
    Vector8<S> r;
    for (std::size_t i = 0; i < 8; ++i) {
        S acc(0);
        for (std::size_t j = 0; j < 8; ++j) acc += a(i, j) * z[j];
        r[i] = acc;
    }
    return r;
}

template <Scalar S>
bool equal(const Matrix8<S>& a, const Matrix8<S>& b, Tolerance tol = {}) {
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j)
            if (!equal(a(i, j), b(i, j), tol)) return false;
    return true;
}

template <Scalar S>
S max_abs_difference(const Matrix8<S>& a, const Matrix8<S>& b) {
    S worst(0);
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) {
            S d = abs_value(S(a(i, j) - b(i, j)));
            if (d > worst) worst = d;
        }
    return worst;
}

template <Scalar T, Scalar S>
Matrix8<T> convert(const Matrix8<S>& a) {
    Matrix8<T> r;
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) {
            if constexpr (std::same_as<T, S>) {
                r(i, j) = a(i, j);
            } else {
                r(i, j) = from_rational<T>(a(i, j));
            }
        }
    return r;
}

/// Determinant by Bareiss elimination (exact) or partially pivoted LU (float).
template <Scalar S>
S determinant(Matrix8<S> m) {
    S sign(1);
    if constexpr (is_exact_v<S>) {
        S prev(1);
        for (std::size_t k = 0; k < 8; ++k) {
            std::size_t p = k;
            while (p < 8 && m(p, k) == S(0)) ++p;
            if (p == 8) return S(0);
            if (p != k) {
                for (std::size_t j = 0; j < 8; ++j) std::swap(m(p, j), m(k, j));
                sign = -sign;
            }
            for (std::size_t i = k + 1; i < 8; ++i) {
                for (std::size_t j = k + 1; j < 8; ++j)
                    m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
                m(i, k) = S(0);
            }
            prev = m(k, k);
        }
        return sign * m(7, 7);
    } else {
        S det(1);
        for (std::size_t k = 0; k < 8; ++k) {
            std::size_t p = k;
            for (std::size_t i = k + 1; i < 8; ++i)
                if (std::fabs(m(i, k)) > std::fabs(m(p, k))) p = i;
            if (m(p, k) == 0.0) return 0.0;
            if (p != k) {
                for (std::size_t j = 0; j < 8; ++j) std::swap(m(p, j), m(k, j));
                sign = -sign;
            }
            det *= m(k, k);
            for (std::size_t i = k + 1; i < 8; ++i) {
                const S f = m(i, k) / m(k, k);
                for (std::size_t j = k; j < 8; ++j) m(i, j) -= f * m(k, j);
            }
        }
        return sign * det;
    }
}

/// Gauss-Jordan inverse; nullopt when singular.
template <Scalar S>
std::optional<Matrix8<S>> inverse(Matrix8<S> m) {
    Matrix8<S> inv = Matrix8<S>::identity();
    for (std::size_t k = 0; k < 8; ++k) {
        std::size_t p = k;
        if constexpr (is_exact_v<S>) {
            while (p < 8 && m(p, k) == S(0)) ++p;
            if (p == 8) return std::nullopt;
        } else {
            for (std::size_t i = k + 1; i < 8; ++i)
                if (std::fabs(m(i, k)) > std::fabs(m(p, k))) p = i;
            if (m(p, k) == 0.0) return std::nullopt;
        }
        if (p != k) {
            for (std::size_t j = 0; j < 8; ++j) {
                std::swap(m(p, j), m(k, j));
                std::swap(inv(p, j), inv(k, j));
            }
        }
        const S pivot = m(k, k);
        for (std::size_t j = 0; j < 8; ++j) {
            m(k, j) /= pivot;
            inv(k, j) /= pivot;
        }
        for (std::size_t i = 0; i < 8; ++i) {
            if (i == k || m(i, k) == S(0)) continue;
            const S f = m(i, k);
            for (std::size_t j = 0; j < 8; ++j) {
                m(i, j) -= f * m(k, j);
                inv(i, j) -= f * inv(k, j);
            }
        }
    }
    return inv;
}

template <Scalar S>
struct SoReport {
    S orthogonality_residual;
    S determinant;
    bool pass;
};

template <Scalar S>
SoReport<S> so_check(const Matrix8<S>& m, Tolerance tol = {}) {
    const Matrix8<S> gram = compose(m.transposed(), m);
    const S residual = max_abs_difference(gram, Matrix8<S>::identity());
    const S det = determinant(m);
    bool ok;
    if constexpr (is_exact_v<S>) {
        ok = residual == S(0) && det == S(1);
    } else {
        ok = residual <= tol.eps && equal(det, 1.0, tol);
    }
    return {residual, det, ok};
}

template <Scalar S>
struct OrientedPlane {
    Vector8<S> u;
    Vector8<S> v;

    OrientedPlane reversed() const { return {v, u}; }
    friend bool operator==(const OrientedPlane&, const OrientedPlane&) = default;
};

/// Orthogonal, equal norms, nonzero.
template <Scalar S>
bool is_valid_plane(const OrientedPlane<S>& p, Tolerance tol = {}) {
    const S nu = norm_sq(p.u);
    const S nv = norm_sq(p.v);
    if (is_zero(nu, tol)) return false;
    return equal(nu, nv, tol) && equal(inner(p.u, p.v) / nu, S(0), tol);
}

template <Scalar S>
bool is_unit_plane(const OrientedPlane<S>& p, Tolerance tol = {}) {
    return is_valid_plane(p, tol) && equal(norm_sq(p.u), S(1), tol);
}

template <Scalar T, Scalar S>
OrientedPlane<T> convert(const OrientedPlane<S>& p) {
    return {convert<T>(p.u), convert<T>(p.v)};
}

/// ψ_{[u,v],t}: rotates the plane by t along its orientation, fixes its complement.
template <Scalar S>
Matrix8<S> plane_rotation(const OrientedPlane<S>& p, const CirclePoint<S>& t, Tolerance tol = {}) {
    if (!is_valid_plane(p, tol)) {
        throw DomainError("plane_rotation: spanning pair must be orthogonal with equal nonzero norms");
    }
    const S n = norm_sq(p.u);
    const S a = (t.c - S(1)) / n;
    const S b = t.s / n;
    Matrix8<S> r = Matrix8<S>::identity();
    for (std::size_t i = 0; i < 8; ++i) {
        for (std::size_t j = 0; j < 8; ++j) {
            r(i, j) += a * (p.u[i] * p.u[j] + p.v[i] * p.v[j]) + b * (p.v[i] * p.u[j] - p.u[i] * p.v[j]);
        }
    }
    return r;
}

/// [c·u + s·v, -s·u + c·v]: another basis of the same oriented plane.
template <Scalar S>
OrientedPlane<S> rotate_plane_basis(const OrientedPlane<S>& p, const CirclePoint<S>& s) {
    return {s.c * p.u + s.s * p.v, -s.s * p.u + s.c * p.v};
}

/// (I - A)(I + A)⁻¹ for antisymmetric A.
template <Scalar S>
Matrix8<S> cayley_orthogonal(const Matrix8<S>& a, Tolerance tol = {}) {
    if (!equal(a, Matrix8<S>(-a.transposed()), tol)) {
        throw DomainError("cayley_orthogonal: matrix is not antisymmetric");
    }
    const Matrix8<S> id = Matrix8<S>::identity();
    auto inv = inverse(Matrix8<S>(id + a));
    if (!inv) {
        throw DomainError("cayley_orthogonal: I + A is singular");
    }
    return compose(Matrix8<S>(id - a), *inv);
}

/**
 * First nonzero Gram–Schmidt residual of e1..e7 against {e0, x, y, xy}.
 *
 * The result is orthogonal to all four spanning vectors and is not
 * normalized, so it stays rational.
 */
template <Scalar S>
Vector8<S> choose_w(const OrientedPlane<S>& p, Tolerance tol = {}) {
    const std::array<Vector8<S>, 4> span{Vector8<S>::unit(0), p.u, p.v, mul(p.u, p.v)};
    // The spanning vectors are mutually orthogonal, so one projection pass suffices.
    for (int k = 1; k < 8; ++k) {
        Vector8<S> r = Vector8<S>::unit(k);
        for (const auto& b : span) {
            const S nb = norm_sq(b);
            r -= (inner(Vector8<S>::unit(k), b) / nb) * b;
        }
        if (!is_zero(norm_sq(r), tol)) return r;
    }
    throw DomainError("choose_w: no admissible w (input plane is not orthonormal imaginary)");
}

}  // namespace spin7
