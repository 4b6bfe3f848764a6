#pragma once
/**
 * @file octonion.hpp
 * @brief Octonions over a Scalar backend with Fano-plane multiplication.
 *
 * Distinct imaginary units multiply along the seven oriented Fano lines
 *
 *   (e1,e2,e3) (e1,e4,e5) (e1,e6,e7) (e3,e5,e6) (e3,e4,e7) (e6,e4,e2) (e7,e2,e5)
 *
 * where the product of two consecutive units (cyclically) is the third, e.g.
 * e1 e2 = e3 and hence e3 e2 = -e1. e0 is the identity and ei^2 = -e0.
 */

#include "spin7/scalar.hpp"

#include <array>
#include <cstddef>

namespace spin7 {

inline constexpr std::size_t kOctonionDim = 8;

/// eᵢeⱼ = sign · e_index for distinct i, j in 1..7.
struct FanoTable {
    std::array<std::array<int, 8>, 8> sign{};
    std::array<std::array<int, 8>, 8> index{};
};

using FanoLine = std::array<int, 3>;

inline constexpr std::array<FanoLine, 7> kFanoLines{{
    {1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {3, 5, 6}, {3, 4, 7}, {6, 4, 2}, {7, 2, 5}}};

/// The global multiplication table, built once from kFanoLines.
const FanoTable& fano_table();

/// Product of basis units eᵢ eⱼ for i, j in 0..7 as (sign, index).
struct BasisProduct {
    int sign;
    int index;
};
BasisProduct basis_product(int i, int j);

template <Scalar S>
class Octonion {
public:
    Octonion() { coords_.fill(S(0)); }
    explicit Octonion(const std::array<S, 8>& coords) : coords_(coords) {}

    static Octonion unit(int i, S scale = S(1)) {
        Octonion o;
        o.coords_[static_cast<std::size_t>(i)] = scale;
        return o;
    }

    const S& operator[](std::size_t i) const { return coords_[i]; }
    S& operator[](std::size_t i) { return coords_[i]; }
    const std::array<S, 8>& coords() const { return coords_; }

    S real() const { return coords_[0]; }

    Octonion& operator+=(const Octonion& o) {
        for (std::size_t i = 0; i < 8; ++i) coords_[i] += o.coords_[i];
        return *this;
    }
    Octonion& operator-=(const Octonion& o) {
        for (std::size_t i = 0; i < 8; ++i) coords_[i] -= o.coords_[i];
        return *this;
    }
    Octonion& operator*=(const S& k) {
        for (auto& c : coords_) c *= k;
        return *this;
    }
    Octonion& operator/=(const S& k) {
        for (auto& c : coords_) c /= k;
        return *this;
    }

    friend Octonion operator+(Octonion a, const Octonion& b) { return a += b; }
    friend Octonion operator-(Octonion a, const Octonion& b) { return a -= b; }
    friend Octonion operator-(Octonion a) {
        for (auto& c : a.coords_) c = -c;
        return a;
    }
    friend Octonion operator*(const S& k, Octonion a) { return a *= k; }
    friend Octonion operator*(Octonion a, const S& k) { return a *= k; }
    friend Octonion operator/(Octonion a, const S& k) { return a /= k; }

    /// Non-associative octonion product.
    friend Octonion operator*(const Octonion& a, const Octonion& b) { return mul(a, b); }

    friend bool operator==(const Octonion&, const Octonion&) = default;

private:
    std::array<S, 8> coords_;
};

/// ℝ⁸ is identified with 𝕆 coordinate-wise; Im 𝕆 = ℝ⁷ has coord 0 = 0.
template <Scalar S>
using Vector8 = Octonion<S>;

template <Scalar S>
Octonion<S> mul(const Octonion<S>& a, const Octonion<S>& b) {
    Octonion<S> r;
    for (int i = 0; i < 8; ++i) {
        const S& ai = a[static_cast<std::size_t>(i)];
        if (ai == S(0)) continue;
        for (int j = 0; j < 8; ++j) {
            const S& bj = b[static_cast<std::size_t>(j)];
            if (bj == S(0)) continue;
            const auto [sign, k] = basis_product(i, j);
            if (sign > 0) {
                r[static_cast<std::size_t>(k)] += ai * bj;
            } else {
                r[static_cast<std::size_t>(k)] -= ai * bj;
            }
        }
    }
    return r;
}

template <Scalar S>
Octonion<S> conj(Octonion<S> a) {
    for (std::size_t i = 1; i < 8; ++i) a[i] = -a[i];
    return a;
}

template <Scalar S>
S inner(const Octonion<S>& a, const Octonion<S>& b) {
    S acc(0);
    for (std::size_t i = 0; i < 8; ++i) acc += a[i] * b[i];
    return acc;
}

template <Scalar S>
S norm_sq(const Octonion<S>& a) {
    return inner(a, a);
}

/// Solves b·u = a for b, i.e. returns a·conj(u) / |u|².
template <Scalar S>
Octonion<S> right_divide(const Octonion<S>& a, const Octonion<S>& u) {
    const S n = norm_sq(u);
    if (n == S(0)) {
        throw DomainError("right_divide: division by the zero octonion");
    }
    return mul(a, conj(u)) / n;
}

template <Scalar S>
bool is_purely_imaginary(const Octonion<S>& a, Tolerance tol = {}) {
    return is_zero(a[0], tol);
}

template <Scalar S>
bool equal(const Octonion<S>& a, const Octonion<S>& b, Tolerance tol = {}) {
    for (std::size_t i = 0; i < 8; ++i) {
        if (!equal(a[i], b[i], tol)) return false;
    }
    return true;
}

template <Scalar S>
bool is_zero(const Octonion<S>& a, Tolerance tol = {}) {
    return equal(a, Octonion<S>{}, tol);
}

template <Scalar T, Scalar S>
Octonion<T> convert(const Octonion<S>& a) {
    Octonion<T> r;
    for (std::size_t i = 0; i < 8; ++i) {
        if constexpr (std::same_as<T, S>) {
            r[i] = a[i];
        } else if constexpr (is_exact_v<S>) {
            r[i] = from_rational<T>(a[i]);
        } else {
            static_assert(!is_exact_v<T>, "float values cannot become exact");
        }
    }
    return r;
}

}  // namespace spin7
