#pragma once
// Exact points of the unit circle. Angles are never stored as reals: a point
// (c, s) stands for e^{it} with c = cos t, s = sin t.

#include "spin7/scalar.hpp"

namespace spin7 {

template <Scalar S>
struct CirclePoint {
    S c{1};
    S s{0};

    friend bool operator==(const CirclePoint&, const CirclePoint&) = default;
};

template <Scalar S>
bool on_unit_circle(const CirclePoint<S>& p, Tolerance tol = {}) {
    return equal(p.c * p.c + p.s * p.s, S(1), tol);
}

template <Scalar S>
bool equal(const CirclePoint<S>& p, const CirclePoint<S>& q, Tolerance tol = {}) {
    return equal(p.c, q.c, tol) && equal(p.s, q.s, tol);
}

/// Stereographic parametrization u -> ((1-u^2)/(1+u^2), 2u/(1+u^2)).
template <Scalar S>
CirclePoint<S> circle_from_parameter(const S& u) {
    const S denom = S(1) + u * u;
    return {(S(1) - u * u) / denom, S(2) * u / denom};
}

template <Scalar S>
CirclePoint<S> angle_sum(const CirclePoint<S>& p, const CirclePoint<S>& q) {
    return {p.c * q.c - p.s * q.s, p.s * q.c + p.c * q.s};
}

template <Scalar S>
CirclePoint<S> double_angle(const CirclePoint<S>& p) {
    return {p.c * p.c - p.s * p.s, S(2) * p.c * p.s};
}

template <Scalar S>
CirclePoint<S> inverse_angle(const CirclePoint<S>& p) {
    return {p.c, -p.s};
}

template <Scalar S>
CirclePoint<double> to_float(const CirclePoint<S>& p) {
    return {to_double(p.c), to_double(p.s)};
}

}  // namespace spin7
