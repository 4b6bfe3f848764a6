#pragma once
/**
 * @file scalar.hpp
 * @brief The two arithmetic backends shared by every algebraic routine.
 *
 * All algebra in this library is written once, generic over a Scalar:
 *   - Rational: arbitrary-precision rationals, equality is exact.
 *   - double:   64-bit binary floating point, equality within a relative-absolute
 *               tolerance |a-b| <= eps * max(1, |a|, |b|).
 */

#include <boost/multiprecision/gmp.hpp>

#include <cmath>
#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>

namespace spin7 {

using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                  boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

template <class S>
concept Scalar = std::same_as<S, Rational> || std::same_as<S, double>;

template <Scalar S>
inline constexpr bool is_exact_v = std::same_as<S, Rational>;

/// Raised when an input violates an operation's precondition.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Comparison tolerance for the float backend; ignored by the exact backend.
struct Tolerance {
    double eps = 1e-9;
};

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
    if (den == 0) {
        throw DomainError("rational with zero denominator");
    }
    return Rational(num) / Rational(den);
}

template <Scalar S>
S abs_value(const S& a) {
    if constexpr (is_exact_v<S>) {
        return boost::multiprecision::abs(a);
    } else {
        return std::fabs(a);
    }
}

template <Scalar S>
bool equal(const S& a, const S& b, Tolerance tol = {}) {
    if constexpr (is_exact_v<S>) {
        return a == b;
    } else {
        const double scale = std::max({1.0, std::fabs(a), std::fabs(b)});
        return std::fabs(a - b) <= tol.eps * scale;
    }
}

template <Scalar S>
bool is_zero(const S& a, Tolerance tol = {}) {
    return equal(a, S(0), tol);
}

/// Converts an exact value into the requested backend.
template <Scalar S>
S from_rational(const Rational& q) {
    if constexpr (is_exact_v<S>) {
        return q;
    } else {
        return q.template convert_to<double>();
    }
}

template <Scalar S>
double to_double(const S& a) {
    if constexpr (is_exact_v<S>) {
        return a.template convert_to<double>();
    } else {
        return a;
    }
}

/// "p/q" with q > 0 and gcd(p,q) = 1; integers still carry "/1".
std::string to_string(const Rational& q);
/// Decimal with 17 significant digits.
std::string to_string(double x);

/// Parses "p", "p/q" or a finite decimal such as "-0.25" into an exact rational.
Rational parse_rational(std::string_view text);

}  // namespace spin7
