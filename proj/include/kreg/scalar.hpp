#pragma once

// Exact scalar types and the dense Eigen aliases used throughout the library.

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>

// Boost 1.74 probes every argument type for a `const_iterator` when deciding
// whether it is a byte container; Eigen 3.4 expressions expose one whose
// iterator_traits are void.  Eigen expressions are never byte containers.
namespace boost::multiprecision::detail {
template <class T>
  requires requires { typename T::StorageKind; }
struct is_byte_container<T> : boost::false_type {};
}  // namespace boost::multiprecision::detail

#include <boost/multiprecision/eigen.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace kreg {

using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using RowVector = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>;
template <typename Scalar>
using ColVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<Integer>;
using IntRowVector = RowVector<Integer>;
using IntColVector = ColVector<Integer>;

/// Parses an optionally signed decimal integer; throws std::invalid_argument.
Integer parse_integer(std::string_view text);

/// Parses "p/q" or "p"; the result is normalized.  Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Renders as "p/q" (always with a denominator, "3/1" for integers).
std::string to_fraction_string(const Rational& value);

inline Rational to_rational(const Integer& value) { return Rational(value); }

}  // namespace kreg
