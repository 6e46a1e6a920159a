#pragma once

#include "kreg/scalar.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace kreg {

/// Univariate polynomial with arbitrary-precision integer coefficients,
/// constant term first.  The zero polynomial has no coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coefficients);

  static IntPolynomial constant(const Integer& c);
  static IntPolynomial monomial(int degree);  // x^degree

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  bool is_zero() const { return coefficients_.empty(); }
  bool is_one() const { return coefficients_.size() == 1 && coefficients_[0] == 1; }
  bool is_monic() const { return !is_zero() && coefficients_.back() == 1; }

  const std::vector<Integer>& coefficients() const { return coefficients_; }
  Integer coefficient(int power) const;
  const Integer& leading() const { return coefficients_.back(); }

  Integer operator()(const Integer& x) const;

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) = default;

  /// Quotient and remainder by a monic divisor.  Throws InvalidArgument if the
  /// divisor is not monic.
  std::pair<IntPolynomial, IntPolynomial> divmod(const IntPolynomial& monic_divisor) const;

  /// Exact quotient if `divisor` divides this polynomial.
  std::optional<IntPolynomial> exact_divide(const IntPolynomial& monic_divisor) const;

  IntPolynomial pow(unsigned exponent) const;

  /// Human-readable form, highest power first, e.g. "x^2 - 2*x + 1".
  std::string to_string() const;

 private:
  void trim();
  std::vector<Integer> coefficients_;
};

/// Evaluates p at a square matrix by Horner's scheme.
template <typename Derived>
Matrix<typename Derived::Scalar> evaluate_at(const IntPolynomial& p, const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index d = m.rows();
  Matrix<Scalar> acc = Matrix<Scalar>::Zero(d, d);
  const auto& coeffs = p.coefficients();
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = (acc * m).eval();
    for (Eigen::Index i = 0; i < d; ++i) acc(i, i) += Scalar(*it);
  }
  return acc;
}

std::uint64_t euler_phi(std::uint64_t n);

/// The n-th cyclotomic polynomial, built by Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d.
/// Results are memoized; safe to call concurrently.
const IntPolynomial& cyclotomic(std::uint64_t n);

/// Every n with phi(n) <= max_degree, ascending.
std::vector<std::uint64_t> cyclotomic_indices_up_to_degree(int max_degree);

}  // namespace kreg
