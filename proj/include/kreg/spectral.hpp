#pragma once

#include "kreg/linalg.hpp"
#include "kreg/polynomial.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace kreg {

/// Coefficients of det(xI - M), constant term first, by Faddeev-LeVerrier.
/// The divisions by 1..d are exact over the integers.
template <typename Derived>
std::vector<typename Derived::Scalar> characteristic_coefficients(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index d = m.rows();
  std::vector<Scalar> c(static_cast<std::size_t>(d) + 1, Scalar(0));
  c[static_cast<std::size_t>(d)] = 1;
  Matrix<Scalar> a = m;
  Matrix<Scalar> acc = Matrix<Scalar>::Zero(d, d);
  for (Eigen::Index k = 1; k <= d; ++k) {
    acc = (a * acc).eval();
    for (Eigen::Index i = 0; i < d; ++i) acc(i, i) += c[static_cast<std::size_t>(d - k + 1)];
    const Matrix<Scalar> product = a * acc;
    c[static_cast<std::size_t>(d - k)] = -product.trace() / Scalar(k);
  }
  return c;
}

enum class GrowthClass { FiniteOrder, LinearGrowth, Expanding };

std::string to_string(GrowthClass c);

struct CyclotomicFactor {
  std::uint64_t index = 0;
  unsigned multiplicity = 0;
  friend bool operator==(const CyclotomicFactor&, const CyclotomicFactor&) = default;
};

struct CyclotomicDecomposition {
  unsigned zero_multiplicity = 0;
  std::vector<CyclotomicFactor> factors;
  IntPolynomial remainder;
};

/// M^(start + period) == M^start.
struct PowerCycle {
  std::uint64_t start = 0;
  std::uint64_t period = 1;
};

struct SpectralReport {
  IntPolynomial charpoly;
  unsigned nilpotent_order_a = 0;
  std::vector<CyclotomicFactor> cyclotomic_part;
  IntPolynomial non_cyclotomic_part;
  GrowthClass classification = GrowthClass::FiniteOrder;
  /// For LinearGrowth: the n whose Phi_n block is not semisimple.
  std::optional<std::uint64_t> defect_witness;
  /// For FiniteOrder: an explicit, checked power cycle.
  std::optional<PowerCycle> power_cycle;

  std::string to_string() const;
};

IntPolynomial char_poly(const IntMatrix& m);

/// Splits a monic p as x^a * prod Phi_n^mult * remainder by trial division over
/// every n with phi(n) <= deg p.  Throws InvalidArgument for non-monic input.
CyclotomicDecomposition cyclotomic_strip(const IntPolynomial& p);

/// rank Phi_n(M) != rank Phi_n(M)^2: some eigenvalue that is a primitive n-th
/// root of unity sits in a Jordan block of size >= 2.  Throws InvalidArgument
/// if Phi_n does not divide the characteristic polynomial.
bool is_defective(const IntMatrix& m, std::uint64_t n);

SpectralReport classify(const IntMatrix& m);

/// Classifies the growth of the scalar sequences t -> l M^t r for the given
/// left and right vectors: the spectral data of their minimal common
/// annihilating polynomial, which divides char_poly(M).  Modes of M that no
/// pair (l, r) observes are dropped.
SpectralReport classify_observed(const IntMatrix& m, const std::vector<IntRowVector>& lefts,
                                 const std::vector<IntColVector>& rights);

/// Smallest explicit cycle M^(i+p) = M^i for a FINITE_ORDER report, verified
/// by exact matrix powers.
PowerCycle find_power_cycle(const IntMatrix& m, const CyclotomicDecomposition& decomposition);

}  // namespace kreg
