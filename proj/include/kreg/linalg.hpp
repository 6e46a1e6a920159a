#pragma once

// Exact dense linear algebra over integral domains.  Everything here is
// templated on the Eigen expression so the same code serves Integer and
// Rational matrices; no routine divides except where the quotient is exact.

#include "kreg/scalar.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <string>
#include <utility>
#include <vector>

namespace kreg {

template <typename Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) return false;
  return true;
}

template <typename Derived>
typename Derived::Scalar max_abs_entry(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  Scalar best = 0;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      Scalar a = abs(Scalar(m(i, j)));
      if (a > best) best = a;
    }
  return best;
}

/// Rank by fraction-free (Bareiss) elimination.  Every intermediate entry is a
/// minor of the input, so the divisions are exact over the integers.
template <typename Derived>
Eigen::Index rank(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  Matrix<Scalar> m = input;
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  Scalar previous = 1;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index pivot = r;
    while (pivot < rows && m(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r) m.row(pivot).swap(m.row(r));
    for (Eigen::Index i = r + 1; i < rows; ++i) {
      for (Eigen::Index j = c + 1; j < cols; ++j)
        m(i, j) = (m(r, c) * m(i, j) - m(i, c) * m(r, j)) / previous;
      m(i, c) = 0;
    }
    previous = m(r, c);
    ++r;
  }
  return r;
}

template <typename Derived>
Matrix<typename Derived::Scalar> power(const Eigen::MatrixBase<Derived>& m, std::uint64_t exponent) {
  using Scalar = typename Derived::Scalar;
  Matrix<Scalar> result = Matrix<Scalar>::Identity(m.rows(), m.cols());
  Matrix<Scalar> base = m;
  while (exponent > 0) {
    if (exponent & 1U) result = (result * base).eval();
    exponent >>= 1U;
    if (exponent > 0) base = (base * base).eval();
  }
  return result;
}

template <typename DerivedA, typename DerivedB>
Matrix<typename DerivedA::Scalar> block_diagonal(const Eigen::MatrixBase<DerivedA>& a,
                                                 const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  Matrix<Scalar> out = Matrix<Scalar>::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  out.topLeftCorner(a.rows(), a.cols()) = a;
  out.bottomRightCorner(b.rows(), b.cols()) = b;
  return out;
}

template <typename DerivedA, typename DerivedB>
Matrix<typename DerivedA::Scalar> kronecker(const Eigen::MatrixBase<DerivedA>& a,
                                            const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  Matrix<Scalar> lhs = a;
  Matrix<Scalar> rhs = b;
  return Eigen::kroneckerProduct(lhs, rhs).eval();
}

/// Canonical text encoding of a matrix, usable as a dedup key.
template <typename Derived>
std::string canonical_key(const Eigen::MatrixBase<Derived>& m) {
  std::string key = std::to_string(m.rows()) + 'x' + std::to_string(m.cols()) + ':';
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      key += m(i, j).str();
      key += ',';
    }
  return key;
}

/// Incrementally maintained row-echelon basis of a subspace of Q^d, stored as
/// primitive integer rows.
class IntegerSpan {
 public:
  explicit IntegerSpan(Eigen::Index dim) : dim_(dim) {}

  Eigen::Index dim() const { return dim_; }
  Eigen::Index size() const { return static_cast<Eigen::Index>(rows_.size()); }

  bool contains(const IntRowVector& v) const { return is_zero(reduce(v)); }

  /// Adds v if it enlarges the span; returns whether it did.
  bool insert(const IntRowVector& v) {
    IntRowVector residue = reduce(v);
    Eigen::Index pivot = 0;
    while (pivot < dim_ && residue(pivot) == 0) ++pivot;
    if (pivot == dim_) return false;
    make_primitive(residue);
    if (residue(pivot) < 0) residue = -residue;
    rows_.push_back({pivot, std::move(residue)});
    return true;
  }

 private:
  struct Row {
    Eigen::Index pivot;
    IntRowVector values;
  };

  IntRowVector reduce(IntRowVector v) const {
    for (const Row& row : rows_) {
      const Integer& lead = v(row.pivot);
      if (lead == 0) continue;
      Integer scale = row.values(row.pivot);
      Integer factor = lead;
      v = (v * scale - row.values * factor).eval();
      make_primitive(v);
    }
    return v;
  }

  static void make_primitive(IntRowVector& v) {
    Integer g = 0;
    for (Eigen::Index i = 0; i < v.size(); ++i) g = gcd(g, v(i));
    if (g > 1)
      for (Eigen::Index i = 0; i < v.size(); ++i) v(i) /= g;
  }

  Eigen::Index dim_;
  std::vector<Row> rows_;
};

}  // namespace kreg
