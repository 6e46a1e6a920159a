#pragma once

#include "kreg/scalar.hpp"
#include "kreg/word.hpp"

#include <string>
#include <vector>

namespace kreg {

/// A k-regular sequence in linear form: f(n) = row * A_{d_s} ... A_{d_0} * col
/// where d_s ... d_0 is the canonical base-k expansion of n.  Immutable.
class LinearRepresentation {
 public:
  LinearRepresentation(int base, std::vector<IntMatrix> matrices, IntRowVector row, IntColVector col,
                       std::string name = {});

  int base() const { return base_; }
  Eigen::Index dim() const { return row_.size(); }
  const std::vector<IntMatrix>& matrices() const { return matrices_; }
  const IntMatrix& matrix(int digit) const { return matrices_.at(static_cast<std::size_t>(digit)); }
  const IntRowVector& row() const { return row_; }
  const IntColVector& col() const { return col_; }
  const std::string& name() const { return name_; }

  /// row * A_0 == row, i.e. leading zeros never change a value.
  bool is_pad_invariant() const { return pad_invariant_; }

  /// row * A_w for the word exactly as given (no stripping).
  IntRowVector state(const Word& w) const;
  /// A_w * col for the word exactly as given.
  IntColVector costate(const Word& w) const;
  /// row * A_w * col for the word exactly as given.
  Integer evaluate_unstripped(const Word& w) const;

  LinearRepresentation renamed(std::string name) const;

  friend bool operator==(const LinearRepresentation& a, const LinearRepresentation& b);

 private:
  int base_;
  std::vector<IntMatrix> matrices_;
  IntRowVector row_;
  IntColVector col_;
  std::string name_;
  bool pad_invariant_ = false;
};

Integer evaluate(const LinearRepresentation& rep, const Integer& n);
/// Value at [w]_k; leading zeros are stripped first.  Throws IncompatibleBase.
Integer evaluate_word(const LinearRepresentation& rep, const Word& w);

/// Representation of n -> f(k^level * n + residue).
LinearRepresentation kernel_subsequence(const LinearRepresentation& rep, unsigned level, const Integer& residue);

LinearRepresentation add(const LinearRepresentation& a, const LinearRepresentation& b);
LinearRepresentation scale(const LinearRepresentation& rep, const Integer& c);
LinearRepresentation pointwise_product(const LinearRepresentation& a, const LinearRepresentation& b);

/// An equivalent representation with row * A_0 == row.  Returns `rep` itself
/// when it already has the property; otherwise doubles the dimension by
/// tracking whether a nonzero digit has been read.
LinearRepresentation pad_invariant_form(const LinearRepresentation& rep);

/// Representation of F(n) = sum_{m <= n} f(m), of dimension 2d (pad-invariant
/// input) or 4d.
LinearRepresentation partial_sum_representation(const LinearRepresentation& rep);

LinearRepresentation constant_sequence(int base, const Integer& value);

}  // namespace kreg
