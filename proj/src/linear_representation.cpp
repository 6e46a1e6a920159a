#include "kreg/linear_representation.hpp"

#include "kreg/error.hpp"
#include "kreg/linalg.hpp"

namespace kreg {

LinearRepresentation::LinearRepresentation(int base, std::vector<IntMatrix> matrices, IntRowVector row,
                                           IntColVector col, std::string name)
    : base_(base), matrices_(std::move(matrices)), row_(std::move(row)), col_(std::move(col)), name_(std::move(name)) {
  check_base(base_);
  const Eigen::Index d = row_.size();
  if (d < 1) throw InvalidArgument("representation dimension must be at least 1");
  if (col_.size() != d) throw InvalidArgument("column vector length does not match dimension");
  if (matrices_.size() != static_cast<std::size_t>(base_))
    throw InvalidArgument("expected " + std::to_string(base_) + " matrices, got " + std::to_string(matrices_.size()));
  for (const IntMatrix& m : matrices_)
    if (m.rows() != d || m.cols() != d) throw InvalidArgument("every matrix must be dim x dim");
  pad_invariant_ = (row_ * matrices_[0]).eval() == row_;
}

IntRowVector LinearRepresentation::state(const Word& w) const {
  if (w.base() != base_) throw IncompatibleBase(base_, w.base());
  IntRowVector v = row_;
  for (int digit : w.digits()) v = (v * matrices_[static_cast<std::size_t>(digit)]).eval();
  return v;
}

IntColVector LinearRepresentation::costate(const Word& w) const {
  if (w.base() != base_) throw IncompatibleBase(base_, w.base());
  IntColVector v = col_;
  for (auto it = w.digits().rbegin(); it != w.digits().rend(); ++it)
    v = (matrices_[static_cast<std::size_t>(*it)] * v).eval();
  return v;
}

Integer LinearRepresentation::evaluate_unstripped(const Word& w) const { return state(w).dot(col_); }

LinearRepresentation LinearRepresentation::renamed(std::string name) const {
  LinearRepresentation copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

bool operator==(const LinearRepresentation& a, const LinearRepresentation& b) {
  if (a.base_ != b.base_ || a.dim() != b.dim() || a.name_ != b.name_) return false;
  if (a.row_ != b.row_ || a.col_ != b.col_) return false;
  for (std::size_t i = 0; i < a.matrices_.size(); ++i)
    if (a.matrices_[i] != b.matrices_[i]) return false;
  return true;
}

Integer evaluate(const LinearRepresentation& rep, const Integer& n) {
  if (n < 0) throw InvalidArgument("evaluate requires n >= 0");
  return rep.evaluate_unstripped(Word::expansion(n, rep.base()));
}

Integer evaluate_word(const LinearRepresentation& rep, const Word& w) {
  if (w.base() != rep.base()) throw IncompatibleBase(rep.base(), w.base());
  return rep.evaluate_unstripped(w.without_leading_zeros());
}

LinearRepresentation pad_invariant_form(const LinearRepresentation& rep) {
  if (rep.is_pad_invariant()) return rep;
  const Eigen::Index d = rep.dim();
  std::vector<IntMatrix> mats;
  mats.reserve(rep.matrices().size());
  for (int i = 0; i < rep.base(); ++i) {
    IntMatrix m = IntMatrix::Zero(2 * d, 2 * d);
    if (i == 0) {
      m.topLeftCorner(d, d) = IntMatrix::Identity(d, d);
    } else {
      m.topRightCorner(d, d) = rep.matrix(i);
    }
    m.bottomRightCorner(d, d) = rep.matrix(i);
    mats.push_back(std::move(m));
  }
  IntRowVector row = IntRowVector::Zero(2 * d);
  row.head(d) = rep.row();
  IntColVector col(2 * d);
  col << rep.col(), rep.col();
  return LinearRepresentation(rep.base(), std::move(mats), std::move(row), std::move(col), rep.name());
}

LinearRepresentation kernel_subsequence(const LinearRepresentation& rep, unsigned level, const Integer& residue) {
  Integer modulus = 1;
  for (unsigned i = 0; i < level; ++i) modulus *= rep.base();
  if (residue < 0 || residue >= modulus)
    throw InvalidArgument("kernel residue " + residue.str() + " out of range [0, " + modulus.str() + ")");
  // A fixed-width suffix is only sound when leading zeros are harmless.
  const LinearRepresentation base_rep = pad_invariant_form(rep);
  Word suffix = Word::expansion(residue, rep.base());
  suffix = Word(rep.base(), std::vector<int>(level - suffix.size(), 0)) + suffix;
  return LinearRepresentation(base_rep.base(), base_rep.matrices(), base_rep.row(), base_rep.costate(suffix));
}

LinearRepresentation add(const LinearRepresentation& a, const LinearRepresentation& b) {
  if (a.base() != b.base()) throw IncompatibleBase(a.base(), b.base());
  std::vector<IntMatrix> mats;
  for (int i = 0; i < a.base(); ++i) mats.push_back(block_diagonal(a.matrix(i), b.matrix(i)));
  IntRowVector row(a.dim() + b.dim());
  row << a.row(), b.row();
  IntColVector col(a.dim() + b.dim());
  col << a.col(), b.col();
  return LinearRepresentation(a.base(), std::move(mats), std::move(row), std::move(col));
}

LinearRepresentation scale(const LinearRepresentation& rep, const Integer& c) {
  IntColVector col = rep.col();
  for (Eigen::Index i = 0; i < col.size(); ++i) col(i) *= c;
  return LinearRepresentation(rep.base(), rep.matrices(), rep.row(), std::move(col));
}

LinearRepresentation pointwise_product(const LinearRepresentation& a, const LinearRepresentation& b) {
  if (a.base() != b.base()) throw IncompatibleBase(a.base(), b.base());
  std::vector<IntMatrix> mats;
  for (int i = 0; i < a.base(); ++i) mats.push_back(kronecker(a.matrix(i), b.matrix(i)));
  IntRowVector row = kronecker(a.row(), b.row());
  IntColVector col = kronecker(a.col(), b.col());
  return LinearRepresentation(a.base(), std::move(mats), std::move(row), std::move(col));
}

// State (v, S): v = row * A_w, S = sum of row * A_w' over words w' of the same
// length with [w'] <= [w].  Appending digit i maps
//   v -> v A_i,   S -> S B - v (A_{i+1} + ... + A_{k-1}),   B = sum_j A_j,
// which is exact once leading zeros are harmless.
LinearRepresentation partial_sum_representation(const LinearRepresentation& rep) {
  const LinearRepresentation src = pad_invariant_form(rep);
  const Eigen::Index d = src.dim();
  const int k = src.base();
  IntMatrix total = IntMatrix::Zero(d, d);
  for (const IntMatrix& m : src.matrices()) total += m;

  std::vector<IntMatrix> mats(static_cast<std::size_t>(k));
  IntMatrix tail = IntMatrix::Zero(d, d);
  for (int i = k - 1; i >= 0; --i) {
    IntMatrix m = IntMatrix::Zero(2 * d, 2 * d);
    m.topLeftCorner(d, d) = src.matrix(i);
    m.topRightCorner(d, d) = -tail;
    m.bottomRightCorner(d, d) = total;
    mats[static_cast<std::size_t>(i)] = std::move(m);
    tail += src.matrix(i);
  }
  IntRowVector row(2 * d);
  row << src.row(), src.row();
  IntColVector col(2 * d);
  col << IntColVector::Zero(d), src.col();
  std::string name = rep.name().empty() ? std::string{} : "partial-sums(" + rep.name() + ")";
  return LinearRepresentation(k, std::move(mats), std::move(row), std::move(col), std::move(name));
}

LinearRepresentation constant_sequence(int base, const Integer& value) {
  check_base(base);
  std::vector<IntMatrix> mats(static_cast<std::size_t>(base), IntMatrix::Identity(1, 1));
  IntRowVector row(1);
  row << Integer(1);
  IntColVector col(1);
  col << value;
  return LinearRepresentation(base, std::move(mats), std::move(row), std::move(col), "constant");
}

}  // namespace kreg
