#pragma once

#include "kreg/scalar.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace kreg {

/// A finite string over {0, ..., base-1}, most significant digit first.  It
/// may be empty and may carry leading zeros.
class Word {
 public:
  Word() = default;
  Word(int base, std::vector<int> digits);

  /// Canonical base-k expansion of n (no leading zero; empty for n = 0).
  static Word expansion(const Integer& n, int base);
  /// Digit string using '0'-'9' then 'a'-'z'; bases up to 36.
  static Word parse(std::string_view text, int base);

  int base() const { return base_; }
  const std::vector<int>& digits() const { return digits_; }
  std::size_t size() const { return digits_.size(); }
  bool empty() const { return digits_.empty(); }
  int operator[](std::size_t i) const { return digits_[i]; }

  /// [w]_k; the empty word and all-zero words denote 0.
  Integer value() const;
  Word without_leading_zeros() const;
  Word repeated(std::size_t times) const;
  std::string to_string() const;

  friend Word operator+(const Word& a, const Word& b);
  friend bool operator==(const Word&, const Word&) = default;

 private:
  int base_ = 2;
  std::vector<int> digits_;
};

/// Shorter words first, lexicographic within a length.
bool shortlex_less(const Word& a, const Word& b);

void check_base(int base);
char digit_char(int digit);

}  // namespace kreg
