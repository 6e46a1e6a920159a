#include "kreg/word.hpp"

#include "kreg/error.hpp"

#include <algorithm>

namespace kreg {

void check_base(int base) {
  if (base < 2 || base > 36) throw InvalidArgument("base must lie in [2, 36], got " + std::to_string(base));
}

char digit_char(int digit) { return static_cast<char>(digit < 10 ? '0' + digit : 'a' + (digit - 10)); }

Word::Word(int base, std::vector<int> digits) : base_(base), digits_(std::move(digits)) {
  check_base(base_);
  for (int d : digits_)
    if (d < 0 || d >= base_)
      throw InvalidArgument("digit " + std::to_string(d) + " out of range for base " + std::to_string(base_));
}

Word Word::expansion(const Integer& n, int base) {
  check_base(base);
  if (n < 0) throw InvalidArgument("cannot expand a negative integer");
  std::vector<int> digits;
  Integer rest = n;
  const Integer k = base;
  while (rest > 0) {
    digits.push_back(static_cast<int>(rest % k));
    rest /= k;
  }
  std::reverse(digits.begin(), digits.end());
  return Word(base, std::move(digits));
}

Word Word::parse(std::string_view text, int base) {
  check_base(base);
  std::vector<int> digits;
  digits.reserve(text.size());
  for (char c : text) {
    int d = -1;
    if (c >= '0' && c <= '9') d = c - '0';
    else if (c >= 'a' && c <= 'z') d = c - 'a' + 10;
    else if (c >= 'A' && c <= 'Z') d = c - 'A' + 10;
    if (d < 0 || d >= base)
      throw InvalidArgument("invalid digit '" + std::string(1, c) + "' for base " + std::to_string(base));
    digits.push_back(d);
  }
  return Word(base, std::move(digits));
}

Integer Word::value() const {
  Integer acc = 0;
  for (int d : digits_) acc = acc * base_ + d;
  return acc;
}

Word Word::without_leading_zeros() const {
  auto first = std::find_if(digits_.begin(), digits_.end(), [](int d) { return d != 0; });
  return Word(base_, std::vector<int>(first, digits_.end()));
}

Word Word::repeated(std::size_t times) const {
  std::vector<int> out;
  out.reserve(digits_.size() * times);
  for (std::size_t i = 0; i < times; ++i) out.insert(out.end(), digits_.begin(), digits_.end());
  return Word(base_, std::move(out));
}

std::string Word::to_string() const {
  std::string out;
  out.reserve(digits_.size());
  for (int d : digits_) out.push_back(digit_char(d));
  return out;
}

Word operator+(const Word& a, const Word& b) {
  if (a.base_ != b.base_) throw IncompatibleBase(a.base_, b.base_);
  std::vector<int> out = a.digits_;
  out.insert(out.end(), b.digits_.begin(), b.digits_.end());
  return Word(a.base_, std::move(out));
}

bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.digits() < b.digits();
}

}  // namespace kreg
