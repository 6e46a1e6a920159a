#include "kreg/polynomial.hpp"

#include "kreg/error.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace kreg {

IntPolynomial::IntPolynomial(std::vector<Integer> coefficients) : coefficients_(std::move(coefficients)) {
  trim();
}

IntPolynomial IntPolynomial::constant(const Integer& c) { return IntPolynomial({c}); }

IntPolynomial IntPolynomial::monomial(int degree) {
  std::vector<Integer> c(static_cast<std::size_t>(degree) + 1, Integer(0));
  c.back() = 1;
  return IntPolynomial(std::move(c));
}

void IntPolynomial::trim() {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

Integer IntPolynomial::coefficient(int power) const {
  if (power < 0 || power > degree()) return 0;
  return coefficients_[static_cast<std::size_t>(power)];
}

Integer IntPolynomial::operator()(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Integer> c(std::max(a.coefficients_.size(), b.coefficients_.size()), Integer(0));
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i) c[i] += a.coefficients_[i];
  for (std::size_t i = 0; i < b.coefficients_.size(); ++i) c[i] += b.coefficients_[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Integer> c(std::max(a.coefficients_.size(), b.coefficients_.size()), Integer(0));
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i) c[i] += a.coefficients_[i];
  for (std::size_t i = 0; i < b.coefficients_.size(); ++i) c[i] -= b.coefficients_[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> c(a.coefficients_.size() + b.coefficients_.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i)
    for (std::size_t j = 0; j < b.coefficients_.size(); ++j) c[i + j] += a.coefficients_[i] * b.coefficients_[j];
  return IntPolynomial(std::move(c));
}

std::pair<IntPolynomial, IntPolynomial> IntPolynomial::divmod(const IntPolynomial& monic_divisor) const {
  if (!monic_divisor.is_monic()) throw InvalidArgument("polynomial division requires a monic divisor");
  const int dd = monic_divisor.degree();
  std::vector<Integer> rem = coefficients_;
  if (degree() < dd) return {IntPolynomial{}, *this};
  std::vector<Integer> quot(static_cast<std::size_t>(degree() - dd) + 1, Integer(0));
  for (int i = degree(); i >= dd; --i) {
    const Integer lead = rem[static_cast<std::size_t>(i)];
    if (lead == 0) continue;
    quot[static_cast<std::size_t>(i - dd)] = lead;
    for (int j = 0; j <= dd; ++j)
      rem[static_cast<std::size_t>(i - dd + j)] -= lead * monic_divisor.coefficients_[static_cast<std::size_t>(j)];
  }
  return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

std::optional<IntPolynomial> IntPolynomial::exact_divide(const IntPolynomial& monic_divisor) const {
  auto [q, r] = divmod(monic_divisor);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

IntPolynomial IntPolynomial::pow(unsigned exponent) const {
  IntPolynomial result = constant(1);
  for (unsigned i = 0; i < exponent; ++i) result = result * *this;
  return result;
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    Integer c = coefficients_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      out << c;
      continue;
    }
    if (c != 1) out << c << '*';
    out << 'x';
    if (i > 1) out << '^' << i;
  }
  return out.str();
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t result = n;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

const IntPolynomial& cyclotomic(std::uint64_t n) {
  if (n == 0) throw InvalidArgument("cyclotomic index must be positive");
  static std::mutex mutex;
  static std::map<std::uint64_t, std::unique_ptr<IntPolynomial>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return *it->second;
  }
  IntPolynomial p = IntPolynomial::monomial(static_cast<int>(n)) - IntPolynomial::constant(1);
  for (std::uint64_t d = 1; d < n; ++d)
    if (n % d == 0) p = *p.exact_divide(cyclotomic(d));
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.emplace(n, std::make_unique<IntPolynomial>(std::move(p)));
  return *it->second;
}

std::vector<std::uint64_t> cyclotomic_indices_up_to_degree(int max_degree) {
  std::vector<std::uint64_t> out;
  if (max_degree < 1) return out;
  // phi(n) >= sqrt(n / 2), so n <= 2 * max_degree^2 covers every candidate.
  const auto bound = 2 * static_cast<std::uint64_t>(max_degree) * static_cast<std::uint64_t>(max_degree) + 2;
  for (std::uint64_t n = 1; n <= bound; ++n)
    if (euler_phi(n) <= static_cast<std::uint64_t>(max_degree)) out.push_back(n);
  return out;
}

}  // namespace kreg
