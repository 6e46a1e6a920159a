#pragma once

// Completely multiplicative +-1 functions that agree with a real Dirichlet
// character modulo a prime q on integers coprime to q, and the discrepancy
// machinery built on their partial sums.

#include "kreg/scalar.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace kreg {

enum class Character { Trivial, Quadratic };

std::string to_string(Character c);

struct MultiplicativeSpec {
  std::uint64_t q = 3;
  unsigned m = 1;
  Character character = Character::Quadratic;
  int value_at_q = 1;

  /// Throws InvalidArgument unless q is prime, m >= 1, f(q) = +-1 and the
  /// character exists (no quadratic character mod 2).
  void validate() const;
  /// k = q^m.
  std::uint64_t base() const;

  friend bool operator==(const MultiplicativeSpec&, const MultiplicativeSpec&) = default;
};

/// lambda_3 as a spec: q = 3, quadratic character, f(3) = 1.
MultiplicativeSpec lambda3_spec();

/// Random access f(n) for n >= 1: f(q)^{v_q(n)} * chi(n / q^{v_q(n)} mod q).
class MultiplicativeFunction {
 public:
  explicit MultiplicativeFunction(const MultiplicativeSpec& spec);

  int operator()(std::uint64_t n) const;
  int character_value(std::uint64_t residue) const { return chi_[residue]; }
  const MultiplicativeSpec& spec() const { return spec_; }

 private:
  MultiplicativeSpec spec_;
  std::vector<int> chi_;  // chi(r) for r in [0, q)
};

/// f(1), f(2), ... in order.  Keeps n as base-q digits, so the q-adic
/// valuation and the unit part mod q (the lowest nonzero digit) are updated
/// in amortized O(1) per step.
class MultiplicativeStream {
 public:
  explicit MultiplicativeStream(const MultiplicativeSpec& spec) : function_(spec), q_(spec.q), f_at_q_(spec.value_at_q) {}

  int next() {
    std::size_t i = 0;
    while (i < digits_.size() && digits_[i] == q_ - 1) digits_[i++] = 0;
    if (i == digits_.size()) digits_.push_back(0);
    ++digits_[i];
    ++index_;
    // i trailing zeros, lowest nonzero digit digits_[i].
    const int unit = function_.character_value(digits_[i]);
    return (f_at_q_ < 0 && (i & 1U)) ? -unit : unit;
  }

  std::uint64_t index() const { return index_; }

 private:
  MultiplicativeFunction function_;
  std::uint64_t q_;
  int f_at_q_;
  std::vector<std::uint64_t> digits_;  // least significant first
  std::uint64_t index_ = 0;
};

/// f(1..x).
std::vector<int> multiplicative_values(const MultiplicativeSpec& spec, std::uint64_t x);

struct BaseFactorization {
  std::uint64_t k = 0;
  std::vector<std::pair<std::uint64_t, unsigned>> factors;
  /// Exactly one prime factor: k = q^m.
  bool accept = false;
};

BaseFactorization prime_power_check(std::uint64_t k);

using SequenceSource = std::function<int(std::uint64_t)>;

struct SchlagePuchtaViolation {
  unsigned r = 0;
  unsigned ell = 0;
  std::uint64_t n1 = 0;
  std::uint64_t n2 = 0;
};

struct SchlagePuchtaResult {
  /// Least r without a violation on the tested range.
  std::optional<unsigned> r;
  /// One counterexample for each refuted r < result (or <= r_max).
  std::vector<SchlagePuchtaViolation> refutations;
};

/// Searches 1 <= n1, n2 <= n_max, 0 <= ell <= l_max with gcd(n1, k^(ell+1)) | k^ell
/// and n1 = n2 mod k^(r+ell) for a pair with f(n1) != f(n2).
std::optional<SchlagePuchtaViolation> schlage_puchta_violation(const SequenceSource& f, std::uint64_t k, unsigned r,
                                                               std::uint64_t n_max, unsigned l_max);

SchlagePuchtaResult schlage_puchta_check(const SequenceSource& f, std::uint64_t k, unsigned r_max,
                                         std::uint64_t n_max, unsigned l_max);

struct DiscrepancyRow {
  std::uint64_t n = 0;
  std::int64_t g = 0;
  std::int64_t running_max = 0;
  double log_n = 0.0;
};

struct DiscrepancyReport {
  std::uint64_t x_max = 0;
  std::vector<DiscrepancyRow> rows;
  std::int64_t final_g = 0;
  std::int64_t max_abs_g = 0;
  /// min over grid points N >= 2 of max_{M <= N} |G(M)| / ln N.
  double fitted_c = 0.0;
  bool upper_bound_checked = false;
  bool upper_bound_holds = true;
  std::optional<std::uint64_t> first_upper_violation;
};

struct DiscrepancyOptions {
  /// Grid points are 1, r, r^2, ... (rounded) plus x_max itself.
  double grid_ratio = 2.0;
  /// When set, also checks |G(x)| <= q (1 + log_q x) for every x <= x_max.
  std::optional<std::uint64_t> quadratic_modulus;
};

DiscrepancyReport discrepancy_scan(const SequenceSource& f, std::uint64_t x_max, const DiscrepancyOptions& options = {});
/// Streams the spec; the upper-bound check is enabled for quadratic characters.
DiscrepancyReport discrepancy_scan(const MultiplicativeSpec& spec, std::uint64_t x_max, double grid_ratio = 2.0);

/// Exact test of |g| <= q (1 + log_q x), i.e. q^(|g| - q) <= x^q.
bool within_log_bound(std::int64_t g, std::uint64_t q, std::uint64_t x);

struct RepunitRow {
  unsigned m = 0;
  Integer n;  // [(10)^m]_q
  std::int64_t g = 0;
  std::int64_t expected = 0;
  bool ok = false;
};

struct RepunitReport {
  bool pass = false;
  std::vector<RepunitRow> rows;
};

/// G([(10)^m]_q) = f(q) m for m = 1..m_max, G by direct summation.
RepunitReport repunit_identity_check(const MultiplicativeSpec& spec, unsigned m_max);

struct GRecursionReport {
  std::uint64_t x = 0;
  std::int64_t g_direct = 0;
  std::int64_t g_recursion = 0;
  bool recursion_holds = false;
  std::int64_t period_constant = 0;
  bool periodicity_holds = false;
  std::optional<std::uint64_t> first_periodicity_violation;
};

/// G(x) = sum_i f(q)^i F(floor(x / q^i)) with F the sum over n coprime to q,
/// plus F(y + q) = F(y) + c for 0 <= y <= x with c = q - 1 or 0.
GRecursionReport g_recursion_check(const MultiplicativeSpec& spec, std::uint64_t x);

}  // namespace kreg
