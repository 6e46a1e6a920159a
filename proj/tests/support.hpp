#pragma once

// Helpers shared by the unit tests: literal matrices, seeded random
// generators, and brute-force oracles that avoid the code under test.

#include "kreg/linalg.hpp"
#include "kreg/linear_representation.hpp"
#include "kreg/spectral.hpp"

#include <cstdint>
#include <initializer_list>
#include <map>
#include <numeric>
#include <utility>
#include <random>
#include <set>
#include <vector>

namespace kreg::test {

inline IntMatrix mat(std::initializer_list<std::initializer_list<long>> rows) {
  const auto d = static_cast<Eigen::Index>(rows.size());
  IntMatrix m(d, static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& r : rows) {
    Eigen::Index j = 0;
    for (long v : r) m(i, j++) = v;
    ++i;
  }
  return m;
}

inline IntRowVector rowvec(std::initializer_list<long> values) {
  IntRowVector v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (long x : values) v(i++) = x;
  return v;
}

inline IntColVector colvec(std::initializer_list<long> values) {
  IntColVector v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (long x : values) v(i++) = x;
  return v;
}

// Fixed-seed generator; every property test names its seed.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  IntMatrix matrix(Eigen::Index rows, Eigen::Index cols, long lo, long hi) {
    IntMatrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
      for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = integer(lo, hi);
    return m;
  }

  LinearRepresentation representation(int base, Eigen::Index dim, long lo, long hi) {
    std::vector<IntMatrix> ms;
    for (int i = 0; i < base; ++i) ms.push_back(matrix(dim, dim, lo, hi));
    IntRowVector row = matrix(1, dim, lo, hi);
    IntColVector col = matrix(dim, 1, lo, hi);
    return LinearRepresentation(base, std::move(ms), std::move(row), std::move(col));
  }

  Word word(int base, std::size_t max_length) {
    std::vector<int> digits(static_cast<std::size_t>(integer(0, static_cast<long>(max_length))));
    for (int& d : digits) d = static_cast<int>(integer(0, base - 1));
    return Word(base, std::move(digits));
  }

 private:
  std::mt19937_64 rng_;
};

inline int parity_of_ones(std::uint64_t n) { return __builtin_popcountll(n) & 1; }

inline long digit_sum_oracle(std::uint64_t n, std::uint64_t k) {
  long s = 0;
  for (; n > 0; n /= k) s += static_cast<long>(n % k);
  return s;
}

inline long lambda3_oracle(std::uint64_t n) {
  if (n == 0) return 0;
  while (n % 3 == 0) n /= 3;
  return n % 3 == 1 ? 1 : -1;
}

// Brent cycle detection on M, M^2, ... (cap 10^4 steps, entries capped at
// 10^100) decides finiteness.  For infinite order, exponential iff
// ||M^128|| / ||M^64|| is huge: polynomial growth of degree < d gives about
// 2^(d-1), while an eigenvalue of modulus > 1 of an integer matrix of size
// <= 4 exceeds 1.3, giving a ratio above 1e7.
inline bool brent_finite(const IntMatrix& m, std::uint64_t cap = 10000) {
  const Integer entry_cap = boost::multiprecision::pow(Integer(10), 100);
  std::uint64_t power_of_two = 1, lambda = 1;
  IntMatrix tortoise = m;
  IntMatrix hare = m * m;
  for (std::uint64_t steps = 0; steps < cap; ++steps) {
    if (hare == tortoise) return true;
    if (max_abs_entry(hare) > entry_cap) return false;
    if (power_of_two == lambda) {
      tortoise = hare;
      power_of_two *= 2;
      lambda = 0;
    }
    hare = hare * m;
    ++lambda;
  }
  return false;
}

inline GrowthClass power_iteration_class(const IntMatrix& m) {
  if (brent_finite(m)) return GrowthClass::FiniteOrder;
  const Integer a = max_abs_entry(power(m, 64));
  const Integer b = max_abs_entry(power(m, 128));
  return b > 1000 * a ? GrowthClass::Expanding : GrowthClass::LinearGrowth;
}

// Closure by repeated multiplication with a cap; returns 0 if the cap is hit.
inline std::size_t closure_size(const std::vector<IntMatrix>& gens, std::size_t cap) {
  std::set<std::string> seen;
  std::vector<IntMatrix> frontier;
  for (const IntMatrix& g : gens)
    if (seen.insert(canonical_key(g)).second) frontier.push_back(g);
  while (!frontier.empty()) {
    std::vector<IntMatrix> next;
    for (const IntMatrix& a : frontier)
      for (const IntMatrix& g : gens) {
        IntMatrix p = a * g;
        if (seen.insert(canonical_key(p)).second) {
          if (seen.size() > cap) return 0;
          next.push_back(p);
        }
      }
    frontier = std::move(next);
  }
  return seen.size();
}

// 3x3 and 4x4 cases with known classification.
inline std::vector<std::pair<IntMatrix, GrowthClass>> hand_picked() {
  const IntMatrix rotation = mat({{0, -1}, {1, 0}});
  const IntMatrix jordan = mat({{1, 1}, {0, 1}});
  return {
      {block_diagonal(jordan, rotation), GrowthClass::LinearGrowth},
      {mat({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}), GrowthClass::FiniteOrder},                           // 3-cycle
      {mat({{0, 0, 1}, {1, 0, 1}, {0, 1, 0}}), GrowthClass::Expanding},                             // x^3 - x - 1
      {mat({{1, 1, 0}, {0, 1, 1}, {0, 0, 1}}), GrowthClass::LinearGrowth},                          // J3(1)
      {block_diagonal(mat({{0, 1}, {1, 1}}), mat({{1}})), GrowthClass::Expanding},
      {mat({{0, 1, 0}, {0, 0, 1}, {0, 0, 0}}), GrowthClass::FiniteOrder},                           // nilpotent
      {block_diagonal(mat({{-1, 1}, {0, -1}}), mat({{1}})), GrowthClass::LinearGrowth},             // J2(-1) + 1
      {mat({{0, 0, 0, -1}, {1, 0, 0, -1}, {0, 1, 0, -1}, {0, 0, 1, -1}}), GrowthClass::FiniteOrder},  // Phi_5
      {mat({{0, -1, 1, 0}, {1, 0, 0, 1}, {0, 0, 0, -1}, {0, 0, 1, 0}}), GrowthClass::LinearGrowth},   // rotation block
      {mat({{2, 0, 0}, {0, 1, 0}, {0, 0, 1}}), GrowthClass::Expanding},
  };
}

// Residue-class oracle for the periodicity condition: for each l, buckets
// the n <= n_max with gcd(n, k^(l+1)) | k^l by n mod k^(r+l) and reports
// whether some bucket mixes values.  f[n] for n in [1, f.size()).
inline bool sp_violated(const std::vector<int>& f, std::uint64_t k, unsigned r, unsigned l_max) {
  const std::uint64_t n_max = f.size() - 1;
  for (unsigned l = 0; l <= l_max; ++l) {
    std::uint64_t kl = 1;
    for (unsigned i = 0; i < l; ++i) kl *= k;
    std::uint64_t modulus = kl;
    for (unsigned i = 0; i < r; ++i) modulus *= k;
    std::map<std::uint64_t, int> seen;
    for (std::uint64_t n = 1; n <= n_max; ++n) {
      if (kl % std::gcd(n, kl * k) != 0) continue;
      auto [it, inserted] = seen.emplace(n % modulus, f[n]);
      if (!inserted && it->second != f[n]) return true;
    }
  }
  return false;
}

}  // namespace kreg::test
