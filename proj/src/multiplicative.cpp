#include "kreg/multiplicative.hpp"

#include "kreg/error.hpp"

#include <cmath>
#include <cstdlib>
#include <map>
#include <numeric>

namespace kreg {

std::string to_string(Character c) { return c == Character::Trivial ? "trivial" : "quadratic"; }

namespace {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

}  // namespace

void MultiplicativeSpec::validate() const {
  if (!is_prime(q)) throw InvalidArgument("q must be prime, got " + std::to_string(q));
  if (m < 1) throw InvalidArgument("m must be at least 1");
  if (value_at_q != 1 && value_at_q != -1) throw InvalidArgument("f(q) must be +1 or -1");
  if (character == Character::Quadratic && q == 2) throw InvalidArgument("there is no quadratic character modulo 2");
}

std::uint64_t MultiplicativeSpec::base() const {
  std::uint64_t k = 1;
  for (unsigned i = 0; i < m; ++i) k *= q;
  return k;
}

MultiplicativeSpec lambda3_spec() { return {3, 1, Character::Quadratic, 1}; }

MultiplicativeFunction::MultiplicativeFunction(const MultiplicativeSpec& spec) : spec_(spec) {
  spec_.validate();
  chi_.assign(spec_.q, spec_.character == Character::Trivial ? 1 : -1);
  chi_[0] = 0;
  if (spec_.character == Character::Quadratic)
    for (std::uint64_t a = 1; a < spec_.q; ++a) chi_[(a * a) % spec_.q] = 1;
}

int MultiplicativeFunction::operator()(std::uint64_t n) const {
  if (n == 0) throw InvalidArgument("multiplicative functions are defined for n >= 1");
  int sign = 1;
  while (n % spec_.q == 0) {
    n /= spec_.q;
    sign *= spec_.value_at_q;
  }
  return sign * chi_[n % spec_.q];
}

std::vector<int> multiplicative_values(const MultiplicativeSpec& spec, std::uint64_t x) {
  MultiplicativeStream stream(spec);
  std::vector<int> out;
  out.reserve(x);
  for (std::uint64_t n = 1; n <= x; ++n) out.push_back(stream.next());
  return out;
}

BaseFactorization prime_power_check(std::uint64_t k) {
  if (k < 2) throw InvalidArgument("base must be at least 2");
  BaseFactorization out;
  out.k = k;
  std::uint64_t rest = k;
  for (std::uint64_t p = 2; p * p <= rest; ++p) {
    unsigned e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    if (e > 0) out.factors.emplace_back(p, e);
  }
  if (rest > 1) out.factors.emplace_back(rest, 1);
  out.accept = out.factors.size() == 1;
  return out;
}

namespace {

// gcd(n, k^e) without forming k^e.
std::uint64_t gcd_with_power(std::uint64_t n, std::uint64_t k, unsigned e) {
  std::uint64_t g = 1;
  for (unsigned i = 0; i < e; ++i) {
    const std::uint64_t t = std::gcd(n, k);
    if (t == 1) break;
    g *= t;
    n /= t;
  }
  return g;
}

// k^e, or 0 when it exceeds `cap`.
std::uint64_t capped_power(std::uint64_t k, unsigned e, std::uint64_t cap) {
  std::uint64_t v = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (v > cap / k) return 0;
    v *= k;
  }
  return v;
}

}  // namespace

std::optional<SchlagePuchtaViolation> schlage_puchta_violation(const SequenceSource& f, std::uint64_t k, unsigned r,
                                                               std::uint64_t n_max, unsigned l_max) {
  std::vector<int> values(n_max + 1, 0);
  for (std::uint64_t n = 1; n <= n_max; ++n) values[n] = f(n);
  for (unsigned ell = 0; ell <= l_max; ++ell) {
    const std::uint64_t modulus = capped_power(k, r + ell, n_max);
    if (modulus == 0) break;  // every class holds at most one n <= n_max
    for (std::uint64_t c = 0; c < modulus; ++c) {
      std::uint64_t n1 = 0;
      for (std::uint64_t n = c == 0 ? modulus : c; n <= n_max; n += modulus) {
        const std::uint64_t g = gcd_with_power(n, k, ell + 1);
        if (gcd_with_power(g, k, ell) == g) {
          n1 = n;
          break;
        }
      }
      if (n1 == 0) continue;
      for (std::uint64_t n2 = c == 0 ? modulus : c; n2 <= n_max; n2 += modulus)
        if (values[n2] != values[n1]) return SchlagePuchtaViolation{r, ell, n1, n2};
    }
  }
  return std::nullopt;
}

SchlagePuchtaResult schlage_puchta_check(const SequenceSource& f, std::uint64_t k, unsigned r_max,
                                         std::uint64_t n_max, unsigned l_max) {
  SchlagePuchtaResult result;
  for (unsigned r = 0; r <= r_max; ++r) {
    auto violation = schlage_puchta_violation(f, k, r, n_max, l_max);
    if (!violation) {
      result.r = r;
      return result;
    }
    result.refutations.push_back(*violation);
  }
  return result;
}

bool within_log_bound(std::int64_t g, std::uint64_t q, std::uint64_t x) {
  const auto t = static_cast<std::uint64_t>(std::llabs(g));
  if (t <= q) return true;
  const Integer lhs = boost::multiprecision::pow(Integer(q), static_cast<unsigned>(t - q));
  const Integer rhs = boost::multiprecision::pow(Integer(x), static_cast<unsigned>(q));
  return lhs <= rhs;
}

namespace {

// Smallest x with within_log_bound(t, q, x), by bisection on x.
std::uint64_t log_bound_threshold(std::int64_t t, std::uint64_t q) {
  std::uint64_t lo = 1;
  std::uint64_t hi = 1;
  while (!within_log_bound(t, q, hi)) {
    lo = hi;
    if (hi > (UINT64_MAX >> 1)) return UINT64_MAX;
    hi *= 2;
  }
  if (within_log_bound(t, q, lo)) return lo;
  while (hi - lo > 1) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    (within_log_bound(t, q, mid) ? hi : lo) = mid;
  }
  return hi;
}

}  // namespace

DiscrepancyReport discrepancy_scan(const SequenceSource& f, std::uint64_t x_max, const DiscrepancyOptions& options) {
  if (options.grid_ratio <= 1.0) throw InvalidArgument("grid ratio must exceed 1");
  DiscrepancyReport report;
  report.x_max = x_max;
  report.upper_bound_checked = options.quadratic_modulus.has_value();
  std::map<std::int64_t, std::uint64_t> thresholds;

  double next_grid = 1.0;
  std::int64_t g = 0;
  std::int64_t running = 0;
  double fitted = HUGE_VAL;
  for (std::uint64_t n = 1; n <= x_max; ++n) {
    g += f(n);
    running = std::max<std::int64_t>(running, std::llabs(g));
    if (options.quadratic_modulus && std::llabs(g) > static_cast<std::int64_t>(*options.quadratic_modulus)) {
      const std::int64_t t = std::llabs(g);
      auto it = thresholds.find(t);
      if (it == thresholds.end()) it = thresholds.emplace(t, log_bound_threshold(t, *options.quadratic_modulus)).first;
      if (n < it->second && report.upper_bound_holds) {
        report.upper_bound_holds = false;
        report.first_upper_violation = n;
      }
    }
    const bool on_grid = static_cast<double>(n) >= next_grid || n == x_max;
    if (!on_grid) continue;
    while (next_grid <= static_cast<double>(n)) next_grid = std::max(next_grid * options.grid_ratio, next_grid + 1.0);
    DiscrepancyRow row{n, g, running, std::log(static_cast<double>(n))};
    if (n >= 2) fitted = std::min(fitted, static_cast<double>(running) / row.log_n);
    report.rows.push_back(row);
  }
  report.final_g = g;
  report.max_abs_g = running;
  report.fitted_c = fitted == HUGE_VAL ? 0.0 : fitted;
  return report;
}

DiscrepancyReport discrepancy_scan(const MultiplicativeSpec& spec, std::uint64_t x_max, double grid_ratio) {
  MultiplicativeStream stream(spec);
  DiscrepancyOptions options;
  options.grid_ratio = grid_ratio;
  if (spec.character == Character::Quadratic) options.quadratic_modulus = spec.q;
  // The scan consumes n = 1, 2, ... in order, matching the stream.
  return discrepancy_scan([&stream](std::uint64_t) { return stream.next(); }, x_max, options);
}

RepunitReport repunit_identity_check(const MultiplicativeSpec& spec, unsigned m_max) {
  spec.validate();
  if (spec.character != Character::Quadratic) throw InvalidArgument("repunit identity needs a quadratic character");
  RepunitReport report;
  std::vector<std::uint64_t> targets;
  Integer numeral = 0;
  for (unsigned m = 1; m <= m_max; ++m) {
    numeral = numeral * spec.q * spec.q + spec.q;  // append the digits "10"
    if (numeral > Integer(UINT64_MAX)) throw InvalidArgument("repunit numeral exceeds 64 bits");
    RepunitRow row;
    row.m = m;
    row.n = numeral;
    row.expected = static_cast<std::int64_t>(spec.value_at_q) * m;
    report.rows.push_back(row);
    targets.push_back(numeral.convert_to<std::uint64_t>());
  }
  MultiplicativeStream stream(spec);
  std::int64_t g = 0;
  std::uint64_t n = 0;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    while (n < targets[i]) {
      g += stream.next();
      ++n;
    }
    report.rows[i].g = g;
    report.rows[i].ok = g == report.rows[i].expected;
  }
  report.pass = std::all_of(report.rows.begin(), report.rows.end(), [](const RepunitRow& r) { return r.ok; });
  return report;
}

GRecursionReport g_recursion_check(const MultiplicativeSpec& spec, std::uint64_t x) {
  if (x < 1) throw InvalidArgument("x must be at least 1");
  MultiplicativeFunction f(spec);
  const std::uint64_t q = spec.q;
  // F on [0, x + q] for the periodicity check.
  std::vector<std::int64_t> coprime_sum(x + q + 1, 0);
  std::int64_t g = 0;
  for (std::uint64_t n = 1; n <= x + q; ++n) {
    const int value = f(n);
    coprime_sum[n] = coprime_sum[n - 1] + (n % q != 0 ? value : 0);
    if (n <= x) g += value;
  }
  GRecursionReport report;
  report.x = x;
  report.g_direct = g;
  // Terms with q^i > x vanish (F(0) = 0).
  std::int64_t sign = 1;
  std::int64_t rhs = 0;
  for (std::uint64_t power = 1; power <= x; power *= q) {
    rhs += sign * coprime_sum[x / power];
    sign *= spec.value_at_q;
    if (power > x / q) break;
  }
  report.g_recursion = rhs;
  report.recursion_holds = rhs == g;
  report.period_constant = spec.character == Character::Trivial ? static_cast<std::int64_t>(q) - 1 : 0;
  report.periodicity_holds = true;
  for (std::uint64_t y = 0; y <= x; ++y)
    if (coprime_sum[y + q] - coprime_sum[y] != report.period_constant) {
      report.periodicity_holds = false;
      report.first_periodicity_violation = y;
      break;
    }
  return report;
}

}  // namespace kreg
