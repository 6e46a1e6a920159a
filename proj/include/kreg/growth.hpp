#pragma once

#include "kreg/linear_representation.hpp"
#include "kreg/semigroup.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace kreg {

enum class GrowthKind { Linear, Exponential };

std::string to_string(GrowthKind kind);

/// Pumping witness for unbounded growth: for all large n some pair (i, j) has
/// |f([u_i y^n v_j]_k)| >= c0 * n, hence |f(N)| > c_log * ln N infinitely often.
struct GrowthCertificate {
  int base = 2;
  std::vector<Word> prefixes;
  Word pump;
  std::vector<Word> suffixes;
  Rational c0;
  /// Longest stored word.
  std::size_t max_word_length = 0;
  /// The coefficient-sum constant K for which m(n) >= n / K, i.e. 1 / c0.
  Rational k_diag;
  /// c0 / (2 M L) with L a rational upper bound on ln k.
  Rational c_log;
  GrowthKind kind = GrowthKind::Linear;

  /// Kernel origin (p, q) of suffix j: n -> f(k^p n + q).
  std::pair<std::size_t, Integer> suffix_origin(std::size_t j) const;
  /// u_i y^n v_j.
  Word pumped_word(std::size_t i, std::size_t n, std::size_t j) const;

  friend bool operator==(const GrowthCertificate&, const GrowthCertificate&) = default;
};

struct GrowthOptions {
  SemigroupBudget budget;
  std::size_t n_min = 8;
  std::size_t n_probe = 64;
  std::size_t max_pump_attempts = 5;
};

enum class CertificateOutcome { Certified, Bounded, BudgetExceeded };

struct CertificateResult {
  CertificateOutcome outcome = CertificateOutcome::BudgetExceeded;
  std::optional<GrowthCertificate> certificate;
  /// Stage that ran out of budget ("semigroup" or "pump").
  std::string stage;
  std::string detail;
};

CertificateResult build_certificate(const LinearRepresentation& rep, const GrowthOptions& options = {});

/// Rational upper bound on ln k with relative slack below 1e-12.
Rational log_upper_bound(int k);

/// c0 / (2 M ln k) rounded down to a rational.
Rational log_constant(const Rational& c0, std::size_t max_word_length, int base);

struct VerificationRow {
  std::size_t n = 0;
  Integer max_value;
  /// n >= n_min, so the row takes part in PASS/FAIL.
  bool checked = false;
  bool ok = true;
};

struct VerificationReport {
  bool pass = false;
  std::optional<std::size_t> first_failure;
  Rational c0;
  std::size_t n_min = 8;
  std::vector<VerificationRow> rows;
};

struct VerifyOptions {
  std::size_t n_min = 8;
  unsigned threads = 1;
};

/// m(n) = max_{i,j} |f([u_i y^n v_j]_k)| for n = 1..max_n, evaluated through
/// evaluate_word; PASS iff m(n) >= c0 * n for every n >= n_min.
VerificationReport verify_certificate(const LinearRepresentation& rep, const GrowthCertificate& cert,
                                      std::size_t max_n, const VerifyOptions& options = {});

struct LogBoundPoint {
  Integer x;
  bool found = false;
  Integer n_value;  // the witness N <= x
  std::string word;
  Integer f_value;
  double ln_n = 0.0;
};

struct LogBoundReport {
  bool applicable = false;
  bool pass = false;
  std::string message;
  std::vector<LogBoundPoint> points;
};

/// For each grid point x = k^e (first_exponent <= e, k^e <= x_max) exhibits a
/// pumped numeral N <= x with |f(N)| > c_log * ln N.  Without a certificate
/// the report says the growth hypothesis is not met.
LogBoundReport log_lower_bound_check(const LinearRepresentation& rep, const GrowthCertificate* cert,
                                     const Integer& x_max, unsigned first_exponent = 10);

}  // namespace kreg
