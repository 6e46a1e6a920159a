#include "kreg/growth.hpp"

#include "kreg/error.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <thread>

namespace kreg {

std::string to_string(GrowthKind kind) { return kind == GrowthKind::Linear ? "LINEAR" : "EXPONENTIAL"; }

std::pair<std::size_t, Integer> GrowthCertificate::suffix_origin(std::size_t j) const {
  const Word& v = suffixes.at(j);
  return {v.size(), v.value()};
}

Word GrowthCertificate::pumped_word(std::size_t i, std::size_t n, std::size_t j) const {
  return prefixes.at(i) + pump.repeated(n) + suffixes.at(j);
}

Rational log_upper_bound(int k) {
  // 1e12 * ln k, rounded up past any double rounding error.
  const double scaled = std::ceil(std::log(static_cast<double>(k)) * 1e12) + 2.0;
  return Rational(Integer(static_cast<long long>(scaled)), Integer(1000000000000LL));
}

Rational log_constant(const Rational& c0, std::size_t max_word_length, int base) {
  return c0 / (Rational(2 * static_cast<long long>(max_word_length)) * log_upper_bound(base));
}

namespace {

Integer abs_value(Integer v) { return v < 0 ? Integer(-v) : v; }

}  // namespace

CertificateResult build_certificate(const LinearRepresentation& rep, const GrowthOptions& options) {
  CertificateResult result;
  if (options.n_min < 1 || options.n_probe <= options.n_min)
    throw InvalidArgument("growth probe window requires 1 <= n_min < n_probe");
  // Leading zeros inside u y^n v must not matter for the matrix route.
  const LinearRepresentation work = pad_invariant_form(rep);
  const std::vector<Word> prefixes = spanning_prefixes(work);
  if (prefixes.empty()) {
    result.outcome = CertificateOutcome::Bounded;
    result.detail = "row vector is zero; the sequence vanishes identically";
    return result;
  }

  const WitnessSearch search = infinite_order_elements(work.matrices(), options.max_pump_attempts, options.budget);
  if (search.witnesses.empty()) {
    if (search.status == ExplorationStatus::Closed) {
      result.outcome = CertificateOutcome::Bounded;
      result.detail = "matrix semigroup is finite, so the sequence takes finitely many values";
    } else {
      result.outcome = CertificateOutcome::BudgetExceeded;
      result.stage = "semigroup";
      result.detail = "no element of infinite order found within budget";
    }
    return result;
  }

  const std::vector<Word> suffixes = spanning_suffixes(work);
  std::vector<IntRowVector> lefts;
  for (const Word& u : prefixes) lefts.push_back(work.state(u));
  std::vector<IntColVector> rights;
  for (const Word& v : suffixes) rights.push_back(work.costate(v));

  std::ostringstream rejected;
  for (const InfiniteOrderWitness& witness : search.witnesses) {
    const SpectralReport observed = classify_observed(witness.matrix, lefts, rights);
    if (observed.classification == GrowthClass::FiniteOrder) {
      rejected << "pump '" << witness.word.to_string() << "': growth not visible to the sequence; ";
      continue;
    }
    // m(n) on the probe window, by the matrix route.
    std::vector<IntRowVector> pumped = lefts;
    std::vector<Integer> m(options.n_probe + 1, Integer(0));
    for (std::size_t n = 1; n <= options.n_probe; ++n) {
      for (IntRowVector& l : pumped) l = (l * witness.matrix).eval();
      if (n < options.n_min) continue;
      for (const IntRowVector& l : pumped)
        for (const IntColVector& r : rights) m[n] = std::max(m[n], abs_value(l.dot(r)));
    }
    const Integer& first = m[options.n_min];
    const Integer& last = m[options.n_probe];
    if (last <= first) {
      rejected << "pump '" << witness.word.to_string() << "': empirical maximum does not grow; ";
      continue;
    }
    Rational c0 = Rational(last - first) / Rational(static_cast<long long>(options.n_probe - options.n_min));
    for (std::size_t n = options.n_min; n <= options.n_probe; ++n)
      c0 = std::min(c0, Rational(m[n]) / Rational(static_cast<long long>(n)));
    if (c0 <= 0) {
      rejected << "pump '" << witness.word.to_string() << "': zero growth constant; ";
      continue;
    }

    GrowthCertificate cert;
    cert.base = rep.base();
    cert.prefixes = prefixes;
    cert.pump = Word(rep.base(), witness.word.digits());
    cert.suffixes = suffixes;
    cert.c0 = c0;
    cert.max_word_length = cert.pump.size();
    for (const Word& w : prefixes) cert.max_word_length = std::max(cert.max_word_length, w.size());
    for (const Word& w : suffixes) cert.max_word_length = std::max(cert.max_word_length, w.size());
    cert.k_diag = Rational(1) / c0;
    cert.c_log = log_constant(c0, cert.max_word_length, rep.base());
    cert.kind = observed.classification == GrowthClass::Expanding ? GrowthKind::Exponential : GrowthKind::Linear;
    result.outcome = CertificateOutcome::Certified;
    result.certificate = std::move(cert);
    return result;
  }
  result.outcome = CertificateOutcome::BudgetExceeded;
  result.stage = "pump";
  result.detail = "no usable pump among " + std::to_string(search.witnesses.size()) + " witnesses: " + rejected.str();
  return result;
}

VerificationReport verify_certificate(const LinearRepresentation& rep, const GrowthCertificate& cert,
                                      std::size_t max_n, const VerifyOptions& options) {
  if (cert.base != rep.base()) throw IncompatibleBase(rep.base(), cert.base);
  VerificationReport report;
  report.c0 = cert.c0;
  report.n_min = options.n_min;
  report.rows.resize(max_n);

  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t n = begin; n < end; ++n) {
      VerificationRow& row = report.rows[n - 1];
      row.n = n;
      row.max_value = 0;
      for (std::size_t i = 0; i < cert.prefixes.size(); ++i)
        for (std::size_t j = 0; j < cert.suffixes.size(); ++j)
          row.max_value = std::max(row.max_value, abs_value(evaluate_word(rep, cert.pumped_word(i, n, j))));
      row.checked = n >= options.n_min;
      row.ok = !row.checked || Rational(row.max_value) >= cert.c0 * Rational(static_cast<long long>(n));
    }
  };

  const unsigned threads = std::max(1U, std::min<unsigned>(options.threads, static_cast<unsigned>(max_n)));
  if (threads <= 1 || max_n < 2) {
    work(1, max_n + 1);
  } else {
    // Interleaved chunks balance the cost, which grows with n.
    std::vector<std::thread> pool;
    const std::size_t chunk = 8;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&, t] {
        for (std::size_t begin = 1 + t * chunk; begin <= max_n; begin += threads * chunk)
          work(begin, std::min(begin + chunk, max_n + 1));
      });
    for (std::thread& th : pool) th.join();
  }

  report.pass = true;
  for (const VerificationRow& row : report.rows)
    if (!row.ok) {
      report.pass = false;
      report.first_failure = row.n;
      break;
    }
  return report;
}

namespace {

// ln 2 rounded up.
const Rational kLn2Upper(Integer(6931471805599453095LL), Integer(10000000000000000000ULL));

// Exact sufficient test for |value| > c * ln N, using ln N < bitlength(N) * ln 2.
bool exceeds_log_bound(const Integer& magnitude, const Rational& c, const Integer& n) {
  const auto bits = static_cast<long long>(boost::multiprecision::msb(n)) + 1;
  return Rational(magnitude) > c * Rational(bits) * kLn2Upper;
}

double natural_log(const Integer& n) {
  const auto bits = static_cast<long long>(boost::multiprecision::msb(n));
  if (bits < 1000) return std::log(n.convert_to<double>());
  const Integer top = n >> static_cast<unsigned>(bits - 60);
  return std::log(top.convert_to<double>()) + static_cast<double>(bits - 60) * std::log(2.0);
}

}  // namespace

LogBoundReport log_lower_bound_check(const LinearRepresentation& rep, const GrowthCertificate* cert,
                                     const Integer& x_max, unsigned first_exponent) {
  LogBoundReport report;
  if (cert == nullptr) {
    report.message = "no certificate; theorem hypothesis (unbounded) not met";
    return report;
  }
  if (cert->base != rep.base()) throw IncompatibleBase(rep.base(), cert->base);
  report.applicable = true;
  report.pass = true;
  const int k = rep.base();
  Integer x = boost::multiprecision::pow(Integer(k), first_exponent);
  for (unsigned e = first_exponent; x <= x_max; ++e, x *= k) {
    LogBoundPoint point;
    point.x = x;
    // Largest n first; a pump with leading zeros can still give N <= x for n > e / |y|.
    for (std::size_t n = e + 2; n >= 1 && !point.found; --n) {
      for (std::size_t i = 0; i < cert->prefixes.size() && !point.found; ++i)
        for (std::size_t j = 0; j < cert->suffixes.size() && !point.found; ++j) {
          const Word w = cert->pumped_word(i, n, j);
          const Integer value = w.value();
          if (value < 2 || value > x) continue;
          const Integer f = evaluate_word(rep, w);
          if (!exceeds_log_bound(abs_value(f), cert->c_log, value)) continue;
          point.found = true;
          point.n_value = value;
          point.word = w.to_string();
          point.f_value = f;
          point.ln_n = natural_log(value);
        }
    }
    if (!point.found) report.pass = false;
    report.points.push_back(std::move(point));
  }
  if (report.points.empty()) {
    report.pass = false;
    report.message = "grid is empty: x_max below k^" + std::to_string(first_exponent);
  } else {
    report.message = report.pass ? "every grid point has a witness" : "some grid point has no witness";
  }
  return report;
}

}  // namespace kreg
