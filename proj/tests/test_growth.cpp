#include "support.hpp"

#include "kreg/builtins.hpp"
#include "kreg/growth.hpp"

#include <doctest.h>

using namespace kreg;
using namespace kreg::test;

namespace {

GrowthCertificate hand_built(int base, std::vector<std::string> prefixes, std::string pump,
                             std::vector<std::string> suffixes, Rational c0) {
  GrowthCertificate cert;
  cert.base = base;
  for (const auto& p : prefixes) cert.prefixes.push_back(Word::parse(p, base));
  cert.pump = Word::parse(pump, base);
  for (const auto& s : suffixes) cert.suffixes.push_back(Word::parse(s, base));
  cert.c0 = c0;
  cert.max_word_length = cert.pump.size();
  for (const auto& w : cert.prefixes) cert.max_word_length = std::max(cert.max_word_length, w.size());
  for (const auto& w : cert.suffixes) cert.max_word_length = std::max(cert.max_word_length, w.size());
  cert.k_diag = 1 / c0;
  cert.c_log = log_constant(c0, cert.max_word_length, base);
  return cert;
}

GrowthCertificate certify(const LinearRepresentation& rep) {
  const auto result = build_certificate(rep);
  REQUIRE(result.outcome == CertificateOutcome::Certified);
  return *result.certificate;
}

// [u y^n v]_k from the pieces' values, without building the word.
Integer numeral(const Word& u, const Word& y, std::size_t n, const Word& v, int k) {
  const Integer K(k);
  const Integer ky = boost::multiprecision::pow(K, static_cast<unsigned>(y.size()));
  const Integer kv = boost::multiprecision::pow(K, static_cast<unsigned>(v.size()));
  const Integer kyn = boost::multiprecision::pow(ky, static_cast<unsigned>(n));
  const Integer repeated = ky == 1 ? Integer(0) : y.value() * (kyn - 1) / (ky - 1);
  return (u.value() * kyn + repeated) * kv + v.value();
}

LinearRepresentation fibonacci_rep() {
  return LinearRepresentation(2, {IntMatrix::Identity(2, 2), mat({{0, 1}, {1, 1}})}, rowvec({1, 0}), colvec({0, 1}),
                              "fib");
}

}  // namespace

TEST_CASE("s2 certificate") {
  const auto s2 = digit_sum(2);
  const auto cert = certify(s2);
  CHECK(cert.pump.to_string() == "1");
  CHECK(std::find(cert.prefixes.begin(), cert.prefixes.end(), Word(2, {})) != cert.prefixes.end());
  CHECK(std::find(cert.suffixes.begin(), cert.suffixes.end(), Word(2, {})) != cert.suffixes.end());
  CHECK(cert.c0 >= 1);
  CHECK(cert.kind == GrowthKind::Linear);
  CHECK(cert.max_word_length >= cert.pump.size());
  CHECK(cert.c_log > 0);
  CHECK(cert.c_log <= log_constant(cert.c0, cert.max_word_length, 2));
  for (std::size_t n = 1; n <= 40; ++n) CHECK(evaluate_word(s2, Word::parse("1", 2).repeated(n)) == n);

  const auto report = verify_certificate(s2, cert, 200);
  CHECK(report.pass);
  CHECK(report.rows.size() == 200);
  // Deterministic across thread counts.
  const auto threaded = verify_certificate(s2, cert, 200, {8, 4});
  REQUIRE(threaded.rows.size() == report.rows.size());
  for (std::size_t i = 0; i < report.rows.size(); ++i) CHECK(threaded.rows[i].max_value == report.rows[i].max_value);
}

TEST_CASE("hand-built certificates") {
  const auto s2 = digit_sum(2);
  const auto plain = hand_built(2, {""}, "1", {""}, 1);
  const auto report = verify_certificate(s2, plain, 200);
  CHECK(report.pass);
  for (const auto& row : report.rows) REQUIRE(row.max_value == row.n);

  const auto u2 = uk(2);
  const auto shifted = hand_built(2, {""}, "1", {"1"}, 1);
  const auto u2_report = verify_certificate(u2, shifted, 100);
  CHECK(u2_report.pass);
  for (const auto& row : u2_report.rows) REQUIRE(row.max_value == row.n + 1);

  auto doubled = plain;
  doubled.c0 = 2;
  const auto fail = verify_certificate(s2, doubled, 50);
  CHECK_FALSE(fail.pass);
  CHECK(fail.first_failure == std::optional<std::size_t>(8));
  for (const auto& row : fail.rows) CHECK(row.checked == (row.n >= 8));
}

TEST_CASE("bounded and budget outcomes") {
  const auto tm = build_certificate(thue_morse());
  CHECK(tm.outcome == CertificateOutcome::Bounded);
  CHECK(closure_size(thue_morse().matrices(), 100) == 2);
  CHECK(build_certificate(constant_sequence(3, 4)).outcome == CertificateOutcome::Bounded);

  GrowthOptions tight;
  tight.budget.max_elements = 1;
  const LinearRepresentation perm_heavy(2, {mat({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}), mat({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}})},
                                        rowvec({1, 0, 0}), colvec({1, 2, 3}));
  const auto r = build_certificate(perm_heavy, tight);
  CHECK(r.outcome == CertificateOutcome::BudgetExceeded);
  CHECK(r.stage == "semigroup");
  CHECK(build_certificate(perm_heavy).outcome == CertificateOutcome::Bounded);
}

TEST_CASE("lambda3 partial sums certificate") {
  const auto rep = partial_sum_representation(lambda3());
  const auto cert = certify(rep);
  CHECK(cert.c0 >= 1);
  CHECK(cert.kind == GrowthKind::Linear);
  CHECK(verify_certificate(rep, cert, 200).pass);
  // The pump acts like the digit 1: ternary repunits.
  for (unsigned n = 1; n <= 12; ++n) CHECK(evaluate(rep, (boost::multiprecision::pow(Integer(3), n) - 1) / 2) == n);
}

TEST_CASE("exponential pump") {
  const auto rep = fibonacci_rep();
  const auto cert = certify(rep);
  CHECK(cert.kind == GrowthKind::Exponential);
  const auto report = verify_certificate(rep, cert, 64);
  CHECK(report.pass);
  for (const auto& row : report.rows)
    if (row.checked) REQUIRE(row.max_value >= cert.c0 * row.n);
  // Super-linear: m(64) / 64 dwarfs m(16) / 16.
  CHECK(report.rows[63].max_value * 16 > 1000 * 64 * report.rows[15].max_value);
}

TEST_CASE("numeral consistency and word bound") {
  std::vector<std::pair<LinearRepresentation, GrowthCertificate>> cases;
  for (const auto& rep : {digit_sum(2), digit_sum(3), partial_sum_representation(lambda3()), fibonacci_rep()})
    cases.emplace_back(rep, certify(rep));
  cases.emplace_back(uk(2), hand_built(2, {"", "10"}, "01", {"", "1", "001"}, 1));
  for (const auto& [rep, cert] : cases) {
    const int k = rep.base();
    const auto M = cert.max_word_length;
    for (std::size_t i = 0; i < cert.prefixes.size(); ++i)
      for (std::size_t j = 0; j < cert.suffixes.size(); ++j)
        for (std::size_t n = 0; n <= 30; ++n) {
          const Word w = cert.pumped_word(i, n, j);
          REQUIRE(w.size() == cert.prefixes[i].size() + n * cert.pump.size() + cert.suffixes[j].size());
          const Integer value = numeral(cert.prefixes[i], cert.pump, n, cert.suffixes[j], k);
          REQUIRE(w.value() == value);
          REQUIRE(evaluate(rep, value) == evaluate_word(rep, w));
          if (n >= 2) REQUIRE(value < boost::multiprecision::pow(Integer(k), static_cast<unsigned>(2 * M * n)));
        }
  }
}

TEST_CASE("suffix origins") {
  const auto cert = hand_built(3, {""}, "1", {"", "2", "01"}, 1);
  CHECK(cert.suffix_origin(0) == std::pair<std::size_t, Integer>{0, 0});
  CHECK(cert.suffix_origin(1) == std::pair<std::size_t, Integer>{1, 2});
  CHECK(cert.suffix_origin(2) == std::pair<std::size_t, Integer>{2, 1});
}

TEST_CASE("log constant") {
  const Rational l2 = log_upper_bound(2);
  CHECK(l2 > Rational(693147, 1000000));
  CHECK(l2 < Rational(693148, 1000000));
  const Rational l3 = log_upper_bound(3);
  CHECK(l3 > Rational(1098612, 1000000));
  CHECK(l3 < Rational(1098613, 1000000));
  CHECK(log_constant(1, 1, 2) == 1 / (2 * l2));
}

TEST_CASE("log lower bound") {
  const auto s2 = digit_sum(2);
  const auto cert = certify(s2);
  const Integer x_max = Integer(1) << 32;
  const auto report = log_lower_bound_check(s2, &cert, x_max);
  CHECK(report.applicable);
  CHECK(report.pass);
  CHECK(report.points.size() == 23);
  for (const auto& p : report.points) {
    REQUIRE(p.found);
    REQUIRE(p.n_value <= p.x);
    REQUIRE(evaluate(s2, p.n_value) == p.f_value);
    REQUIRE(static_cast<double>(p.f_value) > static_cast<double>(cert.c_log) * p.ln_n);
  }

  const auto tm = log_lower_bound_check(thue_morse(), nullptr, x_max);
  CHECK_FALSE(tm.applicable);
  CHECK_FALSE(tm.pass);
  CHECK(tm.message == "no certificate; theorem hypothesis (unbounded) not met");

  const auto l3 = partial_sum_representation(lambda3());
  const auto c3 = certify(l3);
  const auto r3 = log_lower_bound_check(l3, &c3, boost::multiprecision::pow(Integer(3), 20));
  CHECK(r3.pass);
  CHECK(r3.points.size() == 11);
}
