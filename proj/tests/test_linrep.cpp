#include "support.hpp"

#include "kreg/automaton.hpp"
#include "kreg/builtins.hpp"
#include "kreg/error.hpp"

#include <doctest.h>

using namespace kreg;
using namespace kreg::test;

namespace {

std::vector<LinearRepresentation> suite() {
  std::vector<LinearRepresentation> reps{thue_morse(),      digit_sum(2), digit_sum(3),        lambda3(),
                                         power_indicator(2), uk(2),        ones_count_ternary(), constant_sequence(3, 7)};
  Gen gen(0x5eed01);
  for (int i = 0; i < 4; ++i) reps.push_back(gen.representation(2 + i % 2, 2, -1, 1));
  return reps;
}

Integer pow_int(int k, unsigned e) { return boost::multiprecision::pow(Integer(k), e); }

}  // namespace

TEST_CASE("words") {
  CHECK(Word::parse("0101", 2).value() == 5);
  CHECK(Word::parse("", 3).value() == 0);
  CHECK(Word::expansion(0, 2).empty());
  CHECK(Word::expansion(13, 3).to_string() == "111");
  CHECK(Word::parse("00111", 2).without_leading_zeros().to_string() == "111");
  CHECK(Word::parse("z", 36).value() == 35);
  CHECK_THROWS_AS(Word::parse("2", 2), InvalidArgument);
  CHECK_THROWS_AS(Word(2, {0, 3}), InvalidArgument);
  CHECK_THROWS_AS(Word::parse("1", 2) + Word::parse("1", 3), IncompatibleBase);
  CHECK(shortlex_less(Word::parse("1", 2), Word::parse("00", 2)));
  CHECK(shortlex_less(Word::parse("01", 2), Word::parse("10", 2)));

  SUBCASE("digit round trip") {
    for (int k : {2, 3, 10})
      for (std::uint64_t n = 0; n < (1U << 16); ++n) {
        const Word w = Word::expansion(n, k);
        REQUIRE(w.value() == n);
        if (n > 0) REQUIRE(w[0] != 0);
      }
  }
}

TEST_CASE("evaluate examples") {
  CHECK(evaluate(thue_morse(), 5) == 0);
  CHECK(evaluate(digit_sum(2), 0) == 0);
  CHECK(evaluate(digit_sum(2), 7) == 3);
  CHECK(evaluate_word(thue_morse(), Word::parse("0101", 2)) == 0);
  CHECK(evaluate_word(digit_sum(2), Word::parse("00111", 2)) == 3);
  for (const auto& rep : suite()) CHECK(evaluate_word(rep, Word(rep.base(), {})) == evaluate(rep, 0));
  CHECK(evaluate(digit_sum(2), pow_int(2, 10)) == 1);
  CHECK(evaluate(lambda3(), 5) == -1);
  CHECK(evaluate(ones_count_ternary(), 13) == 3);
}

TEST_CASE("evaluate against oracles") {
  const auto tm = thue_morse();
  const auto s2 = digit_sum(2);
  const auto s5 = digit_sum(5);
  const auto l3 = lambda3();
  for (std::uint64_t n = 0; n < 4096; ++n) {
    REQUIRE(evaluate(tm, n) == parity_of_ones(n));
    REQUIRE(evaluate(s2, n) == digit_sum_oracle(n, 2));
    REQUIRE(evaluate(s5, n) == digit_sum_oracle(n, 5));
    REQUIRE(evaluate(l3, n) == lambda3_oracle(n));
  }
  // Entries far beyond 64 bits.
  const Integer big = pow_int(2, 200) - 1;
  CHECK(evaluate(s2, big) == 200);
}

TEST_CASE("validation") {
  CHECK_THROWS_AS(LinearRepresentation(2, {mat({{1}})}, rowvec({1}), colvec({1})), InvalidArgument);
  CHECK_THROWS_AS(LinearRepresentation(2, {mat({{1}}), mat({{1, 0}, {0, 1}})}, rowvec({1}), colvec({1})),
                  InvalidArgument);
  CHECK_THROWS_AS(LinearRepresentation(1, {mat({{1}})}, rowvec({1}), colvec({1})), InvalidArgument);
  CHECK_THROWS_AS(evaluate(digit_sum(2), -1), InvalidArgument);
  CHECK_THROWS_AS(evaluate_word(digit_sum(2), Word::parse("1", 3)), IncompatibleBase);
  CHECK_THROWS_AS(add(digit_sum(2), digit_sum(3)), IncompatibleBase);
  CHECK_THROWS_AS(kernel_subsequence(digit_sum(2), 2, 4), InvalidArgument);
}

TEST_CASE("kernel examples") {
  const auto tm = thue_morse();
  const auto k11 = kernel_subsequence(tm, 1, 1);
  for (std::uint64_t n = 0; n < 1024; ++n) REQUIRE(evaluate(k11, n) == 1 - parity_of_ones(n));
  const auto s2 = digit_sum(2);
  const auto k23 = kernel_subsequence(s2, 2, 3);
  for (std::uint64_t n = 0; n < 1024; ++n) REQUIRE(evaluate(k23, n) == digit_sum_oracle(n, 2) + 2);
  const auto k00 = kernel_subsequence(s2, 0, 0);
  for (std::uint64_t n = 0; n < 256; ++n) REQUIRE(evaluate(k00, n) == evaluate(s2, n));
}

TEST_CASE("kernel consistency") {
  for (const auto& rep : suite()) {
    const int k = rep.base();
    for (unsigned level = 0; level <= 3; ++level) {
      const Integer kl = pow_int(k, level);
      for (Integer r = 0; r < kl; ++r) {
        const auto sub = kernel_subsequence(rep, level, r);
        for (std::uint64_t n = 0; n < 1024; n += (k == 2 ? 1 : 3))
          REQUIRE(evaluate(sub, n) == evaluate(rep, kl * n + r));
      }
    }
  }
}

TEST_CASE("pad invariance") {
  int checked = 0;
  for (const auto& base_rep : suite()) {
    const auto rep = pad_invariant_form(base_rep);
    REQUIRE(rep.is_pad_invariant());
    if (base_rep.is_pad_invariant()) ++checked;
    for (std::uint64_t n = 0; n < 1024; ++n) {
      const Word w = Word::expansion(n, rep.base());
      const Integer v = evaluate(base_rep, n);
      REQUIRE(rep.evaluate_unstripped(w) == v);
      for (std::size_t zeros = 1; zeros <= 5; ++zeros) {
        const Word padded = Word(rep.base(), std::vector<int>(zeros, 0)) + w;
        REQUIRE(evaluate_word(rep, padded) == v);
        REQUIRE(rep.evaluate_unstripped(padded) == v);
        if (base_rep.is_pad_invariant()) REQUIRE(base_rep.evaluate_unstripped(padded) == v);
      }
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("ring laws") {
  const auto s2 = digit_sum(2);
  const auto tm = thue_morse();
  const auto zero = add(s2, scale(s2, -1));
  const auto one = constant_sequence(2, 1);
  for (std::uint64_t n = 0; n < 1024; ++n) REQUIRE(evaluate(zero, n) == 0);
  CHECK(evaluate(scale(tm, 3), 1) == 3);
  CHECK(evaluate(add(one, tm), 2) == 2);
  const auto u2 = pointwise_product(s2, power_indicator(2));
  CHECK(evaluate(u2, 7) == 3);
  CHECK(evaluate(u2, 6) == 0);

  const auto reps = suite();
  for (const auto& a : reps)
    for (const auto& b : reps) {
      if (a.base() != b.base()) continue;
      const auto sum = add(a, b);
      const auto prod = pointwise_product(a, b);
      const auto scaled = scale(a, -5);
      const auto unit = pointwise_product(a, constant_sequence(a.base(), 1));
      for (std::uint64_t n = 0; n < 1024; n += 3) {
        const Integer fa = evaluate(a, n), fb = evaluate(b, n);
        REQUIRE(evaluate(sum, n) == fa + fb);
        REQUIRE(evaluate(prod, n) == fa * fb);
        REQUIRE(evaluate(scaled, n) == -5 * fa);
        REQUIRE(evaluate(unit, n) == fa);
      }
    }
}

TEST_CASE("partial sums") {
  const auto ones = partial_sum_representation(constant_sequence(2, 1));
  for (std::uint64_t n = 0; n < 256; ++n) REQUIRE(evaluate(ones, n) == n + 1);
  const auto l3 = partial_sum_representation(lambda3());
  CHECK(evaluate(l3, 13) == 3);
  CHECK(evaluate(l3, 9) == 1);

  for (const auto& rep : suite()) {
    const auto ps = partial_sum_representation(rep);
    CHECK(ps.dim() <= 2 * rep.dim() * rep.base());
    Integer running = 0;
    for (std::uint64_t n = 0; n < 4096; ++n) {
      running += evaluate(rep, n);
      REQUIRE(evaluate(ps, n) == running);
    }
  }
}

TEST_CASE("automaticity probe") {
  const auto tm = std::get<Automaton>(automaticity_probe(thue_morse(), 10));
  CHECK(tm.size() == 2);
  // Reading 0 keeps the state, reading 1 swaps it; outputs 0 and 1.
  CHECK(tm.output[tm.initial] == 0);
  const std::size_t other = tm.transition[tm.initial][1];
  CHECK(other != tm.initial);
  CHECK(tm.output[other] == 1);
  CHECK(tm.transition[tm.initial][0] == tm.initial);
  CHECK(tm.transition[other][0] == other);
  CHECK(tm.transition[other][1] == tm.initial);

  const auto l3 = std::get<Automaton>(automaticity_probe(lambda3(), 10));
  // Two states after a leading digit; the extra initial state carries lambda_3(0) = 0.
  const auto reached = l3.states_after_leading_digit();
  CHECK(reached.size() == 2);
  std::set<Integer> outputs;
  for (std::size_t s : reached) outputs.insert(l3.output[s]);
  CHECK(outputs == std::set<Integer>{-1, 1});
  for (std::uint64_t n = 1; n < 2000; ++n) REQUIRE(l3(Integer(n)) == lambda3_oracle(n));

  const auto s2 = automaticity_probe(digit_sum(2), 100);
  REQUIRE(std::holds_alternative<ProbeBudgetExceeded>(s2));
  CHECK(std::get<ProbeBudgetExceeded>(s2).explored >= 100);

  SUBCASE("soundness") {
    for (const auto& rep : suite()) {
      const auto result = automaticity_probe(rep, 200);
      if (!std::holds_alternative<Automaton>(result)) continue;
      const auto& a = std::get<Automaton>(result);
      for (std::uint64_t n = 0; n < (1U << 14); ++n) REQUIRE(a(Integer(n)) == evaluate(rep, n));
    }
  }
}

TEST_CASE("builtins") {
  for (const std::string& name : builtin_names()) CHECK_NOTHROW(builtin(name));
  CHECK_THROWS_AS(builtin("nope"), InvalidArgument);
  CHECK(builtin("digit-sum", 5).base() == 5);
  for (std::uint64_t n = 0; n < (1U << 14); ++n) {
    const Integer v = evaluate(uk(2), n);
    const bool repunit = ((n + 1) & n) == 0 && n > 0;
    REQUIRE(v == (repunit ? Integer(std::bit_width(n)) : Integer(0)));
  }
  for (std::uint64_t n = 0; n < 3000; ++n) {
    const Integer v = evaluate(uk(3), n);
    std::uint64_t m = n, j = 0;
    bool all_top = n > 0;
    for (; m > 0; m /= 3, ++j) all_top = all_top && m % 3 == 2;
    REQUIRE(v == (all_top ? Integer(2 * j) : Integer(0)));
  }
}
