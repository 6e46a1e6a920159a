#pragma once

#include "kreg/linear_representation.hpp"

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

namespace kreg {

/// Deterministic finite automaton with output, reading base-k digits most
/// significant first.  State 0 is initial.
struct Automaton {
  int base = 2;
  /// The row vector each state stands for (the probe's state labels).
  std::vector<IntRowVector> labels;
  /// transition[state][digit]
  std::vector<std::vector<std::size_t>> transition;
  std::vector<Integer> output;
  std::size_t initial = 0;

  std::size_t size() const { return output.size(); }
  std::size_t run(const Word& w) const;
  Integer operator()(const Word& w) const { return output[run(w)]; }
  Integer operator()(const Integer& n) const { return (*this)(Word::expansion(n, base)); }

  /// States reachable from the initial state along words that start with a
  /// nonzero digit, i.e. the states visited by canonical expansions of n >= 1.
  std::vector<std::size_t> states_after_leading_digit() const;

  std::string to_string() const;
};

struct ProbeBudgetExceeded {
  std::size_t explored = 0;
};

using ProbeResult = std::variant<Automaton, ProbeBudgetExceeded>;

/// Breadth-first closure of {row * A_w}; an automaton if the closure has at
/// most `budget` distinct vectors.
ProbeResult automaticity_probe(const LinearRepresentation& rep, std::size_t budget);

}  // namespace kreg
