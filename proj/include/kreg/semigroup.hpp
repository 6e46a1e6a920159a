#pragma once

#include "kreg/linear_representation.hpp"
#include "kreg/spectral.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace kreg {

/// Exploration stops when either axis is hit.
struct SemigroupBudget {
  std::size_t max_elements = 100000;
  Integer max_entry = boost::multiprecision::pow(Integer(10), 50);
};

enum class ExplorationStatus { Closed, Infinite, BudgetExceeded };

std::string to_string(ExplorationStatus s);

struct SemigroupElement {
  IntMatrix matrix;
  /// Shortest (then lexicographically least) word producing the element.
  Word word;
};

struct SemigroupExploration {
  std::vector<IntMatrix> generators;
  /// In discovery order, which is shortlex order of the generating words.
  std::vector<SemigroupElement> elements;
  ExplorationStatus status = ExplorationStatus::BudgetExceeded;
  std::optional<Word> witness;
  std::optional<SpectralReport> witness_report;
  SemigroupBudget budget;
  /// "elements" or "entries" when status is BudgetExceeded.
  std::string exhausted_axis;

  std::size_t size() const { return elements.size(); }
};

struct InfiniteOrderWitness {
  Word word;
  IntMatrix matrix;
  SpectralReport report;
};

/// Breadth-first search by word length, lexicographic within a length.  Stops
/// at the first element whose powers are pairwise distinct.  Words are over
/// base max(2, number of generators).  Throws InvalidArgument on a dimension
/// mismatch or an empty generator list.
SemigroupExploration explore(const std::vector<IntMatrix>& generators, const SemigroupBudget& budget = {});

/// The first `count` elements of infinite order in canonical order.  The
/// search stops early when the semigroup closes or the budget runs out; the
/// returned status says which.
struct WitnessSearch {
  std::vector<InfiniteOrderWitness> witnesses;
  ExplorationStatus status = ExplorationStatus::BudgetExceeded;
};
WitnessSearch infinite_order_elements(const std::vector<IntMatrix>& generators, std::size_t count,
                                      const SemigroupBudget& budget = {});

/// The witness from explore(), or nullopt; `status` distinguishes a closed
/// (finite) semigroup from an exhausted budget.
struct InfiniteOrderSearch {
  std::optional<InfiniteOrderWitness> witness;
  ExplorationStatus status = ExplorationStatus::BudgetExceeded;
};
InfiniteOrderSearch find_infinite_order_element(const std::vector<IntMatrix>& generators,
                                                const SemigroupBudget& budget = {});

/// Words u (shortlex) whose states row * A_u form a basis of the span of all
/// reachable states.
std::vector<Word> spanning_prefixes(const LinearRepresentation& rep);

/// Words v (shortlex) whose costates A_v * col form a basis of the span of all
/// co-reachable vectors.
std::vector<Word> spanning_suffixes(const LinearRepresentation& rep);

}  // namespace kreg
