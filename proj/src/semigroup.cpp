#include "kreg/semigroup.hpp"

#include "kreg/error.hpp"
#include "kreg/linalg.hpp"

#include <algorithm>
#include <unordered_set>

namespace kreg {

std::string to_string(ExplorationStatus s) {
  switch (s) {
    case ExplorationStatus::Closed: return "CLOSED";
    case ExplorationStatus::Infinite: return "INFINITE";
    case ExplorationStatus::BudgetExceeded: return "BUDGET_EXCEEDED";
  }
  return "?";
}

namespace {

void check_generators(const std::vector<IntMatrix>& generators) {
  if (generators.empty()) throw InvalidArgument("at least one generator is required");
  const Eigen::Index d = generators.front().rows();
  for (const IntMatrix& g : generators)
    if (g.rows() != d || g.cols() != d) throw InvalidArgument("generators must all be square of equal dimension");
}

// Shared BFS; `on_new` returns false to stop the search.
template <typename OnNew>
SemigroupExploration breadth_first(const std::vector<IntMatrix>& generators, const SemigroupBudget& budget,
                                   OnNew&& on_new) {
  check_generators(generators);
  const int alphabet = std::max<int>(2, static_cast<int>(generators.size()));
  SemigroupExploration out;
  out.generators = generators;
  out.budget = budget;
  std::unordered_set<std::string> seen;

  std::vector<std::size_t> layer;  // indices into out.elements
  auto consider = [&](IntMatrix m, Word w) -> bool {
    if (max_abs_entry(m) >= budget.max_entry) {
      out.status = ExplorationStatus::BudgetExceeded;
      out.exhausted_axis = "entries";
      return false;
    }
    if (!seen.insert(canonical_key(m)).second) return true;
    if (out.elements.size() >= budget.max_elements) {
      out.status = ExplorationStatus::BudgetExceeded;
      out.exhausted_axis = "elements";
      return false;
    }
    out.elements.push_back({std::move(m), std::move(w)});
    layer.push_back(out.elements.size() - 1);
    return on_new(out, out.elements.back());
  };

  for (std::size_t g = 0; g < generators.size(); ++g)
    if (!consider(generators[g], Word(alphabet, {static_cast<int>(g)}))) return out;

  while (!layer.empty()) {
    std::vector<std::size_t> previous;
    previous.swap(layer);
    for (std::size_t idx : previous) {
      for (std::size_t g = 0; g < generators.size(); ++g) {
        IntMatrix product = out.elements[idx].matrix * generators[g];
        Word w = out.elements[idx].word + Word(alphabet, {static_cast<int>(g)});
        if (!consider(std::move(product), std::move(w))) return out;
      }
    }
  }
  out.status = ExplorationStatus::Closed;
  return out;
}

}  // namespace

SemigroupExploration explore(const std::vector<IntMatrix>& generators, const SemigroupBudget& budget) {
  return breadth_first(generators, budget, [](SemigroupExploration& state, const SemigroupElement& e) {
    SpectralReport report = classify(e.matrix);
    if (report.classification == GrowthClass::FiniteOrder) return true;
    state.status = ExplorationStatus::Infinite;
    state.witness = e.word;
    state.witness_report = std::move(report);
    return false;
  });
}

WitnessSearch infinite_order_elements(const std::vector<IntMatrix>& generators, std::size_t count,
                                      const SemigroupBudget& budget) {
  WitnessSearch search;
  if (count == 0) return search;
  SemigroupExploration e = breadth_first(generators, budget, [&](SemigroupExploration& state, const SemigroupElement& el) {
    SpectralReport report = classify(el.matrix);
    if (report.classification == GrowthClass::FiniteOrder) return true;
    search.witnesses.push_back({el.word, el.matrix, std::move(report)});
    if (search.witnesses.size() < count) return true;
    state.status = ExplorationStatus::Infinite;
    return false;
  });
  search.status = e.status;
  if (e.status != ExplorationStatus::Closed && !search.witnesses.empty()) search.status = ExplorationStatus::Infinite;
  return search;
}

InfiniteOrderSearch find_infinite_order_element(const std::vector<IntMatrix>& generators,
                                                const SemigroupBudget& budget) {
  SemigroupExploration e = explore(generators, budget);
  InfiniteOrderSearch out;
  out.status = e.status;
  if (e.status == ExplorationStatus::Infinite) {
    IntMatrix m = IntMatrix::Identity(generators.front().rows(), generators.front().cols());
    for (int d : e.witness->digits()) m = (m * generators[static_cast<std::size_t>(d)]).eval();
    out.witness = InfiniteOrderWitness{*e.witness, std::move(m), *e.witness_report};
  }
  return out;
}

namespace {

// Level-by-level search that only extends words which enlarged the span: if
// a vector lies in the span of earlier ones, so do all of its extensions.
template <typename Vector, typename Extend>
std::vector<Word> spanning_words(int base, Eigen::Index dim, Vector start, Extend&& extend) {
  std::vector<Word> kept;
  IntegerSpan span(dim);
  std::vector<std::pair<Word, Vector>> level{{Word(base, {}), std::move(start)}};
  while (!level.empty()) {
    std::vector<std::pair<Word, Vector>> next;
    for (auto& [word, vec] : level) {
      IntRowVector as_row(vec.size());
      for (Eigen::Index i = 0; i < vec.size(); ++i) as_row(i) = vec(i);
      if (!span.insert(as_row)) continue;
      kept.push_back(word);
      for (int d = 0; d < base; ++d) next.push_back(extend(word, vec, d));
    }
    std::sort(next.begin(), next.end(), [](const auto& a, const auto& b) { return shortlex_less(a.first, b.first); });
    level = std::move(next);
  }
  return kept;
}

}  // namespace

std::vector<Word> spanning_prefixes(const LinearRepresentation& rep) {
  return spanning_words(rep.base(), rep.dim(), rep.row(), [&](const Word& w, const IntRowVector& v, int d) {
    return std::pair<Word, IntRowVector>{w + Word(rep.base(), {d}), (v * rep.matrix(d)).eval()};
  });
}

std::vector<Word> spanning_suffixes(const LinearRepresentation& rep) {
  return spanning_words(rep.base(), rep.dim(), rep.col(), [&](const Word& w, const IntColVector& v, int d) {
    return std::pair<Word, IntColVector>{Word(rep.base(), {d}) + w, (rep.matrix(d) * v).eval()};
  });
}

}  // namespace kreg
