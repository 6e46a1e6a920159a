#include "kreg/automaton.hpp"

#include "kreg/error.hpp"
#include "kreg/linalg.hpp"

#include <deque>
#include <optional>
#include <set>
#include <sstream>
#include <unordered_map>

namespace kreg {

std::size_t Automaton::run(const Word& w) const {
  if (w.base() != base) throw IncompatibleBase(base, w.base());
  std::size_t s = initial;
  for (int digit : w.digits()) s = transition[s][static_cast<std::size_t>(digit)];
  return s;
}

std::vector<std::size_t> Automaton::states_after_leading_digit() const {
  std::set<std::size_t> seen;
  std::deque<std::size_t> queue;
  for (int d = 1; d < base; ++d) {
    std::size_t s = transition[initial][static_cast<std::size_t>(d)];
    if (seen.insert(s).second) queue.push_back(s);
  }
  while (!queue.empty()) {
    std::size_t s = queue.front();
    queue.pop_front();
    for (std::size_t t : transition[s])
      if (seen.insert(t).second) queue.push_back(t);
  }
  return {seen.begin(), seen.end()};
}

std::string Automaton::to_string() const {
  std::ostringstream out;
  out << "automaton base " << base << ", " << size() << " states, initial " << initial << '\n';
  for (std::size_t s = 0; s < size(); ++s) {
    out << "  state " << s << " [";
    for (Eigen::Index i = 0; i < labels[s].size(); ++i) out << (i ? " " : "") << labels[s](i);
    out << "] output " << output[s] << " :";
    for (int d = 0; d < base; ++d) out << ' ' << digit_char(d) << "->" << transition[s][static_cast<std::size_t>(d)];
    out << '\n';
  }
  return out.str();
}

ProbeResult automaticity_probe(const LinearRepresentation& rep, std::size_t budget) {
  if (budget < 1) throw InvalidArgument("probe budget must be at least 1");
  Automaton automaton;
  automaton.base = rep.base();
  std::unordered_map<std::string, std::size_t> index;
  auto intern = [&](const IntRowVector& v) -> std::optional<std::size_t> {
    auto [it, inserted] = index.emplace(canonical_key(v), automaton.labels.size());
    if (inserted) {
      if (automaton.labels.size() == budget) return std::nullopt;
      automaton.labels.push_back(v);
      automaton.output.push_back(v.dot(rep.col()));
      automaton.transition.emplace_back();
    }
    return it->second;
  };
  intern(rep.row());
  for (std::size_t s = 0; s < automaton.labels.size(); ++s) {
    for (int d = 0; d < rep.base(); ++d) {
      const IntRowVector next = (automaton.labels[s] * rep.matrix(d)).eval();
      auto target = intern(next);
      if (!target) return ProbeBudgetExceeded{automaton.labels.size()};
      automaton.transition[s].push_back(*target);
    }
  }
  return automaton;
}

}  // namespace kreg
