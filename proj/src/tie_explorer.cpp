#include <stdexcept>
#include <unordered_set>

#include "rcv/tie_breaker.hpp"

namespace rcv {

CandidateId TieBreaker::choose(std::span<const CandidateId> options, const std::function<std::string()>& state) {
  if (options.empty()) throw std::logic_error("tie among zero candidates");
  if (options.size() == 1) return options[0];
  const std::size_t index = decisions_.size();
  decisions_.push_back(options.size());
  states_.push_back(state ? state() : std::string());
  std::size_t pick = index < forced_.size() ? forced_[index] : 0;
  if (pick >= options.size()) pick = 0;
  return options[pick];
}

bool outcome_depends_on_ties(const std::function<CandidateSet(TieBreaker&)>& run, const CandidateSet& baseline,
                             const TieBreaker& baseline_ties, int budget) {
  std::vector<std::vector<std::size_t>> pending;
  // A decision point whose state was already expanded has all of its
  // alternatives queued, and the count from there on depends only on that
  // state, so it need not be expanded again.
  std::unordered_set<std::string> expanded;
  auto push_alternatives = [&](const std::vector<std::size_t>& prefix, const TieBreaker& ties) {
    const auto& decisions = ties.decisions();
    const auto& states = ties.states();
    for (std::size_t pos = prefix.size(); pos < decisions.size(); ++pos) {
      if (!states[pos].empty() && !expanded.insert(states[pos]).second) break;
      for (std::size_t alt = 1; alt < decisions[pos]; ++alt) {
        std::vector<std::size_t> next = prefix;
        next.resize(pos, 0);
        next.push_back(alt);
        pending.push_back(std::move(next));
      }
    }
  };
  push_alternatives({}, baseline_ties);

  int runs = 0;
  while (!pending.empty()) {
    if (++runs > budget) return true;
    auto prefix = std::move(pending.back());
    pending.pop_back();
    TieBreaker ties(prefix);
    if (run(ties) != baseline) return true;
    push_alternatives(prefix, ties);
  }
  return false;
}

}  // namespace rcv
