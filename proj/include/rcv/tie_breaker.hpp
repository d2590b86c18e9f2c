#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "rcv/profile.hpp"

namespace rcv {

/// Resolves ties inside a sequential tabulation. By default the lowest
/// candidate id wins every tie; a forced prefix replays alternative choices
/// so that every resolution of every tie can be enumerated.
class TieBreaker {
 public:
  TieBreaker() = default;
  explicit TieBreaker(std::vector<std::size_t> forced) : forced_(std::move(forced)) {}

  /// `options` must be sorted ascending. Returns the chosen candidate.
  /// `state`, when given, renders everything the rest of the count depends
  /// on; replays that reach an already explored state are pruned.
  CandidateId choose(std::span<const CandidateId> options, const std::function<std::string()>& state = nullptr);

  /// Number of options at each decision taken so far (only decisions with
  /// more than one option are recorded).
  const std::vector<std::size_t>& decisions() const { return decisions_; }
  /// State fingerprint per recorded decision (empty when not supplied).
  const std::vector<std::string>& states() const { return states_; }

 private:
  std::vector<std::size_t> forced_;
  std::vector<std::size_t> decisions_;
  std::vector<std::string> states_;
};

/// Replays `run` under every alternative resolution of the ties recorded in
/// `baseline_ties`, stopping at the first one whose committee differs from
/// `baseline`. Returns true if the committee depends on tie resolution or if
/// more than `budget` replays would be needed.
bool outcome_depends_on_ties(const std::function<CandidateSet(TieBreaker&)>& run, const CandidateSet& baseline,
                             const TieBreaker& baseline_ties, int budget = 4096);

/// Convenience for the sequential methods: tabulate with default ties, then
/// set winners.tie_flag and log.tie_flag from outcome_depends_on_ties.
template <typename Tab, typename PathFn>
Tab run_with_tie_check(PathFn&& path) {
  TieBreaker ties;
  Tab result = path(ties);
  result.log.ties_broken = static_cast<int>(ties.decisions().size());
  if (!ties.decisions().empty()) {
    const bool dependent = outcome_depends_on_ties(
        [&](TieBreaker& alt) { return path(alt).winners.members; }, result.winners.members, ties);
    result.winners.tie_flag = dependent;
    result.log.tie_flag = dependent;
  }
  return result;
}

}  // namespace rcv
