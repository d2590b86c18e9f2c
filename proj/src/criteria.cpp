#include "rcv/criteria.hpp"

#include <algorithm>
#include <cctype>

namespace rcv {

const char* to_string(Criterion criterion) {
  switch (criterion) {
    case Criterion::Ilvb:
      return "ILVB";
    case Criterion::Iwvb:
      return "IWVB";
    case Criterion::IwvbStar:
      return "IWVB*";
  }
  return "unknown";
}

Criterion parse_criterion(std::string_view text) {
  std::string t(text);
  std::transform(t.begin(), t.end(), t.begin(), [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  if (t == "ilvb") return Criterion::Ilvb;
  if (t == "iwvb") return Criterion::Iwvb;
  if (t == "iwvb-star" || t == "iwvb_star" || t == "iwvb*") return Criterion::IwvbStar;
  throw InputError("unknown criterion: " + std::string(text));
}

Evaluator::Evaluator(const Election& election, MethodSpec method)
    : election_(election), method_(std::move(method)), base_(compute_winners(election_, method_)) {}

const WinnerSet& Evaluator::after(const BallotSelection& removed) {
  if (removed.empty()) return base_;
  auto it = cache_.find(removed);
  if (it == cache_.end()) {
    it = cache_.emplace(removed, compute_winners(remove_ballots(election_, removed), method_)).first;
  }
  return it->second;
}

namespace {

ViolationRecord make_record(Criterion criterion, const Evaluator& eval, const BallotSelection& selection,
                            const WinnerSet& after) {
  ViolationRecord r;
  r.criterion = criterion;
  r.method = eval.method().tag();
  r.removed = selection;
  r.original_winners = eval.base();
  r.modified_winners = after;
  return r;
}

// Ranked-candidate union of a winner-only selection, after checking it is a
// proper subset of the winners.
CandidateSet winner_bloc(const Evaluator& eval, const BallotSelection& selection) {
  const auto bloc = selection.ranked_candidates(eval.election().profile);
  const auto& winners = eval.base().members;
  if (!is_subset(bloc, winners) || bloc.size() >= winners.size()) {
    throw PreconditionError("selected ballots must rank only a proper subset of the winners");
  }
  return bloc;
}

}  // namespace

std::optional<ViolationRecord> check_ilvb(Evaluator& eval, const BallotSelection& selection) {
  selection.validate_against(eval.election().profile);
  for (CandidateId c : selection.ranked_candidates(eval.election().profile)) {
    if (set_contains(eval.base().members, c)) {
      throw PreconditionError("selected ballots rank winner " + eval.election().profile.candidate(c).name);
    }
  }
  if (selection.empty()) return std::nullopt;
  const WinnerSet& after = eval.after(selection);
  if (after.members == eval.base().members) return std::nullopt;
  return make_record(Criterion::Ilvb, eval, selection, after);
}

std::optional<ViolationRecord> check_iwvb(Evaluator& eval, const BallotSelection& selection) {
  selection.validate_against(eval.election().profile);
  const auto bloc = winner_bloc(eval, selection);
  if (selection.empty()) return std::nullopt;
  const WinnerSet& after = eval.after(selection);
  for (CandidateId a : eval.base().members) {
    if (set_contains(bloc, a) || set_contains(after.members, a)) continue;
    auto r = make_record(Criterion::Iwvb, eval, selection, after);
    r.displaced_winner = a;
    return r;
  }
  return std::nullopt;
}

std::optional<ViolationRecord> check_iwvb_star(Evaluator& eval, const BallotSelection& selection) {
  selection.validate_against(eval.election().profile);
  const auto bloc = winner_bloc(eval, selection);
  if (selection.empty()) return std::nullopt;
  const WinnerSet& after = eval.after(selection);
  if (!is_subset(bloc, after.members) || after.members == eval.base().members) return std::nullopt;
  auto r = make_record(Criterion::IwvbStar, eval, selection, after);
  for (CandidateId a : eval.base().members) {
    if (!set_contains(after.members, a)) {
      r.displaced_winner = a;
      break;
    }
  }
  return r;
}

std::optional<ViolationRecord> check_ilvb(const Election& election, const MethodSpec& method,
                                          const BallotSelection& selection) {
  Evaluator eval(election, method);
  return check_ilvb(eval, selection);
}

std::optional<ViolationRecord> check_iwvb(const Election& election, const MethodSpec& method,
                                          const BallotSelection& selection) {
  Evaluator eval(election, method);
  return check_iwvb(eval, selection);
}

std::optional<ViolationRecord> check_iwvb_star(const Election& election, const MethodSpec& method,
                                               const BallotSelection& selection) {
  Evaluator eval(election, method);
  return check_iwvb_star(eval, selection);
}

std::optional<ViolationRecord> check(Criterion criterion, const Election& election, const MethodSpec& method,
                                     const BallotSelection& selection) {
  switch (criterion) {
    case Criterion::Ilvb:
      return check_ilvb(election, method, selection);
    case Criterion::Iwvb:
      return check_iwvb(election, method, selection);
    case Criterion::IwvbStar:
      return check_iwvb_star(election, method, selection);
  }
  return std::nullopt;
}

bool reverify(const Election& election, const MethodSpec& method, const ViolationRecord& record) {
  const auto fresh = check(record.criterion, election, method, record.removed);
  return fresh && fresh->original_winners.members == record.original_winners.members &&
         fresh->modified_winners.members == record.modified_winners.members;
}

std::map<std::string, int> party_seats(const PreferenceProfile& profile, const CandidateSet& committee) {
  std::map<std::string, int> seats;
  for (CandidateId c : committee) ++seats[profile.candidate(c).party];
  return seats;
}

}  // namespace rcv
