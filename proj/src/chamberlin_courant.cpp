#include <algorithm>

#include "rcv/methods.hpp"

namespace rcv {

namespace {

// Borda-style satisfaction of one ballot with a committee given as a
// membership mask.
std::int64_t ballot_points(const BallotType& b, const std::vector<bool>& in_committee, int m, CcModel model) {
  for (std::size_t i = 0; i < b.ranking.size(); ++i) {
    if (in_committee[static_cast<std::size_t>(b.ranking[i])]) return m - static_cast<std::int64_t>(i + 1);
  }
  if (model == CcModel::Pessimistic) return 0;
  return m - static_cast<std::int64_t>(b.ranking.size()) - 1;
}

std::int64_t integer_score(const PreferenceProfile& profile, const std::vector<bool>& mask, CcModel model) {
  std::int64_t total = 0;
  const int m = profile.num_candidates();
  for (const auto& b : profile.ballots()) total += b.multiplicity * ballot_points(b, mask, m, model);
  return total;
}

}  // namespace

Rational cc_score(const PreferenceProfile& profile, const CandidateSet& committee, CcModel model) {
  if (committee.empty()) throw InputError("committee must be non-empty");
  std::vector<bool> mask(static_cast<std::size_t>(profile.num_candidates()), false);
  for (CandidateId c : committee) mask.at(static_cast<std::size_t>(c)) = true;
  return Rational(static_cast<long>(integer_score(profile, mask, model)));
}

CcResult cc(const Election& election, CcModel model) {
  const int m = election.num_candidates();
  const int k = election.seats;
  if (m > kEnumerationGuard) {
    throw ComputationError("Chamberlin-Courant enumeration refused: " + std::to_string(m) + " candidates exceeds " +
                           std::to_string(kEnumerationGuard));
  }
  CcResult out;
  std::vector<bool> mask(static_cast<std::size_t>(m), false);
  std::fill(mask.begin(), mask.begin() + k, true);

  std::int64_t best = 0;
  int best_count = 0;
  // prev_permutation over a k-ones-first mask walks committees in
  // lexicographic order of their sorted id lists
  do {
    CandidateSet committee;
    for (CandidateId c = 0; c < m; ++c) {
      if (mask[static_cast<std::size_t>(c)]) committee.push_back(c);
    }
    const std::int64_t s = integer_score(election.profile, mask, model);
    if (best_count == 0 || s > best) {
      best = s;
      best_count = 1;
      out.winners.members = committee;
    } else if (s == best) {
      ++best_count;
    }
    out.scores.push_back({std::move(committee), Rational(static_cast<long>(s))});
  } while (std::prev_permutation(mask.begin(), mask.end()));
  out.winners.tie_flag = best_count > 1;
  return out;
}

}  // namespace rcv
