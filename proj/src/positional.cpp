#include <algorithm>
#include <numeric>
#include <sstream>

#include "rcv/methods.hpp"

namespace rcv {

ScoringVector::ScoringVector(std::vector<Rational> scores) : scores_(std::move(scores)) {
  if (scores_.empty() || sgn(scores_.front()) <= 0) throw InputError("scoring vector needs s1 > 0");
  for (std::size_t i = 0; i < scores_.size(); ++i) {
    if (sgn(scores_[i]) < 0) throw InputError("scoring vector entries must be non-negative");
    if (i > 0 && scores_[i] > scores_[i - 1]) throw InputError("scoring vector must be non-increasing");
  }
}

ScoringVector ScoringVector::borda(int m) {
  std::vector<Rational> s;
  for (int i = 1; i <= m; ++i) s.emplace_back(m - i);
  return ScoringVector(std::move(s));
}

ScoringVector ScoringVector::plurality() { return ScoringVector({Rational(1)}); }

ScoringVector ScoringVector::parse(std::string_view csv) {
  std::vector<Rational> s;
  std::string item;
  std::istringstream in{std::string(csv)};
  while (std::getline(in, item, ',')) {
    try {
      s.push_back(parse_rational(item));
    } catch (const std::invalid_argument& e) {
      throw InputError(std::string("bad scoring vector entry: ") + e.what());
    }
  }
  return ScoringVector(std::move(s));
}

Rational ScoringVector::at_rank(int r) const {
  if (r < 1 || static_cast<std::size_t>(r) > scores_.size()) return 0;
  return scores_[static_cast<std::size_t>(r - 1)];
}

std::vector<Rational> positional_scores(const PreferenceProfile& profile, const ScoringVector& sv) {
  std::vector<Rational> scores(static_cast<std::size_t>(profile.num_candidates()));
  const auto n = sv.scores().size();
  for (const auto& b : profile.ballots()) {
    for (std::size_t i = 0; i < b.ranking.size() && i < n; ++i) {
      scores[static_cast<std::size_t>(b.ranking[i])] += sv.scores()[i] * b.multiplicity;
    }
  }
  return scores;
}

WinnerSet positional_committee(const Election& election, const ScoringVector& sv) {
  const auto scores = positional_scores(election.profile, sv);
  std::vector<CandidateId> order(scores.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](CandidateId a, CandidateId b) {
    return scores[static_cast<std::size_t>(a)] > scores[static_cast<std::size_t>(b)];
  });
  const auto k = static_cast<std::size_t>(election.seats);
  WinnerSet out;
  out.members = make_set({order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k)});
  out.tie_flag = k < order.size() && scores[static_cast<std::size_t>(order[k - 1])] ==
                                         scores[static_cast<std::size_t>(order[k])];
  return out;
}

}  // namespace rcv
