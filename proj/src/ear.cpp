// Expanding Approvals Rule over strict, possibly truncated rankings.
//
// q = V/(k+1). At rank threshold j a candidate's support is the current
// weight of every ballot ranking it in positions 1..j. Each pass elects the
// single best-supported candidate at or above q and scales its supporters by
// (S - q)/S; otherwise j grows. Once j reaches m with seats left, the
// best-supported candidate is elected and its supporters' weight is spent.
#include <algorithm>

#include "rcv/methods.hpp"

namespace rcv {

namespace {

class EarCount {
 public:
  EarCount(const Election& election, TieBreaker& ties)
      : profile_(election.profile),
        seats_(election.seats),
        m_(election.num_candidates()),
        quota_(Rational(static_cast<long>(election.total_ballots())) / (election.seats + 1)),
        ties_(ties),
        elected_(static_cast<std::size_t>(m_), false),
        weight_(profile_.ballots().size(), Rational(1)) {}

  Tabulation run() {
    int& threshold = threshold_;
    int filled = 0;
    while (filled < seats_) {
      const auto support = supports(threshold);
      Round round;
      round.votes = support;
      round.continuing.resize(static_cast<std::size_t>(m_));
      for (CandidateId c = 0; c < m_; ++c) round.continuing[static_cast<std::size_t>(c)] = !is_elected(c);
      round.quota = quota_;
      round.threshold = threshold;

      std::vector<CandidateId> eligible;
      for (CandidateId c = 0; c < m_; ++c) {
        if (!is_elected(c) && support[static_cast<std::size_t>(c)] >= quota_) eligible.push_back(c);
      }
      const bool fallback = eligible.empty() && threshold >= m_;
      if (eligible.empty() && !fallback) {
        ++threshold;
        round.events.push_back({EventKind::ThresholdRaised, -1});
        round.exhausted = spent();
        log_.rounds.push_back(std::move(round));
        continue;
      }
      if (fallback) {
        for (CandidateId c = 0; c < m_; ++c) {
          if (!is_elected(c)) eligible.push_back(c);
        }
      }
      const CandidateId chosen = pick_best(eligible, support);
      const Rational& s = support[static_cast<std::size_t>(chosen)];
      const Rational factor = (!fallback && sgn(s) > 0) ? Rational((s - quota_) / s) : Rational(0);
      for (std::size_t t = 0; t < weight_.size(); ++t) {
        const int r = profile_.ballots()[t].rank_of(chosen);
        if (r != 0 && r <= threshold) weight_[t] *= factor;
      }
      elected_[static_cast<std::size_t>(chosen)] = true;
      ++filled;
      round.events.push_back({EventKind::Elected, chosen});
      round.exhausted = spent();
      log_.rounds.push_back(std::move(round));
    }
    Tabulation out;
    for (CandidateId c = 0; c < m_; ++c) {
      if (is_elected(c)) out.winners.members.push_back(c);
    }
    out.log = std::move(log_);
    out.log.quota_trace = {quota_};
    return out;
  }

 private:
  bool is_elected(CandidateId c) const { return elected_[static_cast<std::size_t>(c)]; }

  std::vector<Rational> supports(int threshold) const {
    std::vector<Rational> out(static_cast<std::size_t>(m_));
    const auto& ballots = profile_.ballots();
    for (std::size_t t = 0; t < ballots.size(); ++t) {
      if (sgn(weight_[t]) == 0) continue;
      const Rational w = weight_[t] * ballots[t].multiplicity;
      const auto& r = ballots[t].ranking;
      const std::size_t upto = std::min(r.size(), static_cast<std::size_t>(threshold));
      for (std::size_t i = 0; i < upto; ++i) {
        if (!is_elected(r[i])) out[static_cast<std::size_t>(r[i])] += w;
      }
    }
    return out;
  }

  // Total weight already consumed by elections.
  Rational spent() const {
    Rational used;
    for (std::size_t t = 0; t < weight_.size(); ++t) {
      used += (1 - weight_[t]) * profile_.ballots()[t].multiplicity;
    }
    return used;
  }

  CandidateId pick_best(const std::vector<CandidateId>& candidates, const std::vector<Rational>& support) {
    Rational best = support[static_cast<std::size_t>(candidates.front())];
    for (CandidateId c : candidates) best = std::max(best, support[static_cast<std::size_t>(c)]);
    std::vector<CandidateId> tied;
    for (CandidateId c : candidates) {
      if (support[static_cast<std::size_t>(c)] == best) tied.push_back(c);
    }
    return ties_.choose(tied, [&] {
      std::string key = std::to_string(threshold_) + '|';
      for (bool e : elected_) key += e ? '1' : '0';
      key += '|';
      for (const auto& w : weight_) key += w.get_str() + ';';
      return key;
    });
  }

  const PreferenceProfile& profile_;
  int seats_;
  int m_;
  Rational quota_;
  TieBreaker& ties_;
  std::vector<bool> elected_;
  std::vector<Rational> weight_;
  int threshold_ = 1;
  RoundLog log_;
};

}  // namespace

Tabulation ear_path(const Election& election, TieBreaker& ties) { return EarCount(election, ties).run(); }

Tabulation ear(const Election& election) {
  return run_with_tie_check<Tabulation>([&](TieBreaker& ties) { return ear_path(election, ties); });
}

}  // namespace rcv
