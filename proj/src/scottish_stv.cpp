// Scottish STV: Droop quota, weighted inclusive Gregory surplus transfers,
// elected candidates closed to further transfers.
#include <algorithm>

#include "rcv/methods.hpp"

namespace rcv {

Rational scottish_quota(Count total_ballots, int seats) {
  return Rational(static_cast<long>(total_ballots / (seats + 1) + 1));
}

namespace {

enum class Status { Hopeful, Elected, Eliminated };

class ScottishCount {
 public:
  ScottishCount(const Election& election, TieBreaker& ties)
      : profile_(election.profile),
        seats_(election.seats),
        m_(election.num_candidates()),
        quota_(scottish_quota(election.total_ballots(), election.seats)),
        ties_(ties),
        status_(static_cast<std::size_t>(m_), Status::Hopeful),
        retained_(static_cast<std::size_t>(m_)),
        pos_(profile_.ballots().size(), 0),
        weight_(profile_.ballots().size(), Rational(1)) {}

  Tabulation run() {
    record(std::nullopt);
    elect_reaching_quota();
    while (num_elected() < seats_) {
      const auto hopefuls = with_status(Status::Hopeful);
      if (static_cast<int>(hopefuls.size()) <= seats_ - num_elected()) {
        for (CandidateId c : hopefuls) elect(c);
        break;
      }
      if (!pending_.empty()) {
        transfer_surplus(pick_surplus());
      } else {
        eliminate(pick_lowest(hopefuls));
      }
      elect_reaching_quota();
    }
    Tabulation out;
    out.winners.members = make_set(with_status(Status::Elected));
    out.log = std::move(log_);
    out.log.quota_trace = {quota_};
    return out;
  }

 private:
  int num_elected() const {
    return static_cast<int>(std::count(status_.begin(), status_.end(), Status::Elected));
  }

  std::vector<CandidateId> with_status(Status s) const {
    std::vector<CandidateId> out;
    for (CandidateId c = 0; c < m_; ++c) {
      if (status_[static_cast<std::size_t>(c)] == s) out.push_back(c);
    }
    return out;
  }

  CandidateId holder(std::size_t t) const {
    const auto& r = profile_.ballots()[t].ranking;
    return pos_[t] < r.size() ? r[pos_[t]] : -1;
  }

  std::vector<Rational> totals() const {
    std::vector<Rational> out = retained_;
    for (std::size_t t = 0; t < pos_.size(); ++t) {
      const CandidateId h = holder(t);
      if (h >= 0) out[static_cast<std::size_t>(h)] += weight_[t] * profile_.ballots()[t].multiplicity;
    }
    return out;
  }

  // Moves ballot type t past every candidate that is no longer hopeful.
  void advance(std::size_t t) {
    const auto& r = profile_.ballots()[t].ranking;
    ++pos_[t];
    while (pos_[t] < r.size() && status_[static_cast<std::size_t>(r[pos_[t]])] != Status::Hopeful) ++pos_[t];
    if (pos_[t] >= r.size()) exhausted_ += weight_[t] * profile_.ballots()[t].multiplicity;
  }

  void record(std::optional<RoundEvent> event) {
    Round round;
    round.votes = totals();
    round.continuing.resize(static_cast<std::size_t>(m_));
    for (CandidateId c = 0; c < m_; ++c) {
      round.continuing[static_cast<std::size_t>(c)] = status_[static_cast<std::size_t>(c)] == Status::Hopeful;
    }
    round.exhausted = exhausted_;
    round.quota = quota_;
    if (event) round.events.push_back(*event);
    votes_ = round.votes;
    log_.rounds.push_back(std::move(round));
  }

  void elect(CandidateId c) {
    status_[static_cast<std::size_t>(c)] = Status::Elected;
    log_.rounds.back().events.push_back({EventKind::Elected, c});
  }

  void elect_reaching_quota() {
    std::vector<CandidateId> reached;
    for (CandidateId c : with_status(Status::Hopeful)) {
      if (votes_[static_cast<std::size_t>(c)] >= quota_) reached.push_back(c);
    }
    std::stable_sort(reached.begin(), reached.end(), [&](CandidateId a, CandidateId b) {
      return votes_[static_cast<std::size_t>(a)] > votes_[static_cast<std::size_t>(b)];
    });
    for (CandidateId c : reached) {
      elect(c);
      pending_.push_back(c);
    }
  }

  // Everything the remainder of the count depends on.
  std::string fingerprint(char site) const {
    std::string key(1, site);
    for (Status st : status_) key += static_cast<char>('0' + static_cast<int>(st));
    for (CandidateId c : pending_) key += ',' + std::to_string(c);
    key += '|';
    for (const auto& r : retained_) key += r.get_str() + ';';
    for (std::size_t t = 0; t < pos_.size(); ++t) key += std::to_string(pos_[t]) + ':' + weight_[t].get_str() + ';';
    return key;
  }

  CandidateId pick_surplus() {
    Rational best = votes_[static_cast<std::size_t>(pending_.front())];
    for (CandidateId c : pending_) best = std::max(best, votes_[static_cast<std::size_t>(c)]);
    std::vector<CandidateId> tied;
    for (CandidateId c : pending_) {
      if (votes_[static_cast<std::size_t>(c)] == best) tied.push_back(c);
    }
    std::sort(tied.begin(), tied.end());
    const CandidateId chosen = ties_.choose(tied, [&] { return fingerprint('s'); });
    pending_.erase(std::find(pending_.begin(), pending_.end(), chosen));
    return chosen;
  }

  CandidateId pick_lowest(const std::vector<CandidateId>& hopefuls) {
    Rational low = votes_[static_cast<std::size_t>(hopefuls.front())];
    for (CandidateId c : hopefuls) low = std::min(low, votes_[static_cast<std::size_t>(c)]);
    std::vector<CandidateId> tied;
    for (CandidateId c : hopefuls) {
      if (votes_[static_cast<std::size_t>(c)] == low) tied.push_back(c);
    }
    return ties_.choose(tied, [&] { return fingerprint('l'); });
  }

  void transfer_surplus(CandidateId x) {
    const auto xi = static_cast<std::size_t>(x);
    const Rational total = votes_[xi];
    const Rational surplus = total - quota_;
    if (sgn(surplus) <= 0) return;
    const Rational transfer_value = surplus / total;
    for (std::size_t t = 0; t < pos_.size(); ++t) {
      if (holder(t) != x) continue;
      weight_[t] *= transfer_value;
      advance(t);
    }
    retained_[xi] = quota_;
    record(RoundEvent{EventKind::SurplusTransfer, x});
  }

  void eliminate(CandidateId x) {
    status_[static_cast<std::size_t>(x)] = Status::Eliminated;
    for (std::size_t t = 0; t < pos_.size(); ++t) {
      if (holder(t) == x) advance(t);
    }
    record(RoundEvent{EventKind::Eliminated, x});
  }

  const PreferenceProfile& profile_;
  int seats_;
  int m_;
  Rational quota_;
  TieBreaker& ties_;
  std::vector<Status> status_;
  std::vector<Rational> retained_;
  std::vector<std::size_t> pos_;
  std::vector<Rational> weight_;
  Rational exhausted_;
  std::vector<Rational> votes_;
  std::vector<CandidateId> pending_;
  RoundLog log_;
};

}  // namespace

Tabulation scottish_stv_path(const Election& election, TieBreaker& ties) {
  return ScottishCount(election, ties).run();
}

Tabulation scottish_stv(const Election& election) {
  return run_with_tie_check<Tabulation>([&](TieBreaker& ties) { return scottish_stv_path(election, ties); });
}

}  // namespace rcv
