// Meek STV with keep factors. Keep factors are rounded up onto a 10^-18 grid
// after each update so that rational denominators stay bounded; vote totals
// for a given set of keep factors are exact.
#include <algorithm>

#include "rcv/methods.hpp"

namespace rcv {

namespace {

enum class Status { Hopeful, Elected, Excluded };

const mpz_class& keep_factor_grid() {
  static const mpz_class grid = [] {
    mpz_class g;
    mpz_ui_pow_ui(g.get_mpz_t(), 10, 18);
    return g;
  }();
  return grid;
}

class MeekCount {
 public:
  MeekCount(const Election& election, const MeekOptions& options, TieBreaker& ties)
      : profile_(election.profile),
        seats_(election.seats),
        m_(election.num_candidates()),
        total_(static_cast<long>(election.total_ballots())),
        options_(options),
        ties_(ties),
        status_(static_cast<std::size_t>(m_), Status::Hopeful),
        keep_(static_cast<std::size_t>(m_), Rational(1)) {
    if (sgn(options_.tolerance) <= 0) throw InputError("Meek tolerance must be positive");
  }

  Tabulation run() {
    std::optional<RoundEvent> event;
    while (true) {
      converge();
      record(event);
      event.reset();

      if (elect_reaching_quota() > 0) {
        if (num_elected() >= seats_) break;
        continue;
      }
      const auto hopefuls = with_status(Status::Hopeful);
      if (static_cast<int>(hopefuls.size()) <= seats_ - num_elected()) {
        for (CandidateId c : hopefuls) elect(c);
        break;
      }
      const CandidateId x = pick_lowest(hopefuls);
      status_[static_cast<std::size_t>(x)] = Status::Excluded;
      keep_[static_cast<std::size_t>(x)] = 0;
      event = RoundEvent{EventKind::Eliminated, x};
    }
    Tabulation out;
    out.winners.members = make_set(with_status(Status::Elected));
    out.log = std::move(log_);
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

  void distribute() {
    votes_.assign(static_cast<std::size_t>(m_), Rational(0));
    exhausted_ = 0;
    Rational remaining, share;
    for (const auto& b : profile_.ballots()) {
      remaining = 1;
      for (CandidateId c : b.ranking) {
        const Rational& k = keep_[static_cast<std::size_t>(c)];
        if (sgn(k) == 0) continue;
        share = remaining * k;
        votes_[static_cast<std::size_t>(c)] += share * b.multiplicity;
        remaining -= share;
        if (sgn(remaining) == 0) break;
      }
      exhausted_ += remaining * b.multiplicity;
    }
    quota_ = (total_ - exhausted_) / (seats_ + 1);
  }

  void converge() {
    for (int iteration = 0;; ++iteration) {
      distribute();
      bool settled = true;
      for (CandidateId c : with_status(Status::Elected)) {
        const auto ci = static_cast<std::size_t>(c);
        // a keep factor already at 1 cannot pull in more votes
        if (keep_[ci] == 1 && votes_[ci] < quota_) continue;
        if (abs(votes_[ci] - quota_) > options_.tolerance) settled = false;
      }
      if (settled) return;
      if (iteration >= options_.max_iterations) {
        throw ComputationError("Meek STV did not converge within " + std::to_string(options_.max_iterations) +
                               " iterations");
      }
      for (CandidateId c : with_status(Status::Elected)) {
        const auto ci = static_cast<std::size_t>(c);
        if (sgn(votes_[ci]) == 0) continue;
        Rational next = ceil_to_grid(keep_[ci] * quota_ / votes_[ci], keep_factor_grid());
        keep_[ci] = next > 1 ? Rational(1) : next;
      }
    }
  }

  void record(std::optional<RoundEvent> event) {
    Round round;
    round.votes = votes_;
    round.continuing.resize(static_cast<std::size_t>(m_));
    for (CandidateId c = 0; c < m_; ++c) {
      round.continuing[static_cast<std::size_t>(c)] = status_[static_cast<std::size_t>(c)] != Status::Excluded;
    }
    round.exhausted = exhausted_;
    round.quota = quota_;
    round.keep_factors = keep_;
    if (event) round.events.push_back(*event);
    if (log_.quota_trace.empty() || log_.quota_trace.back() != quota_) {
      if (!log_.quota_trace.empty()) round.events.push_back({EventKind::QuotaUpdate, -1});
      log_.quota_trace.push_back(quota_);
    }
    log_.rounds.push_back(std::move(round));
  }

  void elect(CandidateId c) {
    status_[static_cast<std::size_t>(c)] = Status::Elected;
    log_.rounds.back().events.push_back({EventKind::Elected, c});
  }

  std::string fingerprint(char site, const std::vector<CandidateId>& extra = {}) const {
    std::string key(1, site);
    for (Status st : status_) key += static_cast<char>('0' + static_cast<int>(st));
    for (CandidateId c : extra) key += ',' + std::to_string(c);
    key += '|';
    for (const auto& k : keep_) key += k.get_str() + ';';
    return key;
  }

  // Elects hopefuls at or above quota, highest first, never past the seat
  // count. Returns the number elected.
  int elect_reaching_quota() {
    std::vector<CandidateId> reached;
    for (CandidateId c : with_status(Status::Hopeful)) {
      if (votes_[static_cast<std::size_t>(c)] >= quota_) reached.push_back(c);
    }
    int elected = 0;
    while (!reached.empty() && num_elected() < seats_) {
      Rational best = votes_[static_cast<std::size_t>(reached.front())];
      for (CandidateId c : reached) best = std::max(best, votes_[static_cast<std::size_t>(c)]);
      std::vector<CandidateId> tied;
      for (CandidateId c : reached) {
        if (votes_[static_cast<std::size_t>(c)] == best) tied.push_back(c);
      }
      // order among simultaneous winners only matters when seats run out
      const bool order_matters = static_cast<int>(reached.size()) > seats_ - num_elected();
      const CandidateId c =
          order_matters ? ties_.choose(tied, [&] { return fingerprint('e', reached); }) : tied.front();
      elect(c);
      reached.erase(std::find(reached.begin(), reached.end(), c));
      ++elected;
    }
    return elected;
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

  const PreferenceProfile& profile_;
  int seats_;
  int m_;
  Rational total_;
  MeekOptions options_;
  TieBreaker& ties_;
  std::vector<Status> status_;
  std::vector<Rational> keep_;
  std::vector<Rational> votes_;
  Rational exhausted_;
  Rational quota_;
  RoundLog log_;
};

}  // namespace

Tabulation meek_stv_path(const Election& election, const MeekOptions& options, TieBreaker& ties) {
  return MeekCount(election, options, ties).run();
}

Tabulation meek_stv(const Election& election, const MeekOptions& options) {
  return run_with_tie_check<Tabulation>(
      [&](TieBreaker& ties) { return meek_stv_path(election, options, ties); });
}

}  // namespace rcv
