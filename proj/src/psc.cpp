#include "rcv/psc.hpp"

#include <algorithm>
#include <map>

namespace rcv {

std::vector<SolidCoalition> solid_coalitions(const PreferenceProfile& profile) {
  std::map<std::pair<std::size_t, CandidateSet>, Count> sizes;
  for (const auto& b : profile.ballots()) {
    CandidateSet prefix;
    for (CandidateId c : b.ranking) {
      prefix.insert(std::lower_bound(prefix.begin(), prefix.end(), c), c);
      sizes[{prefix.size(), prefix}] += b.multiplicity;
    }
  }
  std::vector<SolidCoalition> out;
  out.reserve(sizes.size());
  for (auto& [key, size] : sizes) out.push_back({key.second, size});
  return out;
}

Rational psc_quota(Count total_ballots, int seats, QuotaMode mode) {
  if (mode == QuotaMode::Hare) return Rational(static_cast<long>(total_ballots), static_cast<unsigned long>(seats));
  return Rational(static_cast<long>(total_ballots / (seats + 1) + 1));
}

PscConstraintSet psc_constraints(const PreferenceProfile& profile, int seats, const Rational& q) {
  if (sgn(q) <= 0) throw InputError("PSC quota must be positive");
  PscConstraintSet out;
  out.q = q;
  out.seats = seats;
  for (const auto& coalition : solid_coalitions(profile)) {
    // j = max integer with size >= j*q
    const std::int64_t j = floor_to_int(Rational(static_cast<long>(coalition.size)) / q);
    const auto required = static_cast<int>(
        std::min<std::int64_t>({j, static_cast<std::int64_t>(coalition.supported.size()), seats}));
    if (required > 0) out.constraints.push_back({coalition.supported, coalition.size, required});
  }
  return out;
}

bool is_psc_committee(const CandidateSet& committee, const PscConstraintSet& constraints) {
  return std::all_of(constraints.constraints.begin(), constraints.constraints.end(), [&](const PscConstraint& c) {
    const auto hits = std::count_if(c.supported.begin(), c.supported.end(),
                                     [&](CandidateId id) { return set_contains(committee, id); });
    return hits >= c.required;
  });
}

namespace {

// Depth-first construction that only extends partial committees which can
// still meet every constraint.
class CommitteeBuilder {
 public:
  CommitteeBuilder(int m, int k, const PscConstraintSet& set) : m_(m), k_(k), set_(set) {
    for (const auto& c : set.constraints) {
      std::vector<bool> mask(static_cast<std::size_t>(m), false);
      for (CandidateId id : c.supported) mask[static_cast<std::size_t>(id)] = true;
      masks_.push_back(std::move(mask));
    }
    missing_.resize(set.constraints.size());
    for (std::size_t i = 0; i < missing_.size(); ++i) missing_[i] = set.constraints[i].required;
  }

  std::vector<CandidateSet> run() {
    extend(0);
    return std::move(found_);
  }

 private:
  bool feasible(CandidateId next) const {
    const int slots = k_ - static_cast<int>(chosen_.size());
    for (std::size_t i = 0; i < masks_.size(); ++i) {
      if (missing_[i] <= 0) continue;
      if (missing_[i] > slots) return false;
      int available = 0;
      for (CandidateId c = next; c < m_; ++c) available += masks_[i][static_cast<std::size_t>(c)] ? 1 : 0;
      if (available < missing_[i]) return false;
    }
    return true;
  }

  void extend(CandidateId next) {
    if (static_cast<int>(chosen_.size()) == k_) {
      found_.push_back(chosen_);
      return;
    }
    for (CandidateId c = next; c <= m_ - (k_ - static_cast<int>(chosen_.size())); ++c) {
      chosen_.push_back(c);
      for (std::size_t i = 0; i < masks_.size(); ++i) missing_[i] -= masks_[i][static_cast<std::size_t>(c)] ? 1 : 0;
      if (feasible(c + 1)) extend(c + 1);
      for (std::size_t i = 0; i < masks_.size(); ++i) missing_[i] += masks_[i][static_cast<std::size_t>(c)] ? 1 : 0;
      chosen_.pop_back();
    }
  }

  int m_;
  int k_;
  const PscConstraintSet& set_;
  std::vector<std::vector<bool>> masks_;
  std::vector<int> missing_;
  CandidateSet chosen_;
  std::vector<CandidateSet> found_;
};

}  // namespace

std::vector<CandidateSet> enumerate_psc_committees(const Election& election, const Rational& q) {
  if (election.num_candidates() > kEnumerationGuard) {
    throw ComputationError("PSC committee enumeration refused: " + std::to_string(election.num_candidates()) +
                           " candidates exceeds " + std::to_string(kEnumerationGuard));
  }
  const auto set = psc_constraints(election.profile, election.seats, q);
  return CommitteeBuilder(election.num_candidates(), election.seats, set).run();
}

WinnerSet qpsc_scoring_rule(const Election& election, const Rational& q, const ScoringVector& sv) {
  const auto committees = enumerate_psc_committees(election, q);
  if (committees.empty()) throw PreconditionError("no q-PSC compatible committee exists");
  const auto scores = positional_scores(election.profile, sv);
  WinnerSet out;
  Rational best;
  int best_count = 0;
  for (const auto& committee : committees) {
    Rational s;
    for (CandidateId c : committee) s += scores[static_cast<std::size_t>(c)];
    if (best_count == 0 || s > best) {
      best = s;
      best_count = 1;
      out.members = committee;
    } else if (s == best) {
      ++best_count;
    }
  }
  out.tie_flag = best_count > 1;
  return out;
}

std::vector<PscConstraint> audit_hare_psc(const Election& election, const WinnerSet& winners) {
  const auto set = psc_constraints(election.profile, election.seats,
                                   psc_quota(election.total_ballots(), election.seats, QuotaMode::Hare));
  std::vector<PscConstraint> violated;
  for (const auto& c : set.constraints) {
    PscConstraintSet single{set.q, set.seats, {c}};
    if (!is_psc_committee(winners.members, single)) violated.push_back(c);
  }
  return violated;
}

}  // namespace rcv
