#pragma once

#include <vector>

#include "rcv/methods.hpp"
#include "rcv/profile.hpp"
#include "rcv/rational.hpp"

namespace rcv {

/// Ballots whose first |S| rankings are exactly the set S. A ballot ranking
/// fewer than |S| candidates is not committed to S.
struct SolidCoalition {
  CandidateSet supported;
  Count size = 0;

  friend bool operator==(const SolidCoalition&, const SolidCoalition&) = default;
};

/// Every non-empty ballot-prefix set with its solid support, ordered by
/// (|S|, S).
std::vector<SolidCoalition> solid_coalitions(const PreferenceProfile& profile);

struct PscConstraint {
  CandidateSet supported;
  Count size = 0;
  /// Minimum number of committee members drawn from `supported`.
  int required = 0;

  friend bool operator==(const PscConstraint&, const PscConstraint&) = default;
};

struct PscConstraintSet {
  Rational q;
  int seats = 0;
  std::vector<PscConstraint> constraints;
};

enum class QuotaMode { Droop, Hare };

/// Droop: floor(V/(k+1)) + 1. Hare: V/k.
Rational psc_quota(Count total_ballots, int seats, QuotaMode mode);

PscConstraintSet psc_constraints(const PreferenceProfile& profile, int seats, const Rational& q);

bool is_psc_committee(const CandidateSet& committee, const PscConstraintSet& constraints);

/// All size-k committees compatible with q-PSC, in lexicographic order.
std::vector<CandidateSet> enumerate_psc_committees(const Election& election, const Rational& q);

/// Highest total positional score among the q-PSC compatible committees
/// (unranked candidates score 0 from a ballot).
WinnerSet qpsc_scoring_rule(const Election& election, const Rational& q, const ScoringVector& sv);

/// Hare-quota constraints that `winners` fails.
std::vector<PscConstraint> audit_hare_psc(const Election& election, const WinnerSet& winners);

}  // namespace rcv
