#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rcv/methods.hpp"
#include "rcv/profile.hpp"

namespace rcv {

enum class Criterion { Ilvb, Iwvb, IwvbStar };

const char* to_string(Criterion criterion);
/// Accepts "ilvb", "iwvb", "iwvb-star", "iwvb_star", "iwvb*".
Criterion parse_criterion(std::string_view text);

struct SearchParams {
  int sigma_l = 10;
  int sigma_w = 3;
  /// Drop records where either tabulation depended on a tie-break.
  bool discard_tied_results = true;
};

struct ViolationRecord {
  Criterion criterion = Criterion::Ilvb;
  std::string method;
  BallotSelection removed;
  WinnerSet original_winners;
  WinnerSet modified_winners;
  std::optional<CandidateId> target_loser;
  std::optional<CandidateId> displaced_winner;
  bool party_swap = false;

  bool tied() const { return original_winners.tie_flag || modified_winners.tie_flag; }
};

/// Caches the base tabulation and every re-tabulation of one election under
/// one method, keyed by the removed selection.
class Evaluator {
 public:
  Evaluator(const Election& election, MethodSpec method);

  const Election& election() const { return election_; }
  const MethodSpec& method() const { return method_; }
  const WinnerSet& base() const { return base_; }
  const WinnerSet& after(const BallotSelection& removed);

 private:
  const Election& election_;
  MethodSpec method_;
  WinnerSet base_;
  std::map<BallotSelection, WinnerSet> cache_;
};

// Definitions as checkers. Each throws PreconditionError when `selection`
// does not meet the criterion's hypothesis. An empty selection never
// violates.
std::optional<ViolationRecord> check_ilvb(const Election& election, const MethodSpec& method,
                                          const BallotSelection& selection);
std::optional<ViolationRecord> check_iwvb(const Election& election, const MethodSpec& method,
                                          const BallotSelection& selection);
std::optional<ViolationRecord> check_iwvb_star(const Election& election, const MethodSpec& method,
                                               const BallotSelection& selection);

std::optional<ViolationRecord> check_ilvb(Evaluator& eval, const BallotSelection& selection);
std::optional<ViolationRecord> check_iwvb(Evaluator& eval, const BallotSelection& selection);
std::optional<ViolationRecord> check_iwvb_star(Evaluator& eval, const BallotSelection& selection);

std::optional<ViolationRecord> check(Criterion criterion, const Election& election, const MethodSpec& method,
                                     const BallotSelection& selection);

/// Re-runs the record's criterion from scratch and compares winner sets.
bool reverify(const Election& election, const MethodSpec& method, const ViolationRecord& record);

// Heuristic searches. Results are deduplicated by removed selection and
// ordered by discovery (target pair, prefix, fraction).
std::vector<ViolationRecord> search_ilvb(const Election& election, const MethodSpec& method,
                                         const SearchParams& params);
std::vector<ViolationRecord> search_iwvb(const Election& election, const MethodSpec& method,
                                         const SearchParams& params, bool star_mode);
std::vector<ViolationRecord> search(Criterion criterion, const Election& election, const MethodSpec& method,
                                    const SearchParams& params);

/// Searches restricted per (A in W, B not in W) to ballots ranking nobody
/// from A's or B's party, keeping results where B replaces A, A's party loses
/// exactly one seat, B's party gains exactly one, and no other party changes.
std::vector<ViolationRecord> search_party_swaps(const Election& election, const MethodSpec& method,
                                                const SearchParams& params, Criterion criterion);

/// Seats per party label for a committee.
std::map<std::string, int> party_seats(const PreferenceProfile& profile, const CandidateSet& committee);

/// IWVB ordering of W \ {A} for the pair (A, B).
std::vector<CandidateId> iwvb_support_order(const PreferenceProfile& profile, const CandidateSet& winners,
                                            CandidateId a, CandidateId b);

/// Every non-empty removal over loser-only ballot types. Throws
/// ComputationError if prod(multiplicity + 1) exceeds max_budget.
std::vector<ViolationRecord> oracle_ilvb(const Election& election, const MethodSpec& method, long max_budget,
                                         bool discard_tied_results = true);

/// Number of non-empty removals oracle_ilvb would try, or -1 above `cap`.
long oracle_ilvb_size(const Election& election, const CandidateSet& winners, long cap);

}  // namespace rcv
