#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rcv/error.hpp"

namespace rcv {

using CandidateId = int;
using Count = std::int64_t;

inline constexpr std::string_view kIndependentParty = "IND";

struct Candidate {
  CandidateId id = 0;
  std::string name;
  std::string party{kIndependentParty};
};

/// One distinct ranking and how many ballots carry it.
struct BallotType {
  std::vector<CandidateId> ranking;
  Count multiplicity = 1;

  bool is_bullet() const { return ranking.size() == 1; }
  /// 1-based rank of c on this ballot, 0 if unranked.
  int rank_of(CandidateId c) const;
  bool ranks(CandidateId c) const { return rank_of(c) != 0; }
};

/// Sorted candidate-id set.
using CandidateSet = std::vector<CandidateId>;

CandidateSet make_set(std::vector<CandidateId> ids);
bool set_contains(const CandidateSet& s, CandidateId c);
bool is_subset(const CandidateSet& sub, const CandidateSet& super);

/// Immutable preference profile. Ballot types are merged by ranking and kept
/// in lexicographic ranking order, so type indices are canonical.
class PreferenceProfile {
 public:
  PreferenceProfile() = default;
  PreferenceProfile(std::vector<Candidate> candidates, std::vector<BallotType> ballots);

  const std::vector<Candidate>& candidates() const { return candidates_; }
  const std::vector<BallotType>& ballots() const { return ballots_; }
  const Candidate& candidate(CandidateId c) const { return candidates_.at(static_cast<std::size_t>(c)); }
  int num_candidates() const { return static_cast<int>(candidates_.size()); }
  Count total_ballots() const { return total_; }

  /// Candidate id by exact name, -1 if absent.
  CandidateId find(std::string_view name) const;

  friend bool operator==(const PreferenceProfile&, const PreferenceProfile&);

 private:
  std::vector<Candidate> candidates_;
  std::vector<BallotType> ballots_;
  Count total_ = 0;
};

bool operator==(const BallotType& a, const BallotType& b);
bool operator==(const Candidate& a, const Candidate& b);

struct Election {
  PreferenceProfile profile;
  int seats = 1;
  std::string title;

  Election() = default;
  /// Validates 1 <= seats < m.
  Election(PreferenceProfile p, int k, std::string t = {});

  int num_candidates() const { return profile.num_candidates(); }
  Count total_ballots() const { return profile.total_ballots(); }
};

struct SelectionEntry {
  std::size_t type_index = 0;
  Count count = 0;

  friend bool operator==(const SelectionEntry&, const SelectionEntry&) = default;
  friend auto operator<=>(const SelectionEntry&, const SelectionEntry&) = default;
};

/// A multiset of ballots drawn from one profile, as (type index, count)
/// pairs. Entries are sorted by type index and never hold a zero count.
class BallotSelection {
 public:
  BallotSelection() = default;
  explicit BallotSelection(std::vector<SelectionEntry> entries);

  const std::vector<SelectionEntry>& entries() const { return entries_; }
  Count total() const;
  bool empty() const { return entries_.empty(); }
  Count count_of(std::size_t type_index) const;

  /// Throws InputError if any count exceeds the profile's multiplicity or an
  /// index is out of range.
  void validate_against(const PreferenceProfile& profile) const;

  /// Union of candidates ranked on any selected ballot.
  CandidateSet ranked_candidates(const PreferenceProfile& profile) const;

  friend bool operator==(const BallotSelection&, const BallotSelection&) = default;
  friend auto operator<=>(const BallotSelection&, const BallotSelection&) = default;

 private:
  std::vector<SelectionEntry> entries_;
};

/// Ballot types (at full multiplicity) whose ranked set is a non-empty subset
/// of `allowed`.
BallotSelection ballots_ranking_only(const PreferenceProfile& profile, const CandidateSet& allowed);

/// Sub-selection of floor(total * numerator / denominator) ballots spread over
/// the selected types by largest remainder; remainder ties go to the lower type
/// index.
BallotSelection fraction_of(const BallotSelection& selection, int numerator, int denominator);

/// Profile with the selected ballots removed. The candidate roster is kept
/// intact even if a candidate ends up with no support.
PreferenceProfile remove_ballots(const PreferenceProfile& profile, const BallotSelection& selection);
Election remove_ballots(const Election& election, const BallotSelection& selection);

/// The bullet-vote type for c, empty if nobody bullet-voted c.
BallotSelection bullet_votes(const PreferenceProfile& profile, CandidateId c);

/// Selection restricted to types that rank no candidate in `excluded`.
BallotSelection exclude_ranking_any(const PreferenceProfile& profile, const BallotSelection& selection,
                                    const CandidateSet& excluded);

// Canonical text formats.
Election parse_blt(std::string_view text);
std::string serialize_blt(const Election& election);
Election parse_csv(std::string_view text);
std::string serialize_csv(const Election& election);

/// Dispatches on extension: ".csv" uses parse_csv, anything else parse_blt.
Election load_election(const std::string& path);

}  // namespace rcv
