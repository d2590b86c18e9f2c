#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rcv/profile.hpp"
#include "rcv/rational.hpp"
#include "rcv/tie_breaker.hpp"

namespace rcv {

struct WinnerSet {
  CandidateSet members;
  /// True when a different resolution of some tie would have produced a
  /// different committee, i.e. the committee is not uniquely determined.
  bool tie_flag = false;

  friend bool operator==(const WinnerSet&, const WinnerSet&) = default;
};

enum class EventKind {
  Elected,
  Eliminated,
  SurplusTransfer,
  QuotaUpdate,
  ThresholdRaised,
};

const char* to_string(EventKind kind);

struct RoundEvent {
  EventKind kind;
  CandidateId candidate = -1;

  friend bool operator==(const RoundEvent&, const RoundEvent&) = default;
};

struct Round {
  /// Per-candidate totals after this round's transfer (EAR: support at the
  /// current rank threshold).
  std::vector<Rational> votes;
  /// Candidates still in contention when the totals were taken; the others
  /// are shown blank in a votes-by-round table.
  std::vector<bool> continuing;
  Rational exhausted;
  Rational quota;
  std::vector<RoundEvent> events;
  int threshold = 0;                    // EAR rank threshold j
  std::vector<Rational> keep_factors;   // Meek only
};

struct RoundLog {
  std::vector<Round> rounds;
  std::vector<Rational> quota_trace;
  bool tie_flag = false;
  /// Number of tie-break decisions taken on the reported path.
  int ties_broken = 0;
};

struct Tabulation {
  WinnerSet winners;
  RoundLog log;
};

/// Positional scores s_1 >= s_2 >= ... >= 0 with s_1 > 0. Positions past the
/// end of the vector score 0.
class ScoringVector {
 public:
  ScoringVector() = default;
  explicit ScoringVector(std::vector<Rational> scores);

  static ScoringVector borda(int m);
  static ScoringVector plurality();
  static ScoringVector parse(std::string_view csv);

  const std::vector<Rational>& scores() const { return scores_; }
  /// Score for 1-based rank r (0 for unranked).
  Rational at_rank(int r) const;
  bool empty() const { return scores_.empty(); }

 private:
  std::vector<Rational> scores_;
};

// ---- Scottish STV -------------------------------------------------------

Rational scottish_quota(Count total_ballots, int seats);

/// Tabulates with ties resolved by `ties` (lowest id unless it carries a forced
/// prefix). The returned tie_flag is not set; see scottish_stv.
Tabulation scottish_stv_path(const Election& election, TieBreaker& ties);
Tabulation scottish_stv(const Election& election);

// ---- Meek STV -----------------------------------------------------------

struct MeekOptions {
  Rational tolerance = Rational(1, 1000000000);
  int max_iterations = 1000;
};

Tabulation meek_stv_path(const Election& election, const MeekOptions& options, TieBreaker& ties);
Tabulation meek_stv(const Election& election, const MeekOptions& options = {});

// ---- Expanding Approvals Rule ------------------------------------------

Tabulation ear_path(const Election& election, TieBreaker& ties);
Tabulation ear(const Election& election);

// ---- Chamberlin-Courant ------------------------------------------------

enum class CcModel { Optimistic, Pessimistic };

inline constexpr int kEnumerationGuard = 20;

Rational cc_score(const PreferenceProfile& profile, const CandidateSet& committee, CcModel model);

struct CommitteeScore {
  CandidateSet committee;
  Rational score;
};

struct CcResult {
  WinnerSet winners;
  /// Every size-k committee in lexicographic order.
  std::vector<CommitteeScore> scores;
};

CcResult cc(const Election& election, CcModel model);

// ---- positional committee rules ----------------------------------------

std::vector<Rational> positional_scores(const PreferenceProfile& profile, const ScoringVector& sv);
WinnerSet positional_committee(const Election& election, const ScoringVector& sv);

// ---- dispatch ------------------------------------------------------------

enum class MethodKind { Scottish, Meek, Ear, CcOm, CcPm, Positional, QpscScoring };

struct MethodSpec {
  MethodKind kind = MethodKind::Scottish;
  MeekOptions meek;
  ScoringVector sv;  // Positional and QpscScoring

  /// "scottish", "meek", "ear", "cc-om", "cc-pm", "positional", "qpsc".
  std::string tag() const;
  /// Accepts the tags above plus "borda" and "plurality" (positional).
  static MethodSpec parse(std::string_view tag);
};

/// Winner set with tie_flag, for any method.
WinnerSet compute_winners(const Election& election, const MethodSpec& method);

/// Winner set plus round log where the method has one.
Tabulation tabulate(const Election& election, const MethodSpec& method);

}  // namespace rcv
