#include <algorithm>
#include <functional>
#include <set>

#include "rcv/criteria.hpp"

namespace rcv {

namespace {

class Collector {
 public:
  explicit Collector(const SearchParams& params) : params_(params) {}

  /// Returns the stored record, or nullptr if it was dropped.
  ViolationRecord* add(std::optional<ViolationRecord> record) {
    if (!record) return nullptr;
    if (params_.discard_tied_results && record->tied()) return nullptr;
    if (!seen_.insert(record->removed).second) return nullptr;
    records_.push_back(std::move(*record));
    return &records_.back();
  }

  bool seen(const BallotSelection& selection) const { return seen_.count(selection) > 0; }

  std::vector<ViolationRecord> take() { return std::move(records_); }

 private:
  const SearchParams& params_;
  std::set<BallotSelection> seen_;
  std::vector<ViolationRecord> records_;
};

CandidateSet losers_of(const Election& election, const CandidateSet& winners) {
  CandidateSet out;
  for (CandidateId c = 0; c < election.num_candidates(); ++c) {
    if (!set_contains(winners, c)) out.push_back(c);
  }
  return out;
}

CandidateSet without(const CandidateSet& set, CandidateId c) {
  CandidateSet out;
  for (CandidateId x : set) {
    if (x != c) out.push_back(x);
  }
  return out;
}

// Ranked strictly above, with unranked candidates below every ranked one.
bool above(const BallotType& b, CandidateId x, CandidateId y) {
  const int rx = b.rank_of(x);
  const int ry = b.rank_of(y);
  return rx != 0 && (ry == 0 || rx < ry);
}

CandidateSet party_members(const PreferenceProfile& profile, CandidateId a, CandidateId b) {
  CandidateSet out;
  for (const auto& c : profile.candidates()) {
    if (c.party == profile.candidate(a).party || c.party == profile.candidate(b).party) out.push_back(c.id);
  }
  return out;
}

bool is_party_swap(const PreferenceProfile& profile, const ViolationRecord& record, CandidateId a, CandidateId b) {
  const auto& pa = profile.candidate(a).party;
  const auto& pb = profile.candidate(b).party;
  if (pa == pb) return false;
  if (set_contains(record.modified_winners.members, a) || !set_contains(record.modified_winners.members, b)) {
    return false;
  }
  auto before = party_seats(profile, record.original_winners.members);
  auto after = party_seats(profile, record.modified_winners.members);
  std::set<std::string> parties;
  for (const auto& [p, n] : before) parties.insert(p);
  for (const auto& [p, n] : after) parties.insert(p);
  for (const auto& p : parties) {
    const int delta = after[p] - before[p];
    const int expected = p == pa ? -1 : (p == pb ? 1 : 0);
    if (delta != expected) return false;
  }
  return true;
}

void ilvb_probe(Evaluator& eval, const BallotSelection& pool, int sigma, Collector& out,
                const std::function<ViolationRecord*(std::optional<ViolationRecord>)>& accept) {
  if (pool.empty()) return;
  for (int i = 1; i <= sigma; ++i) {
    const auto selection = fraction_of(pool, i, sigma);
    if (selection.empty() || out.seen(selection)) continue;
    accept(check_ilvb(eval, selection));
  }
}

void iwvb_probe(Evaluator& eval, const BallotSelection& pool, int sigma, bool star_mode, Collector& out,
                const std::function<ViolationRecord*(std::optional<ViolationRecord>)>& accept) {
  if (pool.empty()) return;
  for (int i = 1; i <= sigma; ++i) {
    const auto selection = fraction_of(pool, i, sigma);
    if (selection.empty() || out.seen(selection)) continue;
    accept(star_mode ? check_iwvb_star(eval, selection) : check_iwvb(eval, selection));
  }
}

void validate(const SearchParams& params) {
  if (params.sigma_l < 1 || params.sigma_w < 1) throw InputError("sigma_l and sigma_w must be at least 1");
}

}  // namespace

std::vector<CandidateId> iwvb_support_order(const PreferenceProfile& profile, const CandidateSet& winners,
                                            CandidateId a, CandidateId b) {
  std::vector<std::pair<Count, CandidateId>> keyed;
  for (CandidateId c : winners) {
    if (c == a) continue;
    Count score = 0;
    for (const auto& ballot : profile.ballots()) {
      if (!above(ballot, c, a) || !above(ballot, c, b)) continue;
      if (above(ballot, a, b)) score += ballot.multiplicity;
      if (above(ballot, b, a)) score -= ballot.multiplicity;
    }
    keyed.emplace_back(score, c);
  }
  std::stable_sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) { return x.first > y.first; });
  std::vector<CandidateId> out;
  for (const auto& [score, c] : keyed) out.push_back(c);
  return out;
}

std::vector<ViolationRecord> search_ilvb(const Election& election, const MethodSpec& method,
                                         const SearchParams& params) {
  validate(params);
  Evaluator eval(election, method);
  Collector out(params);
  if (params.discard_tied_results && eval.base().tie_flag) return {};
  const auto losers = losers_of(election, eval.base().members);
  for (CandidateId b : losers) {
    const auto pool = ballots_ranking_only(election.profile, without(losers, b));
    ilvb_probe(eval, pool, params.sigma_l, out, [&](std::optional<ViolationRecord> r) {
      auto* stored = out.add(std::move(r));
      if (stored) stored->target_loser = b;
      return stored;
    });
  }
  return out.take();
}

std::vector<ViolationRecord> search_iwvb(const Election& election, const MethodSpec& method,
                                         const SearchParams& params, bool star_mode) {
  validate(params);
  Evaluator eval(election, method);
  Collector out(params);
  if (params.discard_tied_results && eval.base().tie_flag) return {};
  const auto& winners = eval.base().members;
  const auto losers = losers_of(election, winners);
  for (CandidateId a : winners) {
    for (CandidateId b : losers) {
      const auto order = iwvb_support_order(election.profile, winners, a, b);
      CandidateSet prefix;
      for (CandidateId c : order) {
        prefix.push_back(c);
        std::sort(prefix.begin(), prefix.end());
        const auto pool = ballots_ranking_only(election.profile, prefix);
        iwvb_probe(eval, pool, params.sigma_w, star_mode, out, [&](std::optional<ViolationRecord> r) {
          auto* stored = out.add(std::move(r));
          if (stored) stored->target_loser = b;
          return stored;
        });
      }
    }
  }
  return out.take();
}

std::vector<ViolationRecord> search(Criterion criterion, const Election& election, const MethodSpec& method,
                                    const SearchParams& params) {
  switch (criterion) {
    case Criterion::Ilvb:
      return search_ilvb(election, method, params);
    case Criterion::Iwvb:
      return search_iwvb(election, method, params, false);
    case Criterion::IwvbStar:
      return search_iwvb(election, method, params, true);
  }
  return {};
}

std::vector<ViolationRecord> search_party_swaps(const Election& election, const MethodSpec& method,
                                                const SearchParams& params, Criterion criterion) {
  validate(params);
  Evaluator eval(election, method);
  Collector out(params);
  if (params.discard_tied_results && eval.base().tie_flag) return {};
  const auto& profile = election.profile;
  const auto& winners = eval.base().members;
  const auto losers = losers_of(election, winners);

  for (CandidateId a : winners) {
    for (CandidateId b : losers) {
      if (profile.candidate(a).party == profile.candidate(b).party) continue;
      const auto excluded = party_members(profile, a, b);
      auto accept = [&](std::optional<ViolationRecord> r) -> ViolationRecord* {
        if (!r || !is_party_swap(profile, *r, a, b)) return nullptr;
        r->party_swap = true;
        r->target_loser = b;
        r->displaced_winner = a;
        return out.add(std::move(r));
      };
      if (criterion == Criterion::Ilvb) {
        const auto pool = exclude_ranking_any(profile, ballots_ranking_only(profile, without(losers, b)), excluded);
        ilvb_probe(eval, pool, params.sigma_l, out, accept);
        continue;
      }
      CandidateSet prefix;
      for (CandidateId c : iwvb_support_order(profile, winners, a, b)) {
        prefix.push_back(c);
        std::sort(prefix.begin(), prefix.end());
        const auto pool = exclude_ranking_any(profile, ballots_ranking_only(profile, prefix), excluded);
        iwvb_probe(eval, pool, params.sigma_w, criterion == Criterion::IwvbStar, out, accept);
      }
    }
  }
  return out.take();
}

long oracle_ilvb_size(const Election& election, const CandidateSet& winners, long cap) {
  const auto pool = ballots_ranking_only(election.profile, losers_of(election, winners));
  long product = 1;
  for (const auto& e : pool.entries()) {
    if (product > cap / (e.count + 1) + 1) return -1;
    product *= static_cast<long>(e.count + 1);
    if (product - 1 > cap) return -1;
  }
  return product - 1;
}

std::vector<ViolationRecord> oracle_ilvb(const Election& election, const MethodSpec& method, long max_budget,
                                         bool discard_tied_results) {
  Evaluator eval(election, method);
  const auto pool = ballots_ranking_only(election.profile, losers_of(election, eval.base().members));
  if (oracle_ilvb_size(election, eval.base().members, max_budget) < 0) {
    throw ComputationError("ILVB oracle refused: removal space exceeds budget " + std::to_string(max_budget));
  }
  SearchParams params;
  params.discard_tied_results = discard_tied_results;
  Collector out(params);
  const auto& types = pool.entries();
  std::vector<Count> counts(types.size(), 0);
  // odometer over every count vector except all-zero
  while (true) {
    std::size_t i = 0;
    while (i < counts.size() && counts[i] == types[i].count) counts[i++] = 0;
    if (i == counts.size()) break;
    ++counts[i];
    std::vector<SelectionEntry> entries;
    for (std::size_t t = 0; t < types.size(); ++t) entries.push_back({types[t].type_index, counts[t]});
    out.add(check_ilvb(eval, BallotSelection(std::move(entries))));
  }
  return out.take();
}

}  // namespace rcv
