#include "rcv/profile.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace rcv {

int BallotType::rank_of(CandidateId c) const {
  for (std::size_t i = 0; i < ranking.size(); ++i) {
    if (ranking[i] == c) return static_cast<int>(i) + 1;
  }
  return 0;
}

bool operator==(const BallotType& a, const BallotType& b) {
  return a.ranking == b.ranking && a.multiplicity == b.multiplicity;
}

bool operator==(const Candidate& a, const Candidate& b) {
  return a.id == b.id && a.name == b.name && a.party == b.party;
}

CandidateSet make_set(std::vector<CandidateId> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

bool set_contains(const CandidateSet& s, CandidateId c) { return std::binary_search(s.begin(), s.end(), c); }

bool is_subset(const CandidateSet& sub, const CandidateSet& super) {
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

PreferenceProfile::PreferenceProfile(std::vector<Candidate> candidates, std::vector<BallotType> ballots)
    : candidates_(std::move(candidates)) {
  const int m = static_cast<int>(candidates_.size());
  for (int i = 0; i < m; ++i) {
    auto& c = candidates_[static_cast<std::size_t>(i)];
    if (c.id != i) throw InputError("candidate ids must be contiguous from 0");
    if (c.party.empty()) c.party = std::string(kIndependentParty);
  }

  std::map<std::vector<CandidateId>, Count> merged;
  for (auto& b : ballots) {
    if (b.ranking.empty()) throw InputError("empty ranking");
    if (b.multiplicity < 1) throw InputError("ballot multiplicity must be positive");
    std::vector<bool> seen(static_cast<std::size_t>(m), false);
    for (CandidateId c : b.ranking) {
      if (c < 0 || c >= m) throw InputError("ranking references unknown candidate " + std::to_string(c));
      if (seen[static_cast<std::size_t>(c)]) throw InputError("candidate repeated in ranking");
      seen[static_cast<std::size_t>(c)] = true;
    }
    merged[std::move(b.ranking)] += b.multiplicity;
  }
  ballots_.reserve(merged.size());
  for (auto& [ranking, count] : merged) {
    ballots_.push_back(BallotType{ranking, count});
    total_ += count;
  }
}

CandidateId PreferenceProfile::find(std::string_view name) const {
  for (const auto& c : candidates_) {
    if (c.name == name) return c.id;
  }
  return -1;
}

bool operator==(const PreferenceProfile& a, const PreferenceProfile& b) {
  return a.candidates_ == b.candidates_ && a.ballots_ == b.ballots_;
}

Election::Election(PreferenceProfile p, int k, std::string t)
    : profile(std::move(p)), seats(k), title(std::move(t)) {
  if (seats < 1 || seats >= profile.num_candidates()) {
    throw InputError("seats must satisfy 1 <= k < m (k=" + std::to_string(seats) +
                     ", m=" + std::to_string(profile.num_candidates()) + ")");
  }
}

BallotSelection::BallotSelection(std::vector<SelectionEntry> entries) {
  std::map<std::size_t, Count> merged;
  for (const auto& e : entries) {
    if (e.count < 0) throw InputError("negative selection count");
    merged[e.type_index] += e.count;
  }
  for (const auto& [idx, count] : merged) {
    if (count > 0) entries_.push_back({idx, count});
  }
}

Count BallotSelection::total() const {
  return std::accumulate(entries_.begin(), entries_.end(), Count{0},
                         [](Count acc, const SelectionEntry& e) { return acc + e.count; });
}

Count BallotSelection::count_of(std::size_t type_index) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), type_index,
                             [](const SelectionEntry& e, std::size_t idx) { return e.type_index < idx; });
  return it != entries_.end() && it->type_index == type_index ? it->count : 0;
}

void BallotSelection::validate_against(const PreferenceProfile& profile) const {
  for (const auto& e : entries_) {
    if (e.type_index >= profile.ballots().size()) throw InputError("selection references unknown ballot type");
    if (e.count > profile.ballots()[e.type_index].multiplicity) {
      throw InputError("selection count exceeds ballot multiplicity");
    }
  }
}

CandidateSet BallotSelection::ranked_candidates(const PreferenceProfile& profile) const {
  std::vector<CandidateId> ids;
  for (const auto& e : entries_) {
    const auto& r = profile.ballots().at(e.type_index).ranking;
    ids.insert(ids.end(), r.begin(), r.end());
  }
  return make_set(std::move(ids));
}

BallotSelection ballots_ranking_only(const PreferenceProfile& profile, const CandidateSet& allowed) {
  std::vector<SelectionEntry> out;
  const auto& ballots = profile.ballots();
  for (std::size_t i = 0; i < ballots.size(); ++i) {
    const auto& r = ballots[i].ranking;
    if (std::all_of(r.begin(), r.end(), [&](CandidateId c) { return set_contains(allowed, c); })) {
      out.push_back({i, ballots[i].multiplicity});
    }
  }
  return BallotSelection(std::move(out));
}

BallotSelection fraction_of(const BallotSelection& selection, int numerator, int denominator) {
  if (denominator < 1 || numerator < 1 || numerator > denominator) {
    throw InputError("fraction must satisfy 1 <= i <= sigma");
  }
  const Count total = selection.total();
  const Count target = total * numerator / denominator;
  if (target == total) return selection;

  const auto& entries = selection.entries();
  std::vector<SelectionEntry> out;
  out.reserve(entries.size());
  // share_i = count_i * target / total; remainders compared as integers
  std::vector<std::pair<Count, std::size_t>> remainders;
  Count assigned = 0;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const Count scaled = entries[i].count * target;
    const Count base = scaled / total;
    out.push_back({entries[i].type_index, base});
    assigned += base;
    remainders.emplace_back(scaled % total, i);
  }
  std::stable_sort(remainders.begin(), remainders.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  for (Count left = target - assigned, j = 0; left > 0; --left, ++j) {
    ++out[remainders[static_cast<std::size_t>(j)].second].count;
  }
  return BallotSelection(std::move(out));
}

PreferenceProfile remove_ballots(const PreferenceProfile& profile, const BallotSelection& selection) {
  selection.validate_against(profile);
  std::vector<BallotType> kept;
  kept.reserve(profile.ballots().size());
  const auto& ballots = profile.ballots();
  for (std::size_t i = 0; i < ballots.size(); ++i) {
    const Count left = ballots[i].multiplicity - selection.count_of(i);
    if (left > 0) kept.push_back(BallotType{ballots[i].ranking, left});
  }
  return PreferenceProfile(profile.candidates(), std::move(kept));
}

Election remove_ballots(const Election& election, const BallotSelection& selection) {
  Election out;
  out.profile = remove_ballots(election.profile, selection);
  out.seats = election.seats;
  out.title = election.title;
  return out;
}

BallotSelection bullet_votes(const PreferenceProfile& profile, CandidateId c) {
  const auto& ballots = profile.ballots();
  for (std::size_t i = 0; i < ballots.size(); ++i) {
    if (ballots[i].is_bullet() && ballots[i].ranking[0] == c) {
      return BallotSelection({{i, ballots[i].multiplicity}});
    }
  }
  return {};
}

BallotSelection exclude_ranking_any(const PreferenceProfile& profile, const BallotSelection& selection,
                                    const CandidateSet& excluded) {
  std::vector<SelectionEntry> out;
  for (const auto& e : selection.entries()) {
    const auto& r = profile.ballots().at(e.type_index).ranking;
    if (std::none_of(r.begin(), r.end(), [&](CandidateId c) { return set_contains(excluded, c); })) {
      out.push_back(e);
    }
  }
  return BallotSelection(std::move(out));
}

}  // namespace rcv
