#pragma once

#include <algorithm>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "rcv/profile.hpp"

namespace rcv::test {

inline std::string data_path(const std::string& name) { return std::string(RCV_TEST_DATA) + "/" + name; }

/// Ballots written as {count, "A>B>C"} over the given candidate names.
inline Election make_election(const std::vector<std::string>& names, int k,
                              const std::vector<std::pair<Count, std::string>>& ballots) {
  std::vector<Candidate> candidates;
  for (std::size_t i = 0; i < names.size(); ++i) candidates.push_back({static_cast<CandidateId>(i), names[i]});
  std::vector<BallotType> types;
  for (const auto& [count, text] : ballots) {
    BallotType b;
    b.multiplicity = count;
    std::istringstream in(text);
    std::string name;
    while (std::getline(in, name, '>')) {
      const auto it = std::find(names.begin(), names.end(), name);
      b.ranking.push_back(static_cast<CandidateId>(it - names.begin()));
    }
    types.push_back(b);
  }
  return Election(PreferenceProfile(candidates, types), k);
}

inline CandidateSet ids_of(const PreferenceProfile& p, const std::vector<std::string>& names) {
  CandidateSet out;
  for (const auto& n : names) out.push_back(p.find(n));
  return make_set(out);
}

inline BallotSelection select(const PreferenceProfile& p, const std::vector<std::string>& ranking, Count count) {
  std::vector<CandidateId> ids;
  for (const auto& n : ranking) ids.push_back(p.find(n));
  for (std::size_t t = 0; t < p.ballots().size(); ++t) {
    if (p.ballots()[t].ranking == ids) return BallotSelection({{t, count}});
  }
  return {};
}

struct RandomRegime {
  int max_m = 7;
  int max_k = 3;
  Count max_voters = 60;
  int max_types = 6;
};

/// Small random election with truncated rankings.
inline Election random_election(std::mt19937_64& rng, const RandomRegime& regime = {}) {
  const int m = std::uniform_int_distribution<int>(3, regime.max_m)(rng);
  const int k = std::uniform_int_distribution<int>(1, std::min(regime.max_k, m - 1))(rng);
  const int types = std::uniform_int_distribution<int>(1, regime.max_types)(rng);
  std::vector<Candidate> candidates;
  for (int i = 0; i < m; ++i) candidates.push_back({i, std::string(1, static_cast<char>('A' + i))});
  std::vector<BallotType> ballots;
  Count budget = std::uniform_int_distribution<Count>(types, regime.max_voters)(rng);
  for (int t = 0; t < types; ++t) {
    std::vector<CandidateId> order(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) order[static_cast<std::size_t>(i)] = i;
    std::shuffle(order.begin(), order.end(), rng);
    order.resize(static_cast<std::size_t>(std::uniform_int_distribution<int>(1, m)(rng)));
    const Count left = budget - (types - t - 1);
    const Count count = t + 1 == types ? left : std::uniform_int_distribution<Count>(1, std::max<Count>(1, left / 2))(rng);
    budget -= count;
    ballots.push_back({order, count});
  }
  return Election(PreferenceProfile(candidates, ballots), k);
}

/// Every size-k subset of {0..m-1} in lexicographic order.
inline std::vector<CandidateSet> all_committees(int m, int k) {
  std::vector<CandidateSet> out;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    CandidateSet s;
    for (int c = 0; c < m; ++c) {
      if (mask & (1u << c)) s.push_back(c);
    }
    out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// All non-empty sub-multisets of `pool`.
inline std::vector<BallotSelection> all_subselections(const BallotSelection& pool, std::size_t cap = 5000) {
  std::vector<BallotSelection> out;
  const auto& e = pool.entries();
  std::vector<Count> counts(e.size(), 0);
  while (out.size() < cap) {
    std::size_t i = 0;
    while (i < counts.size() && counts[i] == e[i].count) counts[i++] = 0;
    if (i == counts.size()) break;
    ++counts[i];
    std::vector<SelectionEntry> entries;
    for (std::size_t t = 0; t < e.size(); ++t) entries.push_back({e[t].type_index, counts[t]});
    out.emplace_back(std::move(entries));
  }
  return out;
}

}  // namespace rcv::test
