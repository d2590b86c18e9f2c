#include <map>

#include "rcv/json_io.hpp"

namespace rcv {

namespace {

std::string exact(const Rational& r) { return r.get_str(); }

Rational read_exact(const Json& j) { return parse_rational(j.get<std::string>()); }

EventKind event_from_string(const std::string& s) {
  for (auto k : {EventKind::Elected, EventKind::Eliminated, EventKind::SurplusTransfer, EventKind::QuotaUpdate,
                 EventKind::ThresholdRaised}) {
    if (s == to_string(k)) return k;
  }
  throw InputError("unknown round event: " + s);
}

Json id_list(const CandidateSet& ids) {
  Json out = Json::array();
  for (CandidateId c : ids) out.push_back(c);
  return out;
}

CandidateSet read_ids(const Json& j) {
  CandidateSet out;
  for (const auto& v : j) out.push_back(v.get<CandidateId>());
  return make_set(std::move(out));
}

}  // namespace

Json candidate_names(const PreferenceProfile& profile, const CandidateSet& ids) {
  Json out = Json::array();
  for (CandidateId c : ids) out.push_back(profile.candidate(c).name);
  return out;
}

Json round_log_to_json(const Election& election, const Tabulation& tabulation) {
  const auto& log = tabulation.log;
  Json doc;
  doc["title"] = election.title;
  doc["seats"] = election.seats;
  doc["winners"] = id_list(tabulation.winners.members);
  doc["winner_names"] = candidate_names(election.profile, tabulation.winners.members);
  doc["tie_flag"] = tabulation.winners.tie_flag;
  doc["ties_broken"] = log.ties_broken;
  Json trace = Json::array();
  for (const auto& q : log.quota_trace) trace.push_back({{"votes", to_decimal(q)}, {"exact", exact(q)}});
  doc["quota_trace"] = std::move(trace);

  Json rounds = Json::array();
  for (std::size_t i = 0; i < log.rounds.size(); ++i) {
    const Round& round = log.rounds[i];
    std::map<CandidateId, std::string> event_of;
    Json events = Json::array();
    for (const auto& e : round.events) {
      if (e.candidate >= 0) event_of[e.candidate] = to_string(e.kind);
      events.push_back({{"kind", to_string(e.kind)}, {"candidate", e.candidate}});
    }
    Json entries = Json::array();
    for (std::size_t c = 0; c < round.votes.size(); ++c) {
      const auto id = static_cast<CandidateId>(c);
      Json entry;
      entry["candidate"] = election.profile.candidate(id).name;
      entry["id"] = id;
      entry["votes"] = to_decimal(round.votes[c]);
      entry["exact"] = exact(round.votes[c]);
      entry["continuing"] = c < round.continuing.size() ? static_cast<bool>(round.continuing[c]) : true;
      if (c < round.keep_factors.size()) entry["keep_factor"] = exact(round.keep_factors[c]);
      auto it = event_of.find(id);
      entry["event"] = it == event_of.end() ? Json(nullptr) : Json(it->second);
      entries.push_back(std::move(entry));
    }
    Json r;
    r["round"] = i + 1;
    r["quota"] = to_decimal(round.quota);
    r["quota_exact"] = exact(round.quota);
    r["exhausted"] = to_decimal(round.exhausted);
    r["exhausted_exact"] = exact(round.exhausted);
    if (round.threshold > 0) r["threshold"] = round.threshold;
    r["entries"] = std::move(entries);
    r["events"] = std::move(events);
    rounds.push_back(std::move(r));
  }
  doc["rounds"] = std::move(rounds);
  return doc;
}

Tabulation round_log_from_json(const Json& doc) {
  try {
    Tabulation out;
    out.winners.members = read_ids(doc.at("winners"));
    out.winners.tie_flag = doc.at("tie_flag").get<bool>();
    out.log.tie_flag = out.winners.tie_flag;
    out.log.ties_broken = doc.value("ties_broken", 0);
    for (const auto& q : doc.at("quota_trace")) out.log.quota_trace.push_back(read_exact(q.at("exact")));
    for (const auto& r : doc.at("rounds")) {
      Round round;
      round.quota = read_exact(r.at("quota_exact"));
      round.exhausted = read_exact(r.at("exhausted_exact"));
      round.threshold = r.value("threshold", 0);
      bool has_keep = false;
      for (const auto& e : r.at("entries")) {
        round.votes.push_back(read_exact(e.at("exact")));
        round.continuing.push_back(e.at("continuing").get<bool>());
        if (e.contains("keep_factor")) {
          has_keep = true;
          round.keep_factors.push_back(read_exact(e.at("keep_factor")));
        }
      }
      if (!has_keep) round.keep_factors.clear();
      for (const auto& e : r.at("events")) {
        round.events.push_back({event_from_string(e.at("kind").get<std::string>()), e.at("candidate").get<int>()});
      }
      out.log.rounds.push_back(std::move(round));
    }
    return out;
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed round log: ") + e.what());
  }
}

Json violation_to_json(const Election& election, const std::string& election_id, const ViolationRecord& record) {
  const auto& ballots = election.profile.ballots();
  Json removed = Json::array();
  for (const auto& e : record.removed.entries()) {
    removed.push_back({{"ranking", ballots.at(e.type_index).ranking}, {"count", e.count}});
  }
  Json line;
  line["election_id"] = election_id;
  line["criterion"] = to_string(record.criterion);
  line["method"] = record.method;
  line["removed"] = std::move(removed);
  line["winners_before"] = id_list(record.original_winners.members);
  line["winners_after"] = id_list(record.modified_winners.members);
  line["names_before"] = candidate_names(election.profile, record.original_winners.members);
  line["names_after"] = candidate_names(election.profile, record.modified_winners.members);
  line["party_swap"] = record.party_swap;
  line["target_loser"] = record.target_loser ? Json(*record.target_loser) : Json(nullptr);
  line["displaced_winner"] = record.displaced_winner ? Json(*record.displaced_winner) : Json(nullptr);
  return line;
}

ViolationRecord violation_from_json(const Election& election, const Json& line) {
  try {
    ViolationRecord r;
    r.criterion = parse_criterion(line.at("criterion").get<std::string>());
    r.method = line.at("method").get<std::string>();
    const auto& ballots = election.profile.ballots();
    std::vector<SelectionEntry> entries;
    for (const auto& e : line.at("removed")) {
      const auto ranking = e.at("ranking").get<std::vector<CandidateId>>();
      std::size_t t = 0;
      while (t < ballots.size() && ballots[t].ranking != ranking) ++t;
      if (t == ballots.size()) throw InputError("violation record ranks a ballot type absent from the election");
      entries.push_back({t, e.at("count").get<Count>()});
    }
    r.removed = BallotSelection(std::move(entries));
    r.original_winners.members = read_ids(line.at("winners_before"));
    r.modified_winners.members = read_ids(line.at("winners_after"));
    r.party_swap = line.value("party_swap", false);
    if (line.contains("target_loser") && !line["target_loser"].is_null()) r.target_loser = line["target_loser"].get<int>();
    if (line.contains("displaced_winner") && !line["displaced_winner"].is_null()) {
      r.displaced_winner = line["displaced_winner"].get<int>();
    }
    return r;
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed violation record: ") + e.what());
  }
}

Json constraints_to_json(const std::vector<PscConstraint>& constraints) {
  Json out = Json::array();
  for (const auto& c : constraints) out.push_back({{"S", id_list(c.supported)}, {"size", c.size}, {"required", c.required}});
  return out;
}

Json coalitions_to_json(const std::vector<SolidCoalition>& coalitions) {
  Json out = Json::array();
  for (const auto& c : coalitions) out.push_back({{"S", id_list(c.supported)}, {"size", c.size}});
  return out;
}

}  // namespace rcv
