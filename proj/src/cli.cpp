#include "rcv/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "rcv/json_io.hpp"
#include "rcv/worstcase.hpp"

namespace fs = std::filesystem;

namespace rcv {

namespace {

const std::vector<std::string> kGridMethods = {"scottish", "meek", "ear", "cc-om", "cc-pm"};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

bool parse_flag(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1" || value == "yes" || value == "on") return true;
  if (value == "false" || value == "0" || value == "no" || value == "off") return false;
  throw InputError("config key " + key + " expects a boolean, got '" + value + "'");
}

int parse_int(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw InputError("config key " + key + " expects an integer, got '" + value + "'");
  }
}

QuotaMode parse_q_mode(const std::string& text) {
  if (text == "hare") return QuotaMode::Hare;
  if (text == "droop") return QuotaMode::Droop;
  throw InputError("q mode must be 'hare' or 'droop', got '" + text + "'");
}

const char* q_mode_name(QuotaMode mode) { return mode == QuotaMode::Hare ? "hare" : "droop"; }

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  out << text;
}

std::string names(const PreferenceProfile& profile, const CandidateSet& ids) {
  std::string out;
  for (CandidateId c : ids) {
    if (!out.empty()) out += ", ";
    out += profile.candidate(c).name;
  }
  return out;
}

// ---- tabulate -------------------------------------------------------------

void render_rounds(const Election& election, const Tabulation& tab, std::ostream& out) {
  const auto& profile = election.profile;
  const auto& rounds = tab.log.rounds;
  std::size_t name_width = 9;
  for (const auto& c : profile.candidates()) name_width = std::max(name_width, c.name.size());
  std::vector<std::vector<std::string>> cells(static_cast<std::size_t>(profile.num_candidates()) + 1);
  std::size_t width = 6;
  for (const auto& round : rounds) {
    for (std::size_t c = 0; c < round.votes.size(); ++c) {
      const bool shown = c >= round.continuing.size() || round.continuing[c];
      cells[c].push_back(shown ? to_decimal(round.votes[c]) : "");
      width = std::max(width, cells[c].back().size());
    }
    cells.back().push_back(to_decimal(round.exhausted));
    width = std::max(width, cells.back().back().size());
  }
  out << std::left << std::setw(static_cast<int>(name_width)) << "Round" << std::right;
  for (std::size_t r = 0; r < rounds.size(); ++r) out << "  " << std::setw(static_cast<int>(width)) << r + 1;
  out << '\n';
  for (std::size_t c = 0; c < cells.size(); ++c) {
    const std::string label =
        c + 1 == cells.size() ? std::string("Exhausted") : profile.candidate(static_cast<CandidateId>(c)).name;
    out << std::left << std::setw(static_cast<int>(name_width)) << label << std::right;
    for (const auto& v : cells[c]) out << "  " << std::setw(static_cast<int>(width)) << v;
    out << '\n';
  }
  for (std::size_t r = 0; r < rounds.size(); ++r) {
    if (rounds[r].events.empty()) continue;
    out << "Round " << r + 1 << ':';
    for (const auto& e : rounds[r].events) {
      out << ' ' << to_string(e.kind);
      if (e.candidate >= 0) out << ' ' << profile.candidate(e.candidate).name;
      if (e.kind == EventKind::ThresholdRaised) out << " to " << rounds[r].threshold + 1;
      if (e.kind == EventKind::QuotaUpdate) out << ' ' << to_decimal(rounds[r].quota);
    }
    out << '\n';
  }
}

MethodSpec method_from_flags(const std::string& tag, const std::string& sv, double tolerance, int max_iterations) {
  MethodSpec m = MethodSpec::parse(tag);
  if (!sv.empty()) m.sv = ScoringVector::parse(sv);
  if (tolerance > 0) m.meek.tolerance = Rational(tolerance);
  if (max_iterations > 0) m.meek.max_iterations = max_iterations;
  return m;
}

int cmd_tabulate(const std::string& path, const MethodSpec& method, bool json, const std::string& out_path,
                 std::ostream& out) {
  const Election election = load_election(path);
  const Tabulation tab = tabulate(election, method);
  std::ostringstream text;
  if (json) {
    auto doc = round_log_to_json(election, tab);
    doc["method"] = method.tag();
    text << doc.dump(2) << '\n';
  } else {
    text << "Election: " << election.title << '\n';
    text << "Method: " << method.tag() << "  Seats: " << election.seats << "  Ballots: " << election.total_ballots()
         << '\n';
    if (!tab.log.quota_trace.empty()) {
      text << "Quota: " << to_decimal(tab.log.quota_trace.front());
      if (tab.log.quota_trace.size() > 1) text << " (final " << to_decimal(tab.log.quota_trace.back()) << ')';
      text << '\n';
    }
    if (!tab.log.rounds.empty()) render_rounds(election, tab, text);
    text << "Winners: " << names(election.profile, tab.winners.members) << '\n';
    text << "Tie-dependent: " << (tab.winners.tie_flag ? "yes" : "no") << '\n';
  }
  if (out_path.empty()) {
    out << text.str();
  } else {
    write_file(out_path, text.str());
  }
  return kExitOk;
}

// ---- audit ----------------------------------------------------------------

int cmd_audit(const std::string& path, const std::vector<MethodSpec>& methods, const std::vector<Criterion>& criteria,
              const SearchParams& params, bool party_swaps, const std::string& out_path, std::ostream& out) {
  const Election election = load_election(path);
  const std::string id = fs::path(path).stem().string();
  std::ostringstream lines;
  std::ostringstream summary;
  for (const auto& method : methods) {
    for (Criterion criterion : criteria) {
      const auto records = search(criterion, election, method, params);
      for (const auto& r : records) lines << violation_to_json(election, id, r).dump() << '\n';
      summary << to_string(criterion) << ' ' << method.tag() << ": " << records.size() << " violation(s)";
      if (party_swaps) {
        const auto swaps = search_party_swaps(election, method, params, criterion);
        for (const auto& r : swaps) lines << violation_to_json(election, id, r).dump() << '\n';
        summary << ", " << swaps.size() << " party swap(s)";
      }
      summary << '\n';
    }
  }
  if (out_path.empty()) {
    out << lines.str();
    out << summary.str();
  } else {
    write_file(out_path, lines.str());
    out << summary.str();
  }
  return kExitOk;
}

// ---- gen ------------------------------------------------------------------

int cmd_gen(const GeneratorSpec& spec, const std::string& out_path, std::ostream& out) {
  const GeneratedCase g = generate(spec);
  const auto& profile = g.election.profile;
  Json manifest;
  manifest["family"] = to_string(spec.family);
  manifest["seats"] = g.election.seats;
  manifest["criterion"] = to_string(g.criterion);
  Json methods = Json::array();
  for (const auto& m : g.methods) methods.push_back(m.tag());
  manifest["methods"] = methods;
  manifest["winners_before"] = candidate_names(profile, g.winners_before);
  manifest["winners_after"] = candidate_names(profile, g.winners_after);
  Json removal = Json::array();
  for (const auto& e : g.removal.entries()) {
    removal.push_back({{"ranking", candidate_names(profile, profile.ballots()[e.type_index].ranking)},
                       {"count", e.count}});
  }
  manifest["removal"] = removal;
  if (out_path.empty()) {
    out << serialize_blt(g.election);
    return kExitOk;
  }
  write_file(out_path, serialize_blt(g.election));
  write_file(out_path + ".manifest.json", manifest.dump(2) + "\n");
  out << "wrote " << out_path << " and " << out_path << ".manifest.json\n";
  return kExitOk;
}

// ---- psc ------------------------------------------------------------------

int cmd_psc(const std::string& path, const std::string& q_mode, const std::string& q_text, const std::string& sv,
            const std::string& audit_method, bool json, std::ostream& out) {
  const Election election = load_election(path);
  const Rational q = q_text.empty() ? psc_quota(election.total_ballots(), election.seats, parse_q_mode(q_mode))
                                    : parse_rational(q_text);
  const auto coalitions = solid_coalitions(election.profile);
  const auto constraints = psc_constraints(election.profile, election.seats, q);
  const auto committees = enumerate_psc_committees(election, q);
  Json doc;
  doc["q"] = q.get_str();
  doc["coalitions"] = coalitions_to_json(coalitions);
  doc["constraints"] = constraints_to_json(constraints.constraints);
  doc["compatible_committees"] = committees.size();
  std::ostringstream text;
  text << "q = " << to_decimal(q) << " (" << q.get_str() << ")\n";
  text << coalitions.size() << " solid coalitions\n";
  for (const auto& c : constraints.constraints) {
    text << "  {" << names(election.profile, c.supported) << "} size " << c.size << " requires " << c.required
         << '\n';
  }
  text << committees.size() << " compatible committees\n";
  if (!sv.empty()) {
    const auto winners = qpsc_scoring_rule(election, q, ScoringVector::parse(sv));
    text << "q-PSC scoring winners: " << names(election.profile, winners.members)
         << (winners.tie_flag ? " (tie)" : "") << '\n';
    doc["scoring_winners"] = candidate_names(election.profile, winners.members);
    doc["scoring_tie_flag"] = winners.tie_flag;
  }
  if (!audit_method.empty()) {
    const auto winners = compute_winners(election, MethodSpec::parse(audit_method));
    std::vector<PscConstraint> violated;
    for (const auto& c : constraints.constraints) {
      if (!is_psc_committee(winners.members, PscConstraintSet{q, election.seats, {c}})) violated.push_back(c);
    }
    text << audit_method << " winners: " << names(election.profile, winners.members) << '\n';
    text << violated.size() << " violated constraints\n";
    doc["audit"] = {{"method", audit_method},
                    {"winners", candidate_names(election.profile, winners.members)},
                    {"violated", constraints_to_json(violated)}};
  }
  out << (json ? doc.dump(2) + "\n" : text.str());
  return kExitOk;
}

// ---- batch ----------------------------------------------------------------

struct ElectionOutcome {
  std::string id;
  std::vector<BatchRow> rows;
  std::vector<std::string> tied;
  std::vector<std::string> failures;
  std::vector<std::pair<std::string, long>> psc;
  std::vector<std::string> record_lines;
};

Json outcome_to_json(const ElectionOutcome& o, const std::string& fingerprint) {
  Json rows = Json::array();
  for (const auto& r : o.rows) {
    rows.push_back({{"method", r.method},
                    {"criterion", to_string(r.criterion)},
                    {"violations", r.violations},
                    {"party_swaps", r.party_swaps}});
  }
  Json psc = Json::array();
  for (const auto& [key, n] : o.psc) psc.push_back({{"method", key}, {"violated", n}});
  return {{"election_id", o.id}, {"config", fingerprint}, {"rows", rows},         {"tied", o.tied},
          {"failures", o.failures}, {"psc", psc},           {"records", o.record_lines}};
}

std::optional<ElectionOutcome> outcome_from_json(const Json& j, const std::string& fingerprint) {
  try {
    if (j.at("config").get<std::string>() != fingerprint) return std::nullopt;
    ElectionOutcome o;
    o.id = j.at("election_id").get<std::string>();
    for (const auto& r : j.at("rows")) {
      o.rows.push_back({o.id, r.at("method").get<std::string>(), parse_criterion(r.at("criterion").get<std::string>()),
                        r.at("violations").get<long>(), r.at("party_swaps").get<long>()});
    }
    o.tied = j.at("tied").get<std::vector<std::string>>();
    o.failures = j.at("failures").get<std::vector<std::string>>();
    for (const auto& p : j.at("psc")) o.psc.emplace_back(p.at("method").get<std::string>(), p.at("violated").get<long>());
    o.record_lines = j.at("records").get<std::vector<std::string>>();
    return o;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

ElectionOutcome audit_one(const fs::path& file, const BatchConfig& config) {
  ElectionOutcome o;
  o.id = file.stem().string();
  Election election;
  try {
    election = load_election(file.string());
  } catch (const std::exception& e) {
    o.failures.push_back(o.id + ": " + e.what());
    return o;
  }
  for (const auto& method : config.methods) {
    try {
      const auto base = compute_winners(election, method);
      const std::string key = o.id + ":" + method.tag();
      if (base.tie_flag) o.tied.push_back(key);
      const Rational q = psc_quota(election.total_ballots(), election.seats, config.q_mode);
      const auto constraints = psc_constraints(election.profile, election.seats, q);
      long violated = 0;
      for (const auto& c : constraints.constraints) {
        if (!is_psc_committee(base.members, PscConstraintSet{q, election.seats, {c}})) ++violated;
      }
      o.psc.emplace_back(method.tag(), violated);
      for (Criterion criterion : config.criteria) {
        BatchRow row{o.id, method.tag(), criterion, 0, 0};
        const auto records = search(criterion, election, method, config.params);
        row.violations = static_cast<long>(records.size());
        for (const auto& r : records) o.record_lines.push_back(violation_to_json(election, o.id, r).dump());
        if (config.party_swaps) {
          const auto swaps = search_party_swaps(election, method, config.params, criterion);
          row.party_swaps = static_cast<long>(swaps.size());
          for (const auto& r : swaps) o.record_lines.push_back(violation_to_json(election, o.id, r).dump());
        }
        o.rows.push_back(row);
      }
    } catch (const std::exception& e) {
      o.failures.push_back(o.id + ":" + method.tag() + ": " + e.what());
    }
  }
  return o;
}

std::string tag_column(const std::string& tag) {
  std::string t = tag;
  std::replace(t.begin(), t.end(), '-', '_');
  return t;
}

}  // namespace

BatchConfig::BatchConfig() {
  for (const auto& tag : kGridMethods) methods.push_back(MethodSpec::parse(tag));
  criteria = {Criterion::Ilvb, Criterion::Iwvb, Criterion::IwvbStar};
}

BatchConfig BatchConfig::parse(const std::string& text) {
  BatchConfig config;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw InputError("config line " + std::to_string(line_no) + ": expected key=value");
    auto trim = [](std::string s) {
      const auto x = s.find_first_not_of(" \t\r");
      const auto y = s.find_last_not_of(" \t\r");
      return x == std::string::npos ? std::string() : s.substr(x, y - x + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "methods") {
      config.methods.clear();
      for (const auto& t : split_list(value)) config.methods.push_back(MethodSpec::parse(t));
    } else if (key == "criteria") {
      config.criteria.clear();
      for (const auto& t : split_list(value)) config.criteria.push_back(parse_criterion(t));
    } else if (key == "sigma_l") {
      config.params.sigma_l = parse_int(key, value);
    } else if (key == "sigma_w") {
      config.params.sigma_w = parse_int(key, value);
    } else if (key == "party_swaps") {
      config.party_swaps = parse_flag(key, value);
    } else if (key == "keep_tied") {
      config.params.discard_tied_results = !parse_flag(key, value);
    } else if (key == "workers") {
      config.workers = parse_int(key, value);
    } else if (key == "q_mode") {
      config.q_mode = parse_q_mode(value);
    } else {
      throw InputError("config line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
  }
  if (config.params.sigma_l < 1 || config.params.sigma_w < 1) throw InputError("sigma_l and sigma_w must be >= 1");
  return config;
}

std::string BatchConfig::canonical() const {
  std::ostringstream s;
  s << "methods=";
  for (std::size_t i = 0; i < methods.size(); ++i) s << (i ? "," : "") << methods[i].tag();
  s << ";criteria=";
  for (std::size_t i = 0; i < criteria.size(); ++i) s << (i ? "," : "") << to_string(criteria[i]);
  s << ";sigma_l=" << params.sigma_l << ";sigma_w=" << params.sigma_w << ";party_swaps=" << party_swaps
    << ";keep_tied=" << !params.discard_tied_results << ";q_mode=" << q_mode_name(q_mode);
  return s.str();
}

long BatchReport::cell(Criterion criterion, const std::string& method, bool party) const {
  long n = 0;
  for (const auto& r : rows) {
    if (r.criterion == criterion && r.method == method && (party ? r.party_swaps : r.violations) > 0) ++n;
  }
  return n;
}

std::string BatchReport::grid_csv(bool party) const {
  std::ostringstream s;
  s << "criterion";
  for (const auto& m : kGridMethods) s << ',' << tag_column(m);
  s << '\n';
  for (Criterion c : {Criterion::Ilvb, Criterion::Iwvb, Criterion::IwvbStar}) {
    s << to_string(c);
    for (const auto& m : kGridMethods) {
      const bool ran = std::any_of(rows.begin(), rows.end(),
                                   [&](const BatchRow& r) { return r.method == m && r.criterion == c; });
      s << ',';
      if (ran) s << cell(c, m, party);
    }
    s << '\n';
  }
  return s.str();
}

int resolve_workers(int flag_value, const BatchConfig& config) {
  if (flag_value > 0) return flag_value;
  if (config.workers > 0) return config.workers;
  if (const char* env = std::getenv("RCV_AUDIT_WORKERS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

BatchReport run_batch(const fs::path& dir, const BatchConfig& config, const fs::path& out_dir, int workers) {
  if (!fs::is_directory(dir)) throw InputError("not a directory: " + dir.string());
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    const auto ext = entry.path().extension().string();
    if (entry.is_regular_file() && (ext == ".blt" || ext == ".csv")) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  const fs::path cache_dir = out_dir / "elections";
  fs::create_directories(cache_dir);
  const std::string fingerprint = config.canonical();

  std::vector<ElectionOutcome> outcomes(files.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < files.size(); i = next++) {
      const fs::path cache = cache_dir / (files[i].filename().string() + ".json");
      if (fs::exists(cache)) {
        try {
          if (auto cached = outcome_from_json(Json::parse(read_file(cache)), fingerprint)) {
            outcomes[i] = std::move(*cached);
            continue;
          }
        } catch (const std::exception&) {
          // stale or truncated cache entry: recompute
        }
      }
      outcomes[i] = audit_one(files[i], config);
      write_file(cache, outcome_to_json(outcomes[i], fingerprint).dump() + "\n");
    }
  };
  const int n = std::max(1, std::min<int>(workers, static_cast<int>(files.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  BatchReport report;
  std::ostringstream jsonl;
  Json rows = Json::array();
  for (const auto& o : outcomes) {
    for (const auto& r : o.rows) {
      report.rows.push_back(r);
      rows.push_back({{"election_id", r.election_id},
                      {"method", r.method},
                      {"criterion", to_string(r.criterion)},
                      {"violations", r.violations},
                      {"party_swaps", r.party_swaps}});
    }
    report.tied.insert(report.tied.end(), o.tied.begin(), o.tied.end());
    report.failures.insert(report.failures.end(), o.failures.begin(), o.failures.end());
    for (const auto& [m, v] : o.psc) report.psc_violations.emplace_back(o.id + ":" + m, v);
    for (const auto& line : o.record_lines) jsonl << line << '\n';
  }

  Json grid;
  Json sums;
  for (Criterion c : {Criterion::Ilvb, Criterion::Iwvb, Criterion::IwvbStar}) {
    for (const auto& m : kGridMethods) {
      grid[to_string(c)][tag_column(m)] = report.cell(c, m, false);
      long total = 0;
      for (const auto& r : report.rows) {
        if (r.criterion == c && r.method == m) total += r.violations;
      }
      sums[to_string(c)][tag_column(m)] = total;
    }
  }
  Json psc = Json::array();
  for (const auto& [key, v] : report.psc_violations) psc.push_back({{"election_method", key}, {"violated", v}});
  Json doc = {{"config", fingerprint},      {"elections", files.size()}, {"grid", grid},
              {"violation_totals", sums},   {"rows", rows},              {"tied", report.tied},
              {"failures", report.failures}, {"psc_violations", psc}};
  if (config.party_swaps) {
    Json party;
    for (Criterion c : {Criterion::Ilvb, Criterion::Iwvb, Criterion::IwvbStar}) {
      for (const auto& m : kGridMethods) party[to_string(c)][tag_column(m)] = report.cell(c, m, true);
    }
    doc["party_swap_grid"] = party;
    write_file(out_dir / "party_swaps.csv", report.grid_csv(true));
  }
  write_file(out_dir / "report.csv", report.grid_csv(false));
  write_file(out_dir / "report.json", doc.dump(2) + "\n");
  write_file(out_dir / "violations.jsonl", jsonl.str());
  return report;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multiwinner ranked-choice tabulation and criterion audits"};
  app.require_subcommand(1);

  std::string path;
  std::string method_tag = "scottish";
  std::string sv;
  double tolerance = 0;
  int max_iterations = 0;
  bool json = false;
  std::string out_path;
  long seed = 0;

  auto* tab = app.add_subcommand("tabulate", "Tabulate one election and print the round table");
  tab->add_option("path", path, "BLT or CSV election file")->required();
  tab->add_option("-m,--method", method_tag, "scottish|meek|ear|cc-om|cc-pm|positional|borda|plurality|qpsc");
  tab->add_option("--sv", sv, "Scoring vector for positional/qpsc, e.g. 1,1/100");
  tab->add_option("--tolerance", tolerance, "Meek convergence tolerance");
  tab->add_option("--max-iterations", max_iterations, "Meek iteration cap");
  tab->add_flag("--json", json, "Emit the round log as JSON");
  tab->add_option("--out", out_path, "Write output to a file");

  std::string methods_text = "scottish";
  std::string criteria_text = "ilvb,iwvb,iwvb-star";
  SearchParams params;
  bool party = false;
  bool keep_tied = false;
  auto* audit = app.add_subcommand("audit", "Search one election for criterion violations");
  audit->add_option("path", path, "BLT or CSV election file")->required();
  audit->add_option("-m,--method", methods_text, "Comma-separated methods");
  audit->add_option("--criteria", criteria_text, "Comma-separated criteria: ilvb,iwvb,iwvb-star");
  audit->add_option("--sigma-l", params.sigma_l, "Fractions tried per loser pool")->check(CLI::PositiveNumber);
  audit->add_option("--sigma-w", params.sigma_w, "Fractions tried per winner pool")->check(CLI::PositiveNumber);
  audit->add_flag("--party-swaps", party, "Also run the party-swap searches");
  audit->add_flag("--keep-tied", keep_tied, "Keep records whose tabulations depended on a tie-break");
  audit->add_option("--out", out_path, "Write JSON-lines records to a file");
  audit->add_option("--seed", seed, "Reserved; all searches are deterministic");

  std::string config_path;
  int workers = 0;
  std::string batch_out = "batch_out";
  auto* batch = app.add_subcommand("batch", "Audit every election file in a directory");
  batch->add_option("dir", path, "Directory of .blt/.csv files")->required();
  batch->add_option("--config", config_path, "key=value configuration file");
  batch->add_option("--out", batch_out, "Output directory");
  batch->add_option("--workers", workers, "Worker threads (default: RCV_AUDIT_WORKERS or hardware)");
  batch->add_option("--seed", seed, "Reserved; all searches are deterministic");

  std::string family;
  GeneratorSpec gen_spec;
  Count a = -1, b = -1, c = -1;
  auto* gen = app.add_subcommand("gen", "Write a worst-case construction as BLT plus manifest");
  gen->add_option("family", family, "STV_ILVB, EAR_ILVB, STV_IWVB, EAR_IWVB, STV_IWVB_STAR, EAR_IWVB_STAR, "
                                    "CC_IWVB, QPSC_LEFT, QPSC_RIGHT")
      ->required();
  gen->add_option("-k,--seats", gen_spec.k, "Seats")->required();
  gen->add_option("--a", a, "Bullet votes for A (IWVB* families)");
  gen->add_option("--b", b, "STV_IWVB_STAR b");
  gen->add_option("--c", c, "STV_IWVB_STAR c");
  gen->add_option("--out", out_path, "BLT path; the manifest goes to PATH.manifest.json");

  std::string q_mode = "droop";
  std::string q_text;
  std::string audit_method;
  auto* psc = app.add_subcommand("psc", "Solid coalitions, PSC constraints and the q-PSC scoring rule");
  psc->add_option("path", path, "BLT or CSV election file")->required();
  psc->add_option("--q-mode", q_mode, "droop or hare");
  psc->add_option("--q", q_text, "Explicit quota, overrides --q-mode");
  psc->add_option("--sv", sv, "Scoring vector for the q-PSC scoring rule");
  psc->add_option("--audit", audit_method, "Check this method's winners against the constraints");
  psc->add_flag("--json", json, "Emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }

  try {
    if (*tab) {
      return cmd_tabulate(path, method_from_flags(method_tag, sv, tolerance, max_iterations), json, out_path, out);
    }
    if (*audit) {
      std::vector<MethodSpec> methods;
      for (const auto& t : split_list(methods_text)) methods.push_back(MethodSpec::parse(t));
      std::vector<Criterion> criteria;
      for (const auto& t : split_list(criteria_text)) criteria.push_back(parse_criterion(t));
      params.discard_tied_results = !keep_tied;
      return cmd_audit(path, methods, criteria, params, party, out_path, out);
    }
    if (*batch) {
      const BatchConfig config = config_path.empty() ? BatchConfig() : BatchConfig::parse(read_file(config_path));
      const auto report = run_batch(path, config, batch_out, resolve_workers(workers, config));
      out << report.grid_csv(false);
      for (const auto& f : report.failures) err << "failed: " << f << '\n';
      return kExitOk;
    }
    if (*gen) {
      gen_spec.family = parse_family(family);
      if (a >= 0) gen_spec.a = a;
      if (b >= 0) gen_spec.b = b;
      if (c >= 0) gen_spec.c = c;
      return cmd_gen(gen_spec, out_path, out);
    }
    if (*psc) return cmd_psc(path, q_mode, q_text, sv, audit_method, json, out);
  } catch (const ComputationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitComputation;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace rcv
