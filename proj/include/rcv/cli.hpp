#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "rcv/criteria.hpp"
#include "rcv/methods.hpp"
#include "rcv/psc.hpp"

namespace rcv {

/// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitComputation = 3;

/// key=value batch configuration. Recognised keys: methods, criteria,
/// sigma_l, sigma_w, party_swaps, workers, q_mode, keep_tied. Blank lines and
/// lines starting with '#' are ignored.
struct BatchConfig {
  std::vector<MethodSpec> methods;
  std::vector<Criterion> criteria;
  SearchParams params;
  bool party_swaps = false;
  int workers = 0;  // 0: not set
  QuotaMode q_mode = QuotaMode::Hare;

  BatchConfig();
  static BatchConfig parse(const std::string& text);
  /// Canonical key=value rendering, used to detect stale resume files.
  std::string canonical() const;
};

struct BatchRow {
  std::string election_id;
  std::string method;
  Criterion criterion = Criterion::Ilvb;
  long violations = 0;
  long party_swaps = 0;
};

struct BatchReport {
  std::vector<BatchRow> rows;
  /// "election:method" pairs whose base tabulation depended on a tie-break.
  std::vector<std::string> tied;
  /// "election: message" for files or methods that could not be processed.
  std::vector<std::string> failures;
  /// PSC constraints failed per "election:method" at the configured quota.
  std::vector<std::pair<std::string, long>> psc_violations;

  /// Number of elections with at least one violation for (criterion, method
  /// tag); party = true counts party swaps instead.
  long cell(Criterion criterion, const std::string& method, bool party) const;
  /// Grid with columns criterion,scottish,meek,ear,cc_om,cc_pm.
  std::string grid_csv(bool party) const;
};

/// Audits every .blt/.csv file in `dir` (sorted by name) and writes
/// report.csv, report.json, violations.jsonl (and party_swaps.csv when
/// enabled) to `out_dir`. Per-election results are cached under
/// out_dir/elections so an interrupted run resumes where it stopped.
BatchReport run_batch(const std::filesystem::path& dir, const BatchConfig& config,
                      const std::filesystem::path& out_dir, int workers);

/// Worker count from the flag, then the config, then RCV_AUDIT_WORKERS, then
/// the hardware.
int resolve_workers(int flag_value, const BatchConfig& config);

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rcv
