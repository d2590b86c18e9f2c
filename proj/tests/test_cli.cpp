#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "helpers.hpp"
#include "rcv/cli.hpp"
#include "rcv/json_io.hpp"
#include "rcv/worstcase.hpp"

using namespace rcv;
using rcv::test::data_path;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "rcv");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

void spit(const fs::path& p, const std::string& text) {
  std::ofstream out(p);
  out << text;
}

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& name) : path(fs::temp_directory_path() / ("rcv_test_" + name)) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

fs::path two_ward_dir(const TempDir& tmp) {
  const auto dir = tmp.path / "wards";
  fs::create_directories(dir);
  fs::copy_file(data_path("ea2012w5.blt"), dir / "ea2012w5.blt");
  fs::copy_file(data_path("na2022w8.blt"), dir / "na2022w8.blt");
  return dir;
}

std::string scottish_only_config() { return "methods=scottish\ncriteria=ilvb,iwvb-star\n"; }

}  // namespace

TEST_SUITE("tabulate") {
  TEST_CASE("text table") {
    const auto r = cli({"tabulate", data_path("ea2012w5.blt"), "--method", "scottish"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("Winners: Knapp, Ross, Todd") != std::string::npos);
    CHECK(r.out.find("Quota: 833.00000") != std::string::npos);
    CHECK(r.out.find("759.35280") != std::string::npos);
    CHECK(r.out.find("Tie-dependent: no") != std::string::npos);
  }

  TEST_CASE("json round-trip") {
    const auto e = load_election(data_path("ea2012w5.blt"));
    for (const char* tag : {"scottish", "meek", "ear"}) {
      const auto r = cli({"tabulate", data_path("ea2012w5.blt"), "-m", tag, "--json"});
      REQUIRE(r.code == kExitOk);
      const auto back = round_log_from_json(Json::parse(r.out));
      const auto direct = tabulate(e, MethodSpec::parse(tag));
      CHECK(back.winners == direct.winners);
      REQUIRE(back.log.rounds.size() == direct.log.rounds.size());
      for (std::size_t i = 0; i < direct.log.rounds.size(); ++i) {
        CHECK(back.log.rounds[i].votes == direct.log.rounds[i].votes);
        CHECK(back.log.rounds[i].events == direct.log.rounds[i].events);
      }
    }
  }

  TEST_CASE("every method runs") {
    for (const char* tag : {"meek", "ear", "cc-om", "cc-pm", "borda", "plurality"}) {
      CHECK(cli({"tabulate", data_path("na2022w8.blt"), "-m", tag}).code == kExitOk);
    }
    CHECK(cli({"tabulate", data_path("na2022w8.blt"), "-m", "positional", "--sv", "3,2,1"}).code == kExitOk);
  }

  TEST_CASE("exit codes") {
    TempDir tmp("codes");
    CHECK(cli({"tabulate", (tmp.path / "missing.blt").string()}).code == kExitInput);
    spit(tmp.path / "bad.blt", "2 1\n1 3 0\n0\n\"A\"\n\"B\"\n\"t\"\n");
    const auto bad = cli({"tabulate", (tmp.path / "bad.blt").string()});
    CHECK(bad.code == kExitInput);
    CHECK(bad.err.find("line 2") != std::string::npos);
    CHECK(cli({"tabulate", data_path("ea2012w5.blt"), "-m", "warren"}).code == kExitInput);
    CHECK(cli({"frobnicate"}).code == kExitInput);
    CHECK(cli({"--help"}).code == kExitOk);

    std::ostringstream wide;
    wide << "21 2\n3 1 2 0\n0\n";
    for (int i = 0; i < 21; ++i) wide << "\"C" << i << "\"\n";
    wide << "\"wide\"\n";
    spit(tmp.path / "wide.blt", wide.str());
    CHECK(cli({"tabulate", (tmp.path / "wide.blt").string(), "-m", "cc-om"}).code == kExitComputation);
    CHECK(cli({"tabulate", data_path("ea2012w5.blt"), "-m", "meek", "--max-iterations", "1"}).code ==
          kExitComputation);
  }

  TEST_CASE("output file") {
    TempDir tmp("tabout");
    const auto target = tmp.path / "log.json";
    CHECK(cli({"tabulate", data_path("ea2012w5.blt"), "--json", "--out", target.string()}).code == kExitOk);
    CHECK(Json::parse(slurp(target))["winner_names"].size() == 3);
  }
}

TEST_SUITE("audit") {
  TEST_CASE("East Ayrshire ILVB") {
    const auto r = cli({"audit", data_path("ea2012w5.blt"), "-m", "scottish", "--criteria", "ilvb", "--sigma-l", "10"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("\"criterion\":\"ILVB\"") != std::string::npos);
    CHECK(r.out.find("ILVB scottish: 0 violation(s)") == std::string::npos);
  }

  TEST_CASE("CC finds nothing") {
    const auto r = cli({"audit", data_path("ea2012w5.blt"), "-m", "cc-om,cc-pm", "--criteria", "ilvb,iwvb-star"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("ILVB cc-om: 0 violation(s)") != std::string::npos);
    CHECK(r.out.find("IWVB* cc-pm: 0 violation(s)") != std::string::npos);
  }

  TEST_CASE("records go to a file and re-verify") {
    TempDir tmp("audit");
    const auto target = tmp.path / "v.jsonl";
    const auto r = cli({"audit", data_path("na2022w8.blt"), "--criteria", "iwvb,iwvb-star", "--party-swaps", "--out",
                        target.string()});
    REQUIRE(r.code == kExitOk);
    const auto e = load_election(data_path("na2022w8.blt"));
    std::istringstream lines(slurp(target));
    std::string line;
    int n = 0;
    while (std::getline(lines, line)) {
      const auto rec = violation_from_json(e, Json::parse(line));
      CHECK(reverify(e, MethodSpec::parse(rec.method), rec));
      ++n;
    }
    CHECK(n > 0);
  }

  TEST_CASE("a smaller search budget finds no more") {
    auto count = [](const std::vector<std::string>& extra) {
      std::vector<std::string> args{"audit", data_path("na2022w8.blt")};
      args.insert(args.end(), extra.begin(), extra.end());
      const auto r = cli(args);
      return std::count(r.out.begin(), r.out.end(), '{');
    };
    CHECK(count({"--sigma-l", "1", "--sigma-w", "1"}) <= count({}));
  }

  TEST_CASE("bad arguments") {
    CHECK(cli({"audit", data_path("ea2012w5.blt"), "--sigma-l", "0"}).code == kExitInput);
    CHECK(cli({"audit", data_path("ea2012w5.blt"), "--criteria", "iia"}).code == kExitInput);
  }
}

TEST_SUITE("batch") {
  TEST_CASE("two wards") {
    TempDir tmp("batch2");
    const auto dir = two_ward_dir(tmp);
    spit(tmp.path / "cfg", scottish_only_config());
    const auto out = tmp.path / "out";
    const auto r = cli({"batch", dir.string(), "--config", (tmp.path / "cfg").string(), "--out", out.string(),
                        "--workers", "1"});
    REQUIRE(r.code == kExitOk);
    const auto report = Json::parse(slurp(out / "report.json"));
    CHECK(report["grid"]["ILVB"]["scottish"].get<long>() >= 1);
    CHECK(report["grid"]["IWVB*"]["scottish"].get<long>() >= 1);
    CHECK(report["elections"] == 2);
    const auto csv = slurp(out / "report.csv");
    CHECK(csv.rfind("criterion,scottish,meek,ear,cc_om,cc_pm\n", 0) == 0);
    CHECK(csv.find("IWVB,,,,,") != std::string::npos);

    const auto e = load_election(data_path("ea2012w5.blt"));
    const auto n = load_election(data_path("na2022w8.blt"));
    std::istringstream lines(slurp(out / "violations.jsonl"));
    std::string line;
    while (std::getline(lines, line)) {
      const auto j = Json::parse(line);
      const auto& el = j["election_id"] == "ea2012w5" ? e : n;
      const auto rec = violation_from_json(el, j);
      CHECK(reverify(el, MethodSpec::parse(rec.method), rec));
    }
  }

  TEST_CASE("empty directory") {
    TempDir tmp("batch0");
    fs::create_directories(tmp.path / "empty");
    const auto r = cli({"batch", (tmp.path / "empty").string(), "--out", (tmp.path / "out").string()});
    CHECK(r.code == kExitOk);
    CHECK(Json::parse(slurp(tmp.path / "out" / "report.json"))["elections"] == 0);
  }

  TEST_CASE("worker count does not change the report") {
    TempDir tmp("batchw");
    const auto dir = two_ward_dir(tmp);
    const auto g = generate({Family::StvIlvb, 2});
    spit(dir / "stv_ilvb.blt", serialize_blt(g.election));
    BatchConfig config = BatchConfig::parse(scottish_only_config() + "party_swaps=true\n");
    run_batch(dir, config, tmp.path / "one", 1);
    run_batch(dir, config, tmp.path / "three", 3);
    for (const char* f : {"report.csv", "report.json", "violations.jsonl", "party_swaps.csv"}) {
      CHECK(slurp(tmp.path / "one" / f) == slurp(tmp.path / "three" / f));
    }
  }

  TEST_CASE("resume reuses cached elections") {
    TempDir tmp("batchr");
    const auto dir = two_ward_dir(tmp);
    const auto config = BatchConfig::parse(scottish_only_config());
    const auto out = tmp.path / "out";
    run_batch(dir, config, out, 1);
    const auto first = slurp(out / "report.json");
    // poison one cached result; a resume must trust it, a config change must not
    const auto cache = out / "elections" / "ea2012w5.blt.json";
    auto doc = Json::parse(slurp(cache));
    doc["rows"][0]["violations"] = 999;
    spit(cache, doc.dump());
    run_batch(dir, config, out, 1);
    CHECK(slurp(out / "report.json").find("999") != std::string::npos);
    auto changed = config;
    changed.params.sigma_l = 9;
    run_batch(dir, changed, out, 1);
    CHECK(slurp(out / "report.json").find("999") == std::string::npos);
    spit(cache, "{truncated");
    run_batch(dir, config, out, 1);
    CHECK(slurp(out / "report.json") == first);
  }

  TEST_CASE("unreadable files are reported and skipped") {
    TempDir tmp("batchf");
    const auto dir = two_ward_dir(tmp);
    spit(dir / "broken.blt", "not a ballot file\n");
    const auto report = run_batch(dir, BatchConfig::parse(scottish_only_config()), tmp.path / "out", 2);
    REQUIRE(report.failures.size() == 1);
    CHECK(report.failures[0].rfind("broken", 0) == 0);
    CHECK(report.cell(Criterion::Ilvb, "scottish", false) >= 1);
  }

  TEST_CASE("config parsing") {
    const auto c = BatchConfig::parse(
        "# audit\nmethods = scottish, meek\ncriteria=ilvb\nsigma_l=5\nsigma_w=2\nparty_swaps=true\n"
        "workers=4\nq_mode=droop\nkeep_tied=yes\n\n");
    CHECK(c.methods.size() == 2);
    CHECK(c.criteria == std::vector<Criterion>{Criterion::Ilvb});
    CHECK(c.params.sigma_l == 5);
    CHECK(c.params.sigma_w == 2);
    CHECK(c.party_swaps);
    CHECK(c.workers == 4);
    CHECK(c.q_mode == QuotaMode::Droop);
    CHECK_FALSE(c.params.discard_tied_results);

    const BatchConfig d;
    CHECK(d.methods.size() == 5);
    CHECK(d.params.sigma_l == 10);
    CHECK(d.params.sigma_w == 3);
    CHECK(d.q_mode == QuotaMode::Hare);

    CHECK_THROWS_AS(BatchConfig::parse("colour=blue\n"), InputError);
    CHECK_THROWS_AS(BatchConfig::parse("sigma_l=0\n"), InputError);
    CHECK_THROWS_AS(BatchConfig::parse("methods=warren\n"), InputError);
  }

  TEST_CASE("worker precedence") {
    BatchConfig c;
    CHECK(resolve_workers(3, c) == 3);
    c.workers = 2;
    CHECK(resolve_workers(0, c) == 2);
    c.workers = 0;
    setenv("RCV_AUDIT_WORKERS", "5", 1);
    CHECK(resolve_workers(0, c) == 5);
    unsetenv("RCV_AUDIT_WORKERS");
    CHECK(resolve_workers(0, c) >= 1);
  }
}

TEST_SUITE("gen") {
  TEST_CASE("writes a profile and manifest") {
    TempDir tmp("gen");
    for (const auto& [family, k] : std::vector<std::pair<std::string, std::string>>{
             {"STV_ILVB", "3"}, {"EAR_ILVB", "1"}, {"STV_IWVB_STAR", "3"}}) {
      const auto target = tmp.path / (family + ".blt");
      const auto r = cli({"gen", family, "-k", k, "--out", target.string()});
      REQUIRE(r.code == kExitOk);
      const auto e = load_election(target.string());
      const auto manifest = Json::parse(slurp(target.string() + ".manifest.json"));
      const auto expected = generate({parse_family(family), std::stoi(k)});
      CHECK(e.profile == expected.election.profile);
      CHECK(manifest["winners_before"] == candidate_names(e.profile, expected.winners_before));
      CHECK(manifest["winners_after"] == candidate_names(e.profile, expected.winners_after));
    }
  }

  TEST_CASE("invalid specs") {
    CHECK(cli({"gen", "STV_IWVB", "-k", "1"}).code == kExitInput);
    CHECK(cli({"gen", "STV_IWVB_STAR", "-k", "3", "--c", "15"}).code == kExitInput);
    CHECK(cli({"gen", "NOPE", "-k", "2"}).code == kExitInput);
  }
}

TEST_SUITE("psc") {
  TEST_CASE("left profile") {
    TempDir tmp("psc");
    const auto target = tmp.path / "left.blt";
    spit(target, serialize_blt(generate({Family::QpscLeft, 2}).election));
    const auto r = cli({"psc", target.string(), "--q-mode", "droop"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("5 compatible committees") != std::string::npos);
    const auto s = cli({"psc", target.string(), "--sv", "1,0.01"});
    CHECK(s.out.find("q-PSC scoring winners: C, D") != std::string::npos);
    const auto j = cli({"psc", target.string(), "--sv", "1,0.01", "--json"});
    CHECK(Json::parse(j.out)["scoring_winners"] == Json::array({"C", "D"}));
  }

  TEST_CASE("Hare audit on East Ayrshire") {
    const auto r = cli({"psc", data_path("ea2012w5.blt"), "--q-mode", "hare", "--audit", "scottish"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("0 violated constraints") != std::string::npos);
  }

  TEST_CASE("bad quota mode") {
    CHECK(cli({"psc", data_path("ea2012w5.blt"), "--q-mode", "imperiali"}).code == kExitInput);
  }
}
