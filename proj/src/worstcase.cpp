#include "rcv/worstcase.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace rcv {

namespace {

struct FamilyInfo {
  Family family;
  const char* name;
  int min_k;
};

constexpr FamilyInfo kFamilies[] = {
    {Family::StvIlvb, "STV_ILVB", 1},          {Family::EarIlvb, "EAR_ILVB", 1},
    {Family::StvIwvb, "STV_IWVB", 2},          {Family::EarIwvb, "EAR_IWVB", 2},
    {Family::StvIwvbStar, "STV_IWVB_STAR", 2}, {Family::EarIwvbStar, "EAR_IWVB_STAR", 3},
    {Family::CcIwvb, "CC_IWVB", 2},            {Family::QpscLeft, "QPSC_LEFT", 2},
    {Family::QpscRight, "QPSC_RIGHT", 2},
};

const FamilyInfo& info(Family f) {
  for (const auto& i : kFamilies) {
    if (i.family == f) return i;
  }
  throw std::logic_error("unknown family");
}

// Builds a profile from named candidates and named rankings.
class Builder {
 public:
  CandidateId add(const std::string& name) {
    candidates_.push_back({static_cast<CandidateId>(candidates_.size()), name, std::string(kIndependentParty)});
    return candidates_.back().id;
  }

  void ballots(Count count, std::vector<CandidateId> ranking, bool remove = false) {
    if (count <= 0) return;
    ballots_.push_back({ranking, count});
    if (remove) removal_.emplace_back(std::move(ranking), count);
  }

  GeneratedCase finish(const std::string& title, int k, CandidateSet before, CandidateSet after,
                       Criterion criterion, std::vector<MethodSpec> methods) {
    GeneratedCase out;
    out.election = Election(PreferenceProfile(candidates_, ballots_), k, title);
    const auto& types = out.election.profile.ballots();
    std::vector<SelectionEntry> entries;
    for (const auto& [ranking, count] : removal_) {
      const auto it = std::find_if(types.begin(), types.end(), [&](const BallotType& t) { return t.ranking == ranking; });
      entries.push_back({static_cast<std::size_t>(it - types.begin()), count});
    }
    out.removal = BallotSelection(std::move(entries));
    out.winners_before = make_set(std::move(before));
    out.winners_after = make_set(std::move(after));
    out.criterion = criterion;
    out.methods = std::move(methods);
    return out;
  }

 private:
  std::vector<Candidate> candidates_;
  std::vector<BallotType> ballots_;
  std::vector<std::pair<std::vector<CandidateId>, Count>> removal_;
};

std::vector<CandidateId> block(Builder& b, const std::string& prefix, int n) {
  std::vector<CandidateId> ids;
  for (int i = 1; i <= n; ++i) ids.push_back(b.add(prefix + std::to_string(i)));
  return ids;
}

std::vector<MethodSpec> specs(std::initializer_list<const char*> tags) {
  std::vector<MethodSpec> out;
  for (const char* t : tags) out.push_back(MethodSpec::parse(t));
  return out;
}

std::string title_of(const GeneratorSpec& spec) { return std::string(to_string(spec.family)) + " k=" + std::to_string(spec.k); }

GeneratedCase stv_ilvb(const GeneratorSpec& spec) {
  const int k = spec.k;
  Builder g;
  const auto a = block(g, "A", k);
  const auto b = block(g, "B", k);
  const auto c = block(g, "C", k);
  for (int i = 0; i < k; ++i) {
    g.ballots(7, {a[i], b[i], c[i]});
    g.ballots(9, {a[i], c[i], b[i]});
    g.ballots(12, {b[i], c[i], a[i]});
    g.ballots(13, {c[i], a[i], b[i]});
    g.ballots(2, {b[i]}, true);
  }
  return g.finish(title_of(spec), k, a, c, Criterion::Ilvb, specs({"scottish", "meek"}));
}

GeneratedCase ear_ilvb(const GeneratorSpec& spec) {
  const int k = spec.k;
  Builder g;
  const auto a = block(g, "A", k);
  const auto b = block(g, "B", k);
  const CandidateId c = g.add("C");
  for (int i = 0; i < k; ++i) {
    g.ballots(8, {a[i]});
    g.ballots(10 * k, {b[i], a[i]});
  }
  g.ballots(3 * k, {c}, true);
  return g.finish(title_of(spec), k, a, b, Criterion::Ilvb, specs({"ear"}));
}

GeneratedCase stv_iwvb(const GeneratorSpec& spec) {
  const int k = spec.k;
  Builder g;
  const auto a = block(g, "A", k);
  const auto b = block(g, "B", k);
  g.ballots(14 * k - 12, {a[0]}, true);
  g.ballots(4 * k + 2, {a[0], b[0]});
  for (int i = 1; i < k; ++i) g.ballots(2, {a[0], b[i]});
  g.ballots(6 * k + 2, {b[0]});
  for (int i = 1; i < k; ++i) g.ballots(2, {b[0], a[i]});
  for (int i = 1; i < k; ++i) {
    g.ballots(10 * k, {a[i]});
    g.ballots(10 * k, {b[i]});
  }
  return g.finish(title_of(spec), k, a, b, Criterion::Iwvb, specs({"scottish", "meek"}));
}

GeneratedCase ear_iwvb(const GeneratorSpec& spec) {
  const int k = spec.k;
  Builder g;
  const CandidateId a = g.add("A");
  const auto b = block(g, "B", k - 1);
  const auto c = block(g, "C", k);
  g.ballots(20 * k + 20, {a}, true);
  for (int i = 0; i < k - 1; ++i) g.ballots(10, {b[i]});
  for (int i = 0; i < k - 1; ++i) g.ballots(20 * k, {c[i], b[i]});
  g.ballots(20 * k, {c[k - 1]});
  std::vector<CandidateId> before{a};
  before.insert(before.end(), b.begin(), b.end());
  return g.finish(title_of(spec), k, before, c, Criterion::Iwvb, specs({"ear"}));
}

GeneratedCase stv_iwvb_star(const GeneratorSpec& spec) {
  const int k = spec.k;
  const Count a_count = spec.a.value_or(1000);
  const Count b_count = spec.b.value_or(20);
  const Count c_count = spec.c.value_or((k * b_count - 1) / (k + 1));
  // kb/(k+1) > c > (kb - c)/(k+1)
  if (!(k * b_count > c_count * (k + 1) && c_count * (k + 1) > k * b_count - c_count) || a_count < 0) {
    throw InputError("STV_IWVB_STAR parameters outside kb/(k+1) > c > (kb-c)/(k+1): k=" + std::to_string(k) +
                     " b=" + std::to_string(b_count) + " c=" + std::to_string(c_count));
  }
  Builder g;
  const CandidateId a = g.add("A");
  const auto b = block(g, "B", k - 1);
  const auto c = block(g, "C", k - 1);
  g.ballots(a_count, {a}, true);
  for (int i = 0; i < k - 1; ++i) g.ballots(b_count, {a, b[i]});
  for (int i = 0; i < k - 1; ++i) g.ballots(c_count, {c[i]});
  std::vector<CandidateId> before{a};
  before.insert(before.end(), b.begin(), b.end());
  std::vector<CandidateId> after{a};
  after.insert(after.end(), c.begin(), c.end());
  auto title = title_of(spec) + " a=" + std::to_string(a_count) + " b=" + std::to_string(b_count) +
               " c=" + std::to_string(c_count);
  return g.finish(title, k, before, after, Criterion::IwvbStar, specs({"scottish", "meek"}));
}

GeneratedCase ear_iwvb_star(const GeneratorSpec& spec) {
  const int k = spec.k;
  const Count a_count = spec.a.value_or(1000);
  if (a_count < 0) throw InputError("EAR_IWVB_STAR needs a >= 0");
  Builder g;
  const CandidateId a = g.add("A");
  const auto b = block(g, "B", k - 1);
  const auto c = block(g, "C", k - 1);
  g.ballots(a_count, {a}, true);
  for (int i = 0; i < k - 1; ++i) {
    g.ballots(10 * k, {a, c[i], b[i]});
    g.ballots(10, {b[i]});
    g.ballots(10, {c[i], b[i]});
  }
  std::vector<CandidateId> before{a};
  before.insert(before.end(), b.begin(), b.end());
  std::vector<CandidateId> after{a};
  after.insert(after.end(), c.begin(), c.end());
  return g.finish(title_of(spec) + " a=" + std::to_string(a_count), k, before, after, Criterion::IwvbStar,
                  specs({"ear"}));
}

GeneratedCase cc_iwvb(const GeneratorSpec& spec) {
  const int k = spec.k;
  Builder g;
  const auto a = block(g, "A", k);
  const auto b = block(g, "B", k);
  g.ballots(3, {a[0]}, true);
  g.ballots(1, {a[0], b[0]});
  g.ballots(2, {b[0], a[0]});
  g.ballots(1, {a[0], b[1]});
  g.ballots(2, {b[1], a[0]});
  for (int i = 1; i < k - 1; ++i) {
    g.ballots(2, {a[i], b[i]});
    g.ballots(2, {b[i], a[i]});
    g.ballots(2, {a[i], b[i + 1]});
    g.ballots(2, {b[i + 1], a[i]});
  }
  const int last = k - 1;
  g.ballots(2, {a[last], b[last]});
  g.ballots(2, {b[last], a[last]});
  g.ballots(2, {a[last], b[0]});
  g.ballots(2, {b[0], a[last]});
  return g.finish(title_of(spec), k, a, b, Criterion::Iwvb, specs({"cc-om", "cc-pm"}));
}

MethodSpec qpsc_method(const char* sv) {
  MethodSpec m = MethodSpec::parse("qpsc");
  m.sv = ScoringVector::parse(sv);
  return m;
}

GeneratedCase qpsc_left(const GeneratorSpec& spec) {
  Builder g;
  const CandidateId a = g.add("A");
  const CandidateId b = g.add("B");
  const CandidateId c = g.add("C");
  const CandidateId d = g.add("D");
  g.ballots(333, {a});
  g.ballots(1, {b}, true);
  g.ballots(333, {c, d});
  g.ballots(332, {d, c});
  return g.finish(title_of(spec), 2, {c, d}, {a, c}, Criterion::Ilvb, {qpsc_method("1,1/100")});
}

GeneratedCase qpsc_right(const GeneratorSpec& spec) {
  Builder g;
  const CandidateId a = g.add("A");
  const CandidateId b = g.add("B");
  const CandidateId c = g.add("C");
  const CandidateId d = g.add("D");
  g.ballots(1, {a}, true);
  g.ballots(666, {c, d});
  g.ballots(332, {b});
  return g.finish(title_of(spec), 2, {b, c}, {c, d}, Criterion::Ilvb, {qpsc_method("1,1/1000")});
}

}  // namespace

const char* to_string(Family family) { return info(family).name; }

Family parse_family(std::string_view text) {
  std::string t(text);
  std::transform(t.begin(), t.end(), t.begin(), [](unsigned char ch) { return static_cast<char>(std::toupper(ch)); });
  std::replace(t.begin(), t.end(), '-', '_');
  for (const auto& i : kFamilies) {
    if (t == i.name) return i.family;
  }
  throw InputError("unknown generator family: " + std::string(text));
}

std::vector<Family> all_families() {
  std::vector<Family> out;
  for (const auto& i : kFamilies) out.push_back(i.family);
  return out;
}

int min_seats(Family family) { return info(family).min_k; }

GeneratedCase generate(const GeneratorSpec& spec) {
  const bool fixed_k = spec.family == Family::QpscLeft || spec.family == Family::QpscRight;
  if (fixed_k && spec.k != 2) throw InputError(std::string(to_string(spec.family)) + " is defined for k = 2 only");
  if (spec.k < min_seats(spec.family)) {
    throw InputError(std::string(to_string(spec.family)) + " requires k >= " + std::to_string(min_seats(spec.family)));
  }
  switch (spec.family) {
    case Family::StvIlvb:
      return stv_ilvb(spec);
    case Family::EarIlvb:
      return ear_ilvb(spec);
    case Family::StvIwvb:
      return stv_iwvb(spec);
    case Family::EarIwvb:
      return ear_iwvb(spec);
    case Family::StvIwvbStar:
      return stv_iwvb_star(spec);
    case Family::EarIwvbStar:
      return ear_iwvb_star(spec);
    case Family::CcIwvb:
      return cc_iwvb(spec);
    case Family::QpscLeft:
      return qpsc_left(spec);
    case Family::QpscRight:
      return qpsc_right(spec);
  }
  throw std::logic_error("unhandled family");
}

}  // namespace rcv
