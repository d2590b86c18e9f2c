#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rcv/criteria.hpp"
#include "rcv/methods.hpp"
#include "rcv/profile.hpp"

namespace rcv {

enum class Family {
  StvIlvb,
  EarIlvb,
  StvIwvb,
  EarIwvb,
  StvIwvbStar,
  EarIwvbStar,
  CcIwvb,
  QpscLeft,
  QpscRight,
};

const char* to_string(Family family);
/// Accepts the upper-case names ("STV_ILVB", ...) case-insensitively.
Family parse_family(std::string_view text);
std::vector<Family> all_families();

/// Smallest k for which the construction is well formed.
int min_seats(Family family);

struct GeneratorSpec {
  Family family = Family::StvIlvb;
  int k = 1;
  /// Bullet votes for A (StvIwvbStar, EarIwvbStar). Default 1000.
  std::optional<Count> a{};
  /// StvIwvbStar only. Defaults b = 20 and c = ceil(kb/(k+1)) - 1, the
  /// largest c inside the validity window. Smaller c can fail under Meek,
  /// whose quota falls as A's ballots exhaust.
  std::optional<Count> b{};
  std::optional<Count> c{};
};

struct GeneratedCase {
  Election election;
  BallotSelection removal;
  CandidateSet winners_before;
  CandidateSet winners_after;
  Criterion criterion = Criterion::Ilvb;
  /// Methods the construction is stated for.
  std::vector<MethodSpec> methods;
};

/// Throws InputError for k below min_seats or (a, b, c) outside
/// kb/(k+1) > c > (kb - c)/(k+1).
GeneratedCase generate(const GeneratorSpec& spec);

}  // namespace rcv
