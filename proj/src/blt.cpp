// Canonical BLT and CSV readers/writers.
#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "rcv/profile.hpp"

namespace rcv {

const char* to_string(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::MalformedHeader: return "malformed header";
    case ParseErrorKind::MalformedBallot: return "malformed ballot";
    case ParseErrorKind::CandidateOutOfRange: return "candidate index out of range";
    case ParseErrorKind::DuplicateCandidate: return "duplicate candidate in ranking";
    case ParseErrorKind::MissingTerminator: return "missing terminator";
    case ParseErrorKind::MalformedCandidate: return "malformed candidate line";
    case ParseErrorKind::MissingTitle: return "missing title";
    case ParseErrorKind::NonPositiveMultiplicity: return "non-positive multiplicity";
    case ParseErrorKind::UnknownCandidate: return "unknown candidate";
    case ParseErrorKind::InvalidSeats: return "invalid seat count";
  }
  return "parse error";
}

namespace {

struct Line {
  int number;
  std::string text;
};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<Line> non_empty_lines(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    ++number;
    auto t = trim(text.substr(pos, nl - pos));
    if (!t.empty()) out.push_back({number, std::string(t)});
    pos = nl + 1;
  }
  return out;
}

bool parse_int(std::string_view s, long long& out) {
  s = trim(s);
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

// Reads a double-quoted token starting at s[pos]; advances pos past it.
bool read_quoted(std::string_view s, std::size_t& pos, std::string& out) {
  if (pos >= s.size() || s[pos] != '"') return false;
  auto close = s.find('"', pos + 1);
  if (close == std::string_view::npos) return false;
  out = std::string(s.substr(pos + 1, close - pos - 1));
  pos = close + 1;
  return true;
}

// CSV field splitter; supports "quoted, fields" with "" escapes.
std::vector<std::string> split_csv(std::string_view line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (ch == '"') {
        quoted = false;
      } else {
        cur += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      fields.emplace_back(trim(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  fields.emplace_back(trim(cur));
  return fields;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

Election parse_blt(std::string_view text) {
  const auto lines = non_empty_lines(text);
  std::size_t at = 0;
  if (lines.empty()) throw ParseError(ParseErrorKind::MalformedHeader, 1, "empty file");

  const auto header = split_ws(lines[0].text);
  long long m = 0, k = 0;
  if (header.size() != 2 || !parse_int(header[0], m) || !parse_int(header[1], k) || m < 1) {
    throw ParseError(ParseErrorKind::MalformedHeader, lines[0].number, "expected \"m k\"");
  }
  if (k < 1 || k >= m) {
    throw ParseError(ParseErrorKind::InvalidSeats, lines[0].number, "need 1 <= k < m");
  }
  ++at;

  std::vector<BallotType> ballots;
  bool terminated = false;
  for (; at < lines.size(); ++at) {
    const auto& line = lines[at];
    if (line.text.front() == '"') break;
    const auto tokens = split_ws(line.text);
    std::vector<long long> values;
    for (auto tok : tokens) {
      long long v = 0;
      if (!parse_int(tok, v)) throw ParseError(ParseErrorKind::MalformedBallot, line.number, "non-integer token");
      values.push_back(v);
    }
    if (values.size() == 1 && values[0] == 0) {
      terminated = true;
      ++at;
      break;
    }
    if (values.back() != 0) {
      throw ParseError(ParseErrorKind::MissingTerminator, line.number, "ballot line must end with 0");
    }
    if (values[0] <= 0) {
      throw ParseError(ParseErrorKind::NonPositiveMultiplicity, line.number, "multiplicity must be positive");
    }
    if (values.size() < 3) throw ParseError(ParseErrorKind::MalformedBallot, line.number, "empty ranking");
    BallotType b;
    b.multiplicity = values[0];
    for (std::size_t i = 1; i + 1 < values.size(); ++i) {
      const long long c = values[i];
      if (c < 1 || c > m) {
        throw ParseError(ParseErrorKind::CandidateOutOfRange, line.number,
                         "candidate " + std::to_string(c) + " not in 1.." + std::to_string(m));
      }
      const auto id = static_cast<CandidateId>(c - 1);
      if (std::find(b.ranking.begin(), b.ranking.end(), id) != b.ranking.end()) {
        throw ParseError(ParseErrorKind::DuplicateCandidate, line.number,
                         "candidate " + std::to_string(c) + " ranked twice");
      }
      b.ranking.push_back(id);
    }
    ballots.push_back(std::move(b));
  }
  if (!terminated) {
    const int n = at < lines.size() ? lines[at].number : (lines.empty() ? 1 : lines.back().number + 1);
    throw ParseError(ParseErrorKind::MissingTerminator, n, "ballot section must end with a \"0\" line");
  }
  if (ballots.empty()) throw ParseError(ParseErrorKind::MalformedBallot, lines[at - 1].number, "no ballots");

  std::vector<Candidate> candidates;
  for (long long i = 0; i < m; ++i, ++at) {
    if (at >= lines.size()) {
      throw ParseError(ParseErrorKind::MalformedCandidate, lines.back().number + 1,
                       "expected " + std::to_string(m) + " candidate names");
    }
    const auto& line = lines[at];
    std::string_view s = line.text;
    std::size_t pos = 0;
    Candidate c;
    c.id = static_cast<CandidateId>(i);
    if (!read_quoted(s, pos, c.name)) {
      throw ParseError(ParseErrorKind::MalformedCandidate, line.number, "expected quoted name");
    }
    auto rest = trim(s.substr(pos));
    if (!rest.empty()) {
      if (rest.front() != ',') throw ParseError(ParseErrorKind::MalformedCandidate, line.number, "expected ,\"party\"");
      rest = trim(rest.substr(1));
      std::size_t p2 = 0;
      if (!read_quoted(rest, p2, c.party) || p2 != rest.size() || c.party.empty()) {
        throw ParseError(ParseErrorKind::MalformedCandidate, line.number, "expected quoted party");
      }
    }
    candidates.push_back(std::move(c));
  }

  if (at >= lines.size()) throw ParseError(ParseErrorKind::MissingTitle, lines.back().number + 1, "no title line");
  std::string title;
  std::size_t pos = 0;
  if (!read_quoted(lines[at].text, pos, title) || pos != lines[at].text.size()) {
    throw ParseError(ParseErrorKind::MissingTitle, lines[at].number, "expected quoted title");
  }
  if (at + 1 < lines.size()) {
    throw ParseError(ParseErrorKind::MalformedCandidate, lines[at + 1].number, "unexpected content after title");
  }
  return Election(PreferenceProfile(std::move(candidates), std::move(ballots)), static_cast<int>(k),
                  std::move(title));
}

std::string serialize_blt(const Election& election) {
  const auto& p = election.profile;
  std::ostringstream out;
  out << p.num_candidates() << ' ' << election.seats << '\n';
  // profile ballots are already in lexicographic ranking order
  for (const auto& b : p.ballots()) {
    out << b.multiplicity;
    for (CandidateId c : b.ranking) out << ' ' << (c + 1);
    out << " 0\n";
  }
  out << "0\n";
  for (const auto& c : p.candidates()) out << '"' << c.name << "\",\"" << c.party << "\"\n";
  out << '"' << election.title << "\"\n";
  return out.str();
}

Election parse_csv(std::string_view text) {
  std::vector<Candidate> candidates;
  std::vector<BallotType> ballots;
  std::string title;
  long long seats = -1;
  int seats_line = 1;

  for (const auto& line : non_empty_lines(text)) {
    if (line.text.front() == '#') continue;
    const auto fields = split_csv(line.text);
    long long mult = 0;
    if (fields[0] == "seats") {
      if (fields.size() != 2 || !parse_int(fields[1], seats)) {
        throw ParseError(ParseErrorKind::MalformedHeader, line.number, "expected seats,<k>");
      }
      seats_line = line.number;
    } else if (fields[0] == "title") {
      title = fields.size() > 1 ? fields[1] : "";
    } else if (fields[0] == "candidate") {
      if (fields.size() < 2 || fields.size() > 3 || fields[1].empty()) {
        throw ParseError(ParseErrorKind::MalformedCandidate, line.number, "expected candidate,<name>[,<party>]");
      }
      if (!ballots.empty()) {
        throw ParseError(ParseErrorKind::MalformedCandidate, line.number, "candidate rows must precede ballots");
      }
      Candidate c;
      c.id = static_cast<CandidateId>(candidates.size());
      c.name = fields[1];
      if (fields.size() == 3 && !fields[2].empty()) c.party = fields[2];
      for (const auto& other : candidates) {
        if (other.name == c.name) throw ParseError(ParseErrorKind::MalformedCandidate, line.number, "duplicate name");
      }
      candidates.push_back(std::move(c));
    } else if (parse_int(fields[0], mult)) {
      if (mult <= 0) {
        throw ParseError(ParseErrorKind::NonPositiveMultiplicity, line.number, "multiplicity must be positive");
      }
      if (fields.size() < 2) throw ParseError(ParseErrorKind::MalformedBallot, line.number, "empty ranking");
      BallotType b;
      b.multiplicity = mult;
      for (std::size_t i = 1; i < fields.size(); ++i) {
        CandidateId id = -1;
        for (const auto& c : candidates) {
          if (c.name == fields[i]) id = c.id;
        }
        if (id < 0) throw ParseError(ParseErrorKind::UnknownCandidate, line.number, "\"" + fields[i] + "\"");
        if (std::find(b.ranking.begin(), b.ranking.end(), id) != b.ranking.end()) {
          throw ParseError(ParseErrorKind::DuplicateCandidate, line.number, "\"" + fields[i] + "\" ranked twice");
        }
        b.ranking.push_back(id);
      }
      ballots.push_back(std::move(b));
    } else {
      throw ParseError(ParseErrorKind::MalformedBallot, line.number, "unrecognised row \"" + fields[0] + "\"");
    }
  }
  if (seats < 0) throw ParseError(ParseErrorKind::MalformedHeader, 1, "missing seats row");
  if (candidates.empty()) throw ParseError(ParseErrorKind::MalformedCandidate, 1, "no candidates");
  if (ballots.empty()) throw ParseError(ParseErrorKind::MalformedBallot, 1, "no ballots");
  if (seats < 1 || seats >= static_cast<long long>(candidates.size())) {
    throw ParseError(ParseErrorKind::InvalidSeats, seats_line, "need 1 <= k < m");
  }
  return Election(PreferenceProfile(std::move(candidates), std::move(ballots)), static_cast<int>(seats),
                  std::move(title));
}

std::string serialize_csv(const Election& election) {
  const auto& p = election.profile;
  std::ostringstream out;
  out << "seats," << election.seats << '\n';
  out << "title," << csv_field(election.title) << '\n';
  for (const auto& c : p.candidates()) out << "candidate," << csv_field(c.name) << ',' << csv_field(c.party) << '\n';
  for (const auto& b : p.ballots()) {
    out << b.multiplicity;
    for (CandidateId c : b.ranking) out << ',' << csv_field(p.candidate(c).name);
    out << '\n';
  }
  return out.str();
}

Election load_election(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  const bool csv = path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0;
  return csv ? parse_csv(buf.str()) : parse_blt(buf.str());
}

}  // namespace rcv
