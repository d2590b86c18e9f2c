#include <stdexcept>

#include "rcv/methods.hpp"
#include "rcv/psc.hpp"

namespace rcv {

const char* to_string(EventKind kind) {
  switch (kind) {
    case EventKind::Elected:
      return "elected";
    case EventKind::Eliminated:
      return "eliminated";
    case EventKind::SurplusTransfer:
      return "surplus_transfer";
    case EventKind::QuotaUpdate:
      return "quota_update";
    case EventKind::ThresholdRaised:
      return "threshold_raised";
  }
  return "unknown";
}

std::string MethodSpec::tag() const {
  switch (kind) {
    case MethodKind::Scottish:
      return "scottish";
    case MethodKind::Meek:
      return "meek";
    case MethodKind::Ear:
      return "ear";
    case MethodKind::CcOm:
      return "cc-om";
    case MethodKind::CcPm:
      return "cc-pm";
    case MethodKind::Positional:
      return "positional";
    case MethodKind::QpscScoring:
      return "qpsc";
  }
  return "unknown";
}

MethodSpec MethodSpec::parse(std::string_view tag) {
  MethodSpec spec;
  if (tag == "scottish" || tag == "stv") {
    spec.kind = MethodKind::Scottish;
  } else if (tag == "meek") {
    spec.kind = MethodKind::Meek;
  } else if (tag == "ear") {
    spec.kind = MethodKind::Ear;
  } else if (tag == "cc-om" || tag == "cc_om") {
    spec.kind = MethodKind::CcOm;
  } else if (tag == "cc-pm" || tag == "cc_pm") {
    spec.kind = MethodKind::CcPm;
  } else if (tag == "positional") {
    spec.kind = MethodKind::Positional;
  } else if (tag == "plurality") {
    spec.kind = MethodKind::Positional;
    spec.sv = ScoringVector::plurality();
  } else if (tag == "borda") {
    // Borda needs m; filled in at dispatch time.
    spec.kind = MethodKind::Positional;
  } else if (tag == "qpsc") {
    spec.kind = MethodKind::QpscScoring;
  } else {
    throw InputError("unknown method: " + std::string(tag));
  }
  return spec;
}

namespace {

const ScoringVector& vector_for(const Election& election, const MethodSpec& method, ScoringVector& storage) {
  if (!method.sv.empty()) return method.sv;
  storage = ScoringVector::borda(election.num_candidates());
  return storage;
}

}  // namespace

Tabulation tabulate(const Election& election, const MethodSpec& method) {
  ScoringVector storage;
  switch (method.kind) {
    case MethodKind::Scottish:
      return scottish_stv(election);
    case MethodKind::Meek:
      return meek_stv(election, method.meek);
    case MethodKind::Ear:
      return ear(election);
    case MethodKind::CcOm:
    case MethodKind::CcPm: {
      Tabulation out;
      out.winners = cc(election, method.kind == MethodKind::CcOm ? CcModel::Optimistic : CcModel::Pessimistic).winners;
      out.log.tie_flag = out.winners.tie_flag;
      return out;
    }
    case MethodKind::Positional: {
      Tabulation out;
      out.winners = positional_committee(election, vector_for(election, method, storage));
      out.log.tie_flag = out.winners.tie_flag;
      return out;
    }
    case MethodKind::QpscScoring: {
      Tabulation out;
      out.winners = qpsc_scoring_rule(election, psc_quota(election.total_ballots(), election.seats, QuotaMode::Droop),
                                      vector_for(election, method, storage));
      out.log.tie_flag = out.winners.tie_flag;
      return out;
    }
  }
  throw std::logic_error("unhandled method kind");
}

WinnerSet compute_winners(const Election& election, const MethodSpec& method) {
  return tabulate(election, method).winners;
}

}  // namespace rcv
