#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "rcv/criteria.hpp"
#include "rcv/methods.hpp"
#include "rcv/psc.hpp"

namespace rcv {

using Json = nlohmann::ordered_json;

/// Round log document. Each round carries one entry per candidate with the
/// 5-place truncated total in "votes" and the exact value in "exact", so the
/// log can be read back losslessly.
Json round_log_to_json(const Election& election, const Tabulation& tabulation);
Tabulation round_log_from_json(const Json& doc);

/// One JSON-lines violation record. Rankings and winner sets use candidate
/// ids; "names" lists the roster for readability.
Json violation_to_json(const Election& election, const std::string& election_id, const ViolationRecord& record);
/// Maps the record's rankings back onto `election`'s ballot types.
ViolationRecord violation_from_json(const Election& election, const Json& line);

Json constraints_to_json(const std::vector<PscConstraint>& constraints);
Json coalitions_to_json(const std::vector<SolidCoalition>& coalitions);

Json candidate_names(const PreferenceProfile& profile, const CandidateSet& ids);

}  // namespace rcv
