#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

#include "icdof/channel.hpp"
#include "icdof/inequalities.hpp"
#include "icdof/injectivity.hpp"
#include "icdof/replay.hpp"
#include "icdof/rv.hpp"

namespace icdof {

using nlohmann::json;

// Matrix file: { "K": int, "entries": [["p/q", ...], ...] }.
ChannelMatrix matrix_from_json(const json& j);
json matrix_to_json(const ChannelMatrix& m);

// Canonical form report: { "g": [..], "h": "..", "rows": [..], "cols": [..] }.
json canonical_to_json(const CanonicalForm3& cf);
CanonicalForm3 canonical_from_json(const json& j);

// RV file: a single { "support": [...], "probs": [...] } object or an array
// of them (a family).
DiscreteRV rv_from_json(const json& j);
json rv_to_json(const DiscreteRV& rv);
std::vector<DiscreteRV> rv_list_from_json(const json& j);

json witness_to_json(const CollisionWitness& w);
json certificate_to_json(const TruncationCertificate& c);
json outcome_to_json(const CheckOutcome& o);
json approx_to_json(const ApproxReal& a);
json inequality_to_json(const InequalityReport& r);
json dof_ratio_to_json(const DofRatioReport& r);
json balancing_to_json(const BalancingReport& r);
json trace_to_json(const InductionTrace& t);
json probe_to_json(const ContradictionProbe& p);

json poly_to_json(const UniPoly& p);  // coefficient array, constant term first
UniPoly poly_from_json(const json& j);

json load_json_file(const std::string& path);
// Writes via a temp file plus rename, so readers never see a partial report.
void write_json_atomic(const std::string& path, const json& j);

}  // namespace icdof
