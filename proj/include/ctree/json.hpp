#pragma once

#include <json.hpp>

#include "ctree/ladder.hpp"
#include "ctree/oracle.hpp"
#include "ctree/prefix.hpp"
#include "ctree/reports.hpp"
#include "ctree/stability.hpp"

namespace ctree {

// Integers that fit in 64 bits are JSON numbers; wider ones are decimal
// strings so no digits are lost.
nlohmann::json nat_json(const Nat& x);

void to_json(nlohmann::json& j, const NodeInfo& n);
void to_json(nlohmann::json& j, const CLadder& l);
void to_json(nlohmann::json& j, const EvenThread& t);
void to_json(nlohmann::json& j, const PrimitiveItinerary& it);
void to_json(nlohmann::json& j, const SequenceRendering& r);
void to_json(nlohmann::json& j, const StabilityReport& r);
void to_json(nlohmann::json& j, const ExpansiveRun& r);
void to_json(nlohmann::json& j, const PrefixEquation& eq);
void to_json(nlohmann::json& j, const ProgressionRow& row);
void to_json(nlohmann::json& j, const PrefixTree& tree);
void to_json(nlohmann::json& j, const CoverageReport& r);
void to_json(nlohmann::json& j, const Orbit& o);
void to_json(nlohmann::json& j, const TableArtifact& t);

/// Elapsed time is left out unless asked for, so that reports for the same
/// range are byte-identical.
nlohmann::json report_json(const VerificationReport& r, bool include_timing = false);

}  // namespace ctree
