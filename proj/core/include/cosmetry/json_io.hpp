#pragma once

#include <cosmetry/cable_surgery.hpp>
#include <cosmetry/obstruction.hpp>
#include <cosmetry/search.hpp>

#include <string>

namespace cosmetry {

/// Compact JSON with canonical field order; re-serializing a parsed report
/// is byte-identical. Big integers and rationals are emitted as strings.
std::string to_json(const ObstructionReport& report);
std::string to_json(const SurgeryDescription& description);
std::string to_json_line(const CandidatePair& candidate);

}  // namespace cosmetry
