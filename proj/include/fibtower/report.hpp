#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "fibtower/sweep.hpp"
#include "fibtower/tower.hpp"

namespace fibtower {

// Every number is written as a decimal string; residues and moduli routinely
// exceed 64 bits.

nlohmann::ordered_json to_json(const AnalysisReport& report);
AnalysisReport analysis_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json to_json(const SweepReport& report);
SweepReport sweep_from_json(const nlohmann::ordered_json& j);

std::string render_json(const SweepReport& report);
/// Throws nlohmann::json::exception or std::invalid_argument on malformed input.
SweepReport parse_sweep_json(std::string_view text);

/// Columns: n,k,m,fn,expected_valuation,divisibility_ok,unit_residue,exact,
/// case,predicted_residue,match,status
std::string render_csv(const SweepReport& report);

/// Two-column table for terminals.
std::string render_text(const AnalysisReport& report);

}  // namespace fibtower
