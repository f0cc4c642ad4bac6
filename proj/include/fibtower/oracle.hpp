#pragma once

#include <cstdint>
#include <optional>

#include "fibtower/natural.hpp"
#include "fibtower/tower.hpp"

namespace fibtower {

inline constexpr std::uint64_t kDefaultOracleMaxIndex = 2'000'000;

/// Exact G(k,n,m) with its F_n-adic decomposition.
struct OracleResult {
    TowerSpec spec;
    Natural value;
    /// value == F_{top_index} for k >= 2; for k == 1 this is n and value is F_n^m.
    std::uint64_t top_index = 0;
    /// Largest e with F_n^e | value; empty when F_n == 1.
    std::optional<std::uint64_t> valuation;
    /// (value / F_n^valuation) mod F_n; empty when F_n == 1.
    std::optional<Natural> unit_residue;
    /// (value / F_n^(k+m-1)) mod F_n, the quantity the residue formula predicts;
    /// empty when F_n^(k+m-1) does not divide value.
    std::optional<Natural> theorem_quotient_residue;
};

/// Exact evaluation; every index n G(j) is checked against max_index before
/// it is materialized. Throws BudgetExceeded naming the offending level.
OracleResult oracle_eval(const TowerSpec& spec, std::uint64_t max_index = kDefaultOracleMaxIndex);

/// Whether oracle_eval(spec, max_index) would stay within budget.
bool oracle_feasible(const TowerSpec& spec, std::uint64_t max_index = kDefaultOracleMaxIndex);

/// Index ladder n G(1), n G(2), ... as far as it stays within max_index.
/// Returns the level (2-based, as in G(level)) that overflows, or empty.
std::optional<std::uint64_t> oracle_overflow_level(const TowerSpec& spec, std::uint64_t max_index);

}  // namespace fibtower
