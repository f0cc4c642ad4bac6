#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fibtower/tower.hpp"

namespace fibtower {

/// Inclusive integer range lo..hi.
struct Range {
    std::uint64_t lo = 1;
    std::uint64_t hi = 1;

    bool empty() const { return lo > hi; }
    std::uint64_t size() const { return empty() ? 0 : hi - lo + 1; }
    friend bool operator==(const Range&, const Range&) = default;
};

/// Accepts "A..B" or a single "A".
std::optional<Range> parse_range(std::string_view text);
std::string to_string(const Range& range);

struct SweepGrid {
    Range k;
    Range n;
    Range m;

    bool empty() const { return k.empty() || n.empty() || m.empty(); }
    /// Every grid point, sorted by (n, k, m).
    std::vector<TowerSpec> points() const;
    friend bool operator==(const SweepGrid&, const SweepGrid&) = default;
};

enum class RowStatus { Ok, Mismatch, BudgetExceeded };

std::string_view to_string(RowStatus status);
std::optional<RowStatus> parse_row_status(std::string_view text);

struct SweepRow {
    TowerSpec spec;
    RowStatus status = RowStatus::Ok;
    std::optional<AnalysisReport> report;  // absent for budget_exceeded rows
    std::string note;

    friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

struct SweepSummary {
    std::uint64_t rows = 0;
    std::map<std::string, std::uint64_t> by_status;
    std::map<std::string, std::uint64_t> by_case;
    std::map<std::string, std::uint64_t> by_clause;
    std::uint64_t chains_verified = 0;

    friend bool operator==(const SweepSummary&, const SweepSummary&) = default;
};

struct SweepReport {
    std::string tool_version;
    std::uint64_t seed = 0;
    SweepGrid grid;
    std::vector<SweepRow> rows;
    SweepSummary summary;

    bool all_ok() const;
    std::uint64_t count(RowStatus status) const;
    friend bool operator==(const SweepReport&, const SweepReport&) = default;
};

/// Analyze one grid point; budget exhaustion becomes a budget_exceeded row.
SweepRow evaluate_point(const TowerSpec& spec, const AnalysisOptions& options);

SweepSummary summarize_rows(const std::vector<SweepRow>& rows);

/// OpenMP map over grid points with an ordered merge. jobs <= 0 uses the
/// runtime default thread count.
SweepReport run_sweep(const SweepGrid& grid, int jobs, const AnalysisOptions& options = {});

/// Single-threaded reference for run_sweep.
SweepReport run_sweep_serial(const SweepGrid& grid, const AnalysisOptions& options = {});

}  // namespace fibtower
