#include "fibtower/sweep.hpp"

#include <charconv>
#include <exception>

#include "fibtower/errors.hpp"
#include "fibtower/version.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fibtower {

namespace {

std::optional<std::uint64_t> parse_u64(std::string_view text) {
    std::uint64_t v = 0;
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (text.empty() || ec != std::errc() || ptr != end) return std::nullopt;
    return v;
}

SweepReport make_report(const SweepGrid& grid, std::vector<SweepRow> rows,
                        const AnalysisOptions& options) {
    SweepReport report;
    report.tool_version = kToolVersion;
    report.seed = options.factor.seed;
    report.grid = grid;
    report.rows = std::move(rows);
    report.summary = summarize_rows(report.rows);
    return report;
}

}  // namespace

std::optional<Range> parse_range(std::string_view text) {
    const auto dots = text.find("..");
    if (dots == std::string_view::npos) {
        const auto v = parse_u64(text);
        if (!v) return std::nullopt;
        return Range{*v, *v};
    }
    const auto lo = parse_u64(text.substr(0, dots));
    const auto hi = parse_u64(text.substr(dots + 2));
    if (!lo || !hi) return std::nullopt;
    return Range{*lo, *hi};
}

std::string to_string(const Range& range) {
    return std::to_string(range.lo) + ".." + std::to_string(range.hi);
}

std::vector<TowerSpec> SweepGrid::points() const {
    std::vector<TowerSpec> out;
    if (empty()) return out;
    out.reserve(n.size() * k.size() * m.size());
    for (auto nv = n.lo; nv <= n.hi; ++nv) {
        for (auto kv = k.lo; kv <= k.hi; ++kv) {
            for (auto mv = m.lo; mv <= m.hi; ++mv) out.push_back({kv, nv, mv});
        }
    }
    return out;
}

std::string_view to_string(RowStatus status) {
    switch (status) {
        case RowStatus::Ok: return "ok";
        case RowStatus::Mismatch: return "mismatch";
        case RowStatus::BudgetExceeded: return "budget_exceeded";
    }
    return "mismatch";
}

std::optional<RowStatus> parse_row_status(std::string_view text) {
    for (auto s : {RowStatus::Ok, RowStatus::Mismatch, RowStatus::BudgetExceeded}) {
        if (to_string(s) == text) return s;
    }
    return std::nullopt;
}

bool SweepReport::all_ok() const {
    return count(RowStatus::Ok) == rows.size();
}

std::uint64_t SweepReport::count(RowStatus status) const {
    std::uint64_t c = 0;
    for (const auto& row : rows) c += row.status == status;
    return c;
}

SweepRow evaluate_point(const TowerSpec& spec, const AnalysisOptions& options) {
    SweepRow row;
    row.spec = spec;
    try {
        row.report = analyze(spec, options);
    } catch (const FactorBudgetExceeded& e) {
        row.status = RowStatus::BudgetExceeded;
        row.note = e.what();
        return row;
    } catch (const BudgetExceeded& e) {
        row.status = RowStatus::BudgetExceeded;
        row.note = e.what();
        return row;
    }
    if (!row.report->consistent()) {
        row.status = RowStatus::Mismatch;
        row.note = row.report->divisibility_ok ? "residue mismatch" : "divisibility fails";
    } else if (options.verify_chain && !row.report->chain.verified) {
        row.status = RowStatus::Mismatch;
        row.note = "pisano chain failed verification";
    }
    return row;
}

SweepSummary summarize_rows(const std::vector<SweepRow>& rows) {
    SweepSummary s;
    s.rows = rows.size();
    for (auto status : {RowStatus::Ok, RowStatus::Mismatch, RowStatus::BudgetExceeded}) {
        s.by_status[std::string(to_string(status))] = 0;
    }
    for (CaseTag tag : kAllCaseTags) s.by_case[std::string(to_string(tag))] = 0;
    for (CaseClause clause : kInRangeClauses) s.by_clause[std::string(to_string(clause))] = 0;
    s.by_clause[std::string(to_string(CaseClause::OutOfRange))] = 0;

    for (const auto& row : rows) {
        ++s.by_status[std::string(to_string(row.status))];
        if (!row.report) continue;
        ++s.by_case[std::string(to_string(row.report->case_tag))];
        ++s.by_clause[std::string(to_string(row.report->clause))];
        s.chains_verified += row.report->chain.verified;
    }
    return s;
}

SweepReport run_sweep(const SweepGrid& grid, int jobs, const AnalysisOptions& options) {
    const auto points = grid.points();
    std::vector<SweepRow> rows(points.size());
    std::vector<std::exception_ptr> errors(points.size());
    const auto count = static_cast<std::ptrdiff_t>(points.size());

#ifdef _OPENMP
    const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
#endif
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        try {
            rows[i] = evaluate_point(points[i], options);
        } catch (...) {
            errors[i] = std::current_exception();
        }
    }
    (void)jobs;

    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return make_report(grid, std::move(rows), options);
}

SweepReport run_sweep_serial(const SweepGrid& grid, const AnalysisOptions& options) {
    std::vector<SweepRow> rows;
    for (const auto& spec : grid.points()) rows.push_back(evaluate_point(spec, options));
    return make_report(grid, std::move(rows), options);
}

}  // namespace fibtower
