#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fibtower/factor.hpp"
#include "fibtower/modfib.hpp"
#include "fibtower/natural.hpp"

namespace fibtower {

/// Parameters of G(k, n, m): G(1) = F_n^m, G(j+1) = F_{n G(j)}.
struct TowerSpec {
    std::uint64_t k = 1;
    std::uint64_t n = 1;
    std::uint64_t m = 1;

    /// Sweep order is (n, k, m).
    friend auto operator<=>(const TowerSpec& a, const TowerSpec& b) {
        if (auto c = a.n <=> b.n; c != 0) return c;
        if (auto c = a.k <=> b.k; c != 0) return c;
        return a.m <=> b.m;
    }
    friend bool operator==(const TowerSpec&, const TowerSpec&) = default;

    std::uint64_t expected_valuation() const { return k + m - 1; }
    bool valid() const { return k >= 1 && n >= 1 && m >= 1; }
};

std::string to_string(const TowerSpec& spec);

/// Branch of the residue formula for G(k,n,m) / F_n^(k+m-1) mod F_n.
enum class CaseTag {
    UnitOne,        // 1
    FNMinus1,       // F_{n-1}
    HalfPow,        // (F_{n-3}/2)^(k-1)
    SignedHalfPow,  // (-1)^n (F_{n-3}/2)^(k-1)
    OutOfRange,     // k < 2 or n < 3
};

/// The individual conditions of the piecewise statement. Several clauses
/// share a CaseTag; coverage is tracked per clause.
enum class CaseClause {
    UnitEvenK,            // 2 | k, 3 !| n
    UnitOddKNot4,         // 2 !| k, 3 !| n, 4 !| n
    FNMinus1OddK,         // 2 !| k, 3 !| n, 4 | n
    HalfPowOddKMultiM,    // 2 !| k, 3 | n, m >= 2
    HalfPowEvenKSingleM,  // 2 | k, 3 | n, m = 1
    SignedEvenKMultiM,    // 2 | k, 3 | n, m >= 2
    SignedOddKSingleM,    // 2 !| k, 3 | n, m = 1
    OutOfRange,
};

inline constexpr CaseTag kAllCaseTags[] = {CaseTag::UnitOne, CaseTag::FNMinus1, CaseTag::HalfPow,
                                           CaseTag::SignedHalfPow, CaseTag::OutOfRange};
inline constexpr CaseClause kInRangeClauses[] = {
    CaseClause::UnitEvenK,         CaseClause::UnitOddKNot4,        CaseClause::FNMinus1OddK,
    CaseClause::HalfPowOddKMultiM, CaseClause::HalfPowEvenKSingleM, CaseClause::SignedEvenKMultiM,
    CaseClause::SignedOddKSingleM};

std::string_view to_string(CaseTag tag);
std::string_view to_string(CaseClause clause);
std::optional<CaseTag> parse_case_tag(std::string_view text);
std::optional<CaseClause> parse_case_clause(std::string_view text);
CaseTag tag_of(CaseClause clause);

CaseClause classify(const TowerSpec& spec);

struct Prediction {
    CaseTag tag = CaseTag::OutOfRange;
    CaseClause clause = CaseClause::OutOfRange;
    std::optional<Natural> residue;  // in [0, F_n); empty when out of range
};

/// Evaluates the piecewise residue formula in exact arithmetic.
Prediction predicted_residue(const TowerSpec& spec);

/// G(k,n,m) mod chain.target(), evaluated level by level down the chain.
Natural tower_residue(const TowerSpec& spec, const PisanoChain& chain);
Natural tower_residue(const TowerSpec& spec, const FactoredNatural& M,
                      const FactorOptions& options = {});

struct ChainSummary {
    std::vector<Natural> moduli;  // base level first, target last
    Natural base_period;
    bool verified = false;

    friend bool operator==(const ChainSummary&, const ChainSummary&) = default;
};

ChainSummary summarize(const PisanoChain& chain, bool verify);

struct AnalysisReport {
    TowerSpec spec;
    Natural fn_value;
    std::uint64_t expected_valuation = 0;
    /// F_n = 1: every power divides, valuation and unit are not meaningful.
    bool trivial = false;
    bool divisibility_ok = false;
    Natural unit_residue;
    bool exact = false;
    CaseTag case_tag = CaseTag::OutOfRange;
    CaseClause clause = CaseClause::OutOfRange;
    std::optional<Natural> predicted_residue;
    std::optional<bool> match;
    ChainSummary chain;

    /// Divisibility holds and, where a prediction exists, it matches.
    bool consistent() const { return divisibility_ok && match.value_or(true); }

    friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

struct AnalysisOptions {
    FactorOptions factor;
    bool verify_chain = true;
};

/// Computes G mod F_n^(k+m) through a Pisano chain and reads off divisibility
/// by F_n^(k+m-1) and the unit residue. Throws FactorBudgetExceeded.
AnalysisReport analyze(const TowerSpec& spec, const AnalysisOptions& options = {});

struct SmallModulusFacts {
    bool parity_clause = false;     // 2 | r  <=>  3 | n or 4 | n
    bool mod4_clause = false;       // 2 !| n, 3 !| n  =>  r = 1 (mod 4)
    bool mod8_clause = false;       // 3 | n  =>  r = 0 (mod 8)

    bool all() const { return parity_clause && mod4_clause && mod8_clause; }
};

/// Parity and mod-8 facts about r = G(k,n,m) for k >= 2, from r mod 8.
SmallModulusFacts lemma4_check(const TowerSpec& spec, const FactorOptions& options = {});

}  // namespace fibtower
