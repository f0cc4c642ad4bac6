#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fibtower/oracle.hpp"
#include "fibtower/tower.hpp"

namespace fibtower {

struct PropertyResult {
    std::string name;
    bool passed = true;
    std::uint64_t checked = 0;
    std::string counterexample;  // first failure, empty when passed
};

struct SuiteResult {
    std::string suite;
    std::vector<PropertyResult> properties;

    bool passed() const;
    std::size_t pass_count() const;
};

/// gcd identity, expansion of F_{nr}, divisibility criterion, Cassini,
/// square congruence, addition formula, period 6 mod 4.
SuiteResult run_identity_suite();

/// Hoggatt lemma and its consequence F_n^(k+1) | F_{n F_n^k}, the prime
/// witness lemma, the binomial divisibility lemma, the small-modulus tower
/// facts, and the truncation congruence.
SuiteResult run_lemma_suite(const AnalysisOptions& options = {});

/// Every oracle-feasible point of k in [1,6], n in [1,25], m in [1,3] agrees
/// with the modular engine.
SuiteResult run_oracle_suite(std::uint64_t max_index = kDefaultOracleMaxIndex,
                             const AnalysisOptions& options = {});

/// Factored pi(M) equals brute pi(M) for 1 <= M <= limit.
SuiteResult run_pisano_suite(std::uint64_t limit = 100'000, int jobs = 0);

std::string render_suite(const SuiteResult& suite);

}  // namespace fibtower
