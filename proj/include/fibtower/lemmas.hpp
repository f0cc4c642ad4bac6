#pragma once

#include <cstdint>

#include "fibtower/fib.hpp"
#include "fibtower/natural.hpp"

namespace fibtower {

/// Minimal c with j | a s^c, and a prime p with p | s and p^c | j.
struct Lemma1Witness {
    Natural a;
    Natural j;
    Natural s;
    std::uint64_t c = 0;
    Natural p;
};

/// Searches c up to the largest prime exponent of j. Throws NoC when no such
/// c exists and NoWitness if no prime witness does (a counterexample).
Lemma1Witness lemma1_witness(const Natural& a, const Natural& j, const Natural& s);

/// s^(k+l) | C(r,j) s^j for every 1 <= j <= r with 2^(j-l+1) > j, and
/// s^(k+2) | C(r,j) s^j for 3 <= j <= r. Requires s^k | r, else throws
/// PreconditionViolated.
bool lemma2_check(const Natural& s, std::uint64_t k, std::uint64_t l, std::uint64_t r);

/// F_n^(s-1) | r  =>  F_n^s | F_{nr}. Requires the hypothesis.
bool hoggatt_check(std::uint64_t n, std::uint64_t r, std::uint64_t s,
                   std::uint64_t budget = kDefaultFibBudget);

/// The two surviving terms of the expansion of F_{nr} / F_n^(k+1), as
/// residues mod F_n:
///   A = (r / F_n^k) F_{n-1}^(r-1),   B = (C(r,2) F_n / F_n^k) F_{n-1}^(r-2).
struct TruncationPair {
    Natural a;
    Natural b;
};

/// Requires F_n^k | r; throws PreconditionViolated / BudgetExceeded.
TruncationPair truncation_residues(std::uint64_t n, std::uint64_t r, std::uint64_t k,
                                   std::uint64_t budget = kDefaultFibBudget);

/// F_{nr} / F_n^(k+1) == A + B (mod F_n), dividing exactly before reducing.
bool truncation_check(std::uint64_t n, std::uint64_t r, std::uint64_t k,
                      std::uint64_t budget = kDefaultFibBudget);

}  // namespace fibtower
