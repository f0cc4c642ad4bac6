#pragma once

#include <cstdint>
#include <utility>

#include "fibtower/natural.hpp"

namespace fibtower {

// Index convention: F_0 = 0, F_1 = F_2 = 1, F_i = F_{i-1} + F_{i-2}.

/// Largest index fib() will materialize unless told otherwise.
inline constexpr std::uint64_t kDefaultFibBudget = 50'000'000;

/// (F_i, F_{i+1}) by fast doubling over exact integers.
std::pair<Natural, Natural> fib_pair(std::uint64_t i);

/// Exact F_i. Throws BudgetExceeded when i > budget.
Natural fib(const Natural& i, std::uint64_t budget = kDefaultFibBudget);
Natural fib(std::uint64_t i, std::uint64_t budget = kDefaultFibBudget);

/// gcd(F_a, F_b) == F_gcd(a,b).
bool gcd_identity_check(std::uint64_t a, std::uint64_t b,
                        std::uint64_t budget = kDefaultFibBudget);

/// Right-hand side of F_{nr} = sum_{j=1}^{r} C(r,j) F_n^j F_{n-1}^{r-j} F_j.
Natural expansion_rhs(std::uint64_t n, std::uint64_t r,
                      std::uint64_t budget = kDefaultFibBudget);

/// F_{n+1} F_{n-1} - F_n^2, which is (-1)^n.
Integer cassini(std::uint64_t n, std::uint64_t budget = kDefaultFibBudget);

/// F_{a+b} == F_{a+1} F_b + F_a F_{b-1}.
bool addition_formula_check(std::uint64_t a, std::uint64_t b,
                            std::uint64_t budget = kDefaultFibBudget);

/// F_{n-1}^2 == F_{n+1}^2 == (-1)^n (mod F_n), for n >= 1.
bool square_congruence_check(std::uint64_t n,
                             std::uint64_t budget = kDefaultFibBudget);

/// For a >= 3: (F_a | F_b) == (a | b).
bool divisibility_criterion_check(std::uint64_t a, std::uint64_t b,
                                  std::uint64_t budget = kDefaultFibBudget);

}  // namespace fibtower
