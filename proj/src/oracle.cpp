#include "fibtower/oracle.hpp"

#include <stdexcept>
#include <string>

#include "fibtower/errors.hpp"
#include "fibtower/fib.hpp"

namespace fibtower {

namespace {

// F_i > 2^64 for i >= 94, so a ladder whose next index would be n F_i with
// i this large has certainly left any uint64 budget.
constexpr std::uint64_t kIndexCeiling = 94;

}  // namespace

std::optional<std::uint64_t> oracle_overflow_level(const TowerSpec& spec, std::uint64_t max_index) {
    if (!spec.valid()) throw std::invalid_argument("oracle: k, n, m must be >= 1");
    if (spec.k == 1) return std::nullopt;
    if (spec.n > max_index) return 2;
    // G(1) = F_n^m; walk the indices n G(j) without computing the final level.
    Natural g = pow_natural(fib(spec.n, max_index), spec.m);
    for (std::uint64_t level = 2; level <= spec.k; ++level) {
        const Natural index = from_u64(spec.n) * g;
        const auto small = to_u64(index);
        if (!small || *small > max_index) return level;
        if (level == spec.k) break;
        if (*small >= kIndexCeiling) return level + 1;
        g = fib(*small);
    }
    return std::nullopt;
}

bool oracle_feasible(const TowerSpec& spec, std::uint64_t max_index) {
    return !oracle_overflow_level(spec, max_index).has_value();
}

OracleResult oracle_eval(const TowerSpec& spec, std::uint64_t max_index) {
    if (const auto level = oracle_overflow_level(spec, max_index)) {
        throw BudgetExceeded("oracle: index for G(" + std::to_string(*level) + ") of " +
                             to_string(spec) + " exceeds max_index " + std::to_string(max_index));
    }
    OracleResult out;
    out.spec = spec;
    const Natural fn = fib(spec.n, max_index);
    out.value = pow_natural(fn, spec.m);
    out.top_index = spec.n;
    for (std::uint64_t level = 2; level <= spec.k; ++level) {
        out.top_index = *to_u64(from_u64(spec.n) * out.value);
        out.value = fib(out.top_index, max_index);
    }

    if (fn == 1) return out;

    Natural rest = out.value;
    std::uint64_t e = 0;
    while (mpz_divisible_p(rest.get_mpz_t(), fn.get_mpz_t())) {
        mpz_divexact(rest.get_mpz_t(), rest.get_mpz_t(), fn.get_mpz_t());
        ++e;
    }
    out.valuation = e;
    Natural unit;
    mpz_mod(unit.get_mpz_t(), rest.get_mpz_t(), fn.get_mpz_t());
    out.unit_residue = unit;

    const std::uint64_t expected = spec.expected_valuation();
    if (e >= expected) {
        // value / F_n^expected = rest * F_n^(e - expected)
        Natural q = rest * pow_natural(fn, e - expected);
        mpz_mod(q.get_mpz_t(), q.get_mpz_t(), fn.get_mpz_t());
        out.theorem_quotient_residue = q;
    }
    return out;
}

}  // namespace fibtower
