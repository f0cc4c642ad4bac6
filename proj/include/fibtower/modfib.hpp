#pragma once

#include <cstdint>
#include <vector>

#include "fibtower/factor.hpp"
#include "fibtower/natural.hpp"

namespace fibtower {

/// F_i mod M by fast doubling with every intermediate reduced mod M.
/// Total: fib_mod(0, M) == 0 and fib_mod(i, 1) == 0. Requires M >= 1.
Natural fib_mod(const Natural& i, const Natural& M);
std::uint64_t fib_mod(std::uint64_t i, std::uint64_t M);

/// F_t == 0 and F_{t+1} == 1 (mod M).
bool has_period_property(const Natural& t, const Natural& M);

/// Minimal Pisano period pi(M), computed from the factorization of M and
/// returned factored. Never assumes pi(p^e) == p^(e-1) pi(p); every
/// candidate is verified and reduced by divisor descent.
FactoredNatural pisano_period(const FactoredNatural& M, const FactorOptions& options = {});

/// Iterates pairs mod M until (0, 1) recurs. cap == 0 means the universal
/// bound 6M. Throws CapExceeded.
std::uint64_t pisano_period_brute(std::uint64_t M, std::uint64_t cap = 0);

/// Moduli below this use the brute method in pisano_period_auto().
inline constexpr std::uint64_t kBruteAutoLimit = 10'000'000;

Natural pisano_period_auto(const Natural& M, const FactorOptions& options = {});

struct ChainLevel {
    FactoredNatural modulus;
    FactoredNatural period;
};

/// levels[0] is the tower base, levels.back() the target. Each level's
/// modulus is the Pisano period of the next level's modulus.
struct PisanoChain {
    std::vector<ChainLevel> levels;

    std::size_t depth() const { return levels.size(); }
    const FactoredNatural& target() const { return levels.back().modulus; }
};

/// True when t has the period property for M and no t/q (q prime, q | t) has.
bool is_minimal_period(const FactoredNatural& t, const Natural& M);

/// Period property, minimality, factor integrity, and the linking between
/// consecutive levels.
bool verify_chain(const PisanoChain& chain);

/// Builds (M_1, ..., M_k) with M_k = target and M_j = pi(M_{j+1}).
PisanoChain build_chain(std::uint64_t k, const FactoredNatural& target,
                        const FactorOptions& options = {});

}  // namespace fibtower
