#pragma once

#include <cstdint>
#include <vector>

#include "fibtower/natural.hpp"

namespace fibtower {

struct PrimePower {
    Natural prime;
    std::uint64_t exponent = 0;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// A natural number with its complete prime factorization. Primes are kept
/// strictly increasing; the empty list is the unit.
class FactoredNatural {
public:
    FactoredNatural() = default;  // the value 1

    /// Trusts the caller; use verify() when the factors come from outside.
    FactoredNatural(Natural value, std::vector<PrimePower> factors);

    static FactoredNatural prime(const Natural& p, std::uint64_t exponent = 1);

    const Natural& value() const { return value_; }
    const std::vector<PrimePower>& factors() const { return factors_; }

    /// Product check, ordering, and primality of every listed prime.
    bool verify() const;

    FactoredNatural operator*(const FactoredNatural& other) const;
    /// Divides out a single prime factor q (which must be present).
    FactoredNatural divided_by_prime(const Natural& q) const;

    friend FactoredNatural lcm(const FactoredNatural& a, const FactoredNatural& b);

    friend bool operator==(const FactoredNatural& a, const FactoredNatural& b) {
        return a.value_ == b.value_ && a.factors_ == b.factors_;
    }

private:
    Natural value_ = 1;
    std::vector<PrimePower> factors_;
};

inline constexpr std::uint64_t kDefaultRhoSeed = 0x5eed'f1b0'7043'0001ULL;
inline constexpr std::uint64_t kDefaultFactorBudget = 4'000'000;

struct FactorOptions {
    /// Total Pollard-Brent iterations allowed per factorize() call.
    std::uint64_t budget = kDefaultFactorBudget;
    std::uint64_t seed = kDefaultRhoSeed;
};

bool is_probable_prime(const Natural& x);

/// Trial division by small primes, then Pollard-Brent rho on the cofactor.
/// Deterministic for a fixed seed. Throws FactorBudgetExceeded.
FactoredNatural factorize(const Natural& x, const FactorOptions& options = {});

}  // namespace fibtower
