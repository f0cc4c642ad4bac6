#include "fibtower/modfib.hpp"

#include <bit>
#include <stdexcept>
#include <string>

#include "fibtower/errors.hpp"

namespace fibtower {

namespace {

using u128 = unsigned __int128;

// Word-sized kernel; valid for M < 2^62 so 2b + M never wraps.
std::uint64_t fib_mod_word(const Natural& i, std::uint64_t M) {
    if (M == 1) return 0;
    std::uint64_t a = 0;
    std::uint64_t b = 1;
    const auto bits = mpz_sizeinbase(i.get_mpz_t(), 2);
    if (i == 0) return 0;
    for (auto bit = static_cast<long>(bits) - 1; bit >= 0; --bit) {
        const std::uint64_t twice_b_minus_a = (2 * b + M - a) % M;
        const auto c = static_cast<std::uint64_t>(u128(a) * twice_b_minus_a % M);
        const auto d = static_cast<std::uint64_t>((u128(a) * a + u128(b) * b) % M);
        if (mpz_tstbit(i.get_mpz_t(), static_cast<mp_bitcnt_t>(bit))) {
            a = d;
            b = (c + d) % M;
        } else {
            a = c;
            b = d;
        }
    }
    return a;
}

Natural fib_mod_big(const Natural& i, const Natural& M) {
    Natural a = 0;
    Natural b = 1;
    Natural c, d, t;
    const auto bits = mpz_sizeinbase(i.get_mpz_t(), 2);
    if (i == 0) return 0;
    for (auto bit = static_cast<long>(bits) - 1; bit >= 0; --bit) {
        c = 2 * b;
        c -= a;
        c *= a;
        mpz_mod(c.get_mpz_t(), c.get_mpz_t(), M.get_mpz_t());
        d = a * a;
        t = b * b;
        d += t;
        mpz_mod(d.get_mpz_t(), d.get_mpz_t(), M.get_mpz_t());
        if (mpz_tstbit(i.get_mpz_t(), static_cast<mp_bitcnt_t>(bit))) {
            a = d;
            b = c + d;
            if (b >= M) b -= M;
        } else {
            a.swap(c);
            b.swap(d);
        }
    }
    return a;
}

// Greedy divisor descent. The set of t with the period property is exactly
// the multiples of pi(M), so stripping primes while the property holds lands
// on pi(M).
FactoredNatural descend(FactoredNatural t, const Natural& M) {
    if (!has_period_property(t.value(), M)) {
        throw std::logic_error("period candidate " + to_decimal(t.value()) +
                               " fails the period property mod " + to_decimal(M));
    }
    const auto primes = t.factors();
    for (const auto& pp : primes) {
        for (std::uint64_t e = 0; e < pp.exponent; ++e) {
            auto smaller = t.divided_by_prime(pp.prime);
            if (!has_period_property(smaller.value(), M)) break;
            t = std::move(smaller);
        }
    }
    return t;
}

FactoredNatural pisano_prime(const Natural& p, const FactorOptions& options) {
    if (p == 2) return FactoredNatural::prime(3);
    if (p == 5) return FactoredNatural::prime(2, 2) * FactoredNatural::prime(5);
    const unsigned long residue = mpz_fdiv_ui(p.get_mpz_t(), 5);
    // p = +-1 mod 5: pi(p) | p - 1.  p = +-2 mod 5: pi(p) | 2(p + 1).
    const Natural bound = (residue == 1 || residue == 4) ? Natural(p - 1) : Natural(2 * (p + 1));
    return descend(factorize(bound, options), p);
}

FactoredNatural pisano_prime_power(const Natural& p, std::uint64_t e,
                                   const FactorOptions& options) {
    auto base = pisano_prime(p, options);
    if (e == 1) return base;
    return descend(base * FactoredNatural::prime(p, e - 1), pow_natural(p, e));
}

}  // namespace

Natural fib_mod(const Natural& i, const Natural& M) {
    if (M < 1) throw std::invalid_argument("fib_mod: modulus must be >= 1");
    if (mpz_sizeinbase(M.get_mpz_t(), 2) <= 62) {
        return from_u64(fib_mod_word(i, *to_u64(M)));
    }
    return fib_mod_big(i, M);
}

std::uint64_t fib_mod(std::uint64_t i, std::uint64_t M) {
    return *to_u64(fib_mod(from_u64(i), from_u64(M)));
}

bool has_period_property(const Natural& t, const Natural& M) {
    if (M == 1) return true;
    return fib_mod(t, M) == 0 && fib_mod(t + 1, M) == 1;
}

FactoredNatural pisano_period(const FactoredNatural& M, const FactorOptions& options) {
    if (M.value() < 1) throw std::invalid_argument("pisano_period: modulus must be >= 1");
    FactoredNatural period;
    for (const auto& [p, e] : M.factors()) {
        period = lcm(period, pisano_prime_power(p, e, options));
    }
    return period;
}

std::uint64_t pisano_period_brute(std::uint64_t M, std::uint64_t cap) {
    if (M == 0) throw std::invalid_argument("pisano_period_brute: modulus must be >= 1");
    if (M == 1) return 1;
    if (cap == 0) cap = 6 * M;
    std::uint64_t a = 0;
    std::uint64_t b = 1;
    for (std::uint64_t t = 1; t <= cap; ++t) {
        std::uint64_t c = a + b;
        if (c >= M) c -= M;
        a = b;
        b = c;
        if (a == 0 && b == 1) return t;
    }
    throw CapExceeded("no period for modulus " + std::to_string(M) + " within " +
                      std::to_string(cap) + " steps");
}

Natural pisano_period_auto(const Natural& M, const FactorOptions& options) {
    if (const auto small = to_u64(M); small && *small < kBruteAutoLimit) {
        return from_u64(pisano_period_brute(*small));
    }
    return pisano_period(factorize(M, options), options).value();
}

bool is_minimal_period(const FactoredNatural& t, const Natural& M) {
    if (!has_period_property(t.value(), M)) return false;
    for (const auto& pp : t.factors()) {
        if (has_period_property(t.divided_by_prime(pp.prime).value(), M)) return false;
    }
    return true;
}

bool verify_chain(const PisanoChain& chain) {
    if (chain.levels.empty()) return false;
    for (std::size_t j = 0; j < chain.levels.size(); ++j) {
        const auto& level = chain.levels[j];
        if (!level.modulus.verify() || !level.period.verify()) return false;
        if (!is_minimal_period(level.period, level.modulus.value())) return false;
        if (j + 1 < chain.levels.size() &&
            !(level.modulus == chain.levels[j + 1].period)) {
            return false;
        }
    }
    return true;
}

PisanoChain build_chain(std::uint64_t k, const FactoredNatural& target,
                        const FactorOptions& options) {
    if (k < 1) throw std::invalid_argument("build_chain: k must be >= 1");
    std::vector<ChainLevel> reversed;
    reversed.reserve(k);
    FactoredNatural modulus = target;
    for (std::uint64_t j = 0; j < k; ++j) {
        auto period = pisano_period(modulus, options);
        reversed.push_back({modulus, period});
        modulus = std::move(period);
    }
    return PisanoChain{{reversed.rbegin(), reversed.rend()}};
}

}  // namespace fibtower
