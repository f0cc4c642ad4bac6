#include "fibtower/lemmas.hpp"

#include <algorithm>
#include <string>

#include "fibtower/errors.hpp"
#include "fibtower/factor.hpp"

namespace fibtower {

namespace {

bool divides(const Natural& d, const Natural& x) {
    return mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t()) != 0;
}

Natural mod(const Natural& x, const Natural& modulus) {
    Natural out;
    mpz_mod(out.get_mpz_t(), x.get_mpz_t(), modulus.get_mpz_t());
    return out;
}

Natural powm(const Natural& base, std::uint64_t e, const Natural& modulus) {
    Natural out;
    mpz_powm_ui(out.get_mpz_t(), base.get_mpz_t(), e, modulus.get_mpz_t());
    return out;
}

}  // namespace

Lemma1Witness lemma1_witness(const Natural& a, const Natural& j, const Natural& s) {
    if (a < 1 || j < 1 || s < 2) throw PreconditionViolated("lemma1_witness: need a, j >= 1, s >= 2");
    const auto j_factors = factorize(j);
    std::uint64_t bound = 0;
    for (const auto& pp : j_factors.factors()) bound = std::max(bound, pp.exponent);

    Lemma1Witness w{a, j, s, 0, 0};
    Natural acc = a;
    bool found = false;
    for (std::uint64_t c = 0; c <= bound; ++c, acc *= s) {
        if (divides(j, acc)) {
            w.c = c;
            found = true;
            break;
        }
    }
    if (!found) {
        throw NoC("no c <= " + std::to_string(bound) + " with " + to_decimal(j) + " | " +
                  to_decimal(a) + "*" + to_decimal(s) + "^c");
    }
    const auto s_factors = factorize(s);
    for (const auto& pp : s_factors.factors()) {
        if (divides(pow_natural(pp.prime, w.c), j)) {
            w.p = pp.prime;
            return w;
        }
    }
    throw NoWitness("no prime p | " + to_decimal(s) + " with p^" + std::to_string(w.c) + " | " +
                    to_decimal(j));
}

bool lemma2_check(const Natural& s, std::uint64_t k, std::uint64_t l, std::uint64_t r) {
    if (s < 1 || k < 1 || l < 1 || r < 1) {
        throw PreconditionViolated("lemma2_check: s, k, l, r must be >= 1");
    }
    const Natural rr = from_u64(r);
    if (!divides(pow_natural(s, k), rr)) {
        throw PreconditionViolated("lemma2_check: s^k does not divide r");
    }
    if (s == 1) return true;

    const Natural main_divisor = pow_natural(s, k + l);
    const Natural special_divisor = pow_natural(s, k + 2);
    Natural choose = 1;  // C(r, j)
    Natural s_pow = 1;   // s^j
    for (std::uint64_t j = 1; j <= r; ++j) {
        choose *= rr - from_u64(j - 1);
        mpz_divexact_ui(choose.get_mpz_t(), choose.get_mpz_t(), j);
        s_pow *= s;
        const Natural term = choose * s_pow;
        // 2^(j-l+1) > j needs j - l + 1 >= 1; a power of 2 beyond 2^63 always wins.
        const bool qualifies =
            j >= l && (j - l + 1 >= 64 || (std::uint64_t{1} << (j - l + 1)) > j);
        if (qualifies && !divides(main_divisor, term)) return false;
        if (j >= 3 && !divides(special_divisor, term)) return false;
    }
    return true;
}

bool hoggatt_check(std::uint64_t n, std::uint64_t r, std::uint64_t s, std::uint64_t budget) {
    if (n < 1 || r < 1 || s < 1) throw PreconditionViolated("hoggatt_check: n, r, s must be >= 1");
    const Natural fn = fib(n, budget);
    if (!divides(pow_natural(fn, s - 1), from_u64(r))) {
        throw PreconditionViolated("hoggatt_check: F_n^(s-1) does not divide r");
    }
    return divides(pow_natural(fn, s), fib(n * r, budget));
}

TruncationPair truncation_residues(std::uint64_t n, std::uint64_t r, std::uint64_t k,
                                   std::uint64_t budget) {
    if (n < 1 || r < 1 || k < 1) throw PreconditionViolated("truncation: n, r, k must be >= 1");
    if (n * r > budget) throw BudgetExceeded("truncation: n*r exceeds the exact budget");
    const Natural fn = fib(n, budget);
    const Natural fprev = fib(n - 1, budget);
    const Natural fn_k = pow_natural(fn, k);
    const Natural rr = from_u64(r);
    if (!divides(fn_k, rr)) throw PreconditionViolated("truncation: F_n^k does not divide r");

    TruncationPair out;
    out.a = mod(Natural(rr / fn_k) * powm(fprev, r - 1, fn), fn);
    if (r >= 2) {
        const Natural b_num = binomial(rr, 2) * fn;
        if (!divides(fn_k, b_num)) throw std::logic_error("truncation: C(r,2) F_n not divisible by F_n^k");
        out.b = mod(Natural(b_num / fn_k) * powm(fprev, r - 2, fn), fn);
    } else {
        out.b = 0;  // C(1, 2) = 0
    }
    return out;
}

bool truncation_check(std::uint64_t n, std::uint64_t r, std::uint64_t k, std::uint64_t budget) {
    const auto pair = truncation_residues(n, r, k, budget);
    const Natural fn = fib(n, budget);
    const Natural whole = fib(n * r, budget);
    const Natural divisor = pow_natural(fn, k + 1);
    if (!divides(divisor, whole)) return false;
    return mod(Natural(whole / divisor), fn) == mod(Natural(pair.a + pair.b), fn);
}

}  // namespace fibtower
