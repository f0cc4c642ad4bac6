#include "fibtower/fib.hpp"

#include <bit>
#include <numeric>
#include <string>

#include "fibtower/errors.hpp"

namespace fibtower {

namespace {

void check_budget(std::uint64_t i, std::uint64_t budget) {
    if (i > budget) {
        throw BudgetExceeded("fib index " + std::to_string(i) + " exceeds exact budget " +
                             std::to_string(budget));
    }
}

}  // namespace

std::pair<Natural, Natural> fib_pair(std::uint64_t i) {
    Natural a = 0;  // F_t
    Natural b = 1;  // F_{t+1}
    Natural c, d;
    for (int bit = std::bit_width(i) - 1; bit >= 0; --bit) {
        // F_{2t} = F_t (2 F_{t+1} - F_t),  F_{2t+1} = F_t^2 + F_{t+1}^2
        c = 2 * b;
        c -= a;
        c *= a;
        d = a * a;
        d += b * b;
        if ((i >> bit) & 1U) {
            a = d;
            b = c + d;
        } else {
            a = std::move(c);
            b = std::move(d);
        }
    }
    return {std::move(a), std::move(b)};
}

Natural fib(std::uint64_t i, std::uint64_t budget) {
    check_budget(i, budget);
    return fib_pair(i).first;
}

Natural fib(const Natural& i, std::uint64_t budget) {
    const auto small = to_u64(i);
    if (!small) throw BudgetExceeded("fib index " + to_decimal(i) + " exceeds exact budget");
    return fib(*small, budget);
}

bool gcd_identity_check(std::uint64_t a, std::uint64_t b, std::uint64_t budget) {
    Natural g;
    mpz_gcd(g.get_mpz_t(), fib(a, budget).get_mpz_t(), fib(b, budget).get_mpz_t());
    return g == fib(std::gcd(a, b), budget);
}

Natural expansion_rhs(std::uint64_t n, std::uint64_t r, std::uint64_t budget) {
    check_budget(n * r, budget);
    const Natural fn = fib(n, budget);
    const Natural fn1 = fib(n - 1, budget);
    const Natural rr = from_u64(r);
    Natural sum = 0;
    Natural fn_pow = 1;
    for (std::uint64_t j = 1; j <= r; ++j) {
        fn_pow *= fn;
        sum += binomial(rr, j) * fn_pow * pow_natural(fn1, r - j) * fib(j, budget);
    }
    return sum;
}

Integer cassini(std::uint64_t n, std::uint64_t budget) {
    check_budget(n + 1, budget);
    const auto [fn, fn1] = fib_pair(n);
    const Natural fprev = fn1 - fn;  // F_{n-1}
    return Integer(fn1 * fprev - fn * fn);
}

bool addition_formula_check(std::uint64_t a, std::uint64_t b, std::uint64_t budget) {
    return fib(a + b, budget) ==
           fib(a + 1, budget) * fib(b, budget) + fib(a, budget) * fib(b - 1, budget);
}

bool square_congruence_check(std::uint64_t n, std::uint64_t budget) {
    const Natural fn = fib(n, budget);
    const Natural prev = fib(n - 1, budget);
    const Natural next = fib(n + 1, budget);
    Natural sign = (n % 2 == 0) ? Natural(1) : Natural(fn - 1);
    Natural lhs1 = prev * prev;
    Natural lhs2 = next * next;
    mpz_mod(lhs1.get_mpz_t(), lhs1.get_mpz_t(), fn.get_mpz_t());
    mpz_mod(lhs2.get_mpz_t(), lhs2.get_mpz_t(), fn.get_mpz_t());
    mpz_mod(sign.get_mpz_t(), sign.get_mpz_t(), fn.get_mpz_t());
    return lhs1 == sign && lhs2 == sign;
}

bool divisibility_criterion_check(std::uint64_t a, std::uint64_t b, std::uint64_t budget) {
    const Natural fa = fib(a, budget);
    const Natural fb = fib(b, budget);
    const bool divides = mpz_divisible_p(fb.get_mpz_t(), fa.get_mpz_t()) != 0;
    return divides == (b % a == 0);
}

}  // namespace fibtower
