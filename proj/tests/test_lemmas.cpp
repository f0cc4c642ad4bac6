#include <random>

#include <gtest/gtest.h>

#include "fibtower/errors.hpp"
#include "fibtower/fib.hpp"
#include "fibtower/lemmas.hpp"

using namespace fibtower;

TEST(Lemma1Witness, Examples) {
    const auto w = lemma1_witness(3, 8, 6);
    EXPECT_EQ(w.c, 3U);
    EXPECT_EQ(w.p, 2);

    const auto trivial = lemma1_witness(1, 1, 2);
    EXPECT_EQ(trivial.c, 0U);
    EXPECT_EQ(trivial.p, 2);

    const auto four = lemma1_witness(1, 4, 2);
    EXPECT_EQ(four.c, 2U);
    EXPECT_EQ(four.p, 2);
}

TEST(Lemma1Witness, NoExponentWhenJHasAForeignPrime) {
    // 7 divides neither a nor s.
    EXPECT_THROW(lemma1_witness(3, 14, 6), NoC);
    EXPECT_THROW(lemma1_witness(1, 4, 1), PreconditionViolated);
}

TEST(Lemma1Witness, RandomizedAgainstBruteMinimum) {
    std::mt19937_64 rng(2024);
    int accepted = 0;
    while (accepted < 500) {
        const unsigned long a = 1 + rng() % 50, j = 1 + rng() % 64, s = 2 + rng() % 11;
        // Brute minimum over a generous range.
        std::optional<std::uint64_t> brute;
        Natural acc = a;
        for (std::uint64_t c = 0; c <= 12; ++c, acc *= s) {
            if (mpz_divisible_ui_p(acc.get_mpz_t(), j)) {
                brute = c;
                break;
            }
        }
        if (!brute) {
            EXPECT_THROW(lemma1_witness(a, j, s), NoC);
            continue;
        }
        ++accepted;
        const auto w = lemma1_witness(a, j, s);
        ASSERT_EQ(w.c, *brute) << a << "," << j << "," << s;
        ASSERT_TRUE(mpz_divisible_p(Natural(s).get_mpz_t(), w.p.get_mpz_t()));
        ASSERT_TRUE(mpz_divisible_p(Natural(j).get_mpz_t(), pow_natural(w.p, w.c).get_mpz_t()));
    }
}

TEST(Lemma2, Examples) {
    EXPECT_TRUE(lemma2_check(3, 2, 1, 9));
    EXPECT_TRUE(lemma2_check(1, 3, 2, 5));
    EXPECT_TRUE(lemma2_check(2, 2, 2, 4));
    // j = 3 term of the last example: 2^4 | C(4,3) 2^3 = 32.
    EXPECT_EQ(binomial(4, 3) * 8, 32);
    EXPECT_THROW(lemma2_check(3, 2, 1, 10), PreconditionViolated);
}

TEST(Lemma2, ExhaustiveSmallGrid) {
    for (unsigned long s = 1; s <= 5; ++s) {
        for (std::uint64_t k = 1; k <= 3; ++k) {
            for (std::uint64_t l = 1; l <= 3; ++l) {
                for (std::uint64_t b = 1; b <= 6; ++b) {
                    const auto r = *to_u64(pow_natural(Natural(s), k)) * b;
                    ASSERT_TRUE(lemma2_check(s, k, l, r)) << s << "," << k << "," << l << "," << r;
                }
            }
        }
    }
}

TEST(Lemma2, QualifyingConditionMatters) {
    // s=2, k=1, r=2, l=3: j=1,2 do not qualify (2^(j-2) <= j) and the
    // unrestricted claim 2^4 | C(2,1) 2 = 4 would be false.
    EXPECT_TRUE(lemma2_check(2, 1, 3, 2));
    EXPECT_FALSE(mpz_divisible_ui_p(Natural(binomial(2, 1) * 2).get_mpz_t(), 16));
}

TEST(Hoggatt, Grid) {
    for (std::uint64_t n = 2; n <= 8; ++n) {
        const Natural fn = fib(n);
        for (std::uint64_t s = 1; s <= 3; ++s) {
            for (std::uint64_t r = 1; r <= 60; ++r) {
                if (!mpz_divisible_p(from_u64(r).get_mpz_t(), pow_natural(fn, s - 1).get_mpz_t())) {
                    EXPECT_THROW(hoggatt_check(n, r, s), PreconditionViolated);
                    continue;
                }
                ASSERT_TRUE(hoggatt_check(n, r, s)) << n << "," << r << "," << s;
            }
        }
    }
}

TEST(Truncation, Examples) {
    // Frozen from tests/oracles/derive_fixtures.py.
    const auto t5 = truncation_residues(5, 25, 2);
    EXPECT_EQ(t5.a, 1);
    EXPECT_EQ(t5.b, 0);
    EXPECT_TRUE(truncation_check(5, 25, 2));

    const auto t4 = truncation_residues(4, 9, 2);
    EXPECT_EQ(t4.a, 1);
    EXPECT_EQ(t4.b, 0);
    EXPECT_TRUE(truncation_check(4, 9, 2));

    const auto t3 = truncation_residues(3, 2, 1);
    EXPECT_EQ(t3.a, 1);
    EXPECT_EQ(t3.b, 1);
    EXPECT_EQ(fib(6) / 4, 2);
    EXPECT_TRUE(truncation_check(3, 2, 1));
}

TEST(Truncation, Preconditions) {
    EXPECT_THROW(truncation_residues(5, 24, 2), PreconditionViolated);
    EXPECT_THROW(truncation_residues(5, 25, 2, 100), BudgetExceeded);
}

TEST(Truncation, Grid) {
    for (std::uint64_t n = 3; n <= 8; ++n) {
        const auto fn = *to_u64(fib(n));
        for (std::uint64_t k = 1; k <= 2; ++k) {
            for (std::uint64_t b = 1; b <= 4; ++b) {
                const std::uint64_t r = (k == 1 ? fn : fn * fn) * b;
                if (n * r > 1'000'000) continue;
                const auto pair = truncation_residues(n, r, k);
                ASSERT_LT(pair.a, fib(n));
                ASSERT_LT(pair.b, fib(n));
                ASSERT_TRUE(truncation_check(n, r, k)) << n << "," << r << "," << k;
            }
        }
    }
}
