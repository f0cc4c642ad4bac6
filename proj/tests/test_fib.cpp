#include <numeric>
#include <vector>

#include <gtest/gtest.h>

#include "fibtower/errors.hpp"
#include "fibtower/fib.hpp"

using namespace fibtower;

namespace {

// Plain recurrence, kept independent of fast doubling.
std::vector<Natural> naive_fibs(std::uint64_t upto) {
    std::vector<Natural> out{0, 1};
    for (std::uint64_t i = 2; i <= upto; ++i) out.push_back(out[i - 1] + out[i - 2]);
    out.resize(upto + 1);
    return out;
}

}  // namespace

TEST(Fib, Examples) {
    EXPECT_EQ(fib(1), 1);
    EXPECT_EQ(fib(2), 1);
    EXPECT_EQ(fib(0), 0);
    EXPECT_EQ(fib(12), 144);
    EXPECT_EQ(fib(48), Natural("4807526976"));
}

TEST(Fib, BudgetRefusal) {
    EXPECT_THROW(fib(101, 100), BudgetExceeded);
    EXPECT_NO_THROW(fib(100, 100));
    EXPECT_THROW(fib(Natural("100000000000000000000000")), BudgetExceeded);
}

TEST(Fib, FastDoublingMatchesNaiveIteration) {
    const auto naive = naive_fibs(10'000);
    for (std::uint64_t i = 0; i <= 10'000; ++i) {
        ASSERT_EQ(fib(i), naive[i]) << "i=" << i;
    }
}

TEST(Fib, AgreesWithGmpAtLargeIndices) {
    for (unsigned long i : {65'536UL, 100'003UL, 1'000'000UL}) {
        Natural expected;
        mpz_fib_ui(expected.get_mpz_t(), i);
        EXPECT_EQ(fib(i), expected) << "i=" << i;
    }
}

TEST(Fib, GcdIdentity) {
    EXPECT_TRUE(gcd_identity_check(12, 18));
    EXPECT_TRUE(gcd_identity_check(1, 1));
    EXPECT_TRUE(gcd_identity_check(5, 10));
    for (std::uint64_t a = 1; a <= 40; ++a) {
        for (std::uint64_t b = 1; b <= 40; ++b) ASSERT_TRUE(gcd_identity_check(a, b)) << a << "," << b;
    }
}

TEST(Fib, ExpansionOfMultipleIndex) {
    EXPECT_EQ(expansion_rhs(2, 3), 8);
    EXPECT_EQ(expansion_rhs(3, 4), 144);
    for (std::uint64_t n = 1; n <= 20; ++n) EXPECT_EQ(expansion_rhs(n, 1), fib(n));
    for (std::uint64_t n = 1; n <= 10; ++n) {
        for (std::uint64_t r = 1; r <= 30; ++r) ASSERT_EQ(expansion_rhs(n, r), fib(n * r)) << n << "," << r;
    }
    EXPECT_THROW(expansion_rhs(1000, 1000, 100'000), BudgetExceeded);
}

TEST(Fib, Cassini) {
    EXPECT_EQ(cassini(5), -1);
    EXPECT_EQ(cassini(2), 1);
    EXPECT_EQ(cassini(1), -1);
    for (std::uint64_t n = 1; n <= 50; ++n) ASSERT_EQ(cassini(n), n % 2 == 0 ? 1 : -1) << n;
}

TEST(Fib, AdditionFormula) {
    EXPECT_TRUE(addition_formula_check(3, 4));
    EXPECT_TRUE(addition_formula_check(1, 1));
    EXPECT_TRUE(addition_formula_check(10, 10));
    EXPECT_EQ(fib(20), fib(11) * fib(10) + fib(10) * fib(9));
    for (std::uint64_t a = 1; a <= 40; ++a) {
        for (std::uint64_t b = 1; b <= 40; ++b) ASSERT_TRUE(addition_formula_check(a, b));
    }
}

TEST(Fib, DivisibilityCriterion) {
    for (std::uint64_t a = 3; a <= 30; ++a) {
        for (std::uint64_t b = 1; b <= 200; ++b) ASSERT_TRUE(divisibility_criterion_check(a, b)) << a << "," << b;
    }
    // a = 2 is excluded: F_2 = 1 divides everything.
    EXPECT_FALSE(divisibility_criterion_check(2, 3));
}

TEST(Fib, SquareCongruence) {
    for (std::uint64_t n = 1; n <= 100; ++n) ASSERT_TRUE(square_congruence_check(n)) << n;
}

TEST(Fib, PeriodSixModFour) {
    for (std::uint64_t a = 0; a <= 200; ++a) {
        for (std::uint64_t b = a % 6; b <= 200; b += 6) {
            ASSERT_EQ(mpz_fdiv_ui(fib(a).get_mpz_t(), 4), mpz_fdiv_ui(fib(b).get_mpz_t(), 4));
        }
        if (std::gcd(a, std::uint64_t{6}) == 1) EXPECT_EQ(mpz_fdiv_ui(fib(a).get_mpz_t(), 4), 1U) << a;
    }
}

TEST(Natural, Valuation) {
    EXPECT_EQ(valuation(2, 8), 3U);
    EXPECT_EQ(valuation(3, 144), 2U);
    EXPECT_EQ(valuation(5, 7), 0U);
    EXPECT_EQ(valuation(144, pow_natural(144, 7) * 5), 7U);
    EXPECT_THROW(valuation(1, 8), std::invalid_argument);
    EXPECT_THROW(valuation(2, 0), std::invalid_argument);
}

TEST(Natural, BinomialMatchesPascal) {
    std::vector<std::vector<Natural>> pascal{{1}};
    for (std::uint64_t r = 1; r <= 60; ++r) {
        std::vector<Natural> row(r + 1, 1);
        for (std::uint64_t j = 1; j < r; ++j) row[j] = pascal[r - 1][j - 1] + pascal[r - 1][j];
        pascal.push_back(std::move(row));
    }
    for (std::uint64_t r = 0; r <= 60; ++r) {
        for (std::uint64_t j = 0; j <= r + 2; ++j) {
            const Natural expected = j <= r ? pascal[r][j] : Natural(0);
            ASSERT_EQ(binomial(from_u64(r), j), expected) << r << " choose " << j;
        }
    }
}

TEST(Natural, ParseAndConvert) {
    EXPECT_EQ(parse_natural("123456789012345678901234567890"), Natural("123456789012345678901234567890"));
    EXPECT_FALSE(parse_natural(""));
    EXPECT_FALSE(parse_natural("-3"));
    EXPECT_FALSE(parse_natural("12a"));
    EXPECT_FALSE(parse_natural(" 1"));
    EXPECT_EQ(to_u64(from_u64(UINT64_MAX)), UINT64_MAX);
    EXPECT_FALSE(to_u64(from_u64(UINT64_MAX) + 1));
}
