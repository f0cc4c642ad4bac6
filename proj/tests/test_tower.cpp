#include <numeric>

#include <gtest/gtest.h>

#include "fibtower/fib.hpp"
#include "fibtower/oracle.hpp"
#include "fibtower/tower.hpp"

using namespace fibtower;

namespace {

Natural residue(const TowerSpec& spec, unsigned long M) {
    return tower_residue(spec, factorize(Natural(M)));
}

// The piecewise conditions written out literally, one predicate per label.
CaseTag literal_case(std::uint64_t k, std::uint64_t n, std::uint64_t m) {
    const bool k2 = k % 2 == 0, n3 = n % 3 == 0, n4 = n % 4 == 0;
    int hits = 0;
    CaseTag tag = CaseTag::OutOfRange;
    if ((k2 && !n3) || (!k2 && !n3 && !n4)) { tag = CaseTag::UnitOne; ++hits; }
    if (!k2 && !n3 && n4) { tag = CaseTag::FNMinus1; ++hits; }
    if ((!k2 && n3 && m >= 2) || (k2 && n3 && m == 1)) { tag = CaseTag::HalfPow; ++hits; }
    if ((k2 && n3 && m >= 2) || (!k2 && n3 && m == 1)) { tag = CaseTag::SignedHalfPow; ++hits; }
    return hits == 1 ? tag : CaseTag::OutOfRange;
}

}  // namespace

TEST(TowerResidue, Examples) {
    EXPECT_EQ(residue({2, 4, 1}, 27), 9);  // F_12 = 144
    EXPECT_EQ(residue({3, 3, 1}, 16), 0);  // F_24 = 46368
    for (std::uint64_t n = 1; n <= 12; ++n) {
        for (std::uint64_t m = 1; m <= 3; ++m) {
            for (unsigned long M : {1UL, 7UL, 100UL, 65536UL}) {
                Natural expected = pow_natural(fib(n), m);
                expected %= M;
                EXPECT_EQ(residue({1, n, m}, M), expected);
            }
        }
    }
}

TEST(TowerResidue, RejectsMismatchedChain) {
    const auto chain = build_chain(2, factorize(8));
    EXPECT_THROW(tower_residue({3, 4, 1}, chain), std::invalid_argument);
}

TEST(TowerResidue, AgreesWithOracle) {
    // Frozen from tests/oracles/derive_fixtures.py: G mod 7, 8, 97.
    struct Row { TowerSpec spec; unsigned long m7, m8, m97; };
    const Row rows[] = {
        {{2, 5, 1}, 6, 1, 44}, {{2, 6, 1}, 0, 0, 75}, {{3, 3, 1}, 0, 0, 2},
        {{3, 4, 1}, 0, 0, 50}, {{2, 4, 1}, 4, 0, 47}, {{3, 5, 1}, 5, 5, 10},
        {{4, 3, 1}, 0, 0, 92}, {{2, 16, 1}, 0, 0, 11}, {{2, 12, 2}, 0, 0, 42},
        {{3, 3, 2}, 0, 0, 28},
    };
    for (const auto& row : rows) {
        EXPECT_EQ(residue(row.spec, 7), row.m7) << to_string(row.spec);
        EXPECT_EQ(residue(row.spec, 8), row.m8) << to_string(row.spec);
        EXPECT_EQ(residue(row.spec, 97), row.m97) << to_string(row.spec);
    }

    for (std::uint64_t n = 1; n <= 12; ++n) {
        for (std::uint64_t k = 1; k <= 4; ++k) {
            for (std::uint64_t m = 1; m <= 2; ++m) {
                const TowerSpec spec{k, n, m};
                if (!oracle_feasible(spec, 200'000)) continue;
                const auto exact = oracle_eval(spec, 200'000).value;
                for (const Natural& M : {Natural(8), Natural(97), pow_natural(fib(n), k + m)}) {
                    ASSERT_EQ(tower_residue(spec, factorize(M)), Natural(exact % M))
                        << to_string(spec) << " mod " << M.get_str();
                }
            }
        }
    }
}

TEST(TowerResidue, CrtConsistency) {
    for (std::uint64_t n = 3; n <= 12; ++n) {
        for (std::uint64_t k = 2; k <= 4; ++k) {
            for (unsigned long a : {8UL, 9UL, 25UL, 49UL, 144UL}) {
                for (unsigned long b : {7UL, 11UL, 13UL, 89UL}) {
                    if (std::gcd(a, b) != 1) continue;
                    const TowerSpec spec{k, n, 2};
                    Natural joint = residue(spec, a * b);
                    joint %= a;
                    ASSERT_EQ(joint, residue(spec, a)) << to_string(spec) << " " << a << "*" << b;
                }
            }
        }
    }
}

TEST(Prediction, Examples) {
    const auto p341 = predicted_residue({3, 4, 1});
    EXPECT_EQ(p341.tag, CaseTag::FNMinus1);
    EXPECT_EQ(p341.residue, Natural(2));

    const auto p275 = predicted_residue({2, 7, 5});
    EXPECT_EQ(p275.tag, CaseTag::UnitOne);
    EXPECT_EQ(p275.residue, Natural(1));

    const auto p331 = predicted_residue({3, 3, 1});
    EXPECT_EQ(p331.tag, CaseTag::SignedHalfPow);
    EXPECT_EQ(p331.residue, Natural(0));

    const auto p2122 = predicted_residue({2, 12, 2});  // (F_9 / 2)^1 = 17
    EXPECT_EQ(p2122.tag, CaseTag::SignedHalfPow);
    EXPECT_EQ(p2122.residue, Natural(17));

    for (TowerSpec out : {TowerSpec{1, 5, 1}, TowerSpec{4, 2, 1}, TowerSpec{2, 1, 3}}) {
        const auto p = predicted_residue(out);
        EXPECT_EQ(p.tag, CaseTag::OutOfRange);
        EXPECT_FALSE(p.residue);
    }
}

TEST(Prediction, ClausesPartitionTheRange) {
    for (std::uint64_t k = 2; k <= 12; ++k) {
        for (std::uint64_t n = 3; n <= 60; ++n) {
            for (std::uint64_t m = 1; m <= 4; ++m) {
                const TowerSpec spec{k, n, m};
                const CaseTag literal = literal_case(k, n, m);
                ASSERT_NE(literal, CaseTag::OutOfRange) << to_string(spec);
                ASSERT_EQ(tag_of(classify(spec)), literal) << to_string(spec);
                const auto p = predicted_residue(spec);
                ASSERT_TRUE(p.residue);
                ASSERT_LT(*p.residue, fib(n));
            }
        }
    }
}

TEST(Prediction, LabelsRoundTrip) {
    for (CaseTag tag : kAllCaseTags) EXPECT_EQ(parse_case_tag(to_string(tag)), tag);
    for (CaseClause clause : kInRangeClauses) EXPECT_EQ(parse_case_clause(to_string(clause)), clause);
    EXPECT_FALSE(parse_case_tag("UNIT"));
}

TEST(Analyze, Examples) {
    const auto a251 = analyze({2, 5, 1});
    EXPECT_TRUE(a251.divisibility_ok);
    EXPECT_EQ(a251.unit_residue, 1);
    EXPECT_EQ(a251.case_tag, CaseTag::UnitOne);
    EXPECT_EQ(a251.match, true);
    EXPECT_TRUE(a251.exact);
    EXPECT_TRUE(a251.chain.verified);

    const auto a261 = analyze({2, 6, 1});
    EXPECT_EQ(a261.unit_residue, 1);
    EXPECT_EQ(a261.case_tag, CaseTag::HalfPow);
    EXPECT_EQ(a261.match, true);

    const auto a331 = analyze({3, 3, 1});
    EXPECT_TRUE(a331.divisibility_ok);
    EXPECT_EQ(a331.unit_residue, 0);
    EXPECT_FALSE(a331.exact);
    EXPECT_EQ(a331.predicted_residue, Natural(0));
    EXPECT_EQ(a331.match, true);

    const auto a2122 = analyze({2, 12, 2});
    EXPECT_EQ(a2122.unit_residue, 17);
    EXPECT_EQ(a2122.match, true);
}

TEST(Analyze, TrivialAndBaseRows) {
    const auto base = analyze({1, 7, 2});
    EXPECT_EQ(base.expected_valuation, 2U);
    EXPECT_TRUE(base.divisibility_ok);
    EXPECT_EQ(base.unit_residue, 1);
    EXPECT_EQ(base.case_tag, CaseTag::OutOfRange);
    EXPECT_FALSE(base.match);
    EXPECT_TRUE(base.consistent());

    for (std::uint64_t n : {1, 2}) {
        const auto r = analyze({4, n, 3});
        EXPECT_TRUE(r.trivial);
        EXPECT_TRUE(r.divisibility_ok);
        EXPECT_EQ(r.fn_value, 1);
        EXPECT_TRUE(r.consistent());
    }
    EXPECT_THROW(analyze({0, 5, 1}), std::invalid_argument);
}

TEST(Analyze, DivisibilityTheoremGrid) {
    for (std::uint64_t n = 1; n <= 25; ++n) {
        for (std::uint64_t k = 1; k <= 6; ++k) {
            for (std::uint64_t m = 1; m <= 3; ++m) {
                ASSERT_TRUE(analyze({k, n, m}).divisibility_ok) << to_string(TowerSpec{k, n, m});
            }
        }
    }
}

TEST(Analyze, ResidueFormulaAndExactnessGrid) {
    for (std::uint64_t n = 3; n <= 25; ++n) {
        for (std::uint64_t k = 2; k <= 6; ++k) {
            for (std::uint64_t m = 1; m <= 3; ++m) {
                const auto r = analyze({k, n, m});
                ASSERT_EQ(r.match, true) << to_string(r.spec);
                if (n >= 4) ASSERT_TRUE(r.exact) << to_string(r.spec);
            }
        }
    }
}

TEST(Analyze, HoggattConsequence) {
    // G(2, n, k) = F(n F_n^k), so divisibility by F_n^(k+1) is the statement.
    for (std::uint64_t n = 3; n <= 10; ++n) {
        for (std::uint64_t k = 1; k <= 4; ++k) EXPECT_TRUE(analyze({2, n, k}).divisibility_ok);
    }
}

TEST(SmallModulus, Examples) {
    for (TowerSpec spec : {TowerSpec{2, 7, 1}, TowerSpec{2, 3, 1}, TowerSpec{2, 4, 1}}) {
        const auto facts = lemma4_check(spec);
        EXPECT_TRUE(facts.parity_clause && facts.mod4_clause && facts.mod8_clause) << to_string(spec);
    }
    EXPECT_THROW(lemma4_check({1, 3, 1}), std::invalid_argument);
}

TEST(SmallModulus, Grid) {
    for (std::uint64_t n = 1; n <= 40; ++n) {
        for (std::uint64_t k = 2; k <= 7; ++k) {
            for (std::uint64_t m = 1; m <= 3; ++m) ASSERT_TRUE(lemma4_check({k, n, m}).all());
        }
    }
}
