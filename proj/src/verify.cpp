#include "fibtower/verify.hpp"

#include <numeric>
#include <random>
#include <sstream>

#include "fibtower/errors.hpp"
#include "fibtower/fib.hpp"
#include "fibtower/lemmas.hpp"
#include "fibtower/modfib.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fibtower {

namespace {

class Property {
public:
    explicit Property(std::string name) { result_.name = std::move(name); }

    template <typename Describe>
    void expect(bool ok, Describe&& describe) {
        ++result_.checked;
        if (!ok && result_.passed) {
            result_.passed = false;
            result_.counterexample = describe();
        }
    }

    PropertyResult take() { return std::move(result_); }

private:
    PropertyResult result_;
};

std::string args(std::initializer_list<std::uint64_t> values) {
    std::string out = "(";
    for (auto v : values) out += (out.size() > 1 ? ", " : "") + std::to_string(v);
    return out + ")";
}

}  // namespace

bool SuiteResult::passed() const { return pass_count() == properties.size(); }

std::size_t SuiteResult::pass_count() const {
    std::size_t c = 0;
    for (const auto& p : properties) c += p.passed;
    return c;
}

SuiteResult run_identity_suite() {
    SuiteResult suite{"identity families", {}};

    Property gcd_identity("gcd(F_a, F_b) = F_gcd(a,b)");
    Property addition("F_{a+b} = F_{a+1} F_b + F_a F_{b-1}");
    for (std::uint64_t a = 1; a <= 40; ++a) {
        for (std::uint64_t b = 1; b <= 40; ++b) {
            gcd_identity.expect(gcd_identity_check(a, b), [&] { return args({a, b}); });
            addition.expect(addition_formula_check(a, b), [&] { return args({a, b}); });
        }
    }

    Property expansion("F_{nr} = sum C(r,j) F_n^j F_{n-1}^(r-j) F_j");
    for (std::uint64_t n = 1; n <= 10; ++n) {
        for (std::uint64_t r = 1; r <= 30; ++r) {
            expansion.expect(expansion_rhs(n, r) == fib(n * r), [&] { return args({n, r}); });
        }
    }

    Property criterion("a >= 3: F_a | F_b iff a | b");
    for (std::uint64_t a = 3; a <= 30; ++a) {
        for (std::uint64_t b = 1; b <= 200; ++b) {
            criterion.expect(divisibility_criterion_check(a, b), [&] { return args({a, b}); });
        }
    }

    Property cassini_identity("F_{n+1} F_{n-1} - F_n^2 = (-1)^n");
    Property squares("F_{n-1}^2 = F_{n+1}^2 = (-1)^n (mod F_n)");
    for (std::uint64_t n = 1; n <= 50; ++n) {
        const Integer expected = n % 2 == 0 ? 1 : -1;
        cassini_identity.expect(cassini(n) == expected, [&] { return args({n}); });
        squares.expect(square_congruence_check(n), [&] { return args({n}); });
    }

    Property period4("a = b (mod 6) => F_a = F_b (mod 4); gcd(n,6) = 1 => F_n = 1 (mod 4)");
    std::vector<std::uint64_t> mod4(201);
    for (std::uint64_t i = 0; i <= 200; ++i) mod4[i] = mpz_fdiv_ui(fib(i).get_mpz_t(), 4);
    for (std::uint64_t a = 0; a <= 200; ++a) {
        for (std::uint64_t b = a % 6; b <= 200; b += 6) {
            period4.expect(mod4[a] == mod4[b], [&] { return args({a, b}); });
        }
        if (std::gcd(a, std::uint64_t{6}) == 1) {
            period4.expect(mod4[a] == 1, [&] { return "gcd(n,6)=1 at n=" + std::to_string(a); });
        }
    }

    for (auto* p : {&gcd_identity, &expansion, &criterion, &cassini_identity, &squares, &addition,
                    &period4}) {
        suite.properties.push_back(p->take());
    }
    return suite;
}

SuiteResult run_lemma_suite(const AnalysisOptions& options) {
    SuiteResult suite{"lemma properties", {}};

    Property hoggatt("F_n^(s-1) | r => F_n^s | F_{nr}");
    for (std::uint64_t n = 2; n <= 8; ++n) {
        const Natural fn = fib(n);
        for (std::uint64_t s = 1; s <= 3; ++s) {
            const Natural need = pow_natural(fn, s - 1);
            for (std::uint64_t r = 1; r <= 60; ++r) {
                if (!mpz_divisible_p(from_u64(r).get_mpz_t(), need.get_mpz_t())) continue;
                hoggatt.expect(hoggatt_check(n, r, s), [&] { return args({n, r, s}); });
            }
        }
    }

    Property consequence("F_n^(k+1) | F_{n F_n^k}");
    for (std::uint64_t n = 3; n <= 10; ++n) {
        for (std::uint64_t k = 1; k <= 4; ++k) {
            const auto report = analyze({2, n, k}, options);
            consequence.expect(report.divisibility_ok, [&] { return args({n, k}); });
        }
    }

    Property witness("j | a s^c (c minimal) => p | s and p^c | j for some prime p");
    {
        std::mt19937_64 rng(options.factor.seed);
        std::uniform_int_distribution<std::uint64_t> pick_a(1, 50), pick_j(1, 64), pick_s(2, 12);
        std::uint64_t accepted = 0;
        while (accepted < 500) {
            const auto a = pick_a(rng), j = pick_j(rng), s = pick_s(rng);
            Lemma1Witness w;
            try {
                w = lemma1_witness(from_u64(a), from_u64(j), from_u64(s));
            } catch (const NoC&) {
                continue;
            } catch (const NoWitness&) {
                witness.expect(false, [&] { return "no witness for " + args({a, j, s}); });
                ++accepted;
                continue;
            }
            ++accepted;
            const Natural ja = from_u64(j);
            const bool p_divides_s = mpz_divisible_p(from_u64(s).get_mpz_t(), w.p.get_mpz_t());
            const bool pc_divides_j =
                mpz_divisible_p(ja.get_mpz_t(), pow_natural(w.p, w.c).get_mpz_t());
            bool minimal = mpz_divisible_p(
                Natural(from_u64(a) * pow_natural(from_u64(s), w.c)).get_mpz_t(), ja.get_mpz_t());
            if (w.c > 0) {
                minimal = minimal && !mpz_divisible_p(
                    Natural(from_u64(a) * pow_natural(from_u64(s), w.c - 1)).get_mpz_t(),
                    ja.get_mpz_t());
            }
            witness.expect(is_probable_prime(w.p) && p_divides_s && pc_divides_j && minimal,
                           [&] { return args({a, j, s}); });
        }
    }

    Property binomial_lemma("s^k | r => s^(k+l) | C(r,j) s^j when 2^(j-l+1) > j");
    for (std::uint64_t s = 1; s <= 5; ++s) {
        for (std::uint64_t k = 1; k <= 3; ++k) {
            for (std::uint64_t l = 1; l <= 3; ++l) {
                for (std::uint64_t b = 1; b <= 6; ++b) {
                    const auto r = *to_u64(pow_natural(from_u64(s), k)) * b;
                    binomial_lemma.expect(lemma2_check(from_u64(s), k, l, r),
                                          [&] { return args({s, k, l, r}); });
                }
            }
        }
    }

    Property small_moduli("r = G(k,n,m): parity, mod 4 and mod 8 facts");
    for (std::uint64_t n = 1; n <= 25; ++n) {
        for (std::uint64_t k = 2; k <= 6; ++k) {
            for (std::uint64_t m = 1; m <= 3; ++m) {
                small_moduli.expect(lemma4_check({k, n, m}, options.factor).all(),
                                    [&] { return to_string(TowerSpec{k, n, m}); });
            }
        }
    }

    Property truncation("F_{nr} / F_n^(k+1) = A + B (mod F_n)");
    for (std::uint64_t n = 3; n <= 8; ++n) {
        const auto fn = *to_u64(fib(n));
        for (std::uint64_t k = 1; k <= 2; ++k) {
            for (std::uint64_t b = 1; b <= 4; ++b) {
                const std::uint64_t r = (k == 1 ? fn : fn * fn) * b;
                if (n * r > 1'000'000) continue;
                truncation.expect(truncation_check(n, r, k), [&] { return args({n, r, k}); });
            }
        }
    }

    for (auto* p : {&hoggatt, &consequence, &witness, &binomial_lemma, &small_moduli, &truncation}) {
        suite.properties.push_back(p->take());
    }
    return suite;
}

SuiteResult run_oracle_suite(std::uint64_t max_index, const AnalysisOptions& options) {
    SuiteResult suite{"oracle properties", {}};
    Property lower("oracle valuation >= k+m-1");
    Property exact("oracle valuation == k+m-1 for k >= 2, n >= 4");
    Property unit("oracle quotient residue == modular unit residue");
    Property probes("tower_residue == G mod {7, 8, 97, F_n^(k+m)}");

    for (std::uint64_t n = 1; n <= 25; ++n) {
        for (std::uint64_t k = 1; k <= 6; ++k) {
            for (std::uint64_t m = 1; m <= 3; ++m) {
                const TowerSpec spec{k, n, m};
                if (!oracle_feasible(spec, max_index)) continue;
                const auto oracle = oracle_eval(spec, max_index);
                const auto report = analyze(spec, options);
                const auto label = [&] { return to_string(spec); };
                const Natural fn = fib(n);

                if (fn > 1) {
                    lower.expect(*oracle.valuation >= spec.expected_valuation(), label);
                    if (k >= 2 && n >= 4) {
                        exact.expect(*oracle.valuation == spec.expected_valuation(), label);
                    }
                    unit.expect(oracle.theorem_quotient_residue &&
                                    *oracle.theorem_quotient_residue == report.unit_residue,
                                label);
                }

                for (const Natural& probe : {Natural(7), Natural(8), Natural(97),
                                             pow_natural(fn, k + m)}) {
                    Natural expected;
                    mpz_mod(expected.get_mpz_t(), oracle.value.get_mpz_t(), probe.get_mpz_t());
                    probes.expect(
                        tower_residue(spec, factorize(probe, options.factor), options.factor) ==
                            expected,
                        [&] { return to_string(spec) + " mod " + to_decimal(probe); });
                }
            }
        }
    }
    for (auto* p : {&lower, &exact, &unit, &probes}) suite.properties.push_back(p->take());
    return suite;
}

SuiteResult run_pisano_suite(std::uint64_t limit, int jobs) {
    SuiteResult suite{"pisano properties", {}};
    Property known_value("pi(4) = 6");
    known_value.expect(pisano_period(factorize(4)).value() == 6, [] { return std::string("M=4"); });

    std::vector<std::uint8_t> agree(limit + 1, 1);
    const auto count = static_cast<std::int64_t>(limit);
#ifdef _OPENMP
    const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 256) num_threads(threads)
#endif
    for (std::int64_t M = 1; M <= count; ++M) {
        const auto m = static_cast<std::uint64_t>(M);
        agree[m] = pisano_period(factorize(from_u64(m))).value() == from_u64(pisano_period_brute(m));
    }
    (void)jobs;

    Property match("factored pi(M) == brute pi(M)");
    for (std::uint64_t M = 1; M <= limit; ++M) {
        match.expect(agree[M] != 0, [&] { return "M=" + std::to_string(M); });
    }
    suite.properties.push_back(known_value.take());
    suite.properties.push_back(match.take());
    return suite;
}

std::string render_suite(const SuiteResult& suite) {
    std::ostringstream out;
    for (const auto& p : suite.properties) {
        out << (p.passed ? "PASS " : "FAIL ") << p.name << "  [" << p.checked << " checks]";
        if (!p.passed) out << "  counterexample " << p.counterexample;
        out << '\n';
    }
    out << suite.pass_count() << '/' << suite.properties.size() << ' ' << suite.suite
        << (suite.passed() ? " pass" : " (FAILURES)") << '\n';
    return out.str();
}

}  // namespace fibtower
