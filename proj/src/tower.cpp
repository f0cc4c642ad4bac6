#include "fibtower/tower.hpp"

#include <stdexcept>

#include "fibtower/fib.hpp"

namespace fibtower {

namespace {

FactoredNatural factored_power(const FactoredNatural& x, std::uint64_t e) {
    std::vector<PrimePower> factors = x.factors();
    for (auto& pp : factors) pp.exponent *= e;
    return FactoredNatural(pow_natural(x.value(), e), std::move(factors));
}

Natural powm(const Natural& base, std::uint64_t e, const Natural& modulus) {
    Natural out;
    mpz_powm_ui(out.get_mpz_t(), base.get_mpz_t(), e, modulus.get_mpz_t());
    return out;
}

Natural mod(const Natural& x, const Natural& modulus) {
    Natural out;
    mpz_mod(out.get_mpz_t(), x.get_mpz_t(), modulus.get_mpz_t());
    return out;
}

}  // namespace

std::string to_string(const TowerSpec& spec) {
    return "(k=" + std::to_string(spec.k) + ", n=" + std::to_string(spec.n) +
           ", m=" + std::to_string(spec.m) + ")";
}

std::string_view to_string(CaseTag tag) {
    switch (tag) {
        case CaseTag::UnitOne: return "UNIT_ONE";
        case CaseTag::FNMinus1: return "F_NMINUS1";
        case CaseTag::HalfPow: return "HALF_POW";
        case CaseTag::SignedHalfPow: return "SIGNED_HALF_POW";
        case CaseTag::OutOfRange: return "OUT_OF_RANGE";
    }
    return "OUT_OF_RANGE";
}

std::string_view to_string(CaseClause clause) {
    switch (clause) {
        case CaseClause::UnitEvenK: return "UNIT_ONE:even_k";
        case CaseClause::UnitOddKNot4: return "UNIT_ONE:odd_k";
        case CaseClause::FNMinus1OddK: return "F_NMINUS1:odd_k";
        case CaseClause::HalfPowOddKMultiM: return "HALF_POW:odd_k,m>=2";
        case CaseClause::HalfPowEvenKSingleM: return "HALF_POW:even_k,m=1";
        case CaseClause::SignedEvenKMultiM: return "SIGNED_HALF_POW:even_k,m>=2";
        case CaseClause::SignedOddKSingleM: return "SIGNED_HALF_POW:odd_k,m=1";
        case CaseClause::OutOfRange: return "OUT_OF_RANGE";
    }
    return "OUT_OF_RANGE";
}

std::optional<CaseTag> parse_case_tag(std::string_view text) {
    for (CaseTag tag : kAllCaseTags) {
        if (to_string(tag) == text) return tag;
    }
    return std::nullopt;
}

std::optional<CaseClause> parse_case_clause(std::string_view text) {
    if (text == to_string(CaseClause::OutOfRange)) return CaseClause::OutOfRange;
    for (CaseClause clause : kInRangeClauses) {
        if (to_string(clause) == text) return clause;
    }
    return std::nullopt;
}

CaseTag tag_of(CaseClause clause) {
    switch (clause) {
        case CaseClause::UnitEvenK:
        case CaseClause::UnitOddKNot4: return CaseTag::UnitOne;
        case CaseClause::FNMinus1OddK: return CaseTag::FNMinus1;
        case CaseClause::HalfPowOddKMultiM:
        case CaseClause::HalfPowEvenKSingleM: return CaseTag::HalfPow;
        case CaseClause::SignedEvenKMultiM:
        case CaseClause::SignedOddKSingleM: return CaseTag::SignedHalfPow;
        case CaseClause::OutOfRange: return CaseTag::OutOfRange;
    }
    return CaseTag::OutOfRange;
}

CaseClause classify(const TowerSpec& spec) {
    if (spec.k < 2 || spec.n < 3) return CaseClause::OutOfRange;
    const bool even_k = spec.k % 2 == 0;
    if (spec.n % 3 != 0) {
        if (even_k) return CaseClause::UnitEvenK;
        return spec.n % 4 != 0 ? CaseClause::UnitOddKNot4 : CaseClause::FNMinus1OddK;
    }
    if (spec.m >= 2) {
        return even_k ? CaseClause::SignedEvenKMultiM : CaseClause::HalfPowOddKMultiM;
    }
    return even_k ? CaseClause::HalfPowEvenKSingleM : CaseClause::SignedOddKSingleM;
}

Prediction predicted_residue(const TowerSpec& spec) {
    Prediction out;
    out.clause = classify(spec);
    out.tag = tag_of(out.clause);
    if (out.tag == CaseTag::OutOfRange) return out;

    const Natural fn = fib(spec.n);
    switch (out.tag) {
        case CaseTag::UnitOne:
            out.residue = mod(1, fn);
            break;
        case CaseTag::FNMinus1:
            out.residue = mod(fib(spec.n - 1), fn);
            break;
        case CaseTag::HalfPow:
        case CaseTag::SignedHalfPow: {
            const Natural f3 = fib(spec.n - 3);
            // 3 | n gives F_3 = 2 | F_{n-3}.
            if (!mpz_even_p(f3.get_mpz_t())) {
                throw std::logic_error("F_{n-3} odd although 3 | n");
            }
            Natural x = powm(f3 / 2, spec.k - 1, fn);
            if (out.tag == CaseTag::SignedHalfPow && spec.n % 2 == 1 && x != 0) x = fn - x;
            out.residue = std::move(x);
            break;
        }
        case CaseTag::OutOfRange:
            break;
    }
    return out;
}

Natural tower_residue(const TowerSpec& spec, const PisanoChain& chain) {
    if (!spec.valid()) throw std::invalid_argument("tower_residue: k, n, m must be >= 1");
    if (chain.depth() != spec.k) throw std::invalid_argument("tower_residue: chain depth != k");
    const Natural n = from_u64(spec.n);
    Natural r = powm(fib(spec.n), spec.m, chain.levels.front().modulus.value());
    for (std::size_t j = 0; j + 1 < chain.depth(); ++j) {
        // F_i mod M_{j+1} depends only on i mod M_j = pi(M_{j+1}).
        const Natural index = mod(n * r, chain.levels[j].modulus.value());
        r = fib_mod(index, chain.levels[j + 1].modulus.value());
    }
    return r;
}

Natural tower_residue(const TowerSpec& spec, const FactoredNatural& M,
                      const FactorOptions& options) {
    return tower_residue(spec, build_chain(spec.k, M, options));
}

ChainSummary summarize(const PisanoChain& chain, bool verify) {
    ChainSummary out;
    out.moduli.reserve(chain.depth());
    for (const auto& level : chain.levels) out.moduli.push_back(level.modulus.value());
    out.base_period = chain.levels.front().period.value();
    out.verified = verify && verify_chain(chain);
    return out;
}

AnalysisReport analyze(const TowerSpec& spec, const AnalysisOptions& options) {
    if (!spec.valid()) throw std::invalid_argument("analyze: k, n, m must be >= 1");
    AnalysisReport report;
    report.spec = spec;
    report.fn_value = fib(spec.n);
    report.expected_valuation = spec.expected_valuation();

    const Prediction prediction = predicted_residue(spec);
    report.case_tag = prediction.tag;
    report.clause = prediction.clause;
    report.predicted_residue = prediction.residue;

    const Natural& fn = report.fn_value;
    const auto target = factored_power(factorize(fn, options.factor), spec.k + spec.m);
    const auto chain = build_chain(spec.k, target, options.factor);
    report.chain = summarize(chain, options.verify_chain);
    const Natural x = tower_residue(spec, chain);

    if (fn == 1) {
        report.trivial = true;
        report.divisibility_ok = true;
        report.unit_residue = 0;
        report.exact = false;
    } else {
        // G = F_n^e q  =>  G mod F_n^(e+1) = F_n^e (q mod F_n). A residue not
        // divisible by F_n^e would be a counterexample to the divisibility
        // theorem, so it is reported, not assumed away.
        const Natural divisor = pow_natural(fn, report.expected_valuation);
        report.divisibility_ok = mpz_divisible_p(x.get_mpz_t(), divisor.get_mpz_t()) != 0;
        if (report.divisibility_ok) {
            report.unit_residue = x / divisor;
            report.exact = report.unit_residue != 0;
        }
    }
    if (report.predicted_residue) report.match = report.unit_residue == *report.predicted_residue;
    return report;
}

SmallModulusFacts lemma4_check(const TowerSpec& spec, const FactorOptions& options) {
    if (spec.k < 2) throw std::invalid_argument("lemma4_check: k must be >= 2");
    const auto r = *to_u64(tower_residue(spec, FactoredNatural::prime(2, 3), options));
    const std::uint64_t n = spec.n;
    SmallModulusFacts facts;
    facts.parity_clause = (r % 2 == 0) == (n % 3 == 0 || n % 4 == 0);
    facts.mod4_clause = (n % 2 == 0 || n % 3 == 0) || r % 4 == 1;
    facts.mod8_clause = n % 3 != 0 || r % 8 == 0;
    return facts;
}

}  // namespace fibtower
