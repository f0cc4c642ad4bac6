#include "fibtower/natural.hpp"

#include <stdexcept>

namespace fibtower {

std::optional<Natural> parse_natural(std::string_view text) {
    if (text.empty()) return std::nullopt;
    for (char c : text) {
        if (c < '0' || c > '9') return std::nullopt;
    }
    Natural out;
    if (out.set_str(std::string(text), 10) != 0) return std::nullopt;
    return out;
}

std::optional<std::uint64_t> to_u64(const Natural& x) {
    if (sgn(x) < 0 || mpz_sizeinbase(x.get_mpz_t(), 2) > 64) return std::nullopt;
    std::uint64_t v = 0;
    mpz_export(&v, nullptr, -1, sizeof v, 0, 0, x.get_mpz_t());
    return v;
}

Natural from_u64(std::uint64_t v) {
    Natural out;
    mpz_import(out.get_mpz_t(), 1, -1, sizeof v, 0, 0, &v);
    return out;
}

std::uint64_t valuation(const Natural& base, const Natural& x) {
    if (base < 2 || x < 1) throw std::invalid_argument("valuation: need base >= 2 and x >= 1");
    Natural rest = x;
    std::uint64_t e = 0;
    while (mpz_divisible_p(rest.get_mpz_t(), base.get_mpz_t())) {
        mpz_divexact(rest.get_mpz_t(), rest.get_mpz_t(), base.get_mpz_t());
        ++e;
    }
    return e;
}

Natural binomial(const Natural& r, std::uint64_t j) {
    if (sgn(r) < 0) throw std::invalid_argument("binomial: negative r");
    if (r < from_u64(j)) return 0;
    Natural acc = 1;
    // acc = C(r, i) after step i; C(r,i) = C(r,i-1) * (r-i+1) / i is exact.
    for (std::uint64_t i = 1; i <= j; ++i) {
        acc *= r - from_u64(i - 1);
        mpz_divexact_ui(acc.get_mpz_t(), acc.get_mpz_t(), i);
    }
    return acc;
}

Natural pow_natural(const Natural& base, std::uint64_t exponent) {
    Natural out = 1;
    Natural b = base;
    while (exponent != 0) {
        if (exponent & 1U) out *= b;
        exponent >>= 1U;
        if (exponent != 0) b *= b;
    }
    return out;
}

}  // namespace fibtower
