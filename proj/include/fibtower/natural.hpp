#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace fibtower {

/// Arbitrary-precision nonnegative integer. Signed values appear only where
/// an identity is signed (Cassini); everything else stays >= 0.
using Natural = mpz_class;
using Integer = mpz_class;

/// Parses a plain decimal string (digits only, no sign, no whitespace).
std::optional<Natural> parse_natural(std::string_view text);

inline std::string to_decimal(const Natural& x) { return x.get_str(10); }

/// Value as uint64 if it fits.
std::optional<std::uint64_t> to_u64(const Natural& x);

Natural from_u64(std::uint64_t v);

/// Largest e with base^e | x. Requires base >= 2 and x >= 1.
std::uint64_t valuation(const Natural& base, const Natural& x);

/// C(r, j) by the multiplicative formula with running exact division.
Natural binomial(const Natural& r, std::uint64_t j);

Natural pow_natural(const Natural& base, std::uint64_t exponent);

}  // namespace fibtower
