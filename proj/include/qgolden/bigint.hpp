#pragma once

#include <gmpxx.h>

#include <string>

namespace qgolden {

// Arbitrary-precision signed integer. Every coefficient and count in this
// library is exact; equality is decidable and no rounding ever occurs.
using BigInt = mpz_class;

inline std::string to_decimal(const BigInt& value) { return value.get_str(); }

inline BigInt pow10(long exponent)
{
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10u, static_cast<unsigned long>(exponent));
    return p;
}

} // namespace qgolden
