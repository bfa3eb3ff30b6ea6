#pragma once

#include "qgolden/bigint.hpp"

namespace qgolden {

// binom(a, b) over the exact integers. Out-of-range b (b < 0 or b > a)
// yields 0; this convention keeps composition sums well-defined for every
// part. a < 0 is a caller bug and throws std::invalid_argument.
BigInt binomial(long a, long b);

// Catalan number C_k from the convolution recurrence
// C_0 = 1, C_{k+1} = sum_{i=0}^{k} C_i C_{k-i}.
BigInt catalan(long k);

// C_k as binom(2k, k) / (k+1). Kept separate from catalan() so the two
// constructions check each other; throws std::logic_error if the division
// is not exact (which would mean binomial() is broken).
BigInt catalan_closed(long k);

// Fibonacci number under the indexing F_0 = F_1 = 1.
BigInt fibonacci(long n);

} // namespace qgolden
