#pragma once

#include "qgolden/bigint.hpp"
#include "qgolden/poly.hpp"

namespace qgolden {

// F_n(q) by iterating F_n = F_{n-1} + q F_{n-2} from F_0 = F_1 = 1, with
// two rolling polynomials (no call-stack recursion).
IntPoly qfib_recursive(long n);

// F_n(q) as sum_{k=0}^{floor(n/2)} binom(n-k, k) q^k. Deliberately not
// implemented via qfib_recursive: the two generators cross-check each other.
IntPoly qfib_closed(long n);

// Coefficient sum of qfib_closed(n); equals fibonacci(n).
BigInt qfib_at_one(long n);

} // namespace qgolden
