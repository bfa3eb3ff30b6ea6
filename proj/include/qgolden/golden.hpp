#pragma once

#include <string>

#include "qgolden/bigint.hpp"
#include "qgolden/report.hpp"
#include "qgolden/series.hpp"

namespace qgolden {

// phi(q) = (1 + sqrt(1+4q)) / 2 as an exact series:
//   1 + sum_{k>=1} (-1)^{k-1} C_{k-1} q^k.
// Built from Catalan numbers instead of a formal square root so every
// coefficient stays an exact integer; the construction is pinned down by
// the residual phi^2 - phi - q = 0 and by mutual inversion with
// phi_reciprocal_series (both under test).
TruncatedSeries phi_series(long order);

// 1/phi(q) = sum_{k>=0} (-1)^k C_k q^k, the Catalan generating function
// evaluated at -q.
TruncatedSeries phi_reciprocal_series(long order);

// F_{n+1}(q) / F_n(q) mod q^order.
TruncatedSeries ratio_series(long n, long order);

// F_{n+1}/F_n agrees with phi(q) through q^n. The report records the first
// differing coefficient index when it does not.
VerificationReport check_theorem(long n);

// F_n/F_{n+1} agrees with 1/phi(q) through q^n, i.e. its coefficients are
// the signed Catalan numbers 1, -1, 2, -5, 14, ...
VerificationReport check_reciprocal_form(long n);

// fibonacci(n+1)/fibonacci(n) as a fixed-point decimal string carrying
// `frac_digits` fractional digits, computed by exact scaled-integer
// division (round toward zero). Requires n >= 1.
std::string golden_ratio_numeric(long n, long frac_digits = 20);

// fibonacci(n+1) * 10^scale / fibonacci(n), truncated.
BigInt fibonacci_ratio_scaled(long n, long scale);

// (1 + sqrt(5)) / 2 * 10^scale, truncated; sqrt(5) comes from the integer
// square root of 5 * 10^(2*scale).
BigInt golden_ratio_scaled(long scale);

} // namespace qgolden
