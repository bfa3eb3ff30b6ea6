#pragma once

#include "qgolden/bigint.hpp"
#include "qgolden/report.hpp"

namespace qgolden {

// The Sauermann-Wigderson composition sum and three independent ways of
// evaluating it. All four are permanent public API so the cross-oracle
// structure survives refactors.

// Direct route: sum over all compositions (m_1, ..., m_t) of m of
//   (-1)^t binom(n-m_1, m_1-1) binom(n-m_2, m_2) ... binom(n-m_t, m_t),
// with the t = 1 product empty (= 1). Requires n >= 1 and m >= 1 only;
// for m > n the value is computed but asserts nothing. A factor whose
// upper index n - m_i would be negative is taken as 0 (its lower index
// necessarily exceeds it), which never happens when m <= n.
BigInt sw_lhs(long n, long m);

// Closed form (-1)^m C_{m-1}.
BigInt sw_rhs(long m);

// Coefficient of q^m in -q F_{n-1}(q)/F_n(q): series division at order
// m+1, then shift by one and negate.
BigInt sw_gf_coefficient(long n, long m);

// Same coefficient from the truncated alternating expansion
//   -q F_{n-1}(q) sum_{t=0}^{m} (1 - F_n(q))^t
// in plain polynomial arithmetic truncated at degree m. Cutting the sum at
// t = m is exact: F_n(q) - 1 has no constant term, so higher powers only
// contribute above q^m.
BigInt sw_geometric(long n, long m);

// All four routes must agree; the report carries all four values. The
// identity's hypothesis is m <= n, and m > n throws std::invalid_argument
// rather than reporting a failure.
VerificationReport check_sw(long n, long m);

} // namespace qgolden
