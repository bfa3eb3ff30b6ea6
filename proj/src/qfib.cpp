#include "qgolden/qfib.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

#include "qgolden/combinatorics.hpp"

namespace qgolden {

IntPoly qfib_recursive(long n)
{
    if (n < 0)
        throw std::invalid_argument("qfib_recursive: n must be >= 0");

    IntPoly prev{1}; // F_0
    IntPoly cur{1};  // F_1
    for (long i = 2; i <= n; ++i) {
        IntPoly next = cur + shifted(prev, 1);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return n == 0 ? prev : cur;
}

IntPoly qfib_closed(long n)
{
    if (n < 0)
        throw std::invalid_argument("qfib_closed: n must be >= 0");

    std::vector<BigInt> coeffs(static_cast<std::size_t>(n / 2) + 1);
    for (long k = 0; k <= n / 2; ++k)
        coeffs[static_cast<std::size_t>(k)] = binomial(n - k, k);
    return IntPoly(std::move(coeffs));
}

BigInt qfib_at_one(long n) { return eval_at_one(qfib_closed(n)); }

} // namespace qgolden
