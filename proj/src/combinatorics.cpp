#include "qgolden/combinatorics.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace qgolden {

BigInt binomial(long a, long b)
{
    if (a < 0)
        throw std::invalid_argument("binomial: upper index must be >= 0");
    if (b < 0 || b > a)
        return 0;
    if (b > a - b)
        b = a - b;

    // Multiplicative row formula. After multiplying by a-b+i the partial
    // product is i consecutive integers, so dividing by i is exact.
    BigInt result = 1;
    for (long i = 1; i <= b; ++i) {
        result *= a - b + i;
        mpz_divexact_ui(result.get_mpz_t(), result.get_mpz_t(),
                        static_cast<unsigned long>(i));
    }
    return result;
}

BigInt catalan(long k)
{
    if (k < 0)
        throw std::invalid_argument("catalan: index must be >= 0");

    // Growable table under a lock; results are returned by value, so the
    // cache is observationally equivalent to recomputing.
    static std::mutex mutex;
    static std::vector<BigInt> table{BigInt(1)};

    std::lock_guard<std::mutex> lock(mutex);
    while (static_cast<long>(table.size()) <= k) {
        const std::size_t m = table.size() - 1; // extend with C_{m+1}
        BigInt next = 0;
        for (std::size_t i = 0; i <= m; ++i)
            next += table[i] * table[m - i];
        table.push_back(next);
    }
    return table[static_cast<std::size_t>(k)];
}

BigInt catalan_closed(long k)
{
    if (k < 0)
        throw std::invalid_argument("catalan_closed: index must be >= 0");

    const BigInt central = binomial(2 * k, k);
    BigInt quotient;
    const unsigned long remainder =
        mpz_tdiv_q_ui(quotient.get_mpz_t(), central.get_mpz_t(),
                      static_cast<unsigned long>(k + 1));
    if (remainder != 0)
        throw std::logic_error("catalan_closed: binom(2k,k) not divisible by k+1");
    return quotient;
}

BigInt fibonacci(long n)
{
    if (n < 0)
        throw std::invalid_argument("fibonacci: index must be >= 0");

    BigInt prev = 1; // F_0
    BigInt cur = 1;  // F_1
    for (long i = 2; i <= n; ++i) {
        prev += cur;
        std::swap(prev, cur);
    }
    return cur;
}

} // namespace qgolden
