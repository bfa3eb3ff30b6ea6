#include "qgolden/compositions.hpp"

#include <stdexcept>

namespace qgolden {

CompositionRange::CompositionRange(long m) : m_(m)
{
    if (m < 1)
        throw std::invalid_argument("compositions: m must be >= 1");
}

CompositionRange::iterator::iterator(long m)
{
    current_.parts.assign(static_cast<std::size_t>(m), 1);
}

CompositionRange::iterator& CompositionRange::iterator::operator++()
{
    auto& parts = current_.parts;
    if (parts.size() == 1) { // (m) is lexicographically last
        parts.clear();
        done_ = true;
        return *this;
    }

    const long last = parts.back();
    parts.pop_back();
    parts.back() += 1;
    parts.insert(parts.end(), static_cast<std::size_t>(last - 1), 1);
    return *this;
}

BigInt composition_count(long m)
{
    if (m < 1)
        throw std::invalid_argument("composition_count: m must be >= 1");
    BigInt count = 1;
    count <<= static_cast<unsigned long>(m - 1);
    return count;
}

} // namespace qgolden
