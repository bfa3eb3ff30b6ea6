#pragma once

#include <vector>

#include "qgolden/bigint.hpp"

namespace qgolden {

// Ordered tuple (m_1, ..., m_t) of positive integers with a fixed sum.
struct Composition {
    std::vector<long> parts;

    long length() const { return static_cast<long>(parts.size()); }
};

// Range over the 2^{m-1} compositions of m >= 1 in lexicographic order by
// parts: (1,...,1) first, (m) last. Single-pass: the iterator dereferences
// to its internal Composition, which is overwritten by ++ (istream_iterator
// style). The successor of (..., a, b) is (..., a+1, 1, ..., 1) with b-1
// trailing ones, so stepping is iterative with O(m) state.
class CompositionRange {
public:
    explicit CompositionRange(long m);

    struct sentinel {};

    class iterator {
    public:
        explicit iterator(long m);

        const Composition& operator*() const { return current_; }
        const Composition* operator->() const { return &current_; }
        iterator& operator++();
        bool operator==(sentinel) const { return done_; }

    private:
        Composition current_;
        bool done_ = false;
    };

    iterator begin() const { return iterator(m_); }
    sentinel end() const { return {}; }

private:
    long m_;
};

// 2^{m-1}, exact.
BigInt composition_count(long m);

} // namespace qgolden
