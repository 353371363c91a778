#pragma once

// Pairwise (cascade) summation. The recursion splits at fixed midpoints, so the
// tree shape depends only on the element count and results are bit-reproducible.
// Rounding error grows as O(log n) instead of O(n).

#include <cstddef>
#include <span>

namespace nearfield {

inline constexpr std::size_t kPairwiseBlock = 64;

/// Sums term(i) for i in [begin, end) without materialising the terms.
template <typename Term>
double pairwise_sum_generated(long begin, long end, const Term& term) {
    const long n = end - begin;
    if (n <= static_cast<long>(kPairwiseBlock)) {
        double s = 0.0;
        for (long i = begin; i < end; ++i) {
            s += term(i);
        }
        return s;
    }
    const long mid = begin + n / 2;
    return pairwise_sum_generated(begin, mid, term) + pairwise_sum_generated(mid, end, term);
}

inline double pairwise_sum(std::span<const double> values) {
    return pairwise_sum_generated(0L, static_cast<long>(values.size()),
                                  [&](long i) { return values[static_cast<std::size_t>(i)]; });
}

}  // namespace nearfield
