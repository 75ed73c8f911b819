#ifndef TRGEO_REDUCTION_HPP
#define TRGEO_REDUCTION_HPP

#include <cstddef>
#include <span>

namespace trgeo {

// Pairwise (cascade) summation. All reductions in the library go through
// this so that results do not depend on the number of OpenMP threads used
// to fill the term array: kernels write per-item terms into slots, then
// reduce serially with a fixed tree.
template <typename T>
T pairwise_sum(std::span<const T> terms) {
    const std::size_t n = terms.size();
    if (n == 0) return T{};
    if (n <= 8) {
        T acc = terms[0];
        for (std::size_t i = 1; i < n; ++i) acc += terms[i];
        return acc;
    }
    const std::size_t half = n / 2;
    return pairwise_sum(terms.subspan(0, half)) + pairwise_sum(terms.subspan(half));
}

template <typename Container>
auto pairwise_sum(const Container& c) {
    using T = typename Container::value_type;
    return pairwise_sum(std::span<const T>(c.data(), c.size()));
}

} // namespace trgeo

#endif
