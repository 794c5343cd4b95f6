#pragma once

#include <cstdint>
#include <utility>

#include "tpminors/errors.hpp"

namespace tpm {

/// div(k), by trial division up to sqrt(k).
inline std::uint64_t divisor_count(std::uint64_t k) {
    if (k == 0) throw DomainError("divisor_count needs k >= 1");
    std::uint64_t c = 0;
    for (std::uint64_t d = 1; d * d <= k; ++d) {
        if (k % d) continue;
        c += (d * d == k) ? 1 : 2;
    }
    return c;
}

/// The k in [1, n/2] maximizing div(k); smallest such k on ties.
inline std::pair<std::uint64_t, std::uint64_t> best_k(std::uint64_t n) {
    if (n < 2) throw DomainError("best_k needs n >= 2");
    std::pair<std::uint64_t, std::uint64_t> best{1, 1};
    for (std::uint64_t k = 2; k <= n / 2; ++k) {
        auto d = divisor_count(k);
        if (d > best.second) best = {k, d};
    }
    return best;
}

/// Number of axis-parallel rectangles of area k with corners in [1..n]^2:
/// sum over dx*dy = k with dx, dy <= n-1 of (n - dx)(n - dy). Equal to the
/// multiplicity of k among the 2x2 minors of grid_matrix(n).
inline std::uint64_t grid_area_k_count(std::uint64_t n, std::uint64_t k) {
    if (n < 2) throw DomainError("grid_area_k_count needs n >= 2");
    if (k == 0) throw DomainError("grid_area_k_count needs k >= 1");
    std::uint64_t s = 0;
    for (std::uint64_t dx = 1; dx <= n - 1 && dx <= k; ++dx) {
        if (k % dx) continue;
        std::uint64_t dy = k / dx;
        if (dy > n - 1) continue;
        s += (n - dx) * (n - dy);
    }
    return s;
}

}  // namespace tpm
