#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <unordered_map>
#include <vector>

#include "tpminors/rational.hpp"

namespace tpm {

/// Finite multiset of rationals. Plain sets embed with multiplicity 1.
class MultiSet {
   public:
    MultiSet() = default;

    static MultiSet from_set(const std::vector<Rational>& values) {
        MultiSet s;
        for (const auto& v : values) s.add(v, 1);
        return s;
    }

    void add(const Rational& v, std::uint64_t mult) {
        if (mult) m_[v] += mult;
    }

    std::uint64_t multiplicity(const Rational& v) const {
        auto it = m_.find(v);
        return it == m_.end() ? 0 : it->second;
    }

    /// Sum of multiplicities.
    std::uint64_t mass() const {
        std::uint64_t s = 0;
        for (const auto& [v, m] : m_) s += m;
        return s;
    }

    bool empty() const { return m_.empty(); }
    std::size_t support_size() const { return m_.size(); }
    const std::map<Rational, std::uint64_t>& entries() const { return m_; }

    friend bool operator==(const MultiSet&, const MultiSet&) = default;

   private:
    std::map<Rational, std::uint64_t> m_;
};

namespace detail {

template <typename Op>
MultiSet convolve(const MultiSet& c, const MultiSet& d, Op op) {
    std::unordered_map<Rational, std::uint64_t> acc;
    for (const auto& [x, mx] : c.entries())
        for (const auto& [y, my] : d.entries()) acc[op(x, y)] += mx * my;
    MultiSet out;
    for (const auto& [v, m] : acc) out.add(v, m);
    return out;
}

}  // namespace detail

/// C - D: m(s) = sum over c - d = s of m(c) * m(d).
inline MultiSet multiset_diff(const MultiSet& c, const MultiSet& d) {
    return detail::convolve(c, d, [](const Rational& x, const Rational& y) { return x - y; });
}

/// C * D: m(s) = sum over c * d = s of m(c) * m(d).
inline MultiSet multiset_prod(const MultiSet& c, const MultiSet& d) {
    return detail::convolve(c, d, [](const Rational& x, const Rational& y) { return x * y; });
}

/// Maximum multiplicity of any element; 0 for the empty multiset.
inline std::uint64_t mu(const MultiSet& c) {
    std::uint64_t best = 0;
    for (const auto& [v, m] : c.entries()) best = std::max(best, m);
    return best;
}

/// Maximum multiplicity over nonzero elements only.
inline std::uint64_t mu_nonzero(const MultiSet& c) {
    std::uint64_t best = 0;
    for (const auto& [v, m] : c.entries())
        if (!v.is_zero()) best = std::max(best, m);
    return best;
}

/// (A - A) * (B - B) for plain sets A and B.
inline MultiSet difference_product(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    auto A = MultiSet::from_set(a);
    auto B = MultiSet::from_set(b);
    return multiset_prod(multiset_diff(A, A), multiset_diff(B, B));
}

}  // namespace tpm
