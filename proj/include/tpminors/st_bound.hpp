#pragma once

#include <cstdint>

#include "tpminors/errors.hpp"
#include "tpminors/rational.hpp"

namespace tpm {

/// I <= constant * ((mn)^{2/3} + m + n), decided exactly: with
/// L = I/constant - m - n the inequality holds iff L <= 0 or L^3 <= (mn)^2.
inline bool st_bound_check(std::uint64_t m, std::uint64_t n, std::uint64_t incidences, const Rational& constant) {
    if (constant.sign() <= 0) throw DomainError("st_bound_check needs a positive constant");
    Rational lhs = Rational(incidences) / constant - Rational(m) - Rational(n);
    if (lhs.sign() <= 0) return true;
    Rational mn = Rational(m) * Rational(n);
    return pow(lhs, 3) <= mn * mn;
}

/// The constant used for all sanity checks in this project.
inline Rational default_st_constant() { return Rational(5, 2); }

}  // namespace tpm
