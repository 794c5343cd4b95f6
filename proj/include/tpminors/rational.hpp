#pragma once

#include <gmpxx.h>

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>
#include <type_traits>

#include "tpminors/errors.hpp"

namespace tpm {

/// Exact rational number in canonical form: denominator positive and
/// gcd(|num|, den) = 1. Structural equality is value equality, so two
/// Rationals compare equal exactly when they denote the same number, and
/// they hash identically.
class Rational {
   public:
    Rational() = default;
    template <std::integral T>
    Rational(T v) : q_(int_to_mpz(v)) {}  // NOLINT(google-explicit-constructor)
    Rational(const mpz_class& num, const mpz_class& den) : q_(num, den) {
        if (den == 0) throw DomainError("zero denominator");
        q_.canonicalize();
    }
    template <std::integral T, std::integral U>
    Rational(T num, U den) : Rational(int_to_mpz(num), int_to_mpz(den)) {}
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }
    explicit Rational(const mpz_class& z) : q_(z) {}

    /// Parses `p/q` or a bare integer, with an optional leading sign.
    static Rational parse(std::string_view text) {
        std::string s(text);
        if (s.empty()) throw FormatError("empty rational");
        auto slash = s.find('/');
        auto valid_int = [](const std::string& t) {
            std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
            if (i == t.size()) return false;
            for (; i < t.size(); ++i)
                if (t[i] < '0' || t[i] > '9') return false;
            return true;
        };
        auto to_mpz = [](std::string t) {
            if (!t.empty() && t[0] == '+') t.erase(0, 1);
            return mpz_class(t, 10);
        };
        if (slash == std::string::npos) {
            if (!valid_int(s)) throw FormatError("not a rational: '" + s + "'");
            return Rational(to_mpz(s));
        }
        std::string n = s.substr(0, slash);
        std::string d = s.substr(slash + 1);
        if (!valid_int(n) || !valid_int(d) || d[0] == '-' || d[0] == '+')
            throw FormatError("not a rational: '" + s + "'");
        mpz_class den = to_mpz(d);
        if (den == 0) throw FormatError("zero denominator in '" + s + "'");
        return Rational(to_mpz(n), den);
    }

    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }
    const mpq_class& value() const { return q_; }

    int sign() const { return sgn(q_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    double to_double() const { return q_.get_d(); }

    /// `p` for integers, `p/q` otherwise.
    std::string to_string() const { return q_.get_str(10); }

    Rational& operator+=(const Rational& o) {
        q_ += o.q_;
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        q_ -= o.q_;
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        q_ *= o.q_;
        return *this;
    }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw DomainError("division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) < 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

    std::size_t hash() const {
        std::size_t h = static_cast<std::size_t>(sign() + 1);
        auto mix = [&h](mpz_srcptr z) {
            std::size_t n = mpz_size(z);
            for (std::size_t i = 0; i < n; ++i) {
                h ^= static_cast<std::size_t>(mpz_getlimbn(z, static_cast<mp_size_t>(i))) + 0x9e3779b97f4a7c15ULL +
                     (h << 6) + (h >> 2);
            }
            h ^= n * 0x100000001b3ULL;
        };
        mix(q_.get_num_mpz_t());
        mix(q_.get_den_mpz_t());
        return h;
    }

   private:
    template <std::integral T>
    static mpz_class int_to_mpz(T v) {
        if constexpr (std::is_signed_v<T>)
            return mpz_class(static_cast<long>(v));
        else
            return mpz_class(static_cast<unsigned long>(v));
    }

    mpq_class q_{0};
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

inline Rational pow(const Rational& base, unsigned exp) {
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), base.value().get_num_mpz_t(), exp);
    mpz_pow_ui(d.get_mpz_t(), base.value().get_den_mpz_t(), exp);
    return Rational(n, d);
}

}  // namespace tpm

template <>
struct std::hash<tpm::Rational> {
    std::size_t operator()(const tpm::Rational& r) const noexcept { return r.hash(); }
};
