#pragma once

#include <cstddef>
#include <initializer_list>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "tpminors/errors.hpp"
#include "tpminors/rational.hpp"

namespace tpm {

/// Strictly increasing, 1-based index tuple (the row set I or column set J of
/// a minor). Empty tuples are rejected: order-0 minors are not defined.
class IndexTuple {
   public:
    IndexTuple() = default;
    explicit IndexTuple(std::vector<std::size_t> indices) : idx_(std::move(indices)) { validate(); }
    IndexTuple(std::initializer_list<std::size_t> indices) : idx_(indices) { validate(); }

    /// (first, first+1, ..., first+len-1)
    static IndexTuple contiguous(std::size_t first, std::size_t len) {
        std::vector<std::size_t> v(len);
        for (std::size_t i = 0; i < len; ++i) v[i] = first + i;
        return IndexTuple(std::move(v));
    }

    std::size_t size() const { return idx_.size(); }
    std::size_t operator[](std::size_t i) const { return idx_[i]; }
    std::size_t back() const { return idx_.back(); }
    auto begin() const { return idx_.begin(); }
    auto end() const { return idx_.end(); }
    const std::vector<std::size_t>& indices() const { return idx_; }

    bool contains(std::size_t i) const {
        for (auto v : idx_)
            if (v == i) return true;
        return false;
    }

    friend bool operator==(const IndexTuple&, const IndexTuple&) = default;
    friend auto operator<=>(const IndexTuple&, const IndexTuple&) = default;

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < idx_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(idx_[i]);
        }
        return s + ")";
    }

   private:
    void validate() const {
        if (idx_.empty()) throw DomainError("empty index tuple (order-0 minor)");
        if (idx_[0] == 0) throw DomainError("index tuple is 1-based");
        for (std::size_t i = 1; i < idx_.size(); ++i)
            if (idx_[i] <= idx_[i - 1]) throw DomainError("index tuple " + to_string() + " not strictly increasing");
    }

    std::vector<std::size_t> idx_;
};

/// Advances a strictly increasing 1-based k-combination of [1..n] to its
/// lexicographic successor. Returns false after the last one.
inline bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
    const std::size_t k = c.size();
    std::size_t i = k;
    while (i > 0) {
        --i;
        if (c[i] < n - (k - 1 - i)) {
            ++c[i];
            for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

inline std::vector<std::size_t> first_combination(std::size_t k) {
    std::vector<std::size_t> c(k);
    for (std::size_t i = 0; i < k; ++i) c[i] = i + 1;
    return c;
}

/// Calls f(tuple) on every k-subset of [1..n] in lexicographic order.
template <typename F>
void for_each_combination(std::size_t n, std::size_t k, F&& f) {
    if (k == 0 || k > n) return;
    auto c = first_combination(k);
    do {
        f(static_cast<const std::vector<std::size_t>&>(c));
    } while (next_combination(c, n));
}

/// Dense row-major matrix of exact rationals, at least 1x1.
class RatMatrix {
   public:
    RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
        if (rows == 0 || cols == 0) throw DimensionError("matrix must be at least 1x1");
    }
    RatMatrix(std::initializer_list<std::initializer_list<Rational>> init)
        : RatMatrix(init.size(), init.size() ? init.begin()->size() : 0) {
        std::size_t i = 0;
        for (const auto& row : init) {
            if (row.size() != cols_) throw DimensionError("ragged matrix initializer");
            std::size_t j = 0;
            for (const auto& v : row) data_[i * cols_ + j++] = v;
            ++i;
        }
    }

    static RatMatrix identity(std::size_t n) {
        RatMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    // 0-based element access.
    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    /// A_{I,J} for 1-based tuples; throws on size mismatch or out of range.
    RatMatrix submatrix(const IndexTuple& I, const IndexTuple& J) const {
        if (I.size() != J.size())
            throw DimensionError("row tuple " + I.to_string() + " and column tuple " + J.to_string() +
                                 " differ in size");
        if (I.back() > rows_ || J.back() > cols_)
            throw DimensionError("index out of range for " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                                 " matrix");
        RatMatrix s(I.size(), J.size());
        for (std::size_t a = 0; a < I.size(); ++a)
            for (std::size_t b = 0; b < J.size(); ++b) s(a, b) = (*this)(I[a] - 1, J[b] - 1);
        return s;
    }

    friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

   private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Rational> data_;
};

// Text format: a `rows cols` header, then rows lines of whitespace-separated
// rationals (`p/q` or bare integers).

inline RatMatrix read_matrix(std::istream& in) {
    long long rows = 0, cols = 0;
    if (!(in >> rows >> cols)) throw FormatError("missing `rows cols` header");
    if (rows <= 0 || cols <= 0) throw FormatError("matrix dimensions must be positive");
    RatMatrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            std::string tok;
            if (!(in >> tok))
                throw FormatError("expected " + std::to_string(rows * cols) + " entries, input ended early");
            m(i, j) = Rational::parse(tok);
        }
    std::string extra;
    if (in >> extra) throw FormatError("trailing data after matrix: '" + extra + "'");
    return m;
}

inline RatMatrix parse_matrix(const std::string& text) {
    std::istringstream in(text);
    return read_matrix(in);
}

inline void write_matrix(std::ostream& out, const RatMatrix& m) {
    out << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out << ' ';
            out << m(i, j);
        }
        out << '\n';
    }
}

inline std::string format_matrix(const RatMatrix& m) {
    std::ostringstream out;
    write_matrix(out, m);
    return out.str();
}

}  // namespace tpm
