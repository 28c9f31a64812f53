#pragma once

// Dense exact linear algebra over Q: reduced row echelon form, nullspace and
// particular solutions. Matrices here are a few hundred columns at most.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "rational.hpp"

namespace braidlift {

class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> data_;
};

struct RowEchelon {
    RationalMatrix reduced;
    std::vector<std::size_t> pivots;  // pivot column of row i, i < rank
    std::size_t rank() const { return pivots.size(); }
};

/// Gauss-Jordan elimination; pivots are normalized to 1 and are the only
/// nonzero entries in their columns. Columns at or beyond `limit` are never
/// chosen as pivots (used for augmented systems).
inline RowEchelon rref(RationalMatrix m, std::optional<std::size_t> limit = std::nullopt) {
    RowEchelon out;
    const std::size_t last = limit ? *limit : m.cols();
    std::size_t row = 0;
    for (std::size_t col = 0; col < last && row < m.rows(); ++col) {
        std::size_t pick = row;
        while (pick < m.rows() && m(pick, col) == 0) ++pick;
        if (pick == m.rows()) continue;
        m.swap_rows(row, pick);
        const Rational inv = 1 / m(row, col);
        for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col) == 0) continue;
            const Rational f = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c) {
                if (m(row, c) != 0) m(r, c) -= f * m(row, c);
            }
        }
        out.pivots.push_back(col);
        ++row;
    }
    out.reduced = std::move(m);
    return out;
}

/// Basis of {v : A v = 0}, returned in reduced echelon form (as rows).
inline std::vector<std::vector<Rational>> nullspace(const RationalMatrix& a) {
    const auto e = rref(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<std::vector<Rational>> raw;
    for (std::size_t f = 0; f < a.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(a.cols());
        v[f] = 1;
        for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, f);
        raw.push_back(std::move(v));
    }
    if (raw.empty()) return {};
    RationalMatrix k(raw.size(), a.cols());
    for (std::size_t r = 0; r < raw.size(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) k(r, c) = raw[r][c];
    const auto ke = rref(std::move(k));
    std::vector<std::vector<Rational>> out;
    for (std::size_t r = 0; r < ke.rank(); ++r) {
        std::vector<Rational> v(a.cols());
        for (std::size_t c = 0; c < a.cols(); ++c) v[c] = ke.reduced(r, c);
        out.push_back(std::move(v));
    }
    return out;
}

/// A particular solution of A x = b with every free variable set to 0, or
/// nullopt when the system is inconsistent.
inline std::optional<std::vector<Rational>> solve(const RationalMatrix& a, const std::vector<Rational>& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("right-hand side length differs from row count");
    RationalMatrix aug(a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
        aug(r, a.cols()) = b[r];
    }
    const auto e = rref(std::move(aug), a.cols());
    for (std::size_t r = e.rank(); r < a.rows(); ++r) {
        if (e.reduced(r, a.cols()) != 0) return std::nullopt;
    }
    std::vector<Rational> x(a.cols());
    for (std::size_t i = 0; i < e.rank(); ++i) x[e.pivots[i]] = e.reduced(i, a.cols());
    return x;
}

}  // namespace braidlift
