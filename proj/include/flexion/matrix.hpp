#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "flexion/rational.hpp"

namespace flexion {

using RatVector = std::vector<Rational>;

/// Dense matrix of exact rationals, row-major.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static RatMatrix identity(std::size_t n) {
        RatMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
        return m;
    }

    /// Builds a matrix from a list of rows; all rows must have equal length.
    static RatMatrix from_rows(const std::vector<RatVector>& rows) {
        const std::size_t c = rows.empty() ? 0 : rows.front().size();
        RatMatrix m(rows.size(), c);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != c) throw DomainError("ragged matrix rows");
            for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    /// Builds a matrix whose columns are the given vectors.
    static RatMatrix from_columns(const std::vector<RatVector>& cols, std::size_t rows) {
        RatMatrix m(rows, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != rows) throw DomainError("ragged matrix columns");
            for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
        }
        return m;
    }

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    [[nodiscard]] RatVector row(std::size_t i) const {
        return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
    }

    [[nodiscard]] RatVector apply(std::span<const Rational> v) const {
        if (v.size() != cols_) throw DomainError("matrix/vector size mismatch");
        RatVector out(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (!(*this)(i, j).is_zero() && !v[j].is_zero()) out[i] += (*this)(i, j) * v[j];
        return out;
    }

    [[nodiscard]] RatMatrix transposed() const {
        RatMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

struct Echelon {
    RatMatrix form;
    std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form by exact Gauss-Jordan elimination.
inline Echelon rref(RatMatrix m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m(p, c).is_zero()) ++p;
        if (p == rows) continue;
        if (p != r)
            for (std::size_t j = c; j < cols; ++j) std::swap(m(p, j), m(r, j));
        const Rational inv = Rational(1) / m(r, c);
        for (std::size_t j = c; j < cols; ++j)
            if (!m(r, j).is_zero()) m(r, j) *= inv;
        std::vector<std::size_t> nz;
        for (std::size_t j = c + 1; j < cols; ++j)
            if (!m(r, j).is_zero()) nz.push_back(j);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            const Rational f = m(i, c);
            m(i, c) = Rational(0);
            for (std::size_t j : nz) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const RatMatrix& m) { return rref(m).pivots.size(); }

/// Scales a nonzero vector to coprime integers with first nonzero entry positive.
inline RatVector canonical_integer(RatVector v) {
    mpz_class l = 1;
    for (const auto& x : v)
        if (!x.is_zero()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.den().get_mpz_t());
    mpz_class g = 0;
    for (const auto& x : v) {
        if (x.is_zero()) continue;
        mpz_class n = x.num() * (l / x.den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    }
    if (g == 0) return v;
    int lead = 0;
    for (const auto& x : v)
        if (!x.is_zero()) {
            lead = x.sign();
            break;
        }
    const Rational scale = Rational(mpq_class(l * lead, g));
    for (auto& x : v) x *= scale;
    return v;
}

/// Basis of the right null space, one vector per free column in column order,
/// each in canonical integer form.
inline std::vector<RatVector> kernel_basis(const RatMatrix& m) {
    const Echelon e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<RatVector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        RatVector v(m.cols());
        v[f] = Rational(1);
        for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.form(i, f);
        basis.push_back(canonical_integer(std::move(v)));
    }
    return basis;
}

/// One solution of m·x = target with all free variables zero, or nullopt when
/// the target lies outside the column span.
inline std::optional<RatVector> solve(const RatMatrix& m, std::span<const Rational> target) {
    if (target.size() != m.rows()) throw DomainError("solve: target size mismatch");
    RatMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = target[i];
    }
    const Echelon e = rref(std::move(aug));
    RatVector x(m.cols());
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
        if (e.pivots[i] == m.cols()) return std::nullopt;
        x[e.pivots[i]] = e.form(i, m.cols());
    }
    return x;
}

/// Canonical basis of the span of the given vectors: nonzero rows of the RREF,
/// each scaled to canonical integer form.
inline std::vector<RatVector> row_space_basis(const std::vector<RatVector>& vectors) {
    if (vectors.empty()) return {};
    const Echelon e = rref(RatMatrix::from_rows(vectors));
    std::vector<RatVector> out;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) out.push_back(canonical_integer(e.form.row(i)));
    return out;
}

} // namespace flexion
