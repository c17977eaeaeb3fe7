#pragma once

// Small dense exact linear algebra over the Gaussian rationals: row
// reduction, rank, solving, nullspace, inverse. Intended for matrices with
// at most a few thousand entries; the sparse engine handles the big ones.

#include <cstddef>
#include <optional>
#include <vector>

#include "cyclochern/error.hpp"
#include "cyclochern/scalar.hpp"

namespace cyclochern {

class DenseMatrix {
public:
    DenseMatrix() : rows_(0), cols_(0) {}
    DenseMatrix(std::size_t r, std::size_t c) : rows_(r), cols_(c), a_(r * c) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    ExactScalar& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const ExactScalar& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    static DenseMatrix identity(std::size_t n)
    {
        DenseMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m.at(i, i) = ExactScalar(1);
        return m;
    }

    DenseMatrix operator*(const DenseMatrix& o) const
    {
        if (cols_ != o.rows_)
            throw DimensionMismatch("dense matrix product");
        DenseMatrix r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const ExactScalar& v = at(i, k);
                if (v.is_zero())
                    continue;
                for (std::size_t j = 0; j < o.cols_; ++j)
                    r.at(i, j) += v * o.at(k, j);
            }
        return r;
    }

    friend bool operator==(const DenseMatrix& a, const DenseMatrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

private:
    std::size_t rows_, cols_;
    std::vector<ExactScalar> a_;
};

namespace detail {

// In-place reduction to row echelon form; returns pivot columns.
inline std::vector<std::size_t> row_echelon(DenseMatrix& m)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && m.at(p, col).is_zero())
            ++p;
        if (p == m.rows())
            continue;
        if (p != row)
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(m.at(p, j), m.at(row, j));
        ExactScalar inv = m.at(row, col).inverse();
        for (std::size_t j = col; j < m.cols(); ++j)
            m.at(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col).is_zero())
                continue;
            ExactScalar f = m.at(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                m.at(i, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace detail

inline std::size_t dense_rank(DenseMatrix m)
{
    return detail::row_echelon(m).size();
}

// Solve A X = B exactly; nullopt when inconsistent. When the solution is not
// unique the free variables are set to zero.
inline std::optional<DenseMatrix> dense_solve(const DenseMatrix& a, const DenseMatrix& b)
{
    if (a.rows() != b.rows())
        throw DimensionMismatch("dense solve");
    DenseMatrix aug(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j)
            aug.at(i, j) = a.at(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j)
            aug.at(i, a.cols() + j) = b.at(i, j);
    }
    auto pivots = detail::row_echelon(aug);
    // inconsistent iff a pivot lands in the augmented block
    for (std::size_t p : pivots)
        if (p >= a.cols())
            return std::nullopt;
    DenseMatrix x(a.cols(), b.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r)
        for (std::size_t j = 0; j < b.cols(); ++j)
            x.at(pivots[r], j) = aug.at(r, a.cols() + j);
    return x;
}

// Basis of the right nullspace, one column vector per basis element.
inline std::vector<std::vector<ExactScalar>> dense_nullspace(DenseMatrix m)
{
    std::size_t n = m.cols();
    auto pivots = detail::row_echelon(m);
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : pivots)
        is_pivot[p] = true;
    std::vector<std::vector<ExactScalar>> basis;
    for (std::size_t free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col])
            continue;
        std::vector<ExactScalar> v(n);
        v[free_col] = ExactScalar(1);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -m.at(r, free_col);
        basis.push_back(std::move(v));
    }
    return basis;
}

inline std::optional<DenseMatrix> dense_inverse(const DenseMatrix& a)
{
    if (a.rows() != a.cols())
        throw DimensionMismatch("inverse of non-square matrix");
    auto x = dense_solve(a, DenseMatrix::identity(a.rows()));
    if (!x)
        return std::nullopt;
    // a may have full row rank but deficient column rank only if non-square;
    // for square matrices a solution to A X = I is the two-sided inverse
    if (!(*x * a == DenseMatrix::identity(a.rows())))
        return std::nullopt;
    return x;
}

} // namespace cyclochern
