#pragma once

// Matrices with entries in an algebra (finite-dimensional or presented).
// These carry the K-theory input data: idempotents e and invertibles g.

#include <cstddef>
#include <optional>
#include <vector>

#include "cyclochern/dense_linalg.hpp"
#include "cyclochern/error.hpp"
#include "cyclochern/fd_algebra.hpp"
#include "cyclochern/presented_algebra.hpp"

namespace cyclochern {

inline Element algebra_mul(const FDAlgebra& a, const Element& x, const Element& y)
{
    return a.mul(x, y);
}
inline Element algebra_mul(const PresentedAlgebra& p, const Element& x, const Element& y)
{
    return p.poly_to_element(p.mul(p.element_to_poly(x), p.element_to_poly(y)));
}
inline Element algebra_unit(const FDAlgebra& a) { return a.unit(); }
inline Element algebra_unit(const PresentedAlgebra&) { return Element::basis(0); }

struct AlgMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<Element> entries; // row-major

    AlgMatrix() = default;
    AlgMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c) {}

    Element& at(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
    const Element& at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }

    bool is_square() const { return rows == cols; }

    friend bool operator==(const AlgMatrix& a, const AlgMatrix& b)
    {
        return a.rows == b.rows && a.cols == b.cols && a.entries == b.entries;
    }
};

template <class Algebra>
AlgMatrix mat_identity(const Algebra& alg, std::size_t n)
{
    AlgMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = algebra_unit(alg);
    return m;
}

inline AlgMatrix mat_add(const AlgMatrix& a, const AlgMatrix& b)
{
    if (a.rows != b.rows || a.cols != b.cols)
        throw DimensionMismatch("matrix sum");
    AlgMatrix r = a;
    for (std::size_t k = 0; k < r.entries.size(); ++k)
        r.entries[k] += b.entries[k];
    return r;
}

inline AlgMatrix mat_sub(const AlgMatrix& a, const AlgMatrix& b)
{
    if (a.rows != b.rows || a.cols != b.cols)
        throw DimensionMismatch("matrix difference");
    AlgMatrix r = a;
    for (std::size_t k = 0; k < r.entries.size(); ++k)
        r.entries[k] -= b.entries[k];
    return r;
}

template <class Algebra>
AlgMatrix mat_mul(const Algebra& alg, const AlgMatrix& a, const AlgMatrix& b)
{
    if (a.cols != b.rows)
        throw DimensionMismatch("matrix product");
    AlgMatrix r(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k) {
            if (a.at(i, k).is_zero())
                continue;
            for (std::size_t j = 0; j < b.cols; ++j) {
                if (b.at(k, j).is_zero())
                    continue;
                r.at(i, j) += algebra_mul(alg, a.at(i, k), b.at(k, j));
            }
        }
    return r;
}

inline AlgMatrix mat_block_sum(const AlgMatrix& a, const AlgMatrix& b)
{
    AlgMatrix r(a.rows + b.rows, a.cols + b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < a.cols; ++j)
            r.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.rows; ++i)
        for (std::size_t j = 0; j < b.cols; ++j)
            r.at(a.rows + i, a.cols + j) = b.at(i, j);
    return r;
}

template <class Algebra>
Element mat_trace(const Algebra&, const AlgMatrix& m)
{
    Element t;
    for (std::size_t i = 0; i < m.rows && i < m.cols; ++i)
        t += m.at(i, i);
    return t;
}

template <class Algebra>
bool is_idempotent(const Algebra& alg, const AlgMatrix& e)
{
    if (!e.is_square())
        throw DimensionMismatch("idempotency check needs a square matrix");
    return mat_mul(alg, e, e) == e;
}

// Exact inverse over a finite-dimensional algebra via the left regular
// representation: solve (g .) h = 1 as a linear system over the scalars,
// then verify both products.
inline AlgMatrix invert(const FDAlgebra& alg, const AlgMatrix& g)
{
    if (!g.is_square())
        throw DimensionMismatch("inverse of non-square matrix");
    const std::size_t k = g.rows;
    const std::size_t d = alg.dim();
    const std::size_t n = k * d;
    DenseMatrix lhs(n, n);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t r = 0; r < k; ++r)
            for (const auto& [a, ca] : g.at(i, r).terms())
                for (BasisIndex s = 0; s < d; ++s)
                    for (const auto& [t, ct] : alg.mul_basis(a, s).terms())
                        lhs.at(i * d + t, r * d + s) += ca * ct;
    DenseMatrix rhs(n, k);
    for (std::size_t c = 0; c < k; ++c)
        for (const auto& [t, ct] : alg.unit().terms())
            rhs.at(c * d + t, c) = ct;
    auto sol = dense_solve(lhs, rhs);
    if (!sol)
        throw NotInvertible("regular representation is singular");
    AlgMatrix h(k, k);
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < k; ++c)
            for (BasisIndex s = 0; s < d; ++s)
                h.at(r, c).add_term(s, sol->at(r * d + s, c));
    AlgMatrix id = mat_identity(alg, k);
    if (!(mat_mul(alg, g, h) == id) || !(mat_mul(alg, h, g) == id))
        throw NotInvertible("solution fails the two-sided check");
    return h;
}

// Over a presented algebra a supplied candidate is verified; without one,
// only matrices of monomial entries built from declared inverses can be
// inverted automatically.
inline AlgMatrix invert(const PresentedAlgebra& alg, const AlgMatrix& g,
                        const std::optional<AlgMatrix>& candidate = std::nullopt)
{
    if (!g.is_square())
        throw DimensionMismatch("inverse of non-square matrix");
    AlgMatrix id = mat_identity(alg, g.rows);
    if (candidate) {
        if (mat_mul(alg, g, *candidate) == id && mat_mul(alg, *candidate, g) == id)
            return *candidate;
        throw NotInvertible("candidate fails verification");
    }
    if (g.rows == 1 && g.at(0, 0).term_count() == 1) {
        const auto& [idx, c] = g.at(0, 0).terms().front();
        Monomial m = alg.monomial_at(idx);
        Monomial inv(alg.generator_count());
        for (std::size_t gi = 0; gi < alg.generator_count(); ++gi) {
            if (m.exp[gi] == 0)
                continue;
            int partner = alg.declared_inverse(gi);
            if (partner < 0)
                throw NotVerifiable("no declared inverse for generator " +
                                    alg.generator_name(gi));
            inv.exp[static_cast<std::size_t>(partner)] =
                static_cast<std::uint16_t>(inv.exp[static_cast<std::size_t>(partner)] + m.exp[gi]);
        }
        AlgMatrix h(1, 1);
        h.at(0, 0) = Element::basis(alg.monomial_index(inv), c.inverse());
        if (mat_mul(alg, g, h) == id && mat_mul(alg, h, g) == id)
            return h;
        throw NotInvertible("declared-inverse candidate fails verification");
    }
    throw NotVerifiable("presented algebra: supply a candidate inverse");
}

} // namespace cyclochern
