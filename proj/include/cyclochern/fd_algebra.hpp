#pragma once

// Finite-dimensional unital algebras over the Gaussian rationals, given by
// basis labels and structure constants. Elements are sparse coefficient
// vectors over the basis. Everything is immutable after construction.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cyclochern/error.hpp"
#include "cyclochern/scalar.hpp"

namespace cyclochern {

using BasisIndex = std::uint32_t;

// Sparse vector over basis indices, sorted by index, no explicit zeros.
class Element {
public:
    using Term = std::pair<BasisIndex, ExactScalar>;

    Element() = default;

    static Element basis(BasisIndex i, ExactScalar c = ExactScalar(1))
    {
        Element e;
        if (!c.is_zero())
            e.terms_.emplace_back(i, std::move(c));
        return e;
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    ExactScalar coeff(BasisIndex i) const
    {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), i,
                                   [](const Term& t, BasisIndex k) { return t.first < k; });
        if (it != terms_.end() && it->first == i)
            return it->second;
        return ExactScalar(0);
    }

    void add_term(BasisIndex i, const ExactScalar& c)
    {
        if (c.is_zero())
            return;
        auto it = std::lower_bound(terms_.begin(), terms_.end(), i,
                                   [](const Term& t, BasisIndex k) { return t.first < k; });
        if (it != terms_.end() && it->first == i) {
            it->second += c;
            if (it->second.is_zero())
                terms_.erase(it);
        } else {
            terms_.insert(it, Term(i, c));
        }
    }

    Element& operator+=(const Element& o)
    {
        for (const auto& [i, c] : o.terms_)
            add_term(i, c);
        return *this;
    }
    Element& operator-=(const Element& o)
    {
        for (const auto& [i, c] : o.terms_)
            add_term(i, -c);
        return *this;
    }
    Element& operator*=(const ExactScalar& s)
    {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [i, c] : terms_)
            c *= s;
        return *this;
    }

    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator*(Element a, const ExactScalar& s) { return a *= s; }
    friend Element operator*(const ExactScalar& s, Element a) { return a *= s; }
    Element operator-() const
    {
        Element r = *this;
        for (auto& [i, c] : r.terms_)
            c = -c;
        return r;
    }

    friend bool operator==(const Element& a, const Element& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

private:
    std::vector<Term> terms_;
};

struct ValidationReport {
    // 0-based basis triples (i,j,k) with (e_i e_j) e_k != e_i (e_j e_k)
    std::vector<std::array<BasisIndex, 3>> associativity_failures;
    // basis indices i with 1*e_i != e_i or e_i*1 != e_i
    std::vector<BasisIndex> unit_failures;
    bool valid() const { return associativity_failures.empty() && unit_failures.empty(); }
};

class FDAlgebra {
public:
    FDAlgebra(std::vector<std::string> labels,
              std::vector<Element> structure_table, // row-major, dim*dim entries; (i,j) -> e_i * e_j
              Element unit)
        : labels_(std::move(labels)), table_(std::move(structure_table)), unit_(std::move(unit))
    {
        dim_ = static_cast<BasisIndex>(labels_.size());
        if (dim_ == 0)
            throw ValidationError("algebra must have positive dimension");
        if (table_.size() != static_cast<std::size_t>(dim_) * dim_)
            throw ValidationError("structure table must have dim*dim entries");
    }

    BasisIndex dim() const { return dim_; }
    const std::string& label(BasisIndex i) const { return labels_.at(i); }
    const std::vector<std::string>& labels() const { return labels_; }
    const Element& unit() const { return unit_; }

    const Element& mul_basis(BasisIndex i, BasisIndex j) const
    {
        return table_[static_cast<std::size_t>(i) * dim_ + j];
    }

    Element mul(const Element& a, const Element& b) const
    {
        Element r;
        for (const auto& [i, ca] : a.terms())
            for (const auto& [j, cb] : b.terms()) {
                ExactScalar c = ca * cb;
                for (const auto& [k, ck] : mul_basis(i, j).terms())
                    r.add_term(k, c * ck);
            }
        return r;
    }

    // true iff the unit is exactly the first basis vector; the differential
    // forms machinery requires this normalization
    bool unit_is_first_basis_vector() const
    {
        return unit_ == Element::basis(0);
    }

    ValidationReport validate() const
    {
        ValidationReport rep;
        for (BasisIndex i = 0; i < dim_; ++i) {
            if (mul(unit_, Element::basis(i)) != Element::basis(i) ||
                mul(Element::basis(i), unit_) != Element::basis(i))
                rep.unit_failures.push_back(i);
        }
        for (BasisIndex i = 0; i < dim_; ++i)
            for (BasisIndex j = 0; j < dim_; ++j) {
                const Element& ij = mul_basis(i, j);
                for (BasisIndex k = 0; k < dim_; ++k) {
                    Element lhs = mul(ij, Element::basis(k));
                    Element rhs = mul(Element::basis(i), mul_basis(j, k));
                    if (lhs != rhs)
                        rep.associativity_failures.push_back({i, j, k});
                }
            }
        return rep;
    }

    std::string element_to_string(const Element& a) const
    {
        if (a.is_zero())
            return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [i, c] : a.terms()) {
            if (!first)
                os << " + ";
            os << "(" << c.to_string() << ")*" << label(i);
            first = false;
        }
        return os.str();
    }

private:
    BasisIndex dim_;
    std::vector<std::string> labels_;
    std::vector<Element> table_;
    Element unit_;
};

// Convenience builders used across tests and manifest constructions.

inline FDAlgebra scalar_algebra()
{
    return FDAlgebra({"1"}, {Element::basis(0)}, Element::basis(0));
}

// C[x]/(x^k) with basis {1, x, ..., x^{k-1}}, unit first
inline FDAlgebra truncated_polynomial_algebra(BasisIndex k)
{
    std::vector<std::string> labels;
    for (BasisIndex i = 0; i < k; ++i)
        labels.push_back(i == 0 ? "1" : (i == 1 ? "x" : "x^" + std::to_string(i)));
    std::vector<Element> table(static_cast<std::size_t>(k) * k);
    for (BasisIndex i = 0; i < k; ++i)
        for (BasisIndex j = 0; j < k; ++j)
            table[static_cast<std::size_t>(i) * k + j] =
                (i + j < k) ? Element::basis(i + j) : Element();
    return FDAlgebra(std::move(labels), std::move(table), Element::basis(0));
}

// full matrix algebra M_n(C) on matrix units e_{pq}; the unit is not a basis
// vector for n > 1, callers needing the unit-first convention must adapt
inline FDAlgebra matrix_units_algebra(BasisIndex n)
{
    auto idx = [n](BasisIndex p, BasisIndex q) { return p * n + q; };
    std::vector<std::string> labels(static_cast<std::size_t>(n) * n);
    for (BasisIndex p = 0; p < n; ++p)
        for (BasisIndex q = 0; q < n; ++q)
            labels[idx(p, q)] = "e" + std::to_string(p + 1) + std::to_string(q + 1);
    std::vector<Element> table(static_cast<std::size_t>(n) * n * n * n);
    for (BasisIndex a = 0; a < n * n; ++a)
        for (BasisIndex b = 0; b < n * n; ++b) {
            BasisIndex p = a / n, q = a % n, r = b / n, s = b % n;
            table[static_cast<std::size_t>(a) * n * n + b] =
                (q == r) ? Element::basis(idx(p, s)) : Element();
        }
    Element unit;
    for (BasisIndex p = 0; p < n; ++p)
        unit.add_term(idx(p, p), ExactScalar(1));
    return FDAlgebra(std::move(labels), std::move(table), std::move(unit));
}

} // namespace cyclochern
