#pragma once

// Exact change of basis for finite-dimensional algebras, and the adapter
// that moves the unit into the first basis slot (the normalization the form
// machinery requires). Conversions are carried along so elements, matrices
// and linear functionals can cross between the two coordinate systems.

#include <string>
#include <vector>

#include "cyclochern/alg_matrix.hpp"
#include "cyclochern/dense_linalg.hpp"
#include "cyclochern/fd_algebra.hpp"

namespace cyclochern {

struct AdaptedAlgebra {
    FDAlgebra algebra;       // the same algebra in the new coordinates
    DenseMatrix new_to_old;  // columns are the new basis vectors in old coordinates
    DenseMatrix old_to_new;

    Element to_adapted(const Element& e) const
    {
        Element out;
        std::size_t d = old_to_new.rows();
        for (std::size_t i = 0; i < d; ++i) {
            ExactScalar c;
            for (const auto& [j, v] : e.terms())
                c += old_to_new.at(i, j) * v;
            out.add_term(static_cast<BasisIndex>(i), c);
        }
        return out;
    }

    Element from_adapted(const Element& e) const
    {
        Element out;
        std::size_t d = new_to_old.rows();
        for (std::size_t i = 0; i < d; ++i) {
            ExactScalar c;
            for (const auto& [j, v] : e.terms())
                c += new_to_old.at(i, j) * v;
            out.add_term(static_cast<BasisIndex>(i), c);
        }
        return out;
    }

    AlgMatrix to_adapted(const AlgMatrix& m) const
    {
        AlgMatrix out(m.rows, m.cols);
        for (std::size_t k = 0; k < m.entries.size(); ++k)
            out.entries[k] = to_adapted(m.entries[k]);
        return out;
    }

    // pull a linear functional (coefficients over old basis) back to the new basis
    std::vector<ExactScalar> functional_to_adapted(const std::vector<ExactScalar>& f) const
    {
        std::size_t d = new_to_old.rows();
        std::vector<ExactScalar> out(d);
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t i = 0; i < d; ++i)
                out[j] += f[i] * new_to_old.at(i, j);
        return out;
    }
};

// Rebuild the algebra on the basis given by the columns of new_basis.
inline AdaptedAlgebra change_of_basis(const FDAlgebra& a, const DenseMatrix& new_basis,
                                      std::vector<std::string> labels = {})
{
    std::size_t d = a.dim();
    if (new_basis.rows() != d || new_basis.cols() != d)
        throw DimensionMismatch("change of basis must be square of the algebra dimension");
    auto inv = dense_inverse(new_basis);
    if (!inv)
        throw ValidationError("change of basis is singular");
    if (labels.empty())
        for (std::size_t i = 0; i < d; ++i)
            labels.push_back("v" + std::to_string(i));

    AdaptedAlgebra tmp{scalar_algebra(), new_basis, *inv};
    auto old_elem = [&](std::size_t i) {
        Element e;
        for (std::size_t r = 0; r < d; ++r)
            e.add_term(static_cast<BasisIndex>(r), new_basis.at(r, i));
        return e;
    };
    std::vector<Element> table(d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            table[i * d + j] = tmp.to_adapted(a.mul(old_elem(i), old_elem(j)));
    Element unit = tmp.to_adapted(a.unit());
    FDAlgebra adapted(std::move(labels), std::move(table), std::move(unit));
    return AdaptedAlgebra{std::move(adapted), new_basis, *inv};
}

// Adapt so the unit becomes the first basis vector: new basis is the unit
// followed by the old basis vectors minus the first old coordinate the unit
// touches. The identity adaptation is returned when nothing needs doing.
inline AdaptedAlgebra with_unit_first(const FDAlgebra& a)
{
    std::size_t d = a.dim();
    if (a.unit_is_first_basis_vector()) {
        DenseMatrix id = DenseMatrix::identity(d);
        AdaptedAlgebra out{a, id, id};
        return out;
    }
    std::size_t drop = d;
    for (const auto& [i, c] : a.unit().terms()) {
        drop = i;
        break;
    }
    if (drop == d)
        throw ValidationError("algebra unit is zero");
    DenseMatrix nb(d, d);
    for (const auto& [i, c] : a.unit().terms())
        nb.at(i, 0) = c;
    std::size_t col = 1;
    std::vector<std::string> labels = {"1"};
    for (std::size_t j = 0; j < d; ++j) {
        if (j == drop)
            continue;
        nb.at(j, col) = ExactScalar(1);
        labels.push_back(a.label(static_cast<BasisIndex>(j)));
        ++col;
    }
    return change_of_basis(a, nb, std::move(labels));
}

} // namespace cyclochern
