#pragma once

// Hochschild and periodic cyclic homology dimensions of finite-dimensional
// algebras, by exact sparse rank computations on the form complexes.
//
// Hochschild: hh[n] = dim Omega^n - rank(b_n) - rank(b_{n+1}).
//
// Periodic theory: the 2-periodic complex is a product over all form
// degrees, so single truncations overcount. We work with the total
// complexes Tot_n = Omega^n + Omega^{n-2} + ..., differential D = B - b
// with B dropped out of the top summand (an honest complex), and report at
// truncation t the rank of the map induced on homology by the projection
// T_t -> T_{t-2} that forgets the two top summands. Stabilization is three
// consecutive truncations agreeing; it is reported, never assumed.
//
// rank of the induced map H(source) -> H(target) comes from one sparse rank:
//   rank [[D_src, 0], [proj, -D_tgt_in]] - rank D_src - rank D_tgt_in.

#include <cstdint>
#include <map>
#include <tuple>
#include <vector>

#include "cyclochern/error.hpp"
#include "cyclochern/fd_algebra.hpp"
#include "cyclochern/forms.hpp"
#include "cyclochern/sparse_rank.hpp"

namespace cyclochern {

struct HomologyLimits {
    // refuse rank computations whose column count exceeds this
    std::uint64_t max_columns = 6u << 20;
};

namespace homology_detail {

inline std::uint32_t checked32(std::uint64_t v)
{
    if (v > 0xffffffffull)
        throw Error("form space too large for the sparse engine");
    return static_cast<std::uint32_t>(v);
}

template <class Emit>
void stream_operator(const FDAlgebra& alg, const OmegaSpace& space, FormOp op, int degree,
                     Emit&& emit)
{
    std::uint64_t cols = space.dim_omega(degree);
    std::map<std::uint64_t, ExactScalar> acc;
    for (std::uint64_t code = 0; code < cols; ++code) {
        acc.clear();
        FormKey key = space.decode(code, degree);
        auto sink = [&](const ExactScalar& c, FormKey out) {
            auto [it, ins] = acc.emplace(space.encode(out), c);
            if (!ins)
                it->second += c;
        };
        switch (op) {
        case FormOp::d:
            expand_d(alg, key, sink);
            break;
        case FormOp::b:
            expand_b(alg, key, sink);
            break;
        case FormOp::kappa:
            expand_kappa(alg, key, sink);
            break;
        case FormOp::B:
            expand_B(alg, key, sink);
            break;
        }
        for (const auto& [row, v] : acc)
            if (!v.is_zero())
                emit(code, row, v);
    }
}

// dimensions and offsets of Tot_n = sum_p Omega^{n-2p}, highest degree first
struct TotLayout {
    std::vector<int> degrees;
    std::vector<std::uint64_t> offsets;
    std::uint64_t total = 0;

    TotLayout() = default;
    TotLayout(const OmegaSpace& space, int n)
    {
        for (int j = n; j >= 0; j -= 2) {
            degrees.push_back(j);
            offsets.push_back(total);
            total += space.dim_omega(j);
        }
    }

    std::uint64_t offset_of_degree(int j) const
    {
        for (std::size_t p = 0; p < degrees.size(); ++p)
            if (degrees[p] == j)
                return offsets[p];
        throw Error("degree not present in total complex");
    }
};

// triplets of D_n : Tot_n -> Tot_{n-1}, shifted by the given offsets
inline void append_D_triplets(const FDAlgebra& alg, const OmegaSpace& space, int n,
                              std::uint64_t row_off, std::uint64_t col_off,
                              std::vector<SparseTriplet>& out)
{
    if (n <= 0)
        return;
    TotLayout src(space, n), tgt(space, n - 1);
    for (std::size_t p = 0; p < src.degrees.size(); ++p) {
        int j = src.degrees[p];
        std::uint64_t co = col_off + src.offsets[p];
        if (j >= 1) { // -b block into Omega^{j-1}
            std::uint64_t ro = row_off + tgt.offset_of_degree(j - 1);
            stream_operator(alg, space, FormOp::b, j,
                            [&](std::uint64_t c, std::uint64_t r, const ExactScalar& v) {
                                out.push_back({checked32(ro + r), checked32(co + c), -v});
                            });
        }
        if (p >= 1) { // +B block into Omega^{j+1}, dropped from the top summand
            std::uint64_t ro = row_off + tgt.offset_of_degree(j + 1);
            stream_operator(alg, space, FormOp::B, j,
                            [&](std::uint64_t c, std::uint64_t r, const ExactScalar& v) {
                                out.push_back({checked32(ro + r), checked32(co + c), v});
                            });
        }
    }
}

} // namespace homology_detail

struct HochschildReport {
    std::vector<std::uint64_t> omega_dims; // degrees 0..N
    std::vector<std::uint64_t> b_ranks;    // rank of b_n, degrees 0..N+1 (b_0 = 0)
    std::vector<std::uint64_t> hh_dims;    // degrees 0..N
};

// pre: unit-first algebra
inline HochschildReport hochschild_dims(const FDAlgebra& alg, int n_max,
                                        const HomologyLimits& lim = {})
{
    OmegaSpace space(alg);
    HochschildReport rep;
    rep.b_ranks.assign(static_cast<std::size_t>(n_max) + 2, 0);
    for (int n = 1; n <= n_max + 1; ++n) {
        std::uint64_t cols = space.dim_omega(n);
        if (cols > lim.max_columns)
            throw Error("hochschild_dims: degree " + std::to_string(n) + " exceeds column budget");
        std::vector<SparseTriplet> t;
        homology_detail::stream_operator(
            alg, space, FormOp::b, n, [&](std::uint64_t c, std::uint64_t r, const ExactScalar& v) {
                t.push_back({homology_detail::checked32(r), homology_detail::checked32(c), v});
            });
        rep.b_ranks[static_cast<std::size_t>(n)] =
            exact_rank(space.dim_omega(n - 1), cols, std::move(t));
    }
    for (int n = 0; n <= n_max; ++n) {
        std::uint64_t dim = space.dim_omega(n);
        rep.omega_dims.push_back(dim);
        std::uint64_t killed = rep.b_ranks[static_cast<std::size_t>(n)] +
                               rep.b_ranks[static_cast<std::size_t>(n) + 1];
        rep.hh_dims.push_back(dim - killed);
    }
    return rep;
}

struct HPReport {
    std::uint64_t even = 0, odd = 0;
    bool stabilized_even = false, stabilized_odd = false;
    bool stabilized = false;
    int truncation = 0;
    // (t, projection rank even, projection rank odd)
    std::vector<std::tuple<int, std::uint64_t, std::uint64_t>> history;
    std::map<int, std::uint64_t> D_ranks; // rank of D_n per total degree
};

// pre: unit-first algebra, N >= 2
inline HPReport hp_dims(const FDAlgebra& alg, int n_trunc, const HomologyLimits& lim = {})
{
    if (n_trunc < 2)
        throw ValidationError("hp_dims needs truncation >= 2");
    OmegaSpace space(alg);
    HPReport rep;
    rep.truncation = n_trunc;

    std::map<int, std::uint64_t> tot_dim;
    auto tot = [&](int n) {
        auto it = tot_dim.find(n);
        if (it != tot_dim.end())
            return it->second;
        homology_detail::TotLayout l(space, n);
        tot_dim[n] = l.total;
        return l.total;
    };

    auto rank_D = [&](int n) -> std::uint64_t {
        if (n <= 0)
            return 0;
        auto it = rep.D_ranks.find(n);
        if (it != rep.D_ranks.end())
            return it->second;
        if (tot(n) > lim.max_columns)
            throw Error("hp_dims: total complex at degree " + std::to_string(n) +
                        " exceeds column budget");
        std::vector<SparseTriplet> t;
        homology_detail::append_D_triplets(alg, space, n, 0, 0, t);
        std::uint64_t r = exact_rank(tot(n - 1), tot(n), std::move(t));
        rep.D_ranks[n] = r;
        return r;
    };

    // rank of H(Tot_src) -> H(Tot_src-4) induced by forgetting two summands
    auto projection_rank = [&](int n_src) -> std::uint64_t {
        int n_tgt = n_src - 4;
        if (n_tgt < 0)
            throw Error("projection target below degree 0");
        std::uint64_t r_src = rank_D(n_src);
        std::uint64_t r_tgt_in = rank_D(n_tgt + 1);
        homology_detail::TotLayout src(space, n_src), tgt(space, n_tgt);
        std::uint64_t rows0 = tot(n_src - 1);
        std::uint64_t cols0 = tot(n_src);
        std::vector<SparseTriplet> t;
        // block [[D_src, 0], [proj, -D_tgt_in]]
        homology_detail::append_D_triplets(alg, space, n_src, 0, 0, t);
        homology_detail::append_D_triplets(alg, space, n_tgt + 1, rows0, cols0, t);
        // negate the second diagonal block
        for (auto& tr : t)
            if (tr.row >= rows0)
                tr.value = -tr.value;
        for (std::size_t p = 0; p < tgt.degrees.size(); ++p) {
            int j = tgt.degrees[p];
            std::uint64_t n_j = space.dim_omega(j);
            std::uint64_t co = src.offset_of_degree(j);
            std::uint64_t ro = rows0 + tgt.offsets[p];
            for (std::uint64_t k = 0; k < n_j; ++k)
                t.push_back({homology_detail::checked32(ro + k),
                             homology_detail::checked32(co + k), ExactScalar(1)});
        }
        std::uint64_t big = exact_rank(rows0 + tot(n_tgt), cols0 + tot(n_tgt + 1), std::move(t));
        return big - r_src - r_tgt_in;
    };

    int t_lo = std::max(2, n_trunc - 2);
    for (int t = t_lo; t <= n_trunc; ++t) {
        std::uint64_t r_ev = projection_rank(2 * t);
        std::uint64_t r_od = projection_rank(2 * t + 1);
        rep.history.emplace_back(t, r_ev, r_od);
    }
    rep.even = std::get<1>(rep.history.back());
    rep.odd = std::get<2>(rep.history.back());
    if (rep.history.size() >= 3) {
        const auto& h0 = rep.history[rep.history.size() - 3];
        const auto& h1 = rep.history[rep.history.size() - 2];
        rep.stabilized_even = (std::get<1>(h0) == std::get<1>(h1) && std::get<1>(h1) == rep.even);
        rep.stabilized_odd = (std::get<2>(h0) == std::get<2>(h1) && std::get<2>(h1) == rep.odd);
    }
    rep.stabilized = rep.stabilized_even && rep.stabilized_odd;
    return rep;
}

// dimension of the commutator quotient A/[A,A], an independent cross-check
// for hh_dims[0]
inline std::uint64_t commutator_quotient_dim(const FDAlgebra& alg)
{
    std::uint32_t d = alg.dim();
    std::vector<SparseTriplet> t;
    std::uint32_t col = 0;
    for (std::uint32_t i = 0; i < d; ++i)
        for (std::uint32_t j = 0; j < d; ++j) {
            Element comm = alg.mul_basis(i, j) - alg.mul_basis(j, i);
            for (const auto& [k, c] : comm.terms())
                t.push_back({k, col, c});
            ++col;
        }
    return d - exact_rank(d, col, std::move(t));
}

} // namespace cyclochern
