#pragma once

// Exact rank of sparse matrices over the Gaussian rationals.
//
// Strategy: split the matrix into connected components (rows joined through
// shared columns), then eliminate per component with Markowitz-style
// pivoting. Row updates are division-postponed (new = p*row - b*pivot_row,
// never a mid-update division); growth is controlled by exact content
// removal per row and by preferring unit pivots. Rows are pre-scaled to
// Gaussian integers on machine words with overflow detection; any overflow
// reruns the component with full-precision scalars.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <vector>

#include "cyclochern/error.hpp"
#include "cyclochern/scalar.hpp"

namespace cyclochern {

struct SparseTriplet {
    std::uint32_t row;
    std::uint32_t col;
    ExactScalar value;
};

namespace sparse_detail {

struct OverflowSignal {
};

// Gaussian integer on machine words; operations check for overflow.
struct GInt {
    std::int64_t re = 0, im = 0;
    bool is_zero() const { return re == 0 && im == 0; }
    bool is_unit() const
    {
        return (im == 0 && (re == 1 || re == -1)) || (re == 0 && (im == 1 || im == -1));
    }
};

inline std::int64_t narrow_checked(__int128 v)
{
    if (v > std::numeric_limits<std::int64_t>::max() ||
        v < std::numeric_limits<std::int64_t>::min())
        throw OverflowSignal{};
    return static_cast<std::int64_t>(v);
}

struct GIntOps {
    using Scalar = GInt;
    static bool is_zero(const GInt& v) { return v.is_zero(); }
    static bool is_cheap_pivot(const GInt& v) { return v.is_unit(); }

    // p*a - b*c
    static GInt mulsub(const GInt& p, const GInt& a, const GInt& b, const GInt& c)
    {
        __int128 re = static_cast<__int128>(p.re) * a.re - static_cast<__int128>(p.im) * a.im -
                      static_cast<__int128>(b.re) * c.re + static_cast<__int128>(b.im) * c.im;
        __int128 im = static_cast<__int128>(p.re) * a.im + static_cast<__int128>(p.im) * a.re -
                      static_cast<__int128>(b.re) * c.im - static_cast<__int128>(b.im) * c.re;
        return {narrow_checked(re), narrow_checked(im)};
    }

    // divide the row by the gcd of all components
    static void normalize_row(std::vector<std::pair<std::uint32_t, GInt>>& row)
    {
        std::uint64_t g = 0;
        for (const auto& [c, v] : row) {
            g = std::gcd(g, static_cast<std::uint64_t>(v.re < 0 ? -v.re : v.re));
            g = std::gcd(g, static_cast<std::uint64_t>(v.im < 0 ? -v.im : v.im));
            if (g == 1)
                return;
        }
        if (g <= 1)
            return;
        auto gi = static_cast<std::int64_t>(g);
        for (auto& [c, v] : row) {
            v.re /= gi;
            v.im /= gi;
        }
    }
};

struct ExactOps {
    using Scalar = ExactScalar;
    static bool is_zero(const ExactScalar& v) { return v.is_zero(); }
    static bool is_cheap_pivot(const ExactScalar& v) { return v.norm2() == 1; }
    static ExactScalar mulsub(const ExactScalar& p, const ExactScalar& a, const ExactScalar& b,
                              const ExactScalar& c)
    {
        return p * a - b * c;
    }
    // scale so the first entry is 1, keeping magnitudes tame
    static void normalize_row(std::vector<std::pair<std::uint32_t, ExactScalar>>& row)
    {
        if (row.empty())
            return;
        ExactScalar inv = row.front().second.inverse();
        for (auto& [c, v] : row)
            v *= inv;
    }
};

// Elimination on one component; rows are sorted sparse vectors over local
// column ids. Returns the rank.
template <class Ops>
std::uint64_t eliminate(std::vector<std::vector<std::pair<std::uint32_t, typename Ops::Scalar>>> rows,
                        std::uint32_t ncols)
{
    using S = typename Ops::Scalar;
    using Row = std::vector<std::pair<std::uint32_t, S>>;

    const std::uint32_t nrows = static_cast<std::uint32_t>(rows.size());
    std::vector<std::uint32_t> col_count(ncols, 0);
    std::vector<std::vector<std::uint32_t>> col_rows(ncols);
    for (std::uint32_t r = 0; r < nrows; ++r)
        for (const auto& [c, v] : rows[r]) {
            ++col_count[c];
            col_rows[c].push_back(r);
        }

    std::vector<bool> active(nrows, true);

    // rows bucketed by current length, refreshed lazily
    const std::size_t max_bucket = 48;
    std::vector<std::vector<std::uint32_t>> buckets(max_bucket + 1);
    auto bucket_of = [&](std::size_t len) { return std::min(len, max_bucket); };
    for (std::uint32_t r = 0; r < nrows; ++r) {
        if (rows[r].empty())
            active[r] = false;
        else
            buckets[bucket_of(rows[r].size())].push_back(r);
    }

    auto row_coeff = [&](std::uint32_t r, std::uint32_t c) -> const S* {
        const Row& row = rows[r];
        auto it = std::lower_bound(row.begin(), row.end(), c,
                                   [](const auto& t, std::uint32_t k) { return t.first < k; });
        if (it != row.end() && it->first == c)
            return &it->second;
        return nullptr;
    };

    std::uint64_t rank = 0;
    Row merged;

    for (;;) {
        // collect candidate rows from the shortest non-stale buckets
        std::vector<std::uint32_t> candidates;
        for (std::size_t b = 1; b <= max_bucket && candidates.size() < 12; ++b) {
            auto& bk = buckets[b];
            std::size_t w = 0;
            for (std::size_t k = 0; k < bk.size(); ++k) {
                std::uint32_t r = bk[k];
                if (!active[r] || rows[r].empty())
                    continue;
                std::size_t nb = bucket_of(rows[r].size());
                if (nb != b) {
                    buckets[nb].push_back(r);
                    continue;
                }
                bk[w++] = r;
                if (candidates.size() < 12 &&
                    std::find(candidates.begin(), candidates.end(), r) == candidates.end())
                    candidates.push_back(r);
            }
            bk.resize(w);
        }
        if (candidates.empty())
            break;

        // Markowitz score (row_len-1)*(col_count-1), unit pivots preferred
        std::uint32_t piv_row = 0, piv_col = 0;
        std::uint64_t best_score = std::numeric_limits<std::uint64_t>::max();
        bool best_cheap = false, found = false;
        for (std::uint32_t r : candidates) {
            for (const auto& [c, v] : rows[r]) {
                std::uint64_t score = static_cast<std::uint64_t>(rows[r].size() - 1) *
                                      (col_count[c] > 0 ? col_count[c] - 1 : 0);
                bool cheap = Ops::is_cheap_pivot(v);
                bool better;
                if (!found)
                    better = true;
                else if (cheap != best_cheap)
                    better = cheap && score <= 4 * best_score + 4;
                else
                    better = score < best_score;
                if (better) {
                    piv_row = r;
                    piv_col = c;
                    best_score = score;
                    best_cheap = cheap;
                    found = true;
                }
            }
        }

        const S piv_val = *row_coeff(piv_row, piv_col);
        Row piv = std::move(rows[piv_row]);
        rows[piv_row].clear();
        active[piv_row] = false;
        for (const auto& [c, v] : piv)
            --col_count[c];

        auto victims = std::move(col_rows[piv_col]);
        col_rows[piv_col].clear();
        for (std::uint32_t r : victims) {
            if (!active[r])
                continue;
            const S* bp = row_coeff(r, piv_col);
            if (!bp)
                continue;
            S b = *bp;
            Row& row = rows[r];
            for (const auto& [c, v] : row)
                --col_count[c];
            merged.clear();
            merged.reserve(row.size() + piv.size());
            auto it1 = row.begin(), e1 = row.end();
            auto it2 = piv.begin(), e2 = piv.end();
            while (it1 != e1 || it2 != e2) {
                if (it2 == e2 || (it1 != e1 && it1->first < it2->first)) {
                    S nv = Ops::mulsub(piv_val, it1->second, b, S{});
                    if (!Ops::is_zero(nv))
                        merged.emplace_back(it1->first, std::move(nv));
                    ++it1;
                } else if (it1 == e1 || it2->first < it1->first) {
                    S nv = Ops::mulsub(piv_val, S{}, b, it2->second);
                    if (!Ops::is_zero(nv))
                        merged.emplace_back(it2->first, std::move(nv));
                    ++it2;
                } else {
                    S nv = Ops::mulsub(piv_val, it1->second, b, it2->second);
                    if (!Ops::is_zero(nv))
                        merged.emplace_back(it1->first, std::move(nv));
                    ++it1;
                    ++it2;
                }
            }
            Ops::normalize_row(merged);
            row = std::move(merged);
            merged = Row{};
            for (const auto& [c, v] : row) {
                ++col_count[c];
                if (c != piv_col)
                    col_rows[c].push_back(r);
            }
            if (row.empty())
                active[r] = false;
            else
                buckets[bucket_of(row.size())].push_back(r);
        }

        ++rank;
    }
    return rank;
}

} // namespace sparse_detail

// Rank of the matrix assembled from triplets (duplicates are summed).
inline std::uint64_t exact_rank(std::uint64_t nrows, std::uint64_t ncols,
                                std::vector<SparseTriplet> triplets)
{
    (void)ncols;
    if (triplets.empty())
        return 0;
    std::sort(triplets.begin(), triplets.end(), [](const SparseTriplet& a, const SparseTriplet& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });
    std::vector<SparseTriplet> flat;
    flat.reserve(triplets.size());
    for (auto& t : triplets) {
        if (!flat.empty() && flat.back().row == t.row && flat.back().col == t.col)
            flat.back().value += t.value;
        else
            flat.push_back(std::move(t));
    }
    std::erase_if(flat, [](const SparseTriplet& t) { return t.value.is_zero(); });
    if (flat.empty())
        return 0;

    // connected components: union rows through shared columns
    std::vector<std::uint32_t> parent(nrows);
    std::iota(parent.begin(), parent.end(), 0u);
    std::vector<std::uint32_t> uf_rank(nrows, 0);
    auto find = [&](std::uint32_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    auto unite = [&](std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a == b)
            return;
        if (uf_rank[a] < uf_rank[b])
            std::swap(a, b);
        parent[b] = a;
        if (uf_rank[a] == uf_rank[b])
            ++uf_rank[a];
    };
    {
        std::vector<std::uint32_t> order(flat.size());
        std::iota(order.begin(), order.end(), 0u);
        std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
            return flat[a].col < flat[b].col;
        });
        for (std::size_t k = 1; k < order.size(); ++k)
            if (flat[order[k]].col == flat[order[k - 1]].col)
                unite(flat[order[k]].row, flat[order[k - 1]].row);
    }

    std::map<std::uint32_t, std::vector<const SparseTriplet*>> comps;
    for (const auto& t : flat)
        comps[find(t.row)].push_back(&t);

    std::uint64_t total = 0;
    for (auto& [root, items] : comps) {
        std::vector<std::uint32_t> cols;
        cols.reserve(items.size());
        for (const auto* t : items)
            cols.push_back(t->col);
        std::sort(cols.begin(), cols.end());
        cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
        auto col_id = [&](std::uint32_t c) {
            return static_cast<std::uint32_t>(
                std::lower_bound(cols.begin(), cols.end(), c) - cols.begin());
        };

        std::vector<std::vector<std::pair<std::uint32_t, ExactScalar>>> rows;
        for (std::size_t k = 0; k < items.size();) {
            std::size_t j = k;
            while (j < items.size() && items[j]->row == items[k]->row)
                ++j;
            std::vector<std::pair<std::uint32_t, ExactScalar>> row;
            row.reserve(j - k);
            for (std::size_t q = k; q < j; ++q)
                row.emplace_back(col_id(items[q]->col), items[q]->value);
            std::sort(row.begin(), row.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            rows.push_back(std::move(row));
            k = j;
        }

        // fast path: scale each row to Gaussian integers on machine words
        bool fast_ok = true;
        std::vector<std::vector<std::pair<std::uint32_t, sparse_detail::GInt>>> irows;
        irows.reserve(rows.size());
        for (const auto& row : rows) {
            mpz_class l(1);
            for (const auto& [c, v] : row)
                l = lcm(l, lcm(v.re().get_den(), v.im().get_den()));
            std::vector<std::pair<std::uint32_t, sparse_detail::GInt>> irow;
            irow.reserve(row.size());
            for (const auto& [c, v] : row) {
                mpz_class re = v.re().get_num() * (l / v.re().get_den());
                mpz_class im = v.im().get_num() * (l / v.im().get_den());
                if (!re.fits_slong_p() || !im.fits_slong_p()) {
                    fast_ok = false;
                    break;
                }
                irow.emplace_back(c, sparse_detail::GInt{re.get_si(), im.get_si()});
            }
            if (!fast_ok)
                break;
            irows.push_back(std::move(irow));
        }

        std::uint64_t r = 0;
        bool done = false;
        if (fast_ok) {
            try {
                r = sparse_detail::eliminate<sparse_detail::GIntOps>(
                    std::move(irows), static_cast<std::uint32_t>(cols.size()));
                done = true;
            } catch (const sparse_detail::OverflowSignal&) {
                done = false;
            }
        }
        if (!done)
            r = sparse_detail::eliminate<sparse_detail::ExactOps>(
                std::move(rows), static_cast<std::uint32_t>(cols.size()));
        total += r;
    }
    return total;
}

} // namespace cyclochern
