#pragma once

// The universal differential graded algebra of an algebra A, as sparse data.
//
// A basis n-form is a tuple (i0, j1, ..., jn): the element e_{i0} d e_{j1}
// ... d e_{jn}, where index 0 is the unit of A and the d-slots j_k range
// over the complement of the unit (the quotient A / C*1 realized by
// dropping the unit coordinate). The four operators
//
//   d (degree +1), the Hochschild boundary b (degree -1, b(w da) =
//   (-1)^|w| [w, a], zero in degree 0), the Karoubi operator kappa
//   (degree 0, kappa(w da) = (-1)^|w| da*w), and B = sum kappa^i d
//
// act term-wise through the expansions below; for finite-dimensional
// algebras they are additionally materialized as sparse matrices per degree
// and cached.

#include <cstdint>
#include <functional>
#include <map>
#include <unordered_map>
#include <vector>

#include "cyclochern/error.hpp"
#include "cyclochern/fd_algebra.hpp"
#include "cyclochern/presented_algebra.hpp"
#include "cyclochern/scalar.hpp"
#include "cyclochern/sparse_rank.hpp"

namespace cyclochern {

using FormKey = std::vector<BasisIndex>; // size = degree + 1

inline int form_degree(const FormKey& k) { return static_cast<int>(k.size()) - 1; }

// ---------------------------------------------------------------------------
// term-wise operator expansions, generic over the coefficient algebra
// ---------------------------------------------------------------------------

template <class Algebra, class Emit>
void expand_d(const Algebra&, const FormKey& key, Emit&& emit)
{
    if (key[0] == 0)
        return; // d1 = 0
    FormKey out;
    out.reserve(key.size() + 1);
    out.push_back(0);
    out.insert(out.end(), key.begin(), key.end());
    emit(ExactScalar(1), std::move(out));
}

// b(a0 da1 ... dan) = sum_{i<n} (-1)^i a0 da1 ... d(a_i a_{i+1}) ... dan
//                     + (-1)^n (a_n a_0) da1 ... da_{n-1}
// (the one-step expansion of (-1)^{n-1}[a0 da1...da_{n-1}, a_n])
template <class Algebra, class Emit>
void expand_b(const Algebra& alg, const FormKey& key, Emit&& emit)
{
    int n = form_degree(key);
    if (n == 0)
        return;
    // face 0: product lands in the leading slot, no unit projection
    for (const auto& [k, c] : alg.mul_basis(key[0], key[1]).terms()) {
        FormKey out;
        out.reserve(key.size() - 1);
        out.push_back(k);
        out.insert(out.end(), key.begin() + 2, key.end());
        emit(c, std::move(out));
    }
    // inner faces: product lands in a d-slot, unit components vanish
    for (int i = 1; i < n; ++i) {
        ExactScalar sign((i % 2) ? -1 : 1);
        for (const auto& [k, c] : alg.mul_basis(key[i], key[i + 1]).terms()) {
            if (k == 0)
                continue;
            FormKey out;
            out.reserve(key.size() - 1);
            out.insert(out.end(), key.begin(), key.begin() + i);
            out.push_back(k);
            out.insert(out.end(), key.begin() + i + 2, key.end());
            emit(sign * c, std::move(out));
        }
    }
    // last face: (-1)^n a_n a_0 into the leading slot
    ExactScalar sign((n % 2) ? -1 : 1);
    for (const auto& [k, c] : alg.mul_basis(key[n], key[0]).terms()) {
        FormKey out;
        out.reserve(key.size() - 1);
        out.push_back(k);
        out.insert(out.end(), key.begin() + 1, key.end() - 1);
        emit(sign * c, std::move(out));
    }
}

// kappa(a0 da1...dan) = (-1)^{n-1} [ d(a_n a_0) da1...da_{n-1}
//                                    - a_n da_0 da_1...da_{n-1} ]
template <class Algebra, class Emit>
void expand_kappa(const Algebra& alg, const FormKey& key, Emit&& emit)
{
    int n = form_degree(key);
    if (n == 0) {
        emit(ExactScalar(1), key);
        return;
    }
    ExactScalar sign(((n - 1) % 2) ? -1 : 1);
    for (const auto& [k, c] : alg.mul_basis(key[n], key[0]).terms()) {
        if (k == 0)
            continue;
        FormKey out;
        out.reserve(key.size());
        out.push_back(0);
        out.push_back(k);
        out.insert(out.end(), key.begin() + 1, key.end() - 1);
        emit(sign * c, std::move(out));
    }
    if (key[0] != 0) {
        FormKey out;
        out.reserve(key.size());
        out.push_back(key[n]);
        out.push_back(key[0]);
        out.insert(out.end(), key.begin() + 1, key.end() - 1);
        emit(-sign, std::move(out));
    }
}

// B = sum_{i=0..n} kappa^i d. On the unit-led image of d, kappa is a signed
// rotation, so B(a0 da1...dan) is the n+1 signed cyclic rotations of
// d a0 d a1 ... d an.
template <class Algebra, class Emit>
void expand_B(const Algebra&, const FormKey& key, Emit&& emit)
{
    int n = form_degree(key);
    if (key[0] == 0)
        return;
    for (int i = 0; i <= n; ++i) {
        ExactScalar sign(((n * i) % 2) ? -1 : 1);
        FormKey out;
        out.reserve(key.size() + 1);
        out.push_back(0);
        for (int t = 0; t <= n; ++t)
            out.push_back(key[(n + 1 - i + t) % (n + 1)]);
        emit(sign, std::move(out));
    }
}

// ---------------------------------------------------------------------------
// graded chains
// ---------------------------------------------------------------------------

// Degree-indexed sparse vectors in the form bases, each degree carrying an
// integer power of 2*pi*i as its normalization tag.
class GradedChain {
public:
    using Component = std::map<FormKey, ExactScalar>;

    bool is_zero() const
    {
        for (const auto& [d, comp] : comps_)
            if (!comp.empty())
                return false;
        return true;
    }

    std::vector<int> degrees() const
    {
        std::vector<int> ds;
        for (const auto& [d, comp] : comps_)
            if (!comp.empty())
                ds.push_back(d);
        return ds;
    }

    const Component& component(int deg) const
    {
        static const Component empty;
        auto it = comps_.find(deg);
        return it == comps_.end() ? empty : it->second;
    }

    int twopi_power(int deg) const
    {
        auto it = twopi_.find(deg);
        return it == twopi_.end() ? 0 : it->second;
    }

    void set_twopi_power(int deg, int p)
    {
        if (p == 0)
            twopi_.erase(deg);
        else
            twopi_[deg] = p;
    }

    void add_term(int deg, const FormKey& key, const ExactScalar& c, int twopi = 0)
    {
        if (c.is_zero())
            return;
        auto it = comps_.find(deg);
        if (it != comps_.end() && !it->second.empty()) {
            if (twopi_power(deg) != twopi)
                throw NormalizationMismatch("degree " + std::to_string(deg));
        } else {
            set_twopi_power(deg, twopi);
        }
        auto& comp = comps_[deg];
        auto [pos, inserted] = comp.emplace(key, c);
        if (!inserted) {
            pos->second += c;
            if (pos->second.is_zero())
                comp.erase(pos);
        }
    }

    GradedChain& operator+=(const GradedChain& o)
    {
        for (const auto& [d, comp] : o.comps_)
            for (const auto& [k, c] : comp)
                add_term(d, k, c, o.twopi_power(d));
        return *this;
    }
    GradedChain& operator-=(const GradedChain& o)
    {
        for (const auto& [d, comp] : o.comps_)
            for (const auto& [k, c] : comp)
                add_term(d, k, -c, o.twopi_power(d));
        return *this;
    }
    GradedChain& operator*=(const ExactScalar& s)
    {
        for (auto& [d, comp] : comps_) {
            if (s.is_zero()) {
                comp.clear();
                continue;
            }
            for (auto& [k, c] : comp)
                c *= s;
        }
        return *this;
    }
    friend GradedChain operator+(GradedChain a, const GradedChain& b) { return a += b; }
    friend GradedChain operator-(GradedChain a, const GradedChain& b) { return a -= b; }
    friend GradedChain operator*(GradedChain a, const ExactScalar& s) { return a *= s; }

    friend bool operator==(const GradedChain& a, const GradedChain& b)
    {
        auto da = a.degrees(), db = b.degrees();
        if (da != db)
            return false;
        for (int d : da)
            if (a.component(d) != b.component(d) || a.twopi_power(d) != b.twopi_power(d))
                return false;
        return true;
    }

    void prune()
    {
        for (auto it = comps_.begin(); it != comps_.end();) {
            if (it->second.empty()) {
                twopi_.erase(it->first);
                it = comps_.erase(it);
            } else
                ++it;
        }
    }

private:
    std::map<int, Component> comps_;
    std::map<int, int> twopi_;
};

enum class FormOp { d, b, kappa, B };

struct ApplyOptions {
    int degree_cap = 1 << 20;
    bool allow_truncation = false;
};

struct ApplyOutcome {
    GradedChain chain;
    std::vector<int> truncated_degrees; // source degrees whose image fell past the cap
};

template <class Algebra>
ApplyOutcome apply_operator(const Algebra& alg, FormOp op, const GradedChain& c,
                            const ApplyOptions& opt = {})
{
    ApplyOutcome out;
    for (int deg : c.degrees()) {
        int target = deg;
        if (op == FormOp::d || op == FormOp::B)
            target = deg + 1;
        else if (op == FormOp::b)
            target = deg - 1;
        if (target > opt.degree_cap) {
            if (!opt.allow_truncation)
                throw DegreeCapExceeded("operator image at degree " + std::to_string(target));
            out.truncated_degrees.push_back(deg);
            continue;
        }
        int tp = c.twopi_power(deg);
        auto emit = [&](const ExactScalar& co, FormKey key) {
            out.chain.add_term(target, key, co, tp);
        };
        for (const auto& [key, coef] : c.component(deg)) {
            auto scaled = [&](const ExactScalar& co, FormKey key) { emit(coef * co, std::move(key)); };
            switch (op) {
            case FormOp::d:
                expand_d(alg, key, scaled);
                break;
            case FormOp::b:
                expand_b(alg, key, scaled);
                break;
            case FormOp::kappa:
                expand_kappa(alg, key, scaled);
                break;
            case FormOp::B:
                expand_B(alg, key, scaled);
                break;
            }
        }
    }
    out.chain.prune();
    return out;
}

template <class Algebra>
GradedChain apply_b(const Algebra& alg, const GradedChain& c)
{
    return apply_operator(alg, FormOp::b, c).chain;
}
template <class Algebra>
GradedChain apply_kappa(const Algebra& alg, const GradedChain& c)
{
    return apply_operator(alg, FormOp::kappa, c).chain;
}
template <class Algebra>
GradedChain apply_d(const Algebra& alg, const GradedChain& c)
{
    return apply_operator(alg, FormOp::d, c).chain;
}
template <class Algebra>
ApplyOutcome apply_B(const Algebra& alg, const GradedChain& c, const ApplyOptions& opt = {})
{
    return apply_operator(alg, FormOp::B, c, opt);
}

// ---------------------------------------------------------------------------
// enumerated bases and cached operator matrices for FD algebras
// ---------------------------------------------------------------------------

// Basis enumeration of Omega^n A for a finite-dimensional A with the unit as
// first basis vector: codes run in lexicographic (i0, j1, ..., jn) order.
class OmegaSpace {
public:
    explicit OmegaSpace(const FDAlgebra& a) : alg_(a), dim_(a.dim())
    {
        if (!a.unit_is_first_basis_vector())
            throw UnitNotBasisVector();
    }

    const FDAlgebra& algebra() const { return alg_; }
    BasisIndex dim_algebra() const { return dim_; }

    std::uint64_t dim_omega(int n) const
    {
        if (n < 0)
            return 0;
        if (dim_ == 1)
            return n == 0 ? 1 : 0;
        std::uint64_t size = dim_;
        for (int k = 0; k < n; ++k) {
            std::uint64_t next = size * (dim_ - 1);
            if (next / (dim_ - 1) != size)
                throw Error("form space dimension overflows 64 bits");
            size = next;
        }
        return size;
    }

    std::uint64_t encode(const FormKey& key) const
    {
        std::uint64_t code = key[0];
        for (std::size_t t = 1; t < key.size(); ++t)
            code = code * (dim_ - 1) + (key[t] - 1);
        return code;
    }

    FormKey decode(std::uint64_t code, int n) const
    {
        FormKey key(static_cast<std::size_t>(n) + 1);
        for (int t = n; t >= 1; --t) {
            key[static_cast<std::size_t>(t)] = static_cast<BasisIndex>(code % (dim_ - 1) + 1);
            code /= (dim_ - 1);
        }
        key[0] = static_cast<BasisIndex>(code);
        return key;
    }

private:
    const FDAlgebra& alg_;
    BasisIndex dim_;
};

// Sparse matrix of an operator between two form degrees, columns indexed by
// the source basis codes.
struct OperatorMatrix {
    int source_degree = 0;
    int target_degree = 0;
    std::uint64_t rows = 0, cols = 0;
    std::vector<std::vector<std::pair<std::uint64_t, ExactScalar>>> columns;
};

class OmegaOperators {
public:
    explicit OmegaOperators(const FDAlgebra& a) : space_(a) {}

    const OmegaSpace& space() const { return space_; }

    const OperatorMatrix& matrix(FormOp op, int degree) const
    {
        auto key = std::make_pair(op, degree);
        auto it = cache_.find(key);
        if (it != cache_.end())
            return it->second;
        return cache_.emplace(key, build(op, degree)).first->second;
    }

private:
    OperatorMatrix build(FormOp op, int n) const
    {
        const FDAlgebra& alg = space_.algebra();
        OperatorMatrix m;
        m.source_degree = n;
        m.target_degree = (op == FormOp::b) ? n - 1 : (op == FormOp::kappa ? n : n + 1);
        m.cols = space_.dim_omega(n);
        m.rows = m.target_degree < 0 ? 0 : space_.dim_omega(m.target_degree);
        m.columns.resize(m.cols);
        if (m.rows == 0)
            return m;
        std::map<std::uint64_t, ExactScalar> acc;
        for (std::uint64_t code = 0; code < m.cols; ++code) {
            acc.clear();
            FormKey key = space_.decode(code, n);
            auto emit = [&](const ExactScalar& c, FormKey out) {
                auto [it, ins] = acc.emplace(space_.encode(out), c);
                if (!ins)
                    it->second += c;
            };
            switch (op) {
            case FormOp::d:
                expand_d(alg, key, emit);
                break;
            case FormOp::b:
                expand_b(alg, key, emit);
                break;
            case FormOp::kappa:
                expand_kappa(alg, key, emit);
                break;
            case FormOp::B:
                expand_B(alg, key, emit);
                break;
            }
            auto& col = m.columns[code];
            for (const auto& [r, v] : acc)
                if (!v.is_zero())
                    col.emplace_back(r, v);
        }
        return m;
    }

    OmegaSpace space_;
    mutable std::map<std::pair<FormOp, int>, OperatorMatrix> cache_;
};

// ---------------------------------------------------------------------------
// mixed complex identity verification (streaming, no matrices kept)
// ---------------------------------------------------------------------------

struct MixedIdentityReport {
    struct PerDegree {
        int degree = 0;
        bool b_squared_zero = true;
        bool B_squared_zero = true;
        bool anticommutator_zero = true;
    };
    std::vector<PerDegree> per_degree;
    bool all_hold() const
    {
        for (const auto& p : per_degree)
            if (!(p.b_squared_zero && p.B_squared_zero && p.anticommutator_zero))
                return false;
        return true;
    }
};

// Checks b^2 = B^2 = bB + Bb = 0 applied to every basis form of each degree
// <= max_degree. Streams column by column so only one expansion is alive at
// a time; suitable for bases far too large to hold as matrices.
inline MixedIdentityReport verify_mixed_identities(const FDAlgebra& alg, int max_degree)
{
    OmegaSpace space(alg);
    MixedIdentityReport rep;
    using Acc = std::map<FormKey, ExactScalar>;
    auto accumulate = [](Acc& acc, const ExactScalar& c, const FormKey& k) {
        auto [it, ins] = acc.emplace(k, c);
        if (!ins) {
            it->second += c;
            if (it->second.is_zero())
                acc.erase(it);
        }
    };
    for (int n = 0; n <= max_degree; ++n) {
        MixedIdentityReport::PerDegree pd;
        pd.degree = n;
        std::uint64_t count = space.dim_omega(n);
        for (std::uint64_t code = 0; code < count; ++code) {
            FormKey key = space.decode(code, n);
            Acc bb, BB, mix;
            expand_b(alg, key, [&](const ExactScalar& c1, FormKey k1) {
                expand_b(alg, k1, [&](const ExactScalar& c2, FormKey k2) {
                    accumulate(bb, c1 * c2, k2);
                });
                expand_B(alg, k1, [&](const ExactScalar& c2, FormKey k2) {
                    accumulate(mix, c1 * c2, k2);
                });
            });
            expand_B(alg, key, [&](const ExactScalar& c1, FormKey k1) {
                expand_B(alg, k1, [&](const ExactScalar& c2, FormKey k2) {
                    accumulate(BB, c1 * c2, k2);
                });
                expand_b(alg, k1, [&](const ExactScalar& c2, FormKey k2) {
                    accumulate(mix, c1 * c2, k2);
                });
            });
            if (!bb.empty())
                pd.b_squared_zero = false;
            if (!BB.empty())
                pd.B_squared_zero = false;
            if (!mix.empty())
                pd.anticommutator_zero = false;
        }
        rep.per_degree.push_back(pd);
    }
    return rep;
}

} // namespace cyclochern
