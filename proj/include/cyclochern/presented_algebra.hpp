#pragma once

// Finitely generated commutative algebras presented by generators and a
// confluent monomial rewrite system, with an optional declared inverse per
// generator and a hard degree cap. Monomial order is graded lexicographic
// with later-declared generators ranking higher, so a rule like
// z^2 -> 1 - x^2 - y^2 strictly decreases the order.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "cyclochern/error.hpp"
#include "cyclochern/fd_algebra.hpp"
#include "cyclochern/scalar.hpp"

namespace cyclochern {

struct Monomial {
    std::vector<std::uint16_t> exp; // one exponent per generator

    explicit Monomial(std::size_t ngen = 0) : exp(ngen, 0) {}

    unsigned degree() const { return std::accumulate(exp.begin(), exp.end(), 0u); }
    bool is_unit() const { return degree() == 0; }

    bool divides(const Monomial& m) const
    {
        for (std::size_t g = 0; g < exp.size(); ++g)
            if (exp[g] > m.exp[g])
                return false;
        return true;
    }

    Monomial operator*(const Monomial& o) const
    {
        Monomial r(exp.size());
        for (std::size_t g = 0; g < exp.size(); ++g)
            r.exp[g] = static_cast<std::uint16_t>(exp[g] + o.exp[g]);
        return r;
    }

    // quotient, caller guarantees divisibility
    Monomial operator/(const Monomial& o) const
    {
        Monomial r(exp.size());
        for (std::size_t g = 0; g < exp.size(); ++g)
            r.exp[g] = static_cast<std::uint16_t>(exp[g] - o.exp[g]);
        return r;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b)
    {
        Monomial r(a.exp.size());
        for (std::size_t g = 0; g < a.exp.size(); ++g)
            r.exp[g] = std::max(a.exp[g], b.exp[g]);
        return r;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exp == b.exp; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

    // graded lex, comparing the last generator's exponent first
    friend bool operator<(const Monomial& a, const Monomial& b)
    {
        unsigned da = a.degree(), db = b.degree();
        if (da != db)
            return da < db;
        for (std::size_t g = a.exp.size(); g-- > 0;)
            if (a.exp[g] != b.exp[g])
                return a.exp[g] < b.exp[g];
        return false;
    }
};

// polynomial = finite sum of monomials with exact coefficients
using Poly = std::map<Monomial, ExactScalar>;

inline void poly_add_term(Poly& p, const Monomial& m, const ExactScalar& c)
{
    if (c.is_zero())
        return;
    auto [it, inserted] = p.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            p.erase(it);
    }
}

inline Poly poly_scale(const Poly& p, const ExactScalar& s)
{
    Poly r;
    for (const auto& [m, c] : p)
        poly_add_term(r, m, c * s);
    return r;
}

inline Poly poly_add(const Poly& a, const Poly& b)
{
    Poly r = a;
    for (const auto& [m, c] : b)
        poly_add_term(r, m, c);
    return r;
}

struct RewriteRule {
    Monomial lhs;
    Poly rhs;
};

struct GeneratorSpec {
    std::string name;
    // index of the generator declared as a two-sided inverse, or -1
    int inverse_of = -1;
};

class PresentedAlgebra {
public:
    PresentedAlgebra(std::vector<GeneratorSpec> generators, std::vector<RewriteRule> rules,
                     unsigned degree_cap)
        : gens_(std::move(generators)), rules_(std::move(rules)), cap_(degree_cap)
    {
        // declared inverses contribute the rule g * g^-1 -> 1
        for (std::size_t g = 0; g < gens_.size(); ++g) {
            int h = gens_[g].inverse_of;
            if (h < 0)
                continue;
            if (h >= static_cast<int>(gens_.size()) || static_cast<std::size_t>(h) == g)
                throw ValidationError("bad inverse declaration for generator " + gens_[g].name);
            if (static_cast<std::size_t>(h) < g)
                continue; // the pair was already handled from the other side
            Monomial l(gens_.size());
            l.exp[g] = 1;
            l.exp[static_cast<std::size_t>(h)] = 1;
            Poly one;
            poly_add_term(one, Monomial(gens_.size()), ExactScalar(1));
            rules_.push_back({std::move(l), std::move(one)});
        }
        check_rules_decrease();
        check_local_confluence();
        dict_.push_back(Monomial(gens_.size()));
        dict_index_.emplace(dict_[0], 0);
    }

    std::size_t generator_count() const { return gens_.size(); }
    const std::string& generator_name(std::size_t g) const { return gens_[g].name; }
    int generator_index(const std::string& name) const
    {
        for (std::size_t g = 0; g < gens_.size(); ++g)
            if (gens_[g].name == name)
                return static_cast<int>(g);
        return -1;
    }
    int declared_inverse(std::size_t g) const { return gens_[g].inverse_of; }
    unsigned degree_cap() const { return cap_; }
    const std::vector<RewriteRule>& rules() const { return rules_; }

    Monomial generator_monomial(std::size_t g) const
    {
        Monomial m(gens_.size());
        m.exp[g] = 1;
        return m;
    }

    // unique rewrite normal form; throws DegreeCapExceeded when any monomial
    // encountered along the way exceeds the cap
    Poly normal_form(const Poly& p) const
    {
        Poly work = p;
        for (;;) {
            const Monomial* red = nullptr;
            const RewriteRule* rule = nullptr;
            for (const auto& [m, c] : work) {
                if (m.degree() > cap_)
                    throw DegreeCapExceeded("monomial of degree " + std::to_string(m.degree()));
                for (const auto& r : rules_)
                    if (r.lhs.divides(m)) {
                        red = &m;
                        rule = &r;
                        break;
                    }
                if (red)
                    break;
            }
            if (!red)
                return work;
            Monomial q = *red / rule->lhs;
            ExactScalar c = work.at(*red);
            work.erase(*red);
            for (const auto& [rm, rc] : rule->rhs) {
                Monomial t = q * rm;
                if (t.degree() > cap_)
                    throw DegreeCapExceeded("monomial of degree " + std::to_string(t.degree()));
                poly_add_term(work, t, c * rc);
            }
        }
    }

    Poly mul(const Poly& a, const Poly& b) const
    {
        Poly r;
        for (const auto& [ma, ca] : a)
            for (const auto& [mb, cb] : b) {
                Monomial m = ma * mb;
                if (m.degree() > cap_)
                    throw DegreeCapExceeded("product monomial of degree " +
                                            std::to_string(m.degree()));
                poly_add_term(r, m, ca * cb);
            }
        return normal_form(r);
    }

    Poly one() const
    {
        Poly p;
        poly_add_term(p, Monomial(gens_.size()), ExactScalar(1));
        return p;
    }

    // --- dictionary view: normal-form monomials get stable indices, index 0
    // is the unit monomial; this is a memo cache, content depends only on
    // which monomials were encountered, never on ordering of results ---

    BasisIndex monomial_index(const Monomial& m) const
    {
        auto it = dict_index_.find(m);
        if (it != dict_index_.end())
            return it->second;
        auto idx = static_cast<BasisIndex>(dict_.size());
        dict_.push_back(m);
        dict_index_.emplace(m, idx);
        return idx;
    }
    const Monomial& monomial_at(BasisIndex i) const { return dict_.at(i); }

    Element poly_to_element(const Poly& p) const
    {
        Element e;
        for (const auto& [m, c] : p)
            e.add_term(monomial_index(m), c);
        return e;
    }
    Poly element_to_poly(const Element& e) const
    {
        Poly p;
        for (const auto& [i, c] : e.terms())
            poly_add_term(p, monomial_at(i), c);
        return p;
    }

    Element mul_basis(BasisIndex i, BasisIndex j) const
    {
        auto key = (static_cast<std::uint64_t>(i) << 32) | j;
        auto it = mul_memo_.find(key);
        if (it != mul_memo_.end())
            return it->second;
        Monomial m = monomial_at(i) * monomial_at(j);
        Poly p;
        poly_add_term(p, m, ExactScalar(1));
        if (m.degree() > cap_)
            throw DegreeCapExceeded("product monomial of degree " + std::to_string(m.degree()));
        Element e = poly_to_element(normal_form(p));
        mul_memo_.emplace(key, e);
        return e;
    }

    std::string monomial_to_string(const Monomial& m) const
    {
        if (m.is_unit())
            return "1";
        std::ostringstream os;
        bool first = true;
        for (std::size_t g = 0; g < gens_.size(); ++g) {
            if (m.exp[g] == 0)
                continue;
            if (!first)
                os << "*";
            os << gens_[g].name;
            if (m.exp[g] > 1)
                os << "^" << m.exp[g];
            first = false;
        }
        return os.str();
    }

    std::string label(BasisIndex i) const { return monomial_to_string(monomial_at(i)); }

    std::string poly_to_string(const Poly& p) const
    {
        if (p.empty())
            return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : p) {
            if (!first)
                os << " + ";
            os << "(" << c.to_string() << ")*" << monomial_to_string(m);
            first = false;
        }
        return os.str();
    }

private:
    void check_rules_decrease() const
    {
        for (const auto& r : rules_) {
            if (r.lhs.is_unit())
                throw ValidationError("rewrite rule with unit left-hand side");
            for (const auto& [m, c] : r.rhs)
                if (!(m < r.lhs))
                    throw ValidationError("rewrite rule does not decrease the monomial order: " +
                                          monomial_to_string(r.lhs) + " -> " +
                                          monomial_to_string(m));
        }
    }

    // local confluence on all critical pairs whose overlap fits the cap
    void check_local_confluence() const
    {
        for (std::size_t a = 0; a < rules_.size(); ++a)
            for (std::size_t b = a; b < rules_.size(); ++b) {
                Monomial l = Monomial::lcm(rules_[a].lhs, rules_[b].lhs);
                if (l.degree() > cap_)
                    continue;
                Poly pa, pb;
                for (const auto& [m, c] : rules_[a].rhs)
                    poly_add_term(pa, (l / rules_[a].lhs) * m, c);
                for (const auto& [m, c] : rules_[b].rhs)
                    poly_add_term(pb, (l / rules_[b].lhs) * m, c);
                if (normal_form(pa) != normal_form(pb))
                    throw NotConfluent("critical pair at " + monomial_to_string(l));
            }
    }

    std::vector<GeneratorSpec> gens_;
    std::vector<RewriteRule> rules_;
    unsigned cap_;

    mutable std::vector<Monomial> dict_;
    mutable std::map<Monomial, BasisIndex> dict_index_;
    mutable std::map<std::uint64_t, Element> mul_memo_;
};

// --- stock presentations used throughout the tests and manifests ---

// coordinate ring of the 2-sphere: generators x, y, z with z^2 -> 1-x^2-y^2
inline PresentedAlgebra sphere_algebra(unsigned degree_cap = 16)
{
    std::vector<GeneratorSpec> gens = {{"x", -1}, {"y", -1}, {"z", -1}};
    Monomial z2(3);
    z2.exp[2] = 2;
    Poly rhs;
    poly_add_term(rhs, Monomial(3), ExactScalar(1));
    Monomial x2(3), y2(3);
    x2.exp[0] = 2;
    y2.exp[1] = 2;
    poly_add_term(rhs, x2, ExactScalar(-1));
    poly_add_term(rhs, y2, ExactScalar(-1));
    return PresentedAlgebra(std::move(gens), {{z2, rhs}}, degree_cap);
}

// Laurent polynomials C[u, u^-1] with the declared inverse pair
inline PresentedAlgebra laurent_algebra(unsigned degree_cap = 24)
{
    std::vector<GeneratorSpec> gens = {{"u", 1}, {"uinv", 0}};
    return PresentedAlgebra(std::move(gens), {}, degree_cap);
}

// free commutative polynomial ring on the given generator names
inline PresentedAlgebra polynomial_ring(const std::vector<std::string>& names,
                                        unsigned degree_cap = 16)
{
    std::vector<GeneratorSpec> gens;
    for (const auto& n : names)
        gens.push_back({n, -1});
    return PresentedAlgebra(std::move(gens), {}, degree_cap);
}

} // namespace cyclochern
