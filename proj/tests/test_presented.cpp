#include <gtest/gtest.h>

#include "cyclochern/presented_algebra.hpp"

using namespace cyclochern;

namespace {

Poly mono(const PresentedAlgebra& a, const std::string& gens_word, ExactScalar c = ExactScalar(1))
{
    // gens_word like "zz" or "xxy": one letter per generator name match
    Monomial m(a.generator_count());
    for (char ch : gens_word) {
        int g = a.generator_index(std::string(1, ch));
        if (g < 0)
            throw std::runtime_error("bad generator letter");
        ++m.exp[static_cast<std::size_t>(g)];
    }
    Poly p;
    poly_add_term(p, m, c);
    return p;
}

} // namespace

TEST(presented, sphere_z_squared_rewrites)
{
    auto s = sphere_algebra();
    Poly z2 = mono(s, "zz");
    Poly nf = s.normal_form(z2);
    Poly expected = poly_add(mono(s, ""), poly_add(poly_scale(mono(s, "xx"), ExactScalar(-1)),
                                                   poly_scale(mono(s, "yy"), ExactScalar(-1))));
    EXPECT_EQ(nf, expected);
}

TEST(presented, truncated_square_is_zero)
{
    // C[x]/(x^2) as a presentation
    Monomial x2(1);
    x2.exp[0] = 2;
    PresentedAlgebra a({{"x", -1}}, {{x2, Poly{}}}, 8);
    EXPECT_TRUE(a.normal_form(mono(a, "xx")).empty());
}

TEST(presented, laurent_declared_inverse)
{
    auto l = laurent_algebra();
    Poly uu = l.mul(mono(l, "u"), Poly{{l.generator_monomial(1), ExactScalar(1)}});
    EXPECT_EQ(uu, l.one());
}

TEST(presented, normal_form_is_idempotent_and_linear)
{
    auto s = sphere_algebra();
    // deterministic sample of polynomials
    std::vector<Poly> samples = {
        mono(s, "zz"), mono(s, "xzz", ExactScalar(3)), poly_add(mono(s, "zzzz"), mono(s, "xy")),
        poly_add(mono(s, "yzz", ExactScalar(1, 2)), mono(s, "z", ExactScalar(-2)))};
    for (const auto& p : samples) {
        Poly n1 = s.normal_form(p);
        EXPECT_EQ(s.normal_form(n1), n1);
    }
    for (const auto& p : samples)
        for (const auto& q : samples) {
            Poly lhs = s.normal_form(poly_add(p, poly_scale(q, ExactScalar(5))));
            Poly rhs = poly_add(s.normal_form(p), poly_scale(s.normal_form(q), ExactScalar(5)));
            EXPECT_EQ(lhs, rhs);
        }
}

TEST(presented, degree_cap_is_a_hard_error)
{
    auto s = sphere_algebra(4);
    EXPECT_THROW(s.mul(mono(s, "xxx"), mono(s, "xx")), DegreeCapExceeded);
}

TEST(presented, non_confluent_rules_rejected)
{
    // x^2 -> y and x*y -> 1 have the critical pair x^2 y: via the first rule
    // y*y, via the second x; the normal forms differ.
    Monomial x2(2), xy(2);
    x2.exp[0] = 2;
    xy.exp[0] = 1;
    xy.exp[1] = 1;
    Poly y;
    Monomial my(2);
    my.exp[1] = 1;
    poly_add_term(y, my, ExactScalar(1));
    Poly one;
    poly_add_term(one, Monomial(2), ExactScalar(1));
    EXPECT_THROW(PresentedAlgebra({{"x", -1}, {"y", -1}}, {{x2, y}, {xy, one}}, 8), NotConfluent);
}

TEST(presented, rules_must_decrease_order)
{
    Monomial x(1);
    x.exp[0] = 1;
    Poly x2;
    Monomial mx2(1);
    mx2.exp[0] = 2;
    poly_add_term(x2, mx2, ExactScalar(1));
    EXPECT_THROW(PresentedAlgebra({{"x", -1}}, {{x, x2}}, 8), ValidationError);
}

TEST(presented, dictionary_round_trip)
{
    auto s = sphere_algebra();
    Poly p = s.normal_form(poly_add(mono(s, "xz"), mono(s, "zz")));
    Element e = s.poly_to_element(p);
    EXPECT_EQ(s.element_to_poly(e), p);
    EXPECT_EQ(s.monomial_at(0), Monomial(3)); // index 0 is the unit monomial
}
