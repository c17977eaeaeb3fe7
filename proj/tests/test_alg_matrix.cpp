#include <gtest/gtest.h>

#include "cyclochern/alg_matrix.hpp"

using namespace cyclochern;

namespace {

Element pelem(const PresentedAlgebra& a, const Poly& p) { return a.poly_to_element(a.normal_form(p)); }

Poly gen_poly(const PresentedAlgebra& a, int g, ExactScalar c = ExactScalar(1))
{
    Poly p;
    poly_add_term(p, a.generator_monomial(static_cast<std::size_t>(g)), c);
    return p;
}

Poly const_poly(const PresentedAlgebra& a, ExactScalar c)
{
    Poly p;
    poly_add_term(p, Monomial(a.generator_count()), c);
    return p;
}

// the Bott projector (1/2)(1 + x s1 + y s2 + z s3) over the sphere ring
AlgMatrix bott_matrix(const PresentedAlgebra& s)
{
    ExactScalar half(1, 2);
    ExactScalar i = ExactScalar::i();
    AlgMatrix e(2, 2);
    Poly p00 = poly_add(const_poly(s, half), gen_poly(s, 2, half));            // (1+z)/2
    Poly p11 = poly_add(const_poly(s, half), gen_poly(s, 2, -half));           // (1-z)/2
    Poly p01 = poly_add(gen_poly(s, 0, half), gen_poly(s, 1, -half * i));      // (x-iy)/2
    Poly p10 = poly_add(gen_poly(s, 0, half), gen_poly(s, 1, half * i));       // (x+iy)/2
    e.at(0, 0) = pelem(s, p00);
    e.at(0, 1) = pelem(s, p01);
    e.at(1, 0) = pelem(s, p10);
    e.at(1, 1) = pelem(s, p11);
    return e;
}

} // namespace

TEST(alg_matrix, identity_is_idempotent)
{
    FDAlgebra a = truncated_polynomial_algebra(2);
    EXPECT_TRUE(is_idempotent(a, mat_identity(a, 3)));
}

TEST(alg_matrix, bott_projector_is_idempotent)
{
    auto s = sphere_algebra();
    AlgMatrix e = bott_matrix(s);
    EXPECT_TRUE(is_idempotent(s, e));
}

TEST(alg_matrix, diag_one_x_is_not_idempotent)
{
    FDAlgebra a = truncated_polynomial_algebra(2);
    AlgMatrix m(2, 2);
    m.at(0, 0) = Element::basis(0);
    m.at(1, 1) = Element::basis(1); // x, and x^2 = 0 != x
    EXPECT_FALSE(is_idempotent(a, m));
}

TEST(alg_matrix, invert_one_plus_x)
{
    FDAlgebra a = truncated_polynomial_algebra(2);
    AlgMatrix g(1, 1);
    Element e = Element::basis(0);
    e.add_term(1, ExactScalar(1));
    g.at(0, 0) = e; // 1 + x
    AlgMatrix h = invert(a, g);
    Element expected = Element::basis(0);
    expected.add_term(1, ExactScalar(-1)); // 1 - x
    EXPECT_EQ(h.at(0, 0), expected);
}

TEST(alg_matrix, invert_nilpotent_fails)
{
    FDAlgebra a = truncated_polynomial_algebra(2);
    AlgMatrix g(1, 1);
    g.at(0, 0) = Element::basis(1); // x
    EXPECT_THROW(invert(a, g), NotInvertible);
}

TEST(alg_matrix, invert_laurent_u_by_declared_inverse)
{
    auto l = laurent_algebra();
    AlgMatrix g(1, 1);
    g.at(0, 0) = Element::basis(l.monomial_index(l.generator_monomial(0)));
    AlgMatrix h = invert(l, g);
    EXPECT_EQ(h.at(0, 0), Element::basis(l.monomial_index(l.generator_monomial(1))));
}

TEST(alg_matrix, invert_presented_requires_candidate)
{
    auto s = sphere_algebra();
    AlgMatrix g = mat_identity(s, 2);
    g.at(0, 1) = g.at(0, 0); // [[1,1],[0,1]]
    EXPECT_THROW(invert(s, g), NotVerifiable);
    AlgMatrix cand = mat_identity(s, 2);
    cand.at(0, 1) = -cand.at(0, 0);
    AlgMatrix h = invert(s, g, cand);
    EXPECT_EQ(mat_mul(s, g, h), mat_identity(s, 2));
}

TEST(alg_matrix, invert_2x2_over_m2)
{
    // a genuinely noncommutative case: invert an element of M_2(M_2(C))
    FDAlgebra m2 = matrix_units_algebra(2);
    AlgMatrix g = mat_identity(m2, 2);
    g.at(0, 1) = Element::basis(1); // e12 in the corner
    AlgMatrix h = invert(m2, g);
    EXPECT_EQ(mat_mul(m2, g, h), mat_identity(m2, 2));
    EXPECT_EQ(mat_mul(m2, h, g), mat_identity(m2, 2));
}

TEST(alg_matrix, conjugation_preserves_idempotency)
{
    FDAlgebra a = truncated_polynomial_algebra(3);
    // e = diag(1, 0), g = [[1, x], [x^2, 1]] is invertible (unipotent-ish)
    AlgMatrix e(2, 2);
    e.at(0, 0) = Element::basis(0);
    AlgMatrix g = mat_identity(a, 2);
    g.at(0, 1) = Element::basis(1);
    g.at(1, 0) = Element::basis(2);
    AlgMatrix gi = invert(a, g);
    AlgMatrix conj = mat_mul(a, mat_mul(a, g, e), gi);
    EXPECT_TRUE(is_idempotent(a, conj));
}

TEST(alg_matrix, block_sum_and_trace)
{
    FDAlgebra a = truncated_polynomial_algebra(2);
    AlgMatrix e(1, 1);
    e.at(0, 0) = Element::basis(0);
    AlgMatrix s = mat_block_sum(e, e);
    EXPECT_EQ(s.rows, 2u);
    Element tr = mat_trace(a, s);
    EXPECT_EQ(tr.coeff(0), ExactScalar(2));
}
