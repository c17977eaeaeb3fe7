#include <gtest/gtest.h>

#include "cyclochern/basis_adapt.hpp"
#include "cyclochern/forms.hpp"
#include "oracle.hpp"

using namespace cyclochern;

namespace {

GradedChain basis_chain(int deg, FormKey key)
{
    GradedChain c;
    c.add_term(deg, key, ExactScalar(1));
    return c;
}

// C + C as functions on two points, unit-first basis {1, p} with p^2 = p
FDAlgebra two_points_unit_first()
{
    std::vector<Element> table(4);
    table[0] = Element::basis(0);
    table[1] = Element::basis(1);
    table[2] = Element::basis(1);
    table[3] = Element::basis(1);
    return FDAlgebra({"1", "p"}, table, Element::basis(0));
}

} // namespace

TEST(omega_basis, sizes)
{
    OmegaSpace c(scalar_algebra());
    EXPECT_EQ(c.dim_omega(0), 1u);
    EXPECT_EQ(c.dim_omega(1), 0u); // A/C = 0

    OmegaSpace d2(truncated_polynomial_algebra(2));
    for (int n = 0; n <= 6; ++n)
        EXPECT_EQ(d2.dim_omega(n), 2u);

    auto m2 = with_unit_first(matrix_units_algebra(2));
    OmegaSpace om(m2.algebra);
    EXPECT_EQ(om.dim_omega(1), 12u); // 4 * 3
    EXPECT_EQ(om.dim_omega(2), 36u);
}

TEST(omega_basis, rejects_algebras_without_unit_first)
{
    FDAlgebra m2 = matrix_units_algebra(2);
    EXPECT_THROW(OmegaSpace{m2}, UnitNotBasisVector);
}

TEST(omega_basis, encode_decode_round_trip)
{
    auto m2 = with_unit_first(matrix_units_algebra(2));
    OmegaSpace om(m2.algebra);
    for (std::uint64_t code = 0; code < om.dim_omega(3); ++code)
        EXPECT_EQ(om.encode(om.decode(code, 3)), code);
}

TEST(apply_b, zero_on_degree_zero)
{
    FDAlgebra a = truncated_polynomial_algebra(2);
    EXPECT_TRUE(apply_b(a, basis_chain(0, {1})).is_zero());
}

TEST(apply_b, commutator_vanishes_for_commutative)
{
    FDAlgebra a = truncated_polynomial_algebra(3);
    // b(x dx) = x*x - x*x = 0
    EXPECT_TRUE(apply_b(a, basis_chain(1, {1, 1})).is_zero());
    EXPECT_TRUE(apply_b(a, basis_chain(1, {2, 1})).is_zero());
}

TEST(apply_b, matrix_units_give_e11_minus_e22)
{
    auto ad = with_unit_first(matrix_units_algebra(2));
    // e12 d e21 in adapted coordinates
    Element e12 = ad.to_adapted(Element::basis(1));
    Element e21 = ad.to_adapted(Element::basis(2));
    ASSERT_EQ(e12.term_count(), 1u);
    ASSERT_EQ(e21.term_count(), 1u);
    FormKey key{e12.terms()[0].first, e21.terms()[0].first};
    GradedChain out = apply_b(ad.algebra, basis_chain(1, key));
    Element expected = ad.to_adapted(Element::basis(0) - Element::basis(3)); // e11 - e22
    GradedChain want;
    for (const auto& [i, c] : expected.terms())
        want.add_term(0, {i}, c);
    EXPECT_EQ(out, want);
}

TEST(apply_kappa, identity_on_degree_zero)
{
    FDAlgebra a = truncated_polynomial_algebra(2);
    GradedChain c = basis_chain(0, {1});
    EXPECT_EQ(apply_kappa(a, c), c);
}

TEST(apply_kappa, degree_one_leibniz)
{
    // kappa(a0 da1) = d(a1 a0) - a1 da0; over C[x]/(x^3) with a0 = a1 = x:
    // d(x^2) - x dx
    FDAlgebra a = truncated_polynomial_algebra(3);
    GradedChain out = apply_kappa(a, basis_chain(1, {1, 1}));
    GradedChain want;
    want.add_term(1, {0, 2}, ExactScalar(1));
    want.add_term(1, {1, 1}, ExactScalar(-1));
    EXPECT_EQ(out, want);
}

TEST(apply_B, degree_zero_is_d)
{
    FDAlgebra a = truncated_polynomial_algebra(2);
    GradedChain out = apply_B(a, basis_chain(0, {1})).chain;
    EXPECT_EQ(out, basis_chain(1, {0, 1}));
    // B(1) = d(1) = 0
    EXPECT_TRUE(apply_B(a, basis_chain(0, {0})).chain.is_zero());
}

TEST(apply_B, cap_overflow_behaviour)
{
    FDAlgebra a = truncated_polynomial_algebra(2);
    ApplyOptions opt;
    opt.degree_cap = 0;
    EXPECT_THROW(apply_B(a, basis_chain(0, {1}), opt), DegreeCapExceeded);
    opt.allow_truncation = true;
    auto out = apply_B(a, basis_chain(0, {1}), opt);
    EXPECT_TRUE(out.chain.is_zero());
    ASSERT_EQ(out.truncated_degrees.size(), 1u);
    EXPECT_EQ(out.truncated_degrees[0], 0);
}

// every engine operator matrix must match the oracle built from the literal
// Leibniz recursion, on several algebras and all small degrees
TEST(operator_matrices, match_oracle)
{
    std::vector<FDAlgebra> algebras = {truncated_polynomial_algebra(2), two_points_unit_first(),
                                       truncated_polynomial_algebra(3),
                                       with_unit_first(matrix_units_algebra(2)).algebra};
    for (const auto& alg : algebras) {
        OmegaOperators ops(alg);
        const OmegaSpace& space = ops.space();
        int maxdeg = alg.dim() > 3 ? 3 : 4;
        for (int n = 0; n <= maxdeg; ++n) {
            auto engine_b = oracle::sparse_to_dense(ops.matrix(FormOp::b, n));
            auto engine_k = oracle::sparse_to_dense(ops.matrix(FormOp::kappa, n));
            auto engine_B = oracle::sparse_to_dense(ops.matrix(FormOp::B, n));
            auto oracle_b = oracle::dense_operator(space, n, n - 1, [&](const FormKey& k) {
                return oracle::b_term(alg, k);
            });
            auto oracle_k = oracle::dense_operator(space, n, n, [&](const FormKey& k) {
                return oracle::kappa_term(alg, k);
            });
            auto oracle_B = oracle::dense_operator(space, n, n + 1, [&](const FormKey& k) {
                return oracle::B_term(alg, k);
            });
            EXPECT_EQ(engine_b, oracle_b) << "b at degree " << n;
            EXPECT_EQ(engine_k, oracle_k) << "kappa at degree " << n;
            EXPECT_EQ(engine_B, oracle_B) << "B at degree " << n;
        }
    }
}

TEST(mixed_identities, scalar_algebra_vacuous)
{
    auto rep = verify_mixed_identities(scalar_algebra(), 4);
    EXPECT_TRUE(rep.all_hold());
}

TEST(mixed_identities, truncated_polynomials_degree_five)
{
    auto rep = verify_mixed_identities(truncated_polynomial_algebra(3), 5);
    EXPECT_TRUE(rep.all_hold());
    EXPECT_EQ(rep.per_degree.size(), 6u);
}

TEST(mixed_identities, matrix_algebra_degree_three)
{
    auto ad = with_unit_first(matrix_units_algebra(2));
    EXPECT_TRUE(verify_mixed_identities(ad.algebra, 3).all_hold());
}

TEST(operators, are_linear)
{
    FDAlgebra a = truncated_polynomial_algebra(3);
    GradedChain c1 = basis_chain(2, {1, 1, 2});
    GradedChain c2 = basis_chain(2, {2, 1, 1});
    ExactScalar s(Rational(3), Rational(1, 2));
    for (FormOp op : {FormOp::d, FormOp::b, FormOp::kappa, FormOp::B}) {
        GradedChain lhs = apply_operator(a, op, c1 * s + c2).chain;
        GradedChain rhs = apply_operator(a, op, c1).chain * s + apply_operator(a, op, c2).chain;
        EXPECT_EQ(lhs, rhs);
    }
}

TEST(operators, d_squared_zero)
{
    auto ad = with_unit_first(matrix_units_algebra(2));
    OmegaSpace space(ad.algebra);
    for (int n = 0; n <= 3; ++n)
        for (std::uint64_t code = 0; code < space.dim_omega(n); ++code) {
            GradedChain c = basis_chain(n, space.decode(code, n));
            EXPECT_TRUE(apply_d(ad.algebra, apply_d(ad.algebra, c)).is_zero());
        }
}

TEST(graded_chain, twopi_discipline)
{
    GradedChain a, b;
    a.add_term(2, {1, 1, 1}, ExactScalar(1), -1);
    b.add_term(2, {1, 1, 1}, ExactScalar(1), 0);
    EXPECT_THROW(a += b, NormalizationMismatch);
    GradedChain c;
    c.add_term(2, {2, 1, 1}, ExactScalar(1), -1);
    a += c; // same power is fine
    EXPECT_EQ(a.twopi_power(2), -1);
}
