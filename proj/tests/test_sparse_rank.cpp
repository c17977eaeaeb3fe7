#include <gtest/gtest.h>

#include <random>

#include "cyclochern/dense_linalg.hpp"
#include "cyclochern/sparse_rank.hpp"

using namespace cyclochern;

namespace {

std::uint64_t rank_of_dense(const std::vector<std::vector<long>>& m)
{
    std::vector<SparseTriplet> t;
    for (std::uint32_t i = 0; i < m.size(); ++i)
        for (std::uint32_t j = 0; j < m[i].size(); ++j)
            if (m[i][j] != 0)
                t.push_back({i, j, ExactScalar(m[i][j])});
    return exact_rank(m.size(), m.empty() ? 0 : m[0].size(), std::move(t));
}

} // namespace

TEST(sparse_rank, identity_and_zero)
{
    EXPECT_EQ(rank_of_dense({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), 3u);
    EXPECT_EQ(rank_of_dense({{0, 0}, {0, 0}}), 0u);
    EXPECT_EQ(exact_rank(5, 5, {}), 0u);
}

TEST(sparse_rank, proportional_rows)
{
    EXPECT_EQ(rank_of_dense({{1, 2}, {2, 4}}), 1u);
}

TEST(sparse_rank, duplicate_triplets_are_summed)
{
    std::vector<SparseTriplet> t = {{0, 0, ExactScalar(1)}, {0, 0, ExactScalar(-1)}};
    EXPECT_EQ(exact_rank(1, 1, std::move(t)), 0u);
}

TEST(sparse_rank, matches_dense_oracle_on_random_matrices)
{
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> val(-3, 3);
    std::uniform_real_distribution<double> density(0.0, 1.0);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t r = 1 + rng() % 12, c = 1 + rng() % 12;
        DenseMatrix dm(r, c);
        std::vector<SparseTriplet> t;
        for (std::uint32_t i = 0; i < r; ++i)
            for (std::uint32_t j = 0; j < c; ++j) {
                if (density(rng) > 0.4)
                    continue;
                int v = val(rng);
                if (v == 0)
                    continue;
                dm.at(i, j) = ExactScalar(v);
                t.push_back({i, j, ExactScalar(v)});
            }
        EXPECT_EQ(exact_rank(r, c, std::move(t)), dense_rank(dm)) << "trial " << trial;
    }
}

TEST(sparse_rank, gaussian_rational_entries)
{
    std::vector<SparseTriplet> t = {{0, 0, ExactScalar(1, 2)},
                                    {0, 1, ExactScalar::i()},
                                    {1, 0, ExactScalar(Rational(0), Rational(1, 2))},
                                    {1, 1, ExactScalar(-1)}};
    // row2 = i * row1, so rank 1
    EXPECT_EQ(exact_rank(2, 2, std::move(t)), 1u);
}

TEST(sparse_rank, big_values_take_the_slow_path)
{
    // entries around 2^62 force the machine-word path to overflow and the
    // component to rerun with exact scalars
    Rational big(mpz_class(1) << 62);
    std::vector<SparseTriplet> t;
    for (std::uint32_t i = 0; i < 4; ++i)
        for (std::uint32_t j = 0; j < 4; ++j)
            t.push_back({i, j, ExactScalar(big * Rational(static_cast<long>(i * 7 + j * j + 1)))});
    DenseMatrix dm(4, 4);
    for (std::uint32_t i = 0; i < 4; ++i)
        for (std::uint32_t j = 0; j < 4; ++j)
            dm.at(i, j) = ExactScalar(big * Rational(static_cast<long>(i * 7 + j * j + 1)));
    EXPECT_EQ(exact_rank(4, 4, std::move(t)), dense_rank(dm));
}

TEST(sparse_rank, disconnected_components)
{
    // two blocks sharing no columns
    std::vector<SparseTriplet> t = {{0, 0, ExactScalar(1)},
                                    {1, 1, ExactScalar(2)},
                                    {2, 2, ExactScalar(3)},
                                    {3, 2, ExactScalar(6)},
                                    {3, 3, ExactScalar(1)}};
    EXPECT_EQ(exact_rank(4, 4, std::move(t)), 4u);
}

TEST(dense_linalg, solve_and_nullspace)
{
    DenseMatrix a(2, 3);
    a.at(0, 0) = ExactScalar(1);
    a.at(0, 2) = ExactScalar(1);
    a.at(1, 1) = ExactScalar(1);
    auto ns = dense_nullspace(a);
    ASSERT_EQ(ns.size(), 1u);
    EXPECT_EQ(ns[0][0], ExactScalar(-1));
    EXPECT_EQ(ns[0][1], ExactScalar(0));
    EXPECT_EQ(ns[0][2], ExactScalar(1));

    DenseMatrix b(2, 1);
    b.at(0, 0) = ExactScalar(5);
    b.at(1, 0) = ExactScalar(7);
    auto x = dense_solve(a, b);
    ASSERT_TRUE(x.has_value());
    DenseMatrix prod = a * *x;
    EXPECT_EQ(prod, b);

    DenseMatrix sing(2, 2);
    sing.at(0, 0) = ExactScalar(1);
    sing.at(1, 0) = ExactScalar(1);
    DenseMatrix rhs(2, 1);
    rhs.at(0, 0) = ExactScalar(1);
    rhs.at(1, 0) = ExactScalar(2);
    EXPECT_FALSE(dense_solve(sing, rhs).has_value());
    EXPECT_FALSE(dense_inverse(sing).has_value());
}
