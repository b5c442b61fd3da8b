#include <gtest/gtest.h>

#include <random>

#include "flexion/matrix.hpp"

using namespace flexion;

namespace {

RatMatrix mat(std::initializer_list<std::initializer_list<int>> rows) {
    std::vector<RatVector> r;
    for (auto row : rows) {
        RatVector v;
        for (int x : row) v.emplace_back(x);
        r.push_back(std::move(v));
    }
    return RatMatrix::from_rows(r);
}

RatVector vec(std::initializer_list<int> xs) {
    RatVector v;
    for (int x : xs) v.emplace_back(x);
    return v;
}

RatMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c) {
    std::uniform_int_distribution<int> d(-3, 3);
    RatMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = Rational(d(rng), 1 + (d(rng) + 3) % 3);
    return m;
}

} // namespace

TEST(Rational, Canonical) {
    Rational x(6, -4);
    EXPECT_EQ(x.str(), "-3/2");
    EXPECT_EQ(Rational(0, 5).str(), "0");
    EXPECT_EQ(Rational::parse("10/4"), Rational(5, 2));
    EXPECT_EQ(Rational::parse("-7").str(), "-7");
    EXPECT_THROW(Rational::parse("1/0"), ParseError);
    EXPECT_THROW(Rational::parse("x"), ParseError);
    EXPECT_THROW(Rational(1) / Rational(0), DomainError);
}

TEST(Rational, Arithmetic) {
    EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
    EXPECT_EQ(Rational(1, 2) * Rational(-2, 3), Rational(-1, 3));
    EXPECT_LT(Rational(-1, 2), Rational(1, 3));
    EXPECT_EQ(binomial(10, 3), 120);
    EXPECT_EQ(factorial(6), 720);
}

TEST(Rref, SpecExamples) {
    auto e = rref(mat({{1, 2}, {2, 4}}));
    EXPECT_EQ(e.form, mat({{1, 2}, {0, 0}}));
    EXPECT_EQ(e.pivots, std::vector<std::size_t>{0});

    auto id = RatMatrix::identity(3);
    auto ei = rref(id);
    EXPECT_EQ(ei.form, id);
    EXPECT_EQ(ei.pivots, (std::vector<std::size_t>{0, 1, 2}));

    EXPECT_EQ(rref(mat({{0, 1}, {1, 0}})).form, RatMatrix::identity(2));
}

TEST(Kernel, SpecExamples) {
    auto k = kernel_basis(mat({{1, -1}}));
    ASSERT_EQ(k.size(), 1u);
    EXPECT_EQ(k[0], vec({1, 1}));
    EXPECT_TRUE(kernel_basis(mat({{1, 2}, {3, 4}})).empty());
}

TEST(Kernel, CanonicalScaling) {
    auto k = kernel_basis(mat({{2, 3, 0}, {0, 0, 1}}));
    ASSERT_EQ(k.size(), 1u);
    EXPECT_EQ(k[0], vec({3, -2, 0}));
    EXPECT_EQ(canonical_integer({Rational(-1, 2), Rational(1, 3)}), vec({3, -2}));
}

TEST(Solve, SpecExamples) {
    auto v = vec({3, -1});
    EXPECT_EQ(solve(RatMatrix::identity(2), v), v);
    EXPECT_FALSE(solve(mat({{1}, {0}}), vec({0, 1})).has_value());
}

TEST(ExactCoreProperties, RandomMatrices) {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t r = 1 + trial % 5;
        const std::size_t c = 1 + (trial * 7) % 6;
        RatMatrix m = random_matrix(rng, r, c);
        auto e = rref(m);
        EXPECT_EQ(rref(e.form).form, e.form);
        for (const auto& v : kernel_basis(m)) {
            for (const auto& x : m.apply(v)) EXPECT_TRUE(x.is_zero());
        }
        EXPECT_EQ(kernel_basis(m).size() + rank(m), c);
        RatVector x0(c);
        for (std::size_t j = 0; j < c; ++j) x0[j] = Rational(static_cast<long>(j) - 2);
        auto target = m.apply(x0);
        auto sol = solve(m, target);
        ASSERT_TRUE(sol.has_value());
        EXPECT_EQ(m.apply(*sol), target);
    }
}

TEST(RowSpace, Basis) {
    auto b = row_space_basis({vec({1, 2, 3}), vec({2, 4, 6}), vec({0, 1, 1})});
    ASSERT_EQ(b.size(), 2u);
    EXPECT_EQ(b[0], vec({1, 0, 1}));
    EXPECT_EQ(b[1], vec({0, 1, 1}));
}
