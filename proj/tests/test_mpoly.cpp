#include <gtest/gtest.h>

#include <random>

#include "flexion/mpoly.hpp"

using namespace flexion;

namespace {

MPoly u(int r, int i, int k = 1) { return MPoly::var(r, i - 1, k); }
MPoly one(int r) { return MPoly::constant(r, Rational(1)); }
LinForm lf(IntForm c) { return LinForm(std::move(c)); }

MPoly random_poly(std::mt19937& rng, int arity, int max_deg) {
    std::uniform_int_distribution<int> coef(-4, 4);
    std::uniform_int_distribution<int> deg(0, max_deg);
    MPoly p(arity);
    for (int t = 0; t < 5; ++t) {
        Exponents e(static_cast<std::size_t>(arity));
        for (auto& x : e) x = deg(rng) / arity;
        p.add_term(e, Rational(coef(rng)));
    }
    return p;
}

IntForm random_form(std::mt19937& rng, int arity) {
    std::uniform_int_distribution<int> c(-2, 2);
    IntForm f;
    do {
        f.assign(static_cast<std::size_t>(arity), 0);
        for (auto& x : f) x = c(rng);
    } while (std::all_of(f.begin(), f.end(), [](long x) { return x == 0; }));
    return f;
}

} // namespace

TEST(MPoly, Arithmetic) {
    auto s = u(2, 1) + u(2, 2);
    EXPECT_EQ(s.pow(2), u(2, 1, 2) + Rational(2) * u(2, 1) * u(2, 2) + u(2, 2, 2));
    EXPECT_TRUE((s * MPoly(2)).is_zero());
    auto delta2 = u(2, 1) * u(2, 2) * s;
    EXPECT_EQ(delta2, u(2, 1, 2) * u(2, 2) + u(2, 1) * u(2, 2, 2));
    EXPECT_THROW(u(1, 1) + u(2, 1), ArityMismatch);
    EXPECT_EQ((u(2, 1, 2) - Rational(3) * u(2, 2)).str("u"), "u1^2 - 3*u2");
}

TEST(MPoly, SubstituteLinear) {
    EXPECT_EQ(u(1, 1, 2).substitute_linear({{-1}}, 1), u(1, 1, 2));
    auto p = u(2, 1) * u(2, 2);
    auto q = p.substitute_linear({{0, 1}, {1, -1}}, 2);
    EXPECT_EQ(q, u(2, 2) * u(2, 1) - u(2, 2, 2));
    EXPECT_EQ(p.substitute_linear({{1, 0}, {0, 1}}, 2), p);
}

TEST(MPoly, SubstitutionIsRingMap) {
    std::mt19937 rng(2);
    for (int t = 0; t < 20; ++t) {
        auto a = random_poly(rng, 3, 6);
        auto b = random_poly(rng, 3, 6);
        std::vector<IntForm> img{random_form(rng, 2), random_form(rng, 2), random_form(rng, 2)};
        auto s = [&](const MPoly& x) { return x.substitute_linear(img, 2); };
        EXPECT_EQ(s(a + b), s(a) + s(b));
        EXPECT_EQ(s(a * b), s(a) * s(b));
    }
}

TEST(DivideExact, Examples) {
    auto d = divide_exact(u(2, 1, 2) - u(2, 2, 2), lf({1, 1}));
    ASSERT_TRUE(d);
    EXPECT_EQ(*d, u(2, 1) - u(2, 2));
    EXPECT_FALSE(divide_exact(u(2, 1, 2), lf({1, 1})).has_value());
    auto delta3 = u(3, 1) * u(3, 2) * u(3, 3) * (u(3, 1) + u(3, 2) + u(3, 3));
    auto e = divide_exact(delta3, LinForm::var(3, 1));
    ASSERT_TRUE(e);
    EXPECT_EQ(*e, u(3, 1) * u(3, 3) * (u(3, 1) + u(3, 2) + u(3, 3)));
}

TEST(DivideExact, RoundTrip) {
    std::mt19937 rng(8);
    for (int t = 0; t < 40; ++t) {
        auto a = random_poly(rng, 3, 7);
        auto [f, s] = LinForm::canonical(random_form(rng, 3));
        auto q = divide_exact(a * f.poly(), f);
        ASSERT_TRUE(q);
        EXPECT_EQ(*q, a);
    }
}

TEST(LinForm, Canonical) {
    auto [f, s] = LinForm::canonical({0, -2, 4});
    EXPECT_EQ(f.coeffs(), (IntForm{0, 1, -2}));
    EXPECT_EQ(s, -2);
    EXPECT_THROW(LinForm::canonical({0, 0}), DomainError);
    EXPECT_THROW(LinForm({2, 0}), DomainError);
}

TEST(RatComponent, Normalize) {
    RatComponent a(u(2, 1, 2) - u(2, 2, 2), {{lf({1, 1}), 1}});
    EXPECT_TRUE(a.is_polynomial());
    EXPECT_EQ(a.num(), u(2, 1) - u(2, 2));
    RatComponent b(u(1, 1, 3), {{LinForm::var(1, 0), 2}});
    EXPECT_TRUE(b.is_polynomial());
    EXPECT_EQ(b.num(), u(1, 1));
    RatComponent c(one(1), {{LinForm::var(1, 0), 1}});
    EXPECT_FALSE(c.is_polynomial());
    EXPECT_EQ(c.den().at(LinForm::var(1, 0)), 1);
}

TEST(RatComponent, Arithmetic) {
    RatComponent x(one(2), {{LinForm::var(2, 0), 1}});
    RatComponent y(one(2), {{LinForm::var(2, 1), 1}});
    auto s = x + y;
    EXPECT_EQ(s.num(), u(2, 1) + u(2, 2));
    EXPECT_EQ(s.den().size(), 2u);
    EXPECT_TRUE((s - s).is_zero());
    auto p = x * RatComponent(u(2, 1));
    EXPECT_TRUE(p.is_polynomial());
    EXPECT_EQ(p.num(), one(2));
}

TEST(RatComponent, EqualityByCrossMultiplication) {
    RatComponent x(u(2, 1), {{lf({1, 1}), 1}});
    RatComponent y(u(2, 1) * u(2, 2), {{lf({1, 1}), 1}, {LinForm::var(2, 1), 1}});
    EXPECT_EQ(x, y);
    EXPECT_FALSE(x == RatComponent(u(2, 2), {{lf({1, 1}), 1}}));
}

TEST(RatComponent, NormalizeIdempotentAndFaithful) {
    std::mt19937 rng(13);
    for (int t = 0; t < 30; ++t) {
        auto n = random_poly(rng, 2, 5);
        auto [f, s1] = LinForm::canonical(random_form(rng, 2));
        auto [g, s2] = LinForm::canonical(random_form(rng, 2));
        MPoly raw = n * f.poly();
        RatComponent c(raw, {{f, 2}, {g, 1}});
        RatComponent again = c;
        again.normalize();
        EXPECT_EQ(again.num(), c.num());
        EXPECT_EQ(again.den(), c.den());
        MPoly lhs = c.num();
        for (const auto& [h, m] : RatComponent::Den{{f, 2}, {g, 1}}) lhs *= h.poly().pow(m);
        MPoly rhs = raw;
        for (const auto& [h, m] : c.den()) rhs *= h.poly().pow(m);
        EXPECT_EQ(lhs, rhs);
    }
}

TEST(RatComponent, SubstituteCarriesScale) {
    RatComponent c(one(2), {{LinForm::var(2, 0), 1}});
    auto d = c.substitute_linear({{-2, 0}, {0, 1}}, 2);
    EXPECT_EQ(d, RatComponent(MPoly::constant(2, Rational(-1, 2)), {{LinForm::var(2, 0), 1}}));
    EXPECT_THROW(c.substitute_linear({{0, 0}, {0, 1}}, 2), DomainError);
}

TEST(RatSum, MatchesPairwiseAddition) {
    std::mt19937 rng(17);
    RatSum sum(2);
    RatComponent acc(2);
    for (int t = 0; t < 6; ++t) {
        auto [f, s] = LinForm::canonical(random_form(rng, 2));
        RatComponent c(random_poly(rng, 2, 4), {{f, 1 + t % 2}});
        sum.add(c, Rational(t - 2));
        acc += Rational(t - 2) * c;
    }
    EXPECT_EQ(sum.result(), acc);
}
