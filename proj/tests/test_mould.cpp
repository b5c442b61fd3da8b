#include <gtest/gtest.h>

#include <random>

#include "flexion/mould.hpp"

using namespace flexion;

namespace {

MPoly u(int r, int i, int k = 1) { return MPoly::var(r, i - 1, k); }

Mould single(MouldKind kind, int r, RatComponent c) {
    Mould m(kind, r);
    m.set(r, std::move(c));
    return m;
}

Mould poly_mould(int r, const MPoly& p, MouldKind kind = MouldKind::U) { return single(kind, r, RatComponent(p)); }

MPoly random_homogeneous(std::mt19937& rng, int arity, int deg) {
    std::uniform_int_distribution<int> coef(-3, 3);
    MPoly p(arity);
    std::vector<Exponents> all;
    Exponents e(static_cast<std::size_t>(arity), 0);
    auto rec = [&](auto&& self, int i, int left) -> void {
        if (i == arity - 1) {
            e[static_cast<std::size_t>(i)] = left;
            all.push_back(e);
            return;
        }
        for (int k = 0; k <= left; ++k) {
            e[static_cast<std::size_t>(i)] = k;
            self(self, i + 1, left - k);
        }
    };
    rec(rec, 0, deg);
    for (const auto& x : all) p.add_term(x, Rational(coef(rng)));
    return p;
}

Mould random_mould(std::mt19937& rng, int max_depth, MouldKind kind = MouldKind::U) {
    Mould m(kind, max_depth);
    for (int r = 1; r <= max_depth; ++r) m.set(r, RatComponent(random_homogeneous(rng, r, 1 + r % 2)));
    return m;
}

Mould unit(MouldKind kind) { return Mould(kind, 0, Rational(1)); }

} // namespace

TEST(MakeU, Examples) {
    EXPECT_EQ(make_U(0).component(1), RatComponent(MPoly::constant(1, Rational(1))));
    EXPECT_EQ(make_U(2).component(1), RatComponent(u(1, 1, 2)));
    auto m = make_U(-2).component(1);
    EXPECT_FALSE(m.is_polynomial());
    EXPECT_EQ(m.den().at(LinForm::var(1, 0)), 2);
    EXPECT_THROW(make_U(-4), DomainError);
    EXPECT_THROW(make_U(3), DomainError);
}

TEST(Mu, Examples) {
    std::mt19937 rng(1);
    auto a = random_mould(rng, 3);
    EXPECT_EQ(mould_mu(a, unit(MouldKind::U)), a);
    auto x = poly_mould(1, u(1, 1, 2));
    auto y = poly_mould(1, u(1, 1) + MPoly::constant(1, Rational(3)));
    auto m = mould_mu(x, y);
    EXPECT_EQ(m.component(2).num(), u(2, 1, 2) * (u(2, 2) + MPoly::constant(2, Rational(3))));
    EXPECT_THROW(mould_mu(x, poly_mould(1, u(1, 1), MouldKind::V)), KindMismatch);
}

TEST(Lu, Examples) {
    auto l = mould_lu(make_U(0), make_U(2));
    EXPECT_EQ(l.component(2).num(), u(2, 2, 2) - u(2, 1, 2));
    std::mt19937 rng(2);
    auto a = random_mould(rng, 2);
    auto b = random_mould(rng, 2);
    EXPECT_TRUE(mould_lu(a, a).is_zero());
    EXPECT_EQ(mould_lu(a, b), Rational(-1) * mould_lu(b, a));
}

TEST(AritU, DepthTwo) {
    std::mt19937 rng(3);
    auto a = poly_mould(1, random_homogeneous(rng, 1, 3));
    auto b = poly_mould(1, random_homogeneous(rng, 1, 2));
    auto r = arit_u(b, a);
    EXPECT_TRUE(r.component(1).is_zero());
    auto A = a.component(1).num();
    auto B = b.component(1).num();
    auto s = A.substitute_linear({{1, 1}}, 2);
    auto expect = s * B.embed(2, 0) - s * B.embed(2, 1);
    EXPECT_EQ(r.component(2).num(), expect);
    auto uu = arit_u(make_U(2), make_U(2));
    EXPECT_EQ(uu.component(2).num(), (u(2, 1) + u(2, 2)).pow(2) * (u(2, 1, 2) - u(2, 2, 2)));
}

TEST(AritV, DepthTwo) {
    std::mt19937 rng(4);
    auto a = poly_mould(1, random_homogeneous(rng, 1, 3), MouldKind::V);
    auto b = poly_mould(1, random_homogeneous(rng, 1, 2) + MPoly::var(1, 0), MouldKind::V);
    auto r = arit_v(b, a);
    auto A = a.component(1).num();
    auto B = b.component(1).num();
    auto expect = A.embed(2, 1) * B.substitute_linear({{1, -1}}, 2) - A.embed(2, 0) * B.substitute_linear({{-1, 1}}, 2);
    EXPECT_EQ(r.component(2).num(), expect);
    EXPECT_TRUE(r.component(1).is_zero());
}

TEST(Ari, Examples) {
    std::mt19937 rng(5);
    auto a = random_mould(rng, 2);
    EXPECT_TRUE(mould_ari(a, a).is_zero());
    EXPECT_TRUE(mould_ari(make_U(0), make_U(2)).is_zero());
    auto x = mould_ari(make_U(2), make_U(4));
    auto s = u(2, 1) + u(2, 2);
    auto expect = s.pow(2) * (u(2, 1, 4) - u(2, 2, 4)) - s.pow(4) * (u(2, 1, 2) - u(2, 2, 2)) +
                  u(2, 1, 2) * u(2, 2, 4) - u(2, 1, 4) * u(2, 2, 2);
    EXPECT_EQ(x.component(2).num(), expect);
    auto factored = Rational(-1) * delta_poly(MouldKind::U, 2) * (u(2, 1) - u(2, 2)) *
                    (Rational(2) * s.pow(2) + u(2, 1) * u(2, 2));
    EXPECT_EQ(x.component(2).num(), factored);
    EXPECT_THROW(mould_ari(Mould(MouldKind::U, 1, Rational(1)), a), DomainError);
}

TEST(Ari, BilinearAntisymmetricJacobi) {
    std::mt19937 rng(6);
    for (int t = 0; t < 3; ++t) {
        auto a = random_mould(rng, 3);
        auto b = random_mould(rng, 3);
        auto c = random_mould(rng, 3);
        const int cap = 4;
        EXPECT_EQ(mould_ari(a, b, cap), Rational(-1) * mould_ari(b, a, cap));
        EXPECT_EQ(mould_ari(Rational(2) * a + c, b, cap), Rational(2) * mould_ari(a, b, cap) + mould_ari(c, b, cap));
        auto j = mould_ari(a, mould_ari(b, c, cap), cap) + mould_ari(b, mould_ari(c, a, cap), cap) +
                 mould_ari(c, mould_ari(a, b, cap), cap);
        EXPECT_TRUE(j.is_zero());
    }
}

TEST(Swap, Examples) {
    auto a = poly_mould(1, u(1, 1, 3) + u(1, 1));
    auto s = mould_swap(a);
    EXPECT_EQ(s.kind(), MouldKind::V);
    EXPECT_EQ(s.component(1).num(), a.component(1).num());
    auto m = poly_mould(2, u(2, 1) * u(2, 2, 2));
    EXPECT_EQ(mould_swap(m).component(2).num(), u(2, 2) * (u(2, 1) - u(2, 2)).pow(2));
    std::mt19937 rng(7);
    for (int t = 0; t < 5; ++t) {
        auto x = random_mould(rng, 4);
        EXPECT_EQ(mould_swap(mould_swap(x)), x);
        auto y = random_mould(rng, 3, MouldKind::V);
        EXPECT_EQ(mould_swap(mould_swap(y)), y);
    }
    auto sing = mould_ari(make_U(-2), make_U(4));
    EXPECT_EQ(mould_swap(mould_swap(sing)), sing);
}

TEST(Push, Examples) {
    auto a = poly_mould(1, u(1, 1, 3) + u(1, 1, 2));
    EXPECT_EQ(mould_push(a).component(1).num(), u(1, 1, 2) - u(1, 1, 3));
    EXPECT_TRUE(is_push_invariant(make_U(6)));
    std::mt19937 rng(8);
    for (int r = 1; r <= 4; ++r) {
        auto x = poly_mould(r, random_homogeneous(rng, r, 3));
        Mould y = x;
        for (int k = 0; k <= r; ++k) y = mould_push(y);
        EXPECT_EQ(y, x);
    }
    EXPECT_THROW(mould_push(poly_mould(1, u(1, 1), MouldKind::V)), KindMismatch);
}

TEST(Alternal, Examples) {
    EXPECT_TRUE(is_alternal(make_U(4)));
    EXPECT_FALSE(is_alternal(poly_mould(2, u(2, 1) * u(2, 2))));
    EXPECT_TRUE(is_alternal(poly_mould(2, u(2, 1) - u(2, 2))));
    EXPECT_TRUE(is_bialternal(make_U(4)));
    EXPECT_TRUE(is_bialternal(mould_ari(make_U(2), make_U(4))));
    EXPECT_FALSE(is_bialternal(poly_mould(2, u(2, 1) * u(2, 2))));
}

TEST(Alternal, ShuffleCount) {
    EXPECT_EQ(shuffles(4, 2).size(), 6u);
    EXPECT_EQ(shuffles(5, 1).size(), 5u);
    EXPECT_EQ(shuffles(3, 1), (std::vector<std::vector<int>>{{1, 2, 0}, {1, 0, 2}, {0, 1, 2}}));
}

TEST(Alternal, PreservedByAriAndReversalLaw) {
    std::vector<Mould> gens{make_U(2), make_U(4), make_U(6), make_U(-2)};
    std::vector<Mould> level2;
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j) level2.push_back(mould_ari(gens[i], gens[j]));
    auto alt = mould_ari(poly_mould(2, u(2, 1) - u(2, 2)), make_U(2));
    level2.push_back(alt);
    for (const auto& m : level2) {
        EXPECT_TRUE(is_alternal(m));
        auto t = mould_ari(make_U(4), m);
        EXPECT_TRUE(is_alternal(t));
        for (const auto& x : {m, t})
            for (const auto& [r, c] : x.components()) {
                const Rational sign = r % 2 ? Rational(1) : Rational(-1);
                EXPECT_EQ(c, sign * reversed(c));
            }
    }
}

TEST(Singularity, Examples) {
    auto rep = singularity_report(make_U(-2));
    ASSERT_EQ(rep.rows.size(), 1u);
    EXPECT_TRUE(rep.rows[0].polynomial);
    EXPECT_EQ(rep.rows[0].cleared.num(), MPoly::constant(1, Rational(1)));
    EXPECT_FALSE(rep.rows[0].quotient.has_value());
    auto x = singularity_report(mould_ari(make_U(2), make_U(4)));
    ASSERT_EQ(x.rows.size(), 1u);
    EXPECT_TRUE(x.rows[0].polynomial);
    auto s = u(2, 1) + u(2, 2);
    ASSERT_TRUE(x.rows[0].quotient.has_value());
    EXPECT_EQ(*x.rows[0].quotient,
              Rational(-1) * (u(2, 1) - u(2, 2)) * (Rational(2) * s.pow(2) + u(2, 1) * u(2, 2)));
    auto bad = single(MouldKind::U, 1, RatComponent(MPoly::constant(1, Rational(1)), {{LinForm::var(1, 0), 3}}));
    EXPECT_FALSE(singularity_report(bad).all_polynomial());
}

TEST(BoundarySymmetry, Examples) {
    EXPECT_TRUE(boundary_symmetry_holds(MPoly::constant(2, Rational(1))));
    EXPECT_FALSE(boundary_symmetry_holds(MPoly::var(2, 0)));
    auto m = mould_swap(mould_ari(make_U(2), make_U(4)));
    EXPECT_TRUE(check_boundary_symmetry(m));
    EXPECT_THROW(check_boundary_symmetry(make_U(2)), KindMismatch);
}

TEST(Render, SingularOverDelta) {
    auto txt = render(mould_ari(make_U(-2), make_U(2)));
    EXPECT_NE(txt.find("Delta_2"), std::string::npos);
    EXPECT_EQ(render(make_U(2)), "r=1: u1^2\n");
    EXPECT_EQ(render(mould_ari(make_U(2), make_U(4))).rfind("r=2: Delta_2 * (", 0), 0u);
}
