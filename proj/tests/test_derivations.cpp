#include <gtest/gtest.h>

#include <random>

#include "flexion/derivations.hpp"

using namespace flexion;

namespace {

NcPoly P(std::initializer_list<std::pair<const char*, int>> terms) {
    NcPoly p;
    for (auto [w, c] : terms) p.add_term(NcPoly::parse_word(Alphabet::ab(), w), Rational(c));
    return p;
}

const NcPoly& ab() {
    static const NcPoly x = lie_bracket(NcPoly::a(), NcPoly::b());
    return x;
}

NcPoly random_lie(std::mt19937& rng, int weight, int depth = -1) {
    auto basis = depth < 0 ? lyndon_lie_basis(weight) : lyndon_lie_basis(weight, depth);
    std::uniform_int_distribution<int> d(-3, 3);
    NcPoly p;
    for (auto& el : basis) p += Rational(d(rng)) * el.poly;
    return p;
}

} // namespace

TEST(Apply, Examples) {
    EXPECT_TRUE(apply(make_eps(0), ab()).is_zero());
    EXPECT_TRUE(apply(make_eps(2), ab()).is_zero());
    auto d = make_eps(4);
    auto x = P({{"ab", 1}});
    EXPECT_EQ(apply(d, x), d.val_a() * NcPoly::b() + NcPoly::a() * d.val_b());
}

TEST(Eps, Images) {
    auto e0 = make_eps(0);
    EXPECT_EQ(e0.val_a(), NcPoly::b());
    EXPECT_TRUE(e0.val_b().is_zero());
    auto e2 = make_eps(2);
    EXPECT_EQ(e2.val_a(), P({{"aab", 1}, {"aba", -2}, {"baa", 1}}));
    EXPECT_EQ(e2.val_b(), lie_bracket(NcPoly::b(), ab()));
    EXPECT_EQ(make_eps(4).val_a(), ad_pow(NcPoly::a(), 4, NcPoly::b()));
    EXPECT_THROW(make_eps(3), DomainError);
    EXPECT_THROW(make_eps(-2), DomainError);
}

TEST(Eps, KillCommutator) {
    for (int i = 0; i <= 8; ++i) EXPECT_TRUE(apply(make_eps(2 * i), ab()).is_zero()) << i;
}

TEST(Phi0, Images) {
    auto f = make_phi0();
    EXPECT_TRUE(f.val_a().is_zero());
    EXPECT_EQ(f.val_b(), NcPoly::a());
    EXPECT_TRUE(f.is_sl2_generator());
    EXPECT_TRUE(der_bracket(f, f).is_zero());
}

TEST(DerBracket, Examples) {
    EXPECT_TRUE(der_bracket(make_eps(0), make_eps(0)).is_zero());
    EXPECT_TRUE(der_bracket(make_eps(2), make_eps(4)).is_zero());
    auto e0 = make_eps(0);
    auto e4 = make_eps(4);
    auto br = der_bracket(e0, e4);
    EXPECT_EQ(br.val_a(), apply(e0, e4.val_a()) - apply(e4, e0.val_a()));
    EXPECT_EQ(br.weight(), 4);
    EXPECT_THROW(Derivation(P({{"ab", 1}}), NcPoly(), 3), NotHomogeneous);
}

TEST(DerBracket, JacobiAntisymmetry) {
    std::vector<Derivation> gens{make_eps(0), make_eps(4), make_eps(6), make_eps(8)};
    for (const auto& x : gens)
        for (const auto& y : gens) {
            EXPECT_EQ(der_bracket(x, y), Rational(-1) * der_bracket(y, x));
            for (const auto& z : gens) {
                auto j = der_bracket(x, der_bracket(y, z)) + der_bracket(y, der_bracket(z, x)) +
                         der_bracket(z, der_bracket(x, y));
                EXPECT_TRUE(j.is_zero());
            }
        }
}

TEST(Eps2, Central) {
    auto e2 = make_eps(2);
    std::vector<Derivation> xs{make_eps(0), make_eps(4), make_eps(6), make_eps(8), make_eps(10), make_eps(12),
                               make_eps(14)};
    xs.push_back(der_bracket(make_eps(4), make_eps(6)));
    xs.push_back(der_bracket(make_eps(0), make_eps(8)));
    xs.push_back(der_bracket(make_eps(4), der_bracket(make_eps(4), make_eps(6))));
    for (const auto& x : xs) EXPECT_TRUE(der_bracket(e2, x).is_zero());
}

TEST(Eps, PushInvariantAImage) {
    std::vector<Derivation> xs{make_eps(0), make_eps(2), make_eps(6)};
    xs.push_back(der_bracket(make_eps(0), make_eps(6)));
    xs.push_back(der_bracket(make_eps(4), make_eps(8)));
    xs.push_back(der_bracket(make_eps(4), der_bracket(make_eps(0), make_eps(6))));
    for (const auto& x : xs) EXPECT_TRUE(is_push_invariant(x.val_a()));
}

TEST(MakeH, Examples) {
    EXPECT_EQ(make_h(2, 8, 2).derivation, der_bracket(make_eps(4), make_eps(10)));
    auto e0 = make_eps(0);
    auto h = make_h(2, 10, 3).derivation;
    auto expect = Rational(1, 10) * der_bracket(make_eps(4), der_bracket(e0, make_eps(12))) -
                  Rational(1, 2) * der_bracket(der_bracket(e0, make_eps(4)), make_eps(12));
    EXPECT_EQ(h, expect);
    auto h66 = make_h(6, 6, 3).derivation;
    EXPECT_EQ(h66, Rational(1, 3) * der_bracket(make_eps(8), der_bracket(e0, make_eps(8))));
    EXPECT_THROW(make_h(3, 4, 2), DomainError);
    EXPECT_THROW(make_h(2, 4, 1), DomainError);
}

TEST(MakeH, TruncatedTermsVanish) {
    auto e0 = make_eps(0);
    for (int p = 2; p <= 6; p += 2) EXPECT_TRUE(der_ad_pow(e0, p + 1, make_eps(p + 2)).is_zero());
}

TEST(MakeH, ParitySymmetry) {
    for (int d = 2; d <= 4; ++d) {
        const Rational s = d % 2 ? Rational(1) : Rational(-1);
        EXPECT_EQ(make_h(4, 6, d).derivation, s * make_h(6, 4, d).derivation);
    }
    EXPECT_TRUE(make_h(4, 4, 2).derivation.is_zero());
}

TEST(HighestWeight, Examples) {
    EXPECT_TRUE(is_highest_weight(Derivation::zero(3)));
    EXPECT_TRUE(is_highest_weight(make_h(2, 8, 2).derivation));
    EXPECT_TRUE(is_highest_weight(make_h(4, 8, 3).derivation));
    EXPECT_FALSE(is_highest_weight(make_eps(0)));
}

TEST(RecoverPartner, Examples) {
    EXPECT_EQ(recover_partner(c_element(3)), lie_bracket(NcPoly::b(), ab()));
    for (int i = 1; i <= 6; ++i) EXPECT_EQ(recover_partner(make_eps(2 * i).val_a()), make_eps(2 * i).val_b());
    EXPECT_THROW(recover_partner(ab()), NotPushInvariant);
}

TEST(FactorAdA, Examples) {
    auto f = factor_ad_a(P({{"aab", 1}, {"aba", -2}, {"baa", 1}}));
    ASSERT_TRUE(f);
    EXPECT_EQ(*f, ab());
    auto g = factor_ad_a(ab());
    ASSERT_TRUE(g);
    EXPECT_EQ(*g, NcPoly::b());
    EXPECT_FALSE(factor_ad_a(lie_bracket(ab(), NcPoly::b())).has_value());
}

TEST(FactorAdA, MonomialCriterionBothWays) {
    std::mt19937 rng(21);
    int with = 0;
    int without = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const int w = 2 + trial % 8;
        NcPoly p = trial % 3 == 0 ? lie_bracket(NcPoly::a(), random_lie(rng, w - 1)) : random_lie(rng, w);
        if (p.is_zero()) continue;
        bool criterion = true;
        for (const auto& [word, c] : p.terms())
            if (starts_and_ends_with_b(word)) criterion = false;
        auto q = factor_ad_a(p);
        EXPECT_EQ(q.has_value(), criterion);
        if (q) {
            EXPECT_EQ(lie_bracket(NcPoly::a(), *q), p);
            ++with;
        } else {
            ++without;
        }
    }
    EXPECT_GT(with, 0);
    EXPECT_GT(without, 0);
}

TEST(Theta3, Examples) {
    auto t = lie_bracket(c_element(2), lie_bracket(c_element(2), c_element(3)));
    auto cert = theta3_membership(t);
    ASSERT_TRUE(cert);
    NcPoly back;
    for (std::size_t k = 0; k < cert->labels.size(); ++k) {
        auto [i, j, l] = cert->labels[k];
        back += cert->coeffs[k] * lie_bracket(c_element(i + 1), lie_bracket(c_element(j + 1), c_element(l + 1)));
    }
    EXPECT_EQ(back, t);
    auto bad = lie_bracket(NcPoly::b(), lie_bracket(c_element(2), c_element(3)));
    EXPECT_FALSE(theta3_membership(bad).has_value());
    EXPECT_THROW(theta3_membership(ab()), NotHomogeneous);
}

TEST(Poisson, Examples) {
    std::mt19937 rng(1);
    auto p = random_lie(rng, 5);
    EXPECT_TRUE(poisson(p, p).is_zero());
    EXPECT_TRUE(poisson(NcPoly::b(), NcPoly::b()).is_zero());
}

TEST(Poisson, DerivationHomomorphism) {
    std::mt19937 rng(4);
    int nontrivial = 0;
    for (int trial = 0; trial < 12; ++trial) {
        auto p = random_lie(rng, 2 + trial % 3, 1 + trial % 2);
        auto q = random_lie(rng, 3 + trial % 2, 1 + (trial / 2) % 2);
        if (p.is_zero() || q.is_zero()) continue;
        auto lhs = poisson_derivation(poisson(p, q));
        auto rhs = der_bracket(poisson_derivation(p), poisson_derivation(q));
        EXPECT_EQ(lhs, rhs);
        if (!lhs.is_zero()) ++nontrivial;
    }
    EXPECT_GT(nontrivial, 5);
}
