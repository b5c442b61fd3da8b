#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "flexion/linsys.hpp"
#include "flexion/lyndon.hpp"
#include "flexion/ncpoly.hpp"

namespace flexion {

/// Derivation of Lie[a,b], stored by its values on the generators. A weight-n
/// derivation sends a and b to polynomials of degree n + 1.
class Derivation {
public:
    Derivation() = default;
    Derivation(NcPoly val_a, NcPoly val_b, int weight, bool sl2_generator = false)
        : val_a_(std::move(val_a)), val_b_(std::move(val_b)), weight_(weight), sl2_(sl2_generator) {
        check(val_a_);
        check(val_b_);
    }

    static Derivation zero(int weight) { return {NcPoly(), NcPoly(), weight}; }

    [[nodiscard]] const NcPoly& val_a() const { return val_a_; }
    [[nodiscard]] const NcPoly& val_b() const { return val_b_; }
    [[nodiscard]] int weight() const { return weight_; }
    /// Set only on phi_0, which lives outside Der0.
    [[nodiscard]] bool is_sl2_generator() const { return sl2_; }
    [[nodiscard]] bool is_zero() const { return val_a_.is_zero() && val_b_.is_zero(); }

    Derivation& operator+=(const Derivation& o) {
        if (o.is_zero()) return *this;
        if (is_zero()) {
            *this = o;
            return *this;
        }
        if (o.weight_ != weight_) throw DomainError("adding derivations of different weight");
        val_a_ += o.val_a_;
        val_b_ += o.val_b_;
        sl2_ = sl2_ && o.sl2_ && is_zero();
        return *this;
    }
    Derivation& operator*=(const Rational& s) {
        val_a_ *= s;
        val_b_ *= s;
        if (s.is_zero()) sl2_ = false;
        return *this;
    }
    friend Derivation operator+(Derivation x, const Derivation& y) { return x += y; }
    friend Derivation operator-(Derivation x, const Derivation& y) { return x += Rational(-1) * y; }
    friend Derivation operator*(const Rational& s, Derivation x) { return x *= s; }

    /// Equality of derivations is equality on both generators.
    friend bool operator==(const Derivation& x, const Derivation& y) {
        return x.val_a_ == y.val_a_ && x.val_b_ == y.val_b_;
    }

private:
    void check(const NcPoly& p) const {
        if (p.alphabet().kind() != Alphabet::Kind::AB) throw AlphabetMismatch();
        if (p.is_zero()) return;
        if (!p.is_homogeneous() || p.degree() != weight_ + 1)
            throw NotHomogeneous("derivation image of degree " + std::to_string(p.degree()) + " for weight " +
                                 std::to_string(weight_));
    }

    NcPoly val_a_;
    NcPoly val_b_;
    int weight_ = 0;
    bool sl2_ = false;
};

/// Leibniz extension of D to Q<a,b>.
inline NcPoly apply(const Derivation& d, const NcPoly& p) {
    if (p.alphabet().kind() != Alphabet::Kind::AB) throw AlphabetMismatch();
    NcPoly out;
    for (const auto& [w, c] : p.terms()) {
        for (std::size_t k = 0; k < w.size(); ++k) {
            const NcPoly& img = w[k] == kLetterA ? d.val_a() : d.val_b();
            if (img.is_zero()) continue;
            Word left(std::vector<std::uint8_t>(w.letters.begin(), w.letters.begin() + static_cast<std::ptrdiff_t>(k)));
            Word right(
                std::vector<std::uint8_t>(w.letters.begin() + static_cast<std::ptrdiff_t>(k) + 1, w.letters.end()));
            for (const auto& [iw, ic] : img.terms()) out.add_term(left + iw + right, c * ic);
        }
    }
    return out;
}

/// Commutator [D1, D2] = D1 o D2 - D2 o D1, evaluated on the generators.
inline Derivation der_bracket(const Derivation& d1, const Derivation& d2) {
    NcPoly va = apply(d1, d2.val_a()) - apply(d2, d1.val_a());
    NcPoly vb = apply(d1, d2.val_b()) - apply(d2, d1.val_b());
    return {std::move(va), std::move(vb), d1.weight() + d2.weight()};
}

/// ad(X)^k (Y) in the derivation algebra.
inline Derivation der_ad_pow(const Derivation& x, int k, Derivation y) {
    for (int i = 0; i < k; ++i) y = der_bracket(x, y);
    return y;
}

/// eps_{2i}: a -> a^{2i}·b, b -> sum_{j<i} (-1)^j [a^j·b, a^{2i-1-j}·b].
inline Derivation make_eps(int index) {
    if (index < 0 || index % 2 != 0) throw DomainError("eps index must be even and nonnegative");
    const int i = index / 2;
    NcPoly vb;
    for (int j = 0; j < i; ++j) {
        NcPoly t = lie_bracket(c_element(j + 1), c_element(2 * i - j));
        vb += (j % 2 == 0 ? Rational(1) : Rational(-1)) * t;
    }
    return {c_element(index + 1), std::move(vb), index};
}

/// phi_0: a -> 0, b -> a.
inline Derivation make_phi0() { return {NcPoly(), NcPoly::a(), 0, true}; }

struct HElement {
    int p = 0;
    int q = 0;
    int d = 0;
    Derivation derivation;
};

/// h^d_{p,q} = sum_{i+j=d-2} (-1)^i (d-2)!/(C(p,i) C(q,j)) [ad(eps_0)^i eps_{p+2}, ad(eps_0)^j eps_{q+2}].
/// Terms with i > p or j > q are dropped: ad(eps_0)^{p+1} eps_{p+2} vanishes.
inline HElement make_h(int p, int q, int d) {
    if (p < 2 || q < 2 || p % 2 || q % 2) throw DomainError("h needs p, q even >= 2");
    if (d < 2) throw DomainError("h needs depth d >= 2");
    const Derivation e0 = make_eps(0);
    const Derivation ep = make_eps(p + 2);
    const Derivation eq = make_eps(q + 2);
    const mpz_class fact = factorial(static_cast<unsigned long>(d - 2));
    Derivation sum = Derivation::zero(p + q + 4);
    for (int i = 0; i <= d - 2; ++i) {
        const int j = d - 2 - i;
        if (i > p || j > q) continue;
        const mpz_class den = binomial(static_cast<unsigned long>(p), static_cast<unsigned long>(i)) *
                              binomial(static_cast<unsigned long>(q), static_cast<unsigned long>(j));
        Rational coeff(mpq_class(fact, den));
        if (i % 2) coeff = -coeff;
        sum += coeff * der_bracket(der_ad_pow(e0, i, ep), der_ad_pow(e0, j, eq));
    }
    return {p, q, d, std::move(sum)};
}

inline bool is_highest_weight(const Derivation& d) { return der_bracket(make_phi0(), d).is_zero(); }

/// Q in Lie[a,b] with [P, b] + [a, Q] = 0, for push-invariant P of degree >= 2.
/// Solved depth by depth in Lyndon coordinates.
inline NcPoly recover_partner(const NcPoly& p) {
    if (!p.is_homogeneous() || p.degree() < 2) throw NotHomogeneous("recover_partner needs degree >= 2");
    if (!is_push_invariant(p)) throw NotPushInvariant();
    const int w = p.degree();
    NcPoly q;
    for (const auto& [dep, comp] : p.by_depth()) {
        const NcPoly target = lie_bracket(NcPoly::b(), comp);
        std::vector<NcPoly> cols;
        std::vector<NcPoly> basis;
        for (auto& el : lyndon_lie_basis(w, dep + 1)) {
            cols.push_back(lie_bracket(NcPoly::a(), el.poly));
            basis.push_back(std::move(el.poly));
        }
        auto x = solve_in_span(cols, target);
        if (!x) throw Error("recover_partner: no Lie solution for a push-invariant input");
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (!(*x)[i].is_zero()) q += (*x)[i] * basis[i];
    }
    return q;
}

inline bool starts_and_ends_with_b(const Word& w) {
    return !w.empty() && w.letters.front() == kLetterB && w.letters.back() == kLetterB;
}

/// Q with P = [a, Q], or nullopt. A factor exists exactly when no monomial of
/// P starts and ends with b; Q is found by solving in Lyndon coordinates.
inline std::optional<NcPoly> factor_ad_a(const NcPoly& p) {
    if (!p.is_homogeneous()) throw NotHomogeneous("factor_ad_a");
    if (p.is_zero()) return NcPoly();
    for (const auto& [w, c] : p.terms())
        if (starts_and_ends_with_b(w)) return std::nullopt;
    const int w = p.degree();
    if (w < 2) return std::nullopt;
    NcPoly q;
    for (const auto& [dep, comp] : p.by_depth()) {
        std::vector<NcPoly> cols;
        std::vector<NcPoly> basis;
        for (auto& el : lyndon_lie_basis(w - 1, dep)) {
            cols.push_back(lie_bracket(NcPoly::a(), el.poly));
            basis.push_back(std::move(el.poly));
        }
        auto x = solve_in_span(cols, comp);
        if (!x) return std::nullopt;
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (!(*x)[i].is_zero()) q += (*x)[i] * basis[i];
    }
    return q;
}

/// Index triple (i, j, k) labelling [a^i·b, [a^j·b, a^k·b]].
using Triple = std::array<int, 3>;

struct Theta3Certificate {
    std::vector<Triple> labels;
    RatVector coeffs;
};

/// The elements [a^i·b, [a^j·b, a^k·b]] with i, j, k >= 1 and i + j + k = degree - 3.
inline std::vector<std::pair<Triple, NcPoly>> theta3_spanning_set(int degree) {
    std::vector<std::pair<Triple, NcPoly>> out;
    const int s = degree - 3;
    for (int i = 1; i <= s; ++i)
        for (int j = 1; i + j < s; ++j) {
            const int k = s - i - j;
            out.emplace_back(Triple{i, j, k},
                             lie_bracket(c_element(i + 1), lie_bracket(c_element(j + 1), c_element(k + 1))));
        }
    return out;
}

/// Coefficients expressing a depth-3 homogeneous P in the triple-bracket
/// spanning set, or nullopt when P is outside its span.
inline std::optional<Theta3Certificate> theta3_membership(const NcPoly& p) {
    if (p.is_zero()) return Theta3Certificate{};
    if (!p.is_homogeneous() || p.homogeneous_depth() != 3)
        throw NotHomogeneous("theta3_membership expects a depth-3 homogeneous polynomial");
    Theta3Certificate cert;
    std::vector<NcPoly> cols;
    for (auto& [t, poly] : theta3_spanning_set(p.degree())) {
        cert.labels.push_back(t);
        cols.push_back(std::move(poly));
    }
    auto x = solve_in_span(cols, p);
    if (!x) return std::nullopt;
    cert.coeffs = std::move(*x);
    return cert;
}

/// D_P: a -> 0, b -> [b, P].
inline Derivation poisson_derivation(const NcPoly& p) {
    return {NcPoly(), lie_bracket(NcPoly::b(), p), p.is_zero() ? 0 : p.degree()};
}

/// {P, Q} = [P, Q] + D_P(Q) - D_Q(P).
inline NcPoly poisson(const NcPoly& p, const NcPoly& q) {
    return lie_bracket(p, q) + apply(poisson_derivation(p), q) - apply(poisson_derivation(q), p);
}

} // namespace flexion
