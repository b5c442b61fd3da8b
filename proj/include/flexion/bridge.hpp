#pragma once

#include <optional>
#include <vector>

#include "flexion/derivations.hpp"
#include "flexion/linsys.hpp"
#include "flexion/mould.hpp"

namespace flexion {

/// ma: C_{i_1}...C_{i_r} -> (-1)^{i_1+...+i_r-r} u_1^{i_1-1}...u_r^{i_r-1}, extended
/// linearly depth by depth. The empty word goes to the value at the empty sequence.
inline Mould ma(const NcPoly& p) {
    if (p.alphabet().kind() != Alphabet::Kind::AB) throw AlphabetMismatch();
    const auto parts = p.by_depth();
    const int bound = parts.empty() ? 0 : parts.rbegin()->first;
    Mould m(MouldKind::U, bound);
    for (const auto& [r, comp] : parts) {
        if (r == 0) {
            for (const auto& [w, c] : comp.terms()) {
                if (!w.empty()) throw NotInCSpan(comp.word_str(w));
                m.set_empty(c);
            }
            continue;
        }
        MPoly poly(r);
        for (const auto& [ix, c] : rewrite_in_c(comp, r)) {
            Exponents e(static_cast<std::size_t>(r));
            int total = 0;
            for (int k = 0; k < r; ++k) {
                e[static_cast<std::size_t>(k)] = ix[static_cast<std::size_t>(k)] - 1;
                total += e[static_cast<std::size_t>(k)];
            }
            poly.add_term(e, total % 2 ? -c : c);
        }
        m.set(r, RatComponent(std::move(poly)));
    }
    return m;
}

/// Inverse of ma on polynomial alternal moulds; the result is checked to be a Lie element.
inline NcPoly ma_inverse(const Mould& m) {
    if (m.kind() != MouldKind::U) throw KindMismatch();
    if (!m.is_polynomial()) throw DomainError("ma_inverse needs a polynomial mould");
    if (!is_alternal(m)) throw NotAlternal();
    NcPoly out;
    if (!m.empty_value().is_zero()) out += m.empty_value() * NcPoly::one();
    for (const auto& [r, c] : m.components()) {
        for (const auto& [e, x] : c.num().terms()) {
            Composition comp;
            int total = 0;
            for (int k : e) {
                comp.push_back(k + 1);
                total += k;
            }
            out += (total % 2 ? -x : x) * c_monomial(comp);
        }
    }
    if (!is_lie(out)) throw NotLie();
    return out;
}

/// ma(F) / (u_1...u_r) per depth.
inline Mould da(const NcPoly& f) {
    Mould m = ma(f);
    Mould out(MouldKind::U, m.depth_bound(), m.empty_value());
    for (const auto& [r, c] : m.components()) {
        RatComponent::Den d;
        for (int i = 0; i < r; ++i) d[LinForm::var(r, i)] += 1;
        out.set(r, c.over_forms(d));
    }
    return out;
}

/// ma(F) / Δ_r per depth.
inline Mould Da(const NcPoly& f) {
    Mould m = ma(f);
    Mould out(MouldKind::U, m.depth_bound(), m.empty_value());
    for (const auto& [r, c] : m.components()) out.set(r, c.over_forms(delta_forms(MouldKind::U, r)));
    return out;
}

/// True when D passes the Der0 conditions checked before Ψ: kills [a,b], no
/// linear a-term in D(a), and is not phi_0.
inline bool is_der_zero(const Derivation& d) {
    if (d.is_sl2_generator()) return false;
    if (!apply(d, lie_bracket(NcPoly::a(), NcPoly::b())).is_zero()) return false;
    if (!d.val_a().coeff(Word{kLetterA}).is_zero()) return false;
    if (d.val_a().is_zero() && !d.val_b().is_zero()) return false;
    return true;
}

/// Ψ(D) = Da(D(a)) for D in Der0.
inline Mould psi(const Derivation& d) {
    if (d.is_sl2_generator()) throw NotDerZero("phi_0 lies outside Der0");
    if (!apply(d, lie_bracket(NcPoly::a(), NcPoly::b())).is_zero()) throw NotDerZero("D([a,b]) is not zero");
    if (!d.val_a().coeff(Word{kLetterA}).is_zero()) throw NotDerZero("D(a) has a linear term in a");
    if (d.val_a().is_zero() && !d.val_b().is_zero()) throw NotDerZero("D(a) = 0 but D is nonzero");
    return Da(d.val_a());
}

/// Darit_U·A = -arit(Da(U))·A - lu(A, Da(U)).
inline Mould darit(const NcPoly& u, const Mould& a, std::optional<int> cap = std::nullopt) {
    if (u.is_zero()) return Mould(MouldKind::U, cap ? std::min(*cap, a.depth_bound()) : a.depth_bound());
    const Mould du = Da(u);
    return Rational(-1) * arit_u(du, a, cap) - mould_lu(a, du, cap);
}

/// The Der0 derivation with D(a) = U, for push-invariant Lie U of degree >= 2.
inline Derivation associated_derivation(const NcPoly& u) {
    return {u, recover_partner(u), u.degree() - 1};
}

/// Linearized double shuffle test on a homogeneous Lie element of depth >= 2.
inline bool is_ls(const NcPoly& p, int depth) {
    if (depth < 2) throw DomainError("ls membership is only decided in depth >= 2");
    if (p.is_zero()) return true;
    if (!p.is_homogeneous()) throw NotHomogeneous("is_ls expects a weight-homogeneous polynomial");
    if (!is_lie(p)) throw NotLie();
    return is_lie(star_projection(p, depth));
}

/// Basis of the weight-n depth-d part of ls (d >= 2), as canonical integer
/// combinations of the Lyndon basis, expanded.
inline std::vector<NcPoly> ls_basis(int weight, int depth) {
    if (depth < 2) throw DomainError("ls basis is only computed in depth >= 2");
    auto lyn = lyndon_lie_basis(weight, depth);
    if (lyn.empty()) return {};
    std::vector<NcPoly> defects;
    for (const auto& el : lyn) {
        NcPoly s = star_projection(el.poly, depth);
        defects.push_back(dynkin(s) - Rational(depth) * s);
    }
    std::vector<NcPoly> out;
    for (const auto& v : kernel_basis(ColumnSystem<NcPoly>(defects).matrix)) {
        NcPoly p;
        for (std::size_t i = 0; i < v.size(); ++i)
            if (!v[i].is_zero()) p += v[i] * lyn[i].poly;
        out.push_back(std::move(p));
    }
    return out;
}

} // namespace flexion
