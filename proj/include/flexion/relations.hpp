#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "flexion/bridge.hpp"

namespace flexion {

using PQ = std::pair<int, int>;

/// (p, q) with p <= q, both even >= 2, p + q = n - 4. For even d the diagonal
/// pair is dropped, since h^d_{q,p} = (-1)^{d+1} h^d_{p,q} forces h^d_{p,p} = 0.
inline std::vector<PQ> h_labels(int weight, int depth) {
    std::vector<PQ> out;
    const int s = weight - 4;
    if (s < 4 || s % 2) return out;
    for (int p = 2; 2 * p <= s; p += 2) {
        const int q = s - p;
        if (p == q && depth % 2 == 0) continue;
        out.emplace_back(p, q);
    }
    return out;
}

struct Theta3Witness {
    std::vector<Triple> labels;
    RatVector coeffs;
};

/// Coefficients c_{rst} over [eps_{2r+2}, [eps_{2s+2}, eps_{2t+2}]], labelled by eps indices.
struct LiftSolution {
    std::vector<Triple> labels;
    RatVector coeffs;
};

struct RelationCertificate {
    int weight = 0;
    int depth = 0;
    std::vector<PQ> labels;
    std::vector<RatVector> kernel;
    std::vector<bool> highest_weight;
    std::vector<std::optional<Theta3Witness>> witnesses;
    std::vector<std::optional<LiftSolution>> lifts;
};

/// Σ c_{pq} h^d_{p,q} for a kernel vector.
inline Derivation combine_h(int depth, const std::vector<PQ>& labels, const RatVector& c, int weight) {
    Derivation sum = Derivation::zero(weight);
    for (std::size_t k = 0; k < labels.size(); ++k)
        if (!c[k].is_zero()) sum += c[k] * make_h(labels[k].first, labels[k].second, depth).derivation;
    return sum;
}

/// Kernel of c -> Σ c_{pq} h^d_{p,q}(a), exactly in depth 2 and modulo the
/// triple-bracket span in depth 3.
inline RelationCertificate relation_kernel(int weight, int depth) {
    if (depth != 2 && depth != 3) throw DomainError("relation_kernel supports depth 2 and 3");
    RelationCertificate cert;
    cert.weight = weight;
    cert.depth = depth;
    cert.labels = h_labels(weight, depth);
    if (cert.labels.empty()) return cert;
    std::vector<NcPoly> cols;
    for (const auto& [p, q] : cert.labels) cols.push_back(make_h(p, q, depth).derivation.val_a());
    const std::size_t nh = cols.size();
    if (depth == 2) {
        cert.kernel = kernel_basis(ColumnSystem<NcPoly>(cols).matrix);
        for (const auto& c : cert.kernel)
            if (!combine_h(2, cert.labels, c, weight).is_zero())
                throw Error("depth-2 relation vanishes on a but not on b");
    } else {
        for (auto& [t, poly] : theta3_spanning_set(weight + 1)) cols.push_back(std::move(poly));
        std::vector<RatVector> projected;
        for (const auto& v : kernel_basis(ColumnSystem<NcPoly>(cols).matrix)) {
            RatVector head(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(nh));
            bool nonzero = false;
            for (const auto& x : head) nonzero = nonzero || !x.is_zero();
            if (nonzero) projected.push_back(std::move(head));
        }
        cert.kernel = row_space_basis(projected);
    }
    for (const auto& c : cert.kernel) {
        const Derivation d = combine_h(depth, cert.labels, c, weight);
        cert.highest_weight.push_back(is_highest_weight(d));
        if (depth == 3) {
            auto w = theta3_membership(d.val_a());
            cert.witnesses.push_back(w ? std::optional<Theta3Witness>({w->labels, w->coeffs}) : std::nullopt);
        } else {
            cert.witnesses.emplace_back();
        }
        cert.lifts.emplace_back();
    }
    return cert;
}

/// [eps_i, [eps_j, eps_k]] with i, j, k >= 4 even and i + j + k = weight.
inline std::vector<std::pair<Triple, Derivation>> lift_family(int weight) {
    std::vector<std::pair<Triple, Derivation>> out;
    const int s = weight;
    for (int i = 4; i <= s; i += 2)
        for (int j = 4; i + j + 4 <= s; j += 2) {
            const int k = s - i - j;
            out.emplace_back(Triple{i, j, k}, der_bracket(make_eps(i), der_bracket(make_eps(j), make_eps(k))));
        }
    return out;
}

/// Coefficients over lift_family(weight) whose a-images sum to D(a), or nullopt.
inline std::optional<LiftSolution> lift_derivation(const Derivation& d, int weight) {
    LiftSolution sol;
    std::vector<NcPoly> cols;
    for (auto& [t, der] : lift_family(weight)) {
        sol.labels.push_back(t);
        cols.push_back(der.val_a());
    }
    auto x = solve_in_span(cols, d.val_a());
    if (!x) return std::nullopt;
    sol.coeffs = std::move(*x);
    return sol;
}

/// Lift of the index-th kernel vector of a depth-3 certificate.
inline std::optional<LiftSolution> lift_relation(const RelationCertificate& cert, std::size_t index) {
    if (cert.depth != 3) throw DomainError("lifting applies to depth-3 certificates");
    if (index >= cert.kernel.size()) throw DomainError("kernel index out of range");
    return lift_derivation(combine_h(3, cert.labels, cert.kernel[index], cert.weight), cert.weight);
}

/// Fills cert.lifts; returns false if some kernel vector has no lift.
inline bool attach_lifts(RelationCertificate& cert) {
    bool all = true;
    for (std::size_t k = 0; k < cert.kernel.size(); ++k) {
        cert.lifts[k] = lift_relation(cert, k);
        all = all && cert.lifts[k].has_value();
    }
    return all;
}

inline Derivation expand_lift(const LiftSolution& sol, int weight) {
    Derivation sum = Derivation::zero(weight);
    for (std::size_t k = 0; k < sol.labels.size(); ++k) {
        if (sol.coeffs[k].is_zero()) continue;
        const auto [i, j, l] = sol.labels[k];
        sum += sol.coeffs[k] * der_bracket(make_eps(i), der_bracket(make_eps(j), make_eps(l)));
    }
    return sum;
}

/// Recomputes every claim of a certificate from scratch.
inline bool verify_certificate(const RelationCertificate& cert) {
    const auto labels = h_labels(cert.weight, cert.depth);
    if (labels != cert.labels) return false;
    if (cert.witnesses.size() != cert.kernel.size() || cert.lifts.size() != cert.kernel.size()) return false;
    for (std::size_t k = 0; k < cert.kernel.size(); ++k) {
        if (cert.kernel[k].size() != cert.labels.size()) return false;
        const Derivation d = combine_h(cert.depth, cert.labels, cert.kernel[k], cert.weight);
        if (d.is_zero() && cert.depth == 3) return false;
        if (cert.depth == 2) {
            if (!d.is_zero()) return false;
            continue;
        }
        const auto& w = cert.witnesses.at(k);
        if (!w || w->labels.size() != w->coeffs.size()) return false;
        NcPoly back;
        for (std::size_t i = 0; i < w->labels.size(); ++i) {
            const auto [x, y, z] = w->labels[i];
            if (x < 1 || y < 1 || z < 1) return false;
            back += w->coeffs[i] * lie_bracket(c_element(x + 1), lie_bracket(c_element(y + 1), c_element(z + 1)));
        }
        if (!(back == d.val_a())) return false;
        if (const auto& l = cert.lifts[k]) {
            if (l->labels.size() != l->coeffs.size()) return false;
            for (const auto& [x, y, z] : l->labels)
                if (x < 4 || y < 4 || z < 4 || x % 2 || y % 2 || z % 2 || x + y + z != cert.weight) return false;
            if (!(expand_lift(*l, cert.weight) == d)) return false;
        }
    }
    return true;
}

/// Generic degree-m monomials in d variables, graded-lex order.
inline std::vector<Exponents> monomials(int arity, int degree) {
    std::vector<Exponents> out;
    Exponents e(static_cast<std::size_t>(arity), 0);
    auto rec = [&](auto&& self, int i, int left) -> void {
        if (i == arity - 1) {
            e[static_cast<std::size_t>(i)] = left;
            out.push_back(e);
            return;
        }
        for (int k = left; k >= 0; --k) {
            e[static_cast<std::size_t>(i)] = k;
            self(self, i + 1, left - k);
        }
    };
    if (arity > 0) rec(rec, 0, degree);
    std::sort(out.begin(), out.end(), GradedLex{});
    return out;
}

namespace detail {

/// Stacked linear conditions, keyed by (condition index, monomial).
struct ConditionVector {
    std::map<std::pair<int, Exponents>, Rational> t;
    [[nodiscard]] const auto& terms() const { return t; }
    [[nodiscard]] bool is_zero() const { return t.empty(); }
    void add(int cond, const MPoly& p) {
        for (const auto& [e, c] : p.terms()) t[{cond, e}] += c;
    }
};

} // namespace detail

/// Basis of polynomial bialternal moulds concentrated in depth d with
/// homogeneous degree m, as canonical integer combinations of monomials.
/// Under the ls convention odd depth-1 parts are excluded.
inline std::vector<MPoly> bialternal_space(int m, int depth, bool ls_convention = false) {
    if (depth < 1 || depth > 3) throw DomainError("bialternal_space supports depth 1..3");
    if (m < 0) throw DomainError("negative degree");
    if (depth == 1) {
        if (ls_convention && m % 2) return {};
        return {MPoly::var(1, 0, m)};
    }
    const auto monos = monomials(depth, m);
    std::vector<detail::ConditionVector> cols;
    for (const auto& e : monos) {
        MPoly p(depth);
        p.add_term(e, Rational(1));
        const RatComponent c(p);
        Mould mu(MouldKind::U, depth);
        mu.set(depth, c);
        const RatComponent sw = mould_swap(mu).component(depth);
        detail::ConditionVector v;
        int idx = 0;
        for (int s = 1; s < depth; ++s) {
            v.add(idx++, shuffle_sum(c, s).num());
            v.add(idx++, shuffle_sum(sw, s).num());
        }
        cols.push_back(std::move(v));
    }
    std::vector<MPoly> out;
    for (const auto& k : kernel_basis(ColumnSystem<detail::ConditionVector>(cols).matrix)) {
        MPoly p(depth);
        for (std::size_t i = 0; i < k.size(); ++i) p.add_term(monos[i], k[i]);
        out.push_back(std::move(p));
    }
    return out;
}

struct DimensionRow {
    int weight = 0;
    int depth = 3;
    int degree = 0;
    std::size_t bialternal_dim = 0;
    std::size_t family_rank = 0;
};

/// Depth-3 parts of ari(U_{2r}, ari(U_{2s}, U_{2t})), r, s, t >= 1, of degree m.
inline std::vector<std::pair<Triple, MPoly>> goncharov_family(int m) {
    std::vector<std::pair<Triple, MPoly>> out;
    if (m % 2 || m < 6) return out;
    const int s = m / 2;
    for (int r = 1; r <= s; ++r)
        for (int t1 = 1; r + t1 < s; ++t1) {
            const int t2 = s - r - t1;
            Mould x = mould_ari(make_U(2 * r), mould_ari(make_U(2 * t1), make_U(2 * t2)));
            const RatComponent c = x.component(3);
            if (!c.is_polynomial()) throw Error("bracket of polynomial moulds is not polynomial");
            out.emplace_back(Triple{2 * r, 2 * t1, 2 * t2}, c.num());
        }
    return out;
}

inline DimensionRow goncharov_span_check(int weight) {
    DimensionRow row;
    row.weight = weight;
    row.degree = weight - 3;
    if (row.degree < 0) return row;
    row.bialternal_dim = bialternal_space(row.degree, 3).size();
    std::vector<MPoly> fam;
    for (auto& [t, p] : goncharov_family(row.degree)) fam.push_back(std::move(p));
    row.family_rank = span_rank(fam);
    return row;
}

} // namespace flexion
