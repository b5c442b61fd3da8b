#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "flexion/mpoly.hpp"

namespace flexion {

enum class MouldKind : std::uint8_t { U, V };

inline std::string var_prefix(MouldKind k) { return k == MouldKind::U ? "u" : "v"; }

/// Family (A_r)_{r >= 0}: a constant at depth 0 and a rational function of r
/// variables at each depth r. Components above depth_bound are zero.
class Mould {
public:
    Mould() = default;
    Mould(MouldKind kind, int depth_bound, Rational empty = Rational(0))
        : kind_(kind), empty_(std::move(empty)), bound_(depth_bound) {
        if (depth_bound < 0) throw DomainError("negative depth bound");
    }

    [[nodiscard]] MouldKind kind() const { return kind_; }
    [[nodiscard]] const Rational& empty_value() const { return empty_; }
    [[nodiscard]] int depth_bound() const { return bound_; }
    [[nodiscard]] const std::map<int, RatComponent>& components() const { return comps_; }

    [[nodiscard]] RatComponent component(int r) const {
        auto it = comps_.find(r);
        return it == comps_.end() ? RatComponent(r) : it->second;
    }

    void set(int r, RatComponent c) {
        if (r < 1) throw DomainError("component depth must be >= 1");
        if (c.arity() != r) throw ArityMismatch();
        if (c.is_zero()) {
            comps_.erase(r);
            return;
        }
        if (r > bound_) throw DomainError("component beyond depth bound");
        comps_[r] = std::move(c);
    }

    void set_empty(const Rational& e) { empty_ = e; }

    [[nodiscard]] bool is_zero() const { return empty_.is_zero() && comps_.empty(); }

    /// Highest depth carrying a nonzero component, 0 if none.
    [[nodiscard]] int max_depth() const { return comps_.empty() ? 0 : comps_.rbegin()->first; }

    [[nodiscard]] bool is_polynomial() const {
        for (const auto& [r, c] : comps_)
            if (!c.is_polynomial()) return false;
        return true;
    }

    [[nodiscard]] Mould truncated(int bound) const {
        Mould m(kind_, std::min(bound, bound_), empty_);
        for (const auto& [r, c] : comps_)
            if (r <= bound) m.comps_[r] = c;
        return m;
    }

    Mould& operator*=(const Rational& s) {
        empty_ *= s;
        if (s.is_zero()) comps_.clear();
        for (auto& [r, c] : comps_) c *= s;
        return *this;
    }

    Mould& operator+=(const Mould& o) {
        if (o.kind_ != kind_) throw KindMismatch();
        empty_ += o.empty_;
        bound_ = std::max(bound_, o.bound_);
        for (const auto& [r, c] : o.comps_) {
            auto it = comps_.find(r);
            if (it == comps_.end()) {
                comps_[r] = c;
                continue;
            }
            it->second += c;
            if (it->second.is_zero()) comps_.erase(it);
        }
        return *this;
    }

    friend Mould operator+(Mould x, const Mould& y) { return x += y; }
    friend Mould operator-(Mould x, Mould y) { return x += (y *= Rational(-1)); }
    friend Mould operator*(const Rational& s, Mould x) { return x *= s; }

    /// Equality of the represented families; the depth bound is not compared.
    friend bool operator==(const Mould& x, const Mould& y) {
        if (x.kind_ != y.kind_ || !(x.empty_ == y.empty_) || x.comps_.size() != y.comps_.size()) return false;
        for (const auto& [r, c] : x.comps_) {
            auto it = y.comps_.find(r);
            if (it == y.comps_.end() || !(it->second == c)) return false;
        }
        return true;
    }

private:
    MouldKind kind_ = MouldKind::U;
    Rational empty_;
    int bound_ = 0;
    std::map<int, RatComponent> comps_;
};

namespace detail {

inline IntForm unit_form(int arity, int i) {
    IntForm f(static_cast<std::size_t>(arity), 0);
    f[static_cast<std::size_t>(i)] = 1;
    return f;
}

inline IntForm sum_form(int arity, int from, int to) {
    IntForm f(static_cast<std::size_t>(arity), 0);
    for (int i = from; i < to; ++i) f[static_cast<std::size_t>(i)] = 1;
    return f;
}

inline int result_bound(const Mould& a, const Mould& b, std::optional<int> cap) {
    const int natural = a.depth_bound() + b.depth_bound();
    return cap ? std::min(natural, *cap) : natural;
}

inline void require_ari(const Mould& a, const Mould& b) {
    if (a.kind() != b.kind()) throw KindMismatch();
    if (!a.empty_value().is_zero() || !b.empty_value().is_zero())
        throw DomainError("bracket operands must vanish at the empty sequence");
}

} // namespace detail

/// U_{2i}: u_1^{2i} concentrated in depth 1, for 2i >= -2 even.
inline Mould make_U(int index) {
    if (index < -2 || index % 2 != 0) throw DomainError("U index must be even and >= -2");
    Mould m(MouldKind::U, 1);
    if (index >= 0)
        m.set(1, RatComponent(MPoly::var(1, 0, index)));
    else
        m.set(1, RatComponent(MPoly::constant(1, Rational(1)), {{LinForm::var(1, 0), 2}}));
    return m;
}

/// mu(A, B)(x_1..x_r) = sum_i A(x_1..x_i) B(x_{i+1}..x_r).
inline Mould mould_mu(const Mould& a, const Mould& b, std::optional<int> cap = std::nullopt) {
    if (a.kind() != b.kind()) throw KindMismatch();
    Mould out(a.kind(), detail::result_bound(a, b, cap), a.empty_value() * b.empty_value());
    for (int r = 1; r <= out.depth_bound(); ++r) {
        RatSum sum(r);
        if (!a.empty_value().is_zero()) sum.add(b.component(r), a.empty_value());
        if (!b.empty_value().is_zero()) sum.add(a.component(r), b.empty_value());
        for (int i = 1; i < r; ++i) {
            const RatComponent ai = a.component(i);
            if (ai.is_zero()) continue;
            const RatComponent bj = b.component(r - i);
            if (bj.is_zero()) continue;
            sum.add_product(ai.embed(r, 0), bj.embed(r, i));
        }
        out.set(r, sum.result());
    }
    return out;
}

inline Mould mould_lu(const Mould& a, const Mould& b, std::optional<int> cap = std::nullopt) {
    return mould_mu(a, b, cap) - mould_mu(b, a, cap);
}

/// u-form arit(B)·A: sum over w = abc of A(a⌈c)B(b) for c nonempty, minus
/// A(a⌉c)B(b) for a nonempty. a⌈c adds the letters of b to the first letter
/// of c; a⌉c adds them to the last letter of a.
inline Mould arit_u(const Mould& b, const Mould& a, std::optional<int> cap = std::nullopt) {
    detail::require_ari(a, b);
    if (a.kind() != MouldKind::U) throw KindMismatch();
    Mould out(MouldKind::U, detail::result_bound(a, b, cap));
    for (int r = 2; r <= out.depth_bound(); ++r) {
        RatSum sum(r);
        for (int k = 0; k < r; ++k)
            for (int l = k + 1; l <= r; ++l) {
                const RatComponent bb = b.component(l - k);
                const int ra = r - (l - k);
                if (bb.is_zero() || ra < 1) continue;
                const RatComponent aa = a.component(ra);
                if (aa.is_zero()) continue;
                const RatComponent bpart = bb.embed(r, k);
                if (l < r) {
                    std::vector<IntForm> img;
                    for (int i = 0; i < k; ++i) img.push_back(detail::unit_form(r, i));
                    img.push_back(detail::sum_form(r, k, l + 1));
                    for (int i = l + 1; i < r; ++i) img.push_back(detail::unit_form(r, i));
                    sum.add_product(aa.substitute_linear(img, r), bpart);
                }
                if (k > 0) {
                    std::vector<IntForm> img;
                    for (int i = 0; i < k - 1; ++i) img.push_back(detail::unit_form(r, i));
                    img.push_back(detail::sum_form(r, k - 1, l));
                    for (int i = l; i < r; ++i) img.push_back(detail::unit_form(r, i));
                    sum.add_product(aa.substitute_linear(img, r), bpart, Rational(-1));
                }
            }
        out.set(r, sum.result());
    }
    return out;
}

/// v-form arit(B)·A: sum of A(ac)B(b⌋) for c nonempty minus A(ac)B(⌊b) for a
/// nonempty, where b⌋ subtracts the first letter of c from each letter of b
/// and ⌊b subtracts the last letter of a.
inline Mould arit_v(const Mould& b, const Mould& a, std::optional<int> cap = std::nullopt) {
    detail::require_ari(a, b);
    if (a.kind() != MouldKind::V) throw KindMismatch();
    Mould out(MouldKind::V, detail::result_bound(a, b, cap));
    for (int r = 2; r <= out.depth_bound(); ++r) {
        RatSum sum(r);
        for (int k = 0; k < r; ++k)
            for (int l = k + 1; l <= r; ++l) {
                const RatComponent bb = b.component(l - k);
                const int ra = r - (l - k);
                if (bb.is_zero() || ra < 1) continue;
                const RatComponent aa = a.component(ra);
                if (aa.is_zero()) continue;
                std::vector<IntForm> aimg;
                for (int i = 0; i < k; ++i) aimg.push_back(detail::unit_form(r, i));
                for (int i = l; i < r; ++i) aimg.push_back(detail::unit_form(r, i));
                const RatComponent apart = aa.substitute_linear(aimg, r);
                auto shifted = [&](int pivot) {
                    std::vector<IntForm> img;
                    for (int i = k; i < l; ++i) {
                        IntForm f = detail::unit_form(r, i);
                        f[static_cast<std::size_t>(pivot)] -= 1;
                        img.push_back(std::move(f));
                    }
                    return bb.substitute_linear(img, r);
                };
                if (l < r) sum.add_product(apart, shifted(l));
                if (k > 0) sum.add_product(apart, shifted(k - 1), Rational(-1));
            }
        out.set(r, sum.result());
    }
    return out;
}

inline Mould arit(const Mould& b, const Mould& a, std::optional<int> cap = std::nullopt) {
    return a.kind() == MouldKind::U ? arit_u(b, a, cap) : arit_v(b, a, cap);
}

/// ari(A, B) = arit(B)·A - arit(A)·B + lu(A, B).
inline Mould mould_ari(const Mould& a, const Mould& b, std::optional<int> cap = std::nullopt) {
    detail::require_ari(a, b);
    return arit(b, a, cap) - arit(a, b, cap) + mould_lu(a, b, cap);
}

/// u -> v: A(v_r, v_{r-1} - v_r, ..., v_1 - v_2). v -> u uses the inverse
/// change of variables B(u_1 + ... + u_r, ..., u_1 + u_2, u_1), so that swap
/// is an involution.
inline Mould mould_swap(const Mould& a) {
    const MouldKind to = a.kind() == MouldKind::U ? MouldKind::V : MouldKind::U;
    Mould out(to, a.depth_bound(), a.empty_value());
    for (const auto& [r, c] : a.components()) {
        std::vector<IntForm> img;
        for (int i = 0; i < r; ++i) {
            if (a.kind() == MouldKind::U) {
                IntForm f = detail::unit_form(r, r - 1 - i);
                if (i > 0) f[static_cast<std::size_t>(r - i)] = -1;
                img.push_back(std::move(f));
            } else {
                img.push_back(detail::sum_form(r, 0, r - i));
            }
        }
        out.set(r, c.substitute_linear(img, r));
    }
    return out;
}

/// push(A)(u_1..u_r) = A(-u_1 - ... - u_r, u_1, ..., u_{r-1}).
inline Mould mould_push(const Mould& a) {
    if (a.kind() != MouldKind::U) throw KindMismatch();
    Mould out(MouldKind::U, a.depth_bound(), a.empty_value());
    for (const auto& [r, c] : a.components()) {
        std::vector<IntForm> img;
        IntForm first(static_cast<std::size_t>(r), -1);
        img.push_back(first);
        for (int i = 0; i + 1 < r; ++i) img.push_back(detail::unit_form(r, i));
        out.set(r, c.substitute_linear(img, r));
    }
    return out;
}

inline bool is_push_invariant(const Mould& a) { return mould_push(a) == a; }

/// Position sequences of the (s, r-s) shuffles of x_1..x_s with x_{s+1}..x_r.
inline std::vector<std::vector<int>> shuffles(int r, int s) {
    std::vector<std::vector<int>> out;
    std::vector<int> pick(static_cast<std::size_t>(r), 0);
    std::fill(pick.begin(), pick.begin() + s, 1);
    std::sort(pick.begin(), pick.end());
    do {
        std::vector<int> seq;
        int left = 0;
        int right = s;
        for (int p : pick) seq.push_back(p ? left++ : right++);
        out.push_back(std::move(seq));
    } while (std::next_permutation(pick.begin(), pick.end()));
    return out;
}

/// Sum over the (s, r-s) shuffles of A_r at the shuffled variables.
inline RatComponent shuffle_sum(const RatComponent& c, int s) {
    const int r = c.arity();
    RatSum sum(r);
    for (const auto& seq : shuffles(r, s)) {
        std::vector<IntForm> img;
        for (int v : seq) img.push_back(detail::unit_form(r, v));
        sum.add(c.substitute_linear(img, r));
    }
    return sum.result();
}

inline bool is_alternal(const Mould& a) {
    for (const auto& [r, c] : a.components())
        for (int s = 1; s < r; ++s)
            if (!shuffle_sum(c, s).is_zero()) return false;
    return true;
}

inline bool is_bialternal(const Mould& a) {
    if (a.kind() != MouldKind::U) throw KindMismatch();
    return is_alternal(a) && is_alternal(mould_swap(a));
}

/// A(x_r, ..., x_1).
inline RatComponent reversed(const RatComponent& c) {
    const int r = c.arity();
    std::vector<IntForm> img;
    for (int i = 0; i < r; ++i) img.push_back(detail::unit_form(r, r - 1 - i));
    return c.substitute_linear(img, r);
}

/// Factors of Δ_r: u_1...u_r(u_1+...+u_r), or v_1(v_1-v_2)...(v_{r-1}-v_r)v_r.
inline RatComponent::Den delta_forms(MouldKind kind, int r) {
    RatComponent::Den d;
    if (kind == MouldKind::U) {
        for (int i = 0; i < r; ++i) d[LinForm::var(r, i)] += 1;
        d[LinForm(detail::sum_form(r, 0, r))] += 1;
    } else {
        d[LinForm::var(r, 0)] += 1;
        for (int i = 0; i + 1 < r; ++i) {
            IntForm f = detail::unit_form(r, i);
            f[static_cast<std::size_t>(i + 1)] = -1;
            d[LinForm(f)] += 1;
        }
        d[LinForm::var(r, r - 1)] += 1;
    }
    return d;
}

inline MPoly delta_poly(MouldKind kind, int r) {
    MPoly p = MPoly::constant(r, Rational(1));
    for (const auto& [f, m] : delta_forms(kind, r)) p *= f.poly().pow(m);
    return p;
}

struct SingularityReport {
    struct Row {
        int depth = 0;
        bool polynomial = false;
        RatComponent cleared;
        /// A_r / Δ_r when that quotient is a polynomial.
        std::optional<MPoly> quotient;
    };
    std::vector<Row> rows;

    [[nodiscard]] bool all_polynomial() const {
        for (const auto& r : rows)
            if (!r.polynomial) return false;
        return true;
    }
};

/// For each nonzero depth, Δ_r·A_r and whether it is a polynomial.
inline SingularityReport singularity_report(const Mould& a) {
    SingularityReport rep;
    for (const auto& [r, c] : a.components()) {
        RatComponent cl = c.times_forms(delta_forms(a.kind(), r));
        RatComponent q = c.over_forms(delta_forms(a.kind(), r));
        std::optional<MPoly> quot;
        if (q.is_polynomial()) quot = q.num();
        const bool poly = cl.is_polynomial();
        rep.rows.push_back({r, poly, std::move(cl), std::move(quot)});
    }
    return rep;
}

/// Boundary identity M̌(0, v_2, ..., v_r) = M̌(v_2, ..., v_r, 0).
inline bool boundary_symmetry_holds(const MPoly& mcheck) {
    const int r = mcheck.arity();
    if (r < 1) return true;
    const int t = r - 1;
    std::vector<IntForm> left;
    std::vector<IntForm> right;
    left.emplace_back(static_cast<std::size_t>(t), 0);
    for (int i = 0; i < t; ++i) {
        left.push_back(detail::unit_form(t, i));
        right.push_back(detail::unit_form(t, i));
    }
    right.emplace_back(static_cast<std::size_t>(t), 0);
    return mcheck.substitute_linear(left, t) == mcheck.substitute_linear(right, t);
}

/// Checks the boundary identity on every Δ_v-cleared component of a v-kind
/// alternal mould whose cleared components are polynomial.
inline bool check_boundary_symmetry(const Mould& m) {
    if (m.kind() != MouldKind::V) throw KindMismatch();
    if (!is_alternal(m)) throw NotAlternal();
    for (const auto& row : singularity_report(m).rows) {
        if (!row.polynomial) throw DomainError("Delta_v times the component is not polynomial");
        if (!boundary_symmetry_holds(row.cleared.num())) return false;
    }
    return true;
}

/// One line per depth. Components divisible by Δ_r print as Δ_r times the
/// quotient; singular ones as the cleared numerator over Δ_r.
inline std::string render(const Mould& m) {
    const std::string var = var_prefix(m.kind());
    std::string s;
    if (!m.empty_value().is_zero()) s += "r=0: " + m.empty_value().str() + "\n";
    for (const auto& [r, c] : m.components()) {
        s += "r=" + std::to_string(r) + ": ";
        if (c.is_polynomial()) {
            const RatComponent q = r >= 2 ? c.over_forms(delta_forms(m.kind(), r)) : RatComponent(r);
            if (r >= 2 && q.is_polynomial())
                s += "Delta_" + std::to_string(r) + " * (" + q.num().str(var) + ")";
            else
                s += c.num().str(var);
        } else {
            RatComponent cl = c.times_forms(delta_forms(m.kind(), r));
            if (cl.is_polynomial())
                s += "(" + cl.num().str(var) + ") / Delta_" + std::to_string(r);
            else
                s += c.str(var);
        }
        s += "\n";
    }
    if (s.empty()) s = "0\n";
    return s;
}

inline std::ostream& operator<<(std::ostream& os, const Mould& m) { return os << render(m); }

} // namespace flexion
