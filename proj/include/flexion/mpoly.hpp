#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "flexion/errors.hpp"
#include "flexion/rational.hpp"

namespace flexion {

using Exponents = std::vector<int>;

/// Graded lexicographic order on exponent vectors: total degree first, then
/// lexicographic with x_1 most significant.
struct GradedLex {
    bool operator()(const Exponents& x, const Exponents& y) const {
        const int dx = std::accumulate(x.begin(), x.end(), 0);
        const int dy = std::accumulate(y.begin(), y.end(), 0);
        if (dx != dy) return dx < dy;
        return x < y;
    }
};

/// Integer linear image x_i -> sum_j c_j y_j used by substitute_linear.
using IntForm = std::vector<long>;

/// Sparse polynomial in x_1..x_r with exact rational coefficients.
class MPoly {
public:
    using Terms = std::map<Exponents, Rational, GradedLex>;

    MPoly() = default;
    explicit MPoly(int arity) : arity_(arity) {
        if (arity < 0) throw DomainError("negative arity");
    }

    static MPoly constant(int arity, const Rational& c) {
        MPoly p(arity);
        p.add_term(Exponents(static_cast<std::size_t>(arity), 0), c);
        return p;
    }
    /// x_i, 0-based.
    static MPoly var(int arity, int i, int power = 1) {
        if (i < 0 || i >= arity) throw DomainError("variable index out of range");
        Exponents e(static_cast<std::size_t>(arity), 0);
        e[static_cast<std::size_t>(i)] = power;
        MPoly p(arity);
        p.add_term(e, Rational(1));
        return p;
    }
    static MPoly linear(const IntForm& coeffs) {
        const int r = static_cast<int>(coeffs.size());
        MPoly p(r);
        for (int i = 0; i < r; ++i)
            if (coeffs[static_cast<std::size_t>(i)] != 0) {
                Exponents e(static_cast<std::size_t>(r), 0);
                e[static_cast<std::size_t>(i)] = 1;
                p.add_term(e, Rational(coeffs[static_cast<std::size_t>(i)]));
            }
        return p;
    }

    [[nodiscard]] int arity() const { return arity_; }
    [[nodiscard]] const Terms& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] std::size_t size() const { return terms_.size(); }

    /// Total degree, -1 for zero.
    [[nodiscard]] int degree() const {
        if (terms_.empty()) return -1;
        const auto& e = terms_.rbegin()->first;
        return std::accumulate(e.begin(), e.end(), 0);
    }

    [[nodiscard]] bool is_homogeneous() const {
        if (terms_.empty()) return true;
        const auto& lo = terms_.begin()->first;
        return std::accumulate(lo.begin(), lo.end(), 0) == degree();
    }

    [[nodiscard]] Rational coeff(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const Exponents& e, const Rational& c) {
        if (static_cast<int>(e.size()) != arity_) throw ArityMismatch();
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    MPoly& operator+=(const MPoly& o) {
        check(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    MPoly& operator-=(const MPoly& o) {
        check(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    MPoly& operator*=(const Rational& s) {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, c] : terms_) c *= s;
        return *this;
    }

    friend MPoly operator+(MPoly x, const MPoly& y) { return x += y; }
    friend MPoly operator-(MPoly x, const MPoly& y) { return x -= y; }
    friend MPoly operator-(MPoly x) { return x *= Rational(-1); }
    friend MPoly operator*(const Rational& s, MPoly x) { return x *= s; }
    friend MPoly operator*(MPoly x, const Rational& s) { return x *= s; }

    friend MPoly operator*(const MPoly& x, const MPoly& y) {
        x.check(y);
        MPoly r(x.arity_);
        Exponents e(static_cast<std::size_t>(x.arity_));
        for (const auto& [e1, c1] : x.terms_)
            for (const auto& [e2, c2] : y.terms_) {
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
                r.add_term(e, c1 * c2);
            }
        return r;
    }
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

    friend bool operator==(const MPoly&, const MPoly&) = default;

    [[nodiscard]] MPoly pow(int k) const {
        MPoly r = constant(arity_, Rational(1));
        for (int i = 0; i < k; ++i) r *= *this;
        return r;
    }

    /// Composition with x_i -> images[i], each image an integer linear form
    /// in `target_arity` variables.
    [[nodiscard]] MPoly substitute_linear(const std::vector<IntForm>& images, int target_arity) const {
        if (static_cast<int>(images.size()) != arity_) throw ArityMismatch();
        std::vector<std::vector<MPoly>> powers(images.size());
        for (std::size_t i = 0; i < images.size(); ++i) {
            if (static_cast<int>(images[i].size()) != target_arity) throw ArityMismatch();
            powers[i].push_back(constant(target_arity, Rational(1)));
        }
        auto power_of = [&](std::size_t i, int k) -> const MPoly& {
            const MPoly base = linear(images[i]);
            while (static_cast<int>(powers[i].size()) <= k) powers[i].push_back(powers[i].back() * base);
            return powers[i][static_cast<std::size_t>(k)];
        };
        MPoly out(target_arity);
        for (const auto& [e, c] : terms_) {
            MPoly t = constant(target_arity, c);
            for (std::size_t i = 0; i < e.size(); ++i)
                if (e[i] > 0) t *= power_of(i, e[i]);
            out += t;
        }
        return out;
    }

    /// Re-reads P(x_1..x_r) as a polynomial in x_1..x_n, shifting x_i to x_{i+offset}.
    [[nodiscard]] MPoly embed(int target_arity, int offset) const {
        if (offset < 0 || offset + arity_ > target_arity) throw ArityMismatch();
        MPoly out(target_arity);
        Exponents big(static_cast<std::size_t>(target_arity), 0);
        for (const auto& [e, c] : terms_) {
            std::fill(big.begin(), big.end(), 0);
            for (std::size_t i = 0; i < e.size(); ++i) big[i + static_cast<std::size_t>(offset)] = e[i];
            out.terms_.emplace(big, c);
        }
        return out;
    }

    /// "2*u1^2*u2 - u3", highest terms first; `var` names the variables.
    [[nodiscard]] std::string str(const std::string& var = "x") const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            const Rational mag = c.sign() < 0 ? -c : c;
            s += first ? (c.sign() < 0 ? "-" : "") : (c.sign() < 0 ? " - " : " + ");
            first = false;
            std::string mono;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += var + std::to_string(i + 1);
                if (e[i] > 1) mono += "^" + std::to_string(e[i]);
            }
            if (mono.empty())
                s += mag.str();
            else if (mag == Rational(1))
                s += mono;
            else
                s += mag.str() + "*" + mono;
        }
        return s;
    }

private:
    void check(const MPoly& o) const {
        if (o.arity_ != arity_) throw ArityMismatch();
    }

    int arity_ = 0;
    Terms terms_;
};

inline std::ostream& operator<<(std::ostream& os, const MPoly& p) { return os << p.str(); }

/// Nonzero integer linear form, canonical: content 1, first nonzero entry positive.
class LinForm {
public:
    LinForm() = default;

    /// Splits an integer form into scale * canonical form.
    static std::pair<LinForm, long> canonical(IntForm coeffs) {
        long g = 0;
        for (long c : coeffs) g = std::gcd(g, c);
        if (g == 0) throw DomainError("linear form is identically zero");
        long lead = 0;
        for (long c : coeffs)
            if (c != 0) {
                lead = c;
                break;
            }
        const long scale = lead < 0 ? -g : g;
        for (long& c : coeffs) c /= scale;
        LinForm f;
        f.coeffs_ = std::move(coeffs);
        return {f, scale};
    }

    /// Builds a form that must already be canonical.
    explicit LinForm(IntForm coeffs) {
        auto [f, s] = canonical(coeffs);
        if (s != 1) throw DomainError("linear form is not canonical");
        coeffs_ = std::move(f.coeffs_);
    }

    /// u_i, 0-based.
    static LinForm var(int arity, int i) {
        IntForm c(static_cast<std::size_t>(arity), 0);
        c[static_cast<std::size_t>(i)] = 1;
        return LinForm(c);
    }

    [[nodiscard]] const IntForm& coeffs() const { return coeffs_; }
    [[nodiscard]] int arity() const { return static_cast<int>(coeffs_.size()); }
    [[nodiscard]] MPoly poly() const { return MPoly::linear(coeffs_); }

    /// Composition with a linear substitution, before canonicalisation.
    [[nodiscard]] IntForm compose(const std::vector<IntForm>& images, int target_arity) const {
        IntForm out(static_cast<std::size_t>(target_arity), 0);
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            for (std::size_t j = 0; j < out.size(); ++j) out[j] += coeffs_[i] * images[i][j];
        return out;
    }

    [[nodiscard]] std::string str(const std::string& var = "x") const {
        std::string s;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            const long c = coeffs_[i];
            if (c == 0) continue;
            if (!s.empty()) s += c < 0 ? " - " : " + ";
            else if (c < 0) s += "-";
            const long m = c < 0 ? -c : c;
            if (m != 1) s += std::to_string(m) + "*";
            s += var + std::to_string(i + 1);
        }
        return s;
    }

    friend bool operator==(const LinForm&, const LinForm&) = default;
    friend auto operator<=>(const LinForm&, const LinForm&) = default;

private:
    IntForm coeffs_;
};

/// B with A = f·B, or nullopt. Long division in the last variable that
/// occurs in f, whose coefficient is a nonzero integer.
inline std::optional<MPoly> divide_exact(const MPoly& a, const LinForm& f) {
    if (f.arity() != a.arity()) throw ArityMismatch();
    std::size_t j = f.coeffs().size();
    while (j > 0 && f.coeffs()[j - 1] == 0) --j;
    if (j == 0) throw DomainError("division by zero form");
    --j;
    if (a.is_zero()) return MPoly(a.arity());
    // a = sum_k A_k x_j^k and f = c x_j + g; solve A_k = c Q_{k-1} + g Q_k from the top down.
    const Rational inv_lead = Rational(1) / Rational(f.coeffs()[j]);
    IntForm rest_form = f.coeffs();
    rest_form[j] = 0;
    const MPoly g = MPoly::linear(rest_form);
    std::map<int, MPoly> slices;
    for (const auto& [e, c] : a.terms()) {
        Exponents e2 = e;
        const int k = e2[j];
        e2[j] = 0;
        slices.try_emplace(k, a.arity()).first->second.add_term(e2, c);
    }
    const int top = slices.rbegin()->first;
    if (top == 0) return std::nullopt;
    auto slice = [&](int k) { auto it = slices.find(k); return it == slices.end() ? MPoly(a.arity()) : it->second; };
    MPoly quot(a.arity());
    MPoly q = slice(top) * inv_lead;
    for (int k = top - 1;; --k) {
        for (const auto& [e, c] : q.terms()) {
            Exponents e2 = e;
            e2[j] = k;
            quot.add_term(e2, c);
        }
        MPoly next = slice(k) - g * q;
        if (k == 0) {
            if (!next.is_zero()) return std::nullopt;
            break;
        }
        q = next * inv_lead;
    }
    return quot;
}

/// Rational function num / prod f^m with linear-form denominators.
class RatComponent {
public:
    using Den = std::map<LinForm, int>;

    RatComponent() = default;
    explicit RatComponent(int arity) : num_(arity) {}
    explicit RatComponent(MPoly num) : num_(std::move(num)) {}
    RatComponent(MPoly num, Den den) : num_(std::move(num)), den_(std::move(den)) {
        for (const auto& [f, m] : den_) {
            if (f.arity() != num_.arity()) throw ArityMismatch();
            if (m < 0) throw DomainError("negative denominator multiplicity");
        }
        normalize();
    }

    [[nodiscard]] int arity() const { return num_.arity(); }
    [[nodiscard]] const MPoly& num() const { return num_; }
    [[nodiscard]] const Den& den() const { return den_; }
    [[nodiscard]] bool is_zero() const { return num_.is_zero(); }
    [[nodiscard]] bool is_polynomial() const { return den_.empty(); }

    /// Cancels every denominator factor that divides the numerator.
    void normalize() {
        for (auto it = den_.begin(); it != den_.end();) {
            if (it->second == 0) {
                it = den_.erase(it);
                continue;
            }
            while (it->second > 0 && !num_.is_zero()) {
                auto q = divide_exact(num_, it->first);
                if (!q) break;
                num_ = std::move(*q);
                --it->second;
            }
            if (it->second == 0)
                it = den_.erase(it);
            else
                ++it;
        }
        if (num_.is_zero()) den_.clear();
    }

    /// Multiplies by prod f^m and cancels.
    [[nodiscard]] RatComponent times_forms(const Den& factors) const {
        RatComponent r = *this;
        for (const auto& [f, m] : factors) {
            auto it = r.den_.find(f);
            int left = m;
            if (it != r.den_.end()) {
                const int k = std::min(left, it->second);
                it->second -= k;
                left -= k;
                if (it->second == 0) r.den_.erase(it);
            }
            if (left > 0) r.num_ *= f.poly().pow(left);
        }
        r.normalize();
        return r;
    }

    /// Divides by prod f^m.
    [[nodiscard]] RatComponent over_forms(const Den& factors) const {
        RatComponent r = *this;
        if (r.is_zero()) return r;
        for (const auto& [f, m] : factors) {
            if (f.arity() != arity()) throw ArityMismatch();
            r.den_[f] += m;
        }
        r.normalize();
        return r;
    }

    RatComponent& operator*=(const Rational& s) {
        num_ *= s;
        if (num_.is_zero()) den_.clear();
        return *this;
    }

    friend RatComponent operator*(const RatComponent& x, const RatComponent& y) {
        if (x.arity() != y.arity()) throw ArityMismatch();
        if (x.is_zero() || y.is_zero()) return RatComponent(x.arity());
        RatComponent r(x.num_ * y.num_);
        r.den_ = x.den_;
        for (const auto& [f, m] : y.den_) r.den_[f] += m;
        r.normalize();
        return r;
    }
    friend RatComponent operator*(const Rational& s, RatComponent x) { return x *= s; }

    friend RatComponent operator+(const RatComponent& x, const RatComponent& y) {
        if (x.arity() != y.arity()) throw ArityMismatch();
        if (x.is_zero()) return y;
        if (y.is_zero()) return x;
        Den common = x.den_;
        for (const auto& [f, m] : y.den_) common[f] = std::max(common[f], m);
        RatComponent r(x.cofactor_num(common) + y.cofactor_num(common));
        r.den_ = std::move(common);
        r.normalize();
        return r;
    }
    friend RatComponent operator-(const RatComponent& x) { return Rational(-1) * x; }
    friend RatComponent operator-(const RatComponent& x, const RatComponent& y) { return x + (-y); }
    RatComponent& operator+=(const RatComponent& o) { return *this = *this + o; }
    RatComponent& operator-=(const RatComponent& o) { return *this = *this - o; }

    /// Equality as rational functions, decided by cross-multiplication.
    friend bool operator==(const RatComponent& x, const RatComponent& y) {
        if (x.arity() != y.arity()) return false;
        if (x.den_ == y.den_) return x.num_ == y.num_;
        MPoly lhs = x.num_;
        MPoly rhs = y.num_;
        for (const auto& [f, m] : y.den_) lhs *= f.poly().pow(m);
        for (const auto& [f, m] : x.den_) rhs *= f.poly().pow(m);
        return lhs == rhs;
    }

    /// Composition with an integer linear substitution. A denominator factor
    /// mapped to zero raises DomainError.
    [[nodiscard]] RatComponent substitute_linear(const std::vector<IntForm>& images, int target_arity) const {
        MPoly n = num_.substitute_linear(images, target_arity);
        Den d;
        Rational scale(1);
        for (const auto& [f, m] : den_) {
            auto [g, s] = LinForm::canonical(f.compose(images, target_arity));
            d[g] += m;
            scale *= pow(Rational(s), static_cast<unsigned>(m));
        }
        n *= Rational(1) / scale;
        return {std::move(n), std::move(d)};
    }

    [[nodiscard]] RatComponent embed(int target_arity, int offset) const {
        std::vector<IntForm> images;
        for (int i = 0; i < arity(); ++i) {
            IntForm img(static_cast<std::size_t>(target_arity), 0);
            img[static_cast<std::size_t>(i + offset)] = 1;
            images.push_back(std::move(img));
        }
        if (den_.empty()) return RatComponent(num_.embed(target_arity, offset));
        return substitute_linear(images, target_arity);
    }

    /// "num" or "(num) / ((f1)^m1*(f2))".
    [[nodiscard]] std::string str(const std::string& var = "x") const {
        if (den_.empty()) return num_.str(var);
        std::string d;
        for (const auto& [f, m] : den_) {
            if (!d.empty()) d += "*";
            d += "(" + f.str(var) + ")";
            if (m > 1) d += "^" + std::to_string(m);
        }
        return "(" + num_.str(var) + ") / (" + d + ")";
    }

private:
    friend class RatSum;

    [[nodiscard]] MPoly cofactor_num(const Den& common) const {
        MPoly n = num_;
        for (const auto& [f, m] : common) {
            auto it = den_.find(f);
            const int have = it == den_.end() ? 0 : it->second;
            if (m > have) n *= f.poly().pow(m - have);
        }
        return n;
    }

    MPoly num_;
    Den den_;
};

inline std::ostream& operator<<(std::ostream& os, const RatComponent& c) { return os << c.str(); }

/// Accumulates many rational terms over one common denominator, normalizing once.
class RatSum {
public:
    explicit RatSum(int arity) : arity_(arity) {}

    void add(const RatComponent& c, const Rational& scale = Rational(1)) {
        if (c.arity() != arity_) throw ArityMismatch();
        if (c.is_zero() || scale.is_zero()) return;
        parts_.emplace_back(c, scale);
    }

    /// Adds scale * x * y without reducing the product; result() reduces once.
    void add_product(const RatComponent& x, const RatComponent& y, const Rational& scale = Rational(1)) {
        if (x.arity() != arity_ || y.arity() != arity_) throw ArityMismatch();
        if (x.is_zero() || y.is_zero() || scale.is_zero()) return;
        RatComponent p(arity_);
        p.num_ = x.num_ * y.num_;
        p.den_ = x.den_;
        for (const auto& [f, m] : y.den_) p.den_[f] += m;
        parts_.emplace_back(std::move(p), scale);
    }

    [[nodiscard]] RatComponent result() const {
        RatComponent::Den common;
        for (const auto& [c, s] : parts_)
            for (const auto& [f, m] : c.den()) common[f] = std::max(common[f], m);
        MPoly total(arity_);
        for (const auto& [c, s] : parts_) {
            MPoly n = c.num() * s;
            for (const auto& [f, m] : common) {
                auto it = c.den().find(f);
                const int have = it == c.den().end() ? 0 : it->second;
                if (m > have) n *= f.poly().pow(m - have);
            }
            total += n;
        }
        return {std::move(total), std::move(common)};
    }

private:
    int arity_;
    std::vector<std::pair<RatComponent, Rational>> parts_;
};

} // namespace flexion
