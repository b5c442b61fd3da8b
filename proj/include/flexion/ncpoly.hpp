#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "flexion/errors.hpp"
#include "flexion/rational.hpp"

namespace flexion {

/// Ordered letter list. Either the two-letter alphabet {a, b} or the
/// truncated alphabet {b1, ..., bN} used after the star projection.
class Alphabet {
public:
    enum class Kind : std::uint8_t { AB, B };

    static Alphabet ab() { return Alphabet(Kind::AB, 2); }
    static Alphabet b(int n) {
        if (n < 1 || n > 250) throw DomainError("b-alphabet size out of range");
        return Alphabet(Kind::B, n);
    }

    [[nodiscard]] Kind kind() const { return kind_; }
    [[nodiscard]] int size() const { return size_; }

    [[nodiscard]] std::string name(std::uint8_t letter) const {
        if (kind_ == Kind::AB) return letter == 0 ? "a" : "b";
        return "b" + std::to_string(letter + 1);
    }

    [[nodiscard]] std::vector<std::string> names() const {
        std::vector<std::string> out;
        for (int i = 0; i < size_; ++i) out.push_back(name(static_cast<std::uint8_t>(i)));
        return out;
    }

    friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
    Alphabet(Kind k, int n) : kind_(k), size_(n) {}
    Kind kind_;
    int size_;
};

inline constexpr std::uint8_t kLetterA = 0;
inline constexpr std::uint8_t kLetterB = 1;

/// Finite sequence of letter indices. Ordered graded-lexicographically:
/// shorter words first, then lexicographically by letter index.
struct Word {
    std::vector<std::uint8_t> letters;

    Word() = default;
    Word(std::initializer_list<std::uint8_t> l) : letters(l) {}
    explicit Word(std::vector<std::uint8_t> l) : letters(std::move(l)) {}

    [[nodiscard]] std::size_t size() const { return letters.size(); }
    [[nodiscard]] bool empty() const { return letters.empty(); }
    std::uint8_t operator[](std::size_t i) const { return letters[i]; }

    /// Number of occurrences of the letter b (only meaningful over {a, b}).
    [[nodiscard]] int depth() const {
        return static_cast<int>(std::count(letters.begin(), letters.end(), kLetterB));
    }

    friend Word operator+(const Word& x, const Word& y) {
        Word w;
        w.letters.reserve(x.size() + y.size());
        w.letters.insert(w.letters.end(), x.letters.begin(), x.letters.end());
        w.letters.insert(w.letters.end(), y.letters.begin(), y.letters.end());
        return w;
    }

    friend bool operator==(const Word&, const Word&) = default;
    friend std::strong_ordering operator<=>(const Word& x, const Word& y) {
        if (x.size() != y.size()) return x.size() <=> y.size();
        return x.letters <=> y.letters;
    }
};

/// a^{n_0} b a^{n_1} b ... a^{n_{k-1}} b a^{n_k}: the a-run lengths around each b.
inline std::vector<int> a_runs(const Word& w) {
    std::vector<int> runs{0};
    for (auto l : w.letters) {
        if (l == kLetterB)
            runs.push_back(0);
        else
            ++runs.back();
    }
    return runs;
}

inline Word word_from_runs(const std::vector<int>& runs) {
    Word w;
    for (std::size_t k = 0; k < runs.size(); ++k) {
        if (k > 0) w.letters.push_back(kLetterB);
        w.letters.insert(w.letters.end(), static_cast<std::size_t>(runs[k]), kLetterA);
    }
    return w;
}

/// Finitely supported exact-rational combination of words over an alphabet.
class NcPoly {
public:
    using Terms = std::map<Word, Rational>;

    NcPoly() : alpha_(Alphabet::ab()) {}
    explicit NcPoly(Alphabet alpha) : alpha_(alpha) {}
    NcPoly(Alphabet alpha, const Word& w, Rational c = Rational(1)) : alpha_(alpha) {
        check_word(w);
        if (!c.is_zero()) terms_.emplace(w, std::move(c));
    }

    static NcPoly one(Alphabet alpha = Alphabet::ab()) { return {alpha, Word{}}; }
    static NcPoly letter(Alphabet alpha, std::uint8_t l) { return {alpha, Word{l}}; }
    static NcPoly a() { return letter(Alphabet::ab(), kLetterA); }
    static NcPoly b() { return letter(Alphabet::ab(), kLetterB); }

    /// Parses a word written with the alphabet's letter names ("aab", "b1b2").
    static Word parse_word(Alphabet alpha, std::string_view s) {
        Word w;
        std::size_t i = 0;
        while (i < s.size()) {
            if (alpha.kind() == Alphabet::Kind::AB) {
                if (s[i] == 'a')
                    w.letters.push_back(kLetterA);
                else if (s[i] == 'b')
                    w.letters.push_back(kLetterB);
                else
                    throw ParseError("bad letter in word '" + std::string(s) + "'");
                ++i;
            } else {
                if (s[i] != 'b') throw ParseError("bad letter in word '" + std::string(s) + "'");
                std::size_t j = i + 1;
                int idx = 0;
                while (j < s.size() && s[j] >= '0' && s[j] <= '9') idx = idx * 10 + (s[j++] - '0');
                if (j == i + 1 || idx < 1 || idx > alpha.size())
                    throw ParseError("letter outside alphabet in '" + std::string(s) + "'");
                w.letters.push_back(static_cast<std::uint8_t>(idx - 1));
                i = j;
            }
        }
        return w;
    }

    [[nodiscard]] std::string word_str(const Word& w) const {
        std::string s;
        for (auto l : w.letters) s += alpha_.name(l);
        return s;
    }

    [[nodiscard]] const Alphabet& alphabet() const { return alpha_; }
    [[nodiscard]] const Terms& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] std::size_t size() const { return terms_.size(); }

    [[nodiscard]] Rational coeff(const Word& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const Word& w, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    NcPoly& operator+=(const NcPoly& o) {
        same_alphabet(o);
        for (const auto& [w, c] : o.terms_) add_term(w, c);
        return *this;
    }
    NcPoly& operator-=(const NcPoly& o) {
        same_alphabet(o);
        for (const auto& [w, c] : o.terms_) add_term(w, -c);
        return *this;
    }
    NcPoly& operator*=(const Rational& s) {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [w, c] : terms_) c *= s;
        return *this;
    }

    friend NcPoly operator+(NcPoly x, const NcPoly& y) { return x += y; }
    friend NcPoly operator-(NcPoly x, const NcPoly& y) { return x -= y; }
    friend NcPoly operator-(NcPoly x) { return x *= Rational(-1); }
    friend NcPoly operator*(const Rational& s, NcPoly x) { return x *= s; }
    friend NcPoly operator*(NcPoly x, const Rational& s) { return x *= s; }

    /// Concatenation product.
    friend NcPoly operator*(const NcPoly& x, const NcPoly& y) {
        x.same_alphabet(y);
        NcPoly r(x.alpha_);
        for (const auto& [w1, c1] : x.terms_)
            for (const auto& [w2, c2] : y.terms_) r.add_term(w1 + w2, c1 * c2);
        return r;
    }

    friend bool operator==(const NcPoly&, const NcPoly&) = default;

    /// Length of the longest word, -1 for the zero polynomial.
    [[nodiscard]] int degree() const {
        return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first.size());
    }

    [[nodiscard]] bool is_homogeneous() const {
        return terms_.empty() || terms_.begin()->first.size() == terms_.rbegin()->first.size();
    }

    /// Homogeneous components keyed by word length.
    [[nodiscard]] std::map<int, NcPoly> by_degree() const {
        std::map<int, NcPoly> out;
        for (const auto& [w, c] : terms_) {
            auto [it, _] = out.try_emplace(static_cast<int>(w.size()), alpha_);
            it->second.terms_.emplace_hint(it->second.terms_.end(), w, c);
        }
        return out;
    }

    /// Components keyed by the number of b letters (alphabet {a, b} only).
    [[nodiscard]] std::map<int, NcPoly> by_depth() const {
        std::map<int, NcPoly> out;
        for (const auto& [w, c] : terms_) {
            auto [it, _] = out.try_emplace(w.depth(), alpha_);
            it->second.terms_.emplace_hint(it->second.terms_.end(), w, c);
        }
        return out;
    }

    /// Depth if every word has the same number of b's, otherwise -1.
    [[nodiscard]] int homogeneous_depth() const {
        int d = -2;
        for (const auto& [w, c] : terms_) {
            const int wd = w.depth();
            if (d == -2)
                d = wd;
            else if (d != wd)
                return -1;
        }
        return d == -2 ? 0 : d;
    }

    /// Human-readable form, e.g. "aab - 2*aba + baa".
    [[nodiscard]] std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [w, c] : terms_) {
            Rational mag = c.sign() < 0 ? -c : c;
            if (first)
                s += c.sign() < 0 ? "-" : "";
            else
                s += c.sign() < 0 ? " - " : " + ";
            first = false;
            const std::string ws = w.empty() ? "1" : word_str(w);
            if (mag == Rational(1))
                s += ws;
            else
                s += mag.str() + "*" + ws;
        }
        return s;
    }

    void same_alphabet(const NcPoly& o) const {
        if (!(alpha_ == o.alpha_)) throw AlphabetMismatch();
    }

private:
    void check_word(const Word& w) const {
        for (auto l : w.letters)
            if (l >= alpha_.size()) throw DomainError("letter outside alphabet");
    }

    Alphabet alpha_;
    Terms terms_;
};

inline std::ostream& operator<<(std::ostream& os, const NcPoly& p) { return os << p.str(); }

inline NcPoly nc_mul(const NcPoly& p, const NcPoly& q) { return p * q; }

inline NcPoly lie_bracket(const NcPoly& p, const NcPoly& q) { return p * q - q * p; }

/// ad(x)^k (y).
inline NcPoly ad_pow(const NcPoly& x, int k, NcPoly y) {
    for (int i = 0; i < k; ++i) y = lie_bracket(x, y);
    return y;
}

/// C_i = ad(a)^{i-1}(b), also written a^{i-1}·b.
inline NcPoly c_element(int i) {
    if (i < 1) throw DomainError("C_i needs i >= 1");
    return ad_pow(NcPoly::a(), i - 1, NcPoly::b());
}

/// Dynkin operator: extends x_1...x_n -> [...[x_1, x_2], ..., x_n] linearly.
/// Computed by peeling off the last letter, theta(Q x) = [theta(Q), x].
inline NcPoly dynkin(const NcPoly& p) {
    NcPoly out(p.alphabet());
    for (const auto& [deg, comp] : p.by_degree()) {
        if (deg <= 1) {
            out += comp;
            continue;
        }
        std::map<std::uint8_t, NcPoly> by_last;
        for (const auto& [w, c] : comp.terms()) {
            Word prefix(std::vector<std::uint8_t>(w.letters.begin(), w.letters.end() - 1));
            auto [it, _] = by_last.try_emplace(w.letters.back(), p.alphabet());
            it->second.add_term(prefix, c);
        }
        for (const auto& [l, prefix_poly] : by_last) {
            const NcPoly t = dynkin(prefix_poly);
            out += lie_bracket(t, NcPoly::letter(p.alphabet(), l));
        }
    }
    return out;
}

/// Lie membership via the Dynkin criterion theta(P_n) = n P_n on every
/// homogeneous component. Constants are never Lie unless zero.
inline bool is_lie(const NcPoly& p) {
    for (const auto& [deg, comp] : p.by_degree()) {
        if (deg == 0) return false;
        if (!(dynkin(comp) == Rational(deg) * comp)) return false;
    }
    return true;
}

/// push(a^{i_0} b ... a^{i_{r-1}} b a^{i_r}) = a^{i_r} b a^{i_0} b ... b a^{i_{r-1}}.
inline Word push_word(const Word& w) {
    auto runs = a_runs(w);
    std::rotate(runs.rbegin(), runs.rbegin() + 1, runs.rend());
    return word_from_runs(runs);
}

inline NcPoly push_poly(const NcPoly& p) {
    if (p.alphabet().kind() != Alphabet::Kind::AB) throw AlphabetMismatch();
    NcPoly out(p.alphabet());
    for (const auto& [w, c] : p.terms()) out.add_term(push_word(w), c);
    return out;
}

inline bool is_push_invariant(const NcPoly& p) { return push_poly(p) == p; }

/// Star projection into Q<b_1, ..., b_N>, N = degree of P. Drops words ending
/// in a, rewrites a^{n_0} b ... a^{n_{d-1}} b as b_{n_0+1} ... b_{n_{d-1}+1}
/// and adds sum_i ((-1)^{i-1}/i) (P|a^{i-1}b) b_1^i.
inline NcPoly star_projection(const NcPoly& p, int depth) {
    if (p.alphabet().kind() != Alphabet::Kind::AB) throw AlphabetMismatch();
    for (const auto& [w, c] : p.terms())
        if (w.depth() != depth) throw NotHomogeneous("star projection expects depth " + std::to_string(depth));
    const Alphabet target = Alphabet::b(std::max(1, p.degree()));
    NcPoly out(target);
    for (const auto& [w, c] : p.terms()) {
        if (w.empty() || w.letters.back() != kLetterB) continue;
        auto runs = a_runs(w);
        Word bw;
        for (std::size_t k = 0; k + 1 < runs.size(); ++k)
            bw.letters.push_back(static_cast<std::uint8_t>(runs[k]));
        out.add_term(bw, c);
        if (w.depth() == 1) {
            const int i = static_cast<int>(w.size());
            Rational corr = Rational(i % 2 == 1 ? 1 : -1, i) * c;
            out.add_term(Word(std::vector<std::uint8_t>(static_cast<std::size_t>(i), 0)), corr);
        }
    }
    return out;
}

/// Composition (i_1, ..., i_r) indexing the C-monomial C_{i_1} ... C_{i_r}.
using Composition = std::vector<int>;

inline NcPoly c_monomial(const Composition& comp) {
    NcPoly m = NcPoly::one();
    for (int i : comp) m = m * c_element(i);
    return m;
}

/// Coordinates of a depth-r homogeneous polynomial in the C-monomial basis.
/// The lexicographically smallest word of C_{i_1}...C_{i_r} is
/// a^{i_1-1} b ... a^{i_r-1} b with coefficient 1, which makes elimination
/// triangular.
inline std::map<Composition, Rational> rewrite_in_c(const NcPoly& p, int depth) {
    if (p.alphabet().kind() != Alphabet::Kind::AB) throw AlphabetMismatch();
    for (const auto& [w, c] : p.terms())
        if (w.depth() != depth) throw NotHomogeneous("rewrite_in_c expects depth " + std::to_string(depth));
    std::map<Composition, Rational> out;
    NcPoly rest = p;
    std::map<int, NcPoly> c_cache;
    while (!rest.is_zero()) {
        const auto& [w, c] = *rest.terms().begin();
        if (w.empty() || w.letters.back() != kLetterB) throw NotInCSpan(rest.word_str(w));
        auto runs = a_runs(w);
        Composition comp;
        for (std::size_t k = 0; k + 1 < runs.size(); ++k) comp.push_back(runs[k] + 1);
        const Rational coeff = c;
        NcPoly m = NcPoly::one();
        for (int i : comp) {
            auto it = c_cache.find(i);
            if (it == c_cache.end()) it = c_cache.emplace(i, c_element(i)).first;
            m = m * it->second;
        }
        rest -= coeff * m;
        out[comp] += coeff;
    }
    return out;
}

} // namespace flexion
