#pragma once

#include <map>
#include <optional>
#include <vector>

#include "flexion/ncpoly.hpp"

namespace flexion {

/// Lyndon words of length n over {a < b}, in lexicographic order (Duval).
inline std::vector<Word> lyndon_words(int n) {
    std::vector<Word> out;
    if (n < 1) return out;
    std::vector<int> w{-1};
    while (!w.empty()) {
        ++w.back();
        if (static_cast<int>(w.size()) == n) {
            Word word;
            for (int l : w) word.letters.push_back(static_cast<std::uint8_t>(l));
            out.push_back(std::move(word));
        }
        const std::size_t m = w.size();
        while (static_cast<int>(w.size()) < n) w.push_back(w[w.size() - m]);
        while (!w.empty() && w.back() == 1) w.pop_back();
    }
    return out;
}

namespace detail {

inline bool is_lyndon(const std::vector<std::uint8_t>& w, std::size_t from, std::size_t to) {
    // strictly smaller than every proper rotation-suffix
    for (std::size_t k = from + 1; k < to; ++k) {
        std::size_t i = from;
        std::size_t j = k;
        while (j < to && w[i] == w[j]) {
            ++i;
            ++j;
        }
        if (j == to) return false;  // suffix is a prefix: not strictly smaller
        if (w[j] < w[i]) return false;
    }
    return true;
}

inline NcPoly standard_bracket(const std::vector<std::uint8_t>& w, std::size_t from, std::size_t to,
                               std::map<std::vector<std::uint8_t>, NcPoly>& memo) {
    std::vector<std::uint8_t> key(w.begin() + static_cast<std::ptrdiff_t>(from),
                                  w.begin() + static_cast<std::ptrdiff_t>(to));
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    NcPoly result;
    if (to - from == 1) {
        result = NcPoly::letter(Alphabet::ab(), w[from]);
    } else {
        // standard factorisation: right factor is the longest proper Lyndon suffix
        std::size_t split = to - 1;
        for (std::size_t k = from + 1; k < to; ++k)
            if (is_lyndon(w, k, to)) {
                split = k;
                break;
            }
        result = lie_bracket(standard_bracket(w, from, split, memo), standard_bracket(w, split, to, memo));
    }
    memo.emplace(std::move(key), result);
    return result;
}

} // namespace detail

/// Standard bracketing of a Lyndon word, expanded in Q<a,b>.
inline NcPoly lyndon_bracket(const Word& w) {
    std::map<std::vector<std::uint8_t>, NcPoly> memo;
    return detail::standard_bracket(w.letters, 0, w.size(), memo);
}

struct LyndonElement {
    Word word;
    NcPoly poly;
};

/// Lyndon basis of the weight-n part of Lie[a,b], optionally restricted to
/// words with exactly `depth` letters b. Lexicographic Lyndon-word order.
inline std::vector<LyndonElement> lyndon_lie_basis(int weight, std::optional<int> depth = std::nullopt) {
    if (weight < 1) throw DomainError("Lyndon basis needs weight >= 1");
    std::vector<LyndonElement> out;
    std::map<std::vector<std::uint8_t>, NcPoly> memo;
    for (auto& w : lyndon_words(weight)) {
        if (depth && w.depth() != *depth) continue;
        NcPoly p = detail::standard_bracket(w.letters, 0, w.size(), memo);
        out.push_back({std::move(w), std::move(p)});
    }
    return out;
}

/// Witt's formula (1/n) sum_{d | n} mu(d) 2^{n/d}.
inline long witt_dimension(int n) {
    auto mobius = [](int d) {
        int m = 1;
        for (int p = 2; p * p <= d; ++p) {
            if (d % p == 0) {
                d /= p;
                if (d % p == 0) return 0;
                m = -m;
            }
        }
        if (d > 1) m = -m;
        return m;
    };
    long s = 0;
    for (int d = 1; d <= n; ++d)
        if (n % d == 0) s += mobius(d) * (1L << (n / d));
    return s / n;
}

} // namespace flexion
