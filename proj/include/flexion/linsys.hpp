#pragma once

#include <map>
#include <optional>
#include <type_traits>
#include <utility>
#include <vector>

#include "flexion/matrix.hpp"

namespace flexion {

/// Coefficient matrix whose columns are sparse polynomials (anything exposing
/// terms() as an ordered map from monomial to Rational). Rows follow the
/// monomial order of the union of supports, so results are deterministic.
template <class Poly>
struct ColumnSystem {
    using Key = typename std::decay_t<decltype(std::declval<Poly>().terms())>::key_type;

    std::map<Key, std::size_t> row_of;
    RatMatrix matrix;

    explicit ColumnSystem(const std::vector<Poly>& columns, const Poly* extra = nullptr) {
        for (const auto& p : columns)
            for (const auto& [k, c] : p.terms()) row_of.try_emplace(k, 0);
        if (extra)
            for (const auto& [k, c] : extra->terms()) row_of.try_emplace(k, 0);
        std::size_t i = 0;
        for (auto& [k, idx] : row_of) idx = i++;
        matrix = RatMatrix(row_of.size(), columns.size());
        for (std::size_t j = 0; j < columns.size(); ++j)
            for (const auto& [k, c] : columns[j].terms()) matrix(row_of.at(k), j) = c;
    }

    [[nodiscard]] RatVector vector_of(const Poly& p) const {
        RatVector v(row_of.size());
        for (const auto& [k, c] : p.terms()) v[row_of.at(k)] = c;
        return v;
    }
};

/// Coefficients x with sum_j x_j columns[j] = target, free variables zero.
template <class Poly>
std::optional<RatVector> solve_in_span(const std::vector<Poly>& columns, const Poly& target) {
    if (columns.empty()) {
        if (target.is_zero()) return RatVector{};
        return std::nullopt;
    }
    ColumnSystem<Poly> sys(columns, &target);
    return solve(sys.matrix, sys.vector_of(target));
}

template <class Poly>
std::size_t span_rank(const std::vector<Poly>& columns) {
    if (columns.empty()) return 0;
    return rank(ColumnSystem<Poly>(columns).matrix);
}

} // namespace flexion
