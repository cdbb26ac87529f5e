/*
   Copyright 2026 The secantlab authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef SECANTLAB_NESTED_PAIRS_HPP
#define SECANTLAB_NESTED_PAIRS_HPP

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "secantlab/qmat.hpp"
#include "secantlab/unipoly.hpp"

namespace secantlab {

struct DegreeViolationError : std::runtime_error {
    DegreeViolationError() : std::runtime_error("polynomial violates the required degree bound") {}
};

namespace detail {
inline void check_pair_params(int d, int k) {
    if (d < 1 || k <= d) throw std::invalid_argument("nested pair: 1 <= d < k required");
}
}  // namespace detail

/// g with x^k + g = (x^d + h)(x^{k-d} + h'); the chart of the incidence
/// space of nested divisor pairs on a smooth curve germ.
inline UniPoly compose_pair(const UniPoly& h, const UniPoly& hp, int d, int k) {
    detail::check_pair_params(d, k);
    if (h.degree() >= d || hp.degree() >= k - d) throw DegreeViolationError();
    return h.shifted(k - d) + hp.shifted(d) + h * hp;
}

/// Inverse chart: recovers h' when (x^d + h) divides (x^k + g), nothing
/// otherwise.
inline std::optional<UniPoly> factor_pair(const UniPoly& h, const UniPoly& g, int d, int k) {
    detail::check_pair_params(d, k);
    if (h.degree() >= d || g.degree() >= k) throw DegreeViolationError();
    UniPoly big = UniPoly::monomial(Rat(1), k) + g;
    UniPoly small = UniPoly::monomial(Rat(1), d) + h;
    auto [q, r] = divrem(big, small);
    if (!r.is_zero()) return std::nullopt;
    return q - UniPoly::monomial(Rat(1), k - d);
}

/// Tangent space at the origin to the space of nested pairs, as explicit
/// (h, g) coefficient pairs with deg h < d, deg g < k.
struct NestedTangent {
    int d = 0;
    int k = 0;
    std::vector<std::pair<UniPoly, UniPoly>> basis;

    int dim() const { return static_cast<int>(basis.size()); }

    /// Rows are basis vectors flattened as (h-coeffs | g-coeffs).
    QMat as_matrix() const {
        QMat m(dim(), d + k);
        for (int row = 0; row < dim(); ++row) {
            const auto& [h, g] = basis[static_cast<size_t>(row)];
            for (int i = 0; i < d; ++i) m.at(row, i) = h.coeff(i);
            for (int i = 0; i < k; ++i) m.at(row, d + i) = g.coeff(i);
        }
        return m;
    }
    /// Rows are the g-components only (the projection to the bigger divisor).
    QMat projection_to_big() const {
        QMat m(dim(), k);
        for (int row = 0; row < dim(); ++row)
            for (int i = 0; i < k; ++i) m.at(row, i) = basis[static_cast<size_t>(row)].second.coeff(i);
        return m;
    }
    QMat projection_to_small() const {
        QMat m(dim(), d);
        for (int row = 0; row < dim(); ++row)
            for (int i = 0; i < d; ++i) m.at(row, i) = basis[static_cast<size_t>(row)].first.coeff(i);
        return m;
    }
};

/// Linearization of compose_pair at the origin: pairs
/// (h, h*x^{k-d} + h'*x^d). Dimension k.
inline NestedTangent tangent_space(int d, int k) {
    detail::check_pair_params(d, k);
    NestedTangent t{d, k, {}};
    for (int a = 0; a < d; ++a) {
        UniPoly h = UniPoly::monomial(Rat(1), a);
        t.basis.emplace_back(h, h.shifted(k - d));
    }
    for (int a = 0; a < k - d; ++a) {
        UniPoly hp = UniPoly::monomial(Rat(1), a);
        t.basis.emplace_back(UniPoly(), hp.shifted(d));
    }
    return t;
}

/// Dimension of the image of the tangent space in the big-divisor chart,
/// computed as a matrix rank. Equals max(d, k-d); the projection is ramified
/// whenever this is less than k.
inline int dp_image_dim(int d, int k) {
    return tangent_space(d, k).projection_to_big().rank();
}

/// Subspace of tangent pairs whose small-divisor component deforms locally
/// trivially (h a multiple of x^{d-1}); codimension d - 1.
inline NestedTangent t0_subspace(int d, int k) {
    detail::check_pair_params(d, k);
    NestedTangent t{d, k, {}};
    UniPoly h = UniPoly::monomial(Rat(1), d - 1);
    t.basis.emplace_back(h, h.shifted(k - d));
    for (int a = 0; a < k - d; ++a) {
        UniPoly hp = UniPoly::monomial(Rat(1), a);
        t.basis.emplace_back(UniPoly(), hp.shifted(d));
    }
    return t;
}

}  // namespace secantlab

#endif
