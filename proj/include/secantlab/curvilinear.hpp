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

#ifndef SECANTLAB_CURVILINEAR_HPP
#define SECANTLAB_CURVILINEAR_HPP

#include <stdexcept>
#include <vector>

#include "secantlab/binform.hpp"
#include "secantlab/partition.hpp"

namespace secantlab {

/// Cycle type of the divisor cut out by g: a squarefree factor of degree e
/// with multiplicity m contributes e blocks equal to m. Decided through the
/// squarefree decomposition alone, never through root isolation, so
/// conjugate irrational roots are counted correctly.
inline Partition cycle_type(const BinForm& g) {
    std::vector<int> parts;
    for (const auto& [mult, factor] : squarefree_decomposition(g))
        for (int i = 0; i < factor.degree(); ++i) parts.push_back(mult);
    return Partition(std::move(parts));
}

/// Number of distinct support points = total degree of the squarefree factors.
inline int support_count(const BinForm& g) {
    int r = 0;
    for (const auto& [mult, factor] : squarefree_decomposition(g)) r += factor.degree();
    return r;
}

/// A finite subscheme of the line together with its combinatorial data.
struct CurvilinearScheme {
    BinForm equation;
    Partition type;
    int support;
};

inline CurvilinearScheme make_curvilinear(const BinForm& g) {
    return CurvilinearScheme{g, cycle_type(g), support_count(g)};
}

/// Dimension of the versal deformation space of a length-k curvilinear
/// point: k - 1, and 0 for the (rigid) reduced point.
inline int def_space_dim(int k) {
    if (k < 1) throw std::invalid_argument("def_space_dim: k >= 1 required");
    return k - 1;
}

/// The divisor prod q_i^{m_i - 1}: its local equation at a point of
/// multiplicity m is the (m-1)-st power of a local parameter. Degree k - r.
inline BinForm multiple_part(const BinForm& g) {
    if (g.is_zero()) throw AllZeroError();
    BinForm out = BinForm::constant(Rat(1));
    for (const auto& [mult, factor] : squarefree_decomposition(g))
        for (int i = 1; i < mult; ++i) out = out * factor;
    return out.normalized();
}

inline BinForm squarefree_part(const BinForm& g) {
    if (g.is_zero()) throw AllZeroError();
    BinForm out = BinForm::constant(Rat(1));
    for (const auto& [mult, factor] : squarefree_decomposition(g)) out = out * factor;
    return out.normalized();
}

/// Basis of the residues b mod g divisible by multiple_part(g): the
/// first-order deformations of the divisor that preserve its cycle type.
/// Dimension equals the support count. The basis lives in the residue ring
/// of the chart-fixed dehomogenization (all support points of g made affine first).
inline std::vector<UniPoly> loc_triv_tangent(const BinForm& g) {
    if (g.is_zero()) throw AllZeroError();
    BinForm fixed = g;
    if (fixed.infinity_multiplicity() > 0) fixed = change_chart(fixed, chart_fix(fixed));
    const int k = fixed.degree();
    UniPoly m = multiple_part(fixed).dehomogenize();
    const int r = k - m.degree();
    std::vector<UniPoly> basis;
    basis.reserve(static_cast<size_t>(r));
    for (int j = 0; j < r; ++j) basis.push_back(m.shifted(j));
    return basis;
}

enum class StratumAmbient { traceless, full };

/// Dimension of the locus of divisors with the given cycle type: one
/// translation parameter per support point, minus the trace constraint in the
/// traceless versal model.
inline int stratum_dim(const Partition& type, StratumAmbient ambient) {
    if (type.weight() < 1) throw std::invalid_argument("stratum_dim: weight >= 1 required");
    int r = type.block_count();
    return ambient == StratumAmbient::traceless ? r - 1 : r;
}

}  // namespace secantlab

#endif
