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

#ifndef SECANTLAB_FORMULAS_HPP
#define SECANTLAB_FORMULAS_HPP

#include <algorithm>
#include <stdexcept>

#include "secantlab/partition.hpp"
#include "secantlab/rational.hpp"

namespace secantlab {

/// Parameters of a projection of an n-dimensional variety in P^m from a
/// center of dimension lambda; c is the codimension m - n.
struct ProjectionParams {
    int ambient_dim;  // m
    int variety_dim;  // n
    int codim;        // c = m - n
    int center_dim;   // lambda

    static ProjectionParams make(int m, int n, int lambda) {
        if (n < 1 || m <= n || lambda < 0) throw std::invalid_argument("ProjectionParams: need m > n >= 1, lambda >= 0");
        return ProjectionParams{m, n, m - n, lambda};
    }
    /// The projection restricts to a morphism on the variety only when the
    /// center can avoid it, i.e. lambda < c.
    bool morphism_valid() const { return center_dim < codim; }
};

/// Parameters of a family of lines (or rational curves) in an m-dimensional
/// ambient variety, constrained to meet a codimension-c subvariety in a
/// scheme of the given cycle type.
struct SecantFamilyParams {
    int ambient_dim;           // m
    int anticanonical_degree;  // -K.L; equals m + 1 for lines in P^m
    int codim;                 // c
    Partition cycle_type;

    static SecantFamilyParams lines_in_projective_space(int m, int c, Partition type) {
        return SecantFamilyParams{m, m + 1, c, std::move(type)};
    }
};

/// Expected dimension of the family of constrained lines:
/// m - 3 + (-K.L) - k*c + r. Negative values mean "expected empty".
inline long expected_dim_secant(const SecantFamilyParams& p) {
    long k = p.cycle_type.weight();
    long r = p.cycle_type.block_count();
    return static_cast<long>(p.ambient_dim) - 3 + p.anticanonical_degree - k * p.codim + r;
}

inline bool expected_empty(long expected_dim) { return expected_dim < 0; }

/// Codimension of the locus of length->=k fibres of the projection:
/// k(c - lambda - 1).
inline long codim_planar(int k, const ProjectionParams& p) {
    if (k < 1) throw std::invalid_argument("codim_planar: k >= 1 required");
    return static_cast<long>(k) * (p.codim - p.center_dim - 1);
}

/// The length->=k locus lives in a projective space of dimension
/// m - lambda - 1; codimension beyond that forces emptiness.
inline bool planar_locus_empty(int k, const ProjectionParams& p) {
    return codim_planar(k, p) > static_cast<long>(p.ambient_dim) - p.center_dim - 1;
}

/// Codimension of the locus of fibres with the given cycle type:
/// k(c - lambda) - r.
inline long codim_thom_boardman(const Partition& type, const ProjectionParams& p) {
    if (type.weight() < 1) throw std::invalid_argument("codim_thom_boardman: weight >= 1 required");
    return static_cast<long>(type.weight()) * (p.codim - p.center_dim) - type.block_count();
}

inline bool thom_boardman_empty(const Partition& type, const ProjectionParams& p) {
    return codim_thom_boardman(type, p) > static_cast<long>(p.ambient_dim) - p.center_dim - 1;
}

/// Exact bound min(c, c + e - n/(e+1)): centers of dimension strictly below
/// it give projections all of whose off-singular fibres have embedding
/// dimension at most e.
inline Rat planarity_bound(int n, int c, int e) {
    if (n < 1 || c < 1 || e < 1) throw std::invalid_argument("planarity_bound: n, c, e >= 1 required");
    Rat general = Rat(c) + Rat(e) - Rat(n, static_cast<long>(e) + 1);
    return std::min(Rat(c), general);
}

/// The dimension count behind the planarity bound for e = 2: true iff
/// 4n - 6 + (lambda - 2)(n + c - lambda) < (lambda + 1)(n + c - lambda),
/// i.e. the bad incidence locus misses the generic center.
inline bool genericity_inequality(int n, int c, int lambda) {
    if (lambda < 2) throw std::invalid_argument("genericity_inequality: lambda >= 2 required");
    long s = static_cast<long>(n) + c - lambda;
    long lhs = 4L * n - 6 + (static_cast<long>(lambda) - 2) * s;
    long rhs = (static_cast<long>(lambda) + 1) * s;
    return lhs < rhs;
}

/// Condition count comparison along a degeneration of cycle types: the
/// proper type must impose strictly more conditions than any distinct
/// postulated type it degenerates from. Throws NotReachableError when
/// `proper` is not a degeneration of `postulated`.
inline bool corollary_weight_inequality(const Partition& proper, const Partition& postulated, int c) {
    if (!degeneration_reachable(postulated, proper)) throw NotReachableError();
    long lhs = static_cast<long>(postulated.weight()) * c - postulated.block_count();
    long rhs = static_cast<long>(proper.weight()) * c - proper.block_count();
    return lhs < rhs;
}

}  // namespace secantlab

#endif
