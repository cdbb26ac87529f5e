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

#ifndef SECANTLAB_INCIDENCE_HPP
#define SECANTLAB_INCIDENCE_HPP

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "secantlab/binform.hpp"
#include "secantlab/curvilinear.hpp"
#include "secantlab/multiform.hpp"
#include "secantlab/qmat.hpp"
#include "secantlab/rng.hpp"

namespace secantlab {

struct LineInsideVarietyError : std::runtime_error {
    LineInsideVarietyError() : std::runtime_error("line lies inside the variety: intersection is not finite") {}
};
struct GenerationFailedError : std::runtime_error {
    explicit GenerationFailedError(const std::string& why) : std::runtime_error("instance generation failed: " + why) {}
};

/// Subvariety of P^N cut out by homogeneous generators in x0..xN.
struct VarietySpec {
    int ambient_dim = 0;  // N
    std::vector<MultiForm> generators;
    int codim = 0;  // claimed codimension c

    static VarietySpec make(int ambient_dim, std::vector<MultiForm> generators, int codim) {
        if (ambient_dim < 2) throw std::invalid_argument("VarietySpec: ambient dimension >= 2 required");
        if (codim < 1 || static_cast<int>(generators.size()) < codim)
            throw std::invalid_argument("VarietySpec: need at least codim generators");
        for (const MultiForm& f : generators) {
            if (f.num_vars() != ambient_dim + 1) throw std::invalid_argument("VarietySpec: wrong variable count");
            if (f.is_zero()) throw std::invalid_argument("VarietySpec: zero generator");
        }
        return VarietySpec{ambient_dim, std::move(generators), codim};
    }
};

/// Line through two points of P^N with the induced parametrization
/// phi(s,t) = s*P + t*Q.
struct LineSpec {
    std::vector<Rat> point_a;
    std::vector<Rat> point_b;

    static LineSpec make(std::vector<Rat> a, std::vector<Rat> b) {
        if (a.size() != b.size() || a.size() < 3) throw std::invalid_argument("LineSpec: bad point length");
        QMat m = QMat::from_rows({a, b});
        if (m.rank() != 2) throw std::invalid_argument("LineSpec: points are linearly dependent");
        return LineSpec{std::move(a), std::move(b)};
    }
    static LineSpec coordinate_axis(int ambient_dim) {
        std::vector<Rat> a(static_cast<size_t>(ambient_dim) + 1), b(static_cast<size_t>(ambient_dim) + 1);
        a[0] = Rat(1);
        b[1] = Rat(1);
        return LineSpec{std::move(a), std::move(b)};
    }
    int ambient_dim() const { return static_cast<int>(point_a.size()) - 1; }
};

/// Pullback F(s*P + t*Q) as a binary form of degree deg F.
inline BinForm restrict_to_line(const MultiForm& f, const LineSpec& line) {
    if (f.num_vars() != line.ambient_dim() + 1) throw std::invalid_argument("restrict_to_line: variable count mismatch");
    BinForm acc = BinForm::zero(f.degree());
    for (const auto& [exps, coeff] : f.terms()) {
        BinForm term = BinForm::constant(coeff);
        for (size_t v = 0; v < exps.size(); ++v) {
            if (exps[v] == 0) continue;
            BinForm lin(1, {line.point_a[v], line.point_b[v]});
            for (int i = 0; i < exps[v]; ++i) term = term * lin;
        }
        acc = acc + term;
    }
    return acc;
}

/// The schematic intersection Z = X cap L on the line, held in an adapted
/// chart: the stored chart matrix has been applied to the parametrization so
/// that g has no root at [0:1], and g is monic in the dehomogenized
/// variable. Restricted forms and cofactors live in the same chart, so
/// g * cofactor[j] = restricted[j] exactly.
struct IntersectionScheme {
    BinForm g = BinForm::constant(Rat(1));
    int length = 0;
    Partition type;
    int support = 0;
    std::vector<BinForm> restricted;
    std::vector<BinForm> cofactors;
    ChartMatrix chart;

    bool empty() const { return length == 0; }
};

inline IntersectionScheme intersect(const VarietySpec& x, const LineSpec& line) {
    std::vector<BinForm> raw;
    raw.reserve(x.generators.size());
    bool any_nonzero = false;
    for (const MultiForm& f : x.generators) {
        raw.push_back(restrict_to_line(f, line));
        if (!raw.back().is_zero()) any_nonzero = true;
    }
    if (!any_nonzero) throw LineInsideVarietyError();

    BinForm g0 = gcd_binforms(raw);
    ChartMatrix chart = chart_fix(g0);
    IntersectionScheme z;
    z.chart = chart;
    if (!chart.is_identity()) {
        for (BinForm& f : raw) f = change_chart(f, chart);
        g0 = change_chart(g0, chart);
    }
    z.g = g0.normalized();
    z.length = z.g.degree();
    z.type = z.length > 0 ? cycle_type(z.g) : Partition();
    z.support = z.length > 0 ? support_count(z.g) : 0;
    z.restricted = std::move(raw);
    z.cofactors.reserve(z.restricted.size());
    for (const BinForm& f : z.restricted) z.cofactors.push_back(exact_div(f, z.g));
    return z;
}

namespace detail {

inline UniPoly poly_matrix_det(const std::vector<std::vector<UniPoly>>& m, std::vector<int> cols) {
    const size_t row = m.size() - cols.size();
    if (cols.size() == 1) return m[row][static_cast<size_t>(cols[0])];
    UniPoly det;
    for (size_t pick = 0; pick < cols.size(); ++pick) {
        const UniPoly& entry = m[row][static_cast<size_t>(cols[pick])];
        if (entry.is_zero()) continue;
        std::vector<int> rest;
        rest.reserve(cols.size() - 1);
        for (size_t j = 0; j < cols.size(); ++j)
            if (j != pick) rest.push_back(cols[j]);
        UniPoly minor = poly_matrix_det(m, std::move(rest));
        if (pick % 2 == 0)
            det = det + entry * minor;
        else
            det = det - entry * minor;
    }
    return det;
}

inline bool next_subset(std::vector<int>& subset, int n) {
    int k = static_cast<int>(subset.size());
    for (int i = k - 1; i >= 0; --i) {
        if (subset[static_cast<size_t>(i)] < n - k + i) {
            ++subset[static_cast<size_t>(i)];
            for (int j = i + 1; j < k; ++j) subset[static_cast<size_t>(j)] = subset[static_cast<size_t>(j - 1)] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace detail

/// Certificate that X is smooth of codimension c at every point of Z: some
/// c x c minor of the Jacobian of the generators, restricted to the line, is
/// coprime to g. Needs exactly c generators. A false return means the
/// certificate failed, not that a singular point was found.
inline bool smooth_along(const VarietySpec& x, const LineSpec& line, const IntersectionScheme& z) {
    if (z.empty()) return true;
    const int c = x.codim;
    if (static_cast<int>(x.generators.size()) != c) return false;
    const int n_cols = x.ambient_dim + 1;

    std::vector<std::vector<UniPoly>> jac(static_cast<size_t>(c));
    for (int j = 0; j < c; ++j) {
        jac[static_cast<size_t>(j)].reserve(static_cast<size_t>(n_cols));
        for (int i = 0; i < n_cols; ++i) {
            BinForm d = restrict_to_line(x.generators[static_cast<size_t>(j)].partial_derivative(i), line);
            if (!z.chart.is_identity()) d = change_chart(d, z.chart);
            jac[static_cast<size_t>(j)].push_back(d.dehomogenize());
        }
    }

    const UniPoly gp = z.g.dehomogenize();
    std::vector<int> cols(static_cast<size_t>(c));
    for (int i = 0; i < c; ++i) cols[static_cast<size_t>(i)] = i;
    do {
        UniPoly minor = detail::poly_matrix_det(jac, cols);
        if (minor.is_zero()) continue;
        if (gcd(minor, gp).degree() == 0) return true;
    } while (detail::next_subset(cols, n_cols));
    return false;
}

/// A generated test instance, with the factored intersection divisor
/// remembered so that marked subschemes can be formed point by point.
struct GeneratedInstance {
    VarietySpec variety;
    LineSpec line;
    IntersectionScheme scheme;
    std::vector<std::pair<Rat, int>> roots;  // (affine root, multiplicity), chart = identity
};

namespace detail {

inline BinForm random_binform(Rng& rng, int degree) {
    std::vector<Rat> c(static_cast<size_t>(degree) + 1);
    bool nonzero = false;
    for (Rat& a : c) {
        a = rng.coefficient();
        nonzero = nonzero || !a.is_zero();
    }
    if (!nonzero) c[0] = rng.nonzero_coefficient();
    return BinForm(degree, std::move(c));
}

/// Random form of the given degree whose restriction to span(e0,e1) equals
/// the prescribed binary form: the pure (x0,x1) part is pinned, everything
/// else is random.
inline MultiForm random_form_with_restriction(Rng& rng, int num_vars, int degree, const BinForm& restriction) {
    MultiForm f(num_vars, degree);
    for (int i = 0; i <= degree; ++i) {
        if (restriction.coeff(i).is_zero()) continue;
        MultiForm::Exponents e(static_cast<size_t>(num_vars), 0);
        e[0] = degree - i;
        e[1] = i;
        f.add_term(e, restriction.coeff(i));
    }
    // Enumerate monomials of the given degree with a positive exponent on
    // some variable beyond x0, x1.
    MultiForm::Exponents e(static_cast<size_t>(num_vars), 0);
    std::function<void(int, int)> rec = [&](int var, int remaining) {
        if (var == num_vars - 1) {
            e[static_cast<size_t>(var)] = remaining;
            bool beyond = false;
            for (int v = 2; v < num_vars; ++v) beyond = beyond || e[static_cast<size_t>(v)] > 0;
            if (beyond) {
                Rat c = rng.coefficient();
                if (!c.is_zero()) f.add_term(e, c);
            }
            e[static_cast<size_t>(var)] = 0;
            return;
        }
        for (int use = 0; use <= remaining; ++use) {
            e[static_cast<size_t>(var)] = use;
            rec(var + 1, remaining - use);
        }
        e[static_cast<size_t>(var)] = 0;
    };
    rec(0, degree);
    return f;
}

}  // namespace detail

/// Manufactures (X, L, Z) with L = span(e0, e1) and Z of exactly the target
/// cycle type, rejection-sampling until the gcd, smoothness and
/// cofactor-coprimality certificates all hold. Deterministic per seed.
inline GeneratedInstance generate_instance(int ambient_dim, int codim, const std::vector<int>& degrees,
                                           const Partition& target, std::uint64_t seed, int max_retries = 100) {
    const int n = ambient_dim;
    if (n < 2 || codim < 1 || codim > n - 1)
        throw std::invalid_argument("generate_instance: need 2 <= codim + 1 <= ambient_dim");
    if (static_cast<int>(degrees.size()) != codim)
        throw std::invalid_argument("generate_instance: need one degree per generator");
    const int k = target.weight();
    for (int d : degrees)
        if (d < std::max(k, 1)) throw std::invalid_argument("generate_instance: degrees must be >= cycle type weight");

    Rng rng(seed);

    // Distinct rational roots, one per block.
    std::vector<std::pair<Rat, int>> roots;
    for (int part : target.parts()) {
        for (;;) {
            Rat a = Rat(rng.uniform_int(-20, 20));
            bool fresh = true;
            for (const auto& [b, mult] : roots) fresh = fresh && b != a;
            if (fresh) {
                roots.emplace_back(a, part);
                break;
            }
        }
    }
    BinForm g = BinForm::constant(Rat(1));
    for (const auto& [a, mult] : roots)
        for (int i = 0; i < mult; ++i) g = g * BinForm::linear_root(a);

    const LineSpec line = LineSpec::coordinate_axis(n);
    for (int attempt = 0; attempt < max_retries; ++attempt) {
        std::vector<MultiForm> gens;
        gens.reserve(static_cast<size_t>(codim));
        for (int j = 0; j < codim; ++j) {
            BinForm cof = detail::random_binform(rng, degrees[static_cast<size_t>(j)] - k);
            gens.push_back(detail::random_form_with_restriction(rng, n + 1, degrees[static_cast<size_t>(j)], g * cof));
        }
        VarietySpec x = VarietySpec::make(n, std::move(gens), codim);
        IntersectionScheme z = intersect(x, line);
        if (z.g != g.normalized()) continue;
        if (!smooth_along(x, line, z)) continue;
        std::vector<BinForm> fam{z.g};
        for (const BinForm& q : z.cofactors) fam.push_back(q);
        if (gcd_binforms(fam).degree() != 0) continue;
        return GeneratedInstance{std::move(x), line, std::move(z), roots};
    }
    throw GenerationFailedError("certificates kept failing; retry budget exhausted");
}

}  // namespace secantlab

#endif
