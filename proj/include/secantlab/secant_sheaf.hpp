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

#ifndef SECANTLAB_SECANT_SHEAF_HPP
#define SECANTLAB_SECANT_SHEAF_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "secantlab/formulas.hpp"
#include "secantlab/incidence.hpp"

namespace secantlab {

struct NotASubschemeError : std::runtime_error {
    NotASubschemeError() : std::runtime_error("marked divisor does not divide the intersection divisor") {}
};
struct NotStabilizedError : std::runtime_error {
    NotStabilizedError() : std::runtime_error("colength disagrees between consecutive high twists (internal bug)") {}
};
struct InconsistentSequenceError : std::runtime_error {
    explicit InconsistentSequenceError(const std::string& why)
        : std::runtime_error("splitting recovery failed: " + why) {}
};
struct PointOnSubschemeError : std::runtime_error {
    PointOnSubschemeError() : std::runtime_error("evaluation point lies on the marked subscheme") {}
};

/// A marked divisor W inside Z, given by an exact divisor w | g in the chart
/// of the intersection scheme. W = Z when w = g.
struct MarkedSubscheme {
    BinForm w = BinForm::constant(Rat(1));
    int degree = 0;
    Partition type;
    int support = 0;

    bool is_empty() const { return degree == 0; }
};

inline MarkedSubscheme full_subscheme(const IntersectionScheme& z) {
    return MarkedSubscheme{z.g, z.length, z.type, z.support};
}

/// Builds W = prod (t - a*s)^{d_i} from affine roots given in the original
/// line parametrization; roots are mapped into the scheme's chart before
/// the divisibility check. Throws NotASubschemeError when w does not divide g.
inline MarkedSubscheme subscheme_from_roots(const IntersectionScheme& z,
                                            const std::vector<std::pair<Rat, int>>& root_mults) {
    ChartMatrix inv = z.chart.inverse();
    BinForm w = BinForm::constant(Rat(1));
    for (const auto& [root, mult] : root_mults) {
        if (mult < 1) throw std::invalid_argument("subscheme_from_roots: multiplicities must be positive");
        auto [u, v] = inv.apply(Rat(1), root);
        if (u.is_zero()) throw NotASubschemeError();  // would sit at the chart's infinity, so cannot divide g
        Rat chart_root = v / u;
        for (int i = 0; i < mult; ++i) w = w * BinForm::linear_root(chart_root);
    }
    w = w.normalized();
    if (!divides(w, z.g)) throw NotASubschemeError();
    return MarkedSubscheme{w, w.degree(), w.degree() > 0 ? cycle_type(w) : Partition(),
                           w.degree() > 0 ? support_count(w) : 0};
}

/// Builds W from a sub-partition by lowering multiplicities factor by
/// factor: blocks of Z are listed by decreasing multiplicity, and the parts
/// are matched against them in order. All blocks belonging to one squarefree
/// factor must receive the same new multiplicity, since telling its roots
/// apart would require factoring over the rationals. Missing parts mean the
/// corresponding blocks are dropped from W.
inline MarkedSubscheme subscheme_from_parts(const IntersectionScheme& z, const Partition& parts) {
    auto decomp = squarefree_decomposition(z.g);  // multiplicity ascending
    std::reverse(decomp.begin(), decomp.end());
    const auto& want = parts.parts();
    size_t next = 0;
    BinForm w = BinForm::constant(Rat(1));
    for (const auto& [mult, factor] : decomp) {
        const int blocks = factor.degree();
        int chosen = -1;
        for (int b = 0; b < blocks; ++b) {
            int part = next < want.size() ? want[next] : 0;
            if (part > mult) throw NotASubschemeError();
            if (b == 0)
                chosen = part;
            else if (part != chosen)
                throw std::invalid_argument(
                    "subscheme_from_parts: blocks of one squarefree factor need equal parts; "
                    "give the divisor by explicit roots instead");
            if (next < want.size()) ++next;
        }
        for (int i = 0; i < chosen; ++i) w = w * factor;
    }
    if (next < want.size()) throw NotASubschemeError();
    w = w.degree() > 0 ? w.normalized() : w;
    return MarkedSubscheme{w, w.degree(), w.degree() > 0 ? cycle_type(w) : Partition(),
                           w.degree() > 0 ? support_count(w) : 0};
}

/// gcd(w, g/w): its local multiplicity at each support point p of W is
/// min(d_p, k_p - d_p), so its degree is the predicted kernel length and its
/// support count is the number of points where W is strictly smaller than Z.
inline BinForm excess_overlap(const IntersectionScheme& z, const MarkedSubscheme& w) {
    if (w.is_empty()) return BinForm::constant(Rat(1));
    std::vector<BinForm> pair{w.w, exact_div(z.g, w.w)};
    return gcd_binforms(pair);
}

/// The exact linear system whose solution space in (v, b) is H^0 of the
/// twisted secant (or contact) kernel sheaf: v is a first-order motion of
/// the line with degree-(1+t) components, b a deformation residue mod w, and
/// the rows state that each deformed restriction lies in the deformed ideal,
/// h_j(v) = u_j * b (mod w), with the optional contact rows forcing
/// multiple_part(w) | b.
struct ConditionSystem {
    int twist = 0;
    int normal_directions = 0;  // N - 1
    int v_unknowns = 0;         // (N-1) * max(twist + 2, 0)
    int b_unknowns = 0;         // deg w
    bool contact = false;
    QMat matrix;

    int per_direction() const { return normal_directions > 0 ? v_unknowns / normal_directions : 0; }
};

inline int h0_kernel(const ConditionSystem& sys);
inline int h0_image(const ConditionSystem& sys);

/// Bundles one analysis target: the variety, the line, its intersection
/// scheme, a marked subscheme and the contact flag. All derived data is in
/// the scheme's chart; systems for any twist can be assembled from it.
class SecantSystem {
public:
    SecantSystem(const VarietySpec& x, const LineSpec& line, const IntersectionScheme& z, MarkedSubscheme w,
                 bool contact)
        : ambient_dim_(x.ambient_dim),
          num_gens_(static_cast<int>(x.generators.size())),
          contact_(contact),
          scheme_(z),
          marked_(std::move(w)) {
        if (z.empty() && !marked_.is_empty()) throw NotASubschemeError();
        if (!divides(marked_.w, z.g)) throw NotASubschemeError();
        w_poly_ = marked_.w.dehomogenize();
        if (w_poly_.degree() != marked_.degree)
            throw NotASubschemeError();  // root at the chart's infinity; the chart fix prevents this
        multiple_poly_ = marked_.is_empty() ? UniPoly::constant(Rat(1)) : multiple_part(marked_.w).dehomogenize();
        for (int j = 0; j < num_gens_; ++j) {
            const BinForm& f = z.restricted[static_cast<size_t>(j)];
            cof_polys_.push_back(f.is_zero() ? UniPoly()
                                             : exact_div(f.dehomogenize(), w_poly_));
            std::vector<UniPoly> row;
            for (int i = 2; i <= ambient_dim_; ++i) {
                BinForm d = restrict_to_line(x.generators[static_cast<size_t>(j)].partial_derivative(i), line);
                if (!z.chart.is_identity()) d = change_chart(d, z.chart);
                row.push_back(d.dehomogenize());
            }
            normal_jacobian_.push_back(std::move(row));
        }
    }

    int ambient_dim() const { return ambient_dim_; }
    int normal_directions() const { return ambient_dim_ - 1; }
    const MarkedSubscheme& marked() const { return marked_; }
    const IntersectionScheme& scheme() const { return scheme_; }
    bool contact() const { return contact_; }

    ConditionSystem build(int twist) const {
        const int nd = normal_directions();
        const int pv = std::max(twist + 2, 0);
        const int d = marked_.degree;
        const int mdeg = contact_ ? multiple_poly_.degree() : 0;
        ConditionSystem sys;
        sys.twist = twist;
        sys.normal_directions = nd;
        sys.v_unknowns = nd * pv;
        sys.b_unknowns = d;
        sys.contact = contact_;
        sys.matrix = QMat(num_gens_ * d + mdeg, sys.v_unknowns + d);
        if (d == 0) return sys;

        for (int j = 0; j < num_gens_; ++j) {
            const int row0 = j * d;
            for (int i = 0; i < nd; ++i) {
                UniPoly cur = reduce_(normal_jacobian_[static_cast<size_t>(j)][static_cast<size_t>(i)]);
                for (int a = 0; a < pv; ++a) {
                    const int col = i * pv + a;
                    for (int l = 0; l <= cur.degree(); ++l) sys.matrix.at(row0 + l, col) = cur.coeff(l);
                    if (a + 1 < pv) cur = mul_x_mod_(cur);
                }
            }
            UniPoly cur = reduce_(cof_polys_[static_cast<size_t>(j)]);
            for (int a = 0; a < d; ++a) {
                const int col = sys.v_unknowns + a;
                for (int l = 0; l <= cur.degree(); ++l) sys.matrix.at(row0 + l, col) = -cur.coeff(l);
                if (a + 1 < d) cur = mul_x_mod_(cur);
            }
        }
        if (mdeg > 0) {
            const int row0 = num_gens_ * d;
            for (int a = 0; a < d; ++a) {
                UniPoly rem = divrem(UniPoly::monomial(Rat(1), a), multiple_poly_).second;
                for (int l = 0; l <= rem.degree(); ++l) sys.matrix.at(row0 + l, sys.v_unknowns + a) = rem.coeff(l);
            }
        }
        return sys;
    }

    int h0_kernel(int twist) const { return cached_(twist).first; }
    int h0_image(int twist) const { return cached_(twist).second; }

    /// Solutions with v = 0: the finite-length kernel piece, and for W = Z
    /// the uniqueness defect of the residue b.
    int b_fibre_dim() const {
        if (!b_fibre_) {
            ConditionSystem sys = build(-2);  // no v unknowns at this twist
            b_fibre_ = sys.v_unknowns + sys.b_unknowns - sys.matrix.rank();
        }
        return *b_fibre_;
    }

    int stable_twist() const {
        int d = marked_.degree;
        return std::max(contact_ ? d + multiple_poly_.degree() - 1 : d - 1, 0);
    }

    /// Colength of the image subsheaf inside O(1)^{N-1}, measured at a
    /// stabilized twist and re-checked one twist higher.
    int colength() const {
        if (!colength_) {
            const int t = stable_twist();
            int c0 = normal_directions() * (t + 2) - h0_image(t);
            int c1 = normal_directions() * (t + 3) - h0_image(t + 1);
            if (c0 != c1) throw NotStabilizedError();
            colength_ = c0;
        }
        return *colength_;
    }

    int euler_char_at_0() const { return 2 * normal_directions() - colength(); }
    int h1_at_0() const { return h0_image(0) - euler_char_at_0(); }

    /// Splitting multiset {a_i} of the image subsheaf, recovered from the
    /// jumps of the twist sequence and validated against it.
    std::vector<int> splitting() const {
        const int nd = normal_directions();
        const int col = colength();
        const int t_low = -(col + 2);
        if (h0_image(t_low) != 0)
            throw InconsistentSequenceError("h0 has not vanished at the lower twist guard");
        std::vector<int> split;
        int prev_jump = 0;
        int t = t_low + 1;
        for (; prev_jump < nd; ++t) {
            if (t > col + 2) throw InconsistentSequenceError("summands keep missing past the upper twist guard");
            int jump = h0_image(t) - h0_image(t - 1);
            if (jump < prev_jump) throw InconsistentSequenceError("h0 jumps are not monotone");
            for (int i = 0; i < jump - prev_jump; ++i) split.push_back(-t);
            prev_jump = jump;
        }
        long sum = 0;
        for (int a : split) sum += a;
        if (sum != nd - col) throw InconsistentSequenceError("recovered degrees do not add up to the colength");
        for (int s = t_low; s < t; ++s) {
            long expect = 0;
            for (int a : split) expect += std::max(a + s + 1, 0);
            if (expect != h0_image(s)) throw InconsistentSequenceError("recovered multiset fails h0 reconstruction");
        }
        std::sort(split.begin(), split.end(), std::greater<int>());
        return split;
    }

    /// Whether first-order motions at twist 0 evaluate onto the full normal
    /// space at the given point of the line (original parameter coordinates).
    bool eval_surjective(const Rat& s, const Rat& t) const {
        auto [cs, ct] = scheme_.chart.inverse().apply(s, t);
        if (!marked_.is_empty() && marked_.w.eval(cs, ct).is_zero()) throw PointOnSubschemeError();
        if (!kernel0_) kernel0_ = build(0).matrix.kernel();
        const auto& basis = *kernel0_;
        const int nd = normal_directions();
        QMat eval(nd, static_cast<int>(basis.size()));
        for (size_t col = 0; col < basis.size(); ++col)
            for (int i = 0; i < nd; ++i) {
                // v_i has degree-1 components: v_i = c0 * s + c1 * t.
                const Rat& c0 = basis[col][static_cast<size_t>(i * 2)];
                const Rat& c1 = basis[col][static_cast<size_t>(i * 2 + 1)];
                eval.at(i, static_cast<int>(col)) = c0 * cs + c1 * ct;
            }
        return eval.rank() == nd;
    }

    /// Per-point filling certificate; points on the support of W are
    /// rejected with PointOnSubschemeError.
    std::vector<bool> filling_eval(const std::vector<std::pair<Rat, Rat>>& points) const {
        std::vector<bool> out;
        out.reserve(points.size());
        for (const auto& [s, t] : points) out.push_back(eval_surjective(s, t));
        return out;
    }

private:
    UniPoly reduce_(const UniPoly& p) const { return divrem(p, w_poly_).second; }
    UniPoly mul_x_mod_(const UniPoly& p) const { return divrem(p.shifted(1), w_poly_).second; }

    std::pair<int, int> cached_(int twist) const {
        auto it = h0_cache_.find(twist);
        if (it != h0_cache_.end()) return it->second;
        ConditionSystem sys = build(twist);
        int kernel = sys.v_unknowns + sys.b_unknowns - sys.matrix.rank();
        std::pair<int, int> entry{kernel, kernel - b_fibre_dim()};
        h0_cache_.emplace(twist, entry);
        return entry;
    }

    int ambient_dim_;
    int num_gens_;
    bool contact_;
    IntersectionScheme scheme_;
    MarkedSubscheme marked_;
    UniPoly w_poly_;
    UniPoly multiple_poly_;
    std::vector<UniPoly> cof_polys_;                  // u_j = f_j / w, dehomogenized
    std::vector<std::vector<UniPoly>> normal_jacobian_;  // d(F_j)/dx_i restricted, i = 2..N
    mutable std::map<int, std::pair<int, int>> h0_cache_;
    mutable std::optional<int> b_fibre_;
    mutable std::optional<int> colength_;
    mutable std::optional<std::vector<std::vector<Rat>>> kernel0_;
};

inline int h0_kernel(const ConditionSystem& sys) {
    return sys.v_unknowns + sys.b_unknowns - sys.matrix.rank();
}

/// Dimension of the projection of the solution space to the v block.
inline int h0_image(const ConditionSystem& sys) {
    if (sys.b_unknowns == 0) return h0_kernel(sys);
    QMat bonly(sys.matrix.rows(), sys.b_unknowns);
    for (int i = 0; i < sys.matrix.rows(); ++i)
        for (int j = 0; j < sys.b_unknowns; ++j) bonly.at(i, j) = sys.matrix.at(i, sys.v_unknowns + j);
    int fibre = sys.b_unknowns - bonly.rank();
    return h0_kernel(sys) - fibre;
}

/// h1 of a split bundle on the line, straight from the degrees.
inline long h1_from_splitting(const std::vector<int>& splitting) {
    long h1 = 0;
    for (int a : splitting) h1 += std::max(-a - 1, 0);
    return h1;
}

/// One computed quantity next to its closed-form prediction.
struct CheckedValue {
    long computed = 0;
    long predicted = 0;
    bool match = false;
    std::string rule;
};

inline CheckedValue make_checked(long computed, long predicted, std::string rule) {
    return CheckedValue{computed, predicted, computed == predicted, std::move(rule)};
}

/// Full verdict for one (X, L, W, contact) configuration: computed
/// cohomology next to every formula the configuration is supposed to obey.
struct SheafReport {
    int ambient_dim = 0;
    int codim = 0;
    int length = 0;   // k
    int support = 0;  // r
    Partition type_z;
    int sub_degree = 0;   // d
    int sub_support = 0;  // #supp W
    Partition type_w;
    bool contact = false;
    bool full_subscheme = false;  // W = Z
    bool smooth_certified = false;
    bool cofactors_coprime = false;

    long colength = 0;
    std::map<int, long> h0;  // image subsheaf, by twist
    long h1_image = 0;
    std::vector<int> splitting;
    long euler_char_at_0 = 0;
    long kernel_dim = 0;  // solutions with v = 0
    bool filling = false;

    CheckedValue colength_check;
    CheckedValue kernel_check;
    std::optional<CheckedValue> h0_check;          // only meaningful when h1 = 0
    std::optional<CheckedValue> family_dim_check;  // contact, W = Z
};

/// Closed-form colength prediction for the configuration.
inline long predicted_colength(int codim, int k, int r, int d, int excess_min_sum, int excess_support, int sub_support,
                               bool contact, bool full) {
    if (full) return contact ? static_cast<long>(k) * codim - r : static_cast<long>(k) * (codim - 1);
    long secant = static_cast<long>(codim - 1) * d + excess_min_sum;
    if (!contact) return secant;
    // Image colength grows by one for every support point of W, except where
    // W exhausts Z and the unique unit cofactor still absorbs one direction.
    return static_cast<long>(codim) * d - (sub_support - excess_support);
}

inline SheafReport analyze(const VarietySpec& x, const LineSpec& line, const IntersectionScheme& z,
                           const MarkedSubscheme& w, bool contact, const std::vector<int>& twists = {},
                           int filling_samples = 5) {
    if (z.empty()) throw std::invalid_argument("analyze: the intersection scheme is empty");
    SecantSystem sys(x, line, z, w, contact);
    const bool full = w.w == z.g;
    BinForm overlap = excess_overlap(z, w);
    const int min_sum = overlap.degree();
    const int excess_support = min_sum > 0 ? support_count(overlap) : 0;

    SheafReport rep;
    rep.ambient_dim = x.ambient_dim;
    rep.codim = x.codim;
    rep.length = z.length;
    rep.support = z.support;
    rep.type_z = z.type;
    rep.sub_degree = w.degree;
    rep.sub_support = w.support;
    rep.type_w = w.type;
    rep.contact = contact;
    rep.full_subscheme = full;
    rep.smooth_certified = smooth_along(x, line, z);
    {
        std::vector<BinForm> fam{z.g};
        for (const BinForm& q : z.cofactors) fam.push_back(q);
        rep.cofactors_coprime = gcd_binforms(fam).degree() == 0;
    }

    rep.colength = sys.colength();
    rep.kernel_dim = sys.b_fibre_dim();
    rep.euler_char_at_0 = sys.euler_char_at_0();
    rep.h1_image = sys.h1_at_0();
    rep.splitting = sys.splitting();
    std::vector<int> want = twists;
    want.push_back(0);
    std::sort(want.begin(), want.end());
    want.erase(std::unique(want.begin(), want.end()), want.end());
    for (int t : want) rep.h0[t] = sys.h0_image(t);

    // Deterministic off-W sample points on the line, original coordinates.
    int found = 0;
    bool surjective_somewhere = false;
    for (long j = 0; found < filling_samples && j < 1000; ++j) {
        Rat tval = Rat(j % 2 == 0 ? j / 2 : -(j + 1) / 2);
        auto [cs, ct] = z.chart.inverse().apply(Rat(1), tval);
        if (!w.is_empty() && w.w.eval(cs, ct).is_zero()) continue;
        ++found;
        if (sys.eval_surjective(Rat(1), tval)) {
            surjective_somewhere = true;
            break;
        }
    }
    rep.filling = surjective_somewhere;

    rep.colength_check = make_checked(
        rep.colength,
        predicted_colength(x.codim, z.length, z.support, w.degree, min_sum, excess_support, w.support, contact, full),
        full ? (contact ? "k*c - r" : "k*(c-1)") : (contact ? "c*d - #{W-points exhausting Z}" : "(c-1)*d + sum min(d_i, k_i - d_i)"));
    rep.kernel_check = make_checked(rep.kernel_dim, contact ? excess_support : min_sum,
                                    contact ? "#{points of W with k_i > d_i}" : "sum min(d_i, k_i - d_i)");
    if (rep.h1_image == 0) {
        long h0k = sys.h0_kernel(0);
        long predicted = full ? (contact ? 2L * (x.ambient_dim - 1) - (static_cast<long>(z.length) * x.codim - z.support)
                                         : 2L * (x.ambient_dim - 1) - static_cast<long>(z.length) * (x.codim - 1))
                              : (contact ? 2L * (x.ambient_dim - 1) - static_cast<long>(x.codim) * w.degree + w.support
                                         : 2L * (x.ambient_dim - 1) - static_cast<long>(x.codim - 1) * w.degree);
        rep.h0_check = make_checked(h0k, predicted, "2(N-1) - expected conditions, given h1 = 0");
    }
    if (contact && full) {
        SecantFamilyParams p = SecantFamilyParams::lines_in_projective_space(x.ambient_dim, x.codim, z.type);
        rep.family_dim_check = make_checked(expected_dim_secant(p), 2L * x.ambient_dim - 2 - rep.colength,
                                            "expected family dimension = 2N - 2 - colength");
    }
    return rep;
}

}  // namespace secantlab

#endif
