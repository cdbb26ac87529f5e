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

#ifndef SECANTLAB_BINFORM_HPP
#define SECANTLAB_BINFORM_HPP

#include <array>
#include <ostream>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "secantlab/unipoly.hpp"

namespace secantlab {

struct AllZeroError : std::runtime_error {
    AllZeroError() : std::runtime_error("all input forms are zero") {}
};
struct SingularChangeError : std::runtime_error {
    SingularChangeError() : std::runtime_error("coordinate change matrix is singular") {}
};

/// 2x2 coordinate change on the line: (s,t) -> (m00*s + m01*t, m10*s + m11*t).
struct ChartMatrix {
    std::array<std::array<Rat, 2>, 2> m{{{Rat(1), Rat(0)}, {Rat(0), Rat(1)}}};

    static ChartMatrix identity() { return {}; }
    /// (s,t) -> (s + lambda*t, t); moves the value at [0:1] to g(lambda, 1).
    static ChartMatrix shear(const Rat& lambda) {
        ChartMatrix c;
        c.m[0][1] = lambda;
        return c;
    }
    Rat det() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }
    bool is_identity() const {
        return m[0][0].is_one() && m[0][1].is_zero() && m[1][0].is_zero() && m[1][1].is_one();
    }
    ChartMatrix inverse() const {
        Rat d = det();
        if (d.is_zero()) throw SingularChangeError();
        ChartMatrix r;
        r.m[0][0] = m[1][1] / d;
        r.m[0][1] = -m[0][1] / d;
        r.m[1][0] = -m[1][0] / d;
        r.m[1][1] = m[0][0] / d;
        return r;
    }
    /// Image of a parameter point [s:t].
    std::pair<Rat, Rat> apply(const Rat& s, const Rat& t) const {
        return {m[0][0] * s + m[0][1] * t, m[1][0] * s + m[1][1] * t};
    }
};

/// Homogeneous binary form of fixed degree d in (s,t); coefficient of
/// s^(d-i) t^i sits at index i. The zero form keeps its degree tag, so the
/// coefficient list always has length d+1.
class BinForm {
public:
    BinForm() : deg_(0), c_(1) {}
    BinForm(int degree, std::vector<Rat> coeffs) : deg_(degree), c_(std::move(coeffs)) {
        if (deg_ < 0 || c_.size() != static_cast<size_t>(deg_) + 1)
            throw ArithmeticError("BinForm: coefficient count must equal degree + 1");
    }
    static BinForm zero(int degree) { return BinForm(degree, std::vector<Rat>(static_cast<size_t>(degree) + 1)); }
    static BinForm constant(const Rat& a) { return BinForm(0, {a}); }
    /// t - root*s, the degree-1 form vanishing at [1 : root].
    static BinForm linear_root(const Rat& root) { return BinForm(1, {-root, Rat(1)}); }

    int degree() const { return deg_; }
    const Rat& coeff(int i) const { return c_.at(static_cast<size_t>(i)); }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_zero() const {
        for (const Rat& a : c_)
            if (!a.is_zero()) return false;
        return true;
    }

    Rat eval(const Rat& s, const Rat& t) const {
        // Horner in t with powers of s folded in.
        Rat acc(0);
        for (size_t i = c_.size(); i-- > 0;) acc = acc * t + c_[i] * pow_(s, deg_ - static_cast<int>(i));
        return acc;
    }

    /// p(x) = g(1, x); degree drops by the multiplicity of the root [0:1].
    UniPoly dehomogenize() const { return UniPoly(c_); }

    /// Inverse of dehomogenize at fixed degree; requires deg p <= degree.
    static BinForm homogenize(const UniPoly& p, int degree) {
        if (p.degree() > degree) throw ArithmeticError("BinForm: polynomial degree exceeds form degree");
        std::vector<Rat> c(static_cast<size_t>(degree) + 1);
        for (int i = 0; i <= p.degree(); ++i) c[static_cast<size_t>(i)] = p.coeff(i);
        return BinForm(degree, std::move(c));
    }

    /// Multiplicity of the point at infinity [0:1] as a root (= degree - deg dehomogenize).
    int infinity_multiplicity() const {
        if (is_zero()) throw AllZeroError();
        return deg_ - dehomogenize().degree();
    }

    BinForm derivative_s() const {
        if (deg_ == 0) return BinForm::zero(0);
        std::vector<Rat> c(static_cast<size_t>(deg_));
        for (int i = 0; i < deg_; ++i) c[static_cast<size_t>(i)] = Rat(deg_ - i) * c_[static_cast<size_t>(i)];
        return BinForm(deg_ - 1, std::move(c));
    }
    BinForm derivative_t() const {
        if (deg_ == 0) return BinForm::zero(0);
        std::vector<Rat> c(static_cast<size_t>(deg_));
        for (int i = 1; i <= deg_; ++i) c[static_cast<size_t>(i - 1)] = Rat(i) * c_[static_cast<size_t>(i)];
        return BinForm(deg_ - 1, std::move(c));
    }

    /// Divides by the top nonzero coefficient, making the dehomogenization monic.
    BinForm normalized() const {
        if (is_zero()) throw AllZeroError();
        int top = deg_;
        while (c_[static_cast<size_t>(top)].is_zero()) --top;
        Rat inv = c_[static_cast<size_t>(top)].inverse();
        std::vector<Rat> c(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] * inv;
        return BinForm(deg_, std::move(c));
    }

    friend BinForm operator*(const BinForm& a, const BinForm& b) {
        std::vector<Rat> c(static_cast<size_t>(a.deg_ + b.deg_) + 1);
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return BinForm(a.deg_ + b.deg_, std::move(c));
    }
    friend BinForm operator*(const BinForm& a, const Rat& s) {
        std::vector<Rat> c(a.c_.size());
        for (size_t i = 0; i < c.size(); ++i) c[i] = a.c_[i] * s;
        return BinForm(a.deg_, std::move(c));
    }
    friend BinForm operator+(const BinForm& a, const BinForm& b) {
        if (a.deg_ != b.deg_) throw ArithmeticError("BinForm: degree mismatch in sum");
        std::vector<Rat> c(a.c_.size());
        for (size_t i = 0; i < c.size(); ++i) c[i] = a.c_[i] + b.c_[i];
        return BinForm(a.deg_, std::move(c));
    }
    friend BinForm operator-(const BinForm& a, const BinForm& b) {
        if (a.deg_ != b.deg_) throw ArithmeticError("BinForm: degree mismatch in difference");
        std::vector<Rat> c(a.c_.size());
        for (size_t i = 0; i < c.size(); ++i) c[i] = a.c_[i] - b.c_[i];
        return BinForm(a.deg_, std::move(c));
    }

    friend bool operator==(const BinForm& a, const BinForm& b) { return a.deg_ == b.deg_ && a.c_ == b.c_; }
    friend bool operator!=(const BinForm& a, const BinForm& b) { return !(a == b); }

private:
    static Rat pow_(const Rat& x, int e) {
        Rat r(1);
        for (int i = 0; i < e; ++i) r *= x;
        return r;
    }

    int deg_;
    std::vector<Rat> c_;
};

/// Substitution g(M(s,t)); degree and root multiplicity pattern are preserved.
inline BinForm change_chart(const BinForm& g, const ChartMatrix& chart) {
    if (chart.det().is_zero()) throw SingularChangeError();
    const int d = g.degree();
    // New s and t images as degree-1 forms.
    BinForm ns(1, {chart.m[0][0], chart.m[0][1]});
    BinForm nt(1, {chart.m[1][0], chart.m[1][1]});
    std::vector<BinForm> spow{BinForm::constant(Rat(1))}, tpow{BinForm::constant(Rat(1))};
    for (int i = 1; i <= d; ++i) {
        spow.push_back(spow.back() * ns);
        tpow.push_back(tpow.back() * nt);
    }
    BinForm out = BinForm::zero(d);
    for (int i = 0; i <= d; ++i) {
        if (g.coeff(i).is_zero()) continue;
        out = out + (spow[static_cast<size_t>(d - i)] * tpow[static_cast<size_t>(i)]) * g.coeff(i);
    }
    return out;
}

/// Exact quotient of binary forms; throws if b does not divide a.
inline BinForm exact_div(const BinForm& a, const BinForm& b) {
    if (b.is_zero()) throw ArithmeticError("BinForm: division by zero form");
    if (a.is_zero()) return BinForm::zero(a.degree() - b.degree() >= 0 ? a.degree() - b.degree() : 0);
    const int binf = b.infinity_multiplicity();
    const int ainf = a.infinity_multiplicity();
    if (ainf < binf) throw ArithmeticError("BinForm: division not exact at infinity");
    UniPoly q = exact_div(a.dehomogenize(), b.dehomogenize());
    return BinForm::homogenize(q, a.degree() - b.degree());
}

inline bool divides(const BinForm& b, const BinForm& a) {
    if (b.is_zero()) return a.is_zero();
    if (a.is_zero()) return true;
    if (a.infinity_multiplicity() < b.infinity_multiplicity()) return false;
    return divides(b.dehomogenize(), a.dehomogenize());
}

/// Monic-normalized gcd of a family of forms; common roots at [0:1] are
/// tracked through the drop in dehomogenized degree, so no chart change is
/// needed. Throws AllZeroError when every input is zero.
inline BinForm gcd_binforms(std::span<const BinForm> forms) {
    UniPoly affine;
    int inf_mult = -1;
    bool seen = false;
    for (const BinForm& f : forms) {
        if (f.is_zero()) continue;
        UniPoly p = f.dehomogenize();
        int e = f.infinity_multiplicity();
        if (!seen) {
            affine = p;
            inf_mult = e;
            seen = true;
        } else {
            affine = gcd(affine, p);
            inf_mult = std::min(inf_mult, e);
        }
    }
    if (!seen) throw AllZeroError();
    BinForm g = BinForm::homogenize(affine, affine.degree() + inf_mult);
    return g.normalized();
}

inline BinForm gcd_binforms(const std::vector<BinForm>& forms) {
    return gcd_binforms(std::span<const BinForm>(forms));
}

/// Gcd of a form with both its partial derivatives: for g = prod l_i^{m_i}
/// this is prod l_i^{m_i - 1}, roots at infinity included.
inline BinForm multiplicity_excess(const BinForm& g) {
    if (g.is_zero()) throw AllZeroError();
    if (g.degree() == 0) return BinForm::constant(Rat(1));
    std::vector<BinForm> fam{g, g.derivative_s(), g.derivative_t()};
    // Degree mismatch is fine: gcd_binforms only looks at roots.
    return gcd_binforms(fam);
}

/// Squarefree decomposition g = c * prod factor_i^{mult_i} with pairwise
/// coprime squarefree factors and strictly increasing multiplicities.
/// Computed by iterated gcd with partial derivatives; no root isolation.
inline std::vector<std::pair<int, BinForm>> squarefree_decomposition(const BinForm& g) {
    if (g.is_zero()) throw AllZeroError();
    std::vector<std::pair<int, BinForm>> out;
    if (g.degree() == 0) return out;
    // chain[j] = prod l_i^{max(m_i - j, 0)}
    std::vector<BinForm> chain{g.normalized()};
    while (chain.back().degree() > 0) chain.push_back(multiplicity_excess(chain.back()).normalized());
    // radical[j] = prod over m_i > j of l_i; factor with multiplicity exactly j
    // is radical[j-1] / radical[j].
    std::vector<BinForm> radical;
    for (size_t j = 0; j + 1 < chain.size(); ++j) radical.push_back(exact_div(chain[j], chain[j + 1]).normalized());
    for (size_t j = 0; j < radical.size(); ++j) {
        BinForm exact_mult = (j + 1 < radical.size()) ? exact_div(radical[j], radical[j + 1]) : radical[j];
        if (exact_mult.degree() > 0) out.emplace_back(static_cast<int>(j) + 1, exact_mult.normalized());
    }
    return out;
}

/// Finds a shear making the coefficient of t^d nonzero (no root at [0:1]),
/// trying lambda = 0, 1, 2, ... Identity when the form is already clean.
inline ChartMatrix chart_fix(const BinForm& g) {
    if (g.is_zero()) throw AllZeroError();
    for (long lambda = 0;; ++lambda) {
        if (!g.eval(Rat(lambda), Rat(1)).is_zero()) return ChartMatrix::shear(Rat(lambda));
    }
}

inline std::ostream& operator<<(std::ostream& os, const BinForm& g) {
    if (g.is_zero()) return os << "0";
    bool first = true;
    for (int i = 0; i <= g.degree(); ++i) {
        const Rat& c = g.coeff(i);
        if (c.is_zero()) continue;
        if (!first) os << (c.sign() > 0 ? " + " : " - ");
        else if (c.sign() < 0) os << "-";
        first = false;
        Rat a = c.abs();
        const int se = g.degree() - i, te = i;
        if ((se == 0 && te == 0) || !a.is_one()) os << a;
        bool need_star = !a.is_one() || (se == 0 && te == 0);
        if (se > 0) {
            if (need_star) os << "*";
            os << "s";
            if (se > 1) os << "^" << se;
            need_star = true;
        }
        if (te > 0) {
            if (need_star) os << "*";
            os << "t";
            if (te > 1) os << "^" << te;
        }
    }
    return os;
}

}  // namespace secantlab

#endif
