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

#ifndef SECANTLAB_UNIPOLY_HPP
#define SECANTLAB_UNIPOLY_HPP

#include <initializer_list>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "secantlab/rational.hpp"

namespace secantlab {

/// Dense univariate polynomial over Rat, coefficients stored lowest degree
/// first. The zero polynomial is the empty coefficient list; otherwise the
/// last stored coefficient is nonzero.
class UniPoly {
public:
    UniPoly() = default;
    UniPoly(std::initializer_list<Rat> coeffs) : c_(coeffs) { trim_(); }
    explicit UniPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim_(); }

    static UniPoly constant(const Rat& a) { return UniPoly({a}); }
    static UniPoly monomial(const Rat& a, int deg) {
        if (a.is_zero()) return UniPoly();
        std::vector<Rat> c(static_cast<size_t>(deg) + 1);
        c.back() = a;
        return UniPoly(std::move(c));
    }
    /// x - root
    static UniPoly linear_root(const Rat& root) { return UniPoly({-root, Rat(1)}); }

    bool is_zero() const { return c_.empty(); }
    /// Degree of the zero polynomial is -1 by convention.
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    const Rat& coeff(int i) const {
        static const Rat zero(0);
        if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
        return c_[static_cast<size_t>(i)];
    }
    const std::vector<Rat>& coeffs() const { return c_; }

    Rat leading() const {
        if (is_zero()) throw ArithmeticError("UniPoly: leading coefficient of zero");
        return c_.back();
    }

    Rat eval(const Rat& x) const {
        Rat acc(0);
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    UniPoly derivative() const {
        if (c_.size() <= 1) return UniPoly();
        std::vector<Rat> d(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = Rat(static_cast<long>(i)) * c_[i];
        return UniPoly(std::move(d));
    }

    UniPoly monic() const {
        if (is_zero()) throw ArithmeticError("UniPoly: cannot normalize zero");
        return *this * leading().inverse();
    }

    /// Multiplication by x^n.
    UniPoly shifted(int n) const {
        if (is_zero() || n == 0) return n >= 0 ? *this : throw ArithmeticError("UniPoly: negative shift");
        std::vector<Rat> c(c_.size() + static_cast<size_t>(n));
        for (size_t i = 0; i < c_.size(); ++i) c[i + static_cast<size_t>(n)] = c_[i];
        return UniPoly(std::move(c));
    }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()));
        for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
        return UniPoly(std::move(c));
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
        std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()));
        for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
        return UniPoly(std::move(c));
    }
    friend UniPoly operator-(const UniPoly& a) {
        std::vector<Rat> c(a.c_.size());
        for (size_t i = 0; i < c.size(); ++i) c[i] = -a.c_[i];
        return UniPoly(std::move(c));
    }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return UniPoly();
        std::vector<Rat> c(a.c_.size() + b.c_.size() - 1);
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return UniPoly(std::move(c));
    }
    friend UniPoly operator*(const UniPoly& a, const Rat& s) {
        if (s.is_zero()) return UniPoly();
        std::vector<Rat> c(a.c_.size());
        for (size_t i = 0; i < c.size(); ++i) c[i] = a.c_[i] * s;
        return UniPoly(std::move(c));
    }
    friend UniPoly operator*(const Rat& s, const UniPoly& a) { return a * s; }

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

private:
    void trim_() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Rat> c_;
};

/// Euclidean division: a = q*b + r with deg r < deg b. Throws on b = 0.
inline std::pair<UniPoly, UniPoly> divrem(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw ArithmeticError("UniPoly: division by zero polynomial");
    if (a.degree() < b.degree()) return {UniPoly(), a};
    std::vector<Rat> rem(a.coeffs());
    std::vector<Rat> quo(static_cast<size_t>(a.degree() - b.degree()) + 1);
    const Rat lead_inv = b.leading().inverse();
    for (int i = a.degree(); i >= b.degree(); --i) {
        Rat f = rem[static_cast<size_t>(i)] * lead_inv;
        if (f.is_zero()) continue;
        quo[static_cast<size_t>(i - b.degree())] = f;
        for (int j = 0; j <= b.degree(); ++j)
            rem[static_cast<size_t>(i - b.degree() + j)] -= f * b.coeff(j);
    }
    return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

/// Exact quotient; throws if the division leaves a remainder.
inline UniPoly exact_div(const UniPoly& a, const UniPoly& b) {
    auto [q, r] = divrem(a, b);
    if (!r.is_zero()) throw ArithmeticError("UniPoly: division not exact");
    return q;
}

inline bool divides(const UniPoly& b, const UniPoly& a) {
    if (b.is_zero()) return a.is_zero();
    return divrem(a, b).second.is_zero();
}

/// Monic gcd; gcd(0,0) = 0.
inline UniPoly gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = divrem(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

inline std::ostream& operator<<(std::ostream& os, const UniPoly& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
        const Rat& c = p.coeff(i);
        if (c.is_zero()) continue;
        if (!first) os << (c.sign() > 0 ? " + " : " - ");
        else if (c.sign() < 0) os << "-";
        first = false;
        Rat a = c.abs();
        if (i == 0 || !a.is_one()) os << a;
        if (i > 0) {
            if (!a.is_one()) os << "*";
            os << "x";
            if (i > 1) os << "^" << i;
        }
    }
    return os;
}

}  // namespace secantlab

#endif
