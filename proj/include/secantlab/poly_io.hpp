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

#ifndef SECANTLAB_POLY_IO_HPP
#define SECANTLAB_POLY_IO_HPP

#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "secantlab/multiform.hpp"

namespace secantlab {

/// Parse failure with the exact input position, 0-based.
struct PolyParseError : std::runtime_error {
    size_t position;
    PolyParseError(size_t pos, const std::string& why)
        : std::runtime_error("parse error at position " + std::to_string(pos) + ": " + why), position(pos) {}
};

namespace detail {

/// Possibly inhomogeneous sparse polynomial used only while parsing.
struct SparsePoly {
    int nvars = 0;
    std::map<std::vector<int>, Rat> terms;

    static SparsePoly constant(int nvars, const Rat& c) {
        SparsePoly p{nvars, {}};
        if (!c.is_zero()) p.terms.emplace(std::vector<int>(static_cast<size_t>(nvars), 0), c);
        return p;
    }
    static SparsePoly variable(int nvars, int index) {
        SparsePoly p{nvars, {}};
        std::vector<int> e(static_cast<size_t>(nvars), 0);
        e[static_cast<size_t>(index)] = 1;
        p.terms.emplace(std::move(e), Rat(1));
        return p;
    }
    void add(const std::vector<int>& e, const Rat& c) {
        auto it = terms.find(e);
        if (it == terms.end()) {
            if (!c.is_zero()) terms.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }
    SparsePoly operator+(const SparsePoly& o) const {
        SparsePoly p = *this;
        for (const auto& [e, c] : o.terms) p.add(e, c);
        return p;
    }
    SparsePoly operator-(const SparsePoly& o) const {
        SparsePoly p = *this;
        for (const auto& [e, c] : o.terms) p.add(e, -c);
        return p;
    }
    SparsePoly operator*(const SparsePoly& o) const {
        SparsePoly p{nvars, {}};
        for (const auto& [ea, ca] : terms)
            for (const auto& [eb, cb] : o.terms) {
                std::vector<int> e = ea;
                for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
                p.add(e, ca * cb);
            }
        return p;
    }
    SparsePoly pow(int n) const {
        SparsePoly r = constant(nvars, Rat(1));
        for (int i = 0; i < n; ++i) r = r * (*this);
        return r;
    }
};

class PolyParser {
public:
    PolyParser(const std::string& text, int nvars) : s_(text), nvars_(nvars) {}

    SparsePoly parse() {
        SparsePoly p = expr_();
        skip_ws_();
        if (pos_ != s_.size()) fail_("unexpected trailing input");
        return p;
    }

private:
    SparsePoly expr_() {
        skip_ws_();
        bool negate = false;
        if (peek_() == '+' || peek_() == '-') negate = get_() == '-';
        SparsePoly acc = term_();
        if (negate) acc = SparsePoly::constant(nvars_, Rat(0)) - acc;
        for (;;) {
            skip_ws_();
            char c = peek_();
            if (c == '+' || c == '-') {
                get_();
                SparsePoly t = term_();
                acc = c == '+' ? acc + t : acc - t;
            } else {
                return acc;
            }
        }
    }

    SparsePoly term_() {
        SparsePoly acc = factor_();
        for (;;) {
            skip_ws_();
            if (peek_() == '*') {
                get_();
                acc = acc * factor_();
            } else {
                return acc;
            }
        }
    }

    SparsePoly factor_() {
        SparsePoly base = base_();
        skip_ws_();
        if (peek_() == '^') {
            get_();
            skip_ws_();
            size_t at = pos_;
            long e = natural_();
            if (e > 64) throw PolyParseError(at, "exponent too large");
            return base.pow(static_cast<int>(e));
        }
        return base;
    }

    SparsePoly base_() {
        skip_ws_();
        char c = peek_();
        if (c == '(') {
            get_();
            SparsePoly inner = expr_();
            skip_ws_();
            if (peek_() != ')') fail_("expected ')'");
            get_();
            return inner;
        }
        if (c == 'x') {
            size_t at = pos_;
            get_();
            if (!std::isdigit(static_cast<unsigned char>(peek_()))) fail_("expected variable index after 'x'");
            long idx = natural_();
            if (idx >= nvars_) throw PolyParseError(at, "variable x" + std::to_string(idx) + " is out of range");
            return SparsePoly::variable(nvars_, static_cast<int>(idx));
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return SparsePoly::constant(nvars_, rational_());
        }
        fail_(c == '\0' ? "unexpected end of input" : std::string("unexpected character '") + c + "'");
        return SparsePoly{};  // unreachable
    }

    Rat rational_() {
        std::string num = digits_();
        skip_ws_();
        if (peek_() == '/') {
            get_();
            skip_ws_();
            size_t at = pos_;
            std::string den = digits_();
            Rat d = Rat::parse(den);
            if (d.is_zero()) throw PolyParseError(at, "zero denominator");
            return Rat::parse(num) / d;
        }
        return Rat::parse(num);
    }

    long natural_() {
        std::string d = digits_();
        if (d.size() > 9) fail_("number too large");
        return std::stol(d);
    }

    std::string digits_() {
        skip_ws_();
        if (!std::isdigit(static_cast<unsigned char>(peek_()))) fail_("expected a number");
        std::string out;
        while (std::isdigit(static_cast<unsigned char>(peek_()))) out.push_back(get_());
        return out;
    }

    void skip_ws_() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek_() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    char get_() { return s_[pos_++]; }
    [[noreturn]] void fail_(const std::string& why) const { throw PolyParseError(pos_, why); }

    const std::string& s_;
    int nvars_;
    size_t pos_ = 0;
};

}  // namespace detail

/// Parses a homogeneous polynomial in x0..x{nvars-1} with +, -, *, ^,
/// parentheses and rational literals p/q. Throws PolyParseError with the
/// input position on malformed input, and on inhomogeneous or zero results.
inline MultiForm parse_form(const std::string& text, int nvars) {
    detail::SparsePoly p = detail::PolyParser(text, nvars).parse();
    if (p.terms.empty()) throw PolyParseError(0, "polynomial is zero");
    int degree = -1;
    for (const auto& [e, c] : p.terms) {
        int total = 0;
        for (int x : e) total += x;
        if (degree < 0) degree = total;
        if (total != degree) throw PolyParseError(0, "polynomial is not homogeneous");
    }
    MultiForm f(nvars, degree);
    for (const auto& [e, c] : p.terms) f.add_term(e, c);
    return f;
}

/// Canonical printer; parse_form round-trips its output. Terms are ordered
/// by descending exponent vector, so output is deterministic.
inline std::string form_to_string(const MultiForm& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        const auto& [exps, coeff] = *it;
        if (!first)
            os << (coeff.sign() > 0 ? " + " : " - ");
        else if (coeff.sign() < 0)
            os << "-";
        first = false;
        Rat a = coeff.abs();
        bool have_var = false;
        for (int x : exps) have_var = have_var || x > 0;
        bool printed = false;
        if (!a.is_one() || !have_var) {
            os << a.str();
            printed = true;
        }
        for (size_t v = 0; v < exps.size(); ++v) {
            if (exps[v] == 0) continue;
            if (printed) os << "*";
            os << "x" << v;
            if (exps[v] > 1) os << "^" << exps[v];
            printed = true;
        }
    }
    return os.str();
}

}  // namespace secantlab

#endif
