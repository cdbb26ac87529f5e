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

#ifndef SECANTLAB_MULTIFORM_HPP
#define SECANTLAB_MULTIFORM_HPP

#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "secantlab/rational.hpp"

namespace secantlab {

/// Sparse homogeneous form in a fixed number of variables. Every stored
/// exponent vector sums to the common degree and no zero coefficients are
/// kept. The zero form carries explicit variable count and degree tags.
class MultiForm {
public:
    using Exponents = std::vector<int>;

    MultiForm(int num_vars, int degree) : nvars_(num_vars), deg_(degree) {
        if (num_vars < 1 || degree < 0) throw std::invalid_argument("MultiForm: bad shape");
    }

    int num_vars() const { return nvars_; }
    int degree() const { return deg_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponents, Rat>& terms() const { return terms_; }

    void add_term(const Exponents& exps, const Rat& coeff) {
        if (static_cast<int>(exps.size()) != nvars_)
            throw std::invalid_argument("MultiForm: exponent vector has wrong length");
        int total = std::accumulate(exps.begin(), exps.end(), 0);
        for (int e : exps)
            if (e < 0) throw std::invalid_argument("MultiForm: negative exponent");
        if (total != deg_) throw std::invalid_argument("MultiForm: term is not homogeneous of the right degree");
        if (coeff.is_zero()) return;
        auto it = terms_.find(exps);
        if (it == terms_.end()) {
            terms_.emplace(exps, coeff);
        } else {
            it->second += coeff;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    static MultiForm monomial(int num_vars, const Exponents& exps, const Rat& coeff) {
        MultiForm f(num_vars, std::accumulate(exps.begin(), exps.end(), 0));
        f.add_term(exps, coeff);
        return f;
    }

    MultiForm partial_derivative(int var) const {
        if (var < 0 || var >= nvars_) throw std::invalid_argument("MultiForm: variable index out of range");
        MultiForm out(nvars_, deg_ > 0 ? deg_ - 1 : 0);
        for (const auto& [exps, coeff] : terms_) {
            int e = exps[static_cast<size_t>(var)];
            if (e == 0) continue;
            Exponents d = exps;
            d[static_cast<size_t>(var)] -= 1;
            out.add_term(d, coeff * Rat(e));
        }
        return out;
    }

    Rat eval(const std::vector<Rat>& point) const {
        if (static_cast<int>(point.size()) != nvars_) throw std::invalid_argument("MultiForm: point has wrong length");
        Rat acc(0);
        for (const auto& [exps, coeff] : terms_) {
            Rat term = coeff;
            for (int v = 0; v < nvars_; ++v)
                for (int i = 0; i < exps[static_cast<size_t>(v)]; ++i) term *= point[static_cast<size_t>(v)];
            acc += term;
        }
        return acc;
    }

    friend MultiForm operator+(const MultiForm& a, const MultiForm& b) {
        if (a.nvars_ != b.nvars_ || a.deg_ != b.deg_) throw std::invalid_argument("MultiForm: shape mismatch in sum");
        MultiForm out = a;
        for (const auto& [exps, coeff] : b.terms_) out.add_term(exps, coeff);
        return out;
    }
    friend MultiForm operator*(const MultiForm& a, const Rat& s) {
        MultiForm out(a.nvars_, a.deg_);
        if (s.is_zero()) return out;
        for (const auto& [exps, coeff] : a.terms_) out.terms_.emplace(exps, coeff * s);
        return out;
    }
    friend MultiForm operator*(const MultiForm& a, const MultiForm& b) {
        if (a.nvars_ != b.nvars_) throw std::invalid_argument("MultiForm: variable count mismatch in product");
        MultiForm out(a.nvars_, a.deg_ + b.deg_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e = ea;
                for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
                out.add_term(e, ca * cb);
            }
        return out;
    }

    friend bool operator==(const MultiForm& a, const MultiForm& b) {
        return a.nvars_ == b.nvars_ && a.deg_ == b.deg_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MultiForm& a, const MultiForm& b) { return !(a == b); }

private:
    int nvars_;
    int deg_;
    std::map<Exponents, Rat> terms_;
};

}  // namespace secantlab

#endif
