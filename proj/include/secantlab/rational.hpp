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

#ifndef SECANTLAB_RATIONAL_HPP
#define SECANTLAB_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace secantlab {

struct ArithmeticError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Exact rational number backed by GMP. Invariant: always in canonical
/// form (lowest terms, positive denominator). No rounding anywhere.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(int n) : v_(n) {}
    Rat(long n) : v_(static_cast<signed long>(n)) {}
    Rat(long long n) { v_ = from_ll_(n); }
    Rat(long num, long den) : v_(static_cast<signed long>(num), static_cast<signed long>(den)) {
        if (den == 0) throw ArithmeticError("Rat: zero denominator");
        v_.canonicalize();
    }
    explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }
    explicit Rat(const mpz_class& num, const mpz_class& den = 1) : v_(num, den) {
        if (den == 0) throw ArithmeticError("Rat: zero denominator");
        v_.canonicalize();
    }

    /// Parses "p", "-p" or "p/q". Throws ArithmeticError on malformed input.
    static Rat parse(const std::string& text) {
        mpq_class q;
        if (q.set_str(text, 10) != 0) throw ArithmeticError("Rat: cannot parse '" + text + "'");
        if (q.get_den() == 0) throw ArithmeticError("Rat: zero denominator in '" + text + "'");
        q.canonicalize();
        return Rat(wrapped_tag{}, q);
    }

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rat abs() const { return Rat(wrapped_tag{}, ::abs(v_)); }
    Rat inverse() const {
        if (is_zero()) throw ArithmeticError("Rat: division by zero");
        return Rat(wrapped_tag{}, 1 / v_);
    }

    std::string str() const { return v_.get_str(); }

    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw ArithmeticError("Rat: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
    friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
    friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
    friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }
    friend Rat operator-(const Rat& a) { return Rat(wrapped_tag{}, -a.v_); }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.v_; }

private:
    struct wrapped_tag {};
    Rat(wrapped_tag, mpq_class q) : v_(std::move(q)) {}
    static mpq_class from_ll_(long long n) {
        mpz_class z;
        bool neg = n < 0;
        unsigned long long mag = neg ? 0ULL - static_cast<unsigned long long>(n)
                                     : static_cast<unsigned long long>(n);
        mpz_import(z.get_mpz_t(), 1, 1, sizeof(mag), 0, 0, &mag);
        if (neg) z = -z;
        return mpq_class(z);
    }

    mpq_class v_;
};

}  // namespace secantlab

#endif
