/*
  mtzeta, a library for Mordell-Tornheim multiple zeta values and
  Arakawa-Kaneko type zeta functions.

  This library is licensed under the Apache License, Version 2.0 (the "License");
  you may not use this library except in compliance with the License.
  You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

  Unless required by applicable law or agreed to in writing, software
  distributed under the License is distributed on an "AS IS" BASIS,
  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
  See the License for the specific language governing permissions and
  limitations under the License.
*/

#ifndef MTZETA_RATIONAL_HPP
#define MTZETA_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>

#include "mtzeta/errors.hpp"

namespace mtzeta {

/// Exact arbitrary-size rational, always kept in canonical reduced form
/// (gcd(|num|, den) = 1, den >= 1).  Thin value wrapper around GMP's mpq.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}                       // NOLINT(google-explicit-constructor)
    Rational(long num, long den) : q_(num, den) {
        if (den == 0) throw domain_error("Rational: zero denominator");
        q_.canonicalize();
    }
    explicit Rational(const mpz_class &n) : q_(n) {}
    Rational(const mpz_class &num, const mpz_class &den) : q_(num, den) {
        if (den == 0) throw domain_error("Rational: zero denominator");
        q_.canonicalize();
    }
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    const mpq_class &mpq() const { return q_; }
    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    int sign() const { return sgn(q_); }
    bool is_integer() const { return q_.get_den() == 1; }

    Rational operator-() const { return Rational(mpq_class(-q_), raw_tag{}); }

    Rational &operator+=(const Rational &o) { q_ += o.q_; return *this; }
    Rational &operator-=(const Rational &o) { q_ -= o.q_; return *this; }
    Rational &operator*=(const Rational &o) { q_ *= o.q_; return *this; }
    Rational &operator/=(const Rational &o) {
        if (o.is_zero()) throw domain_error("Rational: division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational &b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational &b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational &b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational &b) { a /= b; return a; }

    friend bool operator==(const Rational &a, const Rational &b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational &a, const Rational &b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational &a, const Rational &b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational &a, const Rational &b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational &a, const Rational &b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational &a, const Rational &b) { return a.q_ >= b.q_; }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

    /// "num/den", or just "num" for integers.
    std::string str() const {
        if (is_integer()) return q_.get_num().get_str();
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

    double to_double() const { return q_.get_d(); }

    /// n! as an exact integer.
    static mpz_class factorial(unsigned long n) {
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), n);
        return f;
    }

    /// Binomial coefficient C(n, k), 0 for k < 0 or k > n.
    static mpz_class binomial(long n, long k) {
        if (k < 0 || k > n) return mpz_class(0);
        mpz_class b;
        mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
        return b;
    }

    /// m^k as an exact integer, k >= 0.
    static mpz_class ipow(unsigned long m, unsigned long k) {
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), m, k);
        return p;
    }

private:
    struct raw_tag {};
    // Construction from an arithmetic result that GMP already canonicalized.
    Rational(mpq_class q, raw_tag) : q_(std::move(q)) {}

    mpq_class q_;
};

} // namespace mtzeta

#endif
