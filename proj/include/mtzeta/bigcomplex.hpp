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

#ifndef MTZETA_BIGCOMPLEX_HPP
#define MTZETA_BIGCOMPLEX_HPP

#include <string>

#include "mtzeta/bigreal.hpp"

namespace mtzeta {

/// Complex scalar with BigReal components held at a common precision.
class BigComplex {
public:
    explicit BigComplex(long prec = 64) : re_(prec), im_(prec) {}
    BigComplex(BigReal re, BigReal im);
    BigComplex(const BigReal &re) : re_(re), im_(BigReal(0L, re.prec())) {} // NOLINT
    BigComplex(long re, long prec) : re_(re, prec), im_(0L, prec) {}
    BigComplex(int re, long prec) : re_(static_cast<long>(re), prec), im_(0L, prec) {}

    const BigReal &re() const { return re_; }
    const BigReal &im() const { return im_; }
    long prec() const { return re_.prec(); }

    bool is_real() const { return im_.is_zero(); }
    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

    BigComplex conj() const { return BigComplex(re_, -im_); }
    BigReal abs() const { return hypot(re_, im_); }
    BigReal arg() const { return atan2(im_, re_); }

    BigComplex operator-() const { return BigComplex(-re_, -im_); }

    friend BigComplex operator+(const BigComplex &a, const BigComplex &b) {
        return BigComplex(a.re_ + b.re_, a.im_ + b.im_);
    }
    friend BigComplex operator-(const BigComplex &a, const BigComplex &b) {
        return BigComplex(a.re_ - b.re_, a.im_ - b.im_);
    }
    friend BigComplex operator*(const BigComplex &a, const BigComplex &b) {
        return BigComplex(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
    }
    friend BigComplex operator*(const BigComplex &a, const BigReal &b) {
        return BigComplex(a.re_ * b, a.im_ * b);
    }
    friend BigComplex operator*(const BigReal &a, const BigComplex &b) { return b * a; }
    friend BigComplex operator/(const BigComplex &a, const BigComplex &b);
    friend BigComplex operator/(const BigComplex &a, const BigReal &b) {
        return BigComplex(a.re_ / b, a.im_ / b);
    }

    BigComplex &operator+=(const BigComplex &o) { re_ += o.re_; im_ += o.im_; return *this; }
    BigComplex &operator-=(const BigComplex &o) { re_ -= o.re_; im_ -= o.im_; return *this; }
    BigComplex &operator*=(const BigComplex &o) { *this = *this * o; return *this; }

    friend bool operator==(const BigComplex &a, const BigComplex &b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    BigComplex exp() const;
    /// Principal branch; requires *this != 0.
    BigComplex log() const;
    /// z^w = exp(w log z), principal branch.
    BigComplex pow(const BigComplex &w) const;
    /// z^n by repeated squaring (exact exponent).
    BigComplex pow_si(long n) const;

    BigComplex round_to(long prec) const { return BigComplex(re_.round_to(prec), im_.round_to(prec)); }

    std::string str(size_t digits) const;

private:
    BigReal re_, im_;
};

/// b^e for real b > 0 and complex e: exp(e * ln b).
BigComplex pow_complex(const BigReal &base, const BigComplex &expo);

/// n^e for a machine-integer base n >= 1.
BigComplex pow_complex(long base, const BigComplex &expo, long prec);

} // namespace mtzeta

#endif
