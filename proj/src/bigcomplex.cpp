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

#include "mtzeta/bigcomplex.hpp"

namespace mtzeta {

BigComplex::BigComplex(BigReal re, BigReal im) : re_(std::move(re)), im_(std::move(im)) {
    // keep both components at a common precision
    if (re_.prec() < im_.prec()) re_ = re_.round_to(im_.prec());
    else if (im_.prec() < re_.prec()) im_ = im_.round_to(re_.prec());
}

BigComplex operator/(const BigComplex &a, const BigComplex &b) {
    if (b.is_zero()) throw domain_error("BigComplex: division by zero");
    if (b.is_real()) return BigComplex(a.re_ / b.re_, a.im_ / b.re_);
    const BigReal den = b.re_ * b.re_ + b.im_ * b.im_;
    return BigComplex((a.re_ * b.re_ + a.im_ * b.im_) / den,
                      (a.im_ * b.re_ - a.re_ * b.im_) / den);
}

BigComplex BigComplex::exp() const {
    const BigReal e = re_.exp();
    if (im_.is_zero()) return BigComplex(e, BigReal(0L, prec()));
    return BigComplex(e * im_.cos(), e * im_.sin());
}

BigComplex BigComplex::log() const {
    if (is_zero()) throw domain_error("BigComplex::log of zero");
    if (im_.is_zero() && re_.sign() > 0) return BigComplex(re_.log(), BigReal(0L, prec()));
    return BigComplex(abs().log(), arg());
}

BigComplex BigComplex::pow(const BigComplex &w) const {
    return (w * log()).exp();
}

BigComplex BigComplex::pow_si(long n) const {
    if (n == 0) return BigComplex(1, prec());
    bool invert = n < 0;
    unsigned long e = invert ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
    BigComplex base = *this, acc(1, prec());
    while (e) {
        if (e & 1u) acc *= base;
        base *= base;
        e >>= 1u;
    }
    if (invert) return BigComplex(1, prec()) / acc;
    return acc;
}

std::string BigComplex::str(size_t digits) const {
    if (is_real()) return re_.str(digits);
    const std::string im_s = im_.str(digits);
    return re_.str(digits) + (im_s[0] == '-' ? " - " + im_s.substr(1) : " + " + im_s) + "i";
}

BigComplex pow_complex(const BigReal &base, const BigComplex &expo) {
    if (base.sign() <= 0) throw domain_error("pow_complex: base must be positive");
    if (expo.is_real()) {
        if (expo.re().is_zero()) return BigComplex(1, base.prec());
        return BigComplex(base.pow(expo.re()), BigReal(0L, base.prec()));
    }
    const BigReal lb = base.log();
    return BigComplex(expo.re() * lb, expo.im() * lb).exp();
}

BigComplex pow_complex(long base, const BigComplex &expo, long prec) {
    return pow_complex(BigReal(base, prec), expo.round_to(prec));
}

} // namespace mtzeta
