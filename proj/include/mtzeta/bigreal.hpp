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

#ifndef MTZETA_BIGREAL_HPP
#define MTZETA_BIGREAL_HPP

#include <mpfr.h>

#include <string>

#include "mtzeta/errors.hpp"
#include "mtzeta/rational.hpp"

namespace mtzeta {

/// Arbitrary-precision real scalar backed by MPFR.
///
/// Every value carries its own working precision in bits; binary
/// operations round to the larger of the operand precisions.  There is
/// no global precision state anywhere in the library -- kernels receive
/// the target precision as an explicit argument and construct their
/// scalars accordingly.
class BigReal {
public:
    static constexpr long min_prec = 24;

    explicit BigReal(long prec = 64) { mpfr_init2(x_, clamp(prec)); mpfr_set_zero(x_, 1); }
    BigReal(long value, long prec) { mpfr_init2(x_, clamp(prec)); mpfr_set_si(x_, value, MPFR_RNDN); }
    BigReal(int value, long prec) : BigReal(static_cast<long>(value), prec) {}
    BigReal(double value, long prec) { mpfr_init2(x_, clamp(prec)); mpfr_set_d(x_, value, MPFR_RNDN); }
    BigReal(const Rational &q, long prec) {
        mpfr_init2(x_, clamp(prec));
        mpfr_set_q(x_, q.mpq().get_mpq_t(), MPFR_RNDN);
    }
    BigReal(const mpz_class &n, long prec) {
        mpfr_init2(x_, clamp(prec));
        mpfr_set_z(x_, n.get_mpz_t(), MPFR_RNDN);
    }
    /// Parse a decimal string at the given precision.
    BigReal(const std::string &s, long prec) {
        mpfr_init2(x_, clamp(prec));
        if (mpfr_set_str(x_, s.c_str(), 10, MPFR_RNDN) != 0)
            { mpfr_clear(x_); throw domain_error("BigReal: cannot parse '" + s + "'"); }
    }

    BigReal(const BigReal &o) { mpfr_init2(x_, mpfr_get_prec(o.x_)); mpfr_set(x_, o.x_, MPFR_RNDN); }
    BigReal(BigReal &&o) noexcept { mpfr_init2(x_, min_prec); mpfr_swap(x_, o.x_); }
    BigReal &operator=(const BigReal &o) {
        if (this != &o) { mpfr_set_prec(x_, mpfr_get_prec(o.x_)); mpfr_set(x_, o.x_, MPFR_RNDN); }
        return *this;
    }
    BigReal &operator=(BigReal &&o) noexcept { mpfr_swap(x_, o.x_); return *this; }
    ~BigReal() { mpfr_clear(x_); }

    long prec() const { return mpfr_get_prec(x_); }
    BigReal round_to(long prec) const {
        BigReal r(prec);
        mpfr_set(r.x_, x_, MPFR_RNDN);
        return r;
    }

    mpfr_srcptr raw() const { return x_; }
    mpfr_ptr raw() { return x_; }

    int sign() const { return mpfr_sgn(x_); }
    bool is_zero() const { return mpfr_zero_p(x_) != 0; }
    bool is_finite() const { return mpfr_number_p(x_) != 0; }
    bool is_integer() const { return mpfr_integer_p(x_) != 0; }
    long to_long() const { return mpfr_get_si(x_, MPFR_RNDN); }
    double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }

    friend BigReal operator+(const BigReal &a, const BigReal &b) {
        BigReal r(opprec(a, b)); mpfr_add(r.x_, a.x_, b.x_, MPFR_RNDN); return r;
    }
    friend BigReal operator-(const BigReal &a, const BigReal &b) {
        BigReal r(opprec(a, b)); mpfr_sub(r.x_, a.x_, b.x_, MPFR_RNDN); return r;
    }
    friend BigReal operator*(const BigReal &a, const BigReal &b) {
        BigReal r(opprec(a, b)); mpfr_mul(r.x_, a.x_, b.x_, MPFR_RNDN); return r;
    }
    friend BigReal operator/(const BigReal &a, const BigReal &b) {
        BigReal r(opprec(a, b)); mpfr_div(r.x_, a.x_, b.x_, MPFR_RNDN); return r;
    }
    BigReal operator-() const { BigReal r(prec()); mpfr_neg(r.x_, x_, MPFR_RNDN); return r; }

    BigReal &operator+=(const BigReal &o) { mpfr_add(x_, x_, o.x_, MPFR_RNDN); return *this; }
    BigReal &operator-=(const BigReal &o) { mpfr_sub(x_, x_, o.x_, MPFR_RNDN); return *this; }
    BigReal &operator*=(const BigReal &o) { mpfr_mul(x_, x_, o.x_, MPFR_RNDN); return *this; }
    BigReal &operator/=(const BigReal &o) { mpfr_div(x_, x_, o.x_, MPFR_RNDN); return *this; }
    BigReal &operator+=(long o) { mpfr_add_si(x_, x_, o, MPFR_RNDN); return *this; }
    BigReal &operator-=(long o) { mpfr_sub_si(x_, x_, o, MPFR_RNDN); return *this; }
    BigReal &operator*=(long o) { mpfr_mul_si(x_, x_, o, MPFR_RNDN); return *this; }
    BigReal &operator/=(long o) { mpfr_div_si(x_, x_, o, MPFR_RNDN); return *this; }

    friend BigReal operator+(const BigReal &a, long b) { BigReal r(a.prec()); mpfr_add_si(r.x_, a.x_, b, MPFR_RNDN); return r; }
    friend BigReal operator-(const BigReal &a, long b) { BigReal r(a.prec()); mpfr_sub_si(r.x_, a.x_, b, MPFR_RNDN); return r; }
    friend BigReal operator*(const BigReal &a, long b) { BigReal r(a.prec()); mpfr_mul_si(r.x_, a.x_, b, MPFR_RNDN); return r; }
    friend BigReal operator/(const BigReal &a, long b) { BigReal r(a.prec()); mpfr_div_si(r.x_, a.x_, b, MPFR_RNDN); return r; }
    friend BigReal operator-(long a, const BigReal &b) { BigReal r(b.prec()); mpfr_si_sub(r.x_, a, b.x_, MPFR_RNDN); return r; }
    friend BigReal operator/(long a, const BigReal &b) { BigReal r(b.prec()); mpfr_si_div(r.x_, a, b.x_, MPFR_RNDN); return r; }

    friend bool operator<(const BigReal &a, const BigReal &b) { return mpfr_less_p(a.x_, b.x_) != 0; }
    friend bool operator<=(const BigReal &a, const BigReal &b) { return mpfr_lessequal_p(a.x_, b.x_) != 0; }
    friend bool operator>(const BigReal &a, const BigReal &b) { return mpfr_greater_p(a.x_, b.x_) != 0; }
    friend bool operator>=(const BigReal &a, const BigReal &b) { return mpfr_greaterequal_p(a.x_, b.x_) != 0; }
    friend bool operator==(const BigReal &a, const BigReal &b) { return mpfr_equal_p(a.x_, b.x_) != 0; }
    friend bool operator!=(const BigReal &a, const BigReal &b) { return !(a == b); }
    friend bool operator<(const BigReal &a, long b) { return mpfr_cmp_si(a.x_, b) < 0; }
    friend bool operator<=(const BigReal &a, long b) { return mpfr_cmp_si(a.x_, b) <= 0; }
    friend bool operator>(const BigReal &a, long b) { return mpfr_cmp_si(a.x_, b) > 0; }
    friend bool operator>=(const BigReal &a, long b) { return mpfr_cmp_si(a.x_, b) >= 0; }
    friend bool operator==(const BigReal &a, long b) { return mpfr_cmp_si(a.x_, b) == 0; }

    BigReal abs() const { BigReal r(prec()); mpfr_abs(r.x_, x_, MPFR_RNDN); return r; }
    BigReal sqrt() const { BigReal r(prec()); mpfr_sqrt(r.x_, x_, MPFR_RNDN); return r; }
    BigReal exp() const { BigReal r(prec()); mpfr_exp(r.x_, x_, MPFR_RNDN); return r; }
    BigReal expm1() const { BigReal r(prec()); mpfr_expm1(r.x_, x_, MPFR_RNDN); return r; }
    BigReal log() const { BigReal r(prec()); mpfr_log(r.x_, x_, MPFR_RNDN); return r; }
    BigReal log1p() const { BigReal r(prec()); mpfr_log1p(r.x_, x_, MPFR_RNDN); return r; }
    BigReal sin() const { BigReal r(prec()); mpfr_sin(r.x_, x_, MPFR_RNDN); return r; }
    BigReal cos() const { BigReal r(prec()); mpfr_cos(r.x_, x_, MPFR_RNDN); return r; }
    BigReal sinh() const { BigReal r(prec()); mpfr_sinh(r.x_, x_, MPFR_RNDN); return r; }
    BigReal cosh() const { BigReal r(prec()); mpfr_cosh(r.x_, x_, MPFR_RNDN); return r; }
    BigReal tanh() const { BigReal r(prec()); mpfr_tanh(r.x_, x_, MPFR_RNDN); return r; }
    BigReal floor() const { BigReal r(prec()); mpfr_floor(r.x_, x_); return r; }

    /// x * 2^k (exact).
    BigReal mul_2si(long k) const { BigReal r(prec()); mpfr_mul_2si(r.x_, x_, k, MPFR_RNDN); return r; }

    /// x^n for integer n (x != 0 when n < 0).
    BigReal pow_si(long n) const { BigReal r(prec()); mpfr_pow_si(r.x_, x_, n, MPFR_RNDN); return r; }
    /// x^y; requires x > 0.
    BigReal pow(const BigReal &y) const {
        if (sign() <= 0) throw domain_error("BigReal::pow: base must be positive");
        BigReal r(opprec(*this, y)); mpfr_pow(r.x_, x_, y.x_, MPFR_RNDN); return r;
    }

    friend BigReal atan2(const BigReal &y, const BigReal &x) {
        BigReal r(opprec(y, x)); mpfr_atan2(r.x_, y.x_, x.x_, MPFR_RNDN); return r;
    }
    friend BigReal hypot(const BigReal &a, const BigReal &b) {
        BigReal r(opprec(a, b)); mpfr_hypot(r.x_, a.x_, b.x_, MPFR_RNDN); return r;
    }
    friend BigReal max(const BigReal &a, const BigReal &b) { return a >= b ? a : b; }
    friend BigReal min(const BigReal &a, const BigReal &b) { return a <= b ? a : b; }

    static BigReal pi(long prec) { BigReal r(prec); mpfr_const_pi(r.x_, MPFR_RNDN); return r; }
    static BigReal euler_gamma(long prec) { BigReal r(prec); mpfr_const_euler(r.x_, MPFR_RNDN); return r; }
    static BigReal ln2(long prec) { BigReal r(prec); mpfr_const_log2(r.x_, MPFR_RNDN); return r; }
    /// 2^e as a BigReal (handy for tolerance targets).
    static BigReal pow2(long e, long prec) { return BigReal(1L, prec).mul_2si(e); }

    /// Fixed-point-free scientific rendering with the given number of
    /// significant decimal digits, e.g. "1.6449340668e0".
    std::string str(size_t digits) const;

private:
    static long clamp(long p) { return p < min_prec ? min_prec : p; }
    static long opprec(const BigReal &a, const BigReal &b) {
        return a.prec() > b.prec() ? a.prec() : b.prec();
    }
    mpfr_t x_;
};

} // namespace mtzeta

#endif
