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

#include "mtzeta/mt_eval.hpp"

namespace mtzeta {

namespace detail {

namespace {

Rational b2k_over_2k(int k) { return bernoulli_number(2 * k) / Rational(2 * k); }

Rational b2k_over_fact2k(int k) {
    Rational b = bernoulli_number(2 * k);
    mpz_class fact(1);
    for (int m = 2; m <= 2 * k; ++m) fact *= m;
    return b / Rational(fact);
}

// sum_{m>M} m^{-q} H^{(i)}_{m-1} for i >= 2:
//   H^{(i)}_{m-1} = zeta(i) - t_i(m),
//   t_i(m) = sum_{n>=m} n^{-i}
//          = m^{1-i}/(i-1) + m^{-i}/2 + sum_k B_{2k}/(2k)! (i)_{2k-1} m^{1-i-2k} + R_K(m)
ValueWithError euler_sum_tail_ge2(const BigComplex &q, int i, long M, long bits,
                                  const BigReal &tol) {
    const BigReal sig = q.re();
    const BigReal Mb(M, bits);
    const BigReal sub_tol = tol * BigReal::pow2(-6, bits);
    ValueWithError zq = zeta_tail_from(q, M, bits, sub_tol);
    BigComplex total = zeta_int(i, bits) * zq.estimate;
    BigReal err = zeta_int(i, bits) * zq.abs_error;

    const BigComplex ic(i, bits);
    ValueWithError t1 = zeta_tail_from(q + BigComplex(i - 1, bits), M, bits, sub_tol);
    ValueWithError t2 = zeta_tail_from(q + BigComplex(i, bits), M, bits, sub_tol);
    total -= t1.estimate / BigReal(i - 1, bits);
    total -= t2.estimate * BigReal(0.5, bits);
    err += t1.abs_error / BigReal(i - 1, bits) + t2.abs_error * BigReal(0.5, bits);

    BigComplex poch = ic; // (i)_{2k-1}
    BigReal poch_abs = ic.abs();
    BigReal best_rem(1e300, bits);
    for (int k = 1; k <= 256; ++k) {
        ValueWithError tz =
            zeta_tail_from(q + BigComplex(i + 2 * k - 1, bits), M, bits, sub_tol);
        const BigComplex term = BigReal(b2k_over_fact2k(k), bits) * poch * tz.estimate;
        total -= term;
        err += BigReal(b2k_over_fact2k(k).abs(), bits) * poch_abs * tz.abs_error;
        // |R_K(m)| <= 2 |B_{2K}|/(2K)! (i)_{2K} m^{1-i-2K} / (i+2K-1); summed over
        // m > M against m^{-sig}: bounded by the integral comparison
        const BigReal poch_abs_2k = poch_abs * BigReal(i + 2 * k - 1, bits);
        const BigReal p = sig + BigReal(i + 2 * k - 1, bits); // decay exponent of the summand
        const BigReal ztail_bound = Mb.pow(BigReal(1L, bits) - p) / (p - 1L);
        BigReal rem = BigReal(2L, bits) * BigReal(b2k_over_fact2k(k).abs(), bits) *
                      poch_abs_2k / BigReal(i + 2 * k - 1, bits) * ztail_bound;
        if (rem < best_rem) {
            best_rem = rem;
            if (rem <= tol * BigReal(0.25, bits)) break;
        } else {
            break;
        }
        poch *= BigComplex(i + 2 * k - 1, bits);
        poch *= BigComplex(i + 2 * k, bits);
        poch_abs = poch.abs();
    }
    err += best_rem;
    return ValueWithError(total, err, true);
}

// sum_{m>M} m^{-q} H_{m-1} via
//   H_{m-1} = ln m + gamma - 1/(2m) - sum_k B_{2k}/(2k) m^{-2k} + theta(m),
//   |theta| <= |B_{2K+2}|/(2K+2) m^{-2K-2}
ValueWithError euler_sum_tail_1(const BigComplex &q, long M, long bits, const BigReal &tol) {
    const BigReal sig = q.re();
    const BigReal Mb(M, bits);
    const BigReal sub_tol = tol * BigReal::pow2(-6, bits);
    ValueWithError zl = em_log_tail_from(q, M, bits, sub_tol);
    ValueWithError z0 = zeta_tail_from(q, M, bits, sub_tol);
    ValueWithError z1 = zeta_tail_from(q + BigComplex(1, bits), M, bits, sub_tol);
    BigComplex total = zl.estimate + BigReal::euler_gamma(bits) * z0.estimate -
                       z1.estimate * BigReal(0.5, bits);
    BigReal err = zl.abs_error + BigReal::euler_gamma(bits) * z0.abs_error +
                  z1.abs_error * BigReal(0.5, bits);
    BigReal best_rem(1e300, bits);
    for (int k = 1; k <= 256; ++k) {
        ValueWithError tz = zeta_tail_from(q + BigComplex(2 * k, bits), M, bits, sub_tol);
        total -= BigReal(b2k_over_2k(k), bits) * tz.estimate;
        err += BigReal(b2k_over_2k(k).abs(), bits) * tz.abs_error;
        const BigReal p = sig + BigReal(2 * k + 2, bits);
        const BigReal ztail_bound = Mb.pow(BigReal(1L, bits) - p) / (p - 1L);
        BigReal rem = BigReal((bernoulli_number(2 * k + 2) / Rational(2 * k + 2)).abs(), bits) *
                      ztail_bound;
        if (rem < best_rem) {
            best_rem = rem;
            if (rem <= tol * BigReal(0.25, bits)) break;
        } else {
            break;
        }
    }
    err += best_rem;
    return ValueWithError(total, err, true);
}

} // namespace

ValueWithError zeta_tail_from(const BigComplex &s, long K, long bits, const BigReal &tol) {
    if (!(s.re() > 1))
        throw convergence_error("zeta_tail_from: Re(s) must exceed 1");
    long base = std::max<long>(K + 1, std::max<long>(12, (bits * 11) / 64));
    ValueWithError out;
    BigReal prev_err(1e300, bits);
    for (int attempt = 0;; ++attempt) {
        BigComplex partial(0, bits);
        for (long n = base - 1; n > K; --n)
            partial += pow_complex(n, -s, bits);
        ValueWithError tail = em_power_tail(s, BigReal(base, bits), bits, tol);
        BigReal err = tail.abs_error + partial.abs() * BigReal::pow2(-bits + 14, bits) +
                      BigReal::pow2(-3 * bits, bits);
        out = ValueWithError(partial + tail.estimate, err, true);
        if (tail.abs_error <= tol || attempt >= 6) break;
        if (tail.abs_error * 4L > prev_err) break; // no longer improving
        prev_err = tail.abs_error;
        base *= 2;
    }
    return out;
}

ValueWithError em_log_tail_from(const BigComplex &s, long K, long bits, const BigReal &tol) {
    if (!(s.re() > 1))
        throw convergence_error("em_log_tail_from: Re(s) must exceed 1");
    long base = std::max<long>(K + 1, std::max<long>(12, (bits * 11) / 64));
    ValueWithError out;
    BigReal prev_err(1e300, bits);
    for (int attempt = 0;; ++attempt) {
        BigComplex partial(0, bits);
        for (long n = base - 1; n > K; --n)
            partial += pow_complex(n, -s, bits) * BigReal(n, bits).log();
        ValueWithError tail = em_power_log_tail(s, BigReal(base, bits), bits, tol);
        BigReal err = tail.abs_error + partial.abs() * BigReal::pow2(-bits + 14, bits) +
                      BigReal::pow2(-3 * bits, bits);
        out = ValueWithError(partial + tail.estimate, err, true);
        if (tail.abs_error <= tol || attempt >= 6) break;
        if (tail.abs_error * 4L > prev_err) break;
        prev_err = tail.abs_error;
        base *= 2;
    }
    return out;
}

ValueWithError euler_sum_tail(const BigComplex &q, int i, long M, long bits,
                              const BigReal &tol) {
    if (i < 1) throw domain_error("euler_sum_tail: inner exponent must be >= 1");
    if (!(q.re() > 1))
        throw convergence_error("euler_sum_tail: Re(q) must exceed 1");
    if (i == 1) return euler_sum_tail_1(q, M, bits, tol);
    return euler_sum_tail_ge2(q, i, M, bits, tol);
}

ValueWithError euler_sum(const BigComplex &q, int i, long bits, const BigReal &tol) {
    if (i < 1) throw domain_error("euler_sum: inner exponent must be >= 1");
    if (!(q.re() > 1))
        throw convergence_error("euler_sum: divergent (needs Re(q) > 1)");
    long M = std::max<long>(48, bits / 3);
    ValueWithError out;
    BigReal prev_err(1e300, bits);
    for (int attempt = 0;; ++attempt) {
        // partial sum over 2..M with running H^{(i)}_{m-1}
        BigComplex partial(0, bits);
        BigReal H(0L, bits);
        for (long m = 2; m <= M; ++m) {
            if (i == 1)
                H += BigReal(1L, bits) / BigReal(m - 1, bits);
            else
                H += BigReal(1L, bits) / BigReal(m - 1, bits).pow_si(i);
            partial += pow_complex(m, -q, bits) * H;
        }
        ValueWithError tail = euler_sum_tail(q, i, M, bits, tol);
        BigReal err = tail.abs_error +
                      (partial.abs() + BigReal(1L, bits)) * BigReal::pow2(-bits + 16, bits);
        out = ValueWithError(partial + tail.estimate, err, true);
        if (tail.abs_error <= tol || attempt >= 4) break;
        if (tail.abs_error * 4L > prev_err) break;
        prev_err = tail.abs_error;
        M *= 2;
    }
    return out;
}

ValueWithError tornheim2(int k1, int k2, const BigComplex &v, long bits, const BigReal &tol) {
    if (k1 < 1 || k2 < 1) throw domain_error("tornheim2: exponents must be >= 1");
    const int w = k1 + k2;
    if (!(v.re() > BigReal(1 - std::min(k1, k2), bits)))
        throw convergence_error("tornheim2: outside the absolute convergence region");
    // 1/(a^{k1} b^{k2}) with a+b = K:
    //   sum_i [C(w-i-1, k2-1) + C(w-i-1, k1-1)] K^{-(w-i)}  x  a^{-i} summed to H^{(i)}
    BigComplex total(0, bits);
    BigReal err(0L, bits);
    bool rigorous = true;
    for (int i = 1; i <= std::max(k1, k2); ++i) {
        mpz_class coef = Rational::binomial(w - i - 1, k2 - 1) * (i <= k1 ? 1 : 0) +
                         Rational::binomial(w - i - 1, k1 - 1) * (i <= k2 ? 1 : 0);
        if (coef == 0) continue;
        const BigReal c(coef, bits);
        ValueWithError es = euler_sum(v + BigComplex(w - i, bits), i, bits,
                                      tol / (c * BigReal(std::max(k1, k2), bits)));
        total += c * es.estimate;
        err += c * es.abs_error;
        rigorous = rigorous && es.rigorous;
    }
    return ValueWithError(total, err, rigorous);
}

} // namespace detail

ValueWithError euler_double_zeta(long a, long b, long prec) {
    if (a < 2)
        throw convergence_error("euler_double_zeta: leading exponent must be >= 2 "
                                "(sum over m > n of m^{-a} n^{-b})");
    if (b < 1) throw domain_error("euler_double_zeta: inner exponent must be >= 1");
    const long bits = prec + kGuardBits;
    const BigReal tol = BigReal::pow2(-bits + 8, bits);
    return detail::euler_sum(BigComplex(a, bits), static_cast<int>(b), bits, tol);
}

ValueWithError bbb_rhs(long a, long b, long prec) {
    const long M = a + b;
    if (M % 2 == 0) throw domain_error("bbb_rhs: weight a+b must be odd");
    if (b < 2 || a < 1 || M < 3) throw domain_error("bbb_rhs: requires a >= 1, b >= 2");
    const long bits = prec + kGuardBits;
    auto zeta_of = [&](long n) { return riemann_zeta(BigComplex(n, bits), bits - kGuardBits); };

    ValueWithError zM = zeta_of(M);
    const long sgn_b = (b % 2 == 0) ? 1 : -1;
    // (1/2) { ((-1)^b C(M,a) - 1) zeta(M) + (1 + (-1)^b) zeta(a) zeta(b) }
    BigReal cMa(Rational::binomial(M, a), bits);
    BigComplex total = BigComplex(BigReal(0.5, bits)) *
                       BigComplex(cMa * sgn_b - BigReal(1L, bits)) * zM.estimate;
    BigReal err = (cMa + 1L) * zM.abs_error;
    if (a >= 2 && sgn_b == 1) {
        ValueWithError za = zeta_of(a), zb = zeta_of(b);
        ValueWithError prod = za * zb;
        total += prod.estimate;
        err += prod.abs_error;
    }
    // a = 1: the term would carry zeta(1) and is removed
    for (long k = 1; 2 * k <= M - 3; ++k) {
        mpz_class c = Rational::binomial(2 * k, a - 1) + Rational::binomial(2 * k, b - 1);
        if (c == 0) continue;
        ValueWithError z1 = zeta_of(2 * k + 1), z2 = zeta_of(M - 2 * k - 1);
        ValueWithError prod = z1 * z2;
        const BigReal cb(c, bits);
        const long sgn = -sgn_b; // (-1)^{b+1}
        total += BigComplex(cb * sgn) * prod.estimate;
        err += cb * prod.abs_error;
    }
    return ValueWithError(total, err, true);
}

} // namespace mtzeta
