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

#include "mtzeta/kernels.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <vector>

#include "mtzeta/series.hpp"

namespace mtzeta {

namespace detail {

namespace {

// B_{2k}/(2k)! exact; the remainder bounds below use its absolute value.
Rational b2k_over_fact(int k) {
    Rational b = bernoulli_number(2 * k);
    mpz_class fact(1);
    for (int m = 2; m <= 2 * k; ++m) fact *= m;
    return b / Rational(fact);
}

// m^k as long when it fits, 0 otherwise (0 never a valid power here).
unsigned long pow_fits_ulong(unsigned long m, unsigned long k) {
    unsigned long r = 1;
    for (unsigned long i = 0; i < k; ++i) {
        if (m != 0 && r > (~0ul) / m) return 0;
        r *= m;
    }
    return r;
}

} // namespace

ValueWithError em_power_tail(const BigComplex &s, const BigReal &b, long bits,
                             const BigReal &tol) {
    const BigReal sigma = s.re();
    if (!(sigma > 1))
        throw domain_error("em_power_tail: Re(s) must exceed 1");
    // sum_{j>=0} (b+j)^{-s}
    //   = b^{1-s}/(s-1) + b^{-s}/2 + sum_k B_{2k}/(2k)! (s)_{2k-1} b^{1-s-2k} + R_K
    //   |R_K| <= 2 |B_{2K}|/(2K)! |(s)_{2K}| b^{1-sigma-2K} / (sigma+2K-1)
    const BigComplex b_pow_ms = pow_complex(b, -s);
    const BigComplex one(1, bits);
    BigComplex acc = (b_pow_ms * b) / (s - one);
    acc += b_pow_ms * BigReal(0.5, bits);

    const BigReal binv2 = BigReal(1L, bits) / (b * b);
    BigComplex poch = s;             // (s)_{2k-1}
    BigReal poch_abs = s.abs();      // |(s)_{2k-1}|
    BigComplex bp = b_pow_ms / b;    // b^{-s-2k+1}
    BigComplex em_sum(0, bits);
    BigReal best_bound(1e300, bits);
    BigComplex best_val = acc;
    for (int k = 1; k <= 512; ++k) {
        em_sum += BigReal(b2k_over_fact(k), bits) * poch * bp;
        const BigReal poch_abs_2k = poch_abs * (s + BigComplex(2 * k - 1, bits)).abs();
        const BigReal denom = sigma + BigReal(2 * k - 1, bits);
        const BigReal bound = BigReal(2L, bits) * BigReal(b2k_over_fact(k).abs(), bits) *
                              poch_abs_2k * bp.abs() / denom;
        if (bound < best_bound) {
            best_bound = bound;
            best_val = acc + em_sum;
            if (bound <= tol) break;
        } else if (bound > best_bound * 4L) {
            break; // asymptotic divergence: stop at the optimum reached so far
        }
        poch *= (s + BigComplex(2 * k - 1, bits));
        poch *= (s + BigComplex(2 * k, bits));
        poch_abs = poch.abs();
        bp = bp * binv2;
    }
    // rounding cushion, relative to the dominant magnitudes
    best_bound += (best_val.abs() + b_pow_ms.abs() * b / (sigma - 1L)) *
                      BigReal::pow2(-bits + 12, bits) +
                  BigReal::pow2(-3 * bits, bits);
    return ValueWithError(best_val, best_bound, true);
}

ValueWithError em_power_log_tail(const BigComplex &s, const BigReal &b, long bits,
                                 const BigReal &tol) {
    const BigReal sigma = s.re();
    if (!(sigma > 1))
        throw domain_error("em_power_log_tail: Re(s) must exceed 1");
    const BigReal lnb = b.log();
    const BigComplex one(1, bits);
    const BigComplex sm1 = s - one;
    const BigComplex b_pow_ms = pow_complex(b, -s);
    // integral term + f(0)/2 with f(x) = (b+x)^{-s} ln(b+x)
    BigComplex acc = (b_pow_ms * b) * (BigComplex(lnb) / sm1 + one / (sm1 * sm1));
    acc += b_pow_ms * (lnb * BigReal(0.5, bits));

    // f^{(j)}(x) = (b+x)^{-s-j} (p_j ln(b+x) + q_j),
    // p_{j+1} = -(s+j) p_j,  q_{j+1} = p_j - (s+j) q_j
    BigComplex p = -s, q = one; // order j = 1
    BigComplex bp = b_pow_ms / b;
    const BigReal binv2 = BigReal(1L, bits) / (b * b);
    BigComplex em_sum(0, bits);
    BigReal best_bound(1e300, bits);
    BigComplex best_val = acc;
    int j = 1;
    for (int k = 1; k <= 512; ++k, j += 2) {
        em_sum -= BigReal(b2k_over_fact(k), bits) * bp * (p * lnb + q);
        // advance to derivative order 2k for the remainder bound
        const BigComplex sj = s + BigComplex(j, bits);
        const BigComplex p2 = -(sj * p), q2 = p - sj * q;
        const BigReal bp2_abs = bp.abs() / b; // b^{-sigma-2k}
        const BigReal c = sigma + BigReal(2 * k - 1, bits);
        const BigReal bound =
            BigReal(2L, bits) * BigReal(b2k_over_fact(k).abs(), bits) *
            (p2.abs() * (lnb / c + BigReal(1L, bits) / (c * c)) + q2.abs() / c) * bp2_abs * b;
        if (bound < best_bound) {
            best_bound = bound;
            best_val = acc + em_sum;
            if (bound <= tol) break;
        } else if (bound > best_bound * 4L) {
            break;
        }
        const BigComplex sj2 = s + BigComplex(j + 1, bits);
        p = -(sj2 * p2);
        q = p2 - sj2 * q2;
        bp = bp * binv2;
    }
    best_bound += (best_val.abs() + b_pow_ms.abs() * b * (lnb + 1L) / (sigma - 1L)) *
                      BigReal::pow2(-bits + 12, bits) +
                  BigReal::pow2(-3 * bits, bits);
    return ValueWithError(best_val, best_bound, true);
}

BigReal zeta_int(int n, long bits) {
    if (n < 2) throw domain_error("zeta_int: argument must be >= 2");
    static std::mutex mu;
    static std::map<long, std::map<int, BigReal>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto &tab = cache[bits];
    auto it = tab.find(n);
    if (it != tab.end()) return it->second;

    const BigReal tol = BigReal::pow2(-bits + 4, bits);
    const BigComplex s(BigReal(static_cast<long>(n), bits));
    long N = std::max<long>(10, (bits * 11) / 64);
    BigReal v(0L, bits);
    for (int attempt = 0; attempt < 8; ++attempt) {
        BigReal partial(0L, bits);
        for (long m = N; m >= 1; --m)
            partial += BigReal(1L, bits) / BigReal(m, bits).pow_si(n);
        ValueWithError tail = em_power_tail(s, BigReal(N + 1, bits), bits, tol);
        v = partial + tail.estimate.re();
        if (tail.abs_error <= tol) break;
        N *= 2;
    }
    tab.emplace(n, v);
    return v;
}

Rational zeta_nonpos_int(int n) {
    if (n < 0) throw domain_error("zeta_nonpos_int: n must be >= 0");
    if (n == 0) return Rational(-1, 2);
    return -(bernoulli_number(n + 1) / Rational(n + 1));
}

Rational harmonic(int n) {
    Rational h(0);
    for (int i = 1; i <= n; ++i) h += Rational(1, i);
    return h;
}

std::pair<BigReal, BigReal> polylog_real(int k, const BigReal &x, const BigReal &omx, long bits) {
    if (k < 0) throw domain_error("polylog_real: weight must be >= 0");
    if (x.sign() < 0 || omx.sign() <= 0)
        throw domain_error("polylog_real: requires 0 <= x < 1");
    const BigReal ulp_cushion = BigReal::pow2(-bits + 12, bits);
    if (x.is_zero()) return {BigReal(0L, bits), BigReal(0L, bits)};
    if (k == 0) {
        BigReal v = x / omx;
        return {v, v.abs() * ulp_cushion};
    }
    if (k == 1) {
        BigReal v = -(omx.log());
        return {v, (v.abs() + BigReal(1L, bits)) * ulp_cushion};
    }
    const BigReal tol = BigReal::pow2(-bits + 4, bits);
    if (x <= BigReal(0.5, bits)) {
        // direct series; tail <= x^{m+1} / ((1-x) (m+1)^k)
        BigReal sum(0L, bits), xp(1L, bits), bound(0L, bits);
        const long cap = 4 * bits + 64;
        for (long m = 1; m <= cap; ++m) {
            xp *= x;
            const unsigned long mk = pow_fits_ulong(static_cast<unsigned long>(m),
                                                    static_cast<unsigned long>(k));
            if (mk)
                sum += xp / static_cast<long>(mk);
            else
                sum += xp / BigReal(Rational::ipow(static_cast<unsigned long>(m),
                                                   static_cast<unsigned long>(k)),
                                    bits);
            const unsigned long mk1 = pow_fits_ulong(static_cast<unsigned long>(m + 1),
                                                     static_cast<unsigned long>(k));
            bound = xp * x / omx;
            if (mk1)
                bound = bound / static_cast<long>(mk1);
            else
                bound = bound / BigReal(Rational::ipow(static_cast<unsigned long>(m + 1),
                                                       static_cast<unsigned long>(k)),
                                        bits);
            if (bound <= tol) break;
        }
        return {sum, bound + (sum.abs() + BigReal(1L, bits)) * ulp_cushion};
    }

    // Expansion in powers of mu = ln x (here |mu| <= ln 2 < 2 pi):
    //   Li_k(x) = sum_{j>=0, j != k-1} zeta(k-j) mu^j/j!
    //           + mu^{k-1}/(k-1)! (H_{k-1} - ln(-mu))
    const BigReal w = -((-omx).log1p()); // -ln x via 1-x, exact near x = 1
    const BigReal mu = -w;
    const BigReal two_pi = BigReal::pi(bits) * 2L;
    const BigReal ratio = w / two_pi;
    const BigReal zeta2 = zeta_int(2, bits);
    BigReal sum(0L, bits);
    BigReal mupow(1L, bits);    // mu^j / j!
    BigReal tail_fact(1L, bits); // (j-k)!
    BigReal tail_2pi = two_pi;   // (2 pi)^{j-k+1}
    BigReal bound(0L, bits);
    const int j_cap = static_cast<int>(bits) + 64;
    for (int j = 0; j <= j_cap; ++j) {
        if (j > 0) mupow *= mu / BigReal(static_cast<long>(j), bits);
        if (j == k - 1) {
            sum += mupow * (BigReal(harmonic(k - 1), bits) - w.log());
            continue;
        }
        const int a = k - j;
        if (a >= 2) {
            sum += mupow * zeta_int(a, bits);
            continue;
        }
        const Rational zr = zeta_nonpos_int(-a);
        if (!zr.is_zero()) sum += mupow * BigReal(zr, bits);
        if (j >= k + 1) {
            if (j > k + 1) {
                tail_fact *= static_cast<long>(j - k);
                tail_2pi *= two_pi;
            }
            // beta_j = 2 zeta(2) (j-k)! w^j / ((2 pi)^{j-k+1} j!)
            const BigReal beta = BigReal(2L, bits) * zeta2 * mupow.abs() * tail_fact / tail_2pi;
            bound = beta * ratio / (BigReal(1L, bits) - ratio);
            if (bound <= tol) break;
        }
    }
    return {sum, bound + (sum.abs() + BigReal(1L, bits)) * ulp_cushion};
}

BigComplex pochhammer_work(const BigComplex &s, long j, long bits) {
    BigComplex acc(1, bits);
    BigComplex t = s.round_to(bits);
    for (long i = 0; i < j; ++i) {
        acc *= t;
        t += BigComplex(1, bits);
    }
    return acc;
}

ValueWithError gamma_work(const BigComplex &s, long bits) {
    if (s.im().is_zero() && s.re().is_integer() && s.re() <= 0)
        throw domain_error("gamma: pole at nonpositive integer argument");
    const long A = std::max<long>(12, (bits * 13) / 64 + 4);
    long n_shift = 0;
    if (s.re() < BigReal(A, bits)) {
        n_shift = A - s.re().floor().to_long();
        if (n_shift < 0) n_shift = 0;
    }
    const BigComplex z = s.round_to(bits) + BigComplex(n_shift, bits);

    // ln Gamma(z) = (z - 1/2) ln z - z + ln(2 pi)/2
    //             + sum_{k<=K} B_{2k} / ((2k)(2k-1) z^{2k-1}) + R_K,
    // |R_K| <= |B_{2K+2}|/((2K+1)(2K+2)) |z|^{-(2K+1)} sec^{2K+2}(arg z / 2)
    const BigComplex lnz = z.log();
    const BigReal ln2pi = (BigReal::pi(bits) * 2L).log();
    BigComplex lg = (z - BigComplex(BigReal(0.5, bits))) * lnz - z +
                    BigComplex(ln2pi * BigReal(0.5, bits));
    const BigComplex zinv = BigComplex(1, bits) / z;
    const BigComplex zinv2 = zinv * zinv;
    BigComplex zp = zinv; // z^{-(2k-1)}
    const BigReal zabs_inv = zinv.abs();
    const BigReal sec_half = BigReal(1L, bits) / (z.arg() * BigReal(0.5, bits)).cos();
    const BigReal sec_sq = sec_half * sec_half;
    // |z|^{-(2k+1)} sec^{2k+2}(theta/2), starting at k = 1
    BigReal zpow_bound = zabs_inv.pow_si(3) * sec_sq * sec_sq;
    BigReal rem(1e300, bits);
    const BigReal tol = BigReal::pow2(-bits + 4, bits);
    for (int k = 1; k <= 1200; ++k) {
        const Rational coeff = bernoulli_number(2 * k) /
            Rational(static_cast<long>(2 * k) * static_cast<long>(2 * k - 1));
        lg += BigComplex(BigReal(coeff, bits)) * zp;
        const Rational rb = bernoulli_number(2 * k + 2).abs() /
            Rational(static_cast<long>(2 * k + 1) * static_cast<long>(2 * k + 2));
        const BigReal bound = BigReal(rb, bits) * zpow_bound;
        if (bound < rem) {
            rem = bound;
            if (rem <= tol) break;
        } else {
            break;
        }
        zp = zp * zinv2;
        zpow_bound *= zabs_inv * zabs_inv * sec_sq;
    }
    BigComplex g = lg.exp();
    if (n_shift > 0) {
        BigComplex denom(1, bits);
        for (long i = 0; i < n_shift; ++i)
            denom *= (s.round_to(bits) + BigComplex(i, bits));
        if (denom.is_zero()) throw domain_error("gamma: pole at nonpositive integer argument");
        g = g / denom;
    }
    BigReal rel = rem.exp() - BigReal(1L, bits);
    rel += BigReal::pow2(-bits + 14, bits);
    return ValueWithError(g, g.abs() * rel, true);
}

} // namespace detail

ValueWithError riemann_zeta(const BigComplex &s, long prec) {
    if (!(s.re() > 1))
        throw domain_error("riemann_zeta: Re(s) must exceed 1 (no continuation here)");
    const long bits = prec + kGuardBits;
    const BigComplex sw = s.round_to(bits);
    const BigReal tol = BigReal::pow2(-bits + 6, bits);
    long N = std::max<long>(10, (bits * 11) / 64 + s.abs().to_long() / 3);
    ValueWithError out;
    for (int attempt = 0;; ++attempt) {
        BigComplex partial(0, bits);
        for (long m = N; m >= 1; --m)
            partial += pow_complex(m, -sw, bits);
        ValueWithError tail = detail::em_power_tail(sw, BigReal(N + 1, bits), bits, tol);
        BigReal err = tail.abs_error +
                      (partial.abs() + BigReal(1L, bits)) * BigReal::pow2(-bits + 14, bits);
        out = ValueWithError(partial + tail.estimate, err, true);
        if (tail.abs_error <= tol || attempt >= 6) break;
        N *= 2;
    }
    return out;
}

ValueWithError hurwitz_zeta(const BigComplex &s, const BigReal &a, long prec) {
    if (!(s.re() > 1))
        throw domain_error("hurwitz_zeta: Re(s) must exceed 1");
    if (!(a > 0))
        throw domain_error("hurwitz_zeta: a must be positive");
    const long bits = prec + kGuardBits;
    const BigComplex sw = s.round_to(bits);
    const BigReal aw = a.round_to(bits);
    const BigReal tol = BigReal::pow2(-bits + 6, bits);
    long N = std::max<long>(10, (bits * 11) / 64 + s.abs().to_long() / 3);
    ValueWithError out;
    for (int attempt = 0;; ++attempt) {
        BigComplex partial(0, bits);
        for (long m = N - 1; m >= 0; --m)
            partial += pow_complex(aw + BigReal(m, bits), -sw);
        ValueWithError tail = detail::em_power_tail(sw, aw + BigReal(N, bits), bits, tol);
        BigReal err = tail.abs_error +
                      (partial.abs() + BigReal(1L, bits)) * BigReal::pow2(-bits + 14, bits);
        out = ValueWithError(partial + tail.estimate, err, true);
        if (tail.abs_error <= tol || attempt >= 6) break;
        N *= 2;
    }
    return out;
}

ValueWithError polylog_point(int k, const BigReal &x, long prec) {
    if (k < 1) throw domain_error("polylog_point: weight must be >= 1");
    if (x.sign() < 0 || x >= 1)
        throw domain_error("polylog_point: argument must lie in [0,1)");
    const long bits = prec + kGuardBits;
    const BigReal xw = x.round_to(bits);
    auto [v, err] = detail::polylog_real(k, xw, BigReal(1L, bits) - xw, bits);
    return ValueWithError(BigComplex(v), err, true);
}

ValueWithError gamma(const BigComplex &s, long prec) {
    return detail::gamma_work(s, prec + kGuardBits);
}

ValueWithError pochhammer(const BigComplex &s, long j, long prec) {
    if (j < 0) throw domain_error("pochhammer: j must be >= 0");
    const long bits = prec + kGuardBits;
    BigComplex v = detail::pochhammer_work(s, j, bits);
    BigReal err = v.abs() * BigReal(4 * (j + 1), bits) * BigReal::pow2(-bits, bits);
    return ValueWithError(v, err, true);
}

} // namespace mtzeta
