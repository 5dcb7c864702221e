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

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "mtzeta/logseries.hpp"
#include "mtzeta/quadrature.hpp"

namespace mtzeta {

namespace {

// sum_{N>M} N^{-p} (1+ln N)^q  <=  int_M^inf x^{-p}(1+ln x)^q dx, expanded
// through int x^{-p} ln^i x = M^{1-p} sum_t (i!/t!) ln^t M/(p-1)^{i-t+1}.
BigReal tail_power_log(const BigReal &p, int q, long M, long bits) {
    if (!(p > 1)) throw convergence_error("tail_power_log: exponent must exceed 1");
    const BigReal Mb(M, bits);
    const BigReal lnM = Mb.log();
    const BigReal pm1 = p - 1L;
    BigReal total(0L, bits);
    for (int i = 0; i <= q; ++i) {
        BigReal inner(0L, bits);
        // sum_t (i!/t!) ln^t M / (p-1)^{i-t+1}
        BigReal fac(1L, bits); // i!/t! built downward from t = i
        for (int t = i; t >= 0; --t) {
            inner += fac * lnM.pow_si(t) / pm1.pow_si(i - t + 1);
            fac *= static_cast<long>(t); // (i!/t!) -> (i!/(t-1)!)
        }
        total += BigReal(Rational::binomial(q, i), bits) * inner;
    }
    return total * Mb.pow(BigReal(1L, bits) - p);
}

std::string cache_key(const char *route, const std::vector<int> &ks, const BigComplex &s,
                      long prec) {
    std::ostringstream os;
    os << route << ':';
    for (int k : ks) os << k << ',';
    os << ';' << s.re().str(40) << '|' << s.im().str(40) << '@' << prec;
    return os.str();
}

std::mutex g_mt_cache_mu;
std::map<std::string, ValueWithError> g_mt_cache;

bool cache_lookup(const std::string &key, ValueWithError &out) {
    std::lock_guard<std::mutex> lock(g_mt_cache_mu);
    auto it = g_mt_cache.find(key);
    if (it == g_mt_cache.end()) return false;
    out = it->second;
    return true;
}

void cache_store(const std::string &key, const ValueWithError &v) {
    std::lock_guard<std::mutex> lock(g_mt_cache_mu);
    g_mt_cache.emplace(key, v);
}

void check_fast_convergence(const std::vector<int> &ks, const BigComplex &s, long bits) {
    const int r = static_cast<int>(ks.size());
    int z0 = 0;
    long wt = 0;
    for (int k : ks) {
        if (k < 0) throw domain_error("mt_zeta: integer exponents must be >= 0");
        if (k == 0) ++z0;
        wt += k;
    }
    const BigReal sigma = s.re();
    // sufficient absolute-convergence region for nonnegative integer exponents
    if (!(sigma > BigReal(z0, bits)) || !(sigma + BigReal(wt, bits) > BigReal(r, bits)))
        throw convergence_error(
            "mt_zeta: outside the verified convergence region (needs Re(s) > #zeros and "
            "Re(s) + sum(k) > r)");
}

} // namespace

MTArgument::MTArgument(std::vector<int> ks, BigComplex s_last)
    : last(std::move(s_last)) {
    if (ks.empty()) throw domain_error("MTArgument: depth must be >= 1");
    const long prec = last.prec();
    for (int k : ks) exponents.emplace_back(BigComplex(k, prec));
    int_exponents = std::move(ks);
}

MTArgument::MTArgument(std::vector<BigComplex> ss, BigComplex s_last)
    : exponents(std::move(ss)), last(std::move(s_last)) {
    if (exponents.empty()) throw domain_error("MTArgument: depth must be >= 1");
    // detect an integer fast path
    std::vector<int> ks;
    bool all_int = true;
    for (const auto &e : exponents) {
        if (e.is_real() && e.re().is_integer() && e.re() >= 0 && e.re() < 64) {
            ks.push_back(static_cast<int>(e.re().to_long()));
        } else {
            all_int = false;
            break;
        }
    }
    if (all_int) int_exponents = std::move(ks);
}

int MTArgument::zero_count() const {
    if (!int_exponents) return 0;
    int z = 0;
    for (int k : *int_exponents)
        if (k == 0) ++z;
    return z;
}

long MTArgument::weight() const {
    if (!int_exponents) throw domain_error("MTArgument::weight: non-integer exponents");
    long w = 0;
    for (int k : *int_exponents) w += k;
    return w;
}

// ---------------------------------------------------------------------------
// brute-force oracle
// ---------------------------------------------------------------------------

ValueWithError mt_zeta_oracle(const MTArgument &arg, long cutoff, long prec,
                              const std::optional<BigReal> &tol) {
    const int r = arg.depth();
    if (r > 4)
        throw domain_error("mt_zeta_oracle: depth capped at 4 (cost grows as cutoff^r)");
    if (cutoff < 8) throw domain_error("mt_zeta_oracle: cutoff too small");
    const long bits = prec + kGuardBits;
    const BigComplex s = arg.last.round_to(bits);
    const BigReal sigma = s.re();

    std::vector<BigReal> sig(r, BigReal(0L, bits));
    bool all_real = s.is_real();
    for (int j = 0; j < r; ++j) {
        sig[j] = arg.exponents[j].re().round_to(bits);
        if (sig[j].sign() < 0)
            throw convergence_error("mt_zeta_oracle: Re of every exponent must be >= 0");
        if (!arg.exponents[j].is_real()) all_real = false;
    }

    // rigorous tail bound over the complement of the box: every escaping tuple
    // has total N > M, and the largest part of a composition of N is >= N/r
    BigReal bound(0L, bits);
    {
        for (int j = 0; j < r; ++j) {
            BigReal p = sigma + sig[j];
            int logs = 0;
            BigReal consts(1L, bits);
            for (int i = 0; i < r; ++i) {
                if (i == j) continue;
                if (sig[i] > 1) {
                    consts *= sig[i] / (sig[i] - 1L); // >= zeta(sig_i)
                } else if (sig[i] == 1) {
                    ++logs;
                } else {
                    consts *= (BigReal(1L, bits) + BigReal(1L, bits) / (BigReal(1L, bits) - sig[i]));
                    p -= (BigReal(1L, bits) - sig[i]);
                }
            }
            if (!(p > BigReal(1.001, bits)))
                throw convergence_error("mt_zeta_oracle: tail bound divergent (argument too "
                                        "close to the convergence boundary)");
            // (N/r)^{-sig_j} = r^{sig_j} N^{-sig_j}
            BigReal rpow = BigReal(r, bits).pow(sig[j]);
            bound += rpow * consts * tail_power_log(p, logs, cutoff, bits);
        }
    }
    if (tol && bound > *tol)
        throw precision_error("mt_zeta_oracle: cutoff too small for requested tolerance");

    // power tables
    const long nmax = static_cast<long>(r) * cutoff;
    ValueWithError out;
    if (all_real) {
        std::vector<std::vector<BigReal>> T(static_cast<size_t>(r));
        for (int j = 0; j < r; ++j) {
            T[static_cast<size_t>(j)].reserve(static_cast<size_t>(cutoff) + 1);
            T[static_cast<size_t>(j)].emplace_back(0L, bits);
            for (long m = 1; m <= cutoff; ++m)
                T[static_cast<size_t>(j)].push_back(
                    pow_complex(BigReal(m, bits), -arg.exponents[j].round_to(bits)).re());
        }
        std::vector<BigReal> P;
        P.reserve(static_cast<size_t>(nmax) + 1);
        P.emplace_back(0L, bits);
        for (long n = 1; n <= nmax; ++n)
            P.push_back(pow_complex(BigReal(n, bits), -s).re());

        mpfr_t acc, t1, t2;
        mpfr_init2(acc, bits);
        mpfr_init2(t1, bits);
        mpfr_init2(t2, bits);
        mpfr_set_zero(acc, 1);
        auto T0 = [&](long m) { return T[0][static_cast<size_t>(m)].raw(); };
        if (r == 1) {
            for (long a = 1; a <= cutoff; ++a) {
                mpfr_mul(t2, T0(a), P[static_cast<size_t>(a)].raw(), MPFR_RNDN);
                mpfr_add(acc, acc, t2, MPFR_RNDN);
            }
        } else if (r == 2) {
            for (long a = 1; a <= cutoff; ++a)
                for (long b = 1; b <= cutoff; ++b) {
                    mpfr_mul(t1, T0(a), T[1][static_cast<size_t>(b)].raw(), MPFR_RNDN);
                    mpfr_mul(t2, t1, P[static_cast<size_t>(a + b)].raw(), MPFR_RNDN);
                    mpfr_add(acc, acc, t2, MPFR_RNDN);
                }
        } else if (r == 3) {
            for (long a = 1; a <= cutoff; ++a)
                for (long b = 1; b <= cutoff; ++b) {
                    mpfr_mul(t1, T0(a), T[1][static_cast<size_t>(b)].raw(), MPFR_RNDN);
                    for (long c = 1; c <= cutoff; ++c) {
                        mpfr_mul(t2, t1, T[2][static_cast<size_t>(c)].raw(), MPFR_RNDN);
                        mpfr_mul(t2, t2, P[static_cast<size_t>(a + b + c)].raw(), MPFR_RNDN);
                        mpfr_add(acc, acc, t2, MPFR_RNDN);
                    }
                }
        } else {
            for (long a = 1; a <= cutoff; ++a)
                for (long b = 1; b <= cutoff; ++b) {
                    mpfr_mul(t1, T0(a), T[1][static_cast<size_t>(b)].raw(), MPFR_RNDN);
                    for (long c = 1; c <= cutoff; ++c) {
                        mpfr_mul(t2, t1, T[2][static_cast<size_t>(c)].raw(), MPFR_RNDN);
                        for (long d = 1; d <= cutoff; ++d) {
                            mpfr_t t3;
                            mpfr_init2(t3, bits);
                            mpfr_mul(t3, t2, T[3][static_cast<size_t>(d)].raw(), MPFR_RNDN);
                            mpfr_mul(t3, t3, P[static_cast<size_t>(a + b + c + d)].raw(),
                                     MPFR_RNDN);
                            mpfr_add(acc, acc, t3, MPFR_RNDN);
                            mpfr_clear(t3);
                        }
                    }
                }
        }
        BigReal sum(bits);
        mpfr_set(sum.raw(), acc, MPFR_RNDN);
        mpfr_clear(acc);
        mpfr_clear(t1);
        mpfr_clear(t2);
        BigReal rounding = (sum.abs() + BigReal(1L, bits)) *
                           (BigReal(cutoff, bits).pow_si(r) + 64L) * BigReal::pow2(-bits, bits);
        out = ValueWithError(BigComplex(sum), bound + rounding, true);
    } else {
        std::vector<std::vector<BigComplex>> T(static_cast<size_t>(r));
        for (int j = 0; j < r; ++j) {
            T[static_cast<size_t>(j)].emplace_back(0, bits);
            for (long m = 1; m <= cutoff; ++m)
                T[static_cast<size_t>(j)].push_back(
                    pow_complex(m, -arg.exponents[j].round_to(bits), bits));
        }
        std::vector<BigComplex> P;
        P.emplace_back(0, bits);
        for (long n = 1; n <= nmax; ++n) P.push_back(pow_complex(n, -s, bits));
        BigComplex acc(0, bits);
        std::vector<long> idx(static_cast<size_t>(r), 1);
        // odometer over the box
        while (true) {
            BigComplex term = T[0][static_cast<size_t>(idx[0])];
            long n = idx[0];
            for (int j = 1; j < r; ++j) {
                term *= T[static_cast<size_t>(j)][static_cast<size_t>(idx[static_cast<size_t>(j)])];
                n += idx[static_cast<size_t>(j)];
            }
            acc += term * P[static_cast<size_t>(n)];
            int pos = r - 1;
            while (pos >= 0 && ++idx[static_cast<size_t>(pos)] > cutoff) {
                idx[static_cast<size_t>(pos)] = 1;
                --pos;
            }
            if (pos < 0) break;
        }
        BigReal rounding = (acc.abs() + BigReal(1L, bits)) *
                           (BigReal(cutoff, bits).pow_si(r) + 64L) * BigReal::pow2(-bits, bits);
        out = ValueWithError(acc, bound + rounding, true);
    }
    return out;
}

// ---------------------------------------------------------------------------
// quadrature route: (1/Gamma(s)) int_0^1 (-ln x)^{s-1} prod_j Li_{k_j}(x) dx/x
// ---------------------------------------------------------------------------

ValueWithError mt_zeta_quadrature(const MTArgument &arg, long prec) {
    if (!arg.int_exponents)
        throw domain_error("mt_zeta_quadrature: requires nonnegative integer exponents");
    const long bits = prec + kGuardBits;
    const std::vector<int> &ks = *arg.int_exponents;
    const BigComplex s = arg.last.round_to(bits);
    check_fast_convergence(ks, s, bits);

    const std::string key = cache_key("quad", ks, arg.last, prec);
    ValueWithError cached;
    if (cache_lookup(key, cached)) return cached;

    const BigComplex s_m1 = s - BigComplex(1, bits);
    const bool s_is_one = s_m1.is_zero();
    const BigReal half(0.5, bits);
    Integrand f = [&](const BigReal &x, const BigReal &omx) -> BigComplex {
        BigReal prod(1L, bits);
        for (int k : ks) prod *= detail::polylog_real(k, x, omx, bits).first;
        prod /= x;
        if (s_is_one) return BigComplex(prod);
        const BigReal L = (x > half) ? -((-omx).log1p()) : -(x.log());
        return pow_complex(L, s_m1) * prod;
    };
    const BigReal tol = BigReal::pow2(-bits + 16, bits);
    ValueWithError I = tanh_sinh(f, BigReal(1L, bits), bits, tol);
    ValueWithError G = detail::gamma_work(s, bits);
    BigComplex val = I.estimate / G.estimate;
    BigReal err = (I.abs_error + val.abs() * G.abs_error) / G.estimate.abs();
    ValueWithError out(val, err, false);
    cache_store(key, out);
    return out;
}

// ---------------------------------------------------------------------------
// summation route (trailing zero exponent): Euler-Maclaurin recursion over
// the zero slot, bases = Dirichlet series of depth <= 2
// ---------------------------------------------------------------------------

namespace {

// tail sum_{K>K0} a_K K^{-v} of the reduced structure (nz, extra zeros),
// where a_K are its grouped Dirichlet coefficients; evaluated by closed
// Euler-Maclaurin machinery (never by cancellation against the full sum)
ValueWithError reduced_tail(const std::vector<int> &nz, int zeros, const BigComplex &v,
                            long K0, long bits, const BigReal &tol) {
    const size_t n = nz.size();
    if (n == 0) {
        if (zeros == 1) return detail::zeta_tail_from(v, K0, bits, tol);
        if (zeros == 2) {
            // a_K = K - 1
            ValueWithError t1 = detail::zeta_tail_from(v - BigComplex(1, bits), K0, bits, tol);
            ValueWithError t2 = detail::zeta_tail_from(v, K0, bits, tol);
            return t1 - t2;
        }
        throw domain_error("mt_zeta_sum: unsupported all-zero reduced structure");
    }
    if (n == 1 && zeros == 0)
        return detail::zeta_tail_from(v + BigComplex(nz[0], bits), K0, bits, tol);
    if (n == 1 && zeros == 1)
        return detail::euler_sum_tail(v, nz[0], K0, bits, tol);
    if (n == 2 && zeros == 0) {
        const int k1 = nz[0], k2 = nz[1], w = k1 + k2;
        ValueWithError total(BigComplex(0, bits), BigReal(0L, bits), true);
        for (int i = 1; i <= std::max(k1, k2); ++i) {
            mpz_class coef = Rational::binomial(w - i - 1, k2 - 1) * (i <= k1 ? 1 : 0) +
                             Rational::binomial(w - i - 1, k1 - 1) * (i <= k2 ? 1 : 0);
            if (coef == 0) continue;
            const BigReal c(coef, bits);
            ValueWithError es =
                detail::euler_sum_tail(v + BigComplex(w - i, bits), i, K0, bits, tol / c);
            total = total + ValueWithError(c * es.estimate, c * es.abs_error, es.rigorous);
        }
        return total;
    }
    throw domain_error("mt_zeta_sum: summation path supports at most two nonzero exponents");
}

ValueWithError mt_sum_rec(const std::vector<int> &nz, int z0, const BigComplex &s, long bits,
                          const BigReal &tol) {
    const int r = static_cast<int>(nz.size()) + z0;
    const BigReal sigma = s.re();
    long wt = 0;
    for (int k : nz) wt += k;
    if (!(sigma > BigReal(z0, bits)) || !(sigma + BigReal(wt, bits) > BigReal(r, bits)))
        throw convergence_error("mt_zeta_sum: outside the verified convergence region");

    if (z0 == 0) {
        if (nz.size() == 1)
            return detail::zeta_tail_from(s + BigComplex(nz[0], bits), 0, bits, tol);
        if (nz.size() == 2) return detail::tornheim2(nz[0], nz[1], s, bits, tol);
        throw domain_error("mt_zeta_sum: summation path supports at most two nonzero exponents");
    }
    if (nz.empty()) {
        // sum_M C(M-1, z0-1) M^{-s}: expand the binomial as a polynomial in M
        std::vector<Rational> poly{Rational(1)}; // coefficients in M
        for (int t = 1; t <= z0 - 1; ++t) {
            // multiply by (M - t)
            std::vector<Rational> next(poly.size() + 1);
            for (size_t i = 0; i < poly.size(); ++i) {
                next[i + 1] += poly[i];
                next[i] -= poly[i] * Rational(t);
            }
            poly = std::move(next);
        }
        Rational fact(1);
        for (int t = 2; t <= z0 - 1; ++t) fact *= Rational(t);
        ValueWithError total(BigComplex(0, bits), BigReal(0L, bits), true);
        for (size_t j = 0; j < poly.size(); ++j) {
            if (poly[j].is_zero()) continue;
            const BigReal c(poly[j] / fact, bits);
            ValueWithError z = detail::zeta_tail_from(
                s - BigComplex(static_cast<long>(j), bits), 0, bits, tol / (c.abs() + 1L));
            total = total + ValueWithError(c * z.estimate, c.abs() * z.abs_error, z.rigorous);
        }
        return total;
    }

    // one zero handled by this level; the rest live in the reduced structure
    const std::vector<int> &rnz = nz;
    const int rzeros = z0 - 1;
    const int d = static_cast<int>(rnz.size()) + rzeros; // reduced depth

    const long K0 = std::max<long>(192, bits / 2);
    // grouped coefficients of the reduced structure up to K0
    std::vector<BigReal> agg;
    {
        std::vector<BigReal> cur(static_cast<size_t>(K0) + 1, BigReal(0L, bits));
        for (long m = 1; m <= K0; ++m)
            cur[static_cast<size_t>(m)] =
                BigReal(1L, bits) / BigReal(m, bits).pow_si(rnz[0]);
        auto convolve_pow = [&](int k) {
            std::vector<BigReal> next(static_cast<size_t>(K0) + 1, BigReal(0L, bits));
            for (long m = 1; m <= K0; ++m) {
                if (cur[static_cast<size_t>(m)].is_zero()) continue;
                for (long i = 1; m + i <= K0; ++i) {
                    BigReal t = cur[static_cast<size_t>(m)];
                    if (k != 0) t /= BigReal(i, bits).pow_si(k);
                    next[static_cast<size_t>(m + i)] += t;
                }
            }
            cur = std::move(next);
        };
        for (size_t j = 1; j < rnz.size(); ++j) convolve_pow(rnz[j]);
        for (int t = 0; t < rzeros; ++t) convolve_pow(0);
        agg = std::move(cur);
    }

    // exact region: sum_{K<=K0} agg[K] Ztail(s, K) via a shared suffix table
    const long base = std::max<long>(K0 + 1, std::max<long>(12, (bits * 11) / 64));
    ValueWithError tailB = detail::em_power_tail(s, BigReal(base + 1, bits), bits,
                                                 tol * BigReal::pow2(-8, bits));
    std::vector<BigComplex> suffix(static_cast<size_t>(base) + 1, BigComplex(0, bits));
    for (long K = base - 1; K >= d; --K)
        suffix[static_cast<size_t>(K)] =
            suffix[static_cast<size_t>(K + 1)] + pow_complex(K + 1, -s, bits);
    BigComplex exact(0, bits);
    BigReal aggsum(0L, bits);
    for (long K = d; K <= K0; ++K) {
        const BigReal &a = agg[static_cast<size_t>(K)];
        if (a.is_zero()) continue;
        exact += a * (suffix[static_cast<size_t>(K)] + tailB.estimate);
        aggsum += a;
    }
    BigReal err = aggsum * tailB.abs_error;

    // Euler-Maclaurin region K > K0:
    //   Ztail(s,K) = K^{1-s}/(s-1) - K^{-s}/2
    //              + sum_j B_{2j}/(2j)! (s)_{2j-1} K^{1-s-2j} + R_J(K)
    const BigReal sub_tol = tol * BigReal::pow2(-8, bits);
    auto Dt = [&](const BigComplex &v) {
        return reduced_tail(rnz, rzeros, v, K0, bits, sub_tol);
    };
    ValueWithError D1 = Dt(s - BigComplex(1, bits));
    ValueWithError D0 = Dt(s);
    BigComplex em = D1.estimate / (s - BigComplex(1, bits)) -
                    D0.estimate * BigReal(0.5, bits);
    err += D1.abs_error / (s - BigComplex(1, bits)).abs() + D0.abs_error * BigReal(0.5, bits);

    BigComplex poch = s; // (s)_{2j-1}
    BigReal poch_abs = s.abs();
    BigReal fact_d(1L, bits);
    for (int t = 2; t <= d - 1; ++t) fact_d *= static_cast<long>(t);
    BigReal best_rem(1e300, bits);
    for (int j = 1; j <= 128; ++j) {
        const Rational b2j = bernoulli_number(2 * j);
        mpz_class f(1);
        for (int m = 2; m <= 2 * j; ++m) f *= m;
        const Rational coeff = b2j / Rational(f);
        ValueWithError Dj = Dt(s + BigComplex(2 * j - 1, bits));
        em += BigReal(coeff, bits) * poch * Dj.estimate;
        err += BigReal(coeff.abs(), bits) * poch_abs * Dj.abs_error;
        // remainder over K > K0: a_K <= K^{d-1}/(d-1)!
        const BigReal poch_abs_2j = poch_abs * (s + BigComplex(2 * j - 1, bits)).abs();
        const BigReal x = sigma + BigReal(2 * j - 1, bits); // K-decay beyond the K^{d-1} growth
        BigReal rem = BigReal(2L, bits) * BigReal(coeff.abs(), bits) * poch_abs_2j / x;
        // sum_{K>K0} K^{d-x-1}... : bound int: K0^{d-x}/(x-d)
        rem *= BigReal(K0, bits).pow(BigReal(d, bits) - x) / ((x - BigReal(d, bits)) * fact_d);
        if (rem < best_rem) {
            best_rem = rem;
            if (rem <= tol * BigReal(0.25, bits)) break;
        } else if (rem > best_rem * 4L) {
            break;
        }
        poch *= (s + BigComplex(2 * j - 1, bits));
        poch *= (s + BigComplex(2 * j, bits));
        poch_abs = poch.abs();
    }
    err += best_rem;
    err += (exact.abs() + em.abs() + BigReal(1L, bits)) * BigReal::pow2(-bits + 16, bits);
    return ValueWithError(exact + em, err, true);
}

} // namespace

ValueWithError mt_zeta_sum(const MTArgument &arg, long prec) {
    if (!arg.int_exponents)
        throw domain_error("mt_zeta_sum: requires nonnegative integer exponents");
    const long bits = prec + kGuardBits;
    const std::vector<int> &ks = *arg.int_exponents;
    const BigComplex s = arg.last.round_to(bits);
    check_fast_convergence(ks, s, bits);

    const std::string key = cache_key("sum", ks, arg.last, prec);
    ValueWithError cached;
    if (cache_lookup(key, cached)) return cached;

    std::vector<int> nz;
    int z0 = 0;
    for (int k : ks) {
        if (k == 0)
            ++z0;
        else
            nz.push_back(k);
    }
    const BigReal tol = BigReal::pow2(-bits + 12, bits);
    ValueWithError out = mt_sum_rec(nz, z0, s, bits, tol);
    cache_store(key, out);
    return out;
}

ValueWithError mt_zeta_fast(const MTArgument &arg, long prec) {
    if (!arg.int_exponents)
        throw domain_error("mt_zeta_fast: requires nonnegative integer exponents "
                           "(use mt_zeta_oracle for general complex exponents)");
    const std::vector<int> &ks = *arg.int_exponents;
    int z0 = 0, nzc = 0;
    for (int k : ks)
        if (k == 0)
            ++z0;
        else
            ++nzc;
    const bool sum_capable = nzc == 0 || (z0 >= 1 && nzc == 1 && z0 <= 2) ||
                             (nzc == 2 && z0 == 1);
    if (sum_capable) return mt_zeta_sum(arg, prec);
    return mt_zeta_quadrature(arg, prec);
}

// ---------------------------------------------------------------------------
// Lambda
// ---------------------------------------------------------------------------

namespace {

std::mutex g_lambda_mu;
std::map<std::string, std::vector<Rational>> g_lambda_coeffs;

const std::vector<Rational> &lambda_coeffs_cached(const IndexVector &k, int count) {
    std::lock_guard<std::mutex> lock(g_lambda_mu);
    std::string key = k.str();
    auto it = g_lambda_coeffs.find(key);
    if (it == g_lambda_coeffs.end() || static_cast<int>(it->second.size()) < count + 1) {
        std::vector<Rational> b = lambda_coefficients(k, count);
        auto res = g_lambda_coeffs.insert_or_assign(key, std::move(b));
        it = res.first;
    }
    return it->second;
}

} // namespace

namespace detail {

namespace {

// Expansion of Lambda_k(1-v) around v = 0, built once per (index, bits):
// the base prod_j Li_{k_j}(1-v) is a LogSeries, and each unit of the
// trailing exponent integrates it against 1/(1-v), pinned at v = 0 by the
// constant Lambda_(k;j)(1) = zeta_MT,r(k; j).
const LogSeries &lambda_near_one_series(const IndexVector &k, long bits) {
    static std::mutex mu;
    static std::map<std::string, LogSeries> cache;
    std::lock_guard<std::mutex> lock(mu);
    const std::string key = k.str() + "@" + std::to_string(bits);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    const int c = *k.tail;
    const int N = static_cast<int>(0.75 * static_cast<double>(bits)) + 32 + c;
    LogSeries F = polylog_at_one(k.entries[0], N, bits);
    for (size_t j = 1; j < k.entries.size(); ++j)
        F = F * polylog_at_one(k.entries[j], N, bits);
    if (c > 0) {
        std::vector<BigReal> geo(static_cast<size_t>(N) + 1, BigReal(1L, bits)); // 1/(1-v)
        LogSeries inv1mv = LogSeries::from_power(geo, bits);
        for (int j = 1; j <= c; ++j) {
            // Lambda_(k;j)(1) = zeta_MT,r(k_1..k_r; j)
            ValueWithError top =
                mt_zeta_quadrature(MTArgument(k.entries, BigComplex(j, bits)), bits - kGuardBits);
            F = LogSeries::constant(top.estimate.re(), N, bits) -
                (F * inv1mv).integral();
        }
    }
    auto res = cache.emplace(key, std::move(F));
    return res.first->second;
}

} // namespace

ValueWithError lambda_point(const IndexVector &k, const BigReal &z, const BigReal &omz,
                            long bits) {
    k.require_with_tail("lambda_eval");
    const int r = k.depth();
    const int c = *k.tail;
    if (z.is_zero()) return ValueWithError(BigComplex(0, bits), BigReal(0L, bits), true);
    if (z.sign() < 0 || omz.sign() <= 0)
        throw domain_error("lambda_eval: argument must lie in [0,1)");

    if (r == 1) {
        // Lambda_(k1;c)(z) = Li_{k1+c}(z)
        auto [v, e] = polylog_real(k.entries[0] + c, z, omz, bits);
        return ValueWithError(BigComplex(v), e, true);
    }
    if (c == 0) {
        // the weight on the total sum is trivial: the multi-sum factorizes
        BigReal prod(1L, bits), err(0L, bits), abs_acc(1L, bits);
        for (int kj : k.entries) {
            auto [v, e] = polylog_real(kj, z, omz, bits);
            err = err * v.abs() + abs_acc * e;
            abs_acc *= (v.abs() + e);
            prod *= v;
        }
        return ValueWithError(BigComplex(prod), err, true);
    }

    const BigReal tol = BigReal::pow2(-bits + 8, bits);
    if (z <= BigReal(0.62, bits)) {
        // direct series sum b_M z^M with the composition-count majorant tail
        long M = std::max<long>(64, (3 * bits) / 2);
        for (int attempt = 0;; ++attempt) {
            const std::vector<Rational> &b = lambda_coeffs_cached(k, static_cast<int>(M));
            BigReal sum(0L, bits), zp(1L, bits);
            for (long m = 1; m <= M; ++m) {
                zp *= z;
                if (!b[static_cast<size_t>(m)].is_zero())
                    sum += BigReal(b[static_cast<size_t>(m)], bits) * zp;
            }
            // tail <= C(M, r-1) (M+1)^{-c} z^{M+1} / (1 - rho),
            // rho = z (1 + (r-1)/(M+2-r))
            const BigReal rho =
                z * (BigReal(1L, bits) + BigReal(r - 1, bits) / BigReal(M + 2 - r, bits));
            if (rho < 1) {
                BigReal tail = BigReal(Rational::binomial(M, r - 1), bits) * zp * z /
                               (BigReal(M + 1, bits).pow_si(c) * (BigReal(1L, bits) - rho));
                if (tail <= tol || attempt >= 3) {
                    BigReal err =
                        tail + (sum.abs() + BigReal(1L, bits)) * BigReal::pow2(-bits + 14, bits);
                    return ValueWithError(BigComplex(sum), err, true);
                }
            }
            M *= 2;
        }
    }

    // z near 1: evaluate the expansion at the logarithmic singularity
    auto [v, e] = lambda_near_one_series(k, bits).eval(omz);
    return ValueWithError(BigComplex(v), e, false);
}

ValueWithError lambda_point_integral(const IndexVector &k, const BigReal &z, const BigReal &omz,
                                     long bits) {
    // integral representation, kept as an independent cross-check:
    //   Lambda_k(z) = (1/Gamma(c)) int_0^1 (-ln x)^{c-1} prod_j Li_{k_j}(z x) dx / x
    k.require_with_tail("lambda_point_integral");
    const int c = *k.tail;
    if (c < 1) throw domain_error("lambda_point_integral: trailing exponent must be >= 1");
    const BigReal tol = BigReal::pow2(-bits + 8, bits);
    const BigReal half(0.5, bits);
    Integrand f = [&](const BigReal &x, const BigReal &omx) -> BigComplex {
        const BigReal zx = z * x;
        const BigReal omzx = omz + z * omx; // 1 - z x, no cancellation
        BigReal prod(1L, bits);
        for (int kj : k.entries) prod *= polylog_real(kj, zx, omzx, bits).first;
        prod /= x;
        if (c == 1) return BigComplex(prod);
        const BigReal L = (x > half) ? -((-omx).log1p()) : -(x.log());
        return BigComplex(prod * L.pow_si(c - 1));
    };
    ValueWithError I = tanh_sinh(f, BigReal(1L, bits), bits, tol * BigReal::pow2(-6, bits));
    mpz_class fact(1);
    for (int t = 2; t <= c - 1; ++t) fact *= t;
    BigReal scale(Rational(mpz_class(1), fact), bits);
    return ValueWithError(I.estimate * scale, I.abs_error * scale, false);
}

} // namespace detail

ValueWithError lambda_eval(const IndexVector &k, const BigReal &z, long prec) {
    if (z.sign() < 0 || z >= 1)
        throw domain_error("lambda_eval: argument must lie in [0,1)");
    const long bits = prec + kGuardBits;
    const BigReal zw = z.round_to(bits);
    return detail::lambda_point(k, zw, BigReal(1L, bits) - zw, bits);
}

} // namespace mtzeta
