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

#include "mtzeta/logseries.hpp"

#include <algorithm>

#include "mtzeta/kernels.hpp"
#include "mtzeta/series.hpp"

namespace mtzeta {
namespace detail {

LogSeries LogSeries::from_power(const std::vector<BigReal> &coeffs, long bits) {
    LogSeries s(static_cast<int>(coeffs.size()) - 1, bits);
    for (size_t n = 0; n < coeffs.size(); ++n) s.at(0, static_cast<int>(n)) = coeffs[n];
    return s;
}

LogSeries LogSeries::log_inv(int order, long bits) {
    LogSeries s(order, bits);
    s.at(1, 0) = BigReal(1L, bits);
    return s;
}

LogSeries LogSeries::constant(const BigReal &c, int order, long bits) {
    LogSeries s(order, bits);
    s.at(0, 0) = c;
    return s;
}

LogSeries LogSeries::operator+(const LogSeries &o) const {
    const int n = std::min(order_, o.order_);
    LogSeries r(n, bits_);
    const int pmax = std::max(log_degree(), o.log_degree());
    for (int p = 0; p <= pmax; ++p)
        for (int i = 0; i <= n; ++i) {
            BigReal v(0L, bits_);
            if (p <= log_degree()) v += at(p, i);
            if (p <= o.log_degree()) v += o.at(p, i);
            if (!v.is_zero()) r.at(p, i) = v;
        }
    return r;
}

LogSeries LogSeries::operator-(const LogSeries &o) const {
    return *this + o.scaled(BigReal(-1L, bits_));
}

LogSeries LogSeries::scaled(const BigReal &c) const {
    LogSeries r(order_, bits_);
    for (int p = 0; p <= log_degree(); ++p)
        for (int i = 0; i <= order_; ++i)
            if (!at(p, i).is_zero()) r.at(p, i) = at(p, i) * c;
    return r;
}

LogSeries LogSeries::operator*(const LogSeries &o) const {
    const int n = std::min(order_, o.order_);
    LogSeries r(n, bits_);
    for (int p = 0; p <= log_degree(); ++p)
        for (int q = 0; q <= o.log_degree(); ++q) {
            // (v-series_p) * (v-series_q) -> log power p+q
            for (int i = 0; i <= n; ++i) {
                const BigReal &a = at(p, i);
                if (a.is_zero()) continue;
                for (int j = 0; i + j <= n; ++j) {
                    const BigReal &b = o.at(q, j);
                    if (b.is_zero()) continue;
                    r.at(p + q, i + j) += a * b;
                }
            }
        }
    return r;
}

LogSeries LogSeries::integral() const {
    // order grows by one
    LogSeries r(order_ + 1, bits_);
    for (int p = 0; p <= log_degree(); ++p) {
        // p!/t! prefactors
        for (int i = 0; i <= order_; ++i) {
            const BigReal &a = at(p, i);
            if (a.is_zero()) continue;
            BigReal fac(1L, bits_);
            const BigReal np1(i + 1, bits_);
            BigReal den = np1; // (n+1)^{p-t+1} built upward from t = p
            for (int t = p; t >= 0; --t) {
                r.at(t, i + 1) += a * fac / den;
                fac *= static_cast<long>(t);
                den *= np1;
            }
        }
    }
    return r;
}

std::pair<BigReal, BigReal> LogSeries::eval(const BigReal &v) const {
    const BigReal L = (BigReal(1L, bits_) / v).log();
    BigReal total(0L, bits_);
    BigReal top(0L, bits_); // magnitude of the last few terms, for the bound
    for (int p = 0; p <= log_degree(); ++p) {
        // Horner in v
        BigReal acc(0L, bits_);
        for (int i = order_; i >= 0; --i) {
            acc *= v;
            acc += at(p, i);
        }
        total += acc * L.pow_si(p);
        for (int i = std::max(0, order_ - 2); i <= order_; ++i) {
            BigReal t = at(p, i).abs() * v.pow_si(i) * L.pow_si(p);
            if (t > top) top = t;
        }
    }
    // heuristic: coefficients of these expansions are polynomially bounded,
    // so the omitted tail is close to a geometric continuation
    BigReal bound = top * v / (BigReal(1L, bits_) - v) * BigReal(64L, bits_);
    bound += total.abs() * BigReal::pow2(-bits_ + 16, bits_);
    return {total, bound};
}

std::vector<BigReal> fseries_mul(const std::vector<BigReal> &a, const std::vector<BigReal> &b,
                                 int order, long bits) {
    std::vector<BigReal> r(static_cast<size_t>(order) + 1, BigReal(0L, bits));
    for (size_t i = 0; i < a.size() && static_cast<int>(i) <= order; ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size() && static_cast<int>(i + j) <= order; ++j) {
            if (b[j].is_zero()) continue;
            r[i + j] += a[i] * b[j];
        }
    }
    return r;
}

std::vector<BigReal> fseries_log_unit(const std::vector<BigReal> &a, int order, long bits) {
    // log of a unit power series: log(a) = integral of a'/a
    if (a.empty() || a[0].is_zero() || !(a[0] == BigReal(1L, bits)))
        throw domain_error("fseries_log_unit: series must start at 1");
    // inverse of a
    std::vector<BigReal> inv(static_cast<size_t>(order) + 1, BigReal(0L, bits));
    inv[0] = BigReal(1L, bits);
    for (int m = 1; m <= order; ++m) {
        BigReal acc(0L, bits);
        for (int i = 1; i <= m; ++i) {
            if (static_cast<size_t>(i) >= a.size() || a[static_cast<size_t>(i)].is_zero()) continue;
            acc += a[static_cast<size_t>(i)] * inv[static_cast<size_t>(m - i)];
        }
        inv[static_cast<size_t>(m)] = -acc;
    }
    // a' (as coefficients of v^{m}: (m+1) a_{m+1})
    std::vector<BigReal> da(static_cast<size_t>(order) + 1, BigReal(0L, bits));
    for (int m = 0; m < order; ++m)
        if (static_cast<size_t>(m + 1) < a.size())
            da[static_cast<size_t>(m)] = a[static_cast<size_t>(m + 1)] * static_cast<long>(m + 1);
    std::vector<BigReal> quot = fseries_mul(da, inv, order, bits);
    std::vector<BigReal> out(static_cast<size_t>(order) + 1, BigReal(0L, bits));
    for (int m = 1; m <= order; ++m)
        out[static_cast<size_t>(m)] = quot[static_cast<size_t>(m - 1)] / static_cast<long>(m);
    return out;
}

LogSeries polylog_at_one(int k, int order, long bits) {
    if (k < 1) throw domain_error("polylog_at_one: weight must be >= 1");
    // mu = ln(1-v) = -sum v^n/n;  -mu/v = sum v^n/(n+1) is a unit series
    std::vector<BigReal> mu(static_cast<size_t>(order) + 1, BigReal(0L, bits));
    for (int n = 1; n <= order; ++n) mu[static_cast<size_t>(n)] = BigReal(-1L, bits) / static_cast<long>(n);
    if (k == 1) {
        // Li_1(1-v) = -ln v = ln(1/v)
        return LogSeries::log_inv(order, bits);
    }
    std::vector<BigReal> unit(static_cast<size_t>(order) + 1, BigReal(0L, bits));
    for (int n = 0; n <= order; ++n) unit[static_cast<size_t>(n)] = BigReal(1L, bits) / static_cast<long>(n + 1);
    // ln(-mu) = -ln(1/v) + log(unit series)
    LogSeries ln_minus_mu =
        LogSeries::from_power(fseries_log_unit(unit, order, bits), bits) -
        LogSeries::log_inv(order, bits);

    LogSeries mu_ls = LogSeries::from_power(mu, bits);
    LogSeries result(order, bits);
    // j = 0 term: zeta(k)
    result.at(0, 0) = zeta_int(k, bits);
    LogSeries mupow = LogSeries::constant(BigReal(1L, bits), order, bits); // mu^j/j!
    for (int j = 1; j <= order; ++j) {
        mupow = (mupow * mu_ls).scaled(BigReal(1L, bits) / static_cast<long>(j));
        if (j == k - 1) {
            LogSeries special =
                LogSeries::constant(BigReal(harmonic(k - 1), bits), order, bits) - ln_minus_mu;
            result = result + mupow * special;
            continue;
        }
        const int a = k - j;
        if (a >= 2) {
            result = result + mupow.scaled(zeta_int(a, bits));
        } else {
            const Rational zr = zeta_nonpos_int(-a);
            if (!zr.is_zero()) result = result + mupow.scaled(BigReal(zr, bits));
        }
    }
    return result;
}

} // namespace detail
} // namespace mtzeta
