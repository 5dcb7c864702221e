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

#include "mtzeta/series.hpp"

#include <algorithm>
#include <mutex>

namespace mtzeta {

TruncatedSeries TruncatedSeries::truncated(int new_order) const {
    std::vector<Rational> c(static_cast<size_t>(new_order) + 1);
    const size_t n = std::min(c.size(), coeffs_.size());
    for (size_t i = 0; i < n; ++i) c[i] = coeffs_[i];
    return TruncatedSeries(std::move(c));
}

TruncatedSeries series_add(const TruncatedSeries &a, const TruncatedSeries &b) {
    const int n = std::min(a.order(), b.order());
    TruncatedSeries r(n);
    for (int i = 0; i <= n; ++i) r[i] = a[i] + b[i];
    return r;
}

TruncatedSeries series_sub(const TruncatedSeries &a, const TruncatedSeries &b) {
    const int n = std::min(a.order(), b.order());
    TruncatedSeries r(n);
    for (int i = 0; i <= n; ++i) r[i] = a[i] - b[i];
    return r;
}

TruncatedSeries series_mul(const TruncatedSeries &a, const TruncatedSeries &b) {
    const int n = std::min(a.order(), b.order());
    TruncatedSeries r(n);
    for (int i = 0; i <= n; ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; i + j <= n; ++j) {
            if (b[j].is_zero()) continue;
            r[i + j] += a[i] * b[j];
        }
    }
    return r;
}

TruncatedSeries series_compose(const TruncatedSeries &outer, const TruncatedSeries &inner) {
    if (!inner[0].is_zero())
        throw domain_error("series_compose: inner series must have zero constant term");
    const int n = std::min(outer.order(), inner.order());
    // Horner: result = o_n; result = result*inner + o_{n-1}; ...
    TruncatedSeries r(n);
    r[0] = outer[n];
    for (int k = n - 1; k >= 0; --k) {
        r = series_mul(r.truncated(n), inner.truncated(n));
        r[0] += outer[k];
    }
    return r;
}

TruncatedSeries series_div_by_expm1(const TruncatedSeries &a) {
    if (!a[0].is_zero())
        throw domain_error("series_div_by_expm1: numerator must have zero constant term");
    if (a.order() < 1) return TruncatedSeries(0);
    // a/(e^t-1) = (a/t) / ((e^t-1)/t); the denominator is a unit series.
    TruncatedSeries num = detail::series_shift_down(a);
    TruncatedSeries den = detail::expm1_over_t(num.order());
    return series_mul(num, detail::series_invert_unit(den));
}

TruncatedSeries one_minus_exp_neg(int order) {
    TruncatedSeries r(order);
    // 1 - e^{-t}: coefficient of t^m is -(-1)^m/m!.
    mpz_class fact(1);
    for (int m = 1; m <= order; ++m) {
        fact *= m;
        r[m] = (m % 2 == 1) ? Rational(mpz_class(1), fact) : Rational(mpz_class(-1), fact);
    }
    return r;
}

TruncatedSeries polylog_series(int k, int order) {
    if (k < 0) throw domain_error("polylog_series: negative weight not supported");
    TruncatedSeries r(order);
    for (int m = 1; m <= order; ++m)
        r[m] = Rational(mpz_class(1), Rational::ipow(static_cast<unsigned long>(m),
                                                     static_cast<unsigned long>(k)));
    return r;
}

namespace detail {

TruncatedSeries series_integrate(const TruncatedSeries &a) {
    TruncatedSeries r(a.order() + 1);
    for (int i = 0; i <= a.order(); ++i)
        r[i + 1] = a[i] / Rational(i + 1);
    return r;
}

TruncatedSeries series_shift_down(const TruncatedSeries &a) {
    if (!a[0].is_zero())
        throw domain_error("series_shift_down: constant term must vanish");
    TruncatedSeries r(std::max(0, a.order() - 1));
    for (int i = 1; i <= a.order(); ++i) r[i - 1] = a[i];
    return r;
}

TruncatedSeries series_invert_unit(const TruncatedSeries &a) {
    if (a[0].is_zero())
        throw domain_error("series_invert_unit: series is not a unit");
    const int n = a.order();
    TruncatedSeries r(n);
    const Rational inv0 = Rational(1) / a[0];
    r[0] = inv0;
    for (int m = 1; m <= n; ++m) {
        Rational acc(0);
        for (int i = 1; i <= m; ++i) {
            if (a[i].is_zero()) continue;
            acc += a[i] * r[m - i];
        }
        r[m] = -(acc * inv0);
    }
    return r;
}

TruncatedSeries expm1_over_t(int order) {
    TruncatedSeries r(order);
    mpz_class fact(1); // (m+1)!
    for (int m = 0; m <= order; ++m) {
        fact *= (m + 1);
        r[m] = Rational(mpz_class(1), fact);
    }
    return r;
}

} // namespace detail

namespace {

std::mutex g_bernoulli_mu;
std::vector<Rational> g_bernoulli;

void ensure_bernoulli(int count) {
    if (static_cast<int>(g_bernoulli.size()) >= count + 1) return;
    TruncatedSeries gf = detail::series_invert_unit(detail::expm1_over_t(count));
    g_bernoulli.assign(gf.coeffs().begin(), gf.coeffs().end());
    mpz_class fact(1);
    for (int m = 1; m <= count; ++m) {
        fact *= m;
        g_bernoulli[static_cast<size_t>(m)] *= Rational(fact);
    }
}

} // namespace

std::vector<Rational> bernoulli_numbers(int count) {
    std::lock_guard<std::mutex> lock(g_bernoulli_mu);
    ensure_bernoulli(std::max(count, 64));
    return std::vector<Rational>(g_bernoulli.begin(), g_bernoulli.begin() + count + 1);
}

Rational bernoulli_number(int n) {
    std::lock_guard<std::mutex> lock(g_bernoulli_mu);
    if (static_cast<int>(g_bernoulli.size()) < n + 1)
        ensure_bernoulli(std::max(2 * n, 64));
    return g_bernoulli[static_cast<size_t>(n)];
}

} // namespace mtzeta
