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

#ifndef MTZETA_SERIES_HPP
#define MTZETA_SERIES_HPP

#include <vector>

#include "mtzeta/rational.hpp"

namespace mtzeta {

/// Formal power series over Rational, truncated after t^order.
///
/// Every coefficient with index <= order() is exact.  Arithmetic between
/// series of different orders truncates to the smaller order, so a result
/// never claims more exact coefficients than its inputs can support.
class TruncatedSeries {
public:
    TruncatedSeries() : coeffs_(1) {}
    explicit TruncatedSeries(int order) : coeffs_(static_cast<size_t>(order) + 1) {}
    explicit TruncatedSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) coeffs_.resize(1);
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rational &operator[](int i) const { return coeffs_[static_cast<size_t>(i)]; }
    Rational &operator[](int i) { return coeffs_[static_cast<size_t>(i)]; }
    const std::vector<Rational> &coeffs() const { return coeffs_; }

    bool is_zero() const {
        for (const auto &c : coeffs_)
            if (!c.is_zero()) return false;
        return true;
    }

    /// Copy truncated (or zero-padded, marking higher orders exact only
    /// when the series really is a polynomial) to the given order.
    TruncatedSeries truncated(int new_order) const;

private:
    std::vector<Rational> coeffs_; // coefficient of t^0 .. t^order
};

TruncatedSeries series_add(const TruncatedSeries &a, const TruncatedSeries &b);
TruncatedSeries series_sub(const TruncatedSeries &a, const TruncatedSeries &b);

/// Cauchy product, truncated at min(a.order, b.order).
TruncatedSeries series_mul(const TruncatedSeries &a, const TruncatedSeries &b);

/// outer(inner(t)) for inner with zero constant term; Horner evaluation.
/// Throws domain_error when inner(0) != 0.
TruncatedSeries series_compose(const TruncatedSeries &outer, const TruncatedSeries &inner);

/// a(t) / (e^t - 1) for a with zero constant term; result order = a.order - 1.
/// Throws domain_error when a(0) != 0.
TruncatedSeries series_div_by_expm1(const TruncatedSeries &a);

/// u(t) = 1 - e^{-t} up to the given order.
TruncatedSeries one_minus_exp_neg(int order);

/// Li_k(z) = sum_{m>=1} z^m / m^k as a series in z, k >= 0 (k = 0 gives z/(1-z)).
TruncatedSeries polylog_series(int k, int order);

namespace detail {

/// Antiderivative with zero constant term; order grows by one.
TruncatedSeries series_integrate(const TruncatedSeries &a);

/// a(t)/t for a with zero constant term; order shrinks by one.
TruncatedSeries series_shift_down(const TruncatedSeries &a);

/// Multiplicative inverse of a unit series (a(0) != 0).
TruncatedSeries series_invert_unit(const TruncatedSeries &a);

/// (e^t - 1)/t = sum_{m>=0} t^m/(m+1)!.
TruncatedSeries expm1_over_t(int order);

} // namespace detail

/// B_0 .. B_count from t/(e^t - 1)  (B_1 = -1/2 convention).
std::vector<Rational> bernoulli_numbers(int count);

/// Single Bernoulli number B_n (cached).
Rational bernoulli_number(int n);

} // namespace mtzeta

#endif
