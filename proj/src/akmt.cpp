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

#include "mtzeta/akmt.hpp"

#include <algorithm>

namespace mtzeta {

TruncatedSeries polylog_of_one_minus_exp_neg(int k, int order) {
    if (k < 1) throw domain_error("polylog_of_one_minus_exp_neg: weight must be >= 1");
    // L_1(t) = t exactly.
    TruncatedSeries L(order);
    if (order >= 1) L[1] = Rational(1);
    if (k == 1) return L;
    // Bose kernel 1/(e^t - 1) = (1/t) * B(t) with B the Bernoulli gf; we
    // keep B and do the 1/t shift inside the recursion to stay polynomial.
    TruncatedSeries B = detail::series_invert_unit(detail::expm1_over_t(order));
    for (int j = 2; j <= k; ++j) {
        // L_j' = L_{j-1} / (e^t - 1) = (L_{j-1}/t) * B(t)
        TruncatedSeries deriv = series_mul(detail::series_shift_down(L), B.truncated(order - 1));
        L = detail::series_integrate(deriv).truncated(order);
    }
    return L;
}

std::vector<Rational> akmt_coefficients(const IndexVector &k, int count) {
    k.require_positive("akmt_coefficients");
    const int n = count + 1; // numerator order; division by e^t-1 drops one
    TruncatedSeries prod = polylog_of_one_minus_exp_neg(k.entries[0], n);
    for (size_t j = 1; j < k.entries.size(); ++j)
        prod = series_mul(prod, polylog_of_one_minus_exp_neg(k.entries[j], n));
    TruncatedSeries gf = series_div_by_expm1(prod);
    std::vector<Rational> c(static_cast<size_t>(count) + 1);
    mpz_class fact(1);
    for (int m = 0; m <= count; ++m) {
        if (m > 0) fact *= m;
        c[static_cast<size_t>(m)] = gf[m] * Rational(fact);
    }
    return c;
}

std::vector<Rational> polylog_product_coefficients(const std::vector<int> &ks, int count) {
    if (ks.empty()) throw domain_error("polylog_product_coefficients: empty exponent list");
    for (int k : ks)
        if (k < 0) throw domain_error("polylog_product_coefficients: exponents must be >= 0");
    std::vector<Rational> acc(static_cast<size_t>(count) + 1);
    // depth-1 base: coefficient of z^m is 1/m^{k}
    for (int m = 1; m <= count; ++m)
        acc[static_cast<size_t>(m)] =
            Rational(mpz_class(1), Rational::ipow(static_cast<unsigned long>(m),
                                                  static_cast<unsigned long>(ks[0])));
    for (size_t j = 1; j < ks.size(); ++j) {
        std::vector<Rational> next(static_cast<size_t>(count) + 1);
        for (int m = 1; m <= count; ++m) {
            if (acc[static_cast<size_t>(m)].is_zero()) continue;
            for (int i = 1; m + i <= count; ++i) {
                next[static_cast<size_t>(m + i)] +=
                    acc[static_cast<size_t>(m)] *
                    Rational(mpz_class(1), Rational::ipow(static_cast<unsigned long>(i),
                                                          static_cast<unsigned long>(ks[j])));
            }
        }
        acc = std::move(next);
    }
    return acc;
}

std::vector<Rational> lambda_coefficients(const IndexVector &k, int count) {
    k.require_with_tail("lambda_coefficients");
    std::vector<Rational> b = polylog_product_coefficients(k.entries, count);
    const int tail = *k.tail;
    if (tail > 0) {
        for (int m = 1; m <= count; ++m)
            b[static_cast<size_t>(m)] /=
                Rational(Rational::ipow(static_cast<unsigned long>(m),
                                        static_cast<unsigned long>(tail)));
    }
    return b;
}

bool check_lambda_derivative(const IndexVector &k, int order) {
    k.require_with_tail("check_lambda_derivative");
    if (*k.tail < 1)
        throw domain_error("check_lambda_derivative: trailing exponent must be >= 1");
    const std::vector<Rational> b = lambda_coefficients(k, order);
    std::vector<Rational> rhs;
    if (*k.tail >= 2) {
        IndexVector lowered = k;
        lowered.tail = *k.tail - 1;
        rhs = lambda_coefficients(lowered, order);
    } else {
        rhs = polylog_product_coefficients(k.entries, order);
    }
    for (int m = k.depth(); m <= order; ++m) {
        if (Rational(m) * b[static_cast<size_t>(m)] != rhs[static_cast<size_t>(m)])
            return false;
    }
    return true;
}

} // namespace mtzeta
