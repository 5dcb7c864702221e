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

#ifndef MTZETA_AKMT_HPP
#define MTZETA_AKMT_HPP

#include <vector>

#include "mtzeta/index.hpp"
#include "mtzeta/series.hpp"

namespace mtzeta {

/// Li_k(1 - e^{-t}) as a truncated series in t, exact through `order`.
///
/// Built by the derivative recursion d/dt Li_k(1-e^{-t}) =
/// Li_{k-1}(1-e^{-t}) / (e^t - 1), starting from Li_1(1-e^{-t}) = t,
/// which is much cheaper than direct composition.  series_compose of
/// polylog_series with one_minus_exp_neg gives the same coefficients;
/// the test suite pins the two routes against each other.
TruncatedSeries polylog_of_one_minus_exp_neg(int k, int order);

/// The coefficients c_0..c_M (with c_m * m! convention) of
///   prod_j Li_{k_j}(1 - e^{-t}) / (e^t - 1) = sum_m c_m t^m / m!.
/// All entries of k must be >= 1.
std::vector<Rational> akmt_coefficients(const IndexVector &k, int count);

/// Coefficient m of prod_j Li_{k_j}(z): the depth-r convolution of the
/// sequences (1/m^{k_j})_{m>=1}; entries may be 0 (giving the all-ones
/// sequence).  Returns indices 0..count.
std::vector<Rational> polylog_product_coefficients(const std::vector<int> &ks, int count);

/// b_0..b_count of the generating function Lambda_k(z) = sum_M b_M z^M,
/// grouping the r-fold sum by the total M: b_M = (conv of polylog
/// sequences at M) * M^{-k_{r+1}}.  b_M = 0 for M < r.
std::vector<Rational> lambda_coefficients(const IndexVector &k, int count);

/// Exact coefficient-level verification of the derivative recursion for
/// Lambda_k: for every r <= M' <= order,
///   M' * b_{M'}(k)  ==  b_{M'}(k with trailing exponent lowered)   (tail >= 2)
///   M' * b_{M'}(k)  ==  [z^{M'}] prod_j Li_{k_j}(z)                 (tail == 1)
bool check_lambda_derivative(const IndexVector &k, int order);

} // namespace mtzeta

#endif
