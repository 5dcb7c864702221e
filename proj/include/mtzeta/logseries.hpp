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

#ifndef MTZETA_LOGSERIES_HPP
#define MTZETA_LOGSERIES_HPP

#include <vector>

#include "mtzeta/bigreal.hpp"

namespace mtzeta {
namespace detail {

/// Truncated expansion sum_{p<=P} sum_{n<=N} c[p][n] v^n ln^p(1/v):
/// the natural expansion class at a logarithmic singularity v = 0.
/// Closed under multiplication and under integration from 0, which is
/// what the trailing-exponent recursion for Lambda needs.
class LogSeries {
public:
    LogSeries(int order, long bits)
        : order_(order), bits_(bits), cols_(1, col(static_cast<size_t>(order) + 1, BigReal(0L, bits))) {}

    int order() const { return order_; }
    int log_degree() const { return static_cast<int>(cols_.size()) - 1; }
    long bits() const { return bits_; }

    const BigReal &at(int p, int n) const { return cols_[static_cast<size_t>(p)][static_cast<size_t>(n)]; }
    BigReal &at(int p, int n) {
        if (p > log_degree()) cols_.resize(static_cast<size_t>(p) + 1,
                                           col(static_cast<size_t>(order_) + 1, BigReal(0L, bits_)));
        return cols_[static_cast<size_t>(p)][static_cast<size_t>(n)];
    }

    /// Pure power series embedding (log degree 0).
    static LogSeries from_power(const std::vector<BigReal> &coeffs, long bits);
    /// The element ln(1/v).
    static LogSeries log_inv(int order, long bits);
    static LogSeries constant(const BigReal &c, int order, long bits);

    LogSeries operator+(const LogSeries &o) const;
    LogSeries operator-(const LogSeries &o) const;
    LogSeries operator*(const LogSeries &o) const;
    LogSeries scaled(const BigReal &c) const;

    /// integral from 0 to v:
    /// int_0^v u^n ln^p(1/u) du = v^{n+1} sum_{t<=p} (p!/t!) ln^t(1/v)/(n+1)^{p-t+1}
    LogSeries integral() const;

    /// Evaluate at 0 < v < 1 together with a heuristic truncation bound
    /// read off the top coefficients.
    std::pair<BigReal, BigReal> eval(const BigReal &v) const;

private:
    using col = std::vector<BigReal>;
    int order_;
    long bits_;
    std::vector<col> cols_; // cols_[p][n]
};

/// Power-series helpers over BigReal (dense, truncated).
std::vector<BigReal> fseries_mul(const std::vector<BigReal> &a, const std::vector<BigReal> &b,
                                 int order, long bits);
std::vector<BigReal> fseries_log_unit(const std::vector<BigReal> &a, int order, long bits);

/// Li_k(1 - v) expanded at v = 0 as a LogSeries (k >= 1).
LogSeries polylog_at_one(int k, int order, long bits);

} // namespace detail
} // namespace mtzeta

#endif
