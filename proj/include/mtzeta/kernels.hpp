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

#ifndef MTZETA_KERNELS_HPP
#define MTZETA_KERNELS_HPP

#include <utility>

#include "mtzeta/value_with_error.hpp"

namespace mtzeta {

/// Guard bits added on top of the requested target precision by every
/// evaluator in the library; absorbs cancellation in downstream linear
/// combinations.
inline constexpr long kGuardBits = 32;

/// zeta(s) for Re(s) > 1, Euler-Maclaurin with rigorous remainder bound.
ValueWithError riemann_zeta(const BigComplex &s, long prec);

/// Hurwitz zeta sum_{n>=0} (n+a)^{-s} for Re(s) > 1, a > 0.
ValueWithError hurwitz_zeta(const BigComplex &s, const BigReal &a, long prec);

/// Li_k(x) = sum_{m>=1} x^m/m^k for k >= 1 and 0 <= x < 1.
ValueWithError polylog_point(int k, const BigReal &x, long prec);

/// Gamma(s) away from the poles at s = 0, -1, -2, ...; recurrence shift
/// into a precision-dependent right half-plane followed by the Stirling
/// series with explicit remainder control.
ValueWithError gamma(const BigComplex &s, long prec);

/// Rising factorial (s)_j = s (s+1) ... (s+j-1); (s)_0 = 1.
/// Computed by direct product, never through Gamma ratios.
ValueWithError pochhammer(const BigComplex &s, long j, long prec);

namespace detail {

/// sum_{j>=0} (b+j)^{-s} for real b >= 1, Re(s) > 1: Euler-Maclaurin
/// closed tail with rigorous remainder.  The number of correction terms
/// adapts to the tolerance; the achieved bound is returned (it may
/// exceed `tol` when b is too small -- callers grow their cutoff then).
ValueWithError em_power_tail(const BigComplex &s, const BigReal &b, long bits, const BigReal &tol);

/// sum_{j>=0} (b+j)^{-s} ln(b+j), same contract as em_power_tail.
ValueWithError em_power_log_tail(const BigComplex &s, const BigReal &b, long bits,
                                 const BigReal &tol);

/// zeta(n) for integer n >= 2 at working precision `bits` (cached).
BigReal zeta_int(int n, long bits);

/// Exact zeta at nonpositive integers: zeta(0) = -1/2,
/// zeta(-n) = -B_{n+1}/(n+1).
Rational zeta_nonpos_int(int n);

/// Exact harmonic number H_n.
Rational harmonic(int n);

/// Li_k(x) for k >= 0, 0 <= x < 1, with omx = 1-x supplied by the caller
/// so that arguments exponentially close to 1 lose nothing.  Returns the
/// value and a rigorous absolute error bound at working precision
/// `bits`.  Direct series for x <= 1/2; the expansion in powers of
/// ln(x) otherwise.
std::pair<BigReal, BigReal> polylog_real(int k, const BigReal &x, const BigReal &omx, long bits);

/// Gamma at raw working precision (no extra guard bits added).
ValueWithError gamma_work(const BigComplex &s, long bits);

/// |(s)_j| and (s)_j helpers at working precision.
BigComplex pochhammer_work(const BigComplex &s, long j, long bits);

} // namespace detail

} // namespace mtzeta

#endif
