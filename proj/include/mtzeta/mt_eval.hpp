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

#ifndef MTZETA_MT_EVAL_HPP
#define MTZETA_MT_EVAL_HPP

#include <optional>
#include <vector>

#include "mtzeta/akmt.hpp"
#include "mtzeta/kernels.hpp"

namespace mtzeta {

/// Argument pack of the Mordell-Tornheim r-ple zeta sum
///   sum 1/(m_1^{s_1} ... m_r^{s_r} (m_1+...+m_r)^{s_{r+1}}).
/// When all of s_1..s_r are nonnegative integers the fast evaluation
/// paths apply; the brute-force oracle also accepts complex exponents.
struct MTArgument {
    std::vector<BigComplex> exponents;
    BigComplex last;
    std::optional<std::vector<int>> int_exponents;

    MTArgument(std::vector<int> ks, BigComplex s_last);
    MTArgument(std::initializer_list<int> ks, BigComplex s_last)
        : MTArgument(std::vector<int>(ks), std::move(s_last)) {}
    MTArgument(std::vector<BigComplex> ss, BigComplex s_last);

    int depth() const { return static_cast<int>(exponents.size()); }
    int zero_count() const;
    long weight() const; // sum of integer exponents (fast path only)
};

/// Arguments of the Mordell-Tornheim Arakawa-Kaneko function xi_MT(k; s),
/// defined for Re(s) > 1 - r.
struct XiArgument {
    IndexVector index; // all entries >= 1, no trailing exponent
    BigComplex s;
};

/// Arguments of the generalized function xi_{MT,g}(k_1,...,k_g; s);
/// each index carries a trailing exponent >= 0; empty list means g = 0
/// with the convention xi_{MT,0}(;s) = zeta(s).
struct XiGArgument {
    std::vector<IndexVector> indices;
    BigComplex s;
};

/// Brute-force nested summation over the box m_j <= cutoff with a
/// rigorous composition-count tail bound.  Depth r <= 4.  When tol is
/// given and the tail bound exceeds it, throws precision_error.
ValueWithError mt_zeta_oracle(const MTArgument &arg, long cutoff, long prec,
                              const std::optional<BigReal> &tol = std::nullopt);

/// Production evaluator for integer exponents.  Dispatches to the
/// accelerated-summation path (trailing zero exponent present) or to the
/// Mellin-integral quadrature path.
ValueWithError mt_zeta_fast(const MTArgument &arg, long prec);

/// Quadrature route: (1/Gamma(s)) int_0^1 (-ln x)^{s-1} prod_j Li_{k_j}(x) dx/x.
ValueWithError mt_zeta_quadrature(const MTArgument &arg, long prec);

/// Summation route for arguments with at least one zero exponent among
/// s_1..s_r (at most two nonzero entries): Euler-Maclaurin recursion over
/// the zero slot down to Dirichlet-series bases, everything with rigorous
/// remainder bounds.
ValueWithError mt_zeta_sum(const MTArgument &arg, long prec);

/// xi_MT(k; s) by the split-Mellin strategy: exact power series of the
/// integrand on [0, split], doubly-exponential quadrature on [split, inf).
ValueWithError xi_mt_eval(const XiArgument &arg, long prec);
ValueWithError xi_mt_eval_split(const XiArgument &arg, long prec, const BigReal &split);

/// Exact value xi_MT(k; -m) = (-1)^m C^k_{m,MT}.
Rational xi_mt_negative_integer(const IndexVector &k, long m);

/// xi_MT(k; -m + h) through the continued split-Mellin series; as h -> 0
/// this approaches the exact negative-integer value.
ValueWithError xi_mt_continuation_probe(const IndexVector &k, long m, const BigReal &h,
                                        long prec);

/// Lambda_k(z) = sum over (m_1..m_r) of z^{sum m} / (prod m^{k_j} (sum m)^{k_{r+1}}).
ValueWithError lambda_eval(const IndexVector &k, const BigReal &z, long prec);

/// xi_{MT,g}(k_1,...,k_g; s); same split strategy as xi_mt_eval.
ValueWithError xi_mt_g_eval(const XiGArgument &arg, long prec);

/// Euler double zeta zeta(a,b) = sum_{m>n>=1} m^{-a} n^{-b}; a >= 2, b >= 1.
ValueWithError euler_double_zeta(long a, long b, long prec);

/// Closed form for the double zeta of odd weight M = a+b (the [BBB]
/// evaluation), with the zeta(1)-carrying term removed when a = 1.
/// Under the convention frozen by this library (see README),
/// bbb_rhs(a, b) equals euler_double_zeta(b, a).
ValueWithError bbb_rhs(long a, long b, long prec);

namespace detail {

/// Linear Euler sum sum_{m>n>=1} m^{-q} n^{-i} for complex q, integer
/// i >= 1; rigorous (partial sums + closed Euler-Maclaurin tails).
ValueWithError euler_sum(const BigComplex &q, int i, long bits, const BigReal &tol);

/// Tail piece sum_{m>M} m^{-q} H^{(i)}_{m-1} of the Euler sum, closed by
/// Euler-Maclaurin expansion of the inner harmonic numbers; rigorous.
ValueWithError euler_sum_tail(const BigComplex &q, int i, long M, long bits,
                              const BigReal &tol);

/// sum_{n>K} n^{-s} ln n with rigorous bound.
ValueWithError em_log_tail_from(const BigComplex &s, long K, long bits, const BigReal &tol);

/// Tornheim double sum zeta_{MT,2}(k1,k2; v) for integer k1,k2 >= 1,
/// complex v, via the partial-fraction reduction to linear Euler sums.
ValueWithError tornheim2(int k1, int k2, const BigComplex &v, long bits, const BigReal &tol);

/// sum_{n>K} n^{-s} with rigorous bound (K = 0 gives zeta(s)).
ValueWithError zeta_tail_from(const BigComplex &s, long K, long bits, const BigReal &tol);

/// Taylor coefficients c_n of prod_j Li_{k_j}(1-e^{-t})/(e^t - 1)
/// (so c_n = C^k_{n,MT}/n!) as exact rationals, cached.
const std::vector<Rational> &xi_taylor_coeffs(const IndexVector &k, int order);

/// Taylor coefficients of prod_i Lambda_{k_i}(1-e^{-t})/(e^t - 1), cached.
const std::vector<Rational> &xi_g_taylor_coeffs(const std::vector<IndexVector> &ks, int order);

/// Lambda_k(z) given omz = 1-z exactly; dispatches between the exact
/// factorizations, the direct series, and the expansion at the z = 1
/// singularity, so z may be exponentially close to 1.
ValueWithError lambda_point(const IndexVector &k, const BigReal &z, const BigReal &omz,
                            long bits);

/// Independent slow route for Lambda via its integral representation
/// (one doubly-exponential quadrature); kept for cross-checks.
ValueWithError lambda_point_integral(const IndexVector &k, const BigReal &z,
                                     const BigReal &omz, long bits);

} // namespace detail

} // namespace mtzeta

#endif
