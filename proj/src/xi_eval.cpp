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

#include <map>
#include <mutex>
#include <sstream>

#include "mtzeta/mt_eval.hpp"
#include "mtzeta/quadrature.hpp"

namespace mtzeta {

namespace detail {

namespace {

std::mutex g_coeff_mu;
std::map<std::string, std::vector<Rational>> g_xi_coeffs;

std::string indices_key(const std::vector<IndexVector> &ks) {
    std::string s;
    for (const auto &k : ks) s += k.str() + "*";
    return s;
}

// Lambda_k(1-e^{-t}) as a truncated rational series, through the
// derivative recursion on the trailing exponent.
TruncatedSeries lambda_composed_series(const IndexVector &k, int order) {
    TruncatedSeries P = polylog_of_one_minus_exp_neg(k.entries[0], order);
    for (size_t j = 1; j < k.entries.size(); ++j)
        P = series_mul(P, polylog_of_one_minus_exp_neg(k.entries[j], order));
    const int c = k.tail.value_or(0);
    if (c == 0) return P;
    TruncatedSeries B = detail::series_invert_unit(detail::expm1_over_t(order));
    for (int j = 1; j <= c; ++j) {
        TruncatedSeries deriv = series_mul(detail::series_shift_down(P), B.truncated(order - 1));
        P = detail::series_integrate(deriv).truncated(order);
    }
    return P;
}

} // namespace

const std::vector<Rational> &xi_taylor_coeffs(const IndexVector &k, int order) {
    std::lock_guard<std::mutex> lock(g_coeff_mu);
    std::string key = "xi:" + k.str();
    auto it = g_xi_coeffs.find(key);
    if (it == g_xi_coeffs.end() || static_cast<int>(it->second.size()) < order + 1) {
        TruncatedSeries prod = polylog_of_one_minus_exp_neg(k.entries[0], order + 1);
        for (size_t j = 1; j < k.entries.size(); ++j)
            prod = series_mul(prod, polylog_of_one_minus_exp_neg(k.entries[j], order + 1));
        TruncatedSeries gf = series_div_by_expm1(prod);
        auto res = g_xi_coeffs.insert_or_assign(key, gf.coeffs());
        it = res.first;
    }
    return it->second;
}

const std::vector<Rational> &xi_g_taylor_coeffs(const std::vector<IndexVector> &ks, int order) {
    std::lock_guard<std::mutex> lock(g_coeff_mu);
    std::string key = "xig:" + indices_key(ks);
    auto it = g_xi_coeffs.find(key);
    if (it == g_xi_coeffs.end() || static_cast<int>(it->second.size()) < order + 1) {
        TruncatedSeries prod = lambda_composed_series(ks[0], order + 1);
        for (size_t i = 1; i < ks.size(); ++i)
            prod = series_mul(prod, lambda_composed_series(ks[i], order + 1));
        TruncatedSeries gf = series_div_by_expm1(prod);
        auto res = g_xi_coeffs.insert_or_assign(key, gf.coeffs());
        it = res.first;
    }
    return it->second;
}

} // namespace detail

namespace {

// numerator of the Mellin integrand at z = 1-x (x = e^{-t}), with omz = x
using TailNumerator = std::function<std::pair<BigReal, BigReal>(const BigReal &z,
                                                                const BigReal &omz)>;

struct XiCore {
    BigComplex value;
    BigReal error;
};

// Gamma(s) xi(s) = sum_{n<=N} c_n split^{s+n}/(s+n)  +  int_{split}^inf ...,
// continued in s; the series tail is bounded by a geometric fit to the
// computed coefficients (heuristic).
XiCore xi_split_core(const std::vector<Rational> &coeffs, int N, const BigComplex &s,
                     const TailNumerator &num, const BigReal &split, long bits) {
    // series part
    std::vector<BigReal> c(static_cast<size_t>(N) + 1, BigReal(0L, bits));
    for (int n = 0; n <= N; ++n) c[static_cast<size_t>(n)] = BigReal(coeffs[static_cast<size_t>(n)], bits);

    const bool unit_split = (split == BigReal(1L, bits));
    BigComplex split_pow_s =
        unit_split ? BigComplex(1, bits) : pow_complex(split, s); // split^{s+n} tracker
    BigComplex series_sum(0, bits);
    for (int n = 0; n <= N; ++n) {
        const BigComplex denom = s + BigComplex(n, bits);
        if (denom.is_zero())
            throw domain_error("xi evaluation: pole of the split series at s = -" +
                               std::to_string(n) + " (use the exact negative-integer value)");
        if (!c[static_cast<size_t>(n)].is_zero())
            series_sum += split_pow_s * c[static_cast<size_t>(n)] / denom;
        if (!unit_split) split_pow_s = split_pow_s * split;
    }
    // geometric model of the remaining coefficients
    BigReal q(0.05, bits), chat(0L, bits);
    {
        const int w0 = std::max(1, N - 16);
        for (int n = w0; n <= N; ++n) {
            const BigReal a = c[static_cast<size_t>(n)].abs();
            if (a.is_zero()) continue;
            // |c_n|^{1/n}
            BigReal root = (a.log() / BigReal(n, bits)).exp();
            if (root > q) q = root;
        }
        if (q > BigReal(0.55, bits)) q = BigReal(0.55, bits);
        for (int n = w0; n <= N; ++n) {
            const BigReal a = c[static_cast<size_t>(n)].abs();
            if (a.is_zero()) continue;
            BigReal cand = a / q.pow_si(n);
            if (cand > chat) chat = cand;
        }
        if (chat.is_zero()) chat = BigReal(1L, bits);
    }
    const BigReal qs = q * split;
    BigReal dist = s.re() + BigReal(N + 1, bits);
    if (dist < 1) dist = BigReal(1L, bits);
    BigReal series_err = BigReal(64L, bits) * chat * qs.pow_si(N + 1) /
                         ((BigReal(1L, bits) - qs) * dist);

    // tail integral over x in (0, e^{-split})
    const BigReal X = (-split).exp();
    const BigReal one_minus_X = BigReal(1L, bits) - X;
    const BigComplex s_m1 = s - BigComplex(1, bits);
    const bool s_is_one = s_m1.is_zero();
    Integrand f = [&](const BigReal &x, const BigReal &xtr) -> BigComplex {
        const BigReal omx = one_minus_X + xtr; // 1 - x without cancellation
        auto [nv, ne] = num(omx, x);
        const BigReal base = nv / omx;
        if (s_is_one) return BigComplex(base);
        const BigReal L = -(x.log());
        return pow_complex(L, s_m1) * base;
    };
    const BigReal tol = BigReal::pow2(-bits + 16, bits);
    ValueWithError T = tanh_sinh(f, X, bits, tol);

    XiCore out{series_sum + T.estimate, series_err + T.abs_error};
    return out;
}

ValueWithError xi_eval_at(const IndexVector &k, const BigComplex &s_in, const BigReal &split,
                          long bits) {
    const int N = static_cast<int>((static_cast<double>(bits) + 24.0) * 0.631) + 8;
    const std::vector<Rational> &coeffs = detail::xi_taylor_coeffs(k, N);
    const BigComplex s = s_in.round_to(bits);
    TailNumerator num = [&](const BigReal &z, const BigReal &omz) {
        BigReal prod(1L, bits), err(0L, bits);
        for (int kj : k.entries) {
            auto [v, e] = detail::polylog_real(kj, z, omz, bits);
            err = err * v.abs() + prod.abs() * e;
            prod *= v;
        }
        return std::make_pair(prod, err);
    };
    XiCore core = xi_split_core(coeffs, N, s, num, split, bits);
    ValueWithError G = detail::gamma_work(s, bits);
    BigComplex val = core.value / G.estimate;
    BigReal err = (core.error + val.abs() * G.abs_error) / G.estimate.abs();
    return ValueWithError(val, err, false);
}

std::mutex g_xi_cache_mu;
std::map<std::string, ValueWithError> g_xi_cache;

std::string xi_key(const std::string &tag, const std::string &idx, const BigComplex &s,
                   const BigReal &split, long prec) {
    std::ostringstream os;
    os << tag << ':' << idx << ';' << s.re().str(40) << '|' << s.im().str(40) << '|'
       << split.str(20) << '@' << prec;
    return os.str();
}

} // namespace

ValueWithError xi_mt_eval_split(const XiArgument &arg, long prec, const BigReal &split) {
    arg.index.require_positive("xi_mt_eval");
    if (arg.index.tail.has_value())
        throw domain_error("xi_mt_eval: index must not carry a trailing exponent");
    const long bits = prec + kGuardBits;
    const int r = arg.index.depth();
    if (!(arg.s.re() > BigReal(1 - r, bits)))
        throw domain_error("xi_mt_eval: outside the region Re(s) > 1 - r");
    if (split.sign() <= 0 || split > 2)
        throw domain_error("xi_mt_eval: split point must lie in (0, 2]");
    const std::string key = xi_key("xi", arg.index.str(), arg.s, split, prec);
    {
        std::lock_guard<std::mutex> lock(g_xi_cache_mu);
        auto it = g_xi_cache.find(key);
        if (it != g_xi_cache.end()) return it->second;
    }
    ValueWithError out = xi_eval_at(arg.index, arg.s, split.round_to(bits), bits);
    std::lock_guard<std::mutex> lock(g_xi_cache_mu);
    g_xi_cache.emplace(key, out);
    return out;
}

ValueWithError xi_mt_eval(const XiArgument &arg, long prec) {
    return xi_mt_eval_split(arg, prec, BigReal(1L, prec + kGuardBits));
}

Rational xi_mt_negative_integer(const IndexVector &k, long m) {
    k.require_positive("xi_mt_negative_integer");
    if (m < 0) throw domain_error("xi_mt_negative_integer: m must be >= 0");
    std::vector<Rational> c = akmt_coefficients(k, static_cast<int>(m));
    Rational v = c[static_cast<size_t>(m)];
    return (m % 2 == 0) ? v : -v;
}

ValueWithError xi_mt_continuation_probe(const IndexVector &k, long m, const BigReal &h,
                                        long prec) {
    k.require_positive("xi_mt_continuation_probe");
    if (m < 0) throw domain_error("xi_mt_continuation_probe: m must be >= 0");
    if (h.sign() <= 0 || h >= BigReal(0.5, h.prec()))
        throw domain_error("xi_mt_continuation_probe: requires 0 < h < 1/2");
    const long bits = prec + kGuardBits;
    const BigComplex s(BigReal(-m, bits) + h.round_to(bits));
    return xi_eval_at(k, s, BigReal(1L, bits), bits);
}

ValueWithError xi_mt_g_eval(const XiGArgument &arg, long prec) {
    const long bits = prec + kGuardBits;
    if (arg.indices.empty()) {
        // xi_{MT,0}(; s) = zeta(s)
        return riemann_zeta(arg.s, prec);
    }
    long r_total = 0;
    for (const auto &k : arg.indices) {
        k.require_with_tail("xi_mt_g_eval");
        r_total += k.depth();
    }
    if (!(arg.s.re() > BigReal(1 - r_total, bits)))
        throw domain_error("xi_mt_g_eval: outside the region Re(s) > 1 - sum r_i");
    const std::string key = xi_key("xig", detail::indices_key(arg.indices), arg.s,
                                   BigReal(1L, bits), prec);
    {
        std::lock_guard<std::mutex> lock(g_xi_cache_mu);
        auto it = g_xi_cache.find(key);
        if (it != g_xi_cache.end()) return it->second;
    }
    const int N = static_cast<int>((static_cast<double>(bits) + 24.0) * 0.631) + 8;
    const std::vector<Rational> &coeffs = detail::xi_g_taylor_coeffs(arg.indices, N);
    const BigComplex s = arg.s.round_to(bits);
    TailNumerator num = [&](const BigReal &z, const BigReal &omz) {
        BigReal prod(1L, bits), err(0L, bits);
        for (const auto &k : arg.indices) {
            ValueWithError lv = detail::lambda_point(k, z, omz, bits);
            const BigReal v = lv.estimate.re();
            err = err * v.abs() + prod.abs() * lv.abs_error;
            prod *= v;
        }
        return std::make_pair(prod, err);
    };
    XiCore core = xi_split_core(coeffs, N, s, num, BigReal(1L, bits), bits);
    ValueWithError G = detail::gamma_work(s, bits);
    BigComplex val = core.value / G.estimate;
    BigReal err = (core.error + val.abs() * G.abs_error) / G.estimate.abs();
    ValueWithError out(val, err, false);
    std::lock_guard<std::mutex> lock(g_xi_cache_mu);
    g_xi_cache.emplace(key, out);
    return out;
}

} // namespace mtzeta
