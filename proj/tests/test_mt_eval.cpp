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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "mtzeta/mt_eval.hpp"

using namespace mtzeta;

namespace {

constexpr long P = 256;
constexpr long W = P + kGuardBits;

BigReal zeta_re(long n) { return riemann_zeta(BigComplex(n, P), P).estimate.re(); }

BigReal diff(const ValueWithError &a, const ValueWithError &b) {
    return (a.estimate - b.estimate).abs();
}

BigReal combined(const ValueWithError &a, const ValueWithError &b) {
    return a.abs_error + b.abs_error;
}

BigReal tol10(int e) { return BigReal("1e" + std::to_string(e), W); }

} // namespace

TEST_CASE("oracle: depth-1 collapse and classical values") {
    // zeta_MT,1(s1; s2) = zeta(s1+s2) at (2;2)
    ValueWithError v = mt_zeta_oracle(MTArgument({2}, BigComplex(2, W)), 4000, P);
    ValueWithError z4 = riemann_zeta(BigComplex(4, W), P);
    CHECK(diff(v, z4) <= combined(v, z4));
    CHECK(v.rigorous);

    // zeta_MT,1(1; 1) = zeta(2)
    ValueWithError w = mt_zeta_oracle(MTArgument({1}, BigComplex(1, W)), 200000, P);
    ValueWithError z2 = riemann_zeta(BigComplex(2, W), P);
    CHECK(diff(w, z2) <= combined(w, z2));

    // tolerance plumbing: an impossible tolerance raises
    CHECK_THROWS_AS(mt_zeta_oracle(MTArgument({2}, BigComplex(2, W)), 100, P,
                                   std::optional<BigReal>(BigReal("1e-40", W))),
                    precision_error);
    // divergent argument rejected (sum over m^{-1} m^{0})
    CHECK_THROWS_AS(mt_zeta_oracle(MTArgument({1}, BigComplex(0, W)), 100, P),
                    convergence_error);
}

TEST_CASE("oracle vs fast: cross-checks") {
    // (2,2;2)
    ValueWithError o = mt_zeta_oracle(MTArgument({2, 2}, BigComplex(2, W)), 1200, P);
    ValueWithError f = mt_zeta_fast(MTArgument({2, 2}, BigComplex(2, W)), P);
    CHECK(diff(o, f) <= combined(o, f));

    // zero-exponent handling: (0,2;3) matches the oracle, and the two
    // production routes agree with each other far below the oracle bound
    MTArgument a02({0, 2}, BigComplex(3, W));
    ValueWithError os = mt_zeta_oracle(a02, 1200, P);
    ValueWithError fs = mt_zeta_sum(a02, P);
    ValueWithError fq = mt_zeta_quadrature(a02, P);
    CHECK(diff(os, fs) <= combined(os, fs));
    CHECK(diff(fs, fq) <= combined(fs, fq) + tol10(-70));
}

TEST_CASE("fast path: paper examples") {
    // zeta_MT,3(2,1,1;1) = 2 zeta(2) zeta(3) - zeta(5)
    ValueWithError v = mt_zeta_fast(MTArgument({2, 1, 1}, BigComplex(1, W)), P);
    BigReal truth = zeta_re(2) * zeta_re(3) * 2L - zeta_re(5);
    CHECK((v.estimate.re() - truth).abs() <= tol10(-20));

    // zeta_MT,2(1,1;1) = 2 zeta(3)
    ValueWithError w = mt_zeta_fast(MTArgument({1, 1}, BigComplex(1, W)), P);
    CHECK((w.estimate.re() - zeta_re(3) * 2L).abs() <= tol10(-20));

    // convergence precondition
    CHECK_THROWS_AS(mt_zeta_fast(MTArgument({0, 2}, BigComplex(1, W)), P), convergence_error);
}

TEST_CASE("summation route equals quadrature route on the trailing-zero family") {
    const std::vector<std::pair<std::vector<int>, BigComplex>> args = {
        {{2, 0}, BigComplex(3, W)},
        {{1, 0}, BigComplex(4, W)},
        {{2, 2, 0}, BigComplex(4, W)},
        {{2, 1, 0}, BigComplex(5, W)},
        {{1, 1, 0}, BigComplex(6, W)},
        {{1, 1, 0}, BigComplex(BigReal(3L, W), BigReal(0.5, W))},
        {{0, 0}, BigComplex(3, W)},
        {{0}, BigComplex(2, W)},
    };
    for (const auto &[ks, s] : args) {
        CAPTURE(ks.size());
        ValueWithError a = mt_zeta_sum(MTArgument(ks, s), P);
        ValueWithError b = mt_zeta_quadrature(MTArgument(ks, s), P);
        CHECK(diff(a, b) <= combined(a, b) + tol10(-70));
        CHECK(a.rigorous);
    }
    // all-zero depth-2 reduces exactly: zeta_MT,2(0,0;s) = zeta(s-1) - zeta(s)
    ValueWithError v = mt_zeta_sum(MTArgument({0, 0}, BigComplex(3, W)), P);
    BigReal truth = zeta_re(2) - zeta_re(3);
    CHECK((v.estimate.re() - truth).abs() <= v.abs_error + tol10(-70));
}

TEST_CASE("permutation symmetry of the exponent tuple") {
    std::mt19937 rng(90210u);
    for (int trial = 0; trial < 6; ++trial) {
        std::vector<int> ks = {1 + static_cast<int>(rng() % 3), 1 + static_cast<int>(rng() % 3),
                               1 + static_cast<int>(rng() % 2)};
        std::vector<int> perm = ks;
        std::shuffle(perm.begin(), perm.end(), rng);
        BigComplex s(2 + static_cast<int>(rng() % 3), W);
        ValueWithError a = mt_zeta_fast(MTArgument(ks, s), P);
        ValueWithError b = mt_zeta_fast(MTArgument(perm, s), P);
        CHECK(diff(a, b) <= combined(a, b) + tol10(-60));
    }
    // oracle with complex exponents under a swap
    BigComplex e1(BigReal(1.5, W), BigReal(0.5, W));
    BigComplex e2(BigReal(2.5, W), BigReal(-0.25, W));
    ValueWithError a =
        mt_zeta_oracle(MTArgument(std::vector<BigComplex>{e1, e2}, BigComplex(3, W)), 400, P);
    ValueWithError b =
        mt_zeta_oracle(MTArgument(std::vector<BigComplex>{e2, e1}, BigComplex(3, W)), 400, P);
    CHECK(diff(a, b) <= tol10(-60));
}

TEST_CASE("xi_mt: special values and the positive-integer bridge") {
    // xi_1(s) = s zeta(s+1) at s = 2
    ValueWithError x1 = xi_mt_eval(XiArgument{IndexVector{1}, BigComplex(2, W)}, P);
    CHECK((x1.estimate.re() - zeta_re(3) * 2L).abs() <= x1.abs_error + tol10(-70));

    // xi_MT((2); 1) = zeta(3)
    ValueWithError x2 = xi_mt_eval(XiArgument{IndexVector{2}, BigComplex(1, W)}, P);
    CHECK((x2.estimate.re() - zeta_re(3)).abs() <= x2.abs_error + tol10(-70));

    // bridge: xi_MT(k; m+1) = (1/m!) zeta_MT,m+r(k_1..k_r, 1^m; 1)
    for (const auto &entries : {std::vector<int>{1}, std::vector<int>{2}, std::vector<int>{3},
                                std::vector<int>{1, 2}, std::vector<int>{2, 2},
                                std::vector<int>{3, 3}}) {
        for (int m = 0; m <= 2; ++m) {
            CAPTURE(m);
            IndexVector k(entries);
            ValueWithError lhs = xi_mt_eval(XiArgument{k, BigComplex(m + 1, W)}, P);
            std::vector<int> ks = entries;
            for (int t = 0; t < m; ++t) ks.push_back(1);
            ValueWithError mt = mt_zeta_quadrature(MTArgument(ks, BigComplex(1, W)), P);
            Rational inv_mfact(mpz_class(1), Rational::factorial(static_cast<unsigned long>(m)));
            BigComplex rhs = BigComplex(BigReal(inv_mfact, W)) * mt.estimate;
            CHECK((lhs.estimate - rhs).abs() <= lhs.abs_error + mt.abs_error + tol10(-60));
        }
    }

    // region and pole errors
    CHECK_THROWS_AS(xi_mt_eval(XiArgument{IndexVector{1}, BigComplex(0, W)}, P), domain_error);
    CHECK_THROWS_AS(xi_mt_eval(XiArgument{IndexVector{1, 1}, BigComplex(0, W)}, P),
                    domain_error); // continued series pole at s = 0
}

TEST_CASE("xi_mt split invariance") {
    XiArgument arg{IndexVector{2, 1}, BigComplex(BigReal(2.5, W))};
    ValueWithError a = xi_mt_eval_split(arg, P, BigReal(1L, W));
    ValueWithError b = xi_mt_eval_split(arg, P, BigReal(0.5, W));
    CHECK(diff(a, b) <= combined(a, b) + tol10(-65));
}

TEST_CASE("xi_mt negative integers and continuation probes") {
    CHECK(xi_mt_negative_integer(IndexVector{1}, 0) == Rational(1));
    CHECK(xi_mt_negative_integer(IndexVector{1}, 1) == Rational(1, 2));
    CHECK(xi_mt_negative_integer(IndexVector{1, 1}, 0) == Rational(0));

    // probes approach the exact values at the h-scale
    auto probe_err = [&](const IndexVector &k, int m, const char *h) {
        ValueWithError p = xi_mt_continuation_probe(k, m, BigReal(h, W), P);
        BigReal target(xi_mt_negative_integer(k, m), W);
        return (p.estimate - BigComplex(target)).abs();
    };
    CHECK(probe_err(IndexVector{1}, 1, "1e-6") <= tol10(-5));
    CHECK(probe_err(IndexVector{2}, 0, "1e-6") <= tol10(-5));
    CHECK(probe_err(IndexVector{1, 1}, 0, "1e-6") <= tol10(-5));
}

TEST_CASE("lambda evaluation") {
    // Lambda(0) = 0
    CHECK(lambda_eval(IndexVector({1, 1}, 2), BigReal(0L, P), P).estimate.is_zero());

    // r = 1 reduction: Lambda_(1;1)(1/2) = Li_2(1/2)
    ValueWithError lv = lambda_eval(IndexVector({1}, 1), BigReal(0.5, P), P);
    ValueWithError li2 = polylog_point(2, BigReal(0.5, P), P);
    CHECK(diff(lv, li2) <= combined(lv, li2) + tol10(-70));

    // (1,1;0) at z = 1/2 against a brute-force double sum
    {
        ValueWithError v = lambda_eval(IndexVector({1, 1}, 0), BigReal(0.5, P), P);
        BigReal direct(0L, W);
        BigReal half(0.5, W);
        for (long a = 1; a <= 600; ++a)
            for (long b = 1; b <= 600 - a; ++b)
                direct += half.pow_si(a + b) / BigReal(a * b, W);
        // remaining tail < 600 * 2^{-600}
        CHECK((v.estimate.re() - direct).abs() <= v.abs_error + tol10(-60));
    }

    // ordering: nondecreasing in z (positive coefficients)
    BigReal prev(-1L, P);
    for (int i = 1; i <= 9; ++i) {
        BigReal z(i * 0.1, P);
        BigReal v = lambda_eval(IndexVector({1, 2}, 1), z, P).estimate.re();
        CHECK(v >= prev);
        prev = v;
    }

    // near-1 integral representation against the closed form obtained by
    // integrating the derivative recursion for k = (1,1;1)
    for (double zv : {0.8, 0.97}) {
        BigReal z(zv, W), omz = BigReal(1L, W) - z;
        ValueWithError v = detail::lambda_point(IndexVector({1, 1}, 1), z, omz, W);
        BigReal lz = z.log(), lomz = omz.log();
        BigReal li2 = polylog_point(2, omz, P).estimate.re();
        BigReal li3 = polylog_point(3, omz, P).estimate.re();
        BigReal truth = lomz * lomz * lz + lomz * li2 * 2L - li3 * 2L + zeta_re(3) * 2L;
        CHECK((v.estimate.re() - truth).abs() <= v.abs_error + tol10(-60));
    }

    CHECK_THROWS_AS(lambda_eval(IndexVector({1, 1}, 1), BigReal(1L, P), P), domain_error);
}

TEST_CASE("xi_mt_g") {
    // g = 0 convention: zeta(s)
    ValueWithError g0 = xi_mt_g_eval(XiGArgument{{}, BigComplex(3, W)}, P);
    CHECK((g0.estimate.re() - zeta_re(3)).abs() <= g0.abs_error + tol10(-70));

    // g = 1 with trailing exponent 0 equals xi_MT
    XiGArgument g1{{IndexVector({2, 1}, 0)}, BigComplex(2, W)};
    ValueWithError a = xi_mt_g_eval(g1, P);
    ValueWithError b = xi_mt_eval(XiArgument{IndexVector{2, 1}, BigComplex(2, W)}, P);
    CHECK(diff(a, b) <= combined(a, b) + tol10(-65));

    // g = 1 instance of the product identity:
    // 2 * (1! xi_{MT,1}((1,1); 2)) = 2 zeta_MT,1(1;1)^2 / 2... direct form:
    // 1! xi_{MT,1}((1;1); 2) + 1! xi_{MT,1}((1;1); 2) = zeta_MT,1(1;1)^2
    XiGArgument h{{IndexVector({1}, 1)}, BigComplex(2, W)};
    ValueWithError xi1 = xi_mt_g_eval(h, P);
    ValueWithError mt1 = mt_zeta_quadrature(MTArgument({1}, BigComplex(1, W)), P);
    BigComplex lhs = xi1.estimate * BigReal(2L, W);
    BigComplex rhs = mt1.estimate * mt1.estimate;
    CHECK((lhs - rhs).abs() <=
          xi1.abs_error * 2L + mt1.abs_error * mt1.estimate.abs() * 3L + tol10(-60));
}

TEST_CASE("euler double zeta and the closed form") {
    // zeta(2,1) = zeta(3) to 1e-30 and far beyond
    ValueWithError e21 = euler_double_zeta(2, 1, P);
    CHECK((e21.estimate.re() - zeta_re(3)).abs() <= tol10(-30));

    // partition of the index set: zeta(a,b) + zeta(b,a) + zeta(a+b) = zeta(a) zeta(b)
    {
        ValueWithError e22 = euler_double_zeta(2, 2, P);
        BigReal lhs = e22.estimate.re() * 2L + zeta_re(4);
        CHECK((lhs - zeta_re(2) * zeta_re(2)).abs() <= e22.abs_error * 2L + tol10(-60));

        ValueWithError e23 = euler_double_zeta(2, 3, P);
        ValueWithError e32 = euler_double_zeta(3, 2, P);
        BigReal lhs2 = e23.estimate.re() + e32.estimate.re() + zeta_re(5);
        CHECK((lhs2 - zeta_re(2) * zeta_re(3)).abs() <=
              e23.abs_error + e32.abs_error + tol10(-60));
    }

    // frozen convention pin: bbb_rhs(a, b) = euler_double_zeta(b, a)
    {
        ValueWithError rhs23 = bbb_rhs(2, 3, P);
        ValueWithError ez = euler_double_zeta(3, 2, P);
        CHECK(diff(rhs23, ez) <= combined(rhs23, ez) + tol10(-60));

        // the unswapped pairing does NOT hold: guards the pin against drift
        ValueWithError ez_wrong = euler_double_zeta(2, 3, P);
        CHECK(diff(rhs23, ez_wrong) > BigReal(0.1, W));

        // a = 1 with the zeta(1)-term removed: equals zeta(2,1) = zeta(3)
        ValueWithError rhs12 = bbb_rhs(1, 2, P);
        CHECK((rhs12.estimate.re() - zeta_re(3)).abs() <= rhs12.abs_error + tol10(-60));
    }

    CHECK_THROWS_AS(euler_double_zeta(1, 2, P), convergence_error);
    CHECK_THROWS_AS(bbb_rhs(2, 2, P), domain_error);
}

TEST_CASE("error bounds hold against doubled precision") {
    auto cross = [](const ValueWithError &lo, const ValueWithError &hi) {
        CHECK((lo.estimate - hi.estimate).abs() <= lo.abs_error + hi.abs_error);
    };
    cross(mt_zeta_sum(MTArgument({2, 1, 0}, BigComplex(4, 160)), 128),
          mt_zeta_sum(MTArgument({2, 1, 0}, BigComplex(4, 288)), 256));
    cross(euler_double_zeta(3, 2, 128), euler_double_zeta(3, 2, 256));
    // heuristic bounds from quadrature should still dominate in practice
    cross(mt_zeta_quadrature(MTArgument({2, 1}, BigComplex(2, 160)), 128),
          mt_zeta_quadrature(MTArgument({2, 1}, BigComplex(2, 288)), 256));
    cross(xi_mt_eval(XiArgument{IndexVector{2}, BigComplex(2, 160)}, 128),
          xi_mt_eval(XiArgument{IndexVector{2}, BigComplex(2, 288)}, 256));
}
