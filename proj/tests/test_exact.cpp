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
#include <functional>
#include <random>

#include "mtzeta/akmt.hpp"
#include "mtzeta/series.hpp"

using namespace mtzeta;

namespace {

// Independent Bernoulli oracle: B_m = -1/(m+1) * sum_{j<m} C(m+1,j) B_j.
std::vector<Rational> bernoulli_by_recurrence(int count) {
    std::vector<Rational> B(static_cast<size_t>(count) + 1);
    B[0] = Rational(1);
    for (int m = 1; m <= count; ++m) {
        Rational acc(0);
        for (int j = 0; j < m; ++j)
            acc += Rational(Rational::binomial(m + 1, j)) * B[static_cast<size_t>(j)];
        B[static_cast<size_t>(m)] = -acc / Rational(m + 1);
    }
    return B;
}

// Brute-force [z^M] prod_j Li_{k_j}(z) by enumerating compositions.
Rational conv_bruteforce(const std::vector<int> &ks, int M) {
    Rational total(0);
    // enumerate all tuples of positive integers summing to M
    const int r = static_cast<int>(ks.size());
    std::function<void(int, int, Rational)> rec = [&](int pos, int remaining, Rational prod) {
        if (pos == r - 1) {
            if (remaining >= 1)
                total += prod / Rational(Rational::ipow(static_cast<unsigned long>(remaining),
                                                        static_cast<unsigned long>(ks[static_cast<size_t>(pos)])));
            return;
        }
        for (int m = 1; remaining - m >= r - pos - 1; ++m)
            rec(pos + 1, remaining - m,
                prod / Rational(Rational::ipow(static_cast<unsigned long>(m),
                                               static_cast<unsigned long>(ks[static_cast<size_t>(pos)]))));
    };
    rec(0, M, Rational(1));
    return total;
}

TruncatedSeries monomial(int degree, int order) {
    TruncatedSeries s(order);
    s[degree] = Rational(1);
    return s;
}

} // namespace

TEST_CASE("rational canonical form") {
    Rational a(2, 4);
    CHECK(a.numerator() == 1);
    CHECK(a.denominator() == 2);
    Rational b(-3, -6);
    CHECK(b.numerator() == 1);
    CHECK(b.denominator() == 2);
    Rational c(5, -10);
    CHECK(c.numerator() == -1);
    CHECK(c.denominator() == 2);
    CHECK((a + c).is_zero());
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK_THROWS_AS(Rational(1, 0), domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), domain_error);
    CHECK(Rational(-7, 3).str() == "-7/3");
    CHECK(Rational(6, 3).str() == "2");
}

TEST_CASE("series add/mul basics") {
    // (1 + t) + (1 - t) = 2
    TruncatedSeries one_plus_t({Rational(1), Rational(1)});
    TruncatedSeries one_minus_t({Rational(1), Rational(-1)});
    TruncatedSeries s = series_add(one_plus_t, one_minus_t);
    CHECK(s[0] == Rational(2));
    CHECK(s[1].is_zero());

    // 0 + a = a
    TruncatedSeries zero(1);
    TruncatedSeries a({Rational(3), Rational(1, 2)});
    TruncatedSeries id = series_add(zero, a);
    CHECK(id[0] == a[0]);
    CHECK(id[1] == a[1]);

    // t + t^2 at order >= 2
    TruncatedSeries t = monomial(1, 2), t2 = monomial(2, 2);
    TruncatedSeries sum = series_add(t, t2);
    CHECK(sum[1] == Rational(1));
    CHECK(sum[2] == Rational(1));

    // (1+t)(1-t) = 1 - t^2
    TruncatedSeries p = series_mul(one_plus_t.truncated(2), one_minus_t.truncated(2));
    CHECK(p[0] == Rational(1));
    CHECK(p[1].is_zero());
    CHECK(p[2] == Rational(-1));

    // t*t = t^2
    TruncatedSeries tt = series_mul(monomial(1, 2), monomial(1, 2));
    CHECK(tt[2] == Rational(1));

    // a*1 = a
    TruncatedSeries one(1);
    one[0] = Rational(1);
    TruncatedSeries a1 = series_mul(a, one);
    CHECK(a1[0] == a[0]);
    CHECK(a1[1] == a[1]);

    // order bookkeeping: min of operands
    CHECK(series_mul(monomial(1, 5), monomial(1, 3)).order() == 3);
    CHECK(series_add(monomial(1, 5), monomial(1, 3)).order() == 3);
}

TEST_CASE("series composition") {
    // outer = z: identity
    TruncatedSeries outer_z = monomial(1, 4);
    TruncatedSeries inner({Rational(0), Rational(1), Rational(1)});
    TruncatedSeries c = series_compose(outer_z, inner.truncated(4));
    CHECK(c[1] == Rational(1));
    CHECK(c[2] == Rational(1));
    CHECK(c[3].is_zero());

    // outer = z^2, inner = t
    TruncatedSeries c2 = series_compose(monomial(2, 3), monomial(1, 3));
    CHECK(c2[2] == Rational(1));
    CHECK(c2[1].is_zero());
    CHECK(c2[3].is_zero());

    // rejected when inner(0) != 0
    TruncatedSeries bad({Rational(1), Rational(1)});
    CHECK_THROWS_AS(series_compose(outer_z, bad), domain_error);

    // Li_1(1 - e^{-t}) = t: all coefficients above 1 cancel
    const int N = 8;
    TruncatedSeries li1 = polylog_series(1, N);
    TruncatedSeries u = one_minus_exp_neg(N);
    TruncatedSeries comp = series_compose(li1, u);
    CHECK(comp[0].is_zero());
    CHECK(comp[1] == Rational(1));
    for (int m = 2; m <= N; ++m) CHECK(comp[m].is_zero());
}

TEST_CASE("one_minus_exp_neg and polylog_series coefficients") {
    TruncatedSeries u = one_minus_exp_neg(4);
    CHECK(u[0].is_zero());
    CHECK(u[1] == Rational(1));
    CHECK(u[2] == Rational(-1, 2));
    CHECK(u[3] == Rational(1, 6));
    CHECK(u[4] == Rational(-1, 24));
    CHECK(one_minus_exp_neg(0).is_zero());

    TruncatedSeries li1 = polylog_series(1, 3);
    CHECK(li1[1] == Rational(1));
    CHECK(li1[2] == Rational(1, 2));
    CHECK(li1[3] == Rational(1, 3));

    TruncatedSeries li0 = polylog_series(0, 3);
    CHECK(li0[1] == Rational(1));
    CHECK(li0[2] == Rational(1));
    CHECK(li0[3] == Rational(1));

    CHECK(polylog_series(2, 4)[4] == Rational(1, 16));
}

TEST_CASE("division by e^t - 1") {
    // t/(e^t-1): long-division oracle at order 10
    const int N = 11;
    TruncatedSeries t = monomial(1, N);
    TruncatedSeries q = series_div_by_expm1(t);
    // oracle: q * (e^t - 1) == t, computed independently
    TruncatedSeries expm1(N);
    mpz_class fact(1);
    for (int m = 1; m <= N; ++m) {
        fact *= m;
        expm1[m] = Rational(mpz_class(1), fact);
    }
    TruncatedSeries back = series_mul(q.truncated(N), expm1);
    CHECK(back[1] == Rational(1));
    for (int m = 0; m <= q.order(); ++m)
        if (m != 1) CHECK(back[m].is_zero());
    // spot values 1, -1/2, 1/12
    CHECK(q[0] == Rational(1));
    CHECK(q[1] == Rational(-1, 2));
    CHECK(q[2] == Rational(1, 12));

    // a = t*(e^t-1)  ->  t   (shift expm1 up by one)
    TruncatedSeries te(N);
    for (int m = 1; m + 1 <= N; ++m) te[m + 1] = expm1[m];
    TruncatedSeries r = series_div_by_expm1(te);
    CHECK(r[1] == Rational(1));
    for (int m = 0; m <= r.order(); ++m)
        if (m != 1) CHECK(r[m].is_zero());

    // zero in, zero out
    CHECK(series_div_by_expm1(TruncatedSeries(5)).is_zero());

    // rejected for nonzero constant term
    TruncatedSeries bad(3);
    bad[0] = Rational(1);
    CHECK_THROWS_AS(series_div_by_expm1(bad), domain_error);
}

TEST_CASE("akmt coefficients: Bernoulli sequence for k=(1)") {
    const int M = 50;
    std::vector<Rational> c = akmt_coefficients(IndexVector{1}, M);
    std::vector<Rational> B = bernoulli_by_recurrence(M);
    for (int m = 0; m <= M; ++m) CHECK(c[static_cast<size_t>(m)] == B[static_cast<size_t>(m)]);
    CHECK(c[0] == Rational(1));
    CHECK(c[1] == Rational(-1, 2));
    CHECK(c[2] == Rational(1, 6));
    CHECK(c[3].is_zero());
    CHECK(c[4] == Rational(-1, 30));
    // library bernoulli_numbers agrees too
    std::vector<Rational> Blib = bernoulli_numbers(M);
    for (int m = 0; m <= M; ++m) CHECK(Blib[static_cast<size_t>(m)] == B[static_cast<size_t>(m)]);
}

TEST_CASE("akmt coefficients: small cases and stability") {
    CHECK(akmt_coefficients(IndexVector{1, 1}, 0)[0].is_zero());
    CHECK(akmt_coefficients(IndexVector{2}, 0)[0] == Rational(1));

    // recomputation at higher truncation order leaves lower coefficients unchanged
    std::vector<Rational> lo = akmt_coefficients(IndexVector{2, 1}, 10);
    std::vector<Rational> hi = akmt_coefficients(IndexVector{2, 1}, 25);
    for (int m = 0; m <= 10; ++m) CHECK(lo[static_cast<size_t>(m)] == hi[static_cast<size_t>(m)]);

    // recursion route == composition route
    const int N = 16;
    for (int k = 1; k <= 4; ++k) {
        TruncatedSeries fast = polylog_of_one_minus_exp_neg(k, N);
        TruncatedSeries slow = series_compose(polylog_series(k, N), one_minus_exp_neg(N));
        for (int m = 0; m <= N; ++m) CHECK(fast[m] == slow[m]);
    }
}

TEST_CASE("lambda coefficients") {
    // r = 1 with tail: Lambda = Li_{k1+k2}, so b_M = 1/M^{k1+k2}
    IndexVector k({1}, 1);
    std::vector<Rational> b = lambda_coefficients(k, 12);
    for (int M = 1; M <= 12; ++M)
        CHECK(b[static_cast<size_t>(M)] ==
              Rational(mpz_class(1), Rational::ipow(static_cast<unsigned long>(M), 2)));

    // (1,1;0): b_M = (2/M) H_{M-1}; check b_2 = 1, b_3 = 1 and brute force to 20
    IndexVector k110({1, 1}, 0);
    std::vector<Rational> b2 = lambda_coefficients(k110, 20);
    CHECK(b2[2] == Rational(1));
    CHECK(b2[3] == Rational(1));
    for (int M = 2; M <= 20; ++M)
        CHECK(b2[static_cast<size_t>(M)] == conv_bruteforce({1, 1}, M));

    // zero below depth, b_r = r^{-tail}
    IndexVector k3({1, 2, 1}, 2);
    std::vector<Rational> b3 = lambda_coefficients(k3, 10);
    CHECK(b3[0].is_zero());
    CHECK(b3[1].is_zero());
    CHECK(b3[2].is_zero());
    CHECK(b3[3] == Rational(1, 9));

    // permutation invariance
    std::mt19937 rng(20260808u);
    for (int trial = 0; trial < 10; ++trial) {
        int r = 2 + static_cast<int>(rng() % 3);
        std::vector<int> ks;
        for (int i = 0; i < r; ++i) ks.push_back(1 + static_cast<int>(rng() % 3));
        std::vector<int> perm = ks;
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<Rational> x = lambda_coefficients(IndexVector(ks, 1), 15);
        std::vector<Rational> y = lambda_coefficients(IndexVector(perm, 1), 15);
        for (int M = 0; M <= 15; ++M) CHECK(x[static_cast<size_t>(M)] == y[static_cast<size_t>(M)]);
    }
}

TEST_CASE("lambda derivative recursion holds exactly") {
    CHECK(check_lambda_derivative(IndexVector({2}, 1), 30));
    CHECK(check_lambda_derivative(IndexVector({1, 1}, 2), 30));
    CHECK(check_lambda_derivative(IndexVector({1, 1}, 1), 30));

    std::mt19937 rng(424242u);
    for (int trial = 0; trial < 25; ++trial) {
        int r = 1 + static_cast<int>(rng() % 4);
        std::vector<int> ks;
        for (int i = 0; i < r; ++i) ks.push_back(1 + static_cast<int>(rng() % 4));
        int tail = 1 + static_cast<int>(rng() % 3);
        int M = 20 + static_cast<int>(rng() % 21);
        CAPTURE(trial);
        CHECK(check_lambda_derivative(IndexVector(ks, tail), M));
    }
}
