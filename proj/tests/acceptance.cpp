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

  End-to-end acceptance suite: one test per criterion, each printing a
  single machine-grepable PASS/FAIL line.  Default precision 256 bits;
  "pass" for an identity check means residual <= combined error bound
  plus the explicit 1e-10 slack unless a tighter tolerance is stated.
*/

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cstdio>
#include <random>

#include "mtzeta/identities.hpp"

using namespace mtzeta;

namespace {

constexpr long P = 256;
constexpr long W = P + kGuardBits;

using Clock = std::chrono::steady_clock;

struct Stopwatch {
    Clock::time_point t0 = Clock::now();
    double seconds() const { return std::chrono::duration<double>(Clock::now() - t0).count(); }
};

void report(int idx, bool ok, const char *label, double secs) {
    std::printf("[%2d/14] %s  %-58s (%.1f s)\n", idx, ok ? "PASS" : "FAIL", label, secs);
    std::fflush(stdout);
}

BigReal zeta_re(long n) { return riemann_zeta(BigComplex(n, P), P).estimate.re(); }

BigReal tol10(int e) { return BigReal("1e" + std::to_string(e), W); }

const SuiteConfig &cfg256() {
    static SuiteConfig cfg(P);
    return cfg;
}

// Bernoulli oracle independent of the series engine
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

} // namespace

TEST_CASE("criterion 1: depth-3 value against its closed form at 1e-20") {
    Stopwatch sw;
    ValueWithError v = mt_zeta_fast(MTArgument({2, 1, 1}, BigComplex(1, W)), P);
    BigReal truth = zeta_re(2) * zeta_re(3) * 2L - zeta_re(5);
    BigReal resid = (v.estimate.re() - truth).abs();
    bool ok = resid <= tol10(-20) && sw.seconds() < 30.0;
    report(1, ok, "zeta_MT,3(2,1,1;1) = 2 zeta(2) zeta(3) - zeta(5)", sw.seconds());
    CHECK(resid <= tol10(-20));
    CHECK(sw.seconds() < 30.0);
}

TEST_CASE("criterion 2: depth-5 value against its closed form at 1e-10") {
    Stopwatch sw;
    ValueWithError v = mt_zeta_fast(MTArgument({2, 1, 1, 1, 1}, BigComplex(1, W)), P);
    BigReal truth =
        (zeta_re(2) * zeta_re(5) + zeta_re(3) * zeta_re(4) * 3L - zeta_re(7) * 4L) * 24L;
    BigReal resid = (v.estimate.re() - truth).abs();
    bool ok = resid <= tol10(-10) && sw.seconds() < 180.0;
    report(2, ok, "zeta_MT,5(2,1,1,1,1;1) = 4!(z2 z5 + 3 z3 z4 - 4 z7)", sw.seconds());
    CHECK(resid <= tol10(-10));
    CHECK(sw.seconds() < 180.0);
}

TEST_CASE("criterion 3: ones-index grid at 1e-20") {
    Stopwatch sw;
    bool ok = true;
    for (int m = 0; m <= 3; ++m) {
        std::vector<int> ks(static_cast<size_t>(m) + 1, 1);
        ValueWithError v = mt_zeta_fast(MTArgument(ks, BigComplex(1, W)), P);
        BigReal truth =
            BigReal(Rational::factorial(static_cast<unsigned long>(m + 1)), W) * zeta_re(m + 2);
        BigReal resid = (v.estimate.re() - truth).abs();
        CHECK(resid <= tol10(-20));
        ok = ok && resid <= tol10(-20);
    }
    report(3, ok, "zeta_MT,m+1(1^{m+1};1) = (m+1)! zeta(m+2), m = 0..3", sw.seconds());
}

TEST_CASE("criterion 4: functional relation, independent routes") {
    Stopwatch sw;
    bool ok = true;
    const std::vector<std::pair<int, BigComplex>> grid = {
        {2, BigComplex(3, W)},
        {2, BigComplex(BigReal(Rational(7, 2), W))},
        {3, BigComplex(4, W)},
        {3, BigComplex(BigReal(3L, W), BigReal(0.5, W))},
    };
    for (const auto &[r, s] : grid) {
        CheckReport rep = check_mr1(r, s, cfg256());
        CHECK(rep.pass());
        ok = ok && rep.pass();
    }
    report(4, ok, "xi-integral route vs MT-summation route on the mr1 grid", sw.seconds());
}

TEST_CASE("criterion 5: value-level corollary grid including the display instance") {
    Stopwatch sw;
    bool ok = true;
    for (const auto &[r, m] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {2, 3}, {3, 3}}) {
        CheckReport rep = check_mr2(r, m, cfg256());
        CHECK(rep.pass());
        ok = ok && rep.pass();
    }
    CheckReport disp = check_mr2(3, 3, cfg256(), true);
    CHECK(disp.pass());
    ok = ok && disp.pass();
    report(5, ok, "mr2 grid (2,1) (2,2) (2,3) (3,3) + verbatim display form", sw.seconds());
}

TEST_CASE("criterion 6: closed-form evaluation at k = 1, 2") {
    Stopwatch sw;
    CheckReport r1 = check_mr3(1, cfg256());
    CheckReport r2 = check_mr3(2, cfg256());
    CHECK(r1.pass());
    CHECK(r2.pass());
    report(6, r1.pass() && r2.pass(), "mr3 closed form at k = 1, 2", sw.seconds());
}

TEST_CASE("criterion 7: double zeta closed form under the frozen convention") {
    Stopwatch sw;
    bool ok = true;
    for (const auto &[a, b] : std::vector<std::pair<int, int>>{{2, 3}, {3, 2}, {4, 3}, {1, 2}}) {
        CheckReport rep = check_eq75(a, b, cfg256());
        CHECK(rep.pass());
        ok = ok && rep.pass();
    }
    // cross-oracle to 1e-30
    ValueWithError e21 = euler_double_zeta(2, 1, P);
    BigReal resid = (e21.estimate.re() - zeta_re(3)).abs();
    CHECK(resid <= tol10(-30));
    ok = ok && resid <= tol10(-30);
    report(7, ok, "eq75 grid + zeta(2,1) = zeta(3) cross-oracle at 1e-30", sw.seconds());
}

TEST_CASE("criterion 8: generalized relation grid and coincidence with mr1") {
    Stopwatch sw;
    bool ok = true;
    CheckReport a = check_mr4(2, {1}, BigComplex(4, W), cfg256());
    CheckReport b = check_mr4(2, {2}, BigComplex(4, W), cfg256());
    BigComplex s95(BigReal(Rational(9, 2), W));
    CheckReport c = check_mr4(3, {1, 1}, s95, cfg256());
    CHECK(a.pass());
    CHECK(b.pass());
    CHECK(c.pass());
    ok = a.pass() && b.pass() && c.pass();
    // the (3,[1,1]) instance coincides with mr1 at r = 3: side by side
    CheckReport m = check_mr1(3, s95, cfg256());
    BigReal dl = (c.lhs.estimate - m.lhs.estimate).abs();
    BigReal dr = (c.rhs.estimate - m.rhs.estimate).abs();
    bool agree = dl <= c.lhs.abs_error + m.lhs.abs_error + cfg256().slack &&
                 dr <= c.rhs.abs_error + m.rhs.abs_error + cfg256().slack;
    CHECK(agree);
    ok = ok && agree;
    report(8, ok, "mr4 grid; (3,[1,1],9/2) coincides with mr1(3,9/2)", sw.seconds());
}

TEST_CASE("criterion 9: product identity grid") {
    Stopwatch sw;
    bool ok = true;
    CheckReport a = check_lll(1, {1}, cfg256());
    CheckReport b = check_lll(2, {1, 1}, cfg256());
    CheckReport c = check_lll(2, {1, 2}, cfg256());
    CHECK(a.pass());
    CHECK(b.pass());
    CHECK(c.pass());
    ok = a.pass() && b.pass() && c.pass();
    report(9, ok, "lll grid (1,[1]) (2,[1,1]) (2,[1,2])", sw.seconds());
}

TEST_CASE("criterion 10: Euler decomposition grid") {
    Stopwatch sw;
    bool ok = true;
    for (const auto &[r, k] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 2}}) {
        CheckReport rep = check_euler_decomposition(r, k, cfg256());
        CHECK(rep.pass());
        ok = ok && rep.pass();
    }
    report(10, ok, "euler decomposition at (1,1) (1,2) (2,2)", sw.seconds());
}

TEST_CASE("criterion 11: continuation probes converge linearly") {
    Stopwatch sw;
    bool ok = true;
    const std::vector<IndexVector> ks = {IndexVector{1}, IndexVector{2}, IndexVector{1, 1}};
    for (const auto &k : ks) {
        for (int m = 0; m <= 2; ++m) {
            const BigReal target(xi_mt_negative_integer(k, m), W);
            BigReal h("1e-4", W);
            std::vector<BigReal> errs;
            for (int step = 0; step < 3; ++step) {
                ValueWithError p = xi_mt_continuation_probe(k, m, h, P);
                errs.push_back((p.estimate - BigComplex(target)).abs());
                h = h / 10L;
            }
            // ratio within a factor 2 of the linear decade
            for (int i = 0; i + 1 < 3; ++i) {
                BigReal ratio = errs[static_cast<size_t>(i)] / errs[static_cast<size_t>(i) + 1];
                bool in_band = ratio >= BigReal(5L, W) && ratio <= BigReal(20L, W);
                CAPTURE(k.str());
                CAPTURE(m);
                CHECK(in_band);
                ok = ok && in_band;
            }
        }
    }
    report(11, ok, "probe errors shrink linearly in h (factor-2 band)", sw.seconds());
}

TEST_CASE("criterion 12: exact layer") {
    Stopwatch sw;
    bool ok = true;
    // Bernoulli sequence, exact equality through m = 50
    std::vector<Rational> c = akmt_coefficients(IndexVector{1}, 50);
    std::vector<Rational> B = bernoulli_by_recurrence(50);
    for (int m = 0; m <= 50; ++m) {
        bool eq = c[static_cast<size_t>(m)] == B[static_cast<size_t>(m)];
        CHECK(eq);
        ok = ok && eq;
    }
    // 25 randomized derivative-recursion identities
    std::mt19937 rng(20260808u);
    for (int trial = 0; trial < 25; ++trial) {
        int r = 1 + static_cast<int>(rng() % 4);
        std::vector<int> ks;
        for (int i = 0; i < r; ++i) ks.push_back(1 + static_cast<int>(rng() % 4));
        int tail = 1 + static_cast<int>(rng() % 3);
        int M = 20 + static_cast<int>(rng() % 21);
        bool holds = check_lambda_derivative(IndexVector(ks, tail), M);
        CHECK(holds);
        ok = ok && holds;
    }
    report(12, ok, "exact coefficients: Bernoulli m <= 50; 25 random recursions", sw.seconds());
}

TEST_CASE("criterion 13: oracle equivalence on randomized arguments") {
    Stopwatch sw;
    bool ok = true;
    std::mt19937 rng(13131313u);
    for (int trial = 0; trial < 30; ++trial) {
        const int r = 1 + static_cast<int>(rng() % 3);
        std::vector<int> ks;
        for (int i = 0; i < r; ++i) ks.push_back(1 + static_cast<int>(rng() % 3));
        const long s = 2 + static_cast<long>(rng() % 3);
        const long cutoff = (r == 1) ? 60000 : (r == 2 ? 900 : 140);
        MTArgument arg(ks, BigComplex(s, W));
        ValueWithError fast = mt_zeta_fast(arg, P);
        ValueWithError oracle = mt_zeta_oracle(arg, cutoff, P);
        BigReal d = (fast.estimate - oracle.estimate).abs();
        bool agree = d <= fast.abs_error + oracle.abs_error;
        CAPTURE(trial);
        CHECK(agree);
        ok = ok && agree;
    }
    report(13, ok, "30 random integer arguments: fast vs brute-force oracle", sw.seconds());
}

TEST_CASE("criterion 14: precision scaling 256 -> 512") {
    Stopwatch sw;
    bool ok = true;
    SuiteConfig lo(256), hi(512);
    std::vector<CheckReport> a = run_suite(suite_ids(), lo);
    std::vector<CheckReport> b = run_suite(suite_ids(), hi);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        CAPTURE(a[i].identity_id);
        CAPTURE(a[i].params_str());
        bool pass_both = a[i].pass() && b[i].pass();
        bool shrink;
        if (a[i].identity_id == "ac1") {
            // the probe residual is the exact quantity |xi(-m+h) - xi(-m)|,
            // pinned by h rather than by precision (the h-convergence is
            // criterion 11's job); here we require it to be precision-STABLE,
            // which rules out any cancellation-based pass just as well
            shrink = (a[i].residual() - b[i].residual()).abs() <=
                     a[i].residual() * BigReal::pow2(-64, 512);
        } else {
            // a true identity: the residual is numerical and must halve
            shrink = a[i].residual().is_zero()
                         ? b[i].residual().is_zero()
                         : b[i].residual() * 2L <= a[i].residual();
        }
        CHECK(pass_both);
        CHECK(shrink);
        ok = ok && pass_both && shrink;
    }
    report(14, ok, "every check passes at 512 bits with residual halved", sw.seconds());
}
