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

#include "mtzeta/identities.hpp"

using namespace mtzeta;

namespace {
const SuiteConfig &cfg192() {
    static SuiteConfig cfg(192);
    return cfg;
}
} // namespace

TEST_CASE("individual checks pass at reduced precision") {
    CHECK(check_mtval(1, cfg192()).pass());
    CHECK(check_mr1(2, BigComplex(3, 224), cfg192()).pass());
    CHECK(check_mr1(3, BigComplex(BigReal(Rational(7, 2), 224)), cfg192()).pass());
    CHECK(check_mr2(2, 1, cfg192()).pass());
    CHECK(check_mr2(3, 3, cfg192(), true).pass());
    CHECK(check_mr3(1, cfg192()).pass());
    CHECK(check_mr4(2, {1}, BigComplex(4, 224), cfg192()).pass());
    CHECK(check_lll(2, {1, 1}, cfg192()).pass());
    CHECK(check_euler_decomposition(1, 1, cfg192()).pass());
    CHECK(check_eq75(2, 3, cfg192()).pass());
    CHECK(check_ac1(IndexVector{1}, 1, cfg192()).pass());
}

TEST_CASE("report invariants") {
    CheckReport rep = check_mtval(0, cfg192());
    // derived fields are recomputed from the stored ones
    CHECK(rep.residual() == (rep.lhs.estimate - rep.rhs.estimate).abs());
    CHECK(rep.budget() == rep.lhs.abs_error + rep.rhs.abs_error + rep.slack);
    CHECK(rep.pass() == (rep.residual() <= rep.budget()));
    CHECK(rep.identity_id == "mtval");
    CHECK(rep.parameters.at("m") == "0");
    // slack is explicit and configurable
    SuiteConfig tight(192);
    tight.slack = BigReal(0L, 224);
    CheckReport rep2 = check_mtval(0, tight);
    CHECK(rep2.budget() == rep2.lhs.abs_error + rep2.rhs.abs_error);
}

TEST_CASE("run_suite plumbing") {
    CHECK_THROWS_AS(run_suite({"nope"}, cfg192()), domain_error);
    CHECK(run_suite({}, cfg192()).empty());

    std::vector<CheckReport> reps = run_suite({"mtval"}, cfg192());
    CHECK(reps.size() == 4);
    for (const auto &r : reps) CHECK(r.pass());

    SuiteConfig filt(192);
    filt.grid_filter["m"] = "2";
    std::vector<CheckReport> one = run_suite({"mtval"}, filt);
    CHECK(one.size() == 1);
    CHECK(one[0].parameters.at("m") == "2");

    // declaration order regardless of selection order
    std::vector<CheckReport> both = run_suite({"mr3", "mtval"}, cfg192());
    CHECK(both.front().identity_id == "mtval");
    CHECK(both.back().identity_id == "mr3");
}

TEST_CASE("deterministic reports") {
    CheckReport a = check_mr3(1, cfg192());
    CheckReport b = check_mr3(1, cfg192());
    CHECK(a.residual().str(40) == b.residual().str(40));
    CHECK(a.lhs.estimate.re().str(50) == b.lhs.estimate.re().str(50));
}

TEST_CASE("passing checks keep passing with residual shrink at higher precision") {
    SuiteConfig lo(160), hi(320);
    CheckReport a = check_mtval(1, lo);
    CheckReport b = check_mtval(1, hi);
    CHECK(a.pass());
    CHECK(b.pass());
    CHECK(b.residual() * 2L <= a.residual());
}
