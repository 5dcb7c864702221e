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

#ifndef MTZETA_IDENTITIES_HPP
#define MTZETA_IDENTITIES_HPP

#include <map>
#include <string>
#include <vector>

#include "mtzeta/mt_eval.hpp"

namespace mtzeta {

/// Result of verifying one identity instance: both sides evaluated by
/// independent routes, with the residual judged against the combined
/// error budget plus an explicit slack.
struct CheckReport {
    std::string identity_id;
    std::map<std::string, std::string> parameters;
    std::map<std::string, std::string> diagnostics; // check-specific extras
    ValueWithError lhs;
    ValueWithError rhs;
    BigReal slack;

    CheckReport() : slack(64) {}

    // derived quantities, recomputed from the stored fields
    BigReal residual() const { return (lhs.estimate - rhs.estimate).abs(); }
    BigReal budget() const { return lhs.abs_error + rhs.abs_error + slack; }
    bool pass() const { return residual() <= budget(); }
    bool rigorous() const { return lhs.rigorous && rhs.rigorous; }

    std::string params_str() const;
};

/// Suite configuration: target precision, explicit slack tolerance and an
/// optional parameter filter (e.g. {"k","1"} keeps only k = 1 instances).
struct SuiteConfig {
    long prec = 256;
    BigReal slack;
    std::map<std::string, std::string> grid_filter;

    explicit SuiteConfig(long p = 256) : prec(p), slack(BigReal("1e-10", p + kGuardBits)) {}
};

/// Functional relation between xi_MT values and Mordell-Tornheim values
/// with a trailing zero (xi-integral route vs accelerated-summation route).
CheckReport check_mr1(int r, const BigComplex &s, const SuiteConfig &cfg);

/// The value-level corollary of the functional relation (all arguments at
/// positive integers).  display_form reproduces the introduction's r = 3
/// display verbatim, with the leading term written as zeta(2)^2 zeta(m+1).
CheckReport check_mr2(int r, int m, const SuiteConfig &cfg, bool display_form = false);

/// Closed-form evaluation of zeta_{MT,2k+1}(2, 1^{2k}; 1) in zeta values.
CheckReport check_mr3(int k, const SuiteConfig &cfg);

/// zeta_{MT,m+1}(1^{m+1}; 1) = (m+1)! zeta(m+2).
CheckReport check_mtval(int m, const SuiteConfig &cfg);

/// Generalized functional relation with products of Lambda factors on the
/// left and trailing-zero MT values on the right.
CheckReport check_mr4(int N, const std::vector<int> &rvec, const BigComplex &s,
                      const SuiteConfig &cfg);

/// sum_j r_j! xi_{MT,g-1}(...; r_j+1) = prod_j zeta_{MT,r_j}(1^{r_j}; 1).
CheckReport check_lll(int g, const std::vector<int> &rvec, const SuiteConfig &cfg);

/// Euler decomposition of zeta(k+1) zeta(r+1) into double zeta values.
CheckReport check_euler_decomposition(int r, int k, const SuiteConfig &cfg);

/// Double zeta values of odd weight against their closed form.
CheckReport check_eq75(int a, int b, const SuiteConfig &cfg);

/// Continuation probe at s = -m + h against the exact value
/// (-1)^m C^k_{m,MT}; the budget encodes linear convergence in h.
CheckReport check_ac1(const IndexVector &k, int m, const SuiteConfig &cfg);

/// All registered identity ids, in declaration order.
const std::vector<std::string> &suite_ids();

/// Run the selected identity checks over their default parameter grids.
/// Unknown ids raise domain_error.  Reports come back in declaration
/// order regardless of evaluation order.
std::vector<CheckReport> run_suite(const std::vector<std::string> &selection,
                                   const SuiteConfig &cfg);

} // namespace mtzeta

#endif
