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

#ifndef MTZETA_QUADRATURE_HPP
#define MTZETA_QUADRATURE_HPP

#include <functional>

#include "mtzeta/value_with_error.hpp"

namespace mtzeta {

/// Integrand for tanh-sinh integration over (0, X).  Called with the
/// abscissa x and the distance X - x to the right endpoint, both
/// computed without cancellation, so integrands may be singular (log or
/// integrable-power) at either endpoint.
using Integrand = std::function<BigComplex(const BigReal &x, const BigReal &x_to_right)>;

/// Doubly-exponential (tanh-sinh) quadrature of f over (0, X).
///
/// Nodes cluster doubly-exponentially at both endpoints; levels are
/// refined until successive estimates differ by at most tol or
/// max_level is reached.  The returned error bound is the heuristic
/// level difference (rigorous = false).
ValueWithError tanh_sinh(const Integrand &f, const BigReal &X, long bits, const BigReal &tol,
                         int max_level = 12);

namespace detail {

/// One-sided node of the symmetric rule: distance delta from the nearer
/// endpoint of [-1, 1] and the weight, already scaled by the step.
struct QuadNode {
    BigReal delta;  // 1 - |tanh(pi/2 sinh(u))|
    BigReal weight; // (pi/2) cosh(u) / cosh^2((pi/2) sinh(u))
    QuadNode(BigReal d, BigReal w) : delta(std::move(d)), weight(std::move(w)) {}
};

/// Cached tanh-sinh nodes for a given working precision and level.
/// Level L uses step h = 1/2^L; the returned vector holds the nodes at
/// odd multiples of h (the new nodes of that level), except level 0
/// which holds u = 0, h, 2h, ....
const std::vector<QuadNode> &ts_nodes(long bits, int level);

} // namespace detail

} // namespace mtzeta

#endif
