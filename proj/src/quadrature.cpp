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

#include "mtzeta/quadrature.hpp"

#include <cmath>
#include <deque>
#include <map>
#include <mutex>
#include <vector>

namespace mtzeta {

namespace detail {

namespace {

std::mutex g_nodes_mu;
// bits -> level -> nodes; deque keeps references valid while nested
// integrations extend the level list
std::map<long, std::deque<std::vector<QuadNode>>> g_nodes;

// delta = 1 - tanh(y) = 2/(e^{2y} + 1); weight = (pi/2) cosh(u) / cosh^2(y),
// with y = (pi/2) sinh(u)
QuadNode make_node(const BigReal &u, long bits) {
    const BigReal half_pi = BigReal::pi(bits) * BigReal(0.5, bits);
    const BigReal y = half_pi * u.sinh();
    const BigReal e2y = (y * 2L).exp();
    BigReal delta = BigReal(2L, bits) / (e2y + 1L);
    const BigReal ch = y.cosh();
    BigReal weight = half_pi * u.cosh() / (ch * ch);
    return QuadNode(std::move(delta), std::move(weight));
}

double u_limit(long bits) {
    // delta(u_max) ~ 2^{-2(bits+24)}: truncation stays below tolerance even
    // for integrands with an integrable power singularity at an endpoint
    const double target =
        2.0 * (static_cast<double>(bits) + 25.0) * 0.6931471805599453 / 3.141592653589793;
    return std::asinh(target);
}

} // namespace

const std::vector<QuadNode> &ts_nodes(long bits, int level) {
    std::lock_guard<std::mutex> lock(g_nodes_mu);
    auto &levels = g_nodes[bits];
    while (static_cast<int>(levels.size()) <= level) {
        const int L = static_cast<int>(levels.size());
        std::vector<QuadNode> nodes;
        const double umax = u_limit(bits);
        if (L == 0) {
            for (long k = 0;; ++k) {
                const double uv = static_cast<double>(k);
                if (uv > umax) break;
                nodes.push_back(make_node(BigReal(uv, bits), bits));
            }
        } else {
            const double h = 1.0 / static_cast<double>(1L << L);
            for (long k = 1;; k += 2) {
                const double uv = static_cast<double>(k) * h;
                if (uv > umax) break;
                nodes.push_back(make_node(BigReal(uv, bits), bits));
            }
        }
        levels.push_back(std::move(nodes));
    }
    return levels[static_cast<size_t>(level)];
}

} // namespace detail

ValueWithError tanh_sinh(const Integrand &f, const BigReal &X, long bits, const BigReal &tol,
                         int max_level) {
    if (X.sign() <= 0) throw domain_error("tanh_sinh: interval must have positive length");
    const BigReal half_X = X * BigReal(0.5, bits);
    const BigReal drop = tol * BigReal::pow2(-16, bits);

    BigComplex integral(0, bits);
    BigComplex prev(0, bits);
    BigReal err(1e300, bits);
    bool have_prev = false;
    double h = 1.0;
    for (int level = 0; level <= max_level; ++level) {
        const std::vector<detail::QuadNode> &nodes = detail::ts_nodes(bits, level);
        BigComplex level_sum(0, bits);
        int small_streak = 0;
        for (size_t i = 0; i < nodes.size(); ++i) {
            BigComplex term(0, bits);
            if (level == 0 && i == 0) {
                // central node u = 0
                term = f(half_X, half_X) * nodes[i].weight;
            } else {
                const BigReal near_edge = half_X * nodes[i].delta;
                term = f(near_edge, X - near_edge);    // node near 0
                term += f(X - near_edge, near_edge);   // node near X
                term = term * nodes[i].weight;
            }
            level_sum += term;
            // weights decay doubly-exponentially: once terms fall far below
            // the tolerance they stay there
            if (term.abs() < drop) {
                if (++small_streak >= 3) break;
            } else {
                small_streak = 0;
            }
        }
        if (level == 0) {
            integral = level_sum * half_X;
        } else {
            h *= 0.5;
            integral = integral * BigReal(0.5, bits) + level_sum * (half_X * BigReal(h, bits));
        }
        if (have_prev) {
            err = (integral - prev).abs();
            if (err <= tol && level >= 3) break;
        }
        prev = integral;
        have_prev = true;
    }
    err += integral.abs() * BigReal::pow2(-bits + 16, bits);
    return ValueWithError(integral, err, false);
}

} // namespace mtzeta
