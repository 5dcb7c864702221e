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

#ifndef MTZETA_VALUE_WITH_ERROR_HPP
#define MTZETA_VALUE_WITH_ERROR_HPP

#include "mtzeta/bigcomplex.hpp"

namespace mtzeta {

/// Numerical estimate together with an absolute error bound.
///
/// rigorous == true means abs_error is a proven bound (series tail
/// majorant, Euler-Maclaurin remainder); false means it is a heuristic
/// (typically the difference of successive quadrature refinements).
struct ValueWithError {
    BigComplex estimate;
    BigReal abs_error;
    bool rigorous = true;

    ValueWithError() : estimate(64), abs_error(64) {}
    ValueWithError(BigComplex est, BigReal err, bool rig)
        : estimate(std::move(est)), abs_error(std::move(err)), rigorous(rig) {
        if (abs_error.sign() < 0) abs_error = abs_error.abs();
    }

    /// Sum of values; errors add, rigor is the conjunction.
    friend ValueWithError operator+(const ValueWithError &a, const ValueWithError &b) {
        return ValueWithError(a.estimate + b.estimate, a.abs_error + b.abs_error,
                              a.rigorous && b.rigorous);
    }
    friend ValueWithError operator-(const ValueWithError &a, const ValueWithError &b) {
        return ValueWithError(a.estimate - b.estimate, a.abs_error + b.abs_error,
                              a.rigorous && b.rigorous);
    }
    /// Scale by an exactly-known complex constant.
    friend ValueWithError operator*(const BigComplex &c, const ValueWithError &v) {
        return ValueWithError(c * v.estimate, c.abs() * v.abs_error, v.rigorous);
    }
    /// Product of two estimates: |ab - a'b'| <= |a| db + |b| da + da db.
    friend ValueWithError operator*(const ValueWithError &a, const ValueWithError &b) {
        BigReal err = a.estimate.abs() * b.abs_error + b.estimate.abs() * a.abs_error +
                      a.abs_error * b.abs_error;
        return ValueWithError(a.estimate * b.estimate, err, a.rigorous && b.rigorous);
    }
};

} // namespace mtzeta

#endif
