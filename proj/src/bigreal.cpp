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

#include "mtzeta/bigreal.hpp"

namespace mtzeta {

std::string BigReal::str(size_t digits) const {
    if (!is_finite()) return mpfr_nan_p(x_) ? "nan" : (sign() > 0 ? "inf" : "-inf");
    if (is_zero()) return "0";
    if (digits < 2) digits = 2;
    mpfr_exp_t e;
    char *raw = mpfr_get_str(nullptr, &e, 10, digits, x_, MPFR_RNDN);
    if (!raw) return "nan";
    std::string mant(raw);
    mpfr_free_str(raw);
    std::string sign_part;
    if (!mant.empty() && mant[0] == '-') {
        sign_part = "-";
        mant.erase(0, 1);
    }
    // mpfr convention: value = 0.mant * 10^e; rewrite as d.ddd e(e-1)
    std::string out = sign_part + mant.substr(0, 1);
    if (mant.size() > 1) out += "." + mant.substr(1);
    out += "e" + std::to_string(static_cast<long>(e) - 1);
    return out;
}

} // namespace mtzeta
