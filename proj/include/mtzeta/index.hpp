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

#ifndef MTZETA_INDEX_HPP
#define MTZETA_INDEX_HPP

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "mtzeta/errors.hpp"

namespace mtzeta {

/// An exponent tuple (k_1, ..., k_r), optionally carrying a trailing
/// exponent k_{r+1} for generating-function indices.
struct IndexVector {
    std::vector<int> entries;
    std::optional<int> tail;

    IndexVector() = default;
    IndexVector(std::initializer_list<int> ks) : entries(ks) {}
    IndexVector(std::vector<int> ks, std::optional<int> t = std::nullopt)
        : entries(std::move(ks)), tail(t) {}

    int depth() const { return static_cast<int>(entries.size()); }

    /// All entries >= 1, no trailing exponent required.
    void require_positive(const char *who) const {
        if (entries.empty())
            throw domain_error(std::string(who) + ": index must have depth >= 1");
        for (int k : entries)
            if (k < 1) throw domain_error(std::string(who) + ": all exponents must be >= 1");
    }

    /// Entries >= 1 and trailing exponent >= 0 present.
    void require_with_tail(const char *who) const {
        require_positive(who);
        if (!tail.has_value())
            throw domain_error(std::string(who) + ": trailing exponent required");
        if (*tail < 0)
            throw domain_error(std::string(who) + ": trailing exponent must be >= 0");
    }

    /// "(k_1,...,k_r)" or "(k_1,...,k_r;k_{r+1})".
    std::string str() const {
        std::string s = "(";
        for (size_t i = 0; i < entries.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(entries[i]);
        }
        if (tail.has_value()) s += ";" + std::to_string(*tail);
        return s + ")";
    }

    /// (1,...,1) with n entries and trailing exponent 1; the index family
    /// appearing in the generalized functional relation.
    static IndexVector ones_with_tail(int n) {
        IndexVector k;
        k.entries.assign(static_cast<size_t>(n), 1);
        k.tail = 1;
        return k;
    }
};

} // namespace mtzeta

#endif
