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

#ifndef MTZETA_ERRORS_HPP
#define MTZETA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mtzeta {

// Base class for all errors thrown by the library.
class error : public std::runtime_error {
public:
    explicit error(const std::string &msg) : std::runtime_error(msg) {}
};

// Argument outside the mathematical domain of an operation
// (poles, arguments outside [0,1), nonpositive denominators, ...).
class domain_error : public error {
public:
    explicit domain_error(const std::string &msg) : error(msg) {}
};

// Requested evaluation lies outside the region where the chosen
// algorithm converges absolutely.
class convergence_error : public error {
public:
    explicit convergence_error(const std::string &msg) : error(msg) {}
};

// The requested tolerance is not reachable with the given cutoffs
// (raise the cutoff or lower the precision).
class precision_error : public error {
public:
    explicit precision_error(const std::string &msg) : error(msg) {}
};

} // namespace mtzeta

#endif
