/* Copyright 2026 The modgamma Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef MODGAMMA_ERRORS_HPP
#define MODGAMMA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace modgamma {

// Invalid arguments are reported with std::invalid_argument and evaluation at
// a point outside an operation's domain (dlog of zero, inverse of a non-unit)
// with std::domain_error. The types below cover the remaining failure classes.

/// A requested object would exceed a fixed size guard.
class size_error : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// A Laurent denominator left the multiplicative system of polynomials with
/// unit leading and trailing coefficients.
class contract_violation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An internal cross-check failed (e.g. a reduction map that is not a ring
/// homomorphism). Always a bug or a corrupted input, never a user error.
class consistency_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace modgamma

#endif  // MODGAMMA_ERRORS_HPP
