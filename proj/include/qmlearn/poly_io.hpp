// Copyright 2026 The qmlearn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <string_view>

#include "qmlearn/poly.hpp"

namespace qmlearn {

// Polynomial file format:
//
//   {"field": {"p": 2, "r": 2, "modulus": [1, 1, 1]}, "n": 3, "d": 2,
//    "coeffs": [{"S": [1, 2], "alpha": 3}, ...]}
//
// alpha is the canonical integer encoding of a field element. Absent subsets
// are zero. Serialization lists nonzero coefficients in canonical order.

std::string poly_to_json(const MultilinearPoly &f);

/// Throws Error(ParseError) on malformed input, |S| > d, duplicate S or
/// out-of-range alpha; Error(InvalidField) on a bad field description.
MultilinearPoly poly_from_json(std::string_view text);

MultilinearPoly load_poly(const std::string &path);
void save_poly(const MultilinearPoly &f, const std::string &path);

}  // namespace qmlearn
