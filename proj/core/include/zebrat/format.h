// Copyright 2026 The ZebraT Simulator Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ZEBRAT_FORMAT_H_
#define ZEBRAT_FORMAT_H_

#include <string>
#include <string_view>

namespace zebrat {

// Fixed-point, six decimals, '.' separator regardless of the global locale.
// Negative zero (and values that round to it) print as "0.000000".
std::string FormatFixed6(double value);

// Rounds through the six-decimal text representation.
double QuantizeFixed6(double value);

// Locale-independent strict parse of a complete decimal number.
// Returns false on trailing garbage or empty input.
bool ParseDouble(std::string_view text, double* out);

}  // namespace zebrat

#endif  // ZEBRAT_FORMAT_H_
