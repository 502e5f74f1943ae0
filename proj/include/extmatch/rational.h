// Copyright 2026 The extmatch Authors
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

#ifndef EXTMATCH_RATIONAL_H_
#define EXTMATCH_RATIONAL_H_

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace extmatch {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parses "7", "-3/2", "0.25" or "-1.5". Exponents and whitespace inside the
// literal are rejected. Throws ValidationError on malformed input.
Rational ParseRational(std::string_view text);

// Canonical reduced form: "p/q" with q > 1, or the integer "p".
std::string ToString(const Rational& value);

}  // namespace extmatch

#endif  // EXTMATCH_RATIONAL_H_
