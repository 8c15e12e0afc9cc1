// Copyright 2026 The Authors.
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

#ifndef TROPHOM_NUMERIC_H_
#define TROPHOM_NUMERIC_H_

#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace trophom {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parses "7", "-3/2", "+4". Throws Error(kParse) on malformed input or a
// zero denominator.
Rational ParseRational(std::string_view text);

// Canonical text form: "n" for integers, "p/q" otherwise.
std::string ToString(const Rational& q);
std::string ToString(const BigInt& z);

std::vector<Rational> ParseRationalList(std::string_view comma_separated);

}  // namespace trophom

#endif  // TROPHOM_NUMERIC_H_
