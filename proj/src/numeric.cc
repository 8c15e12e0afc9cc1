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

#include "trophom/numeric.h"

#include <cctype>
#include <string>

#include "trophom/error.h"

namespace trophom {
namespace {

bool AllDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

Rational ParseRational(std::string_view text) {
  std::string_view s = Trim(text);
  auto fail = [&]() -> Rational {
    throw Error(ErrorCode::kParse,
                "not a rational number: '" + std::string(text) + "'");
  };
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Rational value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash);
    std::string_view den = s.substr(slash + 1);
    if (!AllDigits(num) || !AllDigits(den)) return fail();
    BigInt d{std::string(den)};
    if (d == 0) {
      throw Error(ErrorCode::kParse,
                  "zero denominator in '" + std::string(text) + "'");
    }
    value = Rational(BigInt(std::string(num)), d);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    if ((!whole.empty() && !AllDigits(whole)) || !AllDigits(frac)) {
      return fail();
    }
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    BigInt w = whole.empty() ? BigInt(0) : BigInt(std::string(whole));
    value = Rational(w * scale + BigInt(std::string(frac)), scale);
  } else {
    if (!AllDigits(s)) return fail();
    value = Rational(BigInt(std::string(s)));
  }
  return negative ? Rational(-value) : value;
}

std::string ToString(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

std::string ToString(const BigInt& z) { return z.str(); }

std::vector<Rational> ParseRationalList(std::string_view comma_separated) {
  std::vector<Rational> out;
  std::string_view s = Trim(comma_separated);
  if (!s.empty() && s.front() == '[' && s.back() == ']') {
    s = s.substr(1, s.size() - 2);
  }
  while (true) {
    auto comma = s.find(',');
    std::string_view item = s.substr(0, comma);
    std::string_view trimmed = Trim(item);
    if (trimmed.size() >= 2 && trimmed.front() == '"' &&
        trimmed.back() == '"') {
      trimmed = trimmed.substr(1, trimmed.size() - 2);
    }
    out.push_back(ParseRational(trimmed));
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace trophom
