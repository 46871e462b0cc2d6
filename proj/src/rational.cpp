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

#include "rml/rational.hpp"

#include <cctype>
#include <limits>

namespace rml {

namespace {

bool is_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// The GMP-backed string constructor auto-detects octal/hex prefixes, so
// digit strings are normalized (leading zeros stripped) before use.
Int int_from_digits(const std::string& digits) {
  std::size_t i = 0;
  while (i + 1 < digits.size() && digits[i] == '0') ++i;
  return Int(digits.substr(i));
}

// Parses an optionally signed decimal integer literal into an Int.
bool parse_int(const std::string& s, Int* out) {
  std::string body = s;
  bool neg = false;
  if (!body.empty() && (body[0] == '+' || body[0] == '-')) {
    neg = body[0] == '-';
    body = body.substr(1);
  }
  if (!is_digits(body)) return false;
  *out = int_from_digits(body);
  if (neg) *out = -*out;
  return true;
}

}  // namespace

Rat parse_rat(const std::string& raw) {
  const auto first = raw.find_first_not_of(" \t");
  const auto last = raw.find_last_not_of(" \t");
  if (first == std::string::npos) throw InputError("empty rational literal");
  const std::string text = raw.substr(first, last - first + 1);
  const auto slash = text.find('/');
  if (slash != std::string::npos) {
    Int p, q;
    if (!parse_int(text.substr(0, slash), &p) ||
        !parse_int(text.substr(slash + 1), &q)) {
      throw InputError("malformed rational literal: '" + text + "'");
    }
    if (q == 0) throw InputError("zero denominator in '" + text + "'");
    return Rat(p, q);
  }
  const auto dot = text.find('.');
  if (dot != std::string::npos) {
    std::string head = text.substr(0, dot);
    std::string frac = text.substr(dot + 1);
    bool neg = false;
    if (!head.empty() && (head[0] == '+' || head[0] == '-')) {
      neg = head[0] == '-';
      head = head.substr(1);
    }
    if (head.empty()) head = "0";
    if (!is_digits(head) || !is_digits(frac)) {
      throw InputError("malformed decimal literal: '" + text + "'");
    }
    Int num = int_from_digits(head + frac);
    Int den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    Rat r(num, den);
    return neg ? Rat(-r) : r;
  }
  Int p;
  if (!parse_int(text, &p)) {
    throw InputError("malformed rational literal: '" + text + "'");
  }
  return Rat(p);
}

std::string rat_str(const Rat& x) {
  return numerator(x).str() + "/" + denominator(x).str();
}

Int rat_floor(const Rat& x) {
  Int q = numerator(x) / denominator(x);  // truncates toward zero
  if (numerator(x) < 0 && q * denominator(x) != numerator(x)) q -= 1;
  return q;
}

Int rat_ceil(const Rat& x) { return -rat_floor(Rat(-x)); }

namespace {
long narrow(const Int& v) {
  if (v > std::numeric_limits<long>::max() ||
      v < std::numeric_limits<long>::min()) {
    throw InputError("integer out of range: " + v.str());
  }
  return static_cast<long>(v);
}
}  // namespace

long rat_floor_long(const Rat& x) { return narrow(rat_floor(x)); }
long rat_ceil_long(const Rat& x) { return narrow(rat_ceil(x)); }

bool rat_is_integer(const Rat& x) { return denominator(x) == 1; }

Rat rat_sum(const RatVec& xs) {
  Rat s = 0;
  for (const Rat& x : xs) s += x;
  return s;
}

}  // namespace rml
