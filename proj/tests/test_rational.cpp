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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rml/errors.hpp"
#include "rml/rational.hpp"

using namespace rml;

TEST_CASE("parse_rat accepts fractions, integers, and decimals") {
  CHECK(parse_rat("3/4") == Rat(3, 4));
  CHECK(parse_rat("-3/4") == Rat(-3, 4));
  CHECK(parse_rat("6/8") == Rat(3, 4));  // normalized
  CHECK(parse_rat("7") == Rat(7));
  CHECK(parse_rat("-12") == Rat(-12));
  CHECK(parse_rat("0.25") == Rat(1, 4));
  CHECK(parse_rat("-0.25") == Rat(-1, 4));
  CHECK(parse_rat("2.5") == Rat(5, 2));
  CHECK(parse_rat("0.125") == Rat(1, 8));
  CHECK(parse_rat(" 1/2 ") == Rat(1, 2));
}

TEST_CASE("parse_rat never reads leading zeros as octal") {
  CHECK(parse_rat("025") == Rat(25));
  CHECK(parse_rat("0.075") == Rat(75, 1000));
  CHECK(parse_rat("010/020") == Rat(1, 2));
}

TEST_CASE("parse_rat rejects malformed input") {
  CHECK_THROWS_AS(parse_rat(""), InputError);
  CHECK_THROWS_AS(parse_rat("1/0"), InputError);
  CHECK_THROWS_AS(parse_rat("abc"), InputError);
  CHECK_THROWS_AS(parse_rat("1/2/3"), InputError);
  CHECK_THROWS_AS(parse_rat("1.2.3"), InputError);
  CHECK_THROWS_AS(parse_rat("1e3"), InputError);
  CHECK_THROWS_AS(parse_rat("/3"), InputError);
}

TEST_CASE("rat_str always prints p/q in lowest terms") {
  CHECK(rat_str(Rat(3, 4)) == "3/4");
  CHECK(rat_str(Rat(2)) == "2/1");
  CHECK(rat_str(Rat(0)) == "0/1");
  CHECK(rat_str(Rat(-6, 8)) == "-3/4");
  CHECK(rat_str(parse_rat("0.2")) == "1/5");
}

TEST_CASE("parse and print round trip") {
  const char* samples[] = {"0/1", "1/1", "-7/3", "22/7", "123456789/1024"};
  for (const char* s : samples) CHECK(rat_str(parse_rat(s)) == s);
}

TEST_CASE("floor and ceiling") {
  CHECK(rat_floor(Rat(7, 2)) == 3);
  CHECK(rat_ceil(Rat(7, 2)) == 4);
  CHECK(rat_floor(Rat(-7, 2)) == -4);
  CHECK(rat_ceil(Rat(-7, 2)) == -3);
  CHECK(rat_floor(Rat(6)) == 6);
  CHECK(rat_ceil(Rat(6)) == 6);
  CHECK(rat_floor_long(Rat(10, 3)) == 3);
  CHECK(rat_ceil_long(Rat(10, 3)) == 4);
}

TEST_CASE("integrality and sums") {
  CHECK(rat_is_integer(Rat(4)));
  CHECK(rat_is_integer(Rat(8, 4)));
  CHECK(!rat_is_integer(Rat(1, 2)));
  RatVec v = {Rat(1, 2), Rat(1, 3), Rat(1, 6)};
  CHECK(rat_sum(v) == 1);
  CHECK(rat_sum(RatVec{}) == 0);
}

TEST_CASE("arithmetic is exact at scale") {
  // (1/3) * 3 == 1 exactly, and big numerators stay exact.
  Rat x(1, 3);
  CHECK(x * 3 == 1);
  Rat big = parse_rat("123456789123456789/987654321987654321");
  CHECK(rat_str(big * Rat(987654321987654321LL) /
                Rat(123456789123456789LL)) == "1/1");
}
