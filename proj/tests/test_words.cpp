// Copyright 2026 The partfact Authors
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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "partfact/errors.hpp"
#include "partfact/words.hpp"
#include "support.hpp"

using namespace partfact;
using partfact::testing::all_words;
using partfact::testing::Sampler;

namespace {

const Alphabet kBinary("01");
const Alphabet kAb("ab");

bool unbordered_by_loops(const Word& w) {
  for (std::size_t k = 1; k < w.size(); ++k) {
    if (w.prefix(k) == w.suffix_from(w.size() - k)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("alphabet validation") {
  CHECK_THROWS_AS(Alphabet(""), InvalidInput);
  CHECK_THROWS_AS(Alphabet("aa"), InvalidInput);
  CHECK_THROWS_AS(Alphabet("a b"), InvalidInput);
  CHECK_THROWS_AS(Alphabet("a*"), InvalidInput);
  CHECK_THROWS_AS(Alphabet("_"), InvalidInput);
  CHECK_THROWS_AS(Alphabet(std::vector<std::string>{"a", "bc"}), InvalidInput);
  CHECK(Alphabet(std::vector<std::string>{"x", "y"}).chars() == "xy");
}

TEST_CASE("parse and format round trip") {
  auto w = kBinary.parse("0010");
  CHECK(w.size() == 4);
  CHECK(kBinary.format(w) == "0010");
  CHECK(kBinary.parse("_").empty());
  CHECK(kBinary.parse("").empty());
  CHECK_THROWS_AS(kBinary.parse("012"), ParseError);
  try {
    kBinary.parse("01x");
  } catch (const ParseError& e) {
    CHECK(e.position() == 2);
  }
}

TEST_CASE("shortlex order follows the alphabet order") {
  Alphabet ba("ba");
  CHECK(ba.parse("b") < ba.parse("a"));
  CHECK(kAb.parse("b") < kAb.parse("aa"));
  CHECK(kAb.parse("ab") < kAb.parse("ba"));
}

TEST_CASE("is_factor") {
  CHECK(is_factor(kBinary.parse("01"), kBinary.parse("0010")));
  CHECK(is_factor(Word{}, kBinary.parse("0010")));
  CHECK_FALSE(is_factor(kBinary.parse("11"), kBinary.parse("0010")));
}

TEST_CASE("is_unbordered") {
  CHECK(is_unbordered(kAb.parse("bba")));
  CHECK_FALSE(is_unbordered(kAb.parse("bbb")));
  CHECK(is_unbordered(kAb.parse("a")));
  CHECK_FALSE(is_unbordered(kAb.parse("abab")));
  CHECK_THROWS_AS(is_unbordered(Word{}), InvalidInput);
}

TEST_CASE("left quotient of words") {
  CHECK(left_quotient(kBinary.parse("00"), kBinary.parse("0010")) == kBinary.parse("10"));
  auto w = kBinary.parse("0110");
  CHECK(left_quotient(w, w) == Word{});
  CHECK_FALSE(left_quotient(kBinary.parse("01"), kBinary.parse("0010")).has_value());
}

TEST_CASE("property: shortlex is a total order") {
  Sampler s(11);
  for (int i = 0; i < 300; ++i) {
    auto a = s.word(2, 0, 4), b = s.word(2, 0, 4), c = s.word(2, 0, 4);
    int relations = (a < b) + (a == b) + (a > b);
    CHECK(relations == 1);
    if (a < b && b < c) CHECK(a < c);
  }
}

TEST_CASE("property: is_factor is reflexive and transitive") {
  Sampler s(12);
  for (int i = 0; i < 300; ++i) {
    auto z = s.word(2, 0, 8);
    CHECK(is_factor(z, z));
    auto i0 = s.uniform(0, z.size());
    auto y = z.substr(i0, s.uniform(0, z.size() - i0));
    auto j0 = s.uniform(0, y.size());
    auto u = y.substr(j0, s.uniform(0, y.size() - j0));
    CHECK(is_factor(u, y));
    CHECK(is_factor(y, z));
    CHECK(is_factor(u, z));
  }
}

TEST_CASE("property: left quotient round trip") {
  Sampler s(13);
  for (int i = 0; i < 300; ++i) {
    auto x = s.word(3, 0, 5), t = s.word(3, 0, 5);
    CHECK(left_quotient(x, x + t) == t);
  }
}

TEST_CASE("property: is_unbordered agrees with the double loop") {
  for (const auto& w : all_words(kAb, 10)) {
    if (w.empty()) continue;
    CHECK(is_unbordered(w) == unbordered_by_loops(w));
  }
}
