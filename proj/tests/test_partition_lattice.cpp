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
#include "partfact/partition_lattice.hpp"
#include "support.hpp"

using namespace partfact;
using namespace partfact::testing;

namespace {

using Strings = std::vector<std::string>;

// A random coarsening of P(X), hence a coding partition.
Partition random_coding(Sampler& s, const FiniteCode& x) {
  auto base = characteristic_partition(x);
  auto k = s.uniform(1, base.size());
  std::vector<std::vector<Word>> classes(k);
  for (const auto& cls : base.classes()) {
    auto& target = classes[s.uniform(0, k - 1)];
    target.insert(target.end(), cls.begin(), cls.end());
  }
  std::erase_if(classes, [](const auto& c) { return c.empty(); });
  return Partition(x, std::move(classes));
}

std::vector<Partition> every_partition(const FiniteCode& x) {
  std::vector<Partition> out;
  std::vector<std::size_t> label(x.size(), 0);
  std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t i, std::size_t used) {
    if (i == x.size()) {
      std::vector<std::vector<Word>> classes(used);
      for (std::size_t j = 0; j < x.size(); ++j) classes[label[j]].push_back(x.words()[j]);
      out.emplace_back(x, std::move(classes));
      return;
    }
    for (std::size_t b = 0; b <= used; ++b) {
      label[i] = b;
      walk(i + 1, b == used ? used + 1 : used);
    }
  };
  walk(0, 0);
  return out;
}

}  // namespace

TEST_CASE("leq") {
  auto e = example_code();
  auto pc = canonical_partition(e).as_partition(e);
  auto px = characteristic_partition(e);
  CHECK(leq(Partition::trivial(e), px));
  CHECK(leq(px, px));
  CHECK(leq(pc, px));
  CHECK_FALSE(leq(px, pc));
  CHECK_THROWS_AS(leq(px, Partition::trivial(code("ab", {"a"}))), InvalidInput);
}

TEST_CASE("meet and join on the running example") {
  auto e = example_code();
  auto x01 = partition(e, {{"010", "011", "00", "0010", "1000"}, {"11", "1111"}});
  auto x02 = partition(e, {{"010", "011", "11", "1111"}, {"00", "0010", "1000"}});
  CHECK(coding_meet(x01, x02) == Partition::trivial(e));
  CHECK(coding_join(x01, x02) == canonical_partition(e).as_partition(e));

  auto px = characteristic_partition(e);
  CHECK(coding_meet(x01, Partition::trivial(e)) == Partition::trivial(e));
  CHECK(coding_meet(x01, x01) == x01);
  CHECK(coding_join(x01, Partition::trivial(e)) == x01);
  CHECK(coding_join(px, x01) == px);

  auto bad = Partition::discrete(e);
  CHECK_THROWS_AS(coding_meet(bad, x01), PreconditionViolation);
  CHECK_THROWS_AS(coding_join(x01, bad), PreconditionViolation);
}

TEST_CASE("all coding partitions") {
  CHECK(all_coding_partitions(code("01", {"0", "01", "11"})).size() == 5);
  auto ta = code("ab", {"a", "ab", "ba"});
  auto only = all_coding_partitions(ta);
  REQUIRE(only.size() == 1);
  CHECK(only[0] == Partition::trivial(ta));
  CHECK(all_coding_partitions(example_code()).size() == 15);
  // A prefix code: UD, so P(X) has one class per word.
  std::vector<std::string> prefix;
  for (const char* w : {"a", "ba", "bba", "bbba", "bbbba", "bbbbba", "bbbbbba", "bbbbbbba", "bbbbbbbb"}) {
    prefix.emplace_back(w);
  }
  CHECK_THROWS_AS(all_coding_partitions(code("ab", prefix)), ResourceLimit);
}

TEST_CASE("property: lattice laws on sampled coding partitions") {
  Sampler s(41);
  for (int trial = 0; trial < 150; ++trial) {
    auto x = s.finite_code(s.uniform(1, 3), 6, 3);
    auto p = random_coding(s, x), q = random_coding(s, x), r = random_coding(s, x);
    CHECK(coding_meet(p, q) == coding_meet(q, p));
    CHECK(coding_join(p, q) == coding_join(q, p));
    CHECK(coding_meet(coding_meet(p, q), r) == coding_meet(p, coding_meet(q, r)));
    CHECK(coding_join(coding_join(p, q), r) == coding_join(p, coding_join(q, r)));
    CHECK(coding_meet(p, p) == p);
    CHECK(coding_join(p, p) == p);
    CHECK(coding_meet(p, coding_join(p, q)) == p);
    CHECK(coding_join(p, coding_meet(p, q)) == p);
    CHECK(leq(p, q) == (coding_join(p, q) == q));
    CHECK(leq(p, q) == (coding_meet(p, q) == p));
    CHECK(is_coding(x, coding_meet(p, q)));
    CHECK(is_coding(x, coding_join(p, q)));
  }
}

TEST_CASE("property: coding partitions are exactly the coarsenings of P(X)") {
  Sampler s(42);
  for (int trial = 0; trial < 80; ++trial) {
    auto x = s.finite_code(s.uniform(1, 3), 5, 3);
    if (characteristic_partition(x).size() > 4) continue;
    std::vector<std::vector<std::vector<Word>>> expected, actual;
    for (const auto& p : every_partition(x)) {
      if (is_coding(x, p)) expected.push_back(p.normalized());
    }
    for (const auto& p : all_coding_partitions(x)) actual.push_back(p.normalized());
    std::sort(expected.begin(), expected.end());
    std::sort(actual.begin(), actual.end());
    CHECK(actual == expected);
  }
}
