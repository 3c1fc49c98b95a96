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

#include "partfact/partition_lattice.hpp"

#include <functional>
#include <map>
#include <string>

#include "disjoint_sets.hpp"
#include "partfact/errors.hpp"

namespace partfact {

namespace {

void require_same_code(const Partition& p1, const Partition& p2) {
  if (!(p1.code() == p2.code())) throw InvalidInput("partitions are over different codes");
}

void require_coding(const Partition& p) {
  if (!is_coding(p.code(), p)) throw PreconditionViolation("partition is not a coding partition");
}

// Class index of every code word, in code order.
std::vector<std::size_t> labels(const Partition& p) {
  std::vector<std::size_t> out;
  for (const auto& w : p.code().words()) out.push_back(p.class_of(w));
  return out;
}

Partition from_groups(const FiniteCode& x, const std::vector<std::vector<std::size_t>>& groups) {
  std::vector<std::vector<Word>> classes;
  for (const auto& g : groups) {
    auto& cls = classes.emplace_back();
    for (auto i : g) cls.push_back(x.words()[i]);
  }
  return Partition(x, std::move(classes));
}

}  // namespace

bool leq(const Partition& p1, const Partition& p2) {
  require_same_code(p1, p2);
  for (const auto& cls : p2.classes()) {
    auto owner = p1.class_of(cls.front());
    for (const auto& w : cls) {
      if (p1.class_of(w) != owner) return false;
    }
  }
  return true;
}

Partition coding_meet(const Partition& p1, const Partition& p2) {
  require_same_code(p1, p2);
  require_coding(p1);
  require_coding(p2);
  const auto& x = p1.code();
  detail::DisjointSets sets(x.size());
  for (const auto* p : {&p1, &p2}) {
    for (const auto& cls : p->classes()) {
      auto first = *x.index_of(cls.front());
      for (const auto& w : cls) sets.unite(first, *x.index_of(w));
    }
  }
  return from_groups(x, sets.groups());
}

Partition coding_join(const Partition& p1, const Partition& p2) {
  require_same_code(p1, p2);
  require_coding(p1);
  require_coding(p2);
  const auto& x = p1.code();
  auto a = labels(p1);
  auto b = labels(p2);
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> slot;
  std::vector<std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < x.size(); ++i) {
    auto [it, fresh] = slot.try_emplace({a[i], b[i]}, groups.size());
    if (fresh) groups.emplace_back();
    groups[it->second].push_back(i);
  }
  return from_groups(x, groups);
}

std::vector<Partition> all_coding_partitions(const FiniteCode& x) {
  auto base = characteristic_partition(x);
  auto k = base.size();
  if (k > kMaxLatticeClasses) {
    throw ResourceLimit("characteristic partition has " + std::to_string(k) +
                        " classes; lattice enumeration is limited to " +
                        std::to_string(kMaxLatticeClasses));
  }
  std::vector<Partition> out;
  // Restricted growth strings: rgs[0] = 0, rgs[i] <= 1 + max(rgs[0..i-1]).
  std::vector<std::size_t> rgs(k, 0);
  std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t i, std::size_t blocks) {
    if (i == k) {
      std::vector<std::vector<Word>> classes(blocks);
      for (std::size_t c = 0; c < k; ++c) {
        auto& target = classes[rgs[c]];
        target.insert(target.end(), base[c].begin(), base[c].end());
      }
      out.emplace_back(x, std::move(classes));
      return;
    }
    for (std::size_t b = 0; b <= blocks && b < k; ++b) {
      rgs[i] = b;
      walk(i + 1, b == blocks ? blocks + 1 : blocks);
    }
  };
  if (k > 0) {
    rgs[0] = 0;
    walk(1, 1);
  }
  return out;
}

}  // namespace partfact
