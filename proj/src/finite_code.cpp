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

#include "partfact/finite_code.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <deque>
#include <limits>
#include <map>
#include <queue>
#include <tuple>

#include "disjoint_sets.hpp"
#include "partfact/automata.hpp"
#include "partfact/errors.hpp"

namespace partfact {

// ---------------------------------------------------------------------------
// Value types

FiniteCode::FiniteCode(Alphabet alphabet, std::vector<Word> words)
    : alphabet_(std::move(alphabet)), words_(std::move(words)) {
  if (words_.empty()) throw EmptyCode();
  for (const auto& w : words_) {
    if (w.empty()) throw InvalidInput("a code may not contain the empty word");
    for (auto s : w) {
      if (s >= alphabet_.size()) throw InvalidInput("code word symbol is not in the alphabet");
    }
  }
  std::sort(words_.begin(), words_.end());
  auto dup = std::adjacent_find(words_.begin(), words_.end());
  if (dup != words_.end()) {
    throw InvalidInput("duplicate code word '" + alphabet_.format(*dup) + "'");
  }
}

FiniteCode FiniteCode::parse(const Alphabet& alphabet, std::span<const std::string> words) {
  std::vector<Word> parsed;
  parsed.reserve(words.size());
  for (const auto& w : words) parsed.push_back(alphabet.parse(w));
  return FiniteCode(alphabet, std::move(parsed));
}

bool FiniteCode::contains(const Word& w) const {
  return std::binary_search(words_.begin(), words_.end(), w);
}

std::optional<std::size_t> FiniteCode::index_of(const Word& w) const {
  auto it = std::lower_bound(words_.begin(), words_.end(), w);
  if (it == words_.end() || *it != w) return std::nullopt;
  return static_cast<std::size_t>(it - words_.begin());
}

std::size_t FiniteCode::total_length() const noexcept {
  std::size_t n = 0;
  for (const auto& w : words_) n += w.size();
  return n;
}

bool factorization_less(const Factorization& a, const Factorization& b) {
  return a.parts < b.parts;
}

WordPair make_pair_sorted(const Word& a, const Word& b) {
  return a < b ? WordPair{a, b} : WordPair{b, a};
}

Partition::Partition(FiniteCode code, std::vector<std::vector<Word>> classes,
                     std::vector<std::string> names)
    : code_(std::move(code)), classes_(std::move(classes)), names_(std::move(names)) {
  constexpr auto kUnowned = static_cast<std::size_t>(-1);
  owner_.assign(code_.size(), kUnowned);
  for (std::size_t c = 0; c < classes_.size(); ++c) {
    auto& cls = classes_[c];
    if (cls.empty()) throw InvalidInput("partition class " + std::to_string(c) + " is empty");
    std::sort(cls.begin(), cls.end());
    for (const auto& w : cls) {
      auto idx = code_.index_of(w);
      if (!idx) {
        throw InvalidInput("partition word '" + code_.alphabet().format(w) + "' is not a code word");
      }
      if (owner_[*idx] != kUnowned) {
        throw InvalidInput("code word '" + code_.alphabet().format(w) +
                           "' appears in more than one class");
      }
      owner_[*idx] = c;
    }
  }
  for (std::size_t i = 0; i < owner_.size(); ++i) {
    if (owner_[i] == kUnowned) {
      throw InvalidInput("code word '" + code_.alphabet().format(code_.words()[i]) +
                         "' is not covered by the partition");
    }
  }
  if (names_.empty()) {
    for (std::size_t c = 0; c < classes_.size(); ++c) names_.push_back("X" + std::to_string(c));
  } else if (names_.size() != classes_.size()) {
    throw InvalidInput("partition has a different number of names and classes");
  }
}

Partition Partition::trivial(const FiniteCode& code) {
  return Partition(code, {std::vector<Word>(code.words().begin(), code.words().end())});
}

Partition Partition::discrete(const FiniteCode& code) {
  std::vector<std::vector<Word>> classes;
  for (const auto& w : code.words()) classes.push_back({w});
  return Partition(code, std::move(classes));
}

std::size_t Partition::class_of(const Word& w) const {
  auto idx = code_.index_of(w);
  if (!idx) throw InvalidInput("'" + code_.alphabet().format(w) + "' is not a code word");
  return owner_[*idx];
}

std::vector<std::vector<Word>> Partition::normalized() const {
  auto out = classes_;
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

// ---------------------------------------------------------------------------
// Suffix graph

namespace {

/// Nodes are dangling suffixes: what one factorization has read beyond the
/// other. An arc extends the lagging factorization by one code word. Walks
/// from the opening arcs to the terminal are exactly the nontrivial prime
/// relations, up to swapping the two sides.
struct SuffixGraph {
  static constexpr std::size_t kStart = std::numeric_limits<std::size_t>::max();

  struct Arc {
    std::size_t from;                // kStart for arcs opening a relation
    std::size_t to;                  // terminal() when the relation closes
    std::vector<std::size_t> words;  // code word indices the arc introduces
    std::size_t grow;                // increase of the message length
    bool flips;                      // the lagging side takes the lead
  };

  std::vector<Word> nodes;
  std::vector<Arc> arcs;
  std::vector<std::vector<std::size_t>> out;  // node -> arc indices
  std::vector<char> coaccessible;

  std::size_t terminal() const { return nodes.size(); }
  bool useful(const Arc& a) const { return a.to == terminal() || coaccessible[a.to] != 0; }
};

SuffixGraph build_suffix_graph(const FiniteCode& x) {
  constexpr auto kTerminal = std::numeric_limits<std::size_t>::max();
  SuffixGraph g;
  std::map<Word, std::size_t> index;
  std::deque<std::size_t> queue;
  auto node = [&](Word s) {
    auto [it, fresh] = index.try_emplace(s, g.nodes.size());
    if (fresh) {
      g.nodes.push_back(std::move(s));
      queue.push_back(it->second);
    }
    return it->second;
  };
  auto words = x.words();
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = 0; j < words.size(); ++j) {
      if (words[i].size() >= words[j].size() || !words[j].starts_with(words[i])) continue;
      auto to = node(words[j].suffix_from(words[i].size()));
      g.arcs.push_back({SuffixGraph::kStart, to, {i, j}, words[j].size(), false});
    }
  }
  while (!queue.empty()) {
    auto n = queue.front();
    queue.pop_front();
    for (std::size_t k = 0; k < words.size(); ++k) {
      const Word s = g.nodes[n];
      const auto& w = words[k];
      if (w == s) {
        g.arcs.push_back({n, kTerminal, {k}, 0, false});
      } else if (s.starts_with(w)) {
        g.arcs.push_back({n, node(s.suffix_from(w.size())), {k}, 0, false});
      } else if (w.starts_with(s)) {
        g.arcs.push_back({n, node(w.suffix_from(s.size())), {k}, w.size() - s.size(), true});
      }
    }
  }
  g.out.assign(g.nodes.size(), {});
  for (std::size_t a = 0; a < g.arcs.size(); ++a) {
    auto& arc = g.arcs[a];
    if (arc.to == kTerminal) arc.to = g.terminal();
    if (arc.from != SuffixGraph::kStart) g.out[arc.from].push_back(a);
  }
  g.coaccessible.assign(g.nodes.size(), 0);
  std::vector<std::vector<std::size_t>> reverse(g.nodes.size() + 1);
  for (const auto& arc : g.arcs) {
    if (arc.from != SuffixGraph::kStart) reverse[arc.to].push_back(arc.from);
  }
  std::vector<std::size_t> stack{g.terminal()};
  while (!stack.empty()) {
    auto n = stack.back();
    stack.pop_back();
    for (auto p : reverse[n]) {
      if (!g.coaccessible[p]) {
        g.coaccessible[p] = 1;
        stack.push_back(p);
      }
    }
  }
  return g;
}

/// Least message growth needed to close a relation from each node
/// (Dijkstra towards the terminal); kUnreachable where impossible.
constexpr auto kUnreachable = std::numeric_limits<std::size_t>::max();

std::vector<std::size_t> completion_lengths(const SuffixGraph& g) {
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> reverse(g.nodes.size() + 1);
  for (const auto& arc : g.arcs) {
    if (arc.from != SuffixGraph::kStart) reverse[arc.to].emplace_back(arc.from, arc.grow);
  }
  std::vector<std::size_t> dist(g.nodes.size() + 1, kUnreachable);
  using Item = std::pair<std::size_t, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[g.terminal()] = 0;
  heap.emplace(0, g.terminal());
  while (!heap.empty()) {
    auto [d, n] = heap.top();
    heap.pop();
    if (d != dist[n]) continue;
    for (auto [p, w] : reverse[n]) {
      if (d + w < dist[p]) {
        dist[p] = d + w;
        heap.emplace(dist[p], p);
      }
    }
  }
  return dist;
}

/// The first `limit` factorizations of `w` in lexicographic order of their
/// part sequences.
std::vector<std::vector<Word>> least_factorizations(const FiniteCode& x, const Word& w,
                                                    std::size_t limit) {
  auto n = w.size();
  std::vector<char> feasible(n + 1, 0);
  feasible[n] = 1;
  auto matches = [&](const Word& c, std::size_t pos) {
    return pos + c.size() <= n && std::equal(c.begin(), c.end(), w.begin() + static_cast<std::ptrdiff_t>(pos));
  };
  for (std::size_t pos = n; pos-- > 0;) {
    for (const auto& c : x.words()) {
      if (matches(c, pos) && feasible[pos + c.size()]) {
        feasible[pos] = 1;
        break;
      }
    }
  }
  std::vector<std::vector<Word>> out;
  if (!feasible[0]) return out;
  std::vector<Word> parts;
  std::function<void(std::size_t)> walk = [&](std::size_t pos) {
    if (out.size() >= limit) return;
    if (pos == n) {
      out.push_back(parts);
      return;
    }
    for (const auto& c : x.words()) {
      if (!matches(c, pos) || !feasible[pos + c.size()]) continue;
      parts.push_back(c);
      walk(pos + c.size());
      parts.pop_back();
      if (out.size() >= limit) return;
    }
  };
  walk(0);
  return out;
}

/// Acceptor for messages admitting two distinct factorizations: pairs of
/// flower-automaton states with a flag recording that the two sides have
/// parted.
Fsa ambiguous_messages(const FiniteCode& x, const Budget& budget) {
  // Flower states: 0 is the hub, then one state per interior position of
  // each code word.
  std::vector<std::size_t> first_interior;
  std::size_t count = 1;
  for (const auto& w : x.words()) {
    first_interior.push_back(count);
    count += w.size() - 1;
  }
  std::vector<std::pair<std::size_t, std::size_t>> where(count, {0, 0});  // state -> (word, pos)
  for (std::size_t k = 0; k < x.size(); ++k) {
    for (std::size_t i = 1; i < x.words()[k].size(); ++i) where[first_interior[k] + i - 1] = {k, i};
  }
  auto step = [&](std::size_t s, Symbol a) {
    std::vector<std::size_t> next;
    auto advance = [&](std::size_t k, std::size_t i) {
      const auto& w = x.words()[k];
      if (w[i] != a) return;
      next.push_back(i + 1 == w.size() ? 0 : first_interior[k] + i);
    };
    if (s == 0) {
      for (std::size_t k = 0; k < x.size(); ++k) advance(k, 0);
    } else {
      advance(where[s].first, where[s].second);
    }
    return next;
  };

  Fsa out(x.alphabet());
  std::map<std::tuple<std::size_t, std::size_t, bool>, State> index;
  std::deque<std::tuple<std::size_t, std::size_t, bool>> queue;
  auto get = [&](std::size_t p, std::size_t q, bool parted) {
    auto [it, fresh] = index.try_emplace({p, q, parted}, 0);
    if (fresh) {
      budget.check(index.size());
      it->second = out.add_state(false, parted && p == 0 && q == 0);
      queue.emplace_back(p, q, parted);
    }
    return it->second;
  };
  out.set_initial(get(0, 0, false));
  while (!queue.empty()) {
    auto [p, q, parted] = queue.front();
    queue.pop_front();
    auto src = index.at({p, q, parted});
    for (Symbol a = 0; a < x.alphabet().size(); ++a) {
      auto left = step(p, a);
      auto right = step(q, a);
      for (auto l : left) {
        for (auto r : right) out.add_transition(src, a, get(l, r, parted || l != r));
      }
    }
  }
  return out;
}

Word concatenate(const std::vector<Word>& parts) {
  Word w;
  for (const auto& p : parts) w += p;
  return w;
}

}  // namespace

// ---------------------------------------------------------------------------
// Unique decipherability and prime relations

UdResult sp_is_ud(const FiniteCode& x) {
  // Sardinas-Patterson: close the residuals X^-1 X \ {1} under
  // U -> X^-1 U  and  U -> U^-1 X; X is UD iff the empty word never appears.
  std::set<Word> seen;
  std::deque<Word> queue;
  bool ud = true;
  auto add = [&](Word s) {
    if (s.empty()) {
      ud = false;
      return;
    }
    if (seen.insert(s).second) queue.push_back(std::move(s));
  };
  for (const auto& u : x.words()) {
    for (const auto& v : x.words()) {
      if (u != v && v.starts_with(u)) add(v.suffix_from(u.size()));
    }
  }
  while (ud && !queue.empty()) {
    auto s = std::move(queue.front());
    queue.pop_front();
    for (const auto& w : x.words()) {
      if (s.starts_with(w)) add(s.suffix_from(w.size()));
      if (w.starts_with(s)) add(w.suffix_from(s.size()));
    }
  }
  UdResult result;
  result.ud = ud;
  if (ud) return result;

  auto message = shortest_word(ambiguous_messages(x, Budget{}));
  if (!message) throw Error("internal: ambiguous code without an ambiguous message");
  auto parts = least_factorizations(x, *message, 2);
  if (parts.size() < 2) throw Error("internal: ambiguous message with a single factorization");
  result.witness = PrimeRelation{{*message, parts[0]}, {*message, parts[1]}};
  return result;
}

void for_each_prime_relation(const FiniteCode& x, std::size_t max_len,
                             const std::function<bool(const PrimeRelation&)>& visit) {
  auto g = build_suffix_graph(x);
  auto remaining = completion_lengths(g);
  auto words = x.words();

  for (std::size_t target = 1; target <= max_len; ++target) {
    std::vector<PrimeRelation> found;
    // parts[0] is left, parts[1] right; `leader` is the side ahead.
    std::array<std::vector<Word>, 2> parts;
    std::function<void(std::size_t, int, std::size_t)> walk = [&](std::size_t n, int leader,
                                                                  std::size_t length) {
      for (auto a : g.out[n]) {
        const auto& arc = g.arcs[a];
        auto next_length = length + arc.grow;
        if (remaining[arc.to] == kUnreachable || next_length + remaining[arc.to] > target) continue;
        int lagging = 1 - leader;
        parts[lagging].push_back(words[arc.words[0]]);
        if (arc.to == g.terminal()) {
          if (next_length == target && parts[0] < parts[1]) {
            auto m = concatenate(parts[0]);
            found.push_back({{m, parts[0]}, {m, parts[1]}});
          }
        } else {
          walk(arc.to, arc.flips ? lagging : leader, next_length);
        }
        parts[lagging].pop_back();
      }
    };
    for (const auto& arc : g.arcs) {
      if (arc.from != SuffixGraph::kStart) continue;
      if (remaining[arc.to] == kUnreachable || arc.grow + remaining[arc.to] > target) continue;
      const auto& shorter = words[arc.words[0]];
      const auto& longer = words[arc.words[1]];
      for (int longer_side = 0; longer_side < 2; ++longer_side) {
        parts[longer_side] = {longer};
        parts[1 - longer_side] = {shorter};
        walk(arc.to, longer_side, arc.grow);
      }
    }
    std::sort(found.begin(), found.end(), [](const PrimeRelation& a, const PrimeRelation& b) {
      return std::tie(a.left.message, a.left.parts, a.right.parts) <
             std::tie(b.left.message, b.left.parts, b.right.parts);
    });
    for (const auto& r : found) {
      if (!visit(r)) return;
    }
  }
}

std::vector<PrimeRelation> enumerate_prime_relations(const FiniteCode& x, std::size_t max_len) {
  std::vector<PrimeRelation> out;
  for_each_prime_relation(x, max_len, [&](const PrimeRelation& r) {
    out.push_back(r);
    return true;
  });
  return out;
}

std::set<WordPair> cooccurrence_pairs(const FiniteCode& x) {
  auto g = build_suffix_graph(x);
  auto n = g.nodes.size();
  auto words = x.words();

  // reach[a][b]: node b is reachable from node a (reflexive).
  std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<std::size_t> stack{s};
    reach[s][s] = 1;
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      for (auto a : g.out[v]) {
        auto t = g.arcs[a].to;
        if (t != g.terminal() && !reach[s][t]) {
          reach[s][t] = 1;
          stack.push_back(t);
        }
      }
    }
  }

  // after[u]: nodes reachable once some useful arc introducing u has been
  // taken. source[u]: nodes from which a useful arc introducing u leaves.
  std::vector<std::vector<char>> after(words.size(), std::vector<char>(n, 0));
  std::vector<std::vector<std::size_t>> source(words.size());
  std::set<WordPair> out;
  for (const auto& arc : g.arcs) {
    if (!g.useful(arc)) continue;
    for (std::size_t i = 0; i < arc.words.size(); ++i) {
      for (std::size_t j = i + 1; j < arc.words.size(); ++j) {
        out.insert(make_pair_sorted(words[arc.words[i]], words[arc.words[j]]));
      }
    }
    for (auto u : arc.words) {
      if (arc.from != SuffixGraph::kStart) source[u].push_back(arc.from);
      if (arc.to == g.terminal()) continue;
      for (std::size_t v = 0; v < n; ++v) {
        if (reach[arc.to][v]) after[u][v] = 1;
      }
    }
  }
  for (std::size_t u = 0; u < words.size(); ++u) {
    for (std::size_t v = 0; v < words.size(); ++v) {
      if (u == v) continue;
      bool linked = std::any_of(source[v].begin(), source[v].end(),
                                [&](std::size_t s) { return after[u][s] != 0; });
      if (linked) out.insert(make_pair_sorted(words[u], words[v]));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Partitions

Partition characteristic_partition(const FiniteCode& x) {
  detail::DisjointSets sets(x.size());
  for (const auto& [u, v] : cooccurrence_pairs(x)) sets.unite(*x.index_of(u), *x.index_of(v));
  std::vector<std::vector<Word>> classes;
  for (const auto& group : sets.groups()) {
    auto& cls = classes.emplace_back();
    for (auto i : group) cls.push_back(x.words()[i]);
  }
  return Partition(x, std::move(classes));
}

Partition CanonicalPartition::as_partition(const FiniteCode& code) const {
  std::vector<std::vector<Word>> classes;
  std::vector<std::string> names;
  if (!unambiguous.empty()) {
    classes.push_back(unambiguous);
    names.push_back("X0");
  }
  for (std::size_t i = 0; i < ta_components.size(); ++i) {
    classes.push_back(ta_components[i]);
    names.push_back("X" + std::to_string(i + 1));
  }
  return Partition(code, std::move(classes), std::move(names));
}

CanonicalPartition canonical_partition(const FiniteCode& x) {
  CanonicalPartition out;
  auto characteristic = characteristic_partition(x);
  for (const auto& cls : characteristic.classes()) {
    if (cls.size() == 1) {
      out.unambiguous.push_back(cls.front());
    } else {
      out.ta_components.push_back(cls);
    }
  }
  std::sort(out.unambiguous.begin(), out.unambiguous.end());
  return out;
}

bool is_coding(const FiniteCode& x, const Partition& p) {
  if (!(p.code() == x)) throw InvalidInput("partition is over a different code");
  auto characteristic = characteristic_partition(x);
  for (const auto& cls : characteristic.classes()) {
    auto owner = p.class_of(cls.front());
    for (const auto& w : cls) {
      if (p.class_of(w) != owner) return false;
    }
  }
  return true;
}

bool is_totally_ambiguous(const FiniteCode& x) {
  return x.size() > 1 && characteristic_partition(x).size() == 1;
}

std::optional<std::vector<Word>> factorize(const FiniteCode& x, const Word& w) {
  auto found = least_factorizations(x, w, 1);
  if (found.empty()) return std::nullopt;
  return std::move(found.front());
}

PFactorization p_factorize(const Word& w, const Partition& p) {
  if (w.empty()) throw InvalidInput("p_factorize requires a nonempty message");
  const auto& x = p.code();
  if (!is_coding(x, p)) throw PreconditionViolation("partition is not a coding partition");
  auto parts = factorize(x, w);
  if (!parts) throw InvalidInput("'" + x.alphabet().format(w) + "' is not a message of the code");
  PFactorization out{w, {}};
  for (const auto& part : *parts) {
    auto cls = p.class_of(part);
    if (!out.blocks.empty() && out.blocks.back().class_index == cls) {
      out.blocks.back().block += part;
    } else {
      out.blocks.push_back({cls, part});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Oracle

namespace {

bool prime_by_definition(const std::vector<Word>& left, const std::vector<Word>& right) {
  std::set<std::size_t> cuts;
  std::size_t len = 0;
  for (std::size_t i = 0; i + 1 < left.size(); ++i) cuts.insert(len += left[i].size());
  len = 0;
  for (std::size_t j = 0; j + 1 < right.size(); ++j) {
    if (cuts.count(len += right[j].size())) return false;
  }
  return true;
}

}  // namespace

OracleResult brute_force_oracle(const FiniteCode& x, std::size_t max_len) {
  OracleResult result;
  std::array<std::vector<Word>, 2> parts;
  std::array<Word, 2> text;
  std::function<void()> extend = [&]() {
    auto behind = text[0].size() <= text[1].size() ? 0 : 1;
    const auto& lead = text[1 - behind];
    if (!lead.starts_with(text[behind])) return;
    if (text[0].size() == text[1].size()) {
      // Both sides meet: any continuation would share this cut point.
      if (parts[0] != parts[1] && prime_by_definition(parts[0], parts[1])) {
        result.ud = false;
        for (const auto& side : parts) {
          for (const auto& u : side) {
            for (const auto& v : parts[0]) {
              if (u != v) result.merges.insert(make_pair_sorted(u, v));
            }
            for (const auto& v : parts[1]) {
              if (u != v) result.merges.insert(make_pair_sorted(u, v));
            }
          }
        }
      }
      return;
    }
    for (const auto& w : x.words()) {
      if (text[behind].size() + w.size() > max_len) continue;
      auto saved = text[behind];
      text[behind] += w;
      parts[behind].push_back(w);
      bool consistent = text[behind].starts_with(lead) || lead.starts_with(text[behind]);
      if (consistent) extend();
      parts[behind].pop_back();
      text[behind] = std::move(saved);
    }
  };
  for (const auto& u : x.words()) {
    for (const auto& v : x.words()) {
      if (u == v || u.size() > max_len || v.size() > max_len) continue;
      parts = {std::vector<Word>{u}, std::vector<Word>{v}};
      text = {u, v};
      extend();
    }
  }
  return result;
}

}  // namespace partfact
