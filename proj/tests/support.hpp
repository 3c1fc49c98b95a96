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

#pragma once

// Shared fixtures and brute-force oracles for the test binaries. The oracles
// deliberately avoid the library's algorithms: they work on explicit words,
// explicit run configurations and explicit factorizations.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "partfact/automata.hpp"
#include "partfact/finite_code.hpp"
#include "partfact/words.hpp"

namespace partfact::testing {

inline FiniteCode code(std::string_view alphabet, const std::vector<std::string>& words) {
  return FiniteCode::parse(Alphabet(alphabet), words);
}

inline std::vector<Word> parse_all(const Alphabet& a, const std::vector<std::string>& words) {
  std::vector<Word> out;
  for (const auto& w : words) out.push_back(a.parse(w));
  return out;
}

inline std::vector<std::string> format_all(const Alphabet& a, const std::vector<Word>& words) {
  std::vector<std::string> out;
  for (const auto& w : words) out.push_back(a.format(w));
  return out;
}

inline std::vector<std::vector<std::string>> format_classes(const Partition& p) {
  std::vector<std::vector<std::string>> out;
  for (const auto& cls : p.normalized()) out.push_back(format_all(p.code().alphabet(), cls));
  return out;
}

inline Partition partition(const FiniteCode& x, const std::vector<std::vector<std::string>>& classes) {
  std::vector<std::vector<Word>> parsed;
  for (const auto& cls : classes) parsed.push_back(parse_all(x.alphabet(), cls));
  return Partition(x, std::move(parsed));
}

/// The code of the seven-word running example.
inline FiniteCode example_code() {
  return code("01", {"00", "0010", "1000", "11", "1111", "010", "011"});
}

/// All words over `a` of length <= max_len, shortlex order.
inline std::vector<Word> all_words(const Alphabet& a, std::size_t max_len) {
  std::vector<Word> out{Word{}};
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i].size() == max_len) continue;
    for (Symbol s = 0; s < a.size(); ++s) {
      auto w = out[i];
      w.push_back(s);
      out.push_back(std::move(w));
    }
  }
  return out;
}

/// Number of factorizations of `w` over `words`, saturated at `cap`.
inline std::size_t count_factorizations(const std::vector<Word>& words, const Word& w,
                                        std::size_t cap = 2) {
  std::vector<std::size_t> ways(w.size() + 1, 0);
  ways[0] = 1;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (ways[i] == 0) continue;
    for (const auto& c : words) {
      if (i + c.size() <= w.size() && w.substr(i, c.size()) == c) {
        ways[i + c.size()] = std::min(cap, ways[i + c.size()] + ways[i]);
      }
    }
  }
  return ways[w.size()];
}

/// Number of P-factorizations of `w` (alternating blocks, each a product of
/// words of one class), saturated at `cap`.
inline std::size_t count_p_factorizations(const std::vector<std::vector<Word>>& classes,
                                          const Word& w, std::size_t cap = 2) {
  const std::size_t k = classes.size();
  // ways[pos][c]: block sequences covering w[0..pos) whose last block is of
  // class c; index k stands for "no block yet".
  std::vector<std::vector<std::size_t>> ways(w.size() + 1, std::vector<std::size_t>(k + 1, 0));
  ways[0][k] = 1;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t last = 0; last <= k; ++last) {
      if (ways[i][last] == 0) continue;
      for (std::size_t c = 0; c < k; ++c) {
        if (c == last) continue;
        for (std::size_t j = i + 1; j <= w.size(); ++j) {
          if (count_factorizations(classes[c], w.substr(i, j - i), 1) == 0) continue;
          ways[j][c] = std::min(cap, ways[j][c] + ways[i][last]);
        }
      }
    }
  }
  std::size_t total = 0;
  for (std::size_t c = 0; c < k; ++c) total = std::min(cap, total + ways[w.size()][c]);
  return total;
}

/// Number of accepting runs of `a` on `w`, saturated at 2. A run is a path
/// in the configuration graph (state, position) from an initial state at 0
/// to an accepting state at |w|; a cycle on such a path means infinitely
/// many runs.
inline std::size_t count_runs(const Fsa& a, const Word& w) {
  const std::size_t n = a.num_states();
  const std::size_t m = w.size() + 1;
  auto id = [&](State s, std::size_t pos) { return pos * n + s; };
  std::vector<std::vector<std::size_t>> succ(n * m);
  for (std::size_t pos = 0; pos < m; ++pos) {
    for (State s = 0; s < n; ++s) {
      for (auto t : a.epsilons(s)) succ[id(s, pos)].push_back(id(t, pos));
      if (pos + 1 < m) {
        for (const auto& e : a.edges(s)) {
          if (e.symbol == w[pos]) succ[id(s, pos)].push_back(id(e.target, pos + 1));
        }
      }
    }
  }
  std::vector<std::vector<std::size_t>> pred(n * m);
  for (std::size_t v = 0; v < n * m; ++v) {
    for (auto t : succ[v]) pred[t].push_back(v);
  }
  auto flood = [&](std::vector<std::size_t> seeds, const std::vector<std::vector<std::size_t>>& g) {
    std::vector<char> seen(n * m, 0);
    for (auto s : seeds) seen[s] = 1;
    while (!seeds.empty()) {
      auto v = seeds.back();
      seeds.pop_back();
      for (auto t : g[v]) {
        if (!seen[t]) {
          seen[t] = 1;
          seeds.push_back(t);
        }
      }
    }
    return seen;
  };
  std::vector<std::size_t> starts, ends;
  for (auto s : a.initial_states()) starts.push_back(id(s, 0));
  for (State s = 0; s < n; ++s) {
    if (a.is_accepting(s)) ends.push_back(id(s, w.size()));
  }
  auto from = flood(starts, succ);
  auto to = flood(ends, pred);
  std::vector<char> useful(n * m);
  for (std::size_t v = 0; v < n * m; ++v) useful[v] = from[v] && to[v];

  // Paths from initial configurations, with cycle detection on useful nodes.
  std::vector<int> color(n * m, 0);
  std::vector<std::size_t> paths(n * m, 0);
  bool cyclic = false;
  std::function<std::size_t(std::size_t)> count = [&](std::size_t v) -> std::size_t {
    if (color[v] == 1) {
      cyclic = true;
      return 2;
    }
    if (color[v] == 2) return paths[v];
    color[v] = 1;
    std::size_t total = 0;
    if (v >= w.size() * n && a.is_accepting(static_cast<State>(v - w.size() * n))) total = 1;
    for (auto t : succ[v]) {
      if (useful[t]) total = std::min<std::size_t>(2, total + count(t));
    }
    color[v] = 2;
    return paths[v] = total;
  };
  std::size_t total = 0;
  for (auto s : starts) {
    if (useful[s]) total = std::min<std::size_t>(2, total + count(s));
  }
  return cyclic ? 2 : total;
}

/// Deterministic pseudo-random source for property tests.
class Sampler {
 public:
  explicit Sampler(std::uint32_t seed) : rng_(seed) {}

  std::size_t uniform(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
  }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  Word word(std::size_t alphabet_size, std::size_t min_len, std::size_t max_len) {
    Word w;
    auto len = uniform(min_len, max_len);
    for (std::size_t i = 0; i < len; ++i) w.push_back(static_cast<Symbol>(uniform(0, alphabet_size - 1)));
    return w;
  }

  /// A random finite code with at most `max_words` words of length at most
  /// `max_len` over the first `alphabet_size` letters of "abc".
  FiniteCode finite_code(std::size_t alphabet_size, std::size_t max_words, std::size_t max_len) {
    Alphabet alphabet(std::string_view("abc").substr(0, alphabet_size));
    std::set<Word> words;
    std::size_t available = 0;
    for (std::size_t len = 1, n = alphabet_size; len <= max_len; ++len, n *= alphabet_size) available += n;
    auto target = uniform(1, std::min(max_words, available));
    while (words.size() < target) words.insert(word(alphabet_size, 1, max_len));
    return FiniteCode(alphabet, {words.begin(), words.end()});
  }

  /// A random acceptor with up to `max_states` states, possibly with
  /// spontaneous transitions.
  Fsa acceptor(const Alphabet& alphabet, std::size_t max_states, bool epsilons) {
    Fsa a(alphabet);
    auto n = uniform(1, max_states);
    for (std::size_t i = 0; i < n; ++i) a.add_state(coin(0.3), coin(0.4));
    a.set_initial(0);
    auto edges = uniform(n, 3 * n);
    for (std::size_t i = 0; i < edges; ++i) {
      auto from = static_cast<State>(uniform(0, n - 1));
      auto to = static_cast<State>(uniform(0, n - 1));
      if (epsilons && coin(0.2)) {
        if (from != to) a.add_epsilon(from, to);
      } else {
        a.add_transition(from, static_cast<Symbol>(uniform(0, alphabet.size() - 1)), to);
      }
    }
    return a;
  }

  /// A random regular expression over the first `alphabet_size` letters of
  /// "abc", of nesting depth at most `depth`.
  std::string regex(std::size_t alphabet_size, std::size_t depth) {
    if (depth == 0 || coin(0.3)) return std::string(1, "abc"[uniform(0, alphabet_size - 1)]);
    switch (uniform(0, 3)) {
      case 0:
        return "(" + regex(alphabet_size, depth - 1) + "|" + regex(alphabet_size, depth - 1) + ")";
      case 1:
        return regex(alphabet_size, depth - 1) + regex(alphabet_size, depth - 1);
      case 2:
        return "(" + regex(alphabet_size, depth - 1) + ")*";
      default:
        return "(" + regex(alphabet_size, depth - 1) + ")+";
    }
  }

  /// A random partition of `x` into at most `max_classes` classes.
  Partition partition(const FiniteCode& x, std::size_t max_classes) {
    auto k = uniform(1, std::min(max_classes, x.size()));
    std::vector<std::vector<Word>> classes(k);
    for (const auto& w : x.words()) classes[uniform(0, k - 1)].push_back(w);
    std::erase_if(classes, [](const auto& c) { return c.empty(); });
    return Partition(x, std::move(classes));
  }

 private:
  std::mt19937 rng_;
};

/// Brute-force characteristic partition restricted to a bound: components of
/// the merges found by the exhaustive oracle.
inline std::vector<std::vector<Word>> components(const FiniteCode& x,
                                                 const std::set<WordPair>& pairs) {
  std::map<Word, Word> parent;
  for (const auto& w : x.words()) parent[w] = w;
  std::function<Word(const Word&)> find = [&](const Word& w) {
    return parent[w] == w ? w : parent[w] = find(parent[w]);
  };
  for (const auto& [u, v] : pairs) parent[find(u)] = find(v);
  std::map<Word, std::vector<Word>> groups;
  for (const auto& w : x.words()) groups[find(w)].push_back(w);
  std::vector<std::vector<Word>> out;
  for (auto& [root, cls] : groups) out.push_back(cls);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace partfact::testing
