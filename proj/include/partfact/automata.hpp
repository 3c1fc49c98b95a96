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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "partfact/words.hpp"

namespace partfact {

using State = std::uint32_t;

inline constexpr std::size_t kDefaultStateCap = 100000;

/// Per-call resource limits for automaton constructions.
struct Budget {
  std::size_t state_cap = kDefaultStateCap;

  /// Throws ResourceLimit when `states` exceeds the cap.
  void check(std::size_t states) const;
};

struct Edge {
  Symbol symbol;
  State target;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Finite-state acceptor over an Alphabet, possibly nondeterministic and with
/// spontaneous (empty-word) transitions. Transitions are a set: inserting an
/// existing one is a no-op.
class Fsa {
 public:
  explicit Fsa(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t num_states() const noexcept { return edges_.size(); }
  std::size_t num_transitions() const noexcept;

  State add_state(bool initial = false, bool accepting = false);
  void add_transition(State from, Symbol symbol, State to);
  void add_epsilon(State from, State to);
  void set_initial(State s, bool value = true);
  void set_accepting(State s, bool value = true);

  /// Outgoing symbol transitions of `s`, sorted by (symbol, target).
  std::span<const Edge> edges(State s) const { return edges_.at(s); }
  /// Targets reachable from `s` on one spontaneous move, sorted.
  std::span<const State> epsilons(State s) const { return epsilons_.at(s); }
  /// Sorted list of initial states.
  std::span<const State> initial_states() const noexcept { return initial_; }

  bool is_initial(State s) const { return initial_flag_.at(s) != 0; }
  bool is_accepting(State s) const { return accepting_.at(s) != 0; }

  bool has_epsilon() const noexcept { return epsilon_count_ > 0; }

  /// One initial state, no spontaneous moves, at most one transition per
  /// (state, symbol). Maintained incrementally.
  bool is_deterministic() const noexcept {
    return initial_.size() == 1 && epsilon_count_ == 0 && conflicts_ == 0;
  }

  /// Target of the unique `symbol` transition of a deterministic acceptor.
  std::optional<State> step(State s, Symbol symbol) const;

 private:
  void check_state(State s) const;

  Alphabet alphabet_;
  std::vector<std::vector<Edge>> edges_;
  std::vector<std::vector<State>> epsilons_;
  std::vector<State> initial_;
  std::vector<char> initial_flag_;
  std::vector<char> accepting_;
  std::size_t epsilon_count_ = 0;
  std::size_t conflicts_ = 0;
};

// Elementary languages.
Fsa empty_language(const Alphabet& alphabet);
Fsa epsilon_language(const Alphabet& alphabet);
Fsa universal_language(const Alphabet& alphabet);
Fsa word_language(const Alphabet& alphabet, const Word& w);
Fsa finite_language(const Alphabet& alphabet, std::span<const Word> words);

bool accepts(const Fsa& a, const Word& w);
/// All accepted words of length <= max_len, in shortlex order.
std::vector<Word> enumerate(const Fsa& a, std::size_t max_len);

/// Keeps only states that are both accessible and co-accessible.
Fsa trim(const Fsa& a);
/// Equivalent trimmed acceptor without spontaneous transitions.
Fsa remove_epsilon(const Fsa& a);
/// Trimmed deterministic acceptor (subset construction).
Fsa determinize(const Fsa& a, const Budget& budget = {});
/// Minimal trimmed deterministic acceptor (Moore partition refinement).
Fsa minimize(const Fsa& a, const Budget& budget = {});

/// True iff the language is finite.
bool is_finite(const Fsa& a);
/// The accepted words, shortlex sorted. Throws PreconditionViolation when the
/// language is infinite.
std::vector<Word> finite_words(const Fsa& a);

enum class BinaryOp { Union, Intersection, Difference, Concat };
enum class UnaryOp { Star, Plus, Complement, FactorClosure };
enum class Query { IsEmpty, IsUniversal, Includes, Equivalent };

/// Every result is trimmed and free of spontaneous transitions.
Fsa combine(BinaryOp op, const Fsa& l, const Fsa& r, const Budget& budget = {});
Fsa closure(UnaryOp op, const Fsa& l, const Budget& budget = {});

inline Fsa unite(const Fsa& l, const Fsa& r, const Budget& b = {}) {
  return combine(BinaryOp::Union, l, r, b);
}
inline Fsa intersect(const Fsa& l, const Fsa& r, const Budget& b = {}) {
  return combine(BinaryOp::Intersection, l, r, b);
}
inline Fsa subtract(const Fsa& l, const Fsa& r, const Budget& b = {}) {
  return combine(BinaryOp::Difference, l, r, b);
}
inline Fsa concat(const Fsa& l, const Fsa& r, const Budget& b = {}) {
  return combine(BinaryOp::Concat, l, r, b);
}
inline Fsa star(const Fsa& l, const Budget& b = {}) { return closure(UnaryOp::Star, l, b); }
inline Fsa plus(const Fsa& l, const Budget& b = {}) { return closure(UnaryOp::Plus, l, b); }
inline Fsa complement(const Fsa& l, const Budget& b = {}) {
  return closure(UnaryOp::Complement, l, b);
}
inline Fsa factor_closure(const Fsa& l, const Budget& b = {}) {
  return closure(UnaryOp::FactorClosure, l, b);
}

/// { s : x s in R for some x in L }.
Fsa left_quotient(const Fsa& l, const Fsa& r, const Budget& budget = {});

/// Unary queries (IsEmpty, IsUniversal). Throws InvalidInput for binary ones.
bool decide(Query q, const Fsa& l, const Budget& budget = {});
/// Binary queries. `Includes` asks whether L(r) is a subset of L(l).
/// Throws InvalidInput for unary ones.
bool decide(Query q, const Fsa& l, const Fsa& r, const Budget& budget = {});

bool is_empty(const Fsa& a);
bool is_universal(const Fsa& a, const Budget& budget = {});
/// L(sub) is a subset of L(super).
bool includes(const Fsa& super, const Fsa& sub, const Budget& budget = {});
bool equivalent(const Fsa& l, const Fsa& r, const Budget& budget = {});

/// Shortlex-least accepted word; nothing iff the language is empty.
std::optional<Word> shortest_word(const Fsa& a);

/// Shortlex-least word with at least two distinct accepting runs, counting
/// spontaneous moves as part of a run. Nothing iff the acceptor is
/// unambiguous.
std::optional<Word> ambiguity_witness(const Fsa& a, const Budget& budget = {});
inline bool is_unambiguous(const Fsa& a, const Budget& budget = {}) {
  return !ambiguity_witness(a, budget).has_value();
}

}  // namespace partfact
