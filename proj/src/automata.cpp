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

#include "partfact/automata.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <string>
#include <utility>

#include "partfact/errors.hpp"

namespace partfact {

void Budget::check(std::size_t states) const {
  if (states > state_cap) {
    throw ResourceLimit("automaton construction exceeded the state cap of " +
                        std::to_string(state_cap) + " states");
  }
}

// ---------------------------------------------------------------------------
// Fsa

std::size_t Fsa::num_transitions() const noexcept {
  std::size_t n = epsilon_count_;
  for (const auto& e : edges_) n += e.size();
  return n;
}

void Fsa::check_state(State s) const {
  if (s >= edges_.size()) throw InvalidInput("state index out of range");
}

State Fsa::add_state(bool initial, bool accepting) {
  auto s = static_cast<State>(edges_.size());
  edges_.emplace_back();
  epsilons_.emplace_back();
  initial_flag_.push_back(0);
  accepting_.push_back(0);
  if (initial) set_initial(s);
  if (accepting) set_accepting(s);
  return s;
}

void Fsa::add_transition(State from, Symbol symbol, State to) {
  check_state(from);
  check_state(to);
  if (symbol >= alphabet_.size()) throw InvalidInput("transition symbol is not in the alphabet");
  auto& out = edges_[from];
  Edge e{symbol, to};
  auto it = std::lower_bound(out.begin(), out.end(), e);
  if (it != out.end() && *it == e) return;
  bool same_symbol = (it != out.end() && it->symbol == symbol) ||
                     (it != out.begin() && std::prev(it)->symbol == symbol);
  if (same_symbol) ++conflicts_;
  out.insert(it, e);
}

void Fsa::add_epsilon(State from, State to) {
  check_state(from);
  check_state(to);
  auto& out = epsilons_[from];
  auto it = std::lower_bound(out.begin(), out.end(), to);
  if (it != out.end() && *it == to) return;
  out.insert(it, to);
  ++epsilon_count_;
}

void Fsa::set_initial(State s, bool value) {
  check_state(s);
  if ((initial_flag_[s] != 0) == value) return;
  initial_flag_[s] = value ? 1 : 0;
  auto it = std::lower_bound(initial_.begin(), initial_.end(), s);
  if (value) {
    initial_.insert(it, s);
  } else {
    initial_.erase(it);
  }
}

void Fsa::set_accepting(State s, bool value) {
  check_state(s);
  accepting_[s] = value ? 1 : 0;
}

std::optional<State> Fsa::step(State s, Symbol symbol) const {
  const auto& out = edges_.at(s);
  auto it = std::lower_bound(out.begin(), out.end(), Edge{symbol, 0});
  if (it == out.end() || it->symbol != symbol) return std::nullopt;
  return it->target;
}

// ---------------------------------------------------------------------------
// Helpers

namespace {

using StateSet = std::vector<State>;

void require_same_alphabet(const Fsa& l, const Fsa& r) {
  if (!(l.alphabet() == r.alphabet())) throw AlphabetMismatch();
}

/// Sorted spontaneous closure of a sorted state set.
StateSet epsilon_closure(const Fsa& a, StateSet states) {
  if (!a.has_epsilon()) return states;
  std::vector<char> seen(a.num_states(), 0);
  std::vector<State> stack;
  for (auto s : states) {
    seen[s] = 1;
    stack.push_back(s);
  }
  while (!stack.empty()) {
    auto s = stack.back();
    stack.pop_back();
    for (auto t : a.epsilons(s)) {
      if (!seen[t]) {
        seen[t] = 1;
        states.push_back(t);
        stack.push_back(t);
      }
    }
  }
  std::sort(states.begin(), states.end());
  return states;
}

/// Symbol successors of a state set (no closure applied).
StateSet post(const Fsa& a, const StateSet& states, Symbol symbol) {
  StateSet out;
  for (auto s : states) {
    auto edges = a.edges(s);
    auto it = std::lower_bound(edges.begin(), edges.end(), Edge{symbol, 0});
    for (; it != edges.end() && it->symbol == symbol; ++it) out.push_back(it->target);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool any_accepting(const Fsa& a, const StateSet& states) {
  return std::any_of(states.begin(), states.end(), [&](State s) { return a.is_accepting(s); });
}

StateSet initial_set(const Fsa& a) {
  auto init = a.initial_states();
  return epsilon_closure(a, StateSet(init.begin(), init.end()));
}

/// Complete deterministic transition table.
struct DenseDfa {
  std::size_t symbols = 0;
  std::vector<State> delta;  // state * symbols + symbol
  std::vector<char> accepting;
  State start = 0;

  std::size_t size() const { return accepting.size(); }
  State next(State s, Symbol a) const { return delta[s * symbols + a]; }
};

DenseDfa to_dense(const Fsa& a, const Budget& budget) {
  Fsa d = determinize(a, budget);
  DenseDfa out;
  out.symbols = a.alphabet().size();
  if (d.num_states() == 0) {
    out.delta.assign(out.symbols, 0);
    out.accepting = {0};
    return out;
  }
  auto n = d.num_states();
  auto sink = static_cast<State>(n);
  out.delta.assign((n + 1) * out.symbols, sink);
  out.accepting.assign(n + 1, 0);
  for (State s = 0; s < n; ++s) {
    out.accepting[s] = d.is_accepting(s) ? 1 : 0;
    for (const auto& e : d.edges(s)) out.delta[s * out.symbols + e.symbol] = e.target;
  }
  out.start = d.initial_states().front();
  budget.check(n + 1);
  return out;
}

Fsa from_dense(const Alphabet& alphabet, const DenseDfa& d) {
  Fsa out(alphabet);
  for (std::size_t s = 0; s < d.size(); ++s) out.add_state(false, d.accepting[s] != 0);
  out.set_initial(d.start);
  for (State s = 0; s < d.size(); ++s) {
    for (Symbol a = 0; a < d.symbols; ++a) out.add_transition(s, a, d.next(s, a));
  }
  return trim(out);
}

/// Copies `src` into `dst` with state indices shifted by the returned offset.
State append_copy(Fsa& dst, const Fsa& src) {
  auto offset = static_cast<State>(dst.num_states());
  for (State s = 0; s < src.num_states(); ++s) dst.add_state(false, src.is_accepting(s));
  for (State s = 0; s < src.num_states(); ++s) {
    for (const auto& e : src.edges(s)) dst.add_transition(offset + s, e.symbol, offset + e.target);
    for (auto t : src.epsilons(s)) dst.add_epsilon(offset + s, offset + t);
  }
  return offset;
}

/// Product of two spontaneous-move-free acceptors over reachable pairs.
Fsa product(const Fsa& l, const Fsa& r, const Budget& budget) {
  Fsa out(l.alphabet());
  std::map<std::pair<State, State>, State> index;
  std::deque<std::pair<State, State>> queue;
  auto get = [&](State p, State q) {
    auto [it, fresh] = index.try_emplace({p, q}, 0);
    if (fresh) {
      budget.check(index.size());
      it->second = out.add_state(false, l.is_accepting(p) && r.is_accepting(q));
      queue.emplace_back(p, q);
    }
    return it->second;
  };
  for (auto p : l.initial_states()) {
    for (auto q : r.initial_states()) out.set_initial(get(p, q));
  }
  while (!queue.empty()) {
    auto [p, q] = queue.front();
    queue.pop_front();
    auto src = index.at({p, q});
    auto le = l.edges(p);
    auto re = r.edges(q);
    for (const auto& x : le) {
      auto it = std::lower_bound(re.begin(), re.end(), Edge{x.symbol, 0});
      for (; it != re.end() && it->symbol == x.symbol; ++it) {
        out.add_transition(src, x.symbol, get(x.target, it->target));
      }
    }
  }
  return trim(out);
}

/// Tarjan SCC over spontaneous moves. Components are numbered in reverse
/// topological order (a component only reaches lower-numbered ones).
struct EpsilonSccs {
  std::vector<std::size_t> component;
  std::vector<char> cyclic;
};

EpsilonSccs epsilon_sccs(const Fsa& a) {
  auto n = a.num_states();
  EpsilonSccs out;
  out.component.assign(n, static_cast<std::size_t>(-1));
  std::vector<std::size_t> low(n, 0), order(n, 0);
  std::vector<char> on_stack(n, 0), visited(n, 0);
  std::vector<State> stack;
  std::size_t counter = 0;
  // Iterative Tarjan: frames of (state, next epsilon index).
  std::vector<std::pair<State, std::size_t>> frames;
  for (State root = 0; root < n; ++root) {
    if (visited[root]) continue;
    frames.emplace_back(root, 0);
    visited[root] = 1;
    order[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!frames.empty()) {
      auto& [s, i] = frames.back();
      auto eps = a.epsilons(s);
      if (i < eps.size()) {
        auto t = eps[i++];
        if (!visited[t]) {
          visited[t] = 1;
          order[t] = low[t] = counter++;
          stack.push_back(t);
          on_stack[t] = 1;
          frames.emplace_back(t, 0);
        } else if (on_stack[t]) {
          low[s] = std::min(low[s], order[t]);
        }
        continue;
      }
      State done = s;
      frames.pop_back();
      if (!frames.empty()) {
        auto parent = frames.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
      if (low[done] == order[done]) {
        auto id = out.cyclic.size();
        std::size_t members = 0;
        bool self_loop = false;
        State t;
        do {
          t = stack.back();
          stack.pop_back();
          on_stack[t] = 0;
          out.component[t] = id;
          ++members;
          auto eps_t = a.epsilons(t);
          if (std::binary_search(eps_t.begin(), eps_t.end(), t)) self_loop = true;
        } while (t != done);
        out.cyclic.push_back(members > 1 || self_loop ? 1 : 0);
      }
    }
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Elementary languages

Fsa empty_language(const Alphabet& alphabet) { return Fsa(alphabet); }

Fsa epsilon_language(const Alphabet& alphabet) {
  Fsa out(alphabet);
  out.add_state(true, true);
  return out;
}

Fsa universal_language(const Alphabet& alphabet) {
  Fsa out(alphabet);
  auto s = out.add_state(true, true);
  for (Symbol a = 0; a < alphabet.size(); ++a) out.add_transition(s, a, s);
  return out;
}

Fsa word_language(const Alphabet& alphabet, const Word& w) {
  Fsa out(alphabet);
  auto s = out.add_state(true, w.empty());
  for (std::size_t i = 0; i < w.size(); ++i) {
    auto t = out.add_state(false, i + 1 == w.size());
    out.add_transition(s, w[i], t);
    s = t;
  }
  return out;
}

Fsa finite_language(const Alphabet& alphabet, std::span<const Word> words) {
  // Prefix tree: deterministic and trimmed by construction.
  Fsa out(alphabet);
  if (words.empty()) return out;
  out.add_state(true, false);
  for (const auto& w : words) {
    State s = 0;
    for (auto a : w) {
      if (a >= alphabet.size()) throw InvalidInput("word symbol is not in the alphabet");
      auto next = out.step(s, a);
      if (!next) {
        next = out.add_state();
        out.add_transition(s, a, *next);
      }
      s = *next;
    }
    out.set_accepting(s);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Membership

bool accepts(const Fsa& a, const Word& w) {
  auto current = initial_set(a);
  for (auto s : w) {
    if (current.empty()) return false;
    current = epsilon_closure(a, post(a, current, s));
  }
  return any_accepting(a, current);
}

std::vector<Word> enumerate(const Fsa& a, std::size_t max_len) {
  std::vector<Word> out;
  Word w;
  std::function<void(const StateSet&)> walk = [&](const StateSet& current) {
    if (any_accepting(a, current)) out.push_back(w);
    if (w.size() == max_len) return;
    for (Symbol s = 0; s < a.alphabet().size(); ++s) {
      auto next = epsilon_closure(a, post(a, current, s));
      if (next.empty()) continue;
      w.push_back(s);
      walk(next);
      w.pop_back();
    }
  };
  auto start = initial_set(a);
  if (!start.empty()) walk(start);
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Structural transformations

Fsa trim(const Fsa& a) {
  auto n = a.num_states();
  std::vector<char> forward(n, 0), backward(n, 0);
  std::vector<std::vector<State>> reverse(n);
  for (State s = 0; s < n; ++s) {
    for (const auto& e : a.edges(s)) reverse[e.target].push_back(s);
    for (auto t : a.epsilons(s)) reverse[t].push_back(s);
  }
  std::vector<State> stack(a.initial_states().begin(), a.initial_states().end());
  for (auto s : stack) forward[s] = 1;
  while (!stack.empty()) {
    auto s = stack.back();
    stack.pop_back();
    auto visit = [&](State t) {
      if (!forward[t]) {
        forward[t] = 1;
        stack.push_back(t);
      }
    };
    for (const auto& e : a.edges(s)) visit(e.target);
    for (auto t : a.epsilons(s)) visit(t);
  }
  for (State s = 0; s < n; ++s) {
    if (a.is_accepting(s)) {
      backward[s] = 1;
      stack.push_back(s);
    }
  }
  while (!stack.empty()) {
    auto s = stack.back();
    stack.pop_back();
    for (auto t : reverse[s]) {
      if (!backward[t]) {
        backward[t] = 1;
        stack.push_back(t);
      }
    }
  }
  constexpr auto kDropped = static_cast<State>(-1);
  std::vector<State> renumber(n, kDropped);
  Fsa out(a.alphabet());
  for (State s = 0; s < n; ++s) {
    if (forward[s] && backward[s]) {
      renumber[s] = out.add_state(a.is_initial(s), a.is_accepting(s));
    }
  }
  for (State s = 0; s < n; ++s) {
    if (renumber[s] == kDropped) continue;
    for (const auto& e : a.edges(s)) {
      if (renumber[e.target] != kDropped) out.add_transition(renumber[s], e.symbol, renumber[e.target]);
    }
    for (auto t : a.epsilons(s)) {
      if (renumber[t] != kDropped) out.add_epsilon(renumber[s], renumber[t]);
    }
  }
  return out;
}

Fsa remove_epsilon(const Fsa& a) {
  if (!a.has_epsilon()) return trim(a);
  Fsa out(a.alphabet());
  for (State s = 0; s < a.num_states(); ++s) out.add_state(a.is_initial(s), false);
  for (State s = 0; s < a.num_states(); ++s) {
    auto reach = epsilon_closure(a, {s});
    for (auto p : reach) {
      if (a.is_accepting(p)) out.set_accepting(s);
      for (const auto& e : a.edges(p)) out.add_transition(s, e.symbol, e.target);
    }
  }
  return trim(out);
}

Fsa determinize(const Fsa& a, const Budget& budget) {
  Fsa src = remove_epsilon(a);
  Fsa out(a.alphabet());
  if (src.num_states() == 0) return out;
  if (src.is_deterministic()) return src;
  std::map<StateSet, State> index;
  std::deque<StateSet> queue;
  auto get = [&](StateSet set) {
    auto [it, fresh] = index.try_emplace(set, 0);
    if (fresh) {
      budget.check(index.size());
      it->second = out.add_state(false, any_accepting(src, set));
      queue.push_back(std::move(set));
    }
    return it->second;
  };
  auto init = src.initial_states();
  out.set_initial(get(StateSet(init.begin(), init.end())));
  while (!queue.empty()) {
    auto set = std::move(queue.front());
    queue.pop_front();
    auto from = index.at(set);
    for (Symbol s = 0; s < src.alphabet().size(); ++s) {
      auto next = post(src, set, s);
      if (!next.empty()) out.add_transition(from, s, get(std::move(next)));
    }
  }
  return out;
}

Fsa minimize(const Fsa& a, const Budget& budget) {
  auto d = to_dense(a, budget);
  auto n = d.size();
  std::vector<std::size_t> cls(n);
  for (std::size_t s = 0; s < n; ++s) cls[s] = d.accepting[s] ? 1 : 0;
  std::size_t classes = 0;
  for (;;) {
    std::map<std::vector<std::size_t>, std::size_t> signatures;
    std::vector<std::size_t> next(n);
    for (std::size_t s = 0; s < n; ++s) {
      std::vector<std::size_t> sig{cls[s]};
      for (Symbol x = 0; x < d.symbols; ++x) sig.push_back(cls[d.next(static_cast<State>(s), x)]);
      auto [it, fresh] = signatures.try_emplace(std::move(sig), signatures.size());
      next[s] = it->second;
    }
    bool stable = signatures.size() == classes;
    classes = signatures.size();
    cls = std::move(next);
    if (stable) break;
  }
  // Renumber classes in breadth-first order from the start class so that
  // equivalent inputs yield identical outputs.
  constexpr auto kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> order(classes, kUnset);
  std::vector<State> representative;
  std::deque<State> queue{d.start};
  order[cls[d.start]] = 0;
  representative.push_back(d.start);
  while (!queue.empty()) {
    auto s = queue.front();
    queue.pop_front();
    for (Symbol x = 0; x < d.symbols; ++x) {
      auto t = d.next(s, x);
      if (order[cls[t]] == kUnset) {
        order[cls[t]] = representative.size();
        representative.push_back(t);
        queue.push_back(t);
      }
    }
  }
  DenseDfa m;
  m.symbols = d.symbols;
  m.start = 0;
  m.accepting.resize(representative.size());
  m.delta.resize(representative.size() * d.symbols);
  for (std::size_t c = 0; c < representative.size(); ++c) {
    auto s = representative[c];
    m.accepting[c] = d.accepting[s];
    for (Symbol x = 0; x < d.symbols; ++x) {
      m.delta[c * d.symbols + x] = static_cast<State>(order[cls[d.next(s, x)]]);
    }
  }
  return from_dense(a.alphabet(), m);
}

bool is_finite(const Fsa& a) {
  Fsa t = remove_epsilon(a);
  // Cycle detection by iterative three-colour DFS.
  std::vector<char> colour(t.num_states(), 0);
  for (State root = 0; root < t.num_states(); ++root) {
    if (colour[root]) continue;
    std::vector<std::pair<State, std::size_t>> frames{{root, 0}};
    colour[root] = 1;
    while (!frames.empty()) {
      auto& [s, i] = frames.back();
      auto edges = t.edges(s);
      if (i < edges.size()) {
        auto next = edges[i++].target;
        if (colour[next] == 1) return false;
        if (colour[next] == 0) {
          colour[next] = 1;
          frames.emplace_back(next, 0);
        }
      } else {
        colour[s] = 2;
        frames.pop_back();
      }
    }
  }
  return true;
}

std::vector<Word> finite_words(const Fsa& a) {
  if (!is_finite(a)) throw PreconditionViolation("language is infinite");
  Fsa t = remove_epsilon(a);
  std::vector<Word> out;
  Word w;
  std::function<void(State)> walk = [&](State s) {
    if (t.is_accepting(s)) out.push_back(w);
    for (const auto& e : t.edges(s)) {
      w.push_back(e.symbol);
      walk(e.target);
      w.pop_back();
    }
  };
  for (auto s : t.initial_states()) walk(s);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Boolean and monoid operations

Fsa combine(BinaryOp op, const Fsa& l, const Fsa& r, const Budget& budget) {
  require_same_alphabet(l, r);
  switch (op) {
    case BinaryOp::Union: {
      budget.check(l.num_states() + r.num_states());
      Fsa out(l.alphabet());
      append_copy(out, l);
      auto offset = append_copy(out, r);
      for (auto s : l.initial_states()) out.set_initial(s);
      for (auto s : r.initial_states()) out.set_initial(offset + s);
      return remove_epsilon(out);
    }
    case BinaryOp::Intersection:
      return product(remove_epsilon(l), remove_epsilon(r), budget);
    case BinaryOp::Difference:
      return product(remove_epsilon(l), complement(r, budget), budget);
    case BinaryOp::Concat: {
      budget.check(l.num_states() + r.num_states());
      Fsa out(l.alphabet());
      append_copy(out, l);
      auto offset = append_copy(out, r);
      for (auto s : l.initial_states()) out.set_initial(s);
      for (State s = 0; s < l.num_states(); ++s) {
        if (!l.is_accepting(s)) continue;
        out.set_accepting(s, false);
        for (auto t : r.initial_states()) out.add_epsilon(s, offset + t);
      }
      return remove_epsilon(out);
    }
  }
  throw InvalidInput("unknown binary operation");
}

Fsa closure(UnaryOp op, const Fsa& l, const Budget& budget) {
  switch (op) {
    case UnaryOp::Star: {
      budget.check(l.num_states() + 1);
      Fsa out(l.alphabet());
      append_copy(out, l);
      auto hub = out.add_state(true, true);
      for (auto s : l.initial_states()) out.add_epsilon(hub, s);
      for (State s = 0; s < l.num_states(); ++s) {
        if (l.is_accepting(s)) out.add_epsilon(s, hub);
      }
      return remove_epsilon(out);
    }
    case UnaryOp::Plus: {
      Fsa out(l.alphabet());
      append_copy(out, l);
      for (auto s : l.initial_states()) out.set_initial(s);
      for (State s = 0; s < l.num_states(); ++s) {
        if (!l.is_accepting(s)) continue;
        for (auto t : l.initial_states()) out.add_epsilon(s, t);
      }
      return remove_epsilon(out);
    }
    case UnaryOp::Complement: {
      auto d = to_dense(l, budget);
      for (auto& acc : d.accepting) acc = acc ? 0 : 1;
      return from_dense(l.alphabet(), d);
    }
    case UnaryOp::FactorClosure: {
      Fsa out = remove_epsilon(l);
      for (State s = 0; s < out.num_states(); ++s) {
        out.set_initial(s);
        out.set_accepting(s);
      }
      return out;
    }
  }
  throw InvalidInput("unknown unary operation");
}

Fsa left_quotient(const Fsa& l, const Fsa& r, const Budget& budget) {
  require_same_alphabet(l, r);
  Fsa lt = remove_epsilon(l);
  Fsa rt = remove_epsilon(r);
  // Pairs reachable by reading the same word in both acceptors.
  std::map<std::pair<State, State>, char> seen;
  std::deque<std::pair<State, State>> queue;
  std::vector<char> start(rt.num_states(), 0);
  auto visit = [&](State p, State q) {
    if (seen.emplace(std::make_pair(p, q), 1).second) {
      budget.check(seen.size());
      queue.emplace_back(p, q);
      if (lt.is_accepting(p)) start[q] = 1;
    }
  };
  for (auto p : lt.initial_states()) {
    for (auto q : rt.initial_states()) visit(p, q);
  }
  while (!queue.empty()) {
    auto [p, q] = queue.front();
    queue.pop_front();
    auto re = rt.edges(q);
    for (const auto& x : lt.edges(p)) {
      auto it = std::lower_bound(re.begin(), re.end(), Edge{x.symbol, 0});
      for (; it != re.end() && it->symbol == x.symbol; ++it) visit(x.target, it->target);
    }
  }
  Fsa out = rt;
  for (State q = 0; q < out.num_states(); ++q) out.set_initial(q, start[q] != 0);
  return trim(out);
}

// ---------------------------------------------------------------------------
// Decisions

bool is_empty(const Fsa& a) { return trim(a).num_states() == 0; }

bool is_universal(const Fsa& a, const Budget& budget) {
  return is_empty(complement(a, budget));
}

bool includes(const Fsa& super, const Fsa& sub, const Budget& budget) {
  require_same_alphabet(super, sub);
  return is_empty(product(remove_epsilon(sub), complement(super, budget), budget));
}

bool equivalent(const Fsa& l, const Fsa& r, const Budget& budget) {
  return includes(l, r, budget) && includes(r, l, budget);
}

bool decide(Query q, const Fsa& l, const Budget& budget) {
  switch (q) {
    case Query::IsEmpty:
      return is_empty(l);
    case Query::IsUniversal:
      return is_universal(l, budget);
    default:
      throw InvalidInput("query needs two operands");
  }
}

bool decide(Query q, const Fsa& l, const Fsa& r, const Budget& budget) {
  switch (q) {
    case Query::Includes:
      return includes(l, r, budget);
    case Query::Equivalent:
      return equivalent(l, r, budget);
    default:
      throw InvalidInput("query takes a single operand");
  }
}

std::optional<Word> shortest_word(const Fsa& a) {
  Fsa t = remove_epsilon(a);
  if (t.num_states() == 0) return std::nullopt;
  auto n = t.num_states();
  constexpr auto kFar = static_cast<std::size_t>(-1);
  std::vector<std::vector<State>> reverse(n);
  for (State s = 0; s < n; ++s) {
    for (const auto& e : t.edges(s)) reverse[e.target].push_back(s);
  }
  // Distance (in letters) to acceptance.
  std::vector<std::size_t> dist(n, kFar);
  std::deque<State> queue;
  for (State s = 0; s < n; ++s) {
    if (t.is_accepting(s)) {
      dist[s] = 0;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    auto s = queue.front();
    queue.pop_front();
    for (auto p : reverse[s]) {
      if (dist[p] == kFar) {
        dist[p] = dist[s] + 1;
        queue.push_back(p);
      }
    }
  }
  std::size_t best = kFar;
  for (auto s : t.initial_states()) best = std::min(best, dist[s]);
  StateSet current;
  for (auto s : t.initial_states()) {
    if (dist[s] == best) current.push_back(s);
  }
  Word w;
  for (std::size_t remaining = best; remaining > 0; --remaining) {
    for (Symbol x = 0; x < t.alphabet().size(); ++x) {
      StateSet next;
      for (auto s : post(t, current, x)) {
        if (dist[s] == remaining - 1) next.push_back(s);
      }
      if (!next.empty()) {
        w.push_back(x);
        current = std::move(next);
        break;
      }
    }
  }
  return w;
}

std::optional<Word> ambiguity_witness(const Fsa& a, const Budget& budget) {
  Fsa t = trim(a);
  auto n = t.num_states();
  if (n == 0) return std::nullopt;

  // Number of spontaneous walks between states, saturated at 2. A walk
  // through a spontaneous cycle counts as 2: it can be pumped.
  auto sccs = epsilon_sccs(t);
  std::vector<std::vector<std::pair<State, std::uint8_t>>> walks(n);
  {
    std::vector<std::vector<State>> members(sccs.cyclic.size());
    for (State s = 0; s < n; ++s) members[sccs.component[s]].push_back(s);
    std::vector<std::uint8_t> count(n, 0);
    for (State src = 0; src < n; ++src) {
      std::fill(count.begin(), count.end(), 0);
      count[src] = 1;
      // Components reachable from src have index <= component(src); visit
      // them from high to low index, which is topological order.
      for (auto c = static_cast<std::ptrdiff_t>(sccs.component[src]); c >= 0; --c) {
        const auto& comp = members[static_cast<std::size_t>(c)];
        bool reached = std::any_of(comp.begin(), comp.end(), [&](State s) { return count[s] > 0; });
        if (!reached) continue;
        if (sccs.cyclic[static_cast<std::size_t>(c)]) {
          for (auto s : comp) count[s] = 2;
        }
        for (auto s : comp) {
          if (count[s] == 0) continue;
          for (auto tgt : t.epsilons(s)) {
            if (sccs.component[tgt] == static_cast<std::size_t>(c)) continue;
            count[tgt] = static_cast<std::uint8_t>(std::min(2, count[tgt] + count[s]));
          }
        }
      }
      for (State s = 0; s < n; ++s) {
        if (count[s] > 0) walks[src].emplace_back(s, count[s]);
      }
    }
  }

  // Spontaneous-move-free acceptor whose transitions carry run
  // multiplicities (1 or 2).
  struct Weighted {
    Symbol symbol;
    State target;
    std::uint8_t weight;
  };
  std::vector<std::vector<Weighted>> out(n);
  std::vector<std::uint8_t> final_weight(n, 0);
  for (State p = 0; p < n; ++p) {
    std::map<std::pair<Symbol, State>, int> merged;
    int fin = 0;
    for (auto [q, c] : walks[p]) {
      if (t.is_accepting(q)) fin += c;
      for (const auto& e : t.edges(q)) merged[{e.symbol, e.target}] += c;
    }
    final_weight[p] = static_cast<std::uint8_t>(std::min(2, fin));
    for (auto [key, w] : merged) {
      out[p].push_back({key.first, key.second, static_cast<std::uint8_t>(std::min(2, w))});
    }
  }

  // Self-product over edge copies with a "runs have diverged" flag. A pair
  // of runs diverges when the two sides take different edge copies.
  Fsa prod(t.alphabet());
  std::map<std::tuple<State, State, bool>, State> index;
  std::deque<std::tuple<State, State, bool>> queue;
  auto get = [&](State p, State q, bool diverged) {
    auto [it, fresh] = index.try_emplace({p, q, diverged}, 0);
    if (fresh) {
      budget.check(index.size());
      bool acc = diverged ? (final_weight[p] > 0 && final_weight[q] > 0) : final_weight[p] >= 2;
      it->second = prod.add_state(false, acc);
      queue.emplace_back(p, q, diverged);
    }
    return it->second;
  };
  for (auto i : t.initial_states()) {
    for (auto j : t.initial_states()) prod.set_initial(get(i, j, i != j));
  }
  while (!queue.empty()) {
    auto [p, q, diverged] = queue.front();
    queue.pop_front();
    auto src = index.at({p, q, diverged});
    for (const auto& x : out[p]) {
      for (const auto& y : out[q]) {
        if (x.symbol != y.symbol) continue;
        for (std::uint8_t kx = 0; kx < x.weight; ++kx) {
          for (std::uint8_t ky = 0; ky < y.weight; ++ky) {
            bool d = diverged || x.target != y.target || kx != ky;
            prod.add_transition(src, x.symbol, get(x.target, y.target, d));
          }
        }
      }
    }
  }
  return shortest_word(prod);
}

}  // namespace partfact
