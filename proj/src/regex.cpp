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

#include "partfact/regex.hpp"

#include <cctype>
#include <string>

#include "partfact/errors.hpp"

namespace partfact {

namespace {

// Recursive descent with Thompson-style fragments built directly into one
// acceptor; spontaneous moves are removed at the end.
//
//   union  := concat ('|' concat)*
//   concat := repeat+
//   repeat := atom ('*' | '+')*
//   atom   := symbol | '_' | '(' union ')'
class Compiler {
 public:
  Compiler(std::string_view text, const Alphabet& alphabet, const Budget& budget)
      : text_(text), alphabet_(alphabet), budget_(budget), fsa_(alphabet) {}

  Fsa run() {
    skip_space();
    if (at_end()) throw ParseError("empty expression", pos_);
    auto frag = parse_union();
    skip_space();
    if (!at_end()) {
      if (peek() == ')') throw ParseError("unbalanced ')'", pos_);
      throw ParseError(std::string("unexpected '") + peek() + "'", pos_);
    }
    fsa_.set_initial(frag.in);
    fsa_.set_accepting(frag.out);
    return remove_epsilon(fsa_);
  }

 private:
  struct Fragment {
    State in;
    State out;
  };

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  State fresh() {
    budget_.check(fsa_.num_states() + 1);
    return fsa_.add_state();
  }

  bool starts_atom() const {
    char c = peek();
    return c != '|' && c != ')' && c != '*' && c != '+';
  }

  Fragment parse_union() {
    auto first = parse_concat();
    skip_space();
    if (at_end() || peek() != '|') return first;
    Fragment joined{fresh(), fresh()};
    fsa_.add_epsilon(joined.in, first.in);
    fsa_.add_epsilon(first.out, joined.out);
    while (!at_end() && peek() == '|') {
      ++pos_;
      auto next = parse_concat();
      fsa_.add_epsilon(joined.in, next.in);
      fsa_.add_epsilon(next.out, joined.out);
      skip_space();
    }
    return joined;
  }

  Fragment parse_concat() {
    skip_space();
    if (at_end() || !starts_atom()) {
      if (!at_end() && (peek() == '*' || peek() == '+')) {
        throw ParseError(std::string("'") + peek() + "' has no operand", pos_);
      }
      throw ParseError("empty alternative", pos_);
    }
    auto frag = parse_repeat();
    for (;;) {
      skip_space();
      if (at_end() || !starts_atom()) return frag;
      auto next = parse_repeat();
      fsa_.add_epsilon(frag.out, next.in);
      frag.out = next.out;
    }
  }

  Fragment parse_repeat() {
    auto frag = parse_atom();
    for (;;) {
      skip_space();
      if (at_end()) return frag;
      char c = peek();
      if (c != '*' && c != '+') return frag;
      ++pos_;
      Fragment wrapped{fresh(), fresh()};
      fsa_.add_epsilon(wrapped.in, frag.in);
      fsa_.add_epsilon(frag.out, wrapped.out);
      fsa_.add_epsilon(frag.out, frag.in);
      if (c == '*') fsa_.add_epsilon(wrapped.in, wrapped.out);
      frag = wrapped;
    }
  }

  Fragment parse_atom() {
    skip_space();
    auto start = pos_;
    char c = peek();
    ++pos_;
    if (c == '(') {
      auto inner = parse_union();
      skip_space();
      if (at_end() || peek() != ')') throw ParseError("missing ')'", start);
      ++pos_;
      return inner;
    }
    Fragment frag{fresh(), fresh()};
    if (c == '_') {
      fsa_.add_epsilon(frag.in, frag.out);
      return frag;
    }
    auto symbol = alphabet_.find(c);
    if (!symbol) throw ParseError(std::string("symbol '") + c + "' is not in the alphabet", start);
    fsa_.add_transition(frag.in, *symbol, frag.out);
    return frag;
  }

  std::string_view text_;
  const Alphabet& alphabet_;
  const Budget& budget_;
  Fsa fsa_;
  std::size_t pos_ = 0;
};

}  // namespace

Fsa regex_to_fsa(std::string_view expr, const Alphabet& alphabet, const Budget& budget) {
  return Compiler(expr, alphabet, budget).run();
}

}  // namespace partfact
