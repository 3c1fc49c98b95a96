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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace partfact {

/// Index of a letter inside its Alphabet. Index order is alphabet order.
using Symbol = std::uint8_t;

/// A finite sequence of symbols. Words compare in shortlex order: shorter
/// words first, equal lengths lexicographically by symbol index.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Symbol> symbols) : symbols_(symbols) {}
  explicit Word(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {}

  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }
  Symbol operator[](std::size_t i) const { return symbols_[i]; }
  Symbol front() const { return symbols_.front(); }
  Symbol back() const { return symbols_.back(); }

  auto begin() const noexcept { return symbols_.begin(); }
  auto end() const noexcept { return symbols_.end(); }

  const std::vector<Symbol>& symbols() const noexcept { return symbols_; }

  void push_back(Symbol s) { symbols_.push_back(s); }
  void pop_back() { symbols_.pop_back(); }

  /// Symbols [pos, pos + len), clipped to the word.
  Word substr(std::size_t pos, std::size_t len = static_cast<std::size_t>(-1)) const;
  Word prefix(std::size_t len) const { return substr(0, len); }
  Word suffix_from(std::size_t pos) const { return substr(pos); }

  bool starts_with(const Word& p) const noexcept;
  bool ends_with(const Word& s) const noexcept;

  Word& operator+=(const Word& rhs);
  friend Word operator+(Word lhs, const Word& rhs) { return lhs += rhs; }

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) noexcept;

 private:
  std::vector<Symbol> symbols_;
};

/// Repeats `w` `count` times.
Word power(const Word& w, std::size_t count);

/// Ordered set of single-character symbols. The declaration order fixes the
/// shortlex order of every word built over it.
class Alphabet {
 public:
  /// Throws InvalidInput on an empty list, duplicates, or reserved characters
  /// (whitespace and the regex metacharacters `| * + ( ) _`).
  explicit Alphabet(std::string_view symbols);
  explicit Alphabet(const std::vector<std::string>& symbols);

  std::size_t size() const noexcept { return chars_.size(); }
  char to_char(Symbol s) const { return chars_.at(s); }
  std::optional<Symbol> find(char c) const noexcept;
  const std::string& chars() const noexcept { return chars_; }

  /// Parses a word written with this alphabet's characters. The text "_"
  /// denotes the empty word.
  Word parse(std::string_view text) const;

  /// Inverse of parse() for nonempty words; the empty word formats as "".
  std::string format(const Word& w) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  void validate() const;

  std::string chars_;
};

/// True iff z = x u y for some words x, y.
bool is_factor(const Word& u, const Word& z);

/// True iff no proper nonempty prefix of w is also a suffix of w.
/// Throws InvalidInput on the empty word.
bool is_unbordered(const Word& w);

/// Returns s with y = x s, or nothing if x is not a prefix of y.
std::optional<Word> left_quotient(const Word& x, const Word& y);

}  // namespace partfact

template <>
struct std::hash<partfact::Word> {
  std::size_t operator()(const partfact::Word& w) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (auto s : w) {
      h ^= s;
      h *= 0x100000001b3ull;
    }
    return h ^ w.size();
  }
};
