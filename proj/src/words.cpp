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

#include "partfact/words.hpp"

#include <algorithm>
#include <string>

#include "partfact/errors.hpp"

namespace partfact {

Word Word::substr(std::size_t pos, std::size_t len) const {
  if (pos >= symbols_.size()) return {};
  auto first = symbols_.begin() + static_cast<std::ptrdiff_t>(pos);
  auto n = std::min(len, symbols_.size() - pos);
  return Word(std::vector<Symbol>(first, first + static_cast<std::ptrdiff_t>(n)));
}

bool Word::starts_with(const Word& p) const noexcept {
  return p.size() <= size() && std::equal(p.begin(), p.end(), begin());
}

bool Word::ends_with(const Word& s) const noexcept {
  return s.size() <= size() &&
         std::equal(s.begin(), s.end(), end() - static_cast<std::ptrdiff_t>(s.size()));
}

Word& Word::operator+=(const Word& rhs) {
  symbols_.insert(symbols_.end(), rhs.begin(), rhs.end());
  return *this;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) noexcept {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return a.symbols_ <=> b.symbols_;
}

Word power(const Word& w, std::size_t count) {
  Word out;
  for (std::size_t i = 0; i < count; ++i) out += w;
  return out;
}

namespace {

constexpr std::string_view kReserved = "|*+()_";

}  // namespace

Alphabet::Alphabet(std::string_view symbols) : chars_(symbols) { validate(); }

Alphabet::Alphabet(const std::vector<std::string>& symbols) {
  for (const auto& s : symbols) {
    if (s.size() != 1) {
      throw InvalidInput("alphabet symbol '" + s + "' is not a single character");
    }
    chars_.push_back(s[0]);
  }
  validate();
}

void Alphabet::validate() const {
  if (chars_.empty()) throw InvalidInput("alphabet is empty");
  if (chars_.size() > 255) throw InvalidInput("alphabet has more than 255 symbols");
  for (std::size_t i = 0; i < chars_.size(); ++i) {
    char c = chars_[i];
    auto uc = static_cast<unsigned char>(c);
    if (uc <= 0x20 || uc >= 0x7f || kReserved.find(c) != std::string_view::npos) {
      throw InvalidInput(std::string("symbol '") + c + "' is not allowed in an alphabet");
    }
    if (chars_.find(c, i + 1) != std::string::npos) {
      throw InvalidInput(std::string("duplicate alphabet symbol '") + c + "'");
    }
  }
}

std::optional<Symbol> Alphabet::find(char c) const noexcept {
  auto pos = chars_.find(c);
  if (pos == std::string::npos) return std::nullopt;
  return static_cast<Symbol>(pos);
}

Word Alphabet::parse(std::string_view text) const {
  Word w;
  if (text == "_") return w;
  for (std::size_t i = 0; i < text.size(); ++i) {
    auto s = find(text[i]);
    if (!s) {
      throw ParseError(std::string("symbol '") + text[i] + "' is not in the alphabet", i);
    }
    w.push_back(*s);
  }
  return w;
}

std::string Alphabet::format(const Word& w) const {
  std::string out;
  out.reserve(w.size());
  for (auto s : w) out.push_back(to_char(s));
  return out;
}

bool is_factor(const Word& u, const Word& z) {
  if (u.empty()) return true;
  if (u.size() > z.size()) return false;
  return std::search(z.begin(), z.end(), u.begin(), u.end()) != z.end();
}

bool is_unbordered(const Word& w) {
  if (w.empty()) throw InvalidInput("is_unbordered requires a nonempty word");
  // KMP failure function: the longest proper border of w is fail[n].
  std::vector<std::size_t> fail(w.size() + 1, 0);
  std::size_t k = 0;
  for (std::size_t i = 1; i < w.size(); ++i) {
    while (k > 0 && w[i] != w[k]) k = fail[k];
    if (w[i] == w[k]) ++k;
    fail[i + 1] = k;
  }
  return fail[w.size()] == 0;
}

std::optional<Word> left_quotient(const Word& x, const Word& y) {
  if (!y.starts_with(x)) return std::nullopt;
  return y.suffix_from(x.size());
}

}  // namespace partfact
