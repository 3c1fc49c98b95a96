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
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "partfact/words.hpp"

namespace partfact {

/// A finite set of nonempty words over an alphabet, kept in shortlex order.
class FiniteCode {
 public:
  /// Throws EmptyCode for an empty list and InvalidInput for the empty word
  /// or duplicates.
  FiniteCode(Alphabet alphabet, std::vector<Word> words);
  /// Parses each entry with the alphabet.
  static FiniteCode parse(const Alphabet& alphabet, std::span<const std::string> words);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::span<const Word> words() const noexcept { return words_; }
  std::size_t size() const noexcept { return words_.size(); }
  bool contains(const Word& w) const;
  /// Position of `w` in words(), or nothing.
  std::optional<std::size_t> index_of(const Word& w) const;
  std::size_t total_length() const noexcept;

  friend bool operator==(const FiniteCode&, const FiniteCode&) = default;

 private:
  Alphabet alphabet_;
  std::vector<Word> words_;
};

/// A message together with a sequence of code words whose product it is.
struct Factorization {
  Word message;
  std::vector<Word> parts;

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// Factorizations compare by their part sequences, parts in shortlex order.
bool factorization_less(const Factorization& a, const Factorization& b);

/// Two distinct factorizations of one message that share no proper
/// intermediate cut point. `left` sorts before `right`.
struct PrimeRelation {
  Factorization left;
  Factorization right;

  const Word& message() const noexcept { return left.message; }
  friend bool operator==(const PrimeRelation&, const PrimeRelation&) = default;
};

/// Unordered pair of distinct code words stored as (smaller, larger).
using WordPair = std::pair<Word, Word>;
WordPair make_pair_sorted(const Word& a, const Word& b);

/// An indexed family of disjoint nonempty classes covering a finite code.
/// Class order is preserved; equality ignores order and names.
class Partition {
 public:
  /// Throws InvalidInput when the classes overlap, miss code words, contain
  /// foreign words, or are empty. Empty `names` defaults to X0, X1, ...
  Partition(FiniteCode code, std::vector<std::vector<Word>> classes,
            std::vector<std::string> names = {});

  /// The one-class partition {X}.
  static Partition trivial(const FiniteCode& code);
  /// Every code word in its own class.
  static Partition discrete(const FiniteCode& code);

  const FiniteCode& code() const noexcept { return code_; }
  std::size_t size() const noexcept { return classes_.size(); }
  const std::vector<Word>& operator[](std::size_t i) const { return classes_.at(i); }
  const std::vector<std::vector<Word>>& classes() const noexcept { return classes_; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  /// Class index holding `w`; throws InvalidInput for non-code words.
  std::size_t class_of(const Word& w) const;

  /// Classes sorted by their shortlex-least word.
  std::vector<std::vector<Word>> normalized() const;

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.code_ == b.code_ && a.normalized() == b.normalized();
  }

 private:
  FiniteCode code_;
  std::vector<std::vector<Word>> classes_;
  std::vector<std::string> names_;
  std::vector<std::size_t> owner_;  // code word index -> class index
};

struct PBlock {
  std::size_t class_index;
  Word block;

  friend bool operator==(const PBlock&, const PBlock&) = default;
};

/// Decomposition of a message into maximal blocks, each a product of words
/// of one class, consecutive blocks from different classes.
struct PFactorization {
  Word message;
  std::vector<PBlock> blocks;
};

struct UdResult {
  bool ud = true;
  /// Shortest ambiguous message (shortlex tie-break) with its two
  /// least factorizations.
  std::optional<PrimeRelation> witness;
};

/// Sardinas-Patterson test; the witness is found on the self-product of the
/// flower automaton.
UdResult sp_is_ud(const FiniteCode& x);

/// Visits every prime relation with message length <= max_len in
/// (length, message, left, right) order. The visitor returns false to stop.
void for_each_prime_relation(const FiniteCode& x, std::size_t max_len,
                             const std::function<bool(const PrimeRelation&)>& visit);

/// All prime relations with message length <= max_len, sorted by message in
/// shortlex order, then by the factorizations.
std::vector<PrimeRelation> enumerate_prime_relations(const FiniteCode& x, std::size_t max_len);

/// Exact set of pairs {u, v} that occur together in some prime relation,
/// however long.
std::set<WordPair> cooccurrence_pairs(const FiniteCode& x);

/// The finest coding partition P(X), classes in shortlex order of their
/// least word.
Partition characteristic_partition(const FiniteCode& x);

struct CanonicalPartition {
  /// X0: the words forming singleton classes of P(X). May be empty.
  std::vector<Word> unambiguous;
  /// Classes of P(X) with more than one word, sorted by least word.
  std::vector<std::vector<Word>> ta_components;

  /// As a Partition named X0, X1, ...; X0 is omitted (and the numbering
  /// starts at X1) when the unambiguous component is empty.
  Partition as_partition(const FiniteCode& code) const;
};

CanonicalPartition canonical_partition(const FiniteCode& x);

/// True iff every class of P(X) lies inside one class of `p`.
bool is_coding(const FiniteCode& x, const Partition& p);

/// |X| > 1 and P(X) is the trivial partition.
bool is_totally_ambiguous(const FiniteCode& x);

/// The unique P-factorization of `w`. Throws PreconditionViolation when `p`
/// is not a coding partition, and InvalidInput when `w` is empty or not a
/// message.
PFactorization p_factorize(const Word& w, const Partition& p);

/// Some factorization of `w` into code words, if one exists.
std::optional<std::vector<Word>> factorize(const FiniteCode& x, const Word& w);

struct OracleResult {
  bool ud = true;
  std::set<WordPair> merges;
};

/// Exhaustive search over pairs of factorizations of messages up to
/// `max_len`; independent of the suffix-graph machinery.
OracleResult brute_force_oracle(const FiniteCode& x, std::size_t max_len);

}  // namespace partfact
