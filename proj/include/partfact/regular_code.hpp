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

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "partfact/automata.hpp"
#include "partfact/finite_code.hpp"

namespace partfact {

/// A regular code: a nonempty regular language without the empty word. The
/// acceptor is stored minimized.
class RegularCode {
 public:
  /// Throws InvalidInput when the language is empty or contains the empty
  /// word.
  explicit RegularCode(const Fsa& lang, const Budget& budget = {});
  static RegularCode from_regex(std::string_view expr, const Alphabet& alphabet,
                                const Budget& budget = {});
  static RegularCode from_finite(const FiniteCode& code);

  const Fsa& lang() const noexcept { return lang_; }
  const Alphabet& alphabet() const noexcept { return lang_.alphabet(); }

 private:
  Fsa lang_;
};

/// A regular submonoid of the free monoid.
class RegularMonoid {
 public:
  /// Throws InvalidInput unless the language contains the empty word and is
  /// closed under product.
  explicit RegularMonoid(const Fsa& lang, const Budget& budget = {});
  /// X*, which is a monoid by construction.
  static RegularMonoid generated_by(const RegularCode& x, const Budget& budget = {});

  const Fsa& lang() const noexcept { return lang_; }
  const Alphabet& alphabet() const noexcept { return lang_.alphabet(); }

 private:
  struct Trusted {};
  RegularMonoid(Fsa lang, Trusted) : lang_(std::move(lang)) {}

  Fsa lang_;
};

/// A partition of a regular code into finitely many regular classes.
class RegularPartition {
 public:
  /// Throws InvalidInput when a class is empty or contains the empty word,
  /// two classes overlap, or the classes do not cover exactly the code.
  /// Empty `names` defaults to X0, X1, ...
  RegularPartition(RegularCode code, std::vector<Fsa> classes,
                   std::vector<std::string> names = {}, const Budget& budget = {});
  /// The regular view of a finite partition.
  static RegularPartition from_finite(const Partition& p);

  const RegularCode& code() const noexcept { return code_; }
  std::size_t size() const noexcept { return classes_.size(); }
  const std::vector<Fsa>& classes() const noexcept { return classes_; }
  const std::vector<std::string>& names() const noexcept { return names_; }

 private:
  RegularCode code_;
  std::vector<Fsa> classes_;
  std::vector<std::string> names_;
};

/// Contains the empty word and is closed under product.
bool is_submonoid(const Fsa& l, const Budget& budget = {});

/// M+ \ M+M+ with M+ = M \ {1}. Throws PreconditionViolation when M is the
/// trivial monoid.
RegularCode base(const RegularMonoid& m, const Budget& budget = {});
/// X equals the base of X*.
bool is_base(const RegularCode& x, const Budget& budget = {});

/// Every word is a factor of some word of L.
bool is_dense(const Fsa& l, const Budget& budget = {});
inline bool is_thin(const Fsa& l, const Budget& budget = {}) { return !is_dense(l, budget); }
/// X* is dense.
bool is_complete(const RegularCode& x, const Budget& budget = {});

/// Outcome of a decision that fails on an ambiguous message.
struct AmbiguityVerdict {
  bool holds = true;
  /// Shortlex-least message with two parses when `holds` is false.
  std::optional<Word> message;
};

/// Unique decipherability, decided on the flower parser of X.
AmbiguityVerdict regular_is_ud(const RegularCode& x, const Budget& budget = {});
/// Coding property, decided on the block parser of the partition. The
/// witness is a message with two P-factorizations.
AmbiguityVerdict regular_is_coding(const RegularPartition& p, const Budget& budget = {});

struct FreeProductVerdict {
  bool holds = true;
  std::string reason;            // empty when `holds`
  std::optional<Word> message;   // two reduced forms, when that is the reason
  std::vector<Fsa> bases;        // one per monoid
};

/// Whether the submonoid generated by the union is the free product of the
/// given monoids. Throws InvalidInput for fewer than two monoids or mixed
/// alphabets and PreconditionViolation for a trivial factor.
FreeProductVerdict free_product_check(std::span<const RegularMonoid> monoids,
                                      const Budget& budget = {});

/// Shortlex-least word outside F(X*); nothing iff X is complete.
std::optional<Word> completeness_witness(const RegularCode& x, const Budget& budget = {});

/// w = v b^(|v|-1) for v = completeness_witness(x) and b the least symbol
/// other than the first letter of v; nothing iff X is complete. Throws
/// PreconditionViolation over a one-letter alphabet.
std::optional<Word> extension_witness(const RegularCode& x, const Budget& budget = {});

struct ExtensionCheck {
  bool unbordered = false;
  bool non_factor = false;  // w is not in F(X*)
  bool coding = false;      // {X, {w}} is a coding partition of X + w
  bool all() const noexcept { return unbordered && non_factor && coding; }
};

/// Verifies the obligations an extension witness must meet.
ExtensionCheck check_extension(const RegularCode& x, const Word& w, const Budget& budget = {});

/// For thin X, maximal iff complete. Throws PreconditionViolation when X is
/// dense.
bool is_maximal(const RegularCode& x, const Budget& budget = {});
/// Maximality of the base; throws PreconditionViolation when it is dense.
bool is_full(const RegularMonoid& m, const Budget& budget = {});
/// UD and X* full. Throws PreconditionViolation unless X is a base.
bool is_maximal_ud(const RegularCode& x, const Budget& budget = {});

/// (X* w X*)+ meets X*. Throws PreconditionViolation unless X is thin and
/// complete.
bool lemma2_check(const RegularCode& x, const Word& w, const Budget& budget = {});

/// X_{i1}+ X_{i2}+ ... X_{in}+ for class indices `seq`. Throws InvalidInput
/// for a malformed sequence (shorter than 2, out of range, equal neighbours
/// or last equal to first) and PreconditionViolation when the partition is
/// not coding or has one class.
RegularCode gen_ud(const RegularPartition& p, std::span<const std::size_t> seq,
                   const Budget& budget = {});

struct FreeFactorization {
  FiniteCode base;
  CanonicalPartition canonical;
  /// X0*, absent when the unambiguous component is empty.
  std::optional<Fsa> free_component;
  /// X_i* for each totally ambiguous component.
  std::vector<Fsa> indecomposable;
};

/// Canonical free factorization of a monoid with finite base. Throws
/// PreconditionViolation when the base is infinite.
FreeFactorization canonical_free_factorization(const RegularMonoid& m,
                                               const Budget& budget = {});

}  // namespace partfact
