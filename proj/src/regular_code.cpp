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

#include "partfact/regular_code.hpp"

#include <algorithm>

#include "partfact/errors.hpp"
#include "partfact/regex.hpp"

namespace partfact {

namespace {

void require_alphabet(const Alphabet& a, const Alphabet& b) {
  if (!(a == b)) throw AlphabetMismatch();
}

bool accepts_empty_word(const Fsa& l) { return accepts(l, Word{}); }

// Copies `a` into `out`; returns the new index of every state of `a`.
std::vector<State> embed(Fsa& out, const Fsa& a) {
  std::vector<State> map(a.num_states());
  for (State s = 0; s < a.num_states(); ++s) map[s] = out.add_state();
  for (State s = 0; s < a.num_states(); ++s) {
    for (const auto& e : a.edges(s)) out.add_transition(map[s], e.symbol, map[e.target]);
    for (auto t : a.epsilons(s)) out.add_epsilon(map[s], map[t]);
  }
  return map;
}

// Runs from the hub read one code word on the minimal DFA of X and return to
// the hub on a spontaneous move, so accepting runs are factorizations.
Fsa flower_parser(const RegularCode& x) {
  const auto& d = x.lang();
  Fsa out(x.alphabet());
  auto hub = out.add_state(true, true);
  auto map = embed(out, d);
  out.add_epsilon(hub, map[d.initial_states().front()]);
  for (State s = 0; s < d.num_states(); ++s) {
    if (d.is_accepting(s)) out.add_epsilon(map[s], hub);
  }
  return out;
}

// Runs read a sequence of blocks, each on the minimal DFA of X_i+, moving
// spontaneously from the end of a block of class i to the start of a block
// of any class j != i. Accepting runs are P-factorizations.
Fsa block_parser(const RegularPartition& p, const Budget& budget) {
  std::vector<Fsa> blocks;
  for (const auto& cls : p.classes()) blocks.push_back(minimize(plus(cls, budget), budget));
  Fsa out(p.code().alphabet());
  auto start = out.add_state(true, false);
  std::vector<std::vector<State>> maps;
  std::size_t total = 1;
  for (const auto& b : blocks) {
    total += b.num_states();
    budget.check(total);
    maps.push_back(embed(out, b));
  }
  auto entry = [&](std::size_t i) { return maps[i][blocks[i].initial_states().front()]; };
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    out.add_epsilon(start, entry(i));
    for (State s = 0; s < blocks[i].num_states(); ++s) {
      if (!blocks[i].is_accepting(s)) continue;
      out.set_accepting(maps[i][s]);
      for (std::size_t j = 0; j < blocks.size(); ++j) {
        if (j != i) out.add_epsilon(maps[i][s], entry(j));
      }
    }
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Types

RegularCode::RegularCode(const Fsa& lang, const Budget& budget) : lang_(minimize(lang, budget)) {
  if (is_empty(lang_)) throw InvalidInput("a code must be a nonempty language");
  if (accepts_empty_word(lang_)) throw InvalidInput("a code must not contain the empty word");
}

RegularCode RegularCode::from_regex(std::string_view expr, const Alphabet& alphabet,
                                    const Budget& budget) {
  return RegularCode(regex_to_fsa(expr, alphabet, budget), budget);
}

RegularCode RegularCode::from_finite(const FiniteCode& code) {
  return RegularCode(finite_language(code.alphabet(), code.words()));
}

RegularMonoid::RegularMonoid(const Fsa& lang, const Budget& budget)
    : lang_(minimize(lang, budget)) {
  if (!is_submonoid(lang_, budget)) {
    throw InvalidInput("language is not a submonoid: it must contain the empty word and be "
                       "closed under product");
  }
}

RegularMonoid RegularMonoid::generated_by(const RegularCode& x, const Budget& budget) {
  return RegularMonoid(minimize(star(x.lang(), budget), budget), Trusted{});
}

RegularPartition::RegularPartition(RegularCode code, std::vector<Fsa> classes,
                                   std::vector<std::string> names, const Budget& budget)
    : code_(std::move(code)), names_(std::move(names)) {
  if (classes.empty()) throw InvalidInput("a partition needs at least one class");
  if (names_.empty()) {
    for (std::size_t i = 0; i < classes.size(); ++i) names_.push_back("X" + std::to_string(i));
  }
  if (names_.size() != classes.size()) throw InvalidInput("one name per class is required");
  Fsa covered = empty_language(code_.alphabet());
  for (std::size_t i = 0; i < classes.size(); ++i) {
    require_alphabet(classes[i].alphabet(), code_.alphabet());
    auto cls = minimize(classes[i], budget);
    if (is_empty(cls)) throw InvalidInput("class " + names_[i] + " is empty");
    if (accepts_empty_word(cls)) throw InvalidInput("class " + names_[i] + " contains the empty word");
    if (!is_empty(intersect(covered, cls, budget))) {
      throw InvalidInput("class " + names_[i] + " overlaps an earlier class");
    }
    covered = unite(covered, cls, budget);
    classes_.push_back(std::move(cls));
  }
  if (!equivalent(covered, code_.lang(), budget)) {
    throw InvalidInput("the union of the classes differs from the code");
  }
}

RegularPartition RegularPartition::from_finite(const Partition& p) {
  std::vector<Fsa> classes;
  for (const auto& cls : p.classes()) classes.push_back(finite_language(p.code().alphabet(), cls));
  return RegularPartition(RegularCode::from_finite(p.code()), std::move(classes), p.names());
}

// ---------------------------------------------------------------------------
// Monoids and bases

bool is_submonoid(const Fsa& l, const Budget& budget) {
  return accepts_empty_word(l) && includes(l, concat(l, l, budget), budget);
}

RegularCode base(const RegularMonoid& m, const Budget& budget) {
  const auto& alphabet = m.alphabet();
  auto nonempty = subtract(m.lang(), epsilon_language(alphabet), budget);
  if (is_empty(nonempty)) throw PreconditionViolation("the trivial monoid has an empty base");
  auto products = concat(nonempty, nonempty, budget);
  return RegularCode(subtract(nonempty, products, budget), budget);
}

bool is_base(const RegularCode& x, const Budget& budget) {
  auto generated = RegularMonoid::generated_by(x, budget);
  return equivalent(x.lang(), base(generated, budget).lang(), budget);
}

bool is_dense(const Fsa& l, const Budget& budget) {
  return is_universal(factor_closure(l, budget), budget);
}

bool is_complete(const RegularCode& x, const Budget& budget) {
  return is_dense(star(x.lang(), budget), budget);
}

// ---------------------------------------------------------------------------
// Decipherability

AmbiguityVerdict regular_is_ud(const RegularCode& x, const Budget& budget) {
  budget.check(x.lang().num_states() + 1);
  auto witness = ambiguity_witness(flower_parser(x), budget);
  return {!witness.has_value(), witness};
}

AmbiguityVerdict regular_is_coding(const RegularPartition& p, const Budget& budget) {
  auto witness = ambiguity_witness(block_parser(p, budget), budget);
  return {!witness.has_value(), witness};
}

FreeProductVerdict free_product_check(std::span<const RegularMonoid> monoids,
                                      const Budget& budget) {
  if (monoids.size() < 2) throw InvalidInput("a free product needs at least two monoids");
  for (const auto& m : monoids) require_alphabet(m.alphabet(), monoids.front().alphabet());
  FreeProductVerdict out;
  std::vector<RegularCode> bases;
  for (std::size_t i = 0; i < monoids.size(); ++i) {
    try {
      bases.push_back(base(monoids[i], budget));
    } catch (const PreconditionViolation&) {
      throw PreconditionViolation("factor " + std::to_string(i) + " is the trivial monoid");
    }
    out.bases.push_back(bases.back().lang());
  }
  for (std::size_t i = 0; i < bases.size(); ++i) {
    for (std::size_t j = i + 1; j < bases.size(); ++j) {
      auto shared = intersect(bases[i].lang(), bases[j].lang(), budget);
      if (!is_empty(shared)) {
        out.holds = false;
        out.reason = "bases " + std::to_string(i) + " and " + std::to_string(j) + " share a generator";
        out.message = shortest_word(shared);
        return out;
      }
    }
  }
  Fsa all = empty_language(monoids.front().alphabet());
  for (const auto& b : bases) all = unite(all, b.lang(), budget);
  RegularPartition p(RegularCode(all, budget), out.bases, {}, budget);
  auto verdict = regular_is_coding(p, budget);
  if (!verdict.holds) {
    out.holds = false;
    out.reason = "a message has two reduced forms";
    out.message = verdict.message;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Completeness and maximality

std::optional<Word> completeness_witness(const RegularCode& x, const Budget& budget) {
  return shortest_word(complement(factor_closure(star(x.lang(), budget), budget), budget));
}

std::optional<Word> extension_witness(const RegularCode& x, const Budget& budget) {
  const auto& alphabet = x.alphabet();
  if (alphabet.size() < 2) {
    throw PreconditionViolation("an extension witness needs an alphabet of at least two letters");
  }
  auto v = completeness_witness(x, budget);
  if (!v) return std::nullopt;
  Symbol other = v->front() == 0 ? 1 : 0;
  return *v + power(Word{other}, v->size() - 1);
}

ExtensionCheck check_extension(const RegularCode& x, const Word& w, const Budget& budget) {
  ExtensionCheck out;
  if (w.empty()) return out;
  out.unbordered = is_unbordered(w);
  out.non_factor = !accepts(factor_closure(star(x.lang(), budget), budget), w);
  if (!accepts(x.lang(), w)) {
    auto single = word_language(x.alphabet(), w);
    RegularPartition p(RegularCode(unite(x.lang(), single, budget), budget), {x.lang(), single},
                       {"X", "W"}, budget);
    out.coding = regular_is_coding(p, budget).holds;
  }
  return out;
}

bool is_maximal(const RegularCode& x, const Budget& budget) {
  if (is_dense(x.lang(), budget)) {
    throw PreconditionViolation("equivalence requires thin code");
  }
  return is_complete(x, budget);
}

bool is_full(const RegularMonoid& m, const Budget& budget) {
  return is_maximal(base(m, budget), budget);
}

bool is_maximal_ud(const RegularCode& x, const Budget& budget) {
  if (!is_base(x, budget)) throw PreconditionViolation("code is not a base");
  return regular_is_ud(x, budget).holds && is_full(RegularMonoid::generated_by(x, budget), budget);
}

bool lemma2_check(const RegularCode& x, const Word& w, const Budget& budget) {
  if (is_dense(x.lang(), budget)) throw PreconditionViolation("code is not thin");
  if (!is_complete(x, budget)) throw PreconditionViolation("code is not complete");
  auto messages = star(x.lang(), budget);
  auto around = concat(concat(messages, word_language(x.alphabet(), w), budget), messages, budget);
  return !is_empty(intersect(plus(around, budget), messages, budget));
}

// ---------------------------------------------------------------------------
// Generated UD codes and free factorizations

RegularCode gen_ud(const RegularPartition& p, std::span<const std::size_t> seq,
                   const Budget& budget) {
  if (seq.size() < 2) throw InvalidInput("sequence needs at least two class indices");
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (seq[i] >= p.size()) {
      throw InvalidInput("class index " + std::to_string(seq[i]) + " is out of range");
    }
    if (i + 1 < seq.size() && seq[i] == seq[i + 1]) {
      throw InvalidInput("adjacent class indices must differ");
    }
  }
  if (seq.front() == seq.back()) throw InvalidInput("last class index must differ from the first");
  if (p.size() < 2) throw PreconditionViolation("partition needs at least two classes");
  if (!regular_is_coding(p, budget).holds) {
    throw PreconditionViolation("partition is not a coding partition");
  }
  auto out = epsilon_language(p.code().alphabet());
  for (auto i : seq) out = concat(out, plus(p.classes()[i], budget), budget);
  return RegularCode(out, budget);
}

FreeFactorization canonical_free_factorization(const RegularMonoid& m, const Budget& budget) {
  auto b = base(m, budget);
  if (!is_finite(b.lang())) throw PreconditionViolation("base is infinite");
  FiniteCode code(b.alphabet(), finite_words(b.lang()));
  auto canonical = canonical_partition(code);
  std::optional<Fsa> free_component;
  if (!canonical.unambiguous.empty()) {
    free_component = minimize(star(finite_language(code.alphabet(), canonical.unambiguous), budget), budget);
  }
  std::vector<Fsa> indecomposable;
  for (const auto& cls : canonical.ta_components) {
    indecomposable.push_back(minimize(star(finite_language(code.alphabet(), cls), budget), budget));
  }
  return {std::move(code), std::move(canonical), std::move(free_component), std::move(indecomposable)};
}

}  // namespace partfact
