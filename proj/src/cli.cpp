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

#include "partfact/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "partfact/errors.hpp"
#include "partfact/finite_code.hpp"
#include "partfact/partition_lattice.hpp"
#include "partfact/regex.hpp"
#include "partfact/regular_code.hpp"

namespace partfact::cli {

using nlohmann::json;

namespace {

// Length of the word samples printed for infinite languages.
constexpr std::size_t kSampleLength = 6;

const std::vector<std::string> kBooleanCommands = {
    "ud",   "check-partition", "is-base",    "thin",         "dense",  "complete",
    "maximal", "full",         "maximal-ud", "free-product", "lemma2",
};

bool is_boolean(const std::string& command) {
  return std::find(kBooleanCommands.begin(), kBooleanCommands.end(), command) != kBooleanCommands.end();
}

// ---------------------------------------------------------------------------
// Input document

struct Document {
  Alphabet alphabet;
  bool finite = true;
  std::optional<FiniteCode> code;
  Fsa lang;
  json raw;
};

const json& field(const json& doc, const char* name) {
  if (!doc.contains(name)) throw InvalidInput(std::string("input is missing the '") + name + "' field");
  return doc.at(name);
}

std::string string_of(const json& value, const std::string& what) {
  if (!value.is_string()) throw InvalidInput(what + " must be a string");
  return value.get<std::string>();
}

std::vector<std::string> strings_of(const json& value, const std::string& what) {
  if (!value.is_array()) throw InvalidInput(what + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& v : value) out.push_back(string_of(v, what + " entries"));
  return out;
}

Document load(const json& doc, const Budget& budget) {
  if (!doc.is_object()) throw InvalidInput("input must be a JSON object");
  Document d{Alphabet(strings_of(field(doc, "alphabet"), "'alphabet'")), true, std::nullopt,
             Fsa(Alphabet("a")), doc};
  auto kind = string_of(field(doc, "kind"), "'kind'");
  if (kind == "finite") {
    d.code = FiniteCode::parse(d.alphabet, strings_of(field(doc, "code"), "'code'"));
    d.lang = finite_language(d.alphabet, d.code->words());
  } else if (kind == "regex") {
    d.finite = false;
    d.lang = regex_to_fsa(string_of(field(doc, "regex"), "'regex'"), d.alphabet, budget);
    if (is_empty(d.lang)) throw InvalidInput("the regular expression denotes the empty language");
  } else {
    throw InvalidInput("'kind' must be \"finite\" or \"regex\"");
  }
  return d;
}

const FiniteCode& finite_code(const Document& d, const std::string& command) {
  if (!d.code) throw InvalidInput("command '" + command + "' needs a finite code");
  return *d.code;
}

RegularCode regular_code(const Document& d, const Budget& budget) {
  return RegularCode(d.lang, budget);
}

RegularMonoid monoid(const Document& d, const Budget& budget) {
  if (accepts(d.lang, Word{})) return RegularMonoid(d.lang, budget);
  return RegularMonoid::generated_by(RegularCode(d.lang, budget), budget);
}

Partition finite_partition(const FiniteCode& x, const json& classes, const std::string& what) {
  if (!classes.is_object() || classes.empty()) throw InvalidInput(what + " must be a nonempty object");
  std::vector<std::vector<Word>> parsed;
  std::vector<std::string> names;
  for (const auto& [name, words] : classes.items()) {
    parsed.emplace_back();
    for (const auto& w : strings_of(words, what + " class '" + name + "'")) {
      parsed.back().push_back(x.alphabet().parse(w));
    }
    names.push_back(name);
  }
  return Partition(x, std::move(parsed), std::move(names));
}

const json& partition_field(const Document& d) {
  if (!d.raw.contains("partition")) throw InvalidInput("input has no 'partition'");
  return d.raw.at("partition");
}

RegularPartition regular_partition(const Document& d, const Budget& budget) {
  const auto& classes = partition_field(d);
  if (!classes.is_object() || classes.empty()) throw InvalidInput("'partition' must be a nonempty object");
  std::vector<Fsa> langs;
  std::vector<std::string> names;
  for (const auto& [name, value] : classes.items()) {
    if (value.is_string()) {
      langs.push_back(regex_to_fsa(value.get<std::string>(), d.alphabet, budget));
    } else {
      std::vector<Word> words;
      for (const auto& w : strings_of(value, "class '" + name + "'")) words.push_back(d.alphabet.parse(w));
      langs.push_back(finite_language(d.alphabet, words));
    }
    names.push_back(name);
  }
  return RegularPartition(regular_code(d, budget), std::move(langs), std::move(names), budget);
}

// ---------------------------------------------------------------------------
// Report fragments

json words_json(const Alphabet& a, std::span<const Word> words) {
  json out = json::array();
  for (const auto& w : words) out.push_back(a.format(w));
  return out;
}

json classes_json(const Partition& p) {
  json out = json::object();
  for (std::size_t i = 0; i < p.size(); ++i) out[p.names()[i]] = words_json(p.code().alphabet(), p[i]);
  return out;
}

json relation_json(const Alphabet& a, const PrimeRelation& r) {
  return {{"left", words_json(a, r.left.parts)},
          {"right", words_json(a, r.right.parts)},
          {"message", a.format(r.message())}};
}

json language_json(const Fsa& l) {
  json out{{"states", l.num_states()}};
  if (is_finite(l)) {
    out["finite"] = true;
    out["words"] = words_json(l.alphabet(), finite_words(l));
  } else {
    out["finite"] = false;
    out["sample"] = words_json(l.alphabet(), enumerate(l, kSampleLength));
    out["sample_bound"] = kSampleLength;
  }
  return out;
}

std::vector<std::size_t> parse_seq(const std::string& text, const std::vector<std::string>& names) {
  std::vector<std::size_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto named = std::find(names.begin(), names.end(), item);
    if (named != names.end()) {
      out.push_back(static_cast<std::size_t>(named - names.begin()));
      continue;
    }
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
      throw InvalidInput("--seq entry '" + item + "' is neither a class name nor an index");
    }
    out.push_back(std::stoul(item));
  }
  return out;
}

Partition named_partition(const Document& d, const FiniteCode& x, const std::string& name) {
  if (name == "characteristic") return characteristic_partition(x);
  if (name == "canonical") return canonical_partition(x).as_partition(x);
  if (name == "trivial") return Partition::trivial(x);
  if (name == "discrete") return Partition::discrete(x);
  if (name == "input") return finite_partition(x, partition_field(d), "'partition'");
  if (d.raw.contains("partitions") && d.raw.at("partitions").contains(name)) {
    return finite_partition(x, d.raw.at("partitions").at(name), "partition '" + name + "'");
  }
  throw InvalidInput("unknown partition '" + name + "'");
}

const std::string& required(const std::optional<std::string>& value, const char* option) {
  if (!value) throw InvalidInput(std::string("missing option ") + option);
  return *value;
}

// ---------------------------------------------------------------------------
// Commands

AnalysisReport dispatch(const AnalysisRequest& rq, const Document& d) {
  const auto& cmd = rq.command;
  const auto& budget = rq.budget;
  const auto& a = d.alphabet;
  AnalysisReport rep;
  auto& body = rep.body;
  auto verdict = [&](bool v) {
    rep.verdict = v;
    body["verdict"] = v;
  };

  if (cmd == "ud") {
    if (d.code) {
      auto r = sp_is_ud(*d.code);
      verdict(r.ud);
      if (r.witness) {
        body["relation"] = relation_json(a, *r.witness);
        body["message"] = a.format(r.witness->message());
      }
    } else {
      auto r = regular_is_ud(regular_code(d, budget), budget);
      verdict(r.holds);
      if (r.message) body["message"] = a.format(*r.message);
    }
  } else if (cmd == "prime-relations") {
    const auto& x = finite_code(d, cmd);
    if (rq.max_len < 1) throw InvalidInput("--max-len must be at least 1");
    json list = json::array();
    for (const auto& r : enumerate_prime_relations(x, rq.max_len)) list.push_back(relation_json(a, r));
    body["bound"] = rq.max_len;
    body["relations"] = list;
  } else if (cmd == "canonical") {
    const auto& x = finite_code(d, cmd);
    auto c = canonical_partition(x);
    json classes{{"X0", words_json(a, c.unambiguous)}};
    for (std::size_t i = 0; i < c.ta_components.size(); ++i) {
      classes["X" + std::to_string(i + 1)] = words_json(a, c.ta_components[i]);
    }
    body["classes"] = classes;
  } else if (cmd == "characteristic") {
    body["classes"] = classes_json(characteristic_partition(finite_code(d, cmd)));
  } else if (cmd == "check-partition") {
    auto p = regular_partition(d, budget);
    if (d.code) {
      auto fp = finite_partition(*d.code, partition_field(d), "'partition'");
      verdict(is_coding(*d.code, fp));
      json violations = json::array();
      for (const auto& [u, v] : cooccurrence_pairs(*d.code)) {
        if (fp.class_of(u) != fp.class_of(v)) violations.push_back({a.format(u), a.format(v)});
      }
      body["violations"] = violations;
      body["classes"] = classes_json(fp);
    } else {
      body["classes"] = partition_field(d);
    }
    auto r = regular_is_coding(p, budget);
    if (!rep.verdict) verdict(r.holds);
    if (r.message) body["message"] = a.format(*r.message);
  } else if (cmd == "factorize") {
    const auto& x = finite_code(d, cmd);
    auto w = a.parse(required(rq.word, "--word"));
    auto p = d.raw.contains("partition") ? finite_partition(x, partition_field(d), "'partition'")
                                         : canonical_partition(x).as_partition(x);
    auto f = p_factorize(w, p);
    json blocks = json::array();
    for (const auto& b : f.blocks) {
      blocks.push_back({{"class", p.names()[b.class_index]}, {"block", a.format(b.block)}});
    }
    body["message"] = a.format(w);
    body["blocks"] = blocks;
    body["factorization"] = words_json(a, *factorize(x, w));
    body["classes"] = classes_json(p);
  } else if (cmd == "lattice") {
    const auto& x = finite_code(d, cmd);
    const auto& op = required(rq.op, "--op");
    auto l = named_partition(d, x, required(rq.left, "--left"));
    auto r = named_partition(d, x, required(rq.right, "--right"));
    if (op == "meet") {
      body["classes"] = classes_json(coding_meet(l, r));
    } else if (op == "join") {
      body["classes"] = classes_json(coding_join(l, r));
    } else if (op == "leq") {
      verdict(leq(l, r));
    } else {
      throw InvalidInput("--op must be meet, join or leq");
    }
  } else if (cmd == "base") {
    body["language"] = language_json(base(monoid(d, budget), budget).lang());
  } else if (cmd == "is-base") {
    verdict(is_base(regular_code(d, budget), budget));
  } else if (cmd == "thin" || cmd == "dense") {
    auto missing = shortest_word(complement(factor_closure(d.lang, budget), budget));
    verdict(cmd == "thin" ? missing.has_value() : !missing.has_value());
    if (missing) body["message"] = a.format(*missing);
  } else if (cmd == "complete") {
    auto v = completeness_witness(regular_code(d, budget), budget);
    verdict(!v.has_value());
    if (v) body["witness"] = {{"v", a.format(*v)}};
  } else if (cmd == "maximal") {
    auto x = regular_code(d, budget);
    verdict(is_maximal(x, budget));
    if (!*rep.verdict && a.size() >= 2) {
      body["witness"] = {{"v", a.format(*completeness_witness(x, budget))},
                         {"w", a.format(*extension_witness(x, budget))}};
    }
  } else if (cmd == "full") {
    verdict(is_full(monoid(d, budget), budget));
  } else if (cmd == "maximal-ud") {
    verdict(is_maximal_ud(regular_code(d, budget), budget));
  } else if (cmd == "witness") {
    auto x = regular_code(d, budget);
    auto w = extension_witness(x, budget);
    if (w) {
      auto v = completeness_witness(x, budget);
      body["witness"] = {{"v", a.format(*v)}, {"w", a.format(*w)}};
      auto c = check_extension(x, *w, budget);
      body["obligations"] = {{"unbordered", c.unbordered}, {"non_factor", c.non_factor}, {"coding", c.coding}};
    }
  } else if (cmd == "free-product") {
    std::vector<RegularMonoid> monoids;
    if (d.raw.contains("monoids")) {
      for (const auto& e : strings_of(d.raw.at("monoids"), "'monoids'")) {
        monoids.emplace_back(regex_to_fsa(e, a, budget), budget);
      }
    } else {
      auto p = regular_partition(d, budget);
      for (const auto& cls : p.classes()) {
        monoids.push_back(RegularMonoid::generated_by(RegularCode(cls, budget), budget));
      }
    }
    auto r = free_product_check(monoids, budget);
    verdict(r.holds);
    if (!r.reason.empty()) body["reason"] = r.reason;
    if (r.message) body["message"] = a.format(*r.message);
  } else if (cmd == "gen-ud") {
    auto p = regular_partition(d, budget);
    auto seq = parse_seq(required(rq.seq, "--seq"), p.names());
    auto g = gen_ud(p, seq, budget);
    body["language"] = language_json(g.lang());
    auto ud = regular_is_ud(g, budget);
    body["ud"] = ud.holds;
    if (ud.message) body["message"] = a.format(*ud.message);
  } else if (cmd == "lemma2") {
    verdict(lemma2_check(regular_code(d, budget), a.parse(required(rq.word, "--word")), budget));
  } else if (cmd == "decompose") {
    auto f = canonical_free_factorization(monoid(d, budget), budget);
    json classes{{"M0", words_json(a, f.canonical.unambiguous)}};
    for (std::size_t i = 0; i < f.canonical.ta_components.size(); ++i) {
      classes["M" + std::to_string(i + 1)] = words_json(a, f.canonical.ta_components[i]);
    }
    body["classes"] = classes;
    body["language"] = language_json(f.base.size() ? finite_language(a, f.base.words()) : d.lang);
  } else {
    throw InvalidInput("unknown command '" + cmd + "'");
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Rendering

std::string scalar(const json& v) {
  if (v.is_string()) {
    auto s = v.get<std::string>();
    return s.empty() ? "_" : s;
  }
  if (v.is_array()) {
    std::string out;
    for (const auto& e : v) {
      if (!out.empty()) out += e.is_array() ? ", " : " ";
      out += scalar(e);
    }
    return v.empty() ? "(none)" : out;
  }
  return v.dump();
}

void render(std::ostream& out, const json& value, const std::string& indent) {
  for (const auto& [key, v] : value.items()) {
    if (v.is_object()) {
      out << indent << key << ":\n";
      render(out, v, indent + "  ");
    } else if (v.is_array() && !v.empty() && v.front().is_object()) {
      out << indent << key << ": " << v.size() << "\n";
      for (const auto& e : v) {
        out << indent << "  -\n";
        render(out, e, indent + "    ");
      }
    } else {
      out << indent << key << ": " << scalar(v) << "\n";
    }
  }
}

std::optional<std::size_t> state_cap_from_env() {
  const char* raw = std::getenv("PARTFACT_STATE_CAP");
  if (!raw || !*raw) return std::nullopt;
  std::string text(raw);
  if (text.find_first_not_of("0123456789") != std::string::npos) {
    throw InvalidInput("PARTFACT_STATE_CAP must be a positive integer");
  }
  auto cap = std::stoull(text);
  if (cap == 0) throw InvalidInput("PARTFACT_STATE_CAP must be a positive integer");
  return static_cast<std::size_t>(cap);
}

json read_document(const std::string& path) {
  std::string text;
  if (path == "-") {
    std::stringstream buffer;
    buffer << std::cin.rdbuf();
    text = buffer.str();
  } else {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    text = buffer.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(path + ": " + e.what());
  }
}

struct Outcome {
  int code = kOk;
  std::string out;
  std::string err;
};

Outcome analyze(AnalysisRequest rq, const std::string& path, bool json_format, bool quiet) {
  Outcome o;
  std::ostringstream out, err;
  try {
    rq.input = read_document(path);
    auto rep = run(rq);
    if (quiet) {
      if (rep.verdict) o.code = *rep.verdict ? kOk : kFalse;
    } else if (json_format) {
      out << rep.body.dump(2) << "\n";
    } else {
      out << render_table(rep.body);
    }
  } catch (...) {
    o.code = report_error(err);
    o.err = (path == "-" ? "" : path + ": ") + err.str();
  }
  o.out = out.str();
  return o;
}

}  // namespace

const std::vector<std::string>& commands() {
  static const std::vector<std::string> names = {
      "ud",       "prime-relations", "canonical",  "characteristic", "check-partition",
      "factorize", "lattice",        "base",       "is-base",        "thin",
      "dense",    "complete",        "maximal",    "full",           "maximal-ud",
      "witness",  "free-product",    "gen-ud",     "lemma2",         "decompose",
  };
  return names;
}

AnalysisReport run(const AnalysisRequest& request) {
  const auto& all = commands();
  if (std::find(all.begin(), all.end(), request.command) == all.end()) {
    throw InvalidInput("unknown command '" + request.command + "'");
  }
  auto start = std::chrono::steady_clock::now();
  auto doc = load(request.input, request.budget);
  auto rep = dispatch(request, doc);
  auto elapsed = std::chrono::steady_clock::now() - start;
  rep.body["command"] = request.command;
  rep.body["elapsed_ms"] =
      request.timing ? std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count() : 0;
  if (is_boolean(request.command) && !rep.verdict) throw Error("internal: boolean command without a verdict");
  return rep;
}

std::string render_table(const json& report) {
  std::ostringstream out;
  render(out, report, "");
  return out.str();
}

int report_error(std::ostream& err) {
  try {
    throw;
  } catch (const ResourceLimit& e) {
    err << "resource limit: " << e.what() << "\n";
    return kResource;
  } catch (const PreconditionViolation& e) {
    err << "precondition violated: " << e.what() << "\n";
    return kPrecondition;
  } catch (const ParseError& e) {
    err << "parse error at position " << e.position() << ": " << e.what() << "\n";
    return kMalformed;
  } catch (const InvalidInput& e) {
    err << "invalid input: " << e.what() << "\n";
    return kMalformed;
  } catch (const json::exception& e) {
    err << "invalid input: " << e.what() << "\n";
    return kMalformed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFalse;
  }
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decipherability analysis of finite and regular codes."};
  app.name("partfact");
  std::string command;
  std::vector<std::string> inputs;
  std::string format = "table";
  bool quiet = false;
  bool no_timing = false;
  std::size_t jobs = 1;
  AnalysisRequest rq;
  std::string max_len_text;

  app.add_option("command", command, "Analysis to run")->required()->check(CLI::IsMember(commands()));
  app.add_option("inputs", inputs, "Input documents ('-' for stdin)")->required();
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "json"}));
  app.add_flag("--quiet", quiet, "Print nothing; boolean verdicts become the exit status");
  app.add_option("--max-len", rq.max_len, "Message length bound for prime-relations")
      ->check(CLI::PositiveNumber);
  app.add_option("--word", rq.word, "Word for factorize and lemma2 ('_' is the empty word)");
  app.add_option("--seq", rq.seq, "Comma-separated class names or indices for gen-ud");
  app.add_option("--op", rq.op, "Lattice operation")->check(CLI::IsMember({"meet", "join", "leq"}));
  app.add_option("--left", rq.left, "Left partition name for lattice");
  app.add_option("--right", rq.right, "Right partition name for lattice");
  app.add_flag("--no-timing", no_timing, "Report elapsed_ms as 0 for reproducible output");
  app.add_option("--jobs", jobs, "Concurrent analyses in batch mode")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kMalformed;
  }
  try {
    if (auto cap = state_cap_from_env()) rq.budget.state_cap = *cap;
  } catch (...) {
    return report_error(err);
  }
  rq.command = command;
  rq.timing = !no_timing;

  // One document: plain report. Several: one JSON line per document, in
  // input order, analyzed up to `jobs` at a time.
  if (inputs.size() == 1) {
    auto o = analyze(rq, inputs.front(), format == "json", quiet);
    out << o.out;
    err << o.err;
    return o.code;
  }
  std::vector<Outcome> outcomes(inputs.size());
  for (std::size_t first = 0; first < inputs.size(); first += jobs) {
    std::vector<std::future<Outcome>> running;
    for (std::size_t i = first; i < std::min(inputs.size(), first + jobs); ++i) {
      running.push_back(std::async(std::launch::async, [&, i] {
        auto o = analyze(rq, inputs[i], true, quiet);
        if (!o.out.empty()) o.out = json::parse(o.out).dump() + "\n";
        return o;
      }));
    }
    for (std::size_t i = 0; i < running.size(); ++i) outcomes[first + i] = running[i].get();
  }
  int code = kOk;
  for (const auto& o : outcomes) {
    out << o.out;
    err << o.err;
    code = std::max(code, o.code);
  }
  return code;
}

}  // namespace partfact::cli
