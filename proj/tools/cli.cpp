// Copyright 2026 The braidgs Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <cctype>
#include <charconv>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <random>

#include <CLI11.hpp>

#include "braidgs/confluence.hpp"
#include "braidgs/crosscheck.hpp"
#include "braidgs/oracles.hpp"
#include "braidgs/rewrite.hpp"

namespace braidgs::cli {

ParseError::ParseError(const std::string& message, std::size_t position, std::size_t token)
    : Error(message + " at position " + std::to_string(position) + " (token " +
            std::to_string(token) + ")"),
      position_(position),
      token_(token) {}

namespace {

bool is_separator(char c) { return c == '.' || std::isspace(static_cast<unsigned char>(c)); }

template <class Int>
std::optional<Int> parse_int(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty()) return std::nullopt;
  Int value{};
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || end != s.data() + s.size()) return std::nullopt;
  return value;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

void parse_token(std::string_view tok, std::size_t pos, std::size_t index, int rank,
                 std::vector<SignedLetter>& out) {
  const std::string quoted = "'" + std::string(tok) + "'";
  if (tok.front() == 'a') {
    const std::size_t caret = tok.find('^');
    const std::string_view digits = tok.substr(1, caret == std::string_view::npos ? tok.npos : caret - 1);
    const std::string_view suffix = caret == std::string_view::npos ? "" : tok.substr(caret);
    if (!all_digits(digits)) throw ParseError("malformed generator " + quoted, pos, index);
    if (!suffix.empty() && suffix != "^-1") {
      throw ParseError("malformed exponent in " + quoted, pos, index);
    }
    const auto i = parse_int<int>(digits);
    if (!i || *i < 1 || *i > rank) {
      throw RangeError("index out of range: token " + std::to_string(index) + " " + quoted +
                       " for rank " + std::to_string(rank));
    }
    out.push_back({Generator::artin(*i), suffix.empty() ? 1 : -1});
    return;
  }
  if (tok.front() == 'D') {
    long long k = 1;
    if (tok.size() > 1) {
      if (tok[1] != '^') throw ParseError("malformed token " + quoted, pos, index);
      const auto parsed = parse_int<long long>(tok.substr(2));
      if (!parsed) throw ParseError("malformed exponent in " + quoted, pos, index);
      if (*parsed > kMaxDeltaPower || *parsed < -kMaxDeltaPower) {
        throw ParseError("exponent too large in " + quoted, pos, index);
      }
      k = *parsed;
    }
    const SignedLetter d{k >= 0 ? Generator::delta() : Generator::delta_inv(), 1};
    out.insert(out.end(), static_cast<std::size_t>(k >= 0 ? k : -k), d);
    return;
  }
  throw ParseError("unexpected token " + quoted, pos, index);
}

std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

}  // namespace

SignedWord parse_word(std::string_view text, int rank) {
  check_rank(rank);
  std::vector<SignedLetter> out;
  std::size_t pos = 0;
  std::size_t index = 0;
  while (pos < text.size()) {
    if (is_separator(text[pos])) {
      ++pos;
      continue;
    }
    const std::size_t start = pos;
    while (pos < text.size() && !is_separator(text[pos])) ++pos;
    parse_token(text.substr(start, pos - start), start, index++, rank, out);
  }
  return SignedWord(rank, std::move(out));
}

NormalForm parse_normal_form(std::string_view text, int rank) {
  const std::size_t bar = text.find('|');
  if (bar == std::string_view::npos) throw ParseError("expected 'D^<k> | <letters>'", 0, 0);
  const std::string head = trim(text.substr(0, bar));
  if (head.rfind("D^", 0) != 0) throw ParseError("expected 'D^<k>'", 0, 0);
  const auto k = parse_int<std::int64_t>(std::string_view(head).substr(2));
  if (!k) throw ParseError("malformed exponent '" + head + "'", 0, 0);
  const SignedWord tail = parse_word(text.substr(bar + 1), rank);
  std::vector<Generator> letters;
  for (const auto& l : tail) {
    if (!l.gen.is_artin() || l.sign < 0) {
      throw ParseError("tail must be a positive word in a_1..a_n", bar + 1, 0);
    }
    letters.push_back(l.gen);
  }
  return NormalForm{*k, Word(rank, std::move(letters))};
}

nlohmann::json to_json(const NormalForm& nf) {
  nlohmann::json tail = nlohmann::json::array();
  for (Generator g : nf.tail) tail.push_back(to_string(g));
  return {{"delta_exp", nf.delta_exp}, {"tail", tail}};
}

NormalForm normal_form_from_json(const nlohmann::json& j, int rank) {
  if (!j.is_object() || !j.contains("delta_exp") || !j.contains("tail") ||
      !j["delta_exp"].is_number_integer() || !j["tail"].is_array()) {
    throw DomainError("expected {\"delta_exp\": int, \"tail\": [tokens]}");
  }
  std::string text = "D^" + std::to_string(j["delta_exp"].get<std::int64_t>()) + " |";
  for (const auto& tok : j["tail"]) {
    if (!tok.is_string()) throw DomainError("tail tokens must be strings");
    text += ' ';
    text += tok.get<std::string>();
  }
  return parse_normal_form(text, rank);
}

namespace {

struct Common {
  int rank = 0;
  bool json = false;
  std::string file;
  std::vector<std::string> words;
  std::uint64_t step_guard = kDefaultStepGuard;
};

std::uint64_t default_step_guard() {
  const char* env = std::getenv("BRAIDGS_STEP_GUARD");
  if (env == nullptr || *env == '\0') return kDefaultStepGuard;
  const auto v = parse_int<std::uint64_t>(env);
  if (!v || *v == 0) throw DomainError("BRAIDGS_STEP_GUARD must be a positive integer");
  return *v;
}

std::vector<std::string> read_lines(std::istream& is) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

// Positional words, else lines of the file, else lines of `in`.
std::vector<std::string> gather_items(const Common& c, std::istream& in) {
  if (!c.words.empty()) return c.words;
  if (!c.file.empty() && c.file != "-") {
    std::ifstream f(c.file);
    if (!f) throw DomainError("cannot open '" + c.file + "'");
    return read_lines(f);
  }
  return read_lines(in);
}

void print_json(std::ostream& out, const nlohmann::json& j) { out << j.dump() << '\n'; }

nlohmann::json batch_json(std::vector<nlohmann::json> items, bool single) {
  if (single) return std::move(items.front());
  return nlohmann::json(std::move(items));
}

struct NormalizeCmd {
  Common c;
  bool trace = false;
  std::string policy = "deterministic";
  std::uint64_t seed = 0;
};

int do_normalize(const NormalizeCmd& cmd, bool invert_result, std::istream& in,
                 std::ostream& out) {
  const auto items = gather_items(cmd.c, in);
  const bool single = cmd.c.words.size() == 1;
  const Policy policy =
      cmd.policy == "random" ? Policy::random(cmd.seed) : Policy::deterministic();
  std::vector<nlohmann::json> results;
  for (const auto& text : items) {
    SignedWord u = parse_word(text, cmd.c.rank);
    if (invert_result) u = u.inverse();
    NormalizeOptions opts;
    opts.step_guard = cmd.c.step_guard;
    opts.record_trace = cmd.trace;
    const NormalizeResult res = normalize(desugar_inverses(u), policy, opts);
    const NormalForm nf = split_normal_form(res.word);
    if (cmd.c.json) {
      nlohmann::json j = to_json(nf);
      if (cmd.trace) {
        nlohmann::json steps = nlohmann::json::array();
        for (const auto& s : res.trace.steps) {
          steps.push_back({{"before", to_string(s.before)},
                           {"rule", describe(s.before, s.match)},
                           {"after", to_string(s.after)}});
        }
        j["trace"] = std::move(steps);
      }
      results.push_back(std::move(j));
    } else {
      for (const auto& s : res.trace.steps) {
        out << "  " << to_string(s.before) << " | " << describe(s.before, s.match) << " | "
            << to_string(s.after) << '\n';
      }
      out << format_normal_form(nf) << '\n';
    }
  }
  if (cmd.c.json) {
    print_json(out, results.empty() ? nlohmann::json::array()
                                    : batch_json(std::move(results), single));
  }
  return kExitOk;
}

int do_equal(const Common& c, std::istream& in, std::ostream& out) {
  std::vector<std::pair<std::string, std::string>> pairs;
  if (!c.words.empty()) {
    if (c.words.size() != 2) throw DomainError("equal takes exactly two words");
    pairs.emplace_back(c.words[0], c.words[1]);
  } else {
    Common src = c;
    for (const auto& line : gather_items(src, in)) {
      const std::size_t comma = line.find(',');
      if (comma == std::string::npos) {
        throw DomainError("batch line must have the form 'u , v': '" + line + "'");
      }
      pairs.emplace_back(line.substr(0, comma), line.substr(comma + 1));
    }
  }
  NormalizeOptions opts;
  opts.step_guard = c.step_guard;
  bool all = true;
  std::vector<nlohmann::json> results;
  for (const auto& [a, b] : pairs) {
    const bool eq = equal(parse_word(a, c.rank), parse_word(b, c.rank), opts);
    all = all && eq;
    if (c.json) {
      results.push_back(eq);
    } else {
      out << (eq ? "true" : "false") << '\n';
    }
  }
  if (c.json) {
    print_json(out, results.empty() ? nlohmann::json::array()
                                    : batch_json(std::move(results), !c.words.empty()));
  }
  return all ? kExitOk : kExitNegative;
}

struct ConfluenceCmd {
  Common c;
  std::size_t max_len = 6;
  std::size_t budget = kDefaultInstanceBudget;
  bool show_all = false;
};

nlohmann::json record_json(const CompositionRecord& r) {
  const Ambiguity& a = r.ambiguity;
  return {{"w", to_string(a.w)},
          {"kind", kind_name(a.kind)},
          {"left", describe(a.w, a.left)},
          {"right", describe(a.w, a.right)},
          {"left_reduct", to_string(r.left_reduct)},
          {"right_reduct", to_string(r.right_reduct)},
          {"left_nf", format_normal_form(split_normal_form(r.left_nf))},
          {"right_nf", format_normal_form(split_normal_form(r.right_nf))},
          {"joinable", r.joinable},
          {"reducts_below", r.reducts_below}};
}

void print_record(std::ostream& out, const CompositionRecord& r) {
  const Ambiguity& a = r.ambiguity;
  out << "  " << kind_name(a.kind) << " w=(" << to_string(a.w) << ")\n"
      << "    left:  " << describe(a.w, a.left) << " -> (" << to_string(r.left_reduct)
      << ") ->* " << format_normal_form(split_normal_form(r.left_nf)) << '\n'
      << "    right: " << describe(a.w, a.right) << " -> (" << to_string(r.right_reduct)
      << ") ->* " << format_normal_form(split_normal_form(r.right_nf)) << '\n';
}

int do_confluence(const ConfluenceCmd& cmd, std::ostream& out) {
  CompositionOptions opts;
  opts.instance_budget = cmd.budget;
  opts.normalize.step_guard = cmd.c.step_guard;
  const CompositionReport rep = check_compositions(cmd.c.rank, cmd.max_len, opts);
  if (cmd.c.json) {
    nlohmann::json j = {{"rank", rep.rank},
                        {"max_lhs_len", rep.max_lhs_len},
                        {"instances", rep.instances},
                        {"ambiguities", rep.total},
                        {"joinable", rep.joinable},
                        {"reducts_not_below", rep.reducts_not_below},
                        {"failures", rep.failures.size()}};
    nlohmann::json listed = nlohmann::json::array();
    for (const auto& r : cmd.show_all ? rep.records : rep.failures) listed.push_back(record_json(r));
    j[cmd.show_all ? "records" : "failed"] = std::move(listed);
    print_json(out, j);
  } else {
    out << "rank: " << rep.rank << '\n'
        << "max-lhs-length: " << rep.max_lhs_len << '\n'
        << "instances: " << rep.instances << '\n'
        << "ambiguities: " << rep.total << '\n'
        << "joinable: " << rep.joinable << '\n'
        << "reducts-not-below: " << rep.reducts_not_below << '\n'
        << "failures: " << rep.failures.size() << '\n';
    for (const auto& r : cmd.show_all ? rep.records : rep.failures) print_record(out, r);
  }
  return rep.passed() ? kExitOk : kExitNegative;
}

struct LemmasCmd {
  Common c;
  std::size_t trials = 200;
  std::uint64_t seed = 1;
  std::size_t max_part = 5;
};

int do_lemmas(const LemmasCmd& cmd, std::ostream& out) {
  const LemmaReport rep = lemma_suite(cmd.c.rank, cmd.trials, cmd.seed, cmd.max_part);
  std::size_t failed = 0;
  nlohmann::json items = nlohmann::json::array();
  for (const auto& l : rep.lemmas) {
    if (!l.counterexamples.empty()) ++failed;
    if (cmd.c.json) {
      nlohmann::json cex = nlohmann::json::array();
      for (const auto& x : l.counterexamples) {
        cex.push_back({{"i", x.i},
                       {"lhs", to_string(x.lhs)},
                       {"rhs", to_string(x.rhs)},
                       {"lhs_nf", to_json(x.lhs_nf)},
                       {"rhs_nf", to_json(x.rhs_nf)}});
      }
      items.push_back({{"name", l.name},
                       {"statement", l.statement},
                       {"trials", l.trials},
                       {"counterexamples", std::move(cex)}});
    } else {
      out << (l.counterexamples.empty() ? "ok    " : "FAIL  ") << l.name << "  trials=" << l.trials
          << "  " << l.statement << '\n';
      for (const auto& x : l.counterexamples) {
        out << "  i=" << x.i << " lhs=(" << to_string(x.lhs) << ") -> " << x.lhs_nf << "  rhs=("
            << to_string(x.rhs) << ") -> " << x.rhs_nf << '\n';
      }
    }
  }
  if (cmd.c.json) {
    print_json(out, {{"rank", rep.rank},
                     {"trials", rep.trials},
                     {"seed", rep.seed},
                     {"lemmas", std::move(items)},
                     {"failures", failed}});
  } else {
    out << "failures: " << failed << '\n';
  }
  return rep.passed() ? kExitOk : kExitNegative;
}

struct OracleCmd {
  Common c;
  std::optional<std::size_t> exhaustive;
  std::optional<std::size_t> samples;
  std::size_t length = 12;
  std::uint64_t seed = 1;
  std::optional<std::size_t> garside;
  std::optional<std::size_t> embedding;
};

template <class Pair>
nlohmann::json pair_examples(const std::vector<Pair>& ex) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [a, b] : ex) out.push_back({to_string(a), to_string(b)});
  return out;
}

int do_oracle_check(OracleCmd cmd, std::ostream& out) {
  if (!cmd.exhaustive && !cmd.samples && !cmd.garside && !cmd.embedding) cmd.exhaustive = 4;
  const int n = cmd.c.rank;
  bool ok = true;
  nlohmann::json j = nlohmann::json::object();
  j["rank"] = n;
  auto emit = [&](const std::string& name, std::size_t checked, std::size_t bad,
                  nlohmann::json examples) {
    ok = ok && bad == 0;
    if (cmd.c.json) {
      j[name] = {{"checked", checked}, {"disagreements", bad}, {"examples", std::move(examples)}};
    } else {
      out << name << ": checked=" << checked << " disagreements=" << bad << '\n';
      for (const auto& e : examples) out << "  " << e.dump() << '\n';
    }
  };
  if (cmd.exhaustive) {
    const auto rep = crosscheck_exhaustive(n, *cmd.exhaustive);
    emit("exhaustive", rep.words, rep.disagreements, pair_examples(rep.examples));
  }
  if (cmd.samples) {
    const auto rep = crosscheck_random(n, *cmd.samples, cmd.length, cmd.seed);
    emit("sampled", rep.pairs, rep.disagreements, pair_examples(rep.examples));
  }
  if (cmd.garside) {
    std::vector<SignedWord> words;
    for_each_positive_word(n, *cmd.garside, [&](const Word& w) { words.emplace_back(w); });
    const auto rep = crosscheck_garside(words);
    nlohmann::json ex = nlohmann::json::array();
    for (const auto& u : rep.examples) ex.push_back(to_string(u));
    emit("garside", rep.words, rep.mismatches + rep.ladder_prefixed, std::move(ex));
  }
  if (cmd.embedding) {
    const auto rep = crosscheck_embedding(n, *cmd.embedding);
    emit("embedding", rep.words, rep.disagreements, pair_examples(rep.examples));
  }
  if (cmd.c.json) {
    j["passed"] = ok;
    print_json(out, j);
  } else {
    out << "failures: " << (ok ? 0 : 1) << '\n';
  }
  return ok ? kExitOk : kExitNegative;
}

struct BenchCmd {
  Common c;
  std::size_t words = 1000;
  std::size_t length = 12;
  std::uint64_t seed = 1;
};

int do_bench(const BenchCmd& cmd, std::ostream& out) {
  std::mt19937_64 rng(cmd.seed);
  std::vector<Word> corpus;
  std::size_t letters = 0;
  for (std::size_t t = 0; t < cmd.words; ++t) {
    corpus.push_back(desugar_inverses(random_signed_word(cmd.c.rank, cmd.length, rng)));
    letters += corpus.back().size();
  }
  NormalizeOptions opts;
  opts.step_guard = cmd.c.step_guard;
  std::uint64_t steps = 0;
  const auto start = std::chrono::steady_clock::now();
  for (const auto& w : corpus) steps += normalize(w, Policy::deterministic(), opts).steps;
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const double rate = seconds > 0 ? static_cast<double>(cmd.words) / seconds : 0.0;
  if (cmd.c.json) {
    print_json(out, {{"rank", cmd.c.rank},
                     {"words", cmd.words},
                     {"letters", letters},
                     {"steps", steps},
                     {"seconds", seconds},
                     {"words_per_second", rate}});
  } else {
    out << "rank: " << cmd.c.rank << '\n'
        << "words: " << cmd.words << '\n'
        << "letters: " << letters << '\n'
        << "steps: " << steps << '\n'
        << "seconds: " << seconds << '\n'
        << "words-per-second: " << rate << '\n';
  }
  return kExitOk;
}

void add_rank(CLI::App* sub, Common& c) {
  sub->add_option("-n,--rank", c.rank, "Rank n of B_{n+1}")
      ->required()
      ->check(CLI::Range(1, kMaxRank));
  sub->add_flag("--json", c.json, "Structured output");
}

void add_inputs(CLI::App* sub, Common& c) {
  sub->add_option("words", c.words, "Words; read one per line from --file or stdin if absent");
  sub->add_option("-f,--file", c.file, "Input file, one item per line ('-' for stdin)");
  sub->add_option("--step-guard", c.step_guard, "Rewrite step limit per word")
      ->check(CLI::PositiveNumber);
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  std::uint64_t guard = kDefaultStepGuard;
  try {
    guard = default_step_guard();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  CLI::App app{"Normal forms and word problem for braid groups in Artin-Garside generators",
               "braidgs"};
  app.require_subcommand(1);

  NormalizeCmd norm;
  NormalizeCmd inv;
  Common eq;
  ConfluenceCmd conf;
  LemmasCmd lem;
  OracleCmd orc;
  BenchCmd bench;
  for (Common* c : {&norm.c, &inv.c, &eq, &conf.c, &lem.c, &orc.c, &bench.c}) {
    c->step_guard = guard;
  }

  auto* s_norm = app.add_subcommand("normalize", "Print the normal form D^k | A of each word");
  add_rank(s_norm, norm.c);
  add_inputs(s_norm, norm.c);
  s_norm->add_flag("--trace", norm.trace, "Print every rewrite step");
  s_norm->add_option("--policy", norm.policy, "Match selection")
      ->check(CLI::IsMember({"deterministic", "random"}));
  s_norm->add_option("--seed", norm.seed, "Seed for --policy random");

  auto* s_inv = app.add_subcommand("invert", "Print the normal form of each word's inverse");
  add_rank(s_inv, inv.c);
  add_inputs(s_inv, inv.c);
  s_inv->add_flag("--trace", inv.trace, "Print every rewrite step");

  auto* s_eq = app.add_subcommand("equal", "Decide equality of two words, or of 'u , v' lines");
  add_rank(s_eq, eq);
  add_inputs(s_eq, eq);

  auto* s_conf = app.add_subcommand("confluence", "Check all ambiguities up to a length bound");
  add_rank(s_conf, conf.c);
  s_conf->add_option("-L,--max-length", conf.max_len, "Bound on left-hand-side length")
      ->check(CLI::PositiveNumber);
  s_conf->add_option("--budget", conf.budget, "Maximum number of rule instances");
  s_conf->add_flag("--show-all", conf.show_all, "List every ambiguity, not only failures");
  s_conf->add_option("--step-guard", conf.c.step_guard, "Rewrite step limit per word");

  auto* s_lem = app.add_subcommand("lemmas", "Check ladder identities on random instances");
  add_rank(s_lem, lem.c);
  s_lem->add_option("--trials", lem.trials, "Instances per identity");
  s_lem->add_option("--seed", lem.seed, "Random seed");
  s_lem->add_option("--max-part", lem.max_part, "Bound on free word length");

  auto* s_orc = app.add_subcommand("oracle-check", "Compare the engine with independent oracles");
  add_rank(s_orc, orc.c);
  s_orc->add_option("--exhaustive", orc.exhaustive, "All signed words up to this length");
  s_orc->add_option("--samples", orc.samples, "Random word pairs");
  s_orc->add_option("--length", orc.length, "Maximum length of sampled words");
  s_orc->add_option("--seed", orc.seed, "Random seed");
  s_orc->add_option("--garside", orc.garside, "All positive words up to this length");
  s_orc->add_option("--embedding", orc.embedding, "All positive words up to this length");

  auto* s_bench = app.add_subcommand("bench", "Time normalization of a random corpus");
  add_rank(s_bench, bench.c);
  s_bench->add_option("--words", bench.words, "Corpus size");
  s_bench->add_option("--length", bench.length, "Maximum word length");
  s_bench->add_option("--seed", bench.seed, "Random seed");

  std::vector<std::string> argv_store;
  argv_store.reserve(args.size() + 1);
  argv_store.emplace_back("braidgs");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (s_norm->parsed()) return do_normalize(norm, false, in, out);
    if (s_inv->parsed()) return do_normalize(inv, true, in, out);
    if (s_eq->parsed()) return do_equal(eq, in, out);
    if (s_conf->parsed()) return do_confluence(conf, out);
    if (s_lem->parsed()) return do_lemmas(lem, out);
    if (s_orc->parsed()) return do_oracle_check(orc, out);
    if (s_bench->parsed()) return do_bench(bench, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const RangeError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const RankMismatch& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << '\n';
    return kExitResource;
  } catch (const InternalError& e) {
    err << "step guard: " << e.what() << '\n';
    return kExitResource;
  }
  return kExitUsage;
}

}  // namespace braidgs::cli
