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


// Acceptance gate. Runs every acceptance criterion at its stated scale and
// prints one PASS/FAIL line per criterion. Exit status is nonzero if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "braidgs/confluence.hpp"
#include "braidgs/crosscheck.hpp"
#include "braidgs/families.hpp"
#include "braidgs/normal_form.hpp"
#include "braidgs/oracles.hpp"
#include "braidgs/rewrite.hpp"
#include "braidgs/rules.hpp"
#include "cli.hpp"

namespace braidgs {
namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

Outcome rule_soundness() {
  const auto start = Clock::now();
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::string first;
  for (int n = 2; n <= 5; ++n) {
    std::mt19937_64 rng(1000 + n);
    for (RuleId rule : kAllRules) {
      for (int t = 0; t < 1000; ++t) {
        const auto inst = sample_instance(rule, n, 5, rng);
        if (!inst) break;  // no instance at this rank
        ++checked;
        if (artin_automorphism(instantiate_lhs(*inst)) !=
            artin_automorphism(instantiate_rhs(*inst))) {
          if (failures++ == 0) first = describe(*inst);
        }
      }
    }
  }
  const double secs = seconds_since(start);
  Outcome o{failures == 0 && secs < 60.0, ""};
  o.detail = std::to_string(checked) + " instances, " + std::to_string(failures) +
             " failures, " + fmt_seconds(secs) + " (limit 60s)";
  if (!first.empty()) o.detail += "; first: " + first;
  return o;
}

Outcome dominance() {
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::string first;
  InstanceBounds bounds;
  bounds.max_part_len = 4;
  for (int n = 1; n <= 5; ++n) {
    for_each_instance(n, bounds, [&](const RuleInstance& inst) {
      ++checked;
      if (cmp_deglex(instantiate_lhs(inst), instantiate_rhs(inst)) <= 0) {
        if (failures++ == 0) first = describe(inst);
      }
    });
  }
  Outcome o{failures == 0, std::to_string(checked) + " instances, " +
                               std::to_string(failures) + " failures"};
  if (!first.empty()) o.detail += "; first: " + first;
  return o;
}

Outcome strategy_independence() {
  std::mt19937_64 rng(3);
  std::size_t mismatches = 0;
  std::size_t guard_hits = 0;
  std::string first;
  for (int t = 0; t < 1000; ++t) {
    const int n = 1 + t % 4;
    const Word d = desugar_inverses(random_signed_word(n, 12, rng));
    try {
      const Word expected = normalize(d).word;
      for (std::uint64_t s = 0; s < 5; ++s) {
        if (normalize(d, Policy::random(t * 5 + s + 1)).word != expected) {
          if (mismatches++ == 0) first = to_string(d);
        }
      }
    } catch (const InternalError&) {
      ++guard_hits;
    }
  }
  Outcome o{mismatches == 0 && guard_hits == 0,
            "1000 words x 6 policies, " + std::to_string(mismatches) + " mismatches, " +
                std::to_string(guard_hits) + " step-guard hits"};
  if (!first.empty()) o.detail += "; first: " + first;
  return o;
}

Outcome confluence() {
  const auto start = Clock::now();
  std::string detail;
  bool ok = true;
  for (auto [n, len] : {std::pair{2, 8}, std::pair{3, 6}}) {
    const auto rep = check_compositions(n, static_cast<std::size_t>(len));
    ok = ok && rep.passed();
    detail += "n=" + std::to_string(n) + " L=" + std::to_string(len) + ": " +
              std::to_string(rep.total) + " ambiguities, " + std::to_string(rep.failures.size()) +
              " not joinable, " + std::to_string(rep.reducts_not_below) + " not below; ";
  }
  const double secs = seconds_since(start);
  return {ok && secs < 600.0, detail + fmt_seconds(secs) + " (limit 600s)"};
}

Outcome lemma_suite_all() {
  std::size_t counterexamples = 0;
  std::size_t identities = 0;
  std::string first;
  for (int n = 2; n <= 6; ++n) {
    const auto rep = lemma_suite(n, 200, 1);
    for (const auto& l : rep.lemmas) {
      ++identities;
      if (!l.counterexamples.empty() && first.empty()) first = l.name + " n=" + std::to_string(n);
      counterexamples += l.counterexamples.size();
    }
  }
  Outcome o{counterexamples == 0, std::to_string(identities) +
                                      " identity/rank pairs x 200 trials, " +
                                      std::to_string(counterexamples) + " counterexamples"};
  if (!first.empty()) o.detail += "; first: " + first;
  return o;
}

Outcome oracle_equivalence() {
  const auto ex = crosscheck_exhaustive(2, 5);
  const auto rnd = crosscheck_random(3, 1000, 12, 6);
  return {ex.passed() && rnd.passed(),
          "exhaustive B_3 len<=5: " + std::to_string(ex.words) + " words, " +
              std::to_string(ex.engine_classes) + "/" + std::to_string(ex.oracle_classes) +
              " classes, " + std::to_string(ex.disagreements) + " disagreements; random B_4: " +
              std::to_string(rnd.pairs) + " pairs, " + std::to_string(rnd.disagreements) +
              " disagreements"};
}

Outcome garside() {
  std::vector<SignedWord> words;
  for_each_positive_word(2, 6, [&](const Word& w) { words.emplace_back(w); });
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) words.emplace_back(random_positive_word(3, 0, 8, rng));
  const auto rep = crosscheck_garside(words);
  return {rep.passed(), std::to_string(rep.words) + " words, " + std::to_string(rep.mismatches) +
                            " mismatches, " + std::to_string(rep.ladder_prefixed) +
                            " ladder-prefixed tails"};
}

Outcome embedding() {
  const auto rep = crosscheck_embedding(2, 6);
  return {rep.passed(), std::to_string(rep.words) + " positive words, " +
                            std::to_string(rep.disagreements) + " disagreements"};
}

Outcome named_identities() {
  std::size_t checked = 0;
  std::size_t failures = 0;
  auto expect = [&](const Word& w, const NormalForm& nf) {
    ++checked;
    if (normal_form(w) != nf) ++failures;
  };
  expect(Word::artin(2, {2, 1, 2}), {1, Word(2)});
  expect(Word::artin(2, {1, 2, 1}), {1, Word(2)});
  const Generator d = Generator::delta();
  for (int n = 1; n <= 6; ++n) {
    const NormalForm delta{1, Word(n)};
    for (int l = 1; l <= n; ++l) {
      const Word pushed = Word(n, {d}) + Word::artin(n, {n - l + 1});
      expect(Word(n, {Generator::artin(l), d}), n >= 2 ? NormalForm{1, pushed.subword(1, 1)}
                                                        : normal_form(pushed));
      expect(e_word(l, n) + Word::artin(n, {l}), delta);
    }
    std::vector<int> staircase;
    for (int s = n; s >= 1; --s) {
      for (int k = s; k <= n; ++k) staircase.push_back(k);
    }
    expect(Word::artin(n, staircase), delta);
  }
  return {failures == 0,
          std::to_string(checked) + " identities, " + std::to_string(failures) + " failures"};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) out.push_back(line);
  return out;
}

Outcome cli_contract(const std::filesystem::path& dir) {
  namespace fs = std::filesystem;
  std::vector<fs::path> cases;
  for (const auto& e : fs::directory_iterator(dir)) {
    if (e.path().extension() == ".args") cases.push_back(e.path());
  }
  std::sort(cases.begin(), cases.end());
  const fs::path saved = fs::current_path();
  fs::current_path(dir);
  std::size_t failures = 0;
  std::size_t round_trips = 0;
  std::string first;
  for (const auto& c : cases) {
    const fs::path stem = c.parent_path() / c.stem();
    const auto args = lines_of(slurp(c));
    std::istringstream in(fs::exists(stem.string() + ".in") ? slurp(stem.string() + ".in") : "");
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, in, out, err);
    const std::string expected_out = slurp(stem.string() + ".out");
    const int expected_code = std::stoi(slurp(stem.string() + ".code"));
    bool ok = code == expected_code && out.str() == expected_out;

    // JSON normal forms must read back to the same JSON, and to the text form.
    const bool json_nf = !args.empty() && (args[0] == "normalize" || args[0] == "invert") &&
                         std::find(args.begin(), args.end(), "--json") != args.end();
    if (ok && json_nf && code == 0) {
      const auto flag = std::find(args.begin(), args.end(), "-n");
      const int n = std::stoi(*(flag + 1));
      const auto j = nlohmann::json::parse(expected_out);
      std::vector<nlohmann::json> items;
      if (j.is_array()) {
        items.assign(j.begin(), j.end());
      } else {
        items.push_back(j);
      }
      for (auto item : items) {
        item.erase("trace");
        const NormalForm nf = cli::normal_form_from_json(item, n);
        ok = ok && cli::to_json(nf) == item;
        ok = ok && cli::parse_normal_form(format_normal_form(nf), n) == nf;
        ++round_trips;
      }
    }
    if (!ok) {
      if (failures++ == 0) first = c.stem().string();
    }
  }
  fs::current_path(saved);
  Outcome o{failures == 0 && !cases.empty(),
            std::to_string(cases.size()) + " golden invocations, " +
                std::to_string(round_trips) + " JSON round trips, " + std::to_string(failures) +
                " failures"};
  if (!first.empty()) o.detail += "; first: " + first;
  return o;
}

}  // namespace
}  // namespace braidgs

int main(int argc, char** argv) {
  const std::filesystem::path golden = argc > 1 ? argv[1] : BRAIDGS_GOLDEN_DIR;
  const std::vector<std::pair<std::string, std::function<braidgs::Outcome()>>> criteria = {
      {"rule soundness", braidgs::rule_soundness},
      {"deg-lex dominance", braidgs::dominance},
      {"termination and strategy independence", braidgs::strategy_independence},
      {"confluence at desk scale", braidgs::confluence},
      {"lemma suite", braidgs::lemma_suite_all},
      {"oracle equivalence", braidgs::oracle_equivalence},
      {"Garside coincidence", braidgs::garside},
      {"positive embedding", braidgs::embedding},
      {"named identities", braidgs::named_identities},
      {"CLI contract", [&] { return braidgs::cli_contract(golden); }},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    braidgs::Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.passed) ++failed;
    std::cout << (o.passed ? "PASS " : "FAIL ") << k + 1 << ". " << criteria[k].first << ": "
              << o.detail << std::endl;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed")
            << std::endl;
  return failed == 0 ? 0 : 1;
}
