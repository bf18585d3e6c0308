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

// Bounded re-verification of the rewriting system: enumerate rule
// instances up to a left-hand-side length, build every overlap and
// inclusion ambiguity between them, and check that both one-step reducts
// of each ambiguity reach the same irreducible word. Also a randomized
// suite of word identities between ladder-shaped words.

#ifndef BRAIDGS_CONFLUENCE_HPP_
#define BRAIDGS_CONFLUENCE_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "braidgs/normal_form.hpp"
#include "braidgs/rewrite.hpp"
#include "braidgs/rules.hpp"

namespace braidgs {

struct InstanceBounds {
  std::size_t max_lhs_len = std::numeric_limits<std::size_t>::max();
  // Bound on each free word (V, W, V_k) separately.
  std::size_t max_part_len = std::numeric_limits<std::size_t>::max();
};

// Calls `visit` on every valid instance within the bounds, in the order
// R1, R2, R3, R4, R4p, R5a, R5b. At least one bound must be finite for
// R1 and R3 to be enumerable.
void for_each_instance(int rank, const InstanceBounds& bounds,
                       const std::function<void(const RuleInstance&)>& visit);

inline constexpr std::size_t kDefaultInstanceBudget = 1'000'000;

// Every instance whose left-hand side has length <= max_lhs_len. Throws
// ResourceError once more than `budget` instances have been produced.
std::vector<RuleInstance> enumerate_instances(
    int rank, std::size_t max_lhs_len,
    std::size_t budget = kDefaultInstanceBudget);

// Uniformly random parameters for `rule` with free words of length at most
// max_part_len; nullopt if the rule has no instance at this rank.
std::optional<RuleInstance> sample_instance(RuleId rule, int rank,
                                            std::size_t max_part_len,
                                            std::mt19937_64& rng);

enum class AmbiguityKind { overlap, inclusion };

std::string_view kind_name(AmbiguityKind kind);

// Both matches are located in w. For an overlap, left starts at 0, right
// ends at w.size(), and they share at least one letter without either
// containing the other. For an inclusion, left spans all of w.
struct Ambiguity {
  Word w;
  RuleMatch left;
  RuleMatch right;
  AmbiguityKind kind = AmbiguityKind::overlap;
};

// All overlaps (including an instance with itself) and inclusions between
// the given instances.
std::vector<Ambiguity> find_ambiguities(std::span<const RuleInstance> instances);

struct CompositionRecord {
  Ambiguity ambiguity;
  Word left_reduct;
  Word right_reduct;
  Word left_nf;
  Word right_nf;
  bool joinable = false;
  // Both one-step reducts are deg-lex smaller than w.
  bool reducts_below = false;
};

struct CompositionReport {
  int rank = 0;
  std::size_t max_lhs_len = 0;
  std::size_t instances = 0;
  std::size_t total = 0;
  std::size_t joinable = 0;
  std::size_t reducts_not_below = 0;
  std::vector<CompositionRecord> records;  // sorted by ambiguity word
  std::vector<CompositionRecord> failures;

  bool passed() const noexcept { return failures.empty() && reducts_not_below == 0; }
};

struct CompositionOptions {
  std::size_t instance_budget = kDefaultInstanceBudget;
  NormalizeOptions normalize;
};

CompositionReport check_compositions(int rank, std::size_t max_lhs_len,
                                     const CompositionOptions& options = {});

struct LemmaCounterexample {
  int i = 0;
  Word lhs;
  Word rhs;
  NormalForm lhs_nf;
  NormalForm rhs_nf;
};

struct LemmaResult {
  std::string name;
  std::string statement;
  std::size_t trials = 0;
  std::vector<LemmaCounterexample> counterexamples;
};

struct LemmaReport {
  int rank = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::vector<LemmaResult> lemmas;

  bool passed() const noexcept;
};

// Word identities between ladder-shaped words; each holds for every rank
// n >= 2 and every admissible i in [2, n].
struct Lemma {
  std::string name;
  std::string statement;
  int min_i = 2;
  // (lhs, rhs) for index i with random free words of length <= max_part.
  std::function<std::pair<Word, Word>(int rank, int i, std::size_t max_part,
                                      std::mt19937_64& rng)>
      build;
};

const std::vector<Lemma>& lemmas();

// For each lemma, `trials` random instantiations (random i, random free
// words of length <= max_part_len); both sides must get equal normal forms.
LemmaReport lemma_suite(int rank, std::size_t trials, std::uint64_t seed,
                        std::size_t max_part_len = 5);

}  // namespace braidgs

#endif  // BRAIDGS_CONFLUENCE_HPP_
