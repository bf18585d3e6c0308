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

#ifndef BRAIDGS_REWRITE_HPP_
#define BRAIDGS_REWRITE_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "braidgs/rules.hpp"
#include "braidgs/word.hpp"

namespace braidgs {

// Every rule instance whose left-hand side occurs in w, ordered by start
// position, then R5a, R5b, R4, R4p, R2, R1, R3, then ascending j for R1.
//
// R1 recognition at position p: the letters a_{i+1} a_i fix i. The segment
// up to the next letter of index > i must end in a_{i+1}; it splits at its
// first a_i into V and W. Every j for which the letters after that closing
// a_{i+1} spell a_i ... a_j and all of W lies in a_j..a_i yields one match
// (j = i + 1 needs W empty).
//
// R3 recognition at position p: a_1, then for k = 1..n-1 the maximal run of
// letters of index <= k is V_k and must be followed by exactly
// a_{k+1} a_k ... a_1.
std::vector<RuleMatch> find_matches(const Word& w);

// True iff no rule left-hand side occurs in w.
bool is_irreducible(const Word& w);

// Replaces [m.start, m.end) by the right-hand side of m. Throws
// IntegrityError if m is not a match of w.
Word apply_match(const Word& w, const RuleMatch& m);

struct TraceStep {
  Word before;
  RuleMatch match;
  Word after;
};

struct RewriteTrace {
  std::vector<TraceStep> steps;
};

class Policy {
 public:
  enum class Kind { deterministic, random };

  static Policy deterministic() { return Policy(Kind::deterministic, 0); }
  static Policy random(std::uint64_t seed) { return Policy(Kind::random, seed); }

  Kind kind() const noexcept { return kind_; }
  std::uint64_t seed() const noexcept { return seed_; }

 private:
  Policy(Kind kind, std::uint64_t seed) : kind_(kind), seed_(seed) {}

  Kind kind_;
  std::uint64_t seed_;
};

inline constexpr std::uint64_t kDefaultStepGuard = 10'000'000;

struct NormalizeOptions {
  std::uint64_t step_guard = kDefaultStepGuard;
  bool record_trace = false;
};

struct NormalizeResult {
  Word word;
  RewriteTrace trace;  // empty unless record_trace
  std::uint64_t steps = 0;
};

// Rewrites w until it is irreducible. The deterministic policy always takes
// the first match in find_matches order; the random policy draws uniformly
// among all current matches. Throws InternalError when the step guard is
// exceeded, which indicates a defect since every step decreases the word.
NormalizeResult normalize(const Word& w,
                          const Policy& policy = Policy::deterministic(),
                          const NormalizeOptions& options = {});

}  // namespace braidgs

#endif  // BRAIDGS_REWRITE_HPP_
