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

// The seven rule schemas of the rewriting system for B_{n+1} in the
// Artin-Garside generators. Every rule is a pair of words lhs -> rhs with
// lhs > rhs in deg-lex order:
//
//   R1   a_{i+1} a_i V W a_{i+1..j}  ->  a_i a_{i+1} a_i V a_{i..j} W'
//          1 <= i <= n-1, 1 <= j <= i+1, V over a_1..a_{i-1},
//          W over a_j..a_i and W empty or starting with a_i
//   R2   a_s a_k  ->  a_k a_s                                 s - k >= 2
//   R3   Lambda_1 V_1 Lambda_2 V_2 ... V_{n-1} Lambda_n
//          ->  D V_1^(n-1) V_2^(n-2) ... V_{n-1}^(1)      V_k over a_1..a_k
//   R4   a_l D     ->  D a_{n-l+1}
//   R4p  a_l D^-1  ->  D^-1 a_{n-l+1}
//   R5a  D D^-1    ->  1
//   R5b  D^-1 D    ->  1
//
// where a_{i..j} = a_i a_{i-1} ... a_j (empty for j = i + 1), W' is W with
// every index raised by one and V^(k) is V raised by k.
//
// A RuleInstance carries the free words V, W, V_k themselves; a RuleMatch
// locates an instance inside a host word and carries half-open spans into
// the host instead of words.

#ifndef BRAIDGS_RULES_HPP_
#define BRAIDGS_RULES_HPP_

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "braidgs/word.hpp"

namespace braidgs {

// Declaration order is the tie-break order used by find_matches at a fixed
// start position (cheap rules first).
enum class RuleId { R5a, R5b, R4, R4p, R2, R1, R3 };

inline constexpr RuleId kAllRules[] = {RuleId::R1,  RuleId::R2,  RuleId::R3,
                                       RuleId::R4,  RuleId::R4p, RuleId::R5a,
                                       RuleId::R5b};

std::string_view rule_name(RuleId rule);

struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const noexcept { return end - begin; }
  friend bool operator==(const Span&, const Span&) = default;
};

template <class Part>
struct BraidArgs {  // R1
  int i = 1;
  int j = 1;
  Part v;
  Part w;
  friend bool operator==(const BraidArgs&, const BraidArgs&) = default;
};

struct CommuteArgs {  // R2
  int s = 3;
  int k = 1;
  friend bool operator==(const CommuteArgs&, const CommuteArgs&) = default;
};

template <class Part>
struct LadderArgs {  // R3; v[k-1] is V_k
  std::vector<Part> v;
  friend bool operator==(const LadderArgs&, const LadderArgs&) = default;
};

struct PushArgs {  // R4, R4p
  int l = 1;
  friend bool operator==(const PushArgs&, const PushArgs&) = default;
};

struct CancelArgs {  // R5a, R5b
  friend bool operator==(const CancelArgs&, const CancelArgs&) = default;
};

template <class Part>
using RuleArgs = std::variant<BraidArgs<Part>, CommuteArgs, LadderArgs<Part>,
                              PushArgs, CancelArgs>;

// A fully parameterized rule, independent of any host word.
struct RuleInstance {
  RuleId rule = RuleId::R5a;
  int rank = 1;
  RuleArgs<Word> args = CancelArgs{};

  friend bool operator==(const RuleInstance&, const RuleInstance&) = default;
};

// A rule instance located at [start, end) of a host word.
struct RuleMatch {
  RuleId rule = RuleId::R5a;
  std::size_t start = 0;
  std::size_t end = 0;
  RuleArgs<Span> args = CancelArgs{};

  friend bool operator==(const RuleMatch&, const RuleMatch&) = default;
};

// Both sides of an instance. Throws RangeError / DomainError when the
// parameters violate the schema constraints listed above.
Word instantiate_lhs(const RuleInstance& inst);
Word instantiate_rhs(const RuleInstance& inst);

// Throws like instantiate_lhs when inst is not a valid instance.
void validate(const RuleInstance& inst);

// Reads the free words of a match back out of its host word.
RuleInstance instance_of(const Word& host, const RuleMatch& m);

// Locates inst at offset `at` of a host word whose letters there spell
// instantiate_lhs(inst). No host is consulted.
RuleMatch match_at(const RuleInstance& inst, std::size_t at);

// "R1 [0,5) i=1 j=1 V=() W=(a1)" style description against the host.
std::string describe(const Word& host, const RuleMatch& m);
std::string describe(const RuleInstance& inst);
std::ostream& operator<<(std::ostream& os, const RuleMatch& m);

}  // namespace braidgs

#endif  // BRAIDGS_RULES_HPP_
