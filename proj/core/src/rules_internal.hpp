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

// Letter-level helpers shared by rules.cpp and rewrite.cpp. No validation
// happens here; callers hand in well-formed arguments.

#ifndef BRAIDGS_SRC_RULES_INTERNAL_HPP_
#define BRAIDGS_SRC_RULES_INTERNAL_HPP_

#include <span>
#include <type_traits>
#include <variant>
#include <vector>

#include "braidgs/rules.hpp"

namespace braidgs::detail {

inline void push_run(std::vector<Generator>& out, int from, int down_to) {
  for (int m = from; m >= down_to; --m) out.push_back(Generator::artin(m));
}

inline void push_shifted(std::vector<Generator>& out,
                         std::span<const Generator> part, int k) {
  for (Generator g : part) out.push_back(Generator::artin(g.index() + k));
}

// `letters(part)` maps a Part (Word or Span) to its letters.
template <class Part, class Letters>
void append_lhs(RuleId rule, const RuleArgs<Part>& args, int n,
                Letters&& letters, std::vector<Generator>& out) {
  switch (rule) {
    case RuleId::R1: {
      const auto& a = std::get<BraidArgs<Part>>(args);
      out.push_back(Generator::artin(a.i + 1));
      out.push_back(Generator::artin(a.i));
      const auto v = letters(a.v);
      const auto w = letters(a.w);
      out.insert(out.end(), v.begin(), v.end());
      out.insert(out.end(), w.begin(), w.end());
      push_run(out, a.i + 1, a.j);
      break;
    }
    case RuleId::R2: {
      const auto& a = std::get<CommuteArgs>(args);
      out.push_back(Generator::artin(a.s));
      out.push_back(Generator::artin(a.k));
      break;
    }
    case RuleId::R3: {
      const auto& a = std::get<LadderArgs<Part>>(args);
      out.push_back(Generator::artin(1));
      for (int k = 1; k < n; ++k) {
        const auto v = letters(a.v[k - 1]);
        out.insert(out.end(), v.begin(), v.end());
        push_run(out, k + 1, 1);
      }
      break;
    }
    case RuleId::R4:
    case RuleId::R4p:
      out.push_back(Generator::artin(std::get<PushArgs>(args).l));
      out.push_back(rule == RuleId::R4 ? Generator::delta() : Generator::delta_inv());
      break;
    case RuleId::R5a:
      out.push_back(Generator::delta());
      out.push_back(Generator::delta_inv());
      break;
    case RuleId::R5b:
      out.push_back(Generator::delta_inv());
      out.push_back(Generator::delta());
      break;
  }
}

template <class Part, class Letters>
void append_rhs(RuleId rule, const RuleArgs<Part>& args, int n,
                Letters&& letters, std::vector<Generator>& out) {
  switch (rule) {
    case RuleId::R1: {
      const auto& a = std::get<BraidArgs<Part>>(args);
      out.push_back(Generator::artin(a.i));
      out.push_back(Generator::artin(a.i + 1));
      out.push_back(Generator::artin(a.i));
      const auto v = letters(a.v);
      out.insert(out.end(), v.begin(), v.end());
      push_run(out, a.i, a.j);
      push_shifted(out, letters(a.w), 1);
      break;
    }
    case RuleId::R2: {
      const auto& a = std::get<CommuteArgs>(args);
      out.push_back(Generator::artin(a.k));
      out.push_back(Generator::artin(a.s));
      break;
    }
    case RuleId::R3: {
      const auto& a = std::get<LadderArgs<Part>>(args);
      out.push_back(Generator::delta());
      for (int k = 1; k < n; ++k) push_shifted(out, letters(a.v[k - 1]), n - k);
      break;
    }
    case RuleId::R4:
    case RuleId::R4p:
      out.push_back(rule == RuleId::R4 ? Generator::delta() : Generator::delta_inv());
      out.push_back(Generator::artin(n - std::get<PushArgs>(args).l + 1));
      break;
    case RuleId::R5a:
    case RuleId::R5b:
      break;
  }
}

// Appends every match whose left-hand side starts at position p of w, in
// the order R5a, R5b, R4, R4p, R2, R1 (ascending j), R3.
void scan_at(std::span<const Generator> w, int n, std::size_t p,
             std::vector<RuleMatch>& out);

}  // namespace braidgs::detail

#endif  // BRAIDGS_SRC_RULES_INTERNAL_HPP_
