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


#include <random>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "braidgs/confluence.hpp"
#include "braidgs/errors.hpp"
#include "braidgs/families.hpp"
#include "braidgs/oracles.hpp"
#include "braidgs/rewrite.hpp"
#include "braidgs/rules.hpp"
#include "test_util.hpp"

namespace braidgs {
namespace {

using testing::sw;
using testing::w;

RuleInstance braid(int n, int i, int j, const Word& v, const Word& wpart) {
  return {RuleId::R1, n, BraidArgs<Word>{i, j, v, wpart}};
}

TEST(InstantiateTest, Examples) {
  const auto r1 = braid(2, 1, 2, Word(2), Word(2));
  EXPECT_EQ(instantiate_lhs(r1), w(2, "a2 a1 a2"));
  EXPECT_EQ(instantiate_rhs(r1), w(2, "a1 a2 a1"));

  const RuleInstance r4{RuleId::R4, 2, PushArgs{1}};
  EXPECT_EQ(instantiate_lhs(r4), w(2, "a1 D"));
  EXPECT_EQ(instantiate_rhs(r4), w(2, "D a2"));

  const RuleInstance r3{RuleId::R3, 2, LadderArgs<Word>{{Word(2)}}};
  EXPECT_EQ(instantiate_lhs(r3), w(2, "a1 a2 a1"));
  EXPECT_EQ(instantiate_rhs(r3), w(2, "D"));

  const RuleInstance r4p{RuleId::R4p, 3, PushArgs{1}};
  EXPECT_EQ(instantiate_lhs(r4p), w(3, "a1 D^-1"));
  EXPECT_EQ(instantiate_rhs(r4p), w(3, "D^-1 a3"));

  const RuleInstance r2{RuleId::R2, 3, CommuteArgs{3, 1}};
  EXPECT_EQ(instantiate_lhs(r2), w(3, "a3 a1"));
  EXPECT_EQ(instantiate_rhs(r2), w(3, "a1 a3"));

  EXPECT_EQ(instantiate_lhs({RuleId::R5a, 2, CancelArgs{}}), w(2, "D D^-1"));
  EXPECT_EQ(instantiate_rhs({RuleId::R5b, 2, CancelArgs{}}), Word(2));
}

TEST(InstantiateTest, BraidWithFreeWords) {
  // i=2, j=1, V=a1, W=a2 a1: a3 a2 . a1 . a2 a1 . a2 a1 -> a2 a3 a2 . a1 . a2 a1 . a3 a2
  const auto r = braid(3, 2, 1, w(3, "a1"), w(3, "a2 a1"));
  EXPECT_EQ(instantiate_lhs(r), w(3, "a3 a2 a1 a2 a1 a3 a2 a1"));
  EXPECT_EQ(instantiate_rhs(r), w(3, "a2 a3 a2 a1 a2 a1 a3 a2"));
}

TEST(InstantiateTest, RejectsInvalidParameters) {
  EXPECT_THROW(validate(braid(2, 2, 1, Word(2), Word(2))), RangeError);
  EXPECT_THROW(validate(braid(3, 1, 3, Word(3), Word(3))), RangeError);
  EXPECT_THROW(validate(braid(3, 2, 1, w(3, "a2"), Word(3))), DomainError);
  EXPECT_THROW(validate(braid(3, 2, 1, Word(3), w(3, "a1"))), DomainError);
  EXPECT_THROW(validate({RuleId::R2, 3, CommuteArgs{2, 1}}), RangeError);
  EXPECT_THROW(validate({RuleId::R4, 2, PushArgs{3}}), RangeError);
  EXPECT_THROW(validate({RuleId::R3, 2, LadderArgs<Word>{{w(2, "a2")}}}), DomainError);
  EXPECT_THROW(validate({RuleId::R3, 3, LadderArgs<Word>{{Word(3)}}}), RangeError);
  EXPECT_THROW(validate({RuleId::R4, 2, CommuteArgs{}}), DomainError);
}

TEST(InstantiateTest, SampledInstancesAreSoundAndDecreasing) {
  std::mt19937_64 rng(3);
  for (int n = 1; n <= 5; ++n) {
    for (RuleId rule : kAllRules) {
      for (int t = 0; t < 100; ++t) {
        const auto inst = sample_instance(rule, n, 4, rng);
        if (!inst) break;
        const Word lhs = instantiate_lhs(*inst);
        const Word rhs = instantiate_rhs(*inst);
        ASSERT_TRUE(cmp_deglex(lhs, rhs) > 0) << describe(*inst);
        ASSERT_EQ(artin_automorphism(lhs), artin_automorphism(rhs)) << describe(*inst);
      }
    }
  }
}

TEST(InstantiateTest, DescribeRoundTripsThroughMatches) {
  std::mt19937_64 rng(8);
  for (RuleId rule : kAllRules) {
    for (int t = 0; t < 50; ++t) {
      const auto inst = sample_instance(rule, 4, 3, rng);
      ASSERT_TRUE(inst);
      const Word pad = w(4, "a4 a4");
      const Word host = pad + instantiate_lhs(*inst);
      const RuleMatch m = match_at(*inst, pad.size());
      EXPECT_EQ(instance_of(host, m), *inst);
      EXPECT_EQ(describe(host, m).substr(0, rule_name(rule).size()), rule_name(rule));
    }
  }
}

TEST(FindMatchesTest, Examples) {
  const auto m1 = find_matches(w(2, "D D^-1"));
  ASSERT_EQ(m1.size(), 1u);
  EXPECT_EQ(m1[0].rule, RuleId::R5a);
  EXPECT_EQ(m1[0].start, 0u);
  EXPECT_EQ(m1[0].end, 2u);

  const auto m2 = find_matches(w(2, "a1 a2 a1"));
  ASSERT_EQ(m2.size(), 1u);
  EXPECT_EQ(m2[0].rule, RuleId::R3);
  EXPECT_EQ(m2[0].end, 3u);

  EXPECT_TRUE(find_matches(w(2, "a2 a1")).empty());
  EXPECT_TRUE(find_matches(Word(2)).empty());
}

TEST(FindMatchesTest, OrderedByStartThenRule) {
  const Word host = w(3, "a3 a1 D D^-1 a2 a1 a2");
  const auto ms = find_matches(host);
  ASSERT_FALSE(ms.empty());
  for (std::size_t k = 1; k < ms.size(); ++k) {
    EXPECT_LE(ms[k - 1].start, ms[k].start);
    if (ms[k - 1].start == ms[k].start) {
      EXPECT_LE(static_cast<int>(ms[k - 1].rule), static_cast<int>(ms[k].rule));
    }
  }
  EXPECT_EQ(ms.front().rule, RuleId::R2);
}

TEST(FindMatchesTest, FindsEveryEmbeddedInstance) {
  std::mt19937_64 rng(21);
  for (RuleId rule : kAllRules) {
    for (int t = 0; t < 100; ++t) {
      const auto inst = sample_instance(rule, 4, 3, rng);
      ASSERT_TRUE(inst);
      const Word pre = w(4, "D a1");
      const Word host = pre + instantiate_lhs(*inst) + w(4, "D^-1");
      const RuleMatch expected = match_at(*inst, pre.size());
      bool found = false;
      for (const auto& m : find_matches(host)) found = found || m == expected;
      EXPECT_TRUE(found) << describe(*inst);
    }
  }
}

TEST(IrreducibleTest, Examples) {
  EXPECT_TRUE(is_irreducible(w(2, "a2 a1")));
  EXPECT_FALSE(is_irreducible(w(2, "a1 D")));
  EXPECT_TRUE(is_irreducible(w(2, "D a2")));
  EXPECT_TRUE(is_irreducible(Word(2)));
}

TEST(ApplyMatchTest, Examples) {
  const Word a = w(2, "a1 D a1");
  const auto ma = find_matches(a);
  ASSERT_FALSE(ma.empty());
  EXPECT_EQ(ma[0].rule, RuleId::R4);
  EXPECT_EQ(apply_match(a, ma[0]), w(2, "D a2 a1"));

  const Word b = w(3, "a3 a1");
  EXPECT_EQ(apply_match(b, find_matches(b).at(0)), w(3, "a1 a3"));

  const Word c = w(2, "a2 a1 a2");
  const RuleMatch m = match_at(braid(2, 1, 2, Word(2), Word(2)), 0);
  EXPECT_EQ(apply_match(c, m), w(2, "a1 a2 a1"));
}

TEST(ApplyMatchTest, RejectsStaleMatch) {
  const RuleMatch m = find_matches(w(2, "a1 D")).at(0);
  EXPECT_THROW(apply_match(w(2, "a2 D"), m), IntegrityError);
  EXPECT_THROW(apply_match(w(2, "a1"), m), IntegrityError);
}

TEST(NormalizeTest, Examples) {
  EXPECT_EQ(normalize(w(2, "a2 a1 a2")).word, w(2, "D"));
  EXPECT_EQ(normalize(w(2, "a1 a2 a1")).word, w(2, "D"));
  EXPECT_EQ(normalize(Word(2)).word, Word(2));
  EXPECT_EQ(normalize(Word(2)).steps, 0u);
}

TEST(NormalizeTest, TraceIsAChain) {
  NormalizeOptions opts;
  opts.record_trace = true;
  const Word start = w(3, "a3 a2 a3 a1 a2 a1 D^-1 a2");
  const auto res = normalize(start, Policy::deterministic(), opts);
  ASSERT_EQ(res.trace.steps.size(), res.steps);
  Word cur = start;
  for (const auto& s : res.trace.steps) {
    EXPECT_EQ(s.before, cur);
    EXPECT_EQ(apply_match(s.before, s.match), s.after);
    EXPECT_TRUE(cmp_deglex(s.after, s.before) < 0);
    cur = s.after;
  }
  EXPECT_EQ(cur, res.word);
  EXPECT_TRUE(is_irreducible(res.word));
}

TEST(NormalizeTest, StepGuard) {
  NormalizeOptions opts;
  opts.step_guard = 1;
  EXPECT_THROW(normalize(w(2, "a2 a1 a2"), Policy::deterministic(), opts), InternalError);
}

}  // namespace
}  // namespace braidgs
