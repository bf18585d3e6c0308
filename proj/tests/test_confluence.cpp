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


#include <algorithm>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include <gtest/gtest.h>

#include "braidgs/confluence.hpp"
#include "braidgs/errors.hpp"
#include "braidgs/families.hpp"
#include "braidgs/normal_form.hpp"
#include "braidgs/rules.hpp"
#include "test_util.hpp"

namespace braidgs {
namespace {

using testing::w;

std::multiset<RuleId> rules_of(const std::vector<RuleInstance>& insts) {
  std::multiset<RuleId> out;
  for (const auto& i : insts) out.insert(i.rule);
  return out;
}

TEST(EnumerateTest, Examples) {
  const auto l2 = enumerate_instances(2, 2);
  EXPECT_EQ(l2.size(), 6u);
  EXPECT_EQ(rules_of(l2).count(RuleId::R2), 0u);
  EXPECT_EQ(rules_of(l2).count(RuleId::R4), 2u);
  EXPECT_EQ(rules_of(l2).count(RuleId::R4p), 2u);

  const auto l3 = rules_of(enumerate_instances(2, 3));
  EXPECT_EQ(l3.count(RuleId::R1), 1u);  // only j = 2 fits
  EXPECT_EQ(l3.count(RuleId::R3), 1u);

  EXPECT_TRUE(enumerate_instances(2, 0).empty());
  EXPECT_THROW(enumerate_instances(3, 8, 10), ResourceError);
}

TEST(EnumerateTest, InstancesAreDistinctValidAndBounded) {
  for (int n = 1; n <= 4; ++n) {
    const auto insts = enumerate_instances(n, 6);
    std::set<std::string> seen;
    for (const auto& inst : insts) {
      EXPECT_NO_THROW(validate(inst));
      EXPECT_LE(instantiate_lhs(inst).size(), 6u);
      EXPECT_TRUE(seen.insert(describe(inst)).second) << describe(inst);
    }
  }
}

TEST(EnumerateTest, DominanceAtSmallBounds) {
  for (int n = 1; n <= 4; ++n) {
    InstanceBounds bounds;
    bounds.max_part_len = 2;
    for_each_instance(n, bounds, [](const RuleInstance& inst) {
      ASSERT_TRUE(cmp_deglex(instantiate_lhs(inst), instantiate_rhs(inst)) > 0) << describe(inst);
    });
  }
}

TEST(AmbiguityTest, Examples) {
  const std::vector<RuleInstance> pair{{RuleId::R4, 2, PushArgs{1}}, {RuleId::R5a, 2, CancelArgs{}}};
  const auto amb = find_ambiguities(pair);
  ASSERT_EQ(amb.size(), 1u);
  EXPECT_EQ(amb[0].w, w(2, "a1 D D^-1"));
  EXPECT_EQ(amb[0].kind, AmbiguityKind::overlap);

  const std::vector<RuleInstance> braid{{RuleId::R1, 2, BraidArgs<Word>{1, 2, Word(2), Word(2)}}};
  bool found = false;
  for (const auto& a : find_ambiguities(braid)) found = found || a.w == w(2, "a2 a1 a2 a1 a2");
  EXPECT_TRUE(found);

  const std::vector<RuleInstance> apart{{RuleId::R5a, 2, CancelArgs{}},
                                        {RuleId::R4, 2, PushArgs{2}}};
  for (const auto& a : find_ambiguities(apart)) {
    EXPECT_NE(a.left.rule == RuleId::R5a && a.right.rule == RuleId::R4, true);
  }
}

TEST(AmbiguityTest, IndependentOfInstanceOrder) {
  auto insts = enumerate_instances(3, 4);
  auto key = [](const std::vector<Ambiguity>& as) {
    std::set<std::tuple<std::string, std::string, std::string>> out;
    for (const auto& a : as) {
      out.insert({to_string(a.w), describe(a.w, a.left), describe(a.w, a.right)});
    }
    return out;
  };
  const auto forward = key(find_ambiguities(insts));
  std::reverse(insts.begin(), insts.end());
  EXPECT_EQ(key(find_ambiguities(insts)), forward);
  EXPECT_FALSE(forward.empty());
}

TEST(AmbiguityTest, MatchesLocateTheirInstances) {
  const auto amb = find_ambiguities(enumerate_instances(3, 5));
  for (const auto& a : amb) {
    EXPECT_EQ(a.left.start, 0u);
    if (a.kind == AmbiguityKind::overlap) {
      EXPECT_EQ(a.right.end, a.w.size());
      EXPECT_GT(a.left.end, a.right.start);
      EXPECT_LT(a.left.end, a.w.size());
    } else {
      EXPECT_EQ(a.left.end, a.w.size());
    }
    EXPECT_NO_THROW(apply_match(a.w, a.left));
    EXPECT_NO_THROW(apply_match(a.w, a.right));
  }
}

TEST(CompositionTest, Examples) {
  const auto rep = check_compositions(2, 3);
  bool found = false;
  for (const auto& r : rep.records) {
    if (r.ambiguity.w == w(2, "a1 D D^-1") && r.ambiguity.left.rule == RuleId::R4) {
      found = true;
      EXPECT_EQ(r.left_reduct, w(2, "D a2 D^-1"));
      EXPECT_EQ(r.right_reduct, w(2, "a1"));
      EXPECT_EQ(r.left_nf, w(2, "a1"));
      EXPECT_TRUE(r.joinable);
    }
    if (r.ambiguity.w == w(2, "D D^-1 D")) {
      EXPECT_EQ(r.left_reduct, w(2, "D"));
      EXPECT_EQ(r.right_reduct, w(2, "D"));
    }
  }
  EXPECT_TRUE(found);
}

TEST(CompositionTest, ZeroFailuresAtSmallScale) {
  for (int n = 1; n <= 3; ++n) {
    for (std::size_t len : {2u, 4u, 6u}) {
      const auto rep = check_compositions(n, len);
      EXPECT_TRUE(rep.passed()) << "n=" << n << " L=" << len;
      EXPECT_EQ(rep.total, rep.records.size());
      EXPECT_EQ(rep.joinable, rep.total);
    }
  }
  const auto rep = check_compositions(2, 8);
  EXPECT_TRUE(rep.passed());
  EXPECT_GT(rep.total, 0u);
}

TEST(LemmaTest, AllIdentitiesHold) {
  EXPECT_GE(lemmas().size(), 10u);
  for (int n = 2; n <= 6; ++n) {
    const auto rep = lemma_suite(n, 50, 7);
    EXPECT_TRUE(rep.passed()) << "n=" << n;
    for (const auto& l : rep.lemmas) EXPECT_EQ(l.trials, 50u) << l.name;
  }
}

TEST(LemmaTest, MinimalInstantiation) {
  std::mt19937_64 rng(1);
  for (const auto& lemma : lemmas()) {
    const int i = std::max(lemma.min_i, 2);
    const auto [lhs, rhs] = lemma.build(3, i, 0, rng);
    EXPECT_EQ(normal_form(lhs), normal_form(rhs)) << lemma.name;
  }
}

TEST(LemmaTest, StaircaseRankTwo) {
  EXPECT_EQ(normal_form(w(2, "a2 a1 a2")), (NormalForm{1, Word(2)}));
  EXPECT_EQ(normal_form(w(2, "a2 a1 a2")), normal_form(w(2, "a1 a2 a1")));
}

}  // namespace
}  // namespace braidgs
