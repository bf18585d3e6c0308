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

#include "braidgs/confluence.hpp"

#include <algorithm>
#include <utility>

#include "braidgs/errors.hpp"
#include "braidgs/families.hpp"

namespace braidgs {

namespace {

// Calls visit(word) for every word of exactly `len` letters over a_lo..a_hi.
void for_each_word(int rank, int lo, int hi, std::size_t len,
                   const std::function<void(const Word&)>& visit) {
  if (len == 0) {
    visit(Word(rank));
    return;
  }
  if (lo > hi) return;
  std::vector<int> digits(len, lo);
  for (;;) {
    visit(Word::artin(rank, digits));
    std::size_t p = len;
    while (p > 0 && digits[p - 1] == hi) digits[--p] = lo;
    if (p == 0) return;
    ++digits[p - 1];
  }
}

std::size_t min_size(std::size_t a, std::size_t b) { return a < b ? a : b; }

void for_each_braid(int n, const InstanceBounds& b,
                    const std::function<void(const RuleInstance&)>& visit) {
  for (int i = 1; i <= n - 1; ++i) {
    for (int j = 1; j <= i + 1; ++j) {
      const std::size_t base = static_cast<std::size_t>(i - j + 4);
      if (base > b.max_lhs_len) continue;
      const std::size_t free = b.max_lhs_len - base;
      const std::size_t max_v = i >= 2 ? min_size(free, b.max_part_len) : 0;
      for (std::size_t lv = 0; lv <= max_v; ++lv) {
        const std::size_t max_w = j <= i ? min_size(free - lv, b.max_part_len) : 0;
        for (std::size_t lw = 0; lw <= max_w; ++lw) {
          for_each_word(n, 1, i - 1, lv, [&](const Word& v) {
            if (lw == 0) {
              visit({RuleId::R1, n, BraidArgs<Word>{i, j, v, Word(n)}});
              return;
            }
            const Word head = Word::artin(n, {i});
            for_each_word(n, j, i, lw - 1, [&](const Word& tail) {
              visit({RuleId::R1, n, BraidArgs<Word>{i, j, v, head + tail}});
            });
          });
        }
      }
    }
  }
}

void for_each_ladder(int n, const InstanceBounds& b,
                     const std::function<void(const RuleInstance&)>& visit) {
  const std::size_t base = static_cast<std::size_t>(n * (n + 1) / 2);
  if (base > b.max_lhs_len) return;
  std::vector<Word> parts;
  // Fills V_k for k = parts.size() + 1 .. n - 1 with `free` letters to spare.
  std::function<void(std::size_t)> fill = [&](std::size_t free) {
    const int k = static_cast<int>(parts.size()) + 1;
    if (k == n) {
      visit({RuleId::R3, n, LadderArgs<Word>{parts}});
      return;
    }
    const std::size_t max_len = min_size(free, b.max_part_len);
    for (std::size_t len = 0; len <= max_len; ++len) {
      for_each_word(n, 1, k, len, [&](const Word& v) {
        parts.push_back(v);
        fill(free - len);
        parts.pop_back();
      });
    }
  };
  fill(b.max_lhs_len - base);
}

Word random_word(int rank, int lo, int hi, std::size_t max_len,
                 std::mt19937_64& rng) {
  if (lo > hi) return Word(rank);
  std::uniform_int_distribution<std::size_t> length(0, max_len);
  std::uniform_int_distribution<int> letter(lo, hi);
  std::vector<int> out(length(rng));
  for (int& x : out) x = letter(rng);
  return Word::artin(rank, out);
}

int uniform(int lo, int hi, std::mt19937_64& rng) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

}  // namespace

void for_each_instance(int rank, const InstanceBounds& bounds,
                       const std::function<void(const RuleInstance&)>& visit) {
  check_rank(rank);
  const int n = rank;
  for_each_braid(n, bounds, visit);
  if (bounds.max_lhs_len >= 2) {
    for (int k = 1; k <= n; ++k) {
      for (int s = k + 2; s <= n; ++s) visit({RuleId::R2, n, CommuteArgs{s, k}});
    }
  }
  for_each_ladder(n, bounds, visit);
  if (bounds.max_lhs_len >= 2) {
    for (RuleId r : {RuleId::R4, RuleId::R4p}) {
      for (int l = 1; l <= n; ++l) visit({r, n, PushArgs{l}});
    }
    visit({RuleId::R5a, n, CancelArgs{}});
    visit({RuleId::R5b, n, CancelArgs{}});
  }
}

std::vector<RuleInstance> enumerate_instances(int rank, std::size_t max_lhs_len,
                                              std::size_t budget) {
  std::vector<RuleInstance> out;
  for_each_instance(rank, {max_lhs_len, max_lhs_len}, [&](const RuleInstance& inst) {
    if (out.size() >= budget) {
      throw ResourceError("instance budget of " + std::to_string(budget) +
                          " exhausted at rank " + std::to_string(rank) +
                          ", max lhs length " + std::to_string(max_lhs_len));
    }
    out.push_back(inst);
  });
  return out;
}

std::optional<RuleInstance> sample_instance(RuleId rule, int rank,
                                            std::size_t max_part_len,
                                            std::mt19937_64& rng) {
  check_rank(rank);
  const int n = rank;
  switch (rule) {
    case RuleId::R1: {
      if (n < 2) return std::nullopt;
      const int i = uniform(1, n - 1, rng);
      const int j = uniform(1, i + 1, rng);
      Word v = random_word(n, 1, i - 1, max_part_len, rng);
      Word w(n);
      if (j <= i) {
        const std::size_t len = std::uniform_int_distribution<std::size_t>(0, max_part_len)(rng);
        if (len > 0) {
          std::uniform_int_distribution<int> letter(j, i);
          std::vector<int> idx(len, i);
          for (std::size_t p = 1; p < len; ++p) idx[p] = letter(rng);
          w = Word::artin(n, idx);
        }
      }
      return RuleInstance{rule, n, BraidArgs<Word>{i, j, std::move(v), std::move(w)}};
    }
    case RuleId::R2: {
      if (n < 3) return std::nullopt;
      const int k = uniform(1, n - 2, rng);
      return RuleInstance{rule, n, CommuteArgs{uniform(k + 2, n, rng), k}};
    }
    case RuleId::R3: {
      LadderArgs<Word> args;
      for (int k = 1; k < n; ++k) args.v.push_back(random_word(n, 1, k, max_part_len, rng));
      return RuleInstance{rule, n, std::move(args)};
    }
    case RuleId::R4:
    case RuleId::R4p:
      return RuleInstance{rule, n, PushArgs{uniform(1, n, rng)}};
    case RuleId::R5a:
    case RuleId::R5b:
      return RuleInstance{rule, n, CancelArgs{}};
  }
  return std::nullopt;
}

std::string_view kind_name(AmbiguityKind kind) {
  return kind == AmbiguityKind::overlap ? "overlap" : "inclusion";
}

std::vector<Ambiguity> find_ambiguities(std::span<const RuleInstance> instances) {
  std::vector<Word> lhs;
  lhs.reserve(instances.size());
  for (const auto& inst : instances) lhs.push_back(instantiate_lhs(inst));

  std::vector<Ambiguity> out;
  for (std::size_t a = 0; a < instances.size(); ++a) {
    const auto f = lhs[a].letters();
    for (std::size_t b = 0; b < instances.size(); ++b) {
      const auto g = lhs[b].letters();
      for (std::size_t o = 1; o < f.size(); ++o) {
        const std::size_t shared = f.size() - o;
        if (shared >= g.size()) continue;
        if (!std::equal(f.begin() + static_cast<std::ptrdiff_t>(o), f.end(), g.begin())) {
          continue;
        }
        out.push_back({lhs[a] + lhs[b].subword(shared, g.size() - shared),
                       match_at(instances[a], 0), match_at(instances[b], o),
                       AmbiguityKind::overlap});
      }
      if (a == b || g.size() > f.size()) continue;
      for (std::size_t q = 0; q + g.size() <= f.size(); ++q) {
        if (std::equal(g.begin(), g.end(), f.begin() + static_cast<std::ptrdiff_t>(q))) {
          out.push_back({lhs[a], match_at(instances[a], 0), match_at(instances[b], q),
                         AmbiguityKind::inclusion});
        }
      }
    }
  }
  return out;
}

CompositionReport check_compositions(int rank, std::size_t max_lhs_len,
                                     const CompositionOptions& options) {
  CompositionReport report;
  report.rank = rank;
  report.max_lhs_len = max_lhs_len;
  const auto instances = enumerate_instances(rank, max_lhs_len, options.instance_budget);
  report.instances = instances.size();

  for (auto& amb : find_ambiguities(instances)) {
    Word left = apply_match(amb.w, amb.left);
    Word right = apply_match(amb.w, amb.right);
    const bool below = cmp_deglex(left, amb.w) < 0 && cmp_deglex(right, amb.w) < 0;
    Word left_nf = normalize(left, Policy::deterministic(), options.normalize).word;
    Word right_nf = normalize(right, Policy::deterministic(), options.normalize).word;
    const bool joinable = left_nf == right_nf;
    report.records.push_back({std::move(amb), std::move(left), std::move(right),
                              std::move(left_nf), std::move(right_nf), joinable, below});
  }
  std::stable_sort(report.records.begin(), report.records.end(),
                   [](const CompositionRecord& x, const CompositionRecord& y) {
                     return cmp_deglex(x.ambiguity.w, y.ambiguity.w) < 0;
                   });
  report.total = report.records.size();
  for (const auto& r : report.records) {
    if (r.joinable) {
      ++report.joinable;
    } else {
      report.failures.push_back(r);
    }
    if (!r.reducts_below) ++report.reducts_not_below;
  }
  return report;
}

// ---------------------------------------------------------------------------
// Lemma suite

namespace {

Word lam(int i, int n) { return lambda_word(i, LambdaVariant::full, n); }
Word lam_minus(int i, int n) { return lambda_word(i, LambdaVariant::minus, n); }
Word lam_minusminus(int i, int n) {
  return lambda_word(i, LambdaVariant::minusminus, n);
}
Word letter(int i, int n) { return Word::artin(n, {i}); }

// Lambda_1 V_1 Lambda_2 ... Lambda_{i-1} V_{i-1} Lambda_i and its image
// V_1^(i-1) ... V_{i-1}^(1).
std::pair<Word, Word> ladder_with_parts(int n, int i, std::size_t max_part,
                                        std::mt19937_64& rng) {
  Word body(n);
  Word shifted(n);
  for (int k = 1; k < i; ++k) {
    Word v = random_word(n, 1, k, max_part, rng);
    body = body + lam(k, n) + v;
    shifted = shifted + shift(v, i - k);
  }
  return {body + lam(i, n), shifted};
}

std::vector<Lemma> build_lemmas() {
  std::vector<Lemma> out;
  out.push_back({"ladder-slide", "Lambda_i W(2,i) = W^(-1) Lambda_i", 2,
                 [](int n, int i, std::size_t m, std::mt19937_64& rng) {
                   Word w = random_word(n, 2, i, m, rng);
                   return std::pair{lam(i, n) + w, shift(w, -1) + lam(i, n)};
                 }});
  out.push_back({"ladder-slide-minus", "Lambda-_i W(3,i) = W^(-1) Lambda-_i", 2,
                 [](int n, int i, std::size_t m, std::mt19937_64& rng) {
                   Word w = random_word(n, 3, i, m, rng);
                   return std::pair{lam_minus(i, n) + w, shift(w, -1) + lam_minus(i, n)};
                 }});
  out.push_back({"absorb-minus", "a_i Lambda_{i-1} Lambda-_i = Lambda_{i-1} Lambda_i", 2,
                 [](int n, int i, std::size_t, std::mt19937_64&) {
                   return std::pair{letter(i, n) + lam(i - 1, n) + lam_minus(i, n),
                                    lam(i - 1, n) + lam(i, n)};
                 }});
  out.push_back({"absorb-full", "a_i Lambda_{i-1} Lambda_i = Lambda_{i-1} Lambda_i a_1", 2,
                 [](int n, int i, std::size_t, std::mt19937_64&) {
                   return std::pair{letter(i, n) + lam(i - 1, n) + lam(i, n),
                                    lam(i - 1, n) + lam(i, n) + letter(1, n)};
                 }});
  out.push_back({"absorb-minusminus",
                 "a_i Lambda_{i-1} Lambda--_i = Lambda-_{i-1} Lambda_i", 2,
                 [](int n, int i, std::size_t, std::mt19937_64&) {
                   return std::pair{letter(i, n) + lam(i - 1, n) + lam_minusminus(i, n),
                                    lam_minus(i - 1, n) + lam(i, n)};
                 }});
  out.push_back({"absorb-through-V",
                 "a_i Lambda_{i-1} V_{i-1} Lambda_i = Lambda_{i-1} Lambda_i a_1 V_{i-1}'", 2,
                 [](int n, int i, std::size_t m, std::mt19937_64& rng) {
                   Word v = random_word(n, 1, i - 1, m, rng);
                   return std::pair{letter(i, n) + lam(i - 1, n) + v + lam(i, n),
                                    lam(i - 1, n) + lam(i, n) + letter(1, n) + shift(v, 1)};
                 }});
  out.push_back({"partial-ladder",
                 "a_i Lambda_1 V_1 ... Lambda_{i-1} V_{i-1} Lambda_i = "
                 "D_i a_1 V_1^(i-1) ... V_{i-1}'",
                 2,
                 [](int n, int i, std::size_t m, std::mt19937_64& rng) {
                   auto [body, shifted] = ladder_with_parts(n, i, m, rng);
                   return std::pair{letter(i, n) + body,
                                    delta_ladder(i, n) + letter(1, n) + shifted};
                 }});
  out.push_back({"partial-ladder-prefixed",
                 "a_i V(1,i-1) Lambda_1 V_1 ... Lambda_{i-1} V_{i-1} Lambda_i = "
                 "D_i a_1 flip_i(V) V_1^(i-1) ... V_{i-1}'",
                 2,
                 [](int n, int i, std::size_t m, std::mt19937_64& rng) {
                   Word v = random_word(n, 1, i - 1, m, rng);
                   auto [body, shifted] = ladder_with_parts(n, i, m, rng);
                   return std::pair{letter(i, n) + v + body,
                                    delta_ladder(i, n) + letter(1, n) + flip(v, i) + shifted};
                 }});
  out.push_back({"two-ladders",
                 "a_i V(1,i-2) Lambda_{i-1} W(2,i-1) Lambda-_i = "
                 "Lambda_{i-1} Lambda_i V^(2) W'",
                 2,
                 [](int n, int i, std::size_t m, std::mt19937_64& rng) {
                   Word v = random_word(n, 1, i - 2, m, rng);
                   Word w = random_word(n, 2, i - 1, m, rng);
                   return std::pair{letter(i, n) + v + lam(i - 1, n) + w + lam_minus(i, n),
                                    lam(i - 1, n) + lam(i, n) + shift(v, 2) + shift(w, 1)};
                 }});
  out.push_back({"shifted-ladder-flip",
                 "W'(1,i-1) Lambda-_2 ... Lambda-_i = Lambda-_2 ... Lambda-_i flip_i(W)", 2,
                 [](int n, int i, std::size_t m, std::mt19937_64& rng) {
                   Word w = random_word(n, 1, i - 1, m, rng);
                   Word ladder(n);
                   for (int k = 2; k <= i; ++k) ladder = ladder + lam_minus(k, n);
                   return std::pair{shift(w, 1) + ladder, ladder + flip(w, i)};
                 }});
  out.push_back({"lambda-flip", "flip_{i-1}(W(1,i-2)) Lambda_i = Lambda_i flip_i(W)", 2,
                 [](int n, int i, std::size_t m, std::mt19937_64& rng) {
                   Word w = random_word(n, 1, i - 2, m, rng);
                   return std::pair{flip(w, i - 1) + lam(i, n), lam(i, n) + flip(w, i)};
                 }});
  out.push_back({"staircase-delta", "a_n . a_{n-1} a_n . ... . a_1 ... a_n = D", 2,
                 [](int n, int, std::size_t, std::mt19937_64&) {
                   std::vector<int> idx;
                   for (int k = n; k >= 1; --k) {
                     for (int m = k; m <= n; ++m) idx.push_back(m);
                   }
                   return std::pair{Word::artin(n, idx), Word(n, {Generator::delta()})};
                 }});
  return out;
}

}  // namespace

const std::vector<Lemma>& lemmas() {
  static const std::vector<Lemma> all = build_lemmas();
  return all;
}

bool LemmaReport::passed() const noexcept {
  return std::all_of(lemmas.begin(), lemmas.end(),
                     [](const LemmaResult& r) { return r.counterexamples.empty(); });
}

LemmaReport lemma_suite(int rank, std::size_t trials, std::uint64_t seed,
                        std::size_t max_part_len) {
  check_rank(rank);
  LemmaReport report{rank, trials, seed, {}};
  const auto& all = lemmas();
  for (std::size_t index = 0; index < all.size(); ++index) {
    const Lemma& lemma = all[index];
    LemmaResult result{lemma.name, lemma.statement, 0, {}};
    std::seed_seq sequence{seed, static_cast<std::uint64_t>(index)};
    std::mt19937_64 rng(sequence);
    if (rank >= lemma.min_i) {
      for (std::size_t t = 0; t < trials; ++t) {
        const int i = uniform(lemma.min_i, rank, rng);
        auto [lhs, rhs] = lemma.build(rank, i, max_part_len, rng);
        NormalForm lhs_nf = normal_form(lhs);
        NormalForm rhs_nf = normal_form(rhs);
        ++result.trials;
        if (lhs_nf != rhs_nf) {
          result.counterexamples.push_back(
              {i, std::move(lhs), std::move(rhs), std::move(lhs_nf), std::move(rhs_nf)});
        }
      }
    }
    report.lemmas.push_back(std::move(result));
  }
  return report;
}

}  // namespace braidgs
