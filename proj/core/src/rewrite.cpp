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

#include "braidgs/rewrite.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <string>
#include <utility>

#include "braidgs/errors.hpp"
#include "rules_internal.hpp"

namespace braidgs {

namespace detail {

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

void scan_braid(std::span<const Generator> w, std::size_t p, int i,
                std::vector<RuleMatch>& out) {
  const std::size_t len = w.size();
  std::size_t q = p + 2;
  std::size_t first_ai = kNone;
  int min_w = i;
  for (; q < len && w[q].is_artin() && w[q].index() <= i; ++q) {
    const int idx = w[q].index();
    if (idx == i && first_ai == kNone) first_ai = q;
    if (first_ai != kNone) min_w = std::min(min_w, idx);
  }
  if (q >= len || w[q] != Generator::artin(i + 1)) return;
  const std::size_t closing = q;
  const Span v{p + 2, first_ai == kNone ? closing : first_ai};
  const Span ws{v.end, closing};

  // Smallest j such that a_i ... a_j follows the closing a_{i+1}.
  int deepest = i + 1;
  for (int j = i; j >= 1; --j) {
    const std::size_t r = closing + 1 + static_cast<std::size_t>(i - j);
    if (r >= len || w[r] != Generator::artin(j)) break;
    deepest = j;
  }
  for (int j = deepest; j <= i; ++j) {
    if (ws.size() != 0 && min_w < j) continue;
    out.push_back({RuleId::R1, p, closing + 1 + static_cast<std::size_t>(i + 1 - j),
                   BraidArgs<Span>{i, j, v, ws}});
  }
  if (ws.size() == 0) {
    out.push_back({RuleId::R1, p, closing + 1, BraidArgs<Span>{i, i + 1, v, ws}});
  }
}

void scan_ladder(std::span<const Generator> w, int n, std::size_t p,
                 std::vector<RuleMatch>& out) {
  const std::size_t len = w.size();
  std::array<Span, kMaxRank> spans;
  std::size_t pos = p + 1;
  for (int k = 1; k < n; ++k) {
    const std::size_t vstart = pos;
    while (pos < len && w[pos].is_artin() && w[pos].index() <= k) ++pos;
    spans[static_cast<std::size_t>(k - 1)] = {vstart, pos};
    for (int t = 0; t <= k; ++t) {
      if (pos + static_cast<std::size_t>(t) >= len ||
          w[pos + static_cast<std::size_t>(t)] != Generator::artin(k + 1 - t)) {
        return;
      }
    }
    pos += static_cast<std::size_t>(k + 1);
  }
  LadderArgs<Span> args;
  args.v.assign(spans.begin(), spans.begin() + (n - 1));
  out.push_back({RuleId::R3, p, pos, std::move(args)});
}

}  // namespace

void scan_at(std::span<const Generator> w, int n, std::size_t p,
             std::vector<RuleMatch>& out) {
  const Generator x = w[p];
  if (p + 1 < w.size()) {
    const Generator y = w[p + 1];
    if (x.is_delta() && y.is_delta_inv()) {
      out.push_back({RuleId::R5a, p, p + 2, CancelArgs{}});
    } else if (x.is_delta_inv() && y.is_delta()) {
      out.push_back({RuleId::R5b, p, p + 2, CancelArgs{}});
    } else if (x.is_artin() && y.is_delta()) {
      out.push_back({RuleId::R4, p, p + 2, PushArgs{x.index()}});
    } else if (x.is_artin() && y.is_delta_inv()) {
      out.push_back({RuleId::R4p, p, p + 2, PushArgs{x.index()}});
    } else if (x.is_artin() && y.is_artin()) {
      if (x.index() - y.index() >= 2) {
        out.push_back({RuleId::R2, p, p + 2, CommuteArgs{x.index(), y.index()}});
      } else if (x.index() == y.index() + 1) {
        scan_braid(w, p, y.index(), out);
      }
    }
  }
  if (x == Generator::artin(1)) scan_ladder(w, n, p, out);
}

}  // namespace detail

namespace {

std::vector<RuleMatch> all_matches(std::span<const Generator> w, int n) {
  std::vector<RuleMatch> out;
  for (std::size_t p = 0; p < w.size(); ++p) detail::scan_at(w, n, p, out);
  return out;
}

// First match in find_matches order, written to `out`; false if none.
bool first_match(std::span<const Generator> w, int n,
                 std::vector<RuleMatch>& scratch, RuleMatch& out) {
  for (std::size_t p = 0; p < w.size(); ++p) {
    scratch.clear();
    detail::scan_at(w, n, p, scratch);
    if (!scratch.empty()) {
      out = std::move(scratch.front());
      return true;
    }
  }
  return false;
}

void rewrite_into(std::span<const Generator> w, int n, const RuleMatch& m,
                  std::vector<Generator>& out) {
  out.clear();
  out.insert(out.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(m.start));
  auto letters = [w](const Span& s) { return w.subspan(s.begin, s.size()); };
  detail::append_rhs(m.rule, m.args, n, letters, out);
  out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(m.end), w.end());
}

}  // namespace

std::vector<RuleMatch> find_matches(const Word& w) {
  return all_matches(w.letters(), w.rank());
}

bool is_irreducible(const Word& w) {
  std::vector<RuleMatch> scratch;
  RuleMatch m;
  return !first_match(w.letters(), w.rank(), scratch, m);
}

Word apply_match(const Word& w, const RuleMatch& m) {
  std::vector<RuleMatch> here;
  if (m.start < w.size()) detail::scan_at(w.letters(), w.rank(), m.start, here);
  if (std::find(here.begin(), here.end(), m) == here.end()) {
    throw IntegrityError("stale match " + std::string(rule_name(m.rule)) + " at [" +
                         std::to_string(m.start) + "," + std::to_string(m.end) +
                         ") in " + to_string(w));
  }
  std::vector<Generator> out;
  rewrite_into(w.letters(), w.rank(), m, out);
  return Word(w.rank(), std::move(out));
}

NormalizeResult normalize(const Word& w, const Policy& policy,
                          const NormalizeOptions& options) {
  const int n = w.rank();
  std::vector<Generator> current(w.begin(), w.end());
  std::vector<Generator> next;
  std::vector<RuleMatch> matches;
  std::mt19937_64 rng(policy.seed());
  RewriteTrace trace;
  std::uint64_t steps = 0;

  RuleMatch chosen;
  for (;;) {
    if (policy.kind() == Policy::Kind::deterministic) {
      if (!first_match(current, n, matches, chosen)) break;
    } else {
      matches.clear();
      for (std::size_t p = 0; p < current.size(); ++p) {
        detail::scan_at(current, n, p, matches);
      }
      if (matches.empty()) break;
      std::uniform_int_distribution<std::size_t> pick(0, matches.size() - 1);
      chosen = std::move(matches[pick(rng)]);
    }
    if (steps >= options.step_guard) {
      throw InternalError("rewrite step guard of " +
                          std::to_string(options.step_guard) +
                          " exceeded while normalizing " + to_string(w));
    }
    rewrite_into(current, n, chosen, next);
    if (options.record_trace) {
      trace.steps.push_back({Word(n, current), chosen, Word(n, next)});
    }
    std::swap(current, next);
    ++steps;
  }
  return {Word(n, std::move(current)), std::move(trace), steps};
}

}  // namespace braidgs
