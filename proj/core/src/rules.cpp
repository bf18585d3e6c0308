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

#include "braidgs/rules.hpp"

#include <ostream>
#include <sstream>
#include <utility>

#include "braidgs/errors.hpp"
#include "rules_internal.hpp"

namespace braidgs {

std::string_view rule_name(RuleId rule) {
  switch (rule) {
    case RuleId::R1: return "R1";
    case RuleId::R2: return "R2";
    case RuleId::R3: return "R3";
    case RuleId::R4: return "R4";
    case RuleId::R4p: return "R4p";
    case RuleId::R5a: return "R5a";
    case RuleId::R5b: return "R5b";
  }
  return "R?";
}

namespace {

template <class Args>
const Args& args_as(const RuleInstance& inst) {
  const Args* args = std::get_if<Args>(&inst.args);
  if (args == nullptr) {
    throw DomainError("parameters do not fit rule " +
                      std::string(rule_name(inst.rule)));
  }
  return *args;
}

void check_part(const Word& part, int rank, int lo, int hi, const char* what) {
  if (part.rank() != rank) throw RankMismatch(std::string(what) + ": rank mismatch");
  for (Generator g : part) {
    if (!g.is_artin() || g.index() < lo || g.index() > hi) {
      throw DomainError(std::string(what) + ": letter " + to_string(g) +
                        " not in a" + std::to_string(lo) + "..a" +
                        std::to_string(hi));
    }
  }
}

void check_param(bool ok, const std::string& message) {
  if (!ok) throw RangeError(message);
}

std::span<const Generator> letters_of(const Word& w) { return w.letters(); }

}  // namespace

void validate(const RuleInstance& inst) {
  const int n = inst.rank;
  check_rank(n);
  switch (inst.rule) {
    case RuleId::R1: {
      const auto& a = args_as<BraidArgs<Word>>(inst);
      check_param(a.i >= 1 && a.i <= n - 1, "R1: i out of range");
      check_param(a.j >= 1 && a.j <= a.i + 1, "R1: j out of range");
      check_part(a.v, n, 1, a.i - 1, "R1 V");
      check_part(a.w, n, a.j, a.i, "R1 W");
      if (!a.w.empty() && a.w[0] != Generator::artin(a.i)) {
        throw DomainError("R1 W: must begin with a" + std::to_string(a.i));
      }
      break;
    }
    case RuleId::R2: {
      const auto& a = args_as<CommuteArgs>(inst);
      check_param(a.k >= 1 && a.s <= n && a.s - a.k >= 2, "R2: need s - k >= 2");
      break;
    }
    case RuleId::R3: {
      const auto& a = args_as<LadderArgs<Word>>(inst);
      check_param(a.v.size() == static_cast<std::size_t>(n - 1),
                  "R3: need exactly n-1 words V_k");
      for (int k = 1; k < n; ++k) check_part(a.v[k - 1], n, 1, k, "R3 V_k");
      break;
    }
    case RuleId::R4:
    case RuleId::R4p: {
      const auto& a = args_as<PushArgs>(inst);
      check_param(a.l >= 1 && a.l <= n, "R4: l out of range");
      break;
    }
    case RuleId::R5a:
    case RuleId::R5b:
      args_as<CancelArgs>(inst);
      break;
  }
}

Word instantiate_lhs(const RuleInstance& inst) {
  validate(inst);
  std::vector<Generator> out;
  detail::append_lhs(inst.rule, inst.args, inst.rank, letters_of, out);
  return Word(inst.rank, std::move(out));
}

Word instantiate_rhs(const RuleInstance& inst) {
  validate(inst);
  std::vector<Generator> out;
  detail::append_rhs(inst.rule, inst.args, inst.rank, letters_of, out);
  return Word(inst.rank, std::move(out));
}

RuleInstance instance_of(const Word& host, const RuleMatch& m) {
  auto sub = [&](const Span& s) { return host.subword(s.begin, s.size()); };
  RuleInstance inst{m.rule, host.rank(), CancelArgs{}};
  std::visit(
      [&](const auto& args) {
        using T = std::decay_t<decltype(args)>;
        if constexpr (std::is_same_v<T, BraidArgs<Span>>) {
          inst.args = BraidArgs<Word>{args.i, args.j, sub(args.v), sub(args.w)};
        } else if constexpr (std::is_same_v<T, LadderArgs<Span>>) {
          LadderArgs<Word> out;
          for (const Span& s : args.v) out.v.push_back(sub(s));
          inst.args = std::move(out);
        } else {
          inst.args = args;
        }
      },
      m.args);
  return inst;
}

RuleMatch match_at(const RuleInstance& inst, std::size_t at) {
  validate(inst);
  RuleMatch m{inst.rule, at, at, CancelArgs{}};
  std::visit(
      [&](const auto& args) {
        using T = std::decay_t<decltype(args)>;
        if constexpr (std::is_same_v<T, BraidArgs<Word>>) {
          std::size_t p = at + 2;
          const Span v{p, p + args.v.size()};
          p = v.end;
          const Span w{p, p + args.w.size()};
          p = w.end + static_cast<std::size_t>(args.i + 2 - args.j);
          m.args = BraidArgs<Span>{args.i, args.j, v, w};
          m.end = p;
        } else if constexpr (std::is_same_v<T, LadderArgs<Word>>) {
          LadderArgs<Span> out;
          std::size_t p = at + 1;
          for (std::size_t k = 1; k <= args.v.size(); ++k) {
            out.v.push_back({p, p + args.v[k - 1].size()});
            p = out.v.back().end + k + 1;
          }
          m.args = std::move(out);
          m.end = p;
        } else {
          m.args = args;
          m.end = at + 2;
        }
      },
      inst.args);
  return m;
}

namespace {

std::string describe_args(const RuleArgs<Word>& args) {
  std::ostringstream os;
  std::visit(
      [&](const auto& a) {
        using T = std::decay_t<decltype(a)>;
        if constexpr (std::is_same_v<T, BraidArgs<Word>>) {
          os << " i=" << a.i << " j=" << a.j << " V=(" << to_string(a.v)
             << ") W=(" << to_string(a.w) << ")";
        } else if constexpr (std::is_same_v<T, CommuteArgs>) {
          os << " s=" << a.s << " k=" << a.k;
        } else if constexpr (std::is_same_v<T, LadderArgs<Word>>) {
          for (std::size_t k = 0; k < a.v.size(); ++k) {
            os << " V" << k + 1 << "=(" << to_string(a.v[k]) << ")";
          }
        } else if constexpr (std::is_same_v<T, PushArgs>) {
          os << " l=" << a.l;
        }
      },
      args);
  return os.str();
}

}  // namespace

std::string describe(const Word& host, const RuleMatch& m) {
  std::ostringstream os;
  os << rule_name(m.rule) << " [" << m.start << "," << m.end << ")"
     << describe_args(instance_of(host, m).args);
  return os.str();
}

std::string describe(const RuleInstance& inst) {
  return std::string(rule_name(inst.rule)) + describe_args(inst.args);
}

std::ostream& operator<<(std::ostream& os, const RuleMatch& m) {
  return os << rule_name(m.rule) << "[" << m.start << "," << m.end << ")";
}

}  // namespace braidgs
