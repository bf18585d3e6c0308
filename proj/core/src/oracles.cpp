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

#include "braidgs/oracles.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <unordered_set>
#include <utility>

#include "braidgs/errors.hpp"
#include "braidgs/families.hpp"

namespace braidgs {

FreeGroupElem::FreeGroupElem(std::vector<int> letters) {
  letters_.reserve(letters.size());
  for (int x : letters) {
    if (!letters_.empty() && letters_.back() == -x) {
      letters_.pop_back();
    } else {
      letters_.push_back(x);
    }
  }
}

FreeGroupElem FreeGroupElem::inverse() const {
  FreeGroupElem out;
  out.letters_.assign(letters_.rbegin(), letters_.rend());
  for (int& x : out.letters_) x = -x;
  return out;
}

FreeGroupElem operator*(const FreeGroupElem& a, const FreeGroupElem& b) {
  std::size_t cancel = 0;
  const std::size_t limit = std::min(a.size(), b.size());
  while (cancel < limit &&
         a.letters_[a.size() - 1 - cancel] == -b.letters_[cancel]) {
    ++cancel;
  }
  FreeGroupElem out;
  out.letters_.reserve(a.size() + b.size() - 2 * cancel);
  out.letters_.assign(a.letters_.begin(),
                      a.letters_.end() - static_cast<std::ptrdiff_t>(cancel));
  out.letters_.insert(out.letters_.end(),
                      b.letters_.begin() + static_cast<std::ptrdiff_t>(cancel),
                      b.letters_.end());
  return out;
}

FreeGroupAut FreeGroupAut::identity(int rank) {
  check_rank(rank);
  FreeGroupAut out;
  for (int m = 1; m <= rank + 1; ++m) out.images_.push_back(FreeGroupElem::generator(m));
  return out;
}

void FreeGroupAut::compose_artin(int i, int sign) {
  auto& xi = images_[static_cast<std::size_t>(i - 1)];
  auto& xj = images_[static_cast<std::size_t>(i)];
  if (sign > 0) {
    FreeGroupElem next_i = xi * xj * xi.inverse();
    xj = std::move(xi);
    xi = std::move(next_i);
  } else {
    FreeGroupElem next_j = xj.inverse() * xi * xj;
    xi = std::move(xj);
    xj = std::move(next_j);
  }
}

FreeGroupAut artin_automorphism(const SignedWord& u) {
  const int n = u.rank();
  FreeGroupAut aut = FreeGroupAut::identity(n);
  Word ladder(n);
  for (const auto& l : u) {
    if (l.gen.is_artin()) {
      aut.compose_artin(l.gen.index(), l.sign);
      continue;
    }
    if (ladder.empty()) ladder = delta_ladder(n, n);
    if (l.gen.is_delta()) {
      for (Generator g : ladder) aut.compose_artin(g.index(), +1);
    } else {
      for (auto it = ladder.end(); it != ladder.begin();) {
        --it;
        aut.compose_artin(it->index(), -1);
      }
    }
  }
  return aut;
}

bool oracle_equal(const SignedWord& u, const SignedWord& v) {
  if (u.rank() != v.rank()) {
    throw RankMismatch("oracle_equal: words of rank " + std::to_string(u.rank()) +
                       " and " + std::to_string(v.rank()));
  }
  return artin_automorphism(u) == artin_automorphism(v);
}

namespace {

std::string encode(const Word& w) {
  std::string out;
  out.reserve(w.size());
  for (Generator g : w) out.push_back(static_cast<char>(g.code()));
  return out;
}

Word decode(int rank, const std::string& s) {
  std::vector<Generator> letters;
  letters.reserve(s.size());
  for (char c : s) letters.push_back(Generator::from_code(static_cast<std::uint8_t>(c)));
  return Word(rank, std::move(letters));
}

// Artin index of an encoded letter.
int idx(char c) { return static_cast<int>(static_cast<unsigned char>(c)) - 1; }

std::vector<std::string> closure(const Word& w, std::size_t cap) {
  if (!w.is_positive()) throw DomainError("positive_class: word " + to_string(w) + " is not positive");
  std::unordered_set<std::string> seen;
  std::deque<std::string> queue;
  std::string start = encode(w);
  seen.insert(start);
  queue.push_back(std::move(start));
  auto visit = [&](std::string&& s) {
    if (seen.insert(s).second) {
      if (seen.size() > cap) {
        throw ResourceError("positive class of " + to_string(w) + " exceeds cap " +
                            std::to_string(cap));
      }
      queue.push_back(std::move(s));
    }
  };
  while (!queue.empty()) {
    const std::string cur = std::move(queue.front());
    queue.pop_front();
    for (std::size_t p = 0; p + 1 < cur.size(); ++p) {
      const int x = idx(cur[p]);
      const int y = idx(cur[p + 1]);
      if (x - y >= 2 || y - x >= 2) {
        std::string next = cur;
        std::swap(next[p], next[p + 1]);
        visit(std::move(next));
      } else if ((x - y == 1 || y - x == 1) && p + 2 < cur.size() && cur[p + 2] == cur[p]) {
        std::string next = cur;
        next[p] = cur[p + 1];
        next[p + 1] = cur[p];
        next[p + 2] = cur[p + 1];
        visit(std::move(next));
      }
    }
  }
  std::vector<std::string> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());  // equal lengths: byte order is deg-lex
  return out;
}

// Positive R with R a_i = D, found in the class of the ladder.
Word right_cofactor(int i, int n) {
  const auto cls = closure(delta_ladder(n, n), kDefaultClassCap);
  const char last = static_cast<char>(Generator::artin(i).code());
  for (const auto& s : cls) {
    if (s.back() == last) return decode(n, s.substr(0, s.size() - 1));
  }
  throw InternalError("D is not right-divisible by a" + std::to_string(i));
}

}  // namespace

std::vector<Word> positive_class(const Word& w, std::size_t cap) {
  std::vector<Word> out;
  for (const auto& s : closure(w, cap)) out.push_back(decode(w.rank(), s));
  return out;
}

Word positive_min_rep(const Word& w, std::size_t cap) {
  return decode(w.rank(), closure(w, cap).front());
}

bool class_has_ladder_prefix(const Word& w, std::size_t cap) {
  const std::string ladder = encode(delta_ladder(w.rank(), w.rank()));
  for (const auto& s : closure(w, cap)) {
    if (s.starts_with(ladder)) return true;
  }
  return false;
}

NormalForm garside_oracle(const SignedWord& u, std::size_t cap) {
  const int n = u.rank();
  std::vector<Word> cofactors(static_cast<std::size_t>(n) + 1, Word(n));
  std::int64_t exp = 0;
  std::vector<Generator> positive;

  // P D^{+-1} = D^{+-1} flip(P)
  auto pass_delta = [&](int sign) {
    exp += sign;
    for (auto& g : positive) g = Generator::artin(n - g.index() + 1);
  };
  for (const auto& l : u) {
    if (!l.gen.is_artin()) {
      pass_delta(l.gen.is_delta() ? 1 : -1);
    } else if (l.sign > 0) {
      positive.push_back(l.gen);
    } else {
      auto& r = cofactors[static_cast<std::size_t>(l.gen.index())];
      if (r.empty() && n > 1) r = right_cofactor(l.gen.index(), n);
      pass_delta(-1);
      positive.insert(positive.end(), r.begin(), r.end());
    }
  }

  const std::string ladder = encode(delta_ladder(n, n));
  Word rest(n, std::move(positive));
  for (;;) {
    const auto cls = closure(rest, cap);
    auto hit = std::find_if(cls.begin(), cls.end(), [&](const std::string& s) {
      return s.starts_with(ladder);
    });
    if (hit == cls.end()) return {exp, decode(n, cls.front())};
    ++exp;
    rest = decode(n, hit->substr(ladder.size()));
  }
}

}  // namespace braidgs
