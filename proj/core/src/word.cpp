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

#include "braidgs/word.hpp"

#include <algorithm>
#include <ostream>
#include <utility>

#include "braidgs/errors.hpp"

namespace braidgs {

namespace {

void check_letter(int rank, Generator g) {
  if (g.is_artin() && g.index() > rank) {
    throw RangeError("letter " + to_string(g) + " out of range for rank " +
                     std::to_string(rank));
  }
}

SignedLetter normalized(SignedLetter l) {
  if (l.sign != 1 && l.sign != -1) {
    throw DomainError("letter sign must be +1 or -1");
  }
  if (!l.gen.is_artin() && l.sign == -1) {
    return {l.gen.is_delta() ? Generator::delta_inv() : Generator::delta(), 1};
  }
  return l;
}

}  // namespace

void check_rank(int rank) {
  if (rank < 1 || rank > kMaxRank) {
    throw RangeError("rank " + std::to_string(rank) + " outside [1, " +
                     std::to_string(kMaxRank) + "]");
  }
}

Word::Word(int rank) : rank_(rank) { check_rank(rank); }

Word::Word(int rank, std::vector<Generator> letters)
    : rank_(rank), letters_(std::move(letters)) {
  check_rank(rank);
  for (Generator g : letters_) check_letter(rank, g);
}

Word Word::artin(int rank, std::initializer_list<int> indices) {
  return artin(rank, std::span<const int>(indices.begin(), indices.size()));
}

Word Word::artin(int rank, std::span<const int> indices) {
  std::vector<Generator> letters;
  letters.reserve(indices.size());
  for (int i : indices) {
    if (i < 1) throw RangeError("Artin index must be >= 1");
    letters.push_back(Generator::artin(i));
  }
  return Word(rank, std::move(letters));
}

bool Word::is_positive() const noexcept {
  return std::all_of(letters_.begin(), letters_.end(),
                     [](Generator g) { return g.is_artin(); });
}

Word Word::subword(std::size_t pos, std::size_t len) const {
  if (pos > letters_.size() || len > letters_.size() - pos) {
    throw RangeError("subword out of range");
  }
  Word out(rank_);
  out.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                      letters_.begin() + static_cast<std::ptrdiff_t>(pos + len));
  return out;
}

Word operator+(const Word& lhs, const Word& rhs) {
  if (lhs.rank_ != rhs.rank_) throw RankMismatch("concatenating words of different rank");
  Word out = lhs;
  out.letters_.insert(out.letters_.end(), rhs.letters_.begin(), rhs.letters_.end());
  return out;
}

std::strong_ordering cmp_deglex(const Word& u, const Word& v) {
  if (u.rank() != v.rank()) {
    throw RankMismatch("cannot compare words of rank " + std::to_string(u.rank()) +
                       " and " + std::to_string(v.rank()));
  }
  if (auto c = u.size() <=> v.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(u.begin(), u.end(), v.begin(),
                                                v.end());
}

SignedWord::SignedWord(int rank) : rank_(rank) { check_rank(rank); }

SignedWord::SignedWord(int rank, std::vector<SignedLetter> letters)
    : rank_(rank), letters_(std::move(letters)) {
  check_rank(rank);
  for (auto& l : letters_) {
    check_letter(rank, l.gen);
    l = normalized(l);
  }
}

SignedWord::SignedWord(const Word& word) : rank_(word.rank()) {
  letters_.reserve(word.size());
  for (Generator g : word) letters_.push_back({g, 1});
}

SignedWord SignedWord::inverse() const {
  SignedWord out(rank_);
  out.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    out.letters_.push_back(normalized({it->gen, -it->sign}));
  }
  return out;
}

SignedWord operator+(const SignedWord& lhs, const SignedWord& rhs) {
  if (lhs.rank_ != rhs.rank_) throw RankMismatch("concatenating words of different rank");
  SignedWord out = lhs;
  out.letters_.insert(out.letters_.end(), rhs.letters_.begin(), rhs.letters_.end());
  return out;
}

std::string to_string(Generator g) {
  if (g.is_delta()) return "D";
  if (g.is_delta_inv()) return "D^-1";
  return "a" + std::to_string(g.index());
}

std::string to_string(const Word& w) {
  std::string out;
  for (Generator g : w) {
    if (!out.empty()) out += ' ';
    out += to_string(g);
  }
  return out;
}

std::string to_string(const SignedWord& w) {
  std::string out;
  for (const auto& l : w) {
    if (!out.empty()) out += ' ';
    out += to_string(l.gen);
    if (l.sign < 0) out += "^-1";
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Word& w) {
  return os << '"' << to_string(w) << '"';
}

std::ostream& operator<<(std::ostream& os, const SignedWord& w) {
  return os << '"' << to_string(w) << '"';
}

}  // namespace braidgs
