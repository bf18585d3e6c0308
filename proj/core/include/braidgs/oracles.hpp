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

// Ground truth that does not touch the rewriting engine.
//
// * The Artin action of B_{n+1} on the free group F_{n+1} = <x_1..x_{n+1}>,
//     a_i:  x_i -> x_i x_{i+1} x_i^-1,  x_{i+1} -> x_i,  x_m -> x_m otherwise.
//   This representation is faithful (Artin), so two braid words are equal
//   in the group iff they induce the same automorphism.
// * Breadth-first closure of a positive word under the defining relations
//   of the positive braid monoid, both directions, at every position.
// * A brute-force Garside normal form built from the two above.
//
// These are deliberately slow and only meant for small ranks and lengths.

#ifndef BRAIDGS_ORACLES_HPP_
#define BRAIDGS_ORACLES_HPP_

#include <cstddef>
#include <vector>

#include "braidgs/normal_form.hpp"
#include "braidgs/word.hpp"

namespace braidgs {

// Freely reduced word in x_1..x_{n+1}; letter +m is x_m, -m is x_m^-1.
class FreeGroupElem {
 public:
  FreeGroupElem() = default;
  static FreeGroupElem generator(int m) { return FreeGroupElem({m}); }

  // Reduces its argument.
  explicit FreeGroupElem(std::vector<int> letters);

  const std::vector<int>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }

  FreeGroupElem inverse() const;
  friend FreeGroupElem operator*(const FreeGroupElem& a, const FreeGroupElem& b);
  friend bool operator==(const FreeGroupElem&, const FreeGroupElem&) = default;

 private:
  std::vector<int> letters_;
};

// Images of x_1..x_{n+1}. aut(u v) = aut(u) o aut(v).
class FreeGroupAut {
 public:
  static FreeGroupAut identity(int rank);

  int rank() const noexcept { return static_cast<int>(images_.size()) - 1; }
  // Image of x_m, 1 <= m <= rank + 1.
  const FreeGroupElem& image(int m) const { return images_[static_cast<std::size_t>(m - 1)]; }
  const std::vector<FreeGroupElem>& images() const noexcept { return images_; }

  // this o a_i^{sign}
  void compose_artin(int i, int sign);

  friend bool operator==(const FreeGroupAut&, const FreeGroupAut&) = default;

 private:
  std::vector<FreeGroupElem> images_;
};

// D^{+-1} acts as delta_ladder(n)^{+-1}.
FreeGroupAut artin_automorphism(const SignedWord& u);

// Throws RankMismatch when the ranks differ.
bool oracle_equal(const SignedWord& u, const SignedWord& v);

inline constexpr std::size_t kDefaultClassCap = 1'000'000;

// All positive words equal to w in the positive braid monoid, sorted in
// deg-lex order. Throws DomainError for non-positive w and ResourceError
// when the class has more than `cap` members.
std::vector<Word> positive_class(const Word& w, std::size_t cap = kDefaultClassCap);

// Deg-lex least member of positive_class(w).
Word positive_min_rep(const Word& w, std::size_t cap = kDefaultClassCap);

// Garside form D^k A computed by brute force: move every D^{+-1} to the
// front (inverse letters become D^-1 times a positive cofactor found by
// search), peel ladder prefixes off the positive class as long as one
// exists, and report the least member of what remains.
NormalForm garside_oracle(const SignedWord& u, std::size_t cap = kDefaultClassCap);

// True iff some member of positive_class(w) starts with delta_ladder(n).
bool class_has_ladder_prefix(const Word& w, std::size_t cap = kDefaultClassCap);

}  // namespace braidgs

#endif  // BRAIDGS_ORACLES_HPP_
