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

// Letters and words over the Artin-Garside alphabet of the braid group
// B_{n+1}: the Artin generators a_1..a_n together with the fundamental
// element D and its inverse.
//
// A generator is stored as a one-byte code, 0 = D^-1, 1 = D, k + 1 = a_k,
// so that the generator order D^-1 < D < a_1 < ... < a_n is the integer
// order of the codes and the deg-lex comparison of two words is a length
// comparison followed by a plain lexicographic comparison of bytes.

#ifndef BRAIDGS_WORD_HPP_
#define BRAIDGS_WORD_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#ifndef BRAIDGS_MAX_RANK
#define BRAIDGS_MAX_RANK 64
#endif

namespace braidgs {

// Largest supported rank n (the group is B_{n+1}). Set at configure time
// through the BRAIDGS_MAX_RANK cache variable.
inline constexpr int kMaxRank = BRAIDGS_MAX_RANK;
static_assert(kMaxRank >= 1 && kMaxRank <= 253, "rank must fit a letter code");

class Generator {
 public:
  constexpr Generator() noexcept = default;

  static constexpr Generator delta_inv() noexcept { return Generator(0); }
  static constexpr Generator delta() noexcept { return Generator(1); }
  // a_i; callers guarantee i >= 1. Range against a rank is checked by Word.
  static constexpr Generator artin(int i) noexcept {
    return Generator(static_cast<std::uint8_t>(i + 1));
  }
  static constexpr Generator from_code(std::uint8_t code) noexcept {
    return Generator(code);
  }

  constexpr std::uint8_t code() const noexcept { return code_; }
  constexpr bool is_artin() const noexcept { return code_ >= 2; }
  constexpr bool is_delta() const noexcept { return code_ == 1; }
  constexpr bool is_delta_inv() const noexcept { return code_ == 0; }
  // Artin index i of a_i. Only meaningful when is_artin().
  constexpr int index() const noexcept { return static_cast<int>(code_) - 1; }

  friend constexpr auto operator<=>(Generator, Generator) noexcept = default;

 private:
  explicit constexpr Generator(std::uint8_t code) noexcept : code_(code) {}

  std::uint8_t code_ = 1;
};

// A finite sequence of generators of B_{rank+1}. Letter-by-letter equality;
// group equality lives in normal_form.hpp.
class Word {
 public:
  explicit Word(int rank);
  Word(int rank, std::vector<Generator> letters);

  // Positive word a_{i_1} a_{i_2} ... from a list of Artin indices.
  static Word artin(int rank, std::initializer_list<int> indices);
  static Word artin(int rank, std::span<const int> indices);

  int rank() const noexcept { return rank_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Generator operator[](std::size_t pos) const { return letters_[pos]; }
  std::span<const Generator> letters() const noexcept { return letters_; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  // True iff every letter is an Artin generator (no D, no D^-1).
  bool is_positive() const noexcept;

  Word subword(std::size_t pos, std::size_t len) const;

  friend Word operator+(const Word& lhs, const Word& rhs);
  friend bool operator==(const Word&, const Word&) = default;

 private:
  int rank_;
  std::vector<Generator> letters_;
};

// Deg-lex order: shorter words are smaller; words of equal length compare
// left to right under D^-1 < D < a_1 < ... < a_n. Throws RankMismatch when
// the ranks differ.
std::strong_ordering cmp_deglex(const Word& u, const Word& v);

// Strict weak ordering adaptor for ordered containers of same-rank words.
struct DegLexLess {
  bool operator()(const Word& u, const Word& v) const {
    return cmp_deglex(u, v) < 0;
  }
};

struct SignedLetter {
  Generator gen;
  int sign = 1;  // +1 or -1; always +1 for D and D^-1 after normalization

  friend bool operator==(const SignedLetter&, const SignedLetter&) = default;
};

// Word over the Artin-Garside alphabet that may also contain a_i^-1.
// (D, -1) is stored as (D^-1, +1) and (D^-1, -1) as (D, +1).
class SignedWord {
 public:
  explicit SignedWord(int rank);
  SignedWord(int rank, std::vector<SignedLetter> letters);
  SignedWord(const Word& word);  // NOLINT: every word is a signed word

  int rank() const noexcept { return rank_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  const SignedLetter& operator[](std::size_t pos) const {
    return letters_[pos];
  }
  std::span<const SignedLetter> letters() const noexcept { return letters_; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  // Reversed word with every sign flipped: the formal inverse.
  SignedWord inverse() const;

  friend SignedWord operator+(const SignedWord& lhs, const SignedWord& rhs);
  friend bool operator==(const SignedWord&, const SignedWord&) = default;

 private:
  int rank_;
  std::vector<SignedLetter> letters_;
};

// Validates 1 <= rank <= kMaxRank.
void check_rank(int rank);

// Token syntax shared by diagnostics, traces and the CLI: "a3", "D", "D^-1",
// "a2^-1", space separated. The empty word prints as "".
std::string to_string(Generator g);
std::string to_string(const Word& w);
std::string to_string(const SignedWord& w);
std::ostream& operator<<(std::ostream& os, const Word& w);
std::ostream& operator<<(std::ostream& os, const SignedWord& w);

}  // namespace braidgs

#endif  // BRAIDGS_WORD_HPP_
