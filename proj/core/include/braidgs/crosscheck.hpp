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

// Drivers that compare the rewriting engine against the oracles over
// exhaustive or sampled inputs, and the random word generators they use.

#ifndef BRAIDGS_CROSSCHECK_HPP_
#define BRAIDGS_CROSSCHECK_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "braidgs/normal_form.hpp"
#include "braidgs/oracles.hpp"
#include "braidgs/word.hpp"

namespace braidgs {

// Uniform length in [0, max_len]; letters uniform over a_i^{+-1} and D^{+-1}
// (with_delta) or a_i^{+-1} only.
SignedWord random_signed_word(int rank, std::size_t max_len, std::mt19937_64& rng,
                              bool with_delta = true);

// Uniform length in [min_len, max_len] over a_1..a_n.
Word random_positive_word(int rank, std::size_t min_len, std::size_t max_len,
                          std::mt19937_64& rng);

// Applies `moves` random group-preserving edits: insert or delete a
// cancelling pair, apply a braid or far-commutation relation (either
// direction, either sign), expand D^{+-1} into its ladder or contract a
// ladder into D.
SignedWord scramble(const SignedWord& u, std::size_t moves, std::mt19937_64& rng);

// Every signed word of length <= max_len over a_i^{+-1} and D^{+-1}, in
// length-then-lexicographic order.
void for_each_signed_word(int rank, std::size_t max_len,
                          const std::function<void(const SignedWord&)>& visit);

// Every positive word of length <= max_len.
void for_each_positive_word(int rank, std::size_t max_len,
                            const std::function<void(const Word&)>& visit);

// Canonical string of an automorphism, usable as a hash key.
std::string automorphism_key(const FreeGroupAut& aut);

struct CrossCheckReport {
  std::size_t words = 0;
  std::size_t pairs = 0;  // pairs compared (implicitly, for bucketing)
  std::size_t engine_classes = 0;
  std::size_t oracle_classes = 0;
  std::size_t disagreements = 0;
  // Up to a handful of offending pairs, for diagnostics.
  std::vector<std::pair<SignedWord, SignedWord>> examples;

  bool passed() const noexcept { return disagreements == 0; }
};

// Buckets every signed word of length <= max_len by engine normal form and
// by Artin automorphism; the two partitions must coincide, which is
// equal(u, v) <=> oracle_equal(u, v) for all pairs.
CrossCheckReport crosscheck_exhaustive(int rank, std::size_t max_len);

// `pairs` random pairs (u, v) of signed words of length <= max_len, plus
// for each u a scrambled copy known to be equal to u.
CrossCheckReport crosscheck_random(int rank, std::size_t pairs, std::size_t max_len,
                                   std::uint64_t seed);

struct GarsideCheckReport {
  std::size_t words = 0;
  std::size_t mismatches = 0;     // normal_form != garside_oracle
  std::size_t ladder_prefixed = 0;  // tail or a class member starts with D
  std::vector<SignedWord> examples;

  bool passed() const noexcept { return mismatches == 0 && ladder_prefixed == 0; }
};

// Compares normal_form with garside_oracle and checks ladder-freedom of the
// tail's positive class for each given word.
GarsideCheckReport crosscheck_garside(const std::vector<SignedWord>& words);

struct EmbeddingCheckReport {
  std::size_t words = 0;
  std::size_t disagreements = 0;
  std::vector<std::pair<Word, Word>> examples;

  bool passed() const noexcept { return disagreements == 0; }
};

// For all positive words of length <= max_len: same positive class iff
// equal in the group (the positive monoid embeds in the group).
EmbeddingCheckReport crosscheck_embedding(int rank, std::size_t max_len);

}  // namespace braidgs

#endif  // BRAIDGS_CROSSCHECK_HPP_
