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

// Group-level interface: every element of B_{n+1} has a unique irreducible
// representative D^k A with A a positive irreducible word, which decides
// equality.

#ifndef BRAIDGS_NORMAL_FORM_HPP_
#define BRAIDGS_NORMAL_FORM_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>

#include "braidgs/rewrite.hpp"
#include "braidgs/word.hpp"

namespace braidgs {

struct NormalForm {
  std::int64_t delta_exp = 0;
  Word tail;  // positive and irreducible

  // D^k followed by the tail, as one word.
  Word to_word() const;

  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

// Replaces every a_i^-1 by D^-1 E_i; the result is a word over the
// Artin-Garside alphabet representing the same braid.
Word desugar_inverses(const SignedWord& u);

NormalForm normal_form(const SignedWord& u,
                       const NormalizeOptions& options = {});

// Splits an irreducible word into its D-power prefix and positive tail.
// Throws InternalError if the D prefix mixes signs or a D letter follows an
// Artin letter.
NormalForm split_normal_form(const Word& irreducible);

// Throws RankMismatch when the ranks differ.
bool equal(const SignedWord& u, const SignedWord& v,
           const NormalizeOptions& options = {});

NormalForm invert(const SignedWord& u, const NormalizeOptions& options = {});

// "D^<k> | <letters>", e.g. "D^-1 | a1 a2" or "D^0 | ".
std::string format_normal_form(const NormalForm& nf);
std::ostream& operator<<(std::ostream& os, const NormalForm& nf);

}  // namespace braidgs

#endif  // BRAIDGS_NORMAL_FORM_HPP_
