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

// Named positive word families used by the rewriting rules and the lemma
// suite, plus the two index transformations (shift and flip).

#ifndef BRAIDGS_FAMILIES_HPP_
#define BRAIDGS_FAMILIES_HPP_

#include "braidgs/word.hpp"

namespace braidgs {

enum class LambdaVariant {
  full,        // a_i a_{i-1} ... a_1
  minus,       // a_i ... a_2, empty for i = 1
  minusminus,  // a_i ... a_3, empty for i = 2
};

Word lambda_word(int i, LambdaVariant variant, int rank);

// Lambda_1 Lambda_2 ... Lambda_i, of length i(i+1)/2. delta_ladder(n, n) is
// the positive word of D.
Word delta_ladder(int i, int rank);

// The positive word E_i with E_i a_i = D:
//   Lambda_1 ... Lambda_{n-i} Lambda^-_{n-i+1} Lambda_{n-i+2} ... Lambda_n.
Word e_word(int i, int rank);

// a_i a_{i-1} ... a_j; empty when j = i + 1.
Word descending_run(int i, int j, int rank);

// a_m -> a_{m+k} on a positive word. Throws RangeError if an index leaves
// [1, rank], DomainError on D letters.
Word shift(const Word& v, int k);

// a_j -> a_{i-j+1} on a positive word over a_1..a_i; the conjugate of v by
// the ladder delta_ladder(i). An involution.
Word flip(const Word& v, int i);

}  // namespace braidgs

#endif  // BRAIDGS_FAMILIES_HPP_
