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

#include "braidgs/normal_form.hpp"

#include <ostream>
#include <utility>
#include <vector>

#include "braidgs/errors.hpp"
#include "braidgs/families.hpp"

namespace braidgs {

Word NormalForm::to_word() const {
  const Generator d = delta_exp >= 0 ? Generator::delta() : Generator::delta_inv();
  const std::int64_t count = delta_exp >= 0 ? delta_exp : -delta_exp;
  std::vector<Generator> letters(static_cast<std::size_t>(count), d);
  letters.insert(letters.end(), tail.begin(), tail.end());
  return Word(tail.rank(), std::move(letters));
}

Word desugar_inverses(const SignedWord& u) {
  const int n = u.rank();
  std::vector<Word> e_words;  // E_i, built on first use
  std::vector<Generator> out;
  out.reserve(u.size());
  for (const auto& l : u) {
    if (l.sign > 0) {
      out.push_back(l.gen);
      continue;
    }
    const auto i = static_cast<std::size_t>(l.gen.index());
    if (e_words.empty()) e_words.resize(static_cast<std::size_t>(n) + 1, Word(n));
    if (e_words[i].empty()) e_words[i] = e_word(l.gen.index(), n);
    out.push_back(Generator::delta_inv());
    out.insert(out.end(), e_words[i].begin(), e_words[i].end());
  }
  return Word(n, std::move(out));
}

NormalForm split_normal_form(const Word& irreducible) {
  std::size_t p = 0;
  std::int64_t k = 0;
  for (; p < irreducible.size() && !irreducible[p].is_artin(); ++p) {
    k += irreducible[p].is_delta() ? 1 : -1;
  }
  if (static_cast<std::size_t>(k < 0 ? -k : k) != p) {
    throw InternalError("mixed-sign D prefix in " + to_string(irreducible));
  }
  Word tail = irreducible.subword(p, irreducible.size() - p);
  if (!tail.is_positive()) {
    throw InternalError("D letter after an Artin letter in " + to_string(irreducible));
  }
  return {k, std::move(tail)};
}

NormalForm normal_form(const SignedWord& u, const NormalizeOptions& options) {
  NormalizeOptions opts = options;
  opts.record_trace = false;
  return split_normal_form(
      normalize(desugar_inverses(u), Policy::deterministic(), opts).word);
}

bool equal(const SignedWord& u, const SignedWord& v,
           const NormalizeOptions& options) {
  if (u.rank() != v.rank()) {
    throw RankMismatch("equal: words of rank " + std::to_string(u.rank()) +
                       " and " + std::to_string(v.rank()));
  }
  return normal_form(u, options) == normal_form(v, options);
}

NormalForm invert(const SignedWord& u, const NormalizeOptions& options) {
  return normal_form(u.inverse(), options);
}

std::string format_normal_form(const NormalForm& nf) {
  return "D^" + std::to_string(nf.delta_exp) + " | " + to_string(nf.tail);
}

std::ostream& operator<<(std::ostream& os, const NormalForm& nf) {
  return os << format_normal_form(nf);
}

}  // namespace braidgs
