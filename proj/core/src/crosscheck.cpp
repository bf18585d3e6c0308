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

#include "braidgs/crosscheck.hpp"

#include <algorithm>
#include <cstdlib>
#include <unordered_map>

#include "braidgs/families.hpp"

namespace braidgs {

namespace {

constexpr std::size_t kMaxExamples = 8;

std::vector<SignedLetter> signed_alphabet(int rank, bool with_delta) {
  std::vector<SignedLetter> out;
  if (with_delta) {
    out.push_back({Generator::delta_inv(), 1});
    out.push_back({Generator::delta(), 1});
  }
  for (int i = 1; i <= rank; ++i) {
    out.push_back({Generator::artin(i), 1});
    out.push_back({Generator::artin(i), -1});
  }
  return out;
}

SignedLetter inverse_of(SignedLetter l) {
  if (l.gen.is_artin()) return {l.gen, -l.sign};
  return {l.gen.is_delta() ? Generator::delta_inv() : Generator::delta(), 1};
}

template <class T>
std::size_t pick(const std::vector<T>& v, std::mt19937_64& rng) {
  return std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng);
}

// Signed letters of D (sign +1) or D^-1 (sign -1) spelled out as a ladder.
std::vector<SignedLetter> ladder_letters(int n, int sign) {
  const Word ladder = delta_ladder(n, n);
  std::vector<SignedLetter> out;
  for (Generator g : ladder) out.push_back({g, sign});
  if (sign < 0) std::reverse(out.begin(), out.end());
  return out;
}

// Tries one edit of the given kind; false if none applies.
bool try_move(int kind, int n, std::vector<SignedLetter>& w, std::mt19937_64& rng) {
  const std::size_t len = w.size();
  std::vector<std::size_t> spots;
  switch (kind) {
    case 0: {  // insert x x^-1
      const auto alphabet = signed_alphabet(n, true);
      const SignedLetter x = alphabet[pick(alphabet, rng)];
      const auto at = static_cast<std::ptrdiff_t>(
          std::uniform_int_distribution<std::size_t>(0, len)(rng));
      w.insert(w.begin() + at, {x, inverse_of(x)});
      return true;
    }
    case 1: {  // delete x x^-1
      for (std::size_t p = 0; p + 1 < len; ++p) {
        if (w[p + 1] == inverse_of(w[p])) spots.push_back(p);
      }
      if (spots.empty()) return false;
      const auto p = static_cast<std::ptrdiff_t>(spots[pick(spots, rng)]);
      w.erase(w.begin() + p, w.begin() + p + 2);
      return true;
    }
    case 2: {  // x y x -> y x y, |x - y| = 1, uniform sign
      for (std::size_t p = 0; p + 2 < len; ++p) {
        const auto& a = w[p];
        const auto& b = w[p + 1];
        if (a.gen.is_artin() && b.gen.is_artin() && a == w[p + 2] && a.sign == b.sign &&
            std::abs(a.gen.index() - b.gen.index()) == 1) {
          spots.push_back(p);
        }
      }
      if (spots.empty()) return false;
      const std::size_t p = spots[pick(spots, rng)];
      const SignedLetter x = w[p];
      const SignedLetter y = w[p + 1];
      w[p] = y;
      w[p + 1] = x;
      w[p + 2] = y;
      return true;
    }
    case 3: {  // far commutation
      for (std::size_t p = 0; p + 1 < len; ++p) {
        if (w[p].gen.is_artin() && w[p + 1].gen.is_artin() &&
            std::abs(w[p].gen.index() - w[p + 1].gen.index()) >= 2) {
          spots.push_back(p);
        }
      }
      if (spots.empty()) return false;
      const std::size_t p = spots[pick(spots, rng)];
      std::swap(w[p], w[p + 1]);
      return true;
    }
    case 4: {  // D^{+-1} -> ladder^{+-1}
      for (std::size_t p = 0; p < len; ++p) {
        if (!w[p].gen.is_artin()) spots.push_back(p);
      }
      if (spots.empty()) return false;
      const std::size_t p = spots[pick(spots, rng)];
      const auto expansion = ladder_letters(n, w[p].gen.is_delta() ? 1 : -1);
      w.erase(w.begin() + static_cast<std::ptrdiff_t>(p));
      w.insert(w.begin() + static_cast<std::ptrdiff_t>(p), expansion.begin(), expansion.end());
      return true;
    }
    case 5: {  // ladder^{+-1} -> D^{+-1}
      std::vector<std::pair<std::size_t, int>> hits;
      for (int sign : {1, -1}) {
        const auto pattern = ladder_letters(n, sign);
        for (std::size_t p = 0; p + pattern.size() <= len; ++p) {
          if (std::equal(pattern.begin(), pattern.end(), w.begin() + static_cast<std::ptrdiff_t>(p))) {
            hits.push_back({p, sign});
          }
        }
        if (!hits.empty()) {
          const auto [p, s] = hits[pick(hits, rng)];
          const auto first = w.begin() + static_cast<std::ptrdiff_t>(p);
          w.erase(first, first + static_cast<std::ptrdiff_t>(pattern.size()));
          w.insert(w.begin() + static_cast<std::ptrdiff_t>(p),
                   SignedLetter{s > 0 ? Generator::delta() : Generator::delta_inv(), 1});
          return true;
        }
      }
      return false;
    }
    default:
      return false;
  }
}

template <class Key>
struct PartitionCheck {
  std::unordered_map<std::string, std::string> left_to_right;
  std::unordered_map<std::string, std::string> right_to_left;
  std::unordered_map<std::string, Key> left_rep;
  std::unordered_map<std::string, Key> right_rep;

  // Records (left, right) for `item`; returns a conflicting earlier item
  // or nullptr.
  const Key* add(const std::string& left, const std::string& right, const Key& item) {
    auto [l, l_new] = left_to_right.emplace(left, right);
    auto [r, r_new] = right_to_left.emplace(right, left);
    if (l_new) left_rep.emplace(left, item);
    if (r_new) right_rep.emplace(right, item);
    if (l->second != right) return &left_rep.at(left);
    if (r->second != left) return &right_rep.at(right);
    return nullptr;
  }
};

}  // namespace

SignedWord random_signed_word(int rank, std::size_t max_len, std::mt19937_64& rng,
                              bool with_delta) {
  const auto alphabet = signed_alphabet(rank, with_delta);
  std::vector<SignedLetter> out(std::uniform_int_distribution<std::size_t>(0, max_len)(rng));
  for (auto& l : out) l = alphabet[pick(alphabet, rng)];
  return SignedWord(rank, std::move(out));
}

Word random_positive_word(int rank, std::size_t min_len, std::size_t max_len,
                          std::mt19937_64& rng) {
  std::vector<int> idx(std::uniform_int_distribution<std::size_t>(min_len, max_len)(rng));
  std::uniform_int_distribution<int> letter(1, rank);
  for (int& x : idx) x = letter(rng);
  return Word::artin(rank, idx);
}

SignedWord scramble(const SignedWord& u, std::size_t moves, std::mt19937_64& rng) {
  std::vector<SignedLetter> w(u.begin(), u.end());
  std::uniform_int_distribution<int> kind(0, 5);
  for (std::size_t done = 0; done < moves;) {
    if (try_move(kind(rng), u.rank(), w, rng)) ++done;
  }
  return SignedWord(u.rank(), std::move(w));
}

void for_each_signed_word(int rank, std::size_t max_len,
                          const std::function<void(const SignedWord&)>& visit) {
  const auto alphabet = signed_alphabet(rank, true);
  for (std::size_t len = 0; len <= max_len; ++len) {
    std::vector<std::size_t> digits(len, 0);
    for (;;) {
      std::vector<SignedLetter> letters;
      letters.reserve(len);
      for (std::size_t d : digits) letters.push_back(alphabet[d]);
      visit(SignedWord(rank, std::move(letters)));
      std::size_t p = len;
      while (p > 0 && digits[p - 1] + 1 == alphabet.size()) digits[--p] = 0;
      if (p == 0) break;
      ++digits[p - 1];
    }
  }
}

void for_each_positive_word(int rank, std::size_t max_len,
                            const std::function<void(const Word&)>& visit) {
  for (std::size_t len = 0; len <= max_len; ++len) {
    std::vector<int> digits(len, 1);
    for (;;) {
      visit(Word::artin(rank, digits));
      std::size_t p = len;
      while (p > 0 && digits[p - 1] == rank) digits[--p] = 1;
      if (p == 0) break;
      ++digits[p - 1];
    }
  }
}

std::string automorphism_key(const FreeGroupAut& aut) {
  std::string out;
  for (const auto& img : aut.images()) {
    for (int x : img.letters()) {
      out += std::to_string(x);
      out += ',';
    }
    out += ';';
  }
  return out;
}

CrossCheckReport crosscheck_exhaustive(int rank, std::size_t max_len) {
  CrossCheckReport report;
  PartitionCheck<SignedWord> partition;
  for_each_signed_word(rank, max_len, [&](const SignedWord& u) {
    ++report.words;
    const std::string nf = format_normal_form(normal_form(u));
    const std::string aut = automorphism_key(artin_automorphism(u));
    if (const SignedWord* other = partition.add(nf, aut, u)) {
      ++report.disagreements;
      if (report.examples.size() < kMaxExamples) report.examples.push_back({*other, u});
    }
  });
  report.pairs = report.words * (report.words - 1) / 2;
  report.engine_classes = partition.left_to_right.size();
  report.oracle_classes = partition.right_to_left.size();
  return report;
}

CrossCheckReport crosscheck_random(int rank, std::size_t pairs, std::size_t max_len,
                                   std::uint64_t seed) {
  CrossCheckReport report;
  std::mt19937_64 rng(seed);
  auto compare = [&](const SignedWord& u, const SignedWord& v) {
    ++report.pairs;
    if (equal(u, v) != oracle_equal(u, v)) {
      ++report.disagreements;
      if (report.examples.size() < kMaxExamples) report.examples.push_back({u, v});
    }
  };
  for (std::size_t t = 0; t < pairs; ++t) {
    const SignedWord u = random_signed_word(rank, max_len, rng);
    const SignedWord v = random_signed_word(rank, max_len, rng);
    compare(u, v);
    compare(u, scramble(u, 6, rng));
    report.words += 2;
  }
  return report;
}

GarsideCheckReport crosscheck_garside(const std::vector<SignedWord>& words) {
  GarsideCheckReport report;
  for (const auto& u : words) {
    ++report.words;
    const NormalForm nf = normal_form(u);
    bool bad = false;
    if (nf != garside_oracle(u)) {
      ++report.mismatches;
      bad = true;
    }
    const Word ladder = delta_ladder(u.rank(), u.rank());
    const bool literal_prefix =
        nf.tail.size() >= ladder.size() && nf.tail.subword(0, ladder.size()) == ladder;
    if (literal_prefix || class_has_ladder_prefix(nf.tail)) {
      ++report.ladder_prefixed;
      bad = true;
    }
    if (bad && report.examples.size() < kMaxExamples) report.examples.push_back(u);
  }
  return report;
}

EmbeddingCheckReport crosscheck_embedding(int rank, std::size_t max_len) {
  EmbeddingCheckReport report;
  PartitionCheck<Word> partition;
  for_each_positive_word(rank, max_len, [&](const Word& w) {
    ++report.words;
    const std::string cls = to_string(positive_min_rep(w)) + "#" + std::to_string(w.size());
    const std::string grp = format_normal_form(normal_form(w));
    if (const Word* other = partition.add(cls, grp, w)) {
      ++report.disagreements;
      if (report.examples.size() < kMaxExamples) report.examples.push_back({*other, w});
    }
  });
  return report;
}

}  // namespace braidgs
