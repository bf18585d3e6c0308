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

#include "braidgs/families.hpp"

#include <string>
#include <utility>
#include <vector>

#include "braidgs/errors.hpp"

namespace braidgs {

namespace {

void check_index(int i, int lo, int hi, const char* what) {
  if (i < lo || i > hi) {
    throw RangeError(std::string(what) + ": index " + std::to_string(i) +
                     " outside [" + std::to_string(lo) + ", " +
                     std::to_string(hi) + "]");
  }
}

void append_run(std::vector<Generator>& out, int from, int down_to) {
  for (int m = from; m >= down_to; --m) out.push_back(Generator::artin(m));
}

}  // namespace

Word lambda_word(int i, LambdaVariant variant, int rank) {
  check_rank(rank);
  std::vector<Generator> out;
  switch (variant) {
    case LambdaVariant::full:
      check_index(i, 1, rank, "lambda_word");
      append_run(out, i, 1);
      break;
    case LambdaVariant::minus:
      check_index(i, 1, rank, "lambda_word");
      append_run(out, i, 2);
      break;
    case LambdaVariant::minusminus:
      check_index(i, 2, rank, "lambda_word");
      append_run(out, i, 3);
      break;
  }
  return Word(rank, std::move(out));
}

Word delta_ladder(int i, int rank) {
  check_rank(rank);
  check_index(i, 1, rank, "delta_ladder");
  std::vector<Generator> out;
  out.reserve(static_cast<std::size_t>(i * (i + 1) / 2));
  for (int k = 1; k <= i; ++k) append_run(out, k, 1);
  return Word(rank, std::move(out));
}

Word e_word(int i, int rank) {
  check_rank(rank);
  check_index(i, 1, rank, "e_word");
  std::vector<Generator> out;
  for (int k = 1; k <= rank; ++k) {
    append_run(out, k, k == rank - i + 1 ? 2 : 1);
  }
  return Word(rank, std::move(out));
}

Word descending_run(int i, int j, int rank) {
  check_rank(rank);
  check_index(i, 0, rank, "descending_run");
  if (j < 1 || j > i + 1) {
    throw RangeError("descending_run: j = " + std::to_string(j) +
                     " outside [1, i+1]");
  }
  std::vector<Generator> out;
  append_run(out, i, j);
  return Word(rank, std::move(out));
}

Word shift(const Word& v, int k) {
  std::vector<Generator> out;
  out.reserve(v.size());
  for (Generator g : v) {
    if (!g.is_artin()) throw DomainError("shift: word contains D letters");
    const int m = g.index() + k;
    if (m < 1 || m > v.rank()) {
      throw RangeError("shift: a" + std::to_string(g.index()) + " by " +
                       std::to_string(k) + " leaves [1, " +
                       std::to_string(v.rank()) + "]");
    }
    out.push_back(Generator::artin(m));
  }
  return Word(v.rank(), std::move(out));
}

Word flip(const Word& v, int i) {
  check_index(i, 1, v.rank(), "flip");
  std::vector<Generator> out;
  out.reserve(v.size());
  for (Generator g : v) {
    if (!g.is_artin() || g.index() > i) {
      throw DomainError("flip: letter " + to_string(g) + " not in a_1..a_" +
                        std::to_string(i));
    }
    out.push_back(Generator::artin(i - g.index() + 1));
  }
  return Word(v.rank(), std::move(out));
}

}  // namespace braidgs
