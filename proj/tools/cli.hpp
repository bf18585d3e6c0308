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

#ifndef BRAIDGS_TOOLS_CLI_HPP_
#define BRAIDGS_TOOLS_CLI_HPP_

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "braidgs/errors.hpp"
#include "braidgs/normal_form.hpp"
#include "braidgs/word.hpp"

namespace braidgs::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;  // "false", or a check found failures
inline constexpr int kExitUsage = 2;     // parse or argument error
inline constexpr int kExitResource = 3;  // budget or step guard exceeded

// Largest |k| accepted in a D^k token.
inline constexpr long long kMaxDeltaPower = 1'000'000;

// Malformed word text. `position` is the byte offset of the offending
// token, `token` its zero-based index.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position, std::size_t token);

  std::size_t position() const noexcept { return position_; }
  std::size_t token() const noexcept { return token_; }

 private:
  std::size_t position_;
  std::size_t token_;
};

// Grammar: tokens separated by whitespace or '.',
//   token ::= 'a' <digits> ['^-1'] | 'D' ['^-1'] | 'D^' <signed-int>
// D^k expands to |k| copies of D^{sign k}. Case-sensitive. Throws
// ParseError on lexical errors and RangeError (with token index) when an
// index exceeds the rank.
SignedWord parse_word(std::string_view text, int rank);

// Inverse of format_normal_form: "D^<k> | <letters>".
NormalForm parse_normal_form(std::string_view text, int rank);

// {"delta_exp": k, "tail": ["a1", ...]}
nlohmann::json to_json(const NormalForm& nf);
NormalForm normal_form_from_json(const nlohmann::json& j, int rank);

// Runs one command line (args excludes the program name). Reads batch
// input from `in` when no words or file are given.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace braidgs::cli

#endif  // BRAIDGS_TOOLS_CLI_HPP_
