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

#ifndef BRAIDGS_ERRORS_HPP_
#define BRAIDGS_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace braidgs {

// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two words (or a word and an operation) live in different braid groups.
class RankMismatch : public Error {
 public:
  using Error::Error;
};

// An index or parameter is outside the range allowed for the ambient rank.
class RangeError : public Error {
 public:
  using Error::Error;
};

// A letter is not in the sub-alphabet an operation is defined on.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A rule match no longer agrees with the word it is applied to.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

// A combinatorial budget (BFS cap, instance budget) was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// Something that cannot happen on valid input happened, e.g. the rewrite
// step guard fired.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace braidgs

#endif  // BRAIDGS_ERRORS_HPP_
