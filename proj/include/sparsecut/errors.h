// Copyright 2026 The sparsecut Authors
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

#ifndef SPARSECUT_ERRORS_H_
#define SPARSECUT_ERRORS_H_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sparsecut {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed SMILP text. `line` is 1-based.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// An instance, partition, or graph breaks a structural invariant.
class InvariantError : public Error {
 public:
  using Error::Error;
};

// A resource cap (lattice size, node count, list length) was exceeded.
class CapExceededError : public Error {
 public:
  CapExceededError(const std::string& what, std::uint64_t size,
                   std::uint64_t cap)
      : Error(what + ": size " + std::to_string(size) + " exceeds cap " +
              std::to_string(cap)),
        size_(size),
        cap_(cap) {}
  std::uint64_t size() const { return size_; }
  std::uint64_t cap() const { return cap_; }

 private:
  std::uint64_t size_;
  std::uint64_t cap_;
};

// A precondition on arguments does not hold.
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace sparsecut

#endif  // SPARSECUT_ERRORS_H_
