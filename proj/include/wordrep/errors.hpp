// Copyright 2026 The wordrep Authors
//
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

#ifndef WORDREP_ERRORS_HPP_
#define WORDREP_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace wordrep {

// Malformed or inconsistent caller input: unknown labels, alphabet
// mismatches, partitions that violate their invariants.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A text file that could not be parsed. Carries the offending line.
class ParseError : public InputError {
 public:
  ParseError(int line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

// An operation was called on an object outside its domain, e.g. path
// enumeration on a cyclic orientation.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A constructed word failed its own verification. Either the caller's
// precondition was false or there is a bug.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace wordrep

#endif  // WORDREP_ERRORS_HPP_
