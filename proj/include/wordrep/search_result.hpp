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

#ifndef WORDREP_SEARCH_RESULT_HPP_
#define WORDREP_SEARCH_RESULT_HPP_

#include <cstdint>
#include <limits>
#include <optional>
#include <string_view>

namespace wordrep {

// `none` is a proof of non-existence; `unknown` means the node budget ran
// out first. The two are never conflated.
enum class Outcome { found, none, unknown };

constexpr std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::found: return "found";
    case Outcome::none: return "none";
    case Outcome::unknown: return "unknown";
  }
  return "?";
}

template <typename T>
struct SearchResult {
  Outcome outcome = Outcome::unknown;
  std::optional<T> value;
  std::uint64_t nodes = 0;

  bool found() const noexcept { return outcome == Outcome::found; }
};

inline constexpr std::uint64_t kUnlimited = std::numeric_limits<std::uint64_t>::max();

}  // namespace wordrep

#endif  // WORDREP_SEARCH_RESULT_HPP_
