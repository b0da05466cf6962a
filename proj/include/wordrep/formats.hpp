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

#ifndef WORDREP_FORMATS_HPP_
#define WORDREP_FORMATS_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "wordrep/graph.hpp"
#include "wordrep/orientation.hpp"
#include "wordrep/word.hpp"

namespace wordrep {

// Graph file:
//   vertices: <label> <label> ...
//   edge: <u> <v>
// Orientation files use `arc: <from> <to>` lines instead of `edge:`.
// Blank lines and text after `#` are ignored.
Graph parse_graph(std::string_view text);
std::string format_graph(const Graph& g);

Orientation parse_orientation(std::string_view text);
std::string format_orientation(const Orientation& d);

// One word per non-empty line.
std::vector<Word> parse_words(std::string_view text, const AlphabetPtr& alphabet);
std::string format_words(const std::vector<Word>& words, bool compact = false);

std::string read_file(const std::string& path);

}  // namespace wordrep

#endif  // WORDREP_FORMATS_HPP_
