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

#ifndef WORDREP_GRAPH6_HPP_
#define WORDREP_GRAPH6_HPP_

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wordrep/graph.hpp"

namespace wordrep {

// Encodes in vertex index order.
std::string to_graph6(const Graph& g);

// Vertices are labeled "1".."n".
Graph from_graph6(std::string_view text);

// One graph per non-empty line; an optional ">>graph6<<" header is skipped.
std::vector<Graph> read_graph6(std::istream& in);
void write_graph6(std::ostream& out, std::span<const Graph> graphs);

}  // namespace wordrep

#endif  // WORDREP_GRAPH6_HPP_
