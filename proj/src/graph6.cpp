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

#include "wordrep/graph6.hpp"

#include <istream>
#include <ostream>

#include "wordrep/errors.hpp"

namespace wordrep {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

void put_size(std::string& out, long n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int s = 30; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + 63));
  }
}

int sextet(char c) {
  const int v = static_cast<unsigned char>(c) - 63;
  if (v < 0 || v > 63) throw InputError("invalid graph6 character");
  return v;
}

}  // namespace

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  put_size(out, n);
  int acc = 0, bits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = acc << 1 | (g.adjacent(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
  return out;
}

Graph from_graph6(std::string_view text) {
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw InputError("empty graph6 string");
  std::size_t pos = 0;
  long n = 0;
  auto take = [&](int count) {
    long v = 0;
    for (int i = 0; i < count; ++i) {
      if (pos >= text.size()) throw InputError("truncated graph6 size field");
      v = v << 6 | sextet(text[pos++]);
    }
    return v;
  };
  if (text[0] != '~') {
    n = take(1);
  } else if (text.size() > 1 && text[1] == '~') {
    pos = 2;
    n = take(6);
  } else {
    pos = 1;
    n = take(3);
  }
  const long pairs = n * (n - 1) / 2;
  const std::size_t expected = pos + static_cast<std::size_t>((pairs + 5) / 6);
  if (text.size() != expected) throw InputError("graph6 string has the wrong length");

  std::vector<Edge> edges;
  long bit = 0;
  for (long j = 1; j < n; ++j) {
    for (long i = 0; i < j; ++i, ++bit) {
      const int v = sextet(text[pos + bit / 6]);
      if (v >> (5 - bit % 6) & 1) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  }
  if (bit % 6 != 0) {
    const int v = sextet(text[pos + bit / 6]);
    if (v & ((1 << (6 - bit % 6)) - 1)) throw InputError("graph6 padding bits are not zero");
  }
  return Graph(numbered_alphabet(static_cast<int>(n)), edges);
}

std::vector<Graph> read_graph6(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      out.push_back(from_graph6(line));
    } catch (const InputError& e) {
      throw ParseError(number, e.what());
    }
  }
  return out;
}

void write_graph6(std::ostream& out, std::span<const Graph> graphs) {
  for (const auto& g : graphs) out << to_graph6(g) << '\n';
}

}  // namespace wordrep
