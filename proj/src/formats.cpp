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

#include "wordrep/formats.hpp"

#include <fstream>
#include <sstream>

#include "wordrep/errors.hpp"

namespace wordrep {

namespace {

struct Line {
  int number;
  std::string keyword;
  std::vector<std::string> tokens;
};

std::vector<std::string> split(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

std::string_view strip_comment(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  return line;
}

std::vector<std::pair<int, std::string>> content_lines(std::string_view text) {
  std::vector<std::pair<int, std::string>> out;
  std::istringstream in{std::string(text)};
  int number = 0;
  for (std::string line; std::getline(in, line);) {
    ++number;
    std::string_view body = strip_comment(line);
    if (body.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    out.emplace_back(number, std::string(body));
  }
  return out;
}

std::vector<Line> keyword_lines(std::string_view text) {
  std::vector<Line> out;
  for (auto& [number, body] : content_lines(text)) {
    const auto colon = body.find(':');
    if (colon == std::string::npos) throw ParseError(number, "expected '<keyword>: ...'");
    auto kw = split(body.substr(0, colon));
    if (kw.size() != 1) throw ParseError(number, "malformed keyword");
    out.push_back({number, kw[0], split(body.substr(colon + 1))});
  }
  return out;
}

// Shared reader for the vertices line plus two-label pair lines.
std::pair<Graph, std::vector<std::pair<int, Edge>>> read_pairs(std::string_view text,
                                                               std::string_view pair_keyword) {
  const auto lines = keyword_lines(text);
  if (lines.empty() || lines.front().keyword != "vertices") {
    throw ParseError(lines.empty() ? 1 : lines.front().number, "file must start with 'vertices:'");
  }
  AlphabetPtr alphabet;
  try {
    alphabet = make_alphabet(lines.front().tokens);
  } catch (const InputError& e) {
    throw ParseError(lines.front().number, e.what());
  }
  std::vector<std::pair<int, Edge>> pairs;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& l = lines[i];
    if (l.keyword != pair_keyword) {
      throw ParseError(l.number, "unexpected keyword '" + l.keyword + "'");
    }
    if (l.tokens.size() != 2) throw ParseError(l.number, "expected two vertex labels");
    auto u = alphabet->find(l.tokens[0]);
    auto v = alphabet->find(l.tokens[1]);
    if (!u || !v) throw ParseError(l.number, "unknown vertex label");
    if (*u == *v) throw ParseError(l.number, "self-loop");
    pairs.push_back({l.number, {*u, *v}});
  }
  std::vector<Edge> edges;
  for (auto& [number, e] : pairs) edges.push_back(e);
  try {
    return {Graph(alphabet, edges), std::move(pairs)};
  } catch (const InputError& e) {
    throw ParseError(lines.back().number, e.what());
  }
}

std::string vertices_line(const Graph& g) {
  std::string out = "vertices:";
  for (const auto& l : g.alphabet()->labels()) out += " " + l;
  return out + "\n";
}

}  // namespace

Graph parse_graph(std::string_view text) {
  auto [g, pairs] = read_pairs(text, "edge");
  std::vector<Edge> seen;
  for (auto& [number, e] : pairs) {
    Edge key{std::min(e.first, e.second), std::max(e.first, e.second)};
    if (std::find(seen.begin(), seen.end(), key) != seen.end()) {
      throw ParseError(number, "duplicate edge");
    }
    seen.push_back(key);
  }
  return g;
}

std::string format_graph(const Graph& g) {
  std::string out = vertices_line(g);
  for (auto [u, v] : g.edges()) out += "edge: " + g.label(u) + " " + g.label(v) + "\n";
  return out;
}

Orientation parse_orientation(std::string_view text) {
  auto [g, pairs] = read_pairs(text, "arc");
  std::vector<Arc> arcs;
  for (auto& [number, e] : pairs) arcs.push_back(e);
  try {
    return Orientation(g, arcs);
  } catch (const InputError& e) {
    throw ParseError(pairs.empty() ? 1 : pairs.back().first, e.what());
  }
}

std::string format_orientation(const Orientation& d) {
  std::string out = vertices_line(d.base());
  for (auto [u, v] : d.arcs()) out += "arc: " + d.base().label(u) + " " + d.base().label(v) + "\n";
  return out;
}

std::vector<Word> parse_words(std::string_view text, const AlphabetPtr& alphabet) {
  std::vector<Word> out;
  for (auto& [number, body] : content_lines(text)) {
    try {
      out.push_back(Word::parse(alphabet, body));
    } catch (const InputError& e) {
      throw ParseError(number, e.what());
    }
  }
  return out;
}

std::string format_words(const std::vector<Word>& words, bool compact) {
  std::string out;
  for (const auto& w : words) out += w.to_string(compact) + "\n";
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace wordrep
