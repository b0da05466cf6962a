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

#include "wordrep/graph.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "wordrep/errors.hpp"

namespace wordrep {

std::vector<VertexId> members(const VertexSet& set) {
  std::vector<VertexId> out;
  out.reserve(set.count());
  for (auto i = set.find_first(); i != VertexSet::npos; i = set.find_next(i)) {
    out.push_back(static_cast<VertexId>(i));
  }
  return out;
}

Alphabet::Alphabet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  index_.reserve(labels_.size());
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    const std::string& l = labels_[i];
    if (l.empty()) throw InputError("empty vertex label");
    if (std::any_of(l.begin(), l.end(),
                    [](unsigned char c) { return std::isspace(c) != 0; })) {
      throw InputError("vertex label contains whitespace: '" + l + "'");
    }
    if (!index_.emplace(l, static_cast<VertexId>(i)).second) {
      throw InputError("duplicate vertex label: " + l);
    }
    if (l.size() != 1) single_char_ = false;
  }
}

std::optional<VertexId> Alphabet::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

VertexId Alphabet::index(std::string_view label) const {
  if (auto v = find(label)) return *v;
  throw InputError("unknown vertex label: " + std::string(label));
}

bool Alphabet::same_labels(const Alphabet& other) const {
  if (other.size() != size()) return false;
  return std::all_of(labels_.begin(), labels_.end(),
                     [&](const std::string& l) { return other.find(l).has_value(); });
}

AlphabetPtr make_alphabet(std::vector<std::string> labels) {
  return std::make_shared<const Alphabet>(std::move(labels));
}

AlphabetPtr numbered_alphabet(int n, std::string_view prefix) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int i = 1; i <= n; ++i) labels.push_back(std::string(prefix) + std::to_string(i));
  return make_alphabet(std::move(labels));
}

Graph::Graph() : alphabet_(make_alphabet({})) {}

Graph::Graph(AlphabetPtr alphabet, std::span<const Edge> edges)
    : alphabet_(std::move(alphabet)) {
  if (!alphabet_) throw InputError("graph without alphabet");
  const int n = alphabet_->size();
  adj_.assign(n, VertexSet(n));
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw InputError("edge endpoint out of range");
    if (u == v) throw InputError("self-loop at " + alphabet_->label(u));
    if (!adj_[u][v]) ++edge_count_;
    adj_[u].set(v);
    adj_[v].set(u);
  }
}

Graph Graph::from_labels(std::vector<std::string> labels,
                         std::span<const std::pair<std::string, std::string>> edges) {
  auto alphabet = make_alphabet(std::move(labels));
  std::vector<Edge> idx;
  idx.reserve(edges.size());
  for (const auto& [a, b] : edges) idx.emplace_back(alphabet->index(a), alphabet->index(b));
  return Graph(std::move(alphabet), idx);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (VertexId u = 0; u < order(); ++u) {
    for (auto v = adj_[u].find_next(u); v != VertexSet::npos; v = adj_[u].find_next(v)) {
      out.emplace_back(u, static_cast<VertexId>(v));
    }
  }
  return out;
}

std::vector<Edge> Graph::non_edges() const {
  std::vector<Edge> out;
  for (VertexId u = 0; u < order(); ++u) {
    for (VertexId v = u + 1; v < order(); ++v) {
      if (!adj_[u][v]) out.emplace_back(u, v);
    }
  }
  return out;
}

VertexSet Graph::all_vertices() const {
  VertexSet s(order());
  s.set();
  return s;
}

VertexSet Graph::vertex_set(std::span<const std::string> labels) const {
  VertexSet s(order());
  for (const auto& l : labels) s.set(index(l));
  return s;
}

bool operator==(const Graph& a, const Graph& b) {
  if (!a.alphabet_->same_labels(*b.alphabet_)) return false;
  if (a.size() != b.size()) return false;
  std::vector<VertexId> map(a.order());
  for (VertexId v = 0; v < a.order(); ++v) map[v] = b.index(a.label(v));
  for (auto [u, v] : a.edges()) {
    if (!b.adjacent(map[u], map[v])) return false;
  }
  return true;
}

VertexSet neighbors_in(const Graph& g, VertexId v, const VertexSet& within) {
  if (within.size() != static_cast<std::size_t>(g.order())) {
    throw InputError("vertex set size does not match graph order");
  }
  return g.neighbors(v) & within;
}

Graph induced_subgraph(const Graph& g, const VertexSet& subset) {
  if (subset.size() != static_cast<std::size_t>(g.order())) {
    throw InputError("vertex set size does not match graph order");
  }
  const auto kept = members(subset);
  std::vector<VertexId> position(g.order(), -1);
  std::vector<std::string> labels;
  labels.reserve(kept.size());
  for (std::size_t i = 0; i < kept.size(); ++i) {
    position[kept[i]] = static_cast<VertexId>(i);
    labels.push_back(g.label(kept[i]));
  }
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) {
    if (position[u] >= 0 && position[v] >= 0) edges.emplace_back(position[u], position[v]);
  }
  return Graph(make_alphabet(std::move(labels)), edges);
}

Graph remove_vertex(const Graph& g, VertexId v) {
  auto s = g.all_vertices();
  s.reset(v);
  return induced_subgraph(g, s);
}

Graph with_edges(const Graph& g, std::span<const Edge> extra) {
  auto edges = g.edges();
  edges.insert(edges.end(), extra.begin(), extra.end());
  return Graph(g.alphabet(), edges);
}

Graph without_edges(const Graph& g, std::span<const Edge> removed) {
  std::vector<VertexSet> drop(g.order(), VertexSet(g.order()));
  for (auto [u, v] : removed) {
    drop[u].set(v);
    drop[v].set(u);
  }
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) {
    if (!drop[u][v]) edges.emplace_back(u, v);
  }
  return Graph(g.alphabet(), edges);
}

Graph complement(const Graph& g) { return Graph(g.alphabet(), g.non_edges()); }

bool is_clique(const Graph& g, const VertexSet& s) {
  for (VertexId v : members(s)) {
    auto others = s;
    others.reset(v);
    if (!others.is_subset_of(g.neighbors(v))) return false;
  }
  return true;
}

bool is_independent(const Graph& g, const VertexSet& s) {
  for (VertexId v : members(s)) {
    if (g.neighbors(v).intersects(s)) return false;
  }
  return true;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  VertexSet seen(g.order());
  std::vector<VertexId> stack{0};
  seen.set(0);
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (VertexId w : members(g.neighbors(v) - seen)) {
      seen.set(w);
      stack.push_back(w);
    }
  }
  return seen.all();
}

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(numbered_alphabet(n), edges);
}

Graph empty_graph(int n) { return Graph(numbered_alphabet(n), std::span<const Edge>{}); }

Graph cycle_graph(int n, std::string_view prefix) {
  if (n < 3) throw InputError("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(numbered_alphabet(n, prefix), edges);
}

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(numbered_alphabet(n), edges);
}

Graph wheel_graph(int n) {
  if (n < 3) throw InputError("wheel needs a rim of at least 3 vertices");
  std::vector<std::string> labels{"0"};
  for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  std::vector<Edge> edges;
  for (int i = 1; i <= n; ++i) {
    edges.emplace_back(0, i);
    edges.emplace_back(i, i % n + 1);
  }
  return Graph(make_alphabet(std::move(labels)), edges);
}

}  // namespace wordrep
