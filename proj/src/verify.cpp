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

#include "wordrep/verify.hpp"

#include <algorithm>
#include <functional>

#include "wordrep/errors.hpp"

namespace wordrep {

std::string describe(const Verdict& verdict, const Graph& g, int k) {
  if (verdict.holds) return "verified at k=" + std::to_string(k);
  const auto& w = *verdict.witness;
  std::string s = "pair {" + g.label(w.x) + "," + g.label(w.y) + "}: " +
                  std::to_string(w.count) + " occurrence(s) of 11, expected ";
  s += w.expected_edge ? "an edge (<= " + std::to_string(k) + ")"
                       : "a non-edge (> " + std::to_string(k) + ")";
  return s;
}

Graph graph_of_word(const Word& w, int k) {
  if (k < 0) throw InputError("k must be non-negative");
  const auto m = multiplicities(w);
  for (VertexId v = 0; v < static_cast<VertexId>(m.size()); ++v) {
    if (m[v] == 0) throw InputError("letter " + w.alphabet()->label(v) + " does not occur in the word");
  }
  const int n = w.alphabet()->size();
  const auto counts = pattern_11_matrix(w);
  std::vector<Edge> edges;
  for (VertexId x = 0; x < n; ++x)
    for (VertexId y = x + 1; y < n; ++y)
      if (counts[x * n + y] <= k) edges.emplace_back(x, y);
  return Graph(w.alphabet(), edges);
}

Verdict verify_k11(const Word& w, const Graph& g, int k) {
  if (!w.alphabet()->same_labels(*g.alphabet())) {
    throw InputError("word alphabet does not match the graph's vertices");
  }
  const Word local = *w.alphabet() == *g.alphabet() ? w : relabel(w, g.alphabet());
  const auto m = multiplicities(local);
  const int n = g.order();
  for (VertexId v = 0; v < n; ++v) {
    if (m[v] == 0) throw InputError("letter " + g.label(v) + " does not occur in the word");
  }
  const auto counts = pattern_11_matrix(local);
  for (VertexId x = 0; x < n; ++x) {
    for (VertexId y = x + 1; y < n; ++y) {
      const int c = counts[x * n + y];
      if ((c <= k) != g.adjacent(x, y)) return {false, PairWitness{x, y, c, g.adjacent(x, y)}};
    }
  }
  return {true, std::nullopt};
}

bool alternates(const Word& w, VertexId x, VertexId y) {
  const Word sub = induced_subword(w, x, y);
  for (std::size_t i = 1; i < sub.length(); ++i) {
    if (sub[i] == sub[i - 1]) return false;
  }
  return true;
}

bool is_t_uniform(const Word& w, int t) {
  const auto m = multiplicities(w);
  return std::all_of(m.begin(), m.end(), [t](int c) { return c == t; });
}

std::optional<int> uniformity(const Word& w) {
  const auto m = multiplicities(w);
  if (m.empty()) return 0;
  if (std::all_of(m.begin(), m.end(), [&](int c) { return c == m.front(); })) return m.front();
  return std::nullopt;
}

bool is_permutational(const Word& w) {
  const std::size_t n = w.alphabet()->size();
  if (n == 0) return w.empty();
  if (w.length() % n != 0) return false;
  std::vector<std::size_t> seen(n, 0);
  for (std::size_t block = 0; block * n < w.length(); ++block) {
    for (std::size_t i = 0; i < n; ++i) {
      const VertexId v = w[block * n + i];
      if (seen[v] == block + 1) return false;
      seen[v] = block + 1;
    }
  }
  return true;
}

std::optional<std::vector<VertexId>> find_isomorphism(const Graph& g, const Graph& h) {
  const int n = g.order();
  if (n != h.order() || g.size() != h.size()) return std::nullopt;

  // Invariant per vertex: degree plus sorted neighbour degrees.
  auto signature = [](const Graph& x, VertexId v) {
    std::vector<int> s;
    for (VertexId u : members(x.neighbors(v))) s.push_back(x.degree(u));
    std::sort(s.begin(), s.end());
    s.insert(s.begin(), x.degree(v));
    return s;
  };
  std::vector<std::vector<int>> sg(n), sh(n);
  for (VertexId v = 0; v < n; ++v) {
    sg[v] = signature(g, v);
    sh[v] = signature(h, v);
  }
  {
    auto a = sg, b = sh;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }

  std::vector<VertexId> map(n, -1);
  std::vector<bool> used(n, false);
  std::function<bool(VertexId)> extend = [&](VertexId v) {
    if (v == n) return true;
    for (VertexId c = 0; c < n; ++c) {
      if (used[c] || sg[v] != sh[c]) continue;
      bool ok = true;
      for (VertexId u = 0; u < v && ok; ++u) ok = g.adjacent(u, v) == h.adjacent(map[u], c);
      if (!ok) continue;
      map[v] = c;
      used[c] = true;
      if (extend(v + 1)) return true;
      used[c] = false;
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return map;
}

bool are_isomorphic(const Graph& g, const Graph& h) { return find_isomorphism(g, h).has_value(); }

bool induces_copy(const Graph& g, const VertexSet& subset, const Graph& h) {
  if (static_cast<int>(subset.count()) != h.order()) {
    throw InputError("subset has " + std::to_string(subset.count()) + " vertices, pattern has " +
                     std::to_string(h.order()));
  }
  return are_isomorphic(induced_subgraph(g, subset), h);
}

}  // namespace wordrep
