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

#include "wordrep/canonical.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "wordrep/errors.hpp"

namespace wordrep {

namespace {

using Mask = std::uint32_t;

std::vector<Mask> masks_of(const Graph& g) {
  if (g.order() > kMaxCanonicalOrder) {
    throw InputError("canonical form supports at most " + std::to_string(kMaxCanonicalOrder) +
                     " vertices");
  }
  std::vector<Mask> adj(g.order(), 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= Mask{1} << v;
    adj[v] |= Mask{1} << u;
  }
  return adj;
}

int bit_count(int n) { return n * (n - 1) / 2; }

// Stable colour refinement; colours are ranks of label-independent signatures.
std::vector<int> refine(const std::vector<Mask>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> color(n, 0);
  int classes = 1;
  for (;;) {
    std::vector<std::vector<int>> sig(n);
    for (int v = 0; v < n; ++v) {
      sig[v].push_back(color[v]);
      std::vector<int> nb;
      for (int u = 0; u < n; ++u)
        if (adj[v] >> u & 1) nb.push_back(color[u]);
      std::sort(nb.begin(), nb.end());
      sig[v].insert(sig[v].end(), nb.begin(), nb.end());
    }
    std::map<std::vector<int>, int> rank;
    for (const auto& s : sig) rank.emplace(s, 0);
    int r = 0;
    for (auto& [s, value] : rank) value = r++;
    for (int v = 0; v < n; ++v) color[v] = rank[sig[v]];
    if (r == classes) return color;
    classes = r;
  }
}

class Canonizer {
 public:
  explicit Canonizer(std::vector<Mask> adj) : adj_(std::move(adj)), n_(static_cast<int>(adj_.size())) {
    const auto color = refine(adj_);
    for (int v = 0; v < n_; ++v) slot_color_.push_back(color[v]);
    std::sort(slot_color_.begin(), slot_color_.end());
    color_ = color;
    placed_.assign(n_, -1);
  }

  std::vector<int> run() {
    search(0, 0, 0);
    return best_perm_;
  }

 private:
  bool twins(int u, int v) const {
    const Mask strip = ~((Mask{1} << u) | (Mask{1} << v));
    return (adj_[u] & strip) == (adj_[v] & strip);
  }

  // `prefix` holds the bits of columns 0..pos-1, `used` the placed vertices.
  void search(int pos, std::uint64_t prefix, Mask used) {
    if (pos == n_) {
      if (!have_best_ || prefix < best_code_) {
        best_code_ = prefix;
        best_perm_ = std::vector<int>(placed_.begin(), placed_.end());
        have_best_ = true;
      }
      return;
    }
    std::vector<int> tried;
    for (int v = 0; v < n_; ++v) {
      if (used >> v & 1 || color_[v] != slot_color_[pos]) continue;
      bool redundant = false;
      for (int t : tried)
        if (twins(t, v)) redundant = true;
      if (redundant) continue;
      tried.push_back(v);

      std::uint64_t next = prefix;
      for (int i = 0; i < pos; ++i) next = next << 1 | (adj_[placed_[i]] >> v & 1);
      if (have_best_) {
        const int shift = bit_count(n_) - bit_count(pos + 1);
        const std::uint64_t best_prefix = best_code_ >> shift;
        if (next > best_prefix) continue;
      }
      placed_[pos] = v;
      search(pos + 1, next, used | Mask{1} << v);
    }
  }

  std::vector<Mask> adj_;
  int n_;
  std::vector<int> color_;
  std::vector<int> slot_color_;
  std::vector<int> placed_;
  std::vector<int> best_perm_;
  std::uint64_t best_code_ = 0;
  bool have_best_ = false;
};

std::uint64_t code_of(const std::vector<Mask>& adj, const std::vector<int>& perm) {
  std::uint64_t code = 0;
  const int n = static_cast<int>(perm.size());
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) code = code << 1 | (adj[perm[i]] >> perm[j] & 1);
  return code;
}

std::vector<int> canonical_perm(const std::vector<Mask>& adj) {
  if (adj.empty()) return {};
  return Canonizer(adj).run();
}

bool connected(const std::vector<Mask>& adj) {
  const int n = static_cast<int>(adj.size());
  if (n == 0) return true;
  Mask seen = 1, frontier = 1;
  while (frontier) {
    Mask next = 0;
    for (int v = 0; v < n; ++v)
      if (frontier >> v & 1) next |= adj[v];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == (Mask{1} << n) - 1;
}

std::vector<Mask> masks_from_code(int n, std::uint64_t code) {
  std::vector<Mask> adj(n, 0);
  int shift = bit_count(n);
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      --shift;
      if (code >> shift & 1) {
        adj[i] |= Mask{1} << j;
        adj[j] |= Mask{1} << i;
      }
    }
  }
  return adj;
}

}  // namespace

std::uint64_t adjacency_code(const Graph& g) {
  const auto adj = masks_of(g);
  std::vector<int> id(g.order());
  for (int i = 0; i < g.order(); ++i) id[i] = i;
  return code_of(adj, id);
}

std::vector<VertexId> canonical_labeling(const Graph& g) { return canonical_perm(masks_of(g)); }

std::uint64_t canonical_code(const Graph& g) {
  const auto adj = masks_of(g);
  return code_of(adj, canonical_perm(adj));
}

Graph canonical_graph(const Graph& g) { return graph_from_code(g.order(), canonical_code(g)); }

Graph graph_from_code(int n, std::uint64_t code) {
  if (n < 0 || n > kMaxCanonicalOrder) throw InputError("graph order out of range for codes");
  const auto adj = masks_from_code(n, code);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (adj[u] >> v & 1) edges.emplace_back(u, v);
  return Graph(numbered_alphabet(n), edges);
}

std::vector<Graph> enumerate_nonisomorphic(int n, bool connected_only) {
  if (n < 0 || n > kMaxEnumerationOrder) {
    throw InputError("built-in enumeration supports 0 <= n <= " +
                     std::to_string(kMaxEnumerationOrder));
  }
  std::set<std::uint64_t> level{0};  // the single graph on 0 vertices
  for (int m = 1; m <= n; ++m) {
    std::set<std::uint64_t> next;
    for (std::uint64_t code : level) {
      const auto base = masks_from_code(m - 1, code);
      for (Mask nb = 0; nb < (Mask{1} << (m - 1)); ++nb) {
        auto adj = base;
        adj.push_back(nb);
        for (int u = 0; u < m - 1; ++u)
          if (nb >> u & 1) adj[u] |= Mask{1} << (m - 1);
        next.insert(code_of(adj, canonical_perm(adj)));
      }
    }
    level = std::move(next);
  }
  std::vector<Graph> out;
  for (std::uint64_t code : level) {
    if (connected_only && !connected(masks_from_code(n, code))) continue;
    out.push_back(graph_from_code(n, code));
  }
  return out;
}

}  // namespace wordrep
