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

#include "wordrep/orientation.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <functional>
#include <numeric>

#include "wordrep/errors.hpp"

namespace wordrep {

Orientation::Orientation(Graph base, std::span<const Arc> arcs)
    : base_(std::move(base)),
      out_(base_.order(), VertexSet(base_.order())),
      in_(base_.order(), VertexSet(base_.order())) {
  const int n = base_.order();
  for (auto [a, b] : arcs) {
    if (a < 0 || b < 0 || a >= n || b >= n) throw InputError("arc endpoint out of range");
    if (!base_.adjacent(a, b)) {
      throw InputError("arc " + base_.label(a) + "->" + base_.label(b) + " is not an edge");
    }
    if (out_[a][b]) throw InputError("duplicate arc " + base_.label(a) + "->" + base_.label(b));
    if (out_[b][a]) {
      throw InputError("conflicting arcs between " + base_.label(a) + " and " + base_.label(b));
    }
    out_[a].set(b);
    in_[b].set(a);
  }
  for (auto [u, v] : base_.edges()) {
    if (!out_[u][v] && !out_[v][u]) {
      throw InputError("edge " + base_.label(u) + "-" + base_.label(v) + " has no direction");
    }
  }
}

Orientation Orientation::from_labels(
    Graph base, std::span<const std::pair<std::string, std::string>> arcs) {
  std::vector<Arc> idx;
  idx.reserve(arcs.size());
  for (const auto& [a, b] : arcs) idx.emplace_back(base.index(a), base.index(b));
  return Orientation(std::move(base), idx);
}

std::vector<Arc> Orientation::arcs() const {
  std::vector<Arc> out;
  for (VertexId a = 0; a < order(); ++a)
    for (VertexId b : members(out_[a])) out.emplace_back(a, b);
  return out;
}

Orientation Orientation::reversed_arc(Arc arc) const {
  auto all = arcs();
  auto it = std::find(all.begin(), all.end(), arc);
  if (it == all.end()) throw InputError("arc not present");
  std::swap(it->first, it->second);
  return Orientation(base_, all);
}

Orientation restrict_orientation(const Orientation& d, const VertexSet& subset) {
  Graph sub = induced_subgraph(d.base(), subset);
  std::vector<Arc> arcs;
  for (auto [a, b] : d.arcs()) {
    if (subset[a] && subset[b]) {
      arcs.emplace_back(sub.index(d.base().label(a)), sub.index(d.base().label(b)));
    }
  }
  return Orientation(std::move(sub), arcs);
}

std::optional<std::vector<VertexId>> topological_order(const Orientation& d) {
  const int n = d.order();
  std::vector<int> indegree(n);
  for (VertexId v = 0; v < n; ++v) indegree[v] = static_cast<int>(d.in(v).count());
  // Smallest available index first, so the order is deterministic.
  std::vector<VertexId> ready;
  for (VertexId v = n - 1; v >= 0; --v)
    if (indegree[v] == 0) ready.push_back(v);
  std::vector<VertexId> order;
  while (!ready.empty()) {
    std::sort(ready.begin(), ready.end(), std::greater<>());
    VertexId v = ready.back();
    ready.pop_back();
    order.push_back(v);
    for (VertexId w : members(d.out(v)))
      if (--indegree[w] == 0) ready.push_back(w);
  }
  if (static_cast<int>(order.size()) != n) return std::nullopt;
  return order;
}

bool is_acyclic(const Orientation& d) { return topological_order(d).has_value(); }

std::vector<VertexSet> reachability(const Orientation& d) {
  auto order = topological_order(d);
  if (!order) throw PreconditionError("orientation has a directed cycle");
  std::vector<VertexSet> reach(d.order(), VertexSet(d.order()));
  for (auto it = order->rbegin(); it != order->rend(); ++it) {
    for (VertexId w : members(d.out(*it))) {
      reach[*it].set(w);
      reach[*it] |= reach[w];
    }
  }
  return reach;
}

namespace {

// Shortest directed path from `from` to `to` (inclusive), BFS in index order.
std::vector<VertexId> shortest_path(const Orientation& d, VertexId from, VertexId to) {
  std::vector<VertexId> parent(d.order(), -1);
  std::deque<VertexId> queue{from};
  parent[from] = from;
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    if (v == to) break;
    for (VertexId w : members(d.out(v))) {
      if (parent[w] < 0) {
        parent[w] = v;
        queue.push_back(w);
      }
    }
  }
  std::vector<VertexId> path{to};
  while (path.back() != from) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

std::optional<ShortcutWitness> find_shortcut(const Orientation& d) {
  const auto reach = reachability(d);
  const int n = d.order();
  std::vector<VertexSet> ancestors(n, VertexSet(n));
  for (VertexId v = 0; v < n; ++v)
    for (VertexId w : members(reach[v])) ancestors[w].set(v);

  for (auto [a, b] : d.arcs()) {
    VertexSet between = reach[a] & ancestors[b];
    between.set(a);
    between.set(b);
    for (VertexId u : members(between)) {
      const VertexSet bad = (reach[u] & between) - d.base().neighbors(u);
      if (bad.none()) continue;
      const VertexId w = static_cast<VertexId>(bad.find_first());
      std::vector<VertexId> path = shortest_path(d, a, u);
      auto mid = shortest_path(d, u, w);
      path.insert(path.end(), mid.begin() + 1, mid.end());
      auto tail = shortest_path(d, w, b);
      path.insert(path.end(), tail.begin() + 1, tail.end());
      return ShortcutWitness{std::move(path), {u, w}};
    }
  }
  return std::nullopt;
}

bool is_semi_transitive(const Orientation& d) {
  return is_acyclic(d) && !find_shortcut(d).has_value();
}

bool is_transitive(const Orientation& d) {
  for (auto [a, b] : d.arcs()) {
    if (!d.out(b).is_subset_of(d.out(a))) return false;
  }
  return true;
}

std::vector<std::vector<VertexId>> directed_paths_with_arcs(const Orientation& d, int arcs) {
  if (arcs < 0) throw InputError("path length must be non-negative");
  if (!is_acyclic(d)) throw PreconditionError("orientation has a directed cycle");
  std::vector<std::vector<VertexId>> paths;
  std::vector<VertexId> current;
  std::function<void(VertexId)> walk = [&](VertexId v) {
    current.push_back(v);
    if (static_cast<int>(current.size()) == arcs + 1) {
      paths.push_back(current);
    } else {
      for (VertexId w : members(d.out(v))) walk(w);
    }
    current.pop_back();
  };
  for (VertexId v = 0; v < d.order(); ++v) walk(v);
  return paths;
}

Orientation orient_by_coloring(const Graph& g, std::span<const int> colors) {
  if (static_cast<int>(colors.size()) != g.order()) throw InputError("colouring has the wrong size");
  std::vector<Arc> arcs;
  for (auto [u, v] : g.edges()) {
    if (colors[u] == colors[v]) {
      throw InputError("improper colouring: " + g.label(u) + " and " + g.label(v) +
                       " share colour " + std::to_string(colors[u]));
    }
    if (colors[u] < colors[v]) arcs.emplace_back(u, v);
    else arcs.emplace_back(v, u);
  }
  return Orientation(g, arcs);
}

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(int v) { return Mask{1} << v; }

struct BudgetExhausted {};

void require_small(const Graph& g) {
  if (g.order() > 64) throw InputError("orientation search supports at most 64 vertices");
}

std::vector<Mask> neighbor_masks(const Graph& g) {
  std::vector<Mask> m(g.order(), 0);
  for (auto [u, v] : g.edges()) {
    m[u] |= bit(v);
    m[v] |= bit(u);
  }
  return m;
}

// Edges in an order that keeps the explored part connected: vertices are
// visited breadth-first starting from the highest degree, ties by index and
// neighbours taken by decreasing degree; an edge is scheduled as soon as both
// endpoints are visited.
std::vector<Edge> search_order(const Graph& g) {
  const int n = g.order();
  std::vector<VertexId> by_degree(n);
  std::iota(by_degree.begin(), by_degree.end(), 0);
  std::stable_sort(by_degree.begin(), by_degree.end(),
                   [&](VertexId a, VertexId b) { return g.degree(a) > g.degree(b); });
  std::vector<bool> visited(n, false);
  std::vector<Edge> order;
  for (VertexId root : by_degree) {
    if (visited[root]) continue;
    std::deque<VertexId> queue{root};
    visited[root] = true;
    std::vector<VertexId> seen_order;
    while (!queue.empty()) {
      VertexId v = queue.front();
      queue.pop_front();
      for (VertexId u : seen_order)
        if (g.adjacent(u, v)) order.emplace_back(std::min(u, v), std::max(u, v));
      seen_order.push_back(v);
      auto next = members(g.neighbors(v));
      std::stable_sort(next.begin(), next.end(),
                       [&](VertexId a, VertexId b) { return g.degree(a) > g.degree(b); });
      for (VertexId w : next) {
        if (!visited[w]) {
          visited[w] = true;
          queue.push_back(w);
        }
      }
    }
  }
  return order;
}

Orientation to_orientation(const Graph& g, const std::vector<Mask>& out) {
  std::vector<Arc> arcs;
  for (VertexId a = 0; a < g.order(); ++a)
    for (Mask m = out[a]; m; m &= m - 1) arcs.emplace_back(a, std::countr_zero(m));
  return Orientation(g, arcs);
}

class SemiTransitiveSearch {
 public:
  SemiTransitiveSearch(const Graph& g, std::uint64_t budget)
      : g_(g), n_(g.order()), nbr_(neighbor_masks(g)), edges_(search_order(g)), budget_(budget) {
    out_.assign(n_, 0);
    reach_.assign(n_, 0);
    anc_.assign(n_, 0);
  }

  SearchResult<Orientation> run() {
    SearchResult<Orientation> result;
    try {
      const bool ok = dfs(true);
      result.outcome = ok ? Outcome::found : Outcome::none;
      if (ok) result.value = to_orientation(g_, out_);
    } catch (const BudgetExhausted&) {
      result.outcome = Outcome::unknown;
    }
    result.nodes = nodes_;
    return result;
  }

 private:
  struct Snapshot {
    std::vector<Mask> out, reach, anc;
  };

  bool assigned(VertexId u, VertexId v) const { return ((out_[u] | out_[v]) & (bit(u) | bit(v))) != 0; }

  bool add_arc(VertexId a, VertexId b) {
    if (out_[b] & bit(a)) return false;
    if (out_[a] & bit(b)) return true;
    if (reach_[b] & bit(a)) return false;
    out_[a] |= bit(b);
    const Mask up = anc_[a] | bit(a);
    const Mask down = reach_[b] | bit(b);
    for (Mask m = up; m; m &= m - 1) reach_[std::countr_zero(m)] |= down;
    for (Mask m = down; m; m &= m - 1) anc_[std::countr_zero(m)] |= up;
    return true;
  }

  // Adds a -> b, then every arc forced by reachability, then checks that no
  // assigned arc already spans a non-adjacent comparable pair.
  bool assign(VertexId a, VertexId b) {
    if (!add_arc(a, b)) return false;
    bool changed = true;
    while (changed) {
      changed = false;
      for (auto [u, v] : edges_) {
        if (assigned(u, v)) continue;
        if (reach_[u] & bit(v)) {
          if (!add_arc(u, v)) return false;
          changed = true;
        } else if (reach_[v] & bit(u)) {
          if (!add_arc(v, u)) return false;
          changed = true;
        }
      }
    }
    return shortcut_free();
  }

  bool shortcut_free() const {
    for (VertexId p = 0; p < n_; ++p) {
      for (Mask m = out_[p]; m; m &= m - 1) {
        const VertexId q = std::countr_zero(m);
        const Mask between = (reach_[p] & anc_[q]) | bit(p) | bit(q);
        for (Mask s = between; s; s &= s - 1) {
          const VertexId u = std::countr_zero(s);
          if (reach_[u] & between & ~nbr_[u]) return false;
        }
      }
    }
    return true;
  }

  bool dfs(bool root) {
    if (++nodes_ > budget_) throw BudgetExhausted{};
    auto it = std::find_if(edges_.begin(), edges_.end(),
                           [&](const Edge& e) { return !assigned(e.first, e.second); });
    if (it == edges_.end()) return true;
    const auto [u, v] = *it;
    const Snapshot saved{out_, reach_, anc_};
    if (assign(u, v) && dfs(false)) return true;
    out_ = saved.out;
    reach_ = saved.reach;
    anc_ = saved.anc;
    // Reversing every arc preserves semi-transitivity, so the very first
    // choice needs only one direction.
    if (root) return false;
    if (assign(v, u) && dfs(false)) return true;
    out_ = saved.out;
    reach_ = saved.reach;
    anc_ = saved.anc;
    return false;
  }

  const Graph& g_;
  int n_;
  std::vector<Mask> nbr_;
  std::vector<Edge> edges_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<Mask> out_, reach_, anc_;
};

class TransitiveSearch {
 public:
  TransitiveSearch(const Graph& g, std::uint64_t budget)
      : g_(g), n_(g.order()), nbr_(neighbor_masks(g)), edges_(g.edges()), budget_(budget) {
    out_.assign(n_, 0);
  }

  SearchResult<Orientation> run() {
    SearchResult<Orientation> result;
    try {
      const bool ok = dfs();
      result.outcome = ok ? Outcome::found : Outcome::none;
      if (ok) result.value = to_orientation(g_, out_);
    } catch (const BudgetExhausted&) {
      result.outcome = Outcome::unknown;
    }
    result.nodes = nodes_;
    return result;
  }

 private:
  // Orients a -> b and closes under the forcing rules of transitive
  // orientations:
  //   a -> b, a ~ c, b !~ c   =>  a -> c
  //   a -> b, b ~ c, a !~ c   =>  c -> b
  //   a -> b -> c             =>  a -> c (and a ~ c must hold)
  bool assign(VertexId a0, VertexId b0) {
    std::vector<Arc> queue{{a0, b0}};
    while (!queue.empty()) {
      auto [a, b] = queue.back();
      queue.pop_back();
      if (out_[b] & bit(a)) return false;
      if (out_[a] & bit(b)) continue;
      out_[a] |= bit(b);
      for (Mask m = nbr_[a] & ~nbr_[b] & ~bit(b); m; m &= m - 1) queue.emplace_back(a, std::countr_zero(m));
      for (Mask m = nbr_[b] & ~nbr_[a] & ~bit(a); m; m &= m - 1) queue.emplace_back(std::countr_zero(m), b);
      for (Mask m = out_[b]; m; m &= m - 1) {
        const VertexId c = std::countr_zero(m);
        if (!(nbr_[a] & bit(c))) return false;
        queue.emplace_back(a, c);
      }
      for (VertexId c = 0; c < n_; ++c) {
        if (!(out_[c] & bit(a))) continue;
        if (!(nbr_[c] & bit(b))) return false;
        queue.emplace_back(c, b);
      }
    }
    return true;
  }

  bool dfs() {
    if (++nodes_ > budget_) throw BudgetExhausted{};
    auto it = std::find_if(edges_.begin(), edges_.end(), [&](const Edge& e) {
      return !((out_[e.first] & bit(e.second)) || (out_[e.second] & bit(e.first)));
    });
    if (it == edges_.end()) return is_transitive(to_orientation(g_, out_));
    const auto [u, v] = *it;
    const auto saved = out_;
    if (assign(u, v) && dfs()) return true;
    out_ = saved;
    if (assign(v, u) && dfs()) return true;
    out_ = saved;
    return false;
  }

  const Graph& g_;
  int n_;
  std::vector<Mask> nbr_;
  std::vector<Edge> edges_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<Mask> out_;
};

}  // namespace

SearchResult<Orientation> search_semi_transitive(const Graph& g, std::uint64_t node_budget) {
  require_small(g);
  auto result = SemiTransitiveSearch(g, node_budget).run();
  if (result.found() && !is_semi_transitive(*result.value)) {
    throw VerificationError("semi-transitive search produced an invalid orientation");
  }
  return result;
}

SearchResult<Orientation> search_transitive(const Graph& g, std::uint64_t node_budget) {
  require_small(g);
  return TransitiveSearch(g, node_budget).run();
}

}  // namespace wordrep
