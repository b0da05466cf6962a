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

#include "wordrep/search.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <string>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "wordrep/canonical.hpp"
#include "wordrep/errors.hpp"
#include "wordrep/graph6.hpp"
#include "wordrep/verify.hpp"

namespace wordrep {

namespace {

struct BudgetExhausted {};

class Counter {
 public:
  explicit Counter(std::uint64_t budget) : budget_(budget) {}
  void tick() {
    if (++nodes_ > budget_) throw BudgetExhausted{};
  }
  std::uint64_t nodes() const noexcept { return nodes_; }
  std::uint64_t left() const noexcept { return nodes_ >= budget_ ? 0 : budget_ - nodes_; }

 private:
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
};

constexpr int kMaxSearchOrder = 64;

// Depth-first construction of a word of fixed length whose pair counts match
// the graph at level k. Failed states are memoised together with the
// remaining length they failed for, so one instance serves several lengths.
class WordSearch {
 public:
  WordSearch(const Graph& g, int k, int cap, Counter& counter)
      : n_(g.order()), k_(k), cap_(cap), counter_(counter) {
    if (n_ > kMaxSearchOrder) throw InputError("word search supports at most 64 vertices");
    pid_.assign(n_ * n_, -1);
    for (VertexId x = 0; x < n_; ++x) {
      for (VertexId y = x + 1; y < n_; ++y) {
        const int p = static_cast<int>(edge_.size());
        pid_[x * n_ + y] = pid_[y * n_ + x] = p;
        edge_.push_back(g.adjacent(x, y));
        if (!g.adjacent(x, y)) non_edges_.push_back({x, y, p});
      }
    }
  }

  void fix_first_letter(VertexId v) { first_letter_ = v; }

  std::optional<std::vector<VertexId>> run(int length) {
    length_ = length;
    cnt_.assign(n_, 0);
    last_.assign(n_, -1);
    pc_.assign(edge_.size(), 0);
    word_.clear();
    changed_.clear();
    missing_ = n_;
    if (dfs(0)) return word_;
    return std::nullopt;
  }

 private:
  struct NonEdge {
    VertexId x, y;
    int pid;
  };

  int avail(VertexId v) const {
    const int cap = cap_ > 0 ? cap_ : length_;
    return cap - cnt_[v] - (cnt_[v] == 0 ? 1 : 0);
  }

  bool bound_ok(int remaining) const {
    int need = missing_;
    std::uint64_t matched = 0;
    for (int d = k_ + 1; d >= 1; --d) {
      for (const auto& e : non_edges_) {
        if (k_ + 1 - pc_[e.pid] != d) continue;
        if (avail(e.x) + avail(e.y) < d) return false;
        if ((matched >> e.x & 1) || (matched >> e.y & 1)) continue;
        matched |= (std::uint64_t{1} << e.x) | (std::uint64_t{1} << e.y);
        need += d;
      }
    }
    return need <= remaining;
  }

  std::string key() const {
    std::vector<VertexId> order;
    for (VertexId v = 0; v < n_; ++v)
      if (cnt_[v] > 0) order.push_back(v);
    std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) { return last_[a] < last_[b]; });
    std::string out;
    out.reserve(order.size() + 1 + pc_.size() + (cap_ > 0 ? n_ : 0));
    for (VertexId v : order) out.push_back(static_cast<char>(v));
    out.push_back(static_cast<char>(0x7f));
    for (auto c : pc_) out.push_back(static_cast<char>(c));
    if (cap_ > 0)
      for (auto c : cnt_) out.push_back(static_cast<char>(c));
    return out;
  }

  // Number of unmet non-edge increments placing v would supply, or -1 when
  // placing v breaks an edge.
  int score(VertexId v) const {
    if (cnt_[v] == 0) return 0;
    int s = 0;
    for (VertexId y = 0; y < n_; ++y) {
      if (y == v || last_[y] >= last_[v]) continue;
      const int p = pid_[v * n_ + y];
      if (edge_[p]) {
        if (pc_[p] >= k_) return -1;
      } else if (pc_[p] <= k_) {
        ++s;
      }
    }
    return s;
  }

  void place(VertexId v, int pos) {
    if (cnt_[v] > 0) {
      for (VertexId y = 0; y < n_; ++y) {
        if (y == v || last_[y] >= last_[v]) continue;
        const int p = pid_[v * n_ + y];
        if (edge_[p] || pc_[p] <= k_) {
          ++pc_[p];
          changed_.push_back(p);
        }
      }
    } else {
      --missing_;
    }
    ++cnt_[v];
    last_[v] = pos;
    word_.push_back(v);
  }

  void unplace(VertexId v, int prev_last, std::size_t mark) {
    while (changed_.size() > mark) {
      --pc_[changed_.back()];
      changed_.pop_back();
    }
    word_.pop_back();
    last_[v] = prev_last;
    if (--cnt_[v] == 0) ++missing_;
  }

  bool dfs(int pos) {
    counter_.tick();
    const int remaining = length_ - pos;
    if (!bound_ok(remaining)) return false;
    if (remaining == 0) return true;
    std::string k = key();
    if (auto it = memo_.find(k); it != memo_.end() && it->second >= remaining) return false;

    std::vector<std::pair<int, VertexId>> moves;
    for (VertexId v = 0; v < n_; ++v) {
      if (pos == 0 && first_letter_ >= 0 && v != first_letter_) continue;
      if (cap_ > 0 && cnt_[v] >= cap_) continue;
      const int s = score(v);
      if (s >= 0) moves.emplace_back(-s, v);
    }
    std::stable_sort(moves.begin(), moves.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto [neg, v] : moves) {
      const int prev_last = last_[v];
      const std::size_t mark = changed_.size();
      place(v, pos);
      if (dfs(pos + 1)) return true;
      unplace(v, prev_last, mark);
    }
    auto& slot = memo_[std::move(k)];
    slot = std::max(slot, remaining);
    return false;
  }

  int n_;
  int k_;
  int cap_;
  Counter& counter_;
  int length_ = 0;
  VertexId first_letter_ = -1;
  std::vector<int> pid_;
  std::vector<bool> edge_;
  std::vector<NonEdge> non_edges_;
  std::vector<int> cnt_;
  std::vector<int> last_;
  std::vector<std::uint8_t> pc_;
  std::vector<int> changed_;
  std::vector<VertexId> word_;
  int missing_ = 0;
  std::unordered_map<std::string, int> memo_;
};

// A t-uniform block in which every arc u->v alternates starting with u, and
// the letters a and b form at least one factor aa or bb.
class BlockSearch {
 public:
  BlockSearch(const Orientation& d, VertexId a, VertexId b, int t, Counter& counter)
      : d_(d), n_(d.order()), a_(a), b_(b), t_(t), counter_(counter) {}

  std::optional<std::vector<VertexId>> run() {
    cnt_.assign(n_, 0);
    word_.clear();
    if (dfs(-1, false)) return word_;
    return std::nullopt;
  }

 private:
  bool allowed(VertexId v) const {
    if (cnt_[v] >= t_) return false;
    for (auto u = d_.in(v).find_first(); u != VertexSet::npos; u = d_.in(v).find_next(u))
      if (cnt_[u] != cnt_[v] + 1) return false;
    for (auto y = d_.out(v).find_first(); y != VertexSet::npos; y = d_.out(v).find_next(y))
      if (cnt_[y] != cnt_[v]) return false;
    return true;
  }

  bool dfs(VertexId last_pair, bool broken) {
    counter_.tick();
    if (static_cast<int>(word_.size()) == n_ * t_) return broken;
    if (!broken && cnt_[a_] == t_ && cnt_[b_] == t_) return false;
    std::string key(cnt_.begin(), cnt_.end());
    key.push_back(static_cast<char>(last_pair == a_ ? 1 : last_pair == b_ ? 2 : 0));
    key.push_back(broken ? 1 : 0);
    if (failed_.count(key)) return false;

    std::vector<VertexId> moves;
    for (VertexId v = 0; v < n_; ++v)
      if (allowed(v)) moves.push_back(v);
    // Moves that complete the target factor go first.
    std::stable_partition(moves.begin(), moves.end(),
                          [&](VertexId v) { return !broken && v == last_pair; });
    for (VertexId v : moves) {
      const bool in_pair = v == a_ || v == b_;
      const bool now_broken = broken || (in_pair && v == last_pair);
      ++cnt_[v];
      word_.push_back(v);
      if (dfs(in_pair ? v : last_pair, now_broken)) return true;
      word_.pop_back();
      --cnt_[v];
    }
    failed_.insert(std::move(key));
    return false;
  }

  const Orientation& d_;
  int n_;
  VertexId a_, b_;
  int t_;
  Counter& counter_;
  std::vector<char> cnt_;
  std::vector<VertexId> word_;
  std::unordered_set<std::string> failed_;
};

// Smallest-index-first topological order of the arcs in `out`.
std::vector<VertexId> linear_extension(const std::vector<VertexSet>& out) {
  const int n = static_cast<int>(out.size());
  std::vector<int> indegree(n, 0);
  for (const auto& s : out)
    for (VertexId v : members(s)) ++indegree[v];
  std::vector<VertexId> order;
  std::vector<bool> done(n, false);
  for (int step = 0; step < n; ++step) {
    VertexId pick = -1;
    for (VertexId v = 0; v < n && pick < 0; ++v)
      if (!done[v] && indegree[v] == 0) pick = v;
    if (pick < 0) throw VerificationError("linear extension requested for a cyclic relation");
    done[pick] = true;
    order.push_back(pick);
    for (VertexId v : members(out[pick])) --indegree[v];
  }
  return order;
}

Word checked(Word w, const Graph& g, int k, std::string_view what) {
  const Verdict v = verify_k11(w, g, k);
  if (!v) throw VerificationError(std::string(what) + " failed self-verification: " + describe(v, g, k));
  return w;
}

}  // namespace

void validate(const SearchBudget& budget) {
  if (budget.max_nodes == 0 || budget.max_word_length <= 0 || budget.max_uniformity <= 0) {
    throw InputError("search budget fields must be positive");
  }
  if (budget.min_word_length < 0) throw InputError("minimum word length must not be negative");
}

bool is_word_representable(const Graph& g) { return search_semi_transitive(g).found(); }

SearchResult<Word> find_t_uniform_representant(const Graph& g, int t, std::uint64_t node_budget) {
  if (t <= 0) throw InputError("uniformity must be positive");
  SearchResult<Word> result;
  if (g.order() == 0) {
    result.outcome = Outcome::found;
    result.value = Word(g.alphabet(), {});
    return result;
  }
  Counter counter(node_budget);
  try {
    WordSearch search(g, 0, t, counter);
    // A cyclic shift of a uniform representant is again one, so any letter
    // may open the word.
    search.fix_first_letter(0);
    if (auto letters = search.run(g.order() * t)) {
      result.outcome = Outcome::found;
      result.value = checked(Word(g.alphabet(), std::move(*letters)), g, 0, "uniform search");
    } else {
      result.outcome = Outcome::none;
    }
  } catch (const BudgetExhausted&) {
    result.outcome = Outcome::unknown;
  }
  result.nodes = counter.nodes();
  return result;
}

SearchResult<Word> uniform_word_from_orientation(const Orientation& d, const SearchBudget& budget) {
  validate(budget);
  if (!is_semi_transitive(d)) throw InputError("orientation is not semi-transitive");
  const Graph& g = d.base();
  const int n = g.order();
  SearchResult<Word> result;
  Counter counter(budget.max_nodes);

  std::vector<VertexSet> out(n);
  for (VertexId v = 0; v < n; ++v) out[v] = d.out(v);
  const auto reach = reachability(d);

  std::vector<Word> blocks{Word(g.alphabet(), linear_extension(out))};
  int total_t = 1;
  try {
    for (;;) {
      const Word w = concat(blocks);
      const auto counts = pattern_11_matrix(w);
      const auto perm = initial_permutation(w);
      std::vector<Edge> open;
      for (auto [x, y] : g.non_edges())
        if (counts[x * n + y] == 0) open.emplace_back(x, y);
      if (open.empty()) break;

      auto [x, y] = open.front();
      std::vector<VertexId> block;
      int block_t = 0;
      if (!reach[x][y] && !reach[y][x]) {
        // Reverse as many open incomparable pairs as stay acyclic.
        auto closure = reach;
        auto extra = out;
        for (auto [p, q] : open) {
          if (reach[p][q] || reach[q][p]) continue;
          const VertexId leader = perm.before(p, q) ? p : q;
          const VertexId follower = leader == p ? q : p;
          if (closure[leader][follower]) continue;
          extra[follower].set(leader);
          VertexSet gain = closure[leader];
          gain.set(leader);
          for (VertexId v = 0; v < n; ++v)
            if (v == follower || closure[v][follower]) closure[v] |= gain;
        }
        block = linear_extension(extra);
        block_t = 1;
      } else {
        const VertexId a = reach[x][y] ? x : y;
        const VertexId b = a == x ? y : x;
        for (int t = 2; total_t + t <= budget.max_uniformity; ++t) {
          if (auto found = BlockSearch(d, a, b, t, counter).run()) {
            block = std::move(*found);
            block_t = t;
            break;
          }
        }
        if (block_t == 0) {
          result.outcome = Outcome::unknown;
          result.nodes = counter.nodes();
          return result;
        }
      }
      if (total_t + block_t > budget.max_uniformity) {
        result.outcome = Outcome::unknown;
        result.nodes = counter.nodes();
        return result;
      }
      total_t += block_t;
      blocks.emplace_back(g.alphabet(), std::move(block));
    }
  } catch (const BudgetExhausted&) {
    result.outcome = Outcome::unknown;
    result.nodes = counter.nodes();
    return result;
  }

  Word w = checked(concat(blocks), g, 0, "orientation block word");
  if (!is_t_uniform(w, total_t)) throw VerificationError("orientation block word is not uniform");
  result.outcome = Outcome::found;
  result.value = std::move(w);
  result.nodes = counter.nodes();
  return result;
}

SearchResult<Word> find_uniform_representant(const Graph& g, const SearchBudget& budget) {
  validate(budget);
  SearchResult<Word> result;
  if (g.order() == 0) {
    result.outcome = Outcome::found;
    result.value = Word(g.alphabet(), {});
    return result;
  }
  auto orientation = search_semi_transitive(g, budget.max_nodes);
  result.nodes = orientation.nodes;
  if (!orientation.found()) {
    result.outcome = orientation.outcome;
    return result;
  }

  std::uint64_t left = budget.max_nodes > result.nodes ? budget.max_nodes - result.nodes : 1;
  std::uint64_t direct = std::max<std::uint64_t>(left / 10, 1);
  for (int t = 1; t <= budget.max_uniformity && direct > 0; ++t) {
    auto attempt = find_t_uniform_representant(g, t, direct);
    result.nodes += attempt.nodes;
    direct = attempt.nodes >= direct ? 0 : direct - attempt.nodes;
    if (attempt.found()) return {Outcome::found, std::move(attempt.value), result.nodes};
    if (attempt.outcome == Outcome::unknown) break;
  }

  SearchBudget rest = budget;
  rest.max_nodes = budget.max_nodes > result.nodes ? budget.max_nodes - result.nodes : 1;
  auto assembled = uniform_word_from_orientation(*orientation.value, rest);
  assembled.nodes += result.nodes;
  return assembled;
}

SearchResult<Word> find_k11_representant(const Graph& g, int k, const SearchBudget& budget) {
  validate(budget);
  if (k < 0) throw InputError("k must not be negative");
  SearchResult<Word> result;
  const int n = g.order();
  if (n == 0) {
    result.outcome = Outcome::found;
    result.value = Word(g.alphabet(), {});
    return result;
  }
  Counter counter(budget.max_nodes);
  try {
    WordSearch search(g, k, 0, counter);
    for (int length = std::max(n, budget.min_word_length); length <= budget.max_word_length;
         ++length) {
      if (auto letters = search.run(length)) {
        result.outcome = Outcome::found;
        result.value = checked(Word(g.alphabet(), std::move(*letters)), g, k, "k-11 search");
        result.nodes = counter.nodes();
        return result;
      }
    }
    result.outcome = Outcome::none;
  } catch (const BudgetExhausted&) {
    result.outcome = Outcome::unknown;
  }
  result.nodes = counter.nodes();
  return result;
}

CensusResult census_of(int n, std::span<const Graph> graphs, bool connected_only,
                       unsigned threads) {
  std::vector<Graph> candidates;
  if (n <= kMaxCanonicalOrder) {
    std::map<std::uint64_t, Graph> unique;
    for (const auto& g : graphs) {
      if (g.order() != n) throw InputError("graph of order " + std::to_string(g.order()) +
                                           " in a census of order " + std::to_string(n));
      if (connected_only && !is_connected(g)) continue;
      const auto code = canonical_code(g);
      if (!unique.count(code)) unique.emplace(code, graph_from_code(n, code));
    }
    for (auto& [code, g] : unique) candidates.push_back(std::move(g));
  } else {
    std::map<std::string, Graph> sorted;
    for (const auto& g : graphs) {
      if (g.order() != n) throw InputError("graph of differing order in census input");
      if (connected_only && !is_connected(g)) continue;
      sorted.emplace(to_graph6(g), g);
    }
    for (auto& [text, g] : sorted) candidates.push_back(std::move(g));
  }

  const std::size_t m = candidates.size();
  std::vector<char> failing(m, 0);
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    try {
      for (std::size_t i; (i = next.fetch_add(1)) < m;)
        failing[i] = is_word_representable(candidates[i]) ? 0 : 1;
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(m, 1)));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);

  CensusResult result;
  result.n = n;
  result.examined = m;
  for (std::size_t i = 0; i < m; ++i)
    if (failing[i]) result.non_word_representable.push_back(std::move(candidates[i]));
  return result;
}

CensusResult census_non_word_representable(int n, bool connected_only, unsigned threads) {
  const auto graphs = enumerate_nonisomorphic(n, connected_only);
  return census_of(n, graphs, connected_only, threads);
}

int chromatic_number(const Graph& g) {
  const int n = g.order();
  if (n > 16) throw InputError("chromatic number supports at most 16 vertices");
  if (n == 0) return 0;
  std::vector<VertexId> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](VertexId a, VertexId b) { return g.degree(a) > g.degree(b); });
  std::vector<int> color(n, -1);
  auto colorable = [&](int c) {
    auto go = [&](auto&& self, int i, int used) -> bool {
      if (i == n) return true;
      const VertexId v = order[i];
      for (int col = 0; col < std::min(c, used + 1); ++col) {
        bool ok = true;
        for (VertexId u : members(g.neighbors(v)))
          if (color[u] == col) ok = false;
        if (!ok) continue;
        color[v] = col;
        if (self(self, i + 1, std::max(used, col + 1))) return true;
        color[v] = -1;
      }
      return false;
    };
    std::fill(color.begin(), color.end(), -1);
    return go(go, 0, 0);
  };
  for (int c = 1;; ++c)
    if (colorable(c)) return c;
}

}  // namespace wordrep
