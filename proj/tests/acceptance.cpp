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

// Acceptance run: one PASS/FAIL line per criterion.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "wordrep/canonical.hpp"
#include "wordrep/catalog.hpp"
#include "wordrep/construct.hpp"
#include "wordrep/errors.hpp"
#include "wordrep/graph6.hpp"
#include "wordrep/orientation.hpp"
#include "wordrep/search.hpp"
#include "wordrep/verify.hpp"

using namespace wordrep;

namespace {

constexpr double kGoldenSeconds = 1.0;
constexpr double kChvatalSeconds = 1.0;
constexpr double kCensusSixSeconds = 10.0;
constexpr double kCensusSevenSeconds = 900.0;
constexpr double kMycielskiSeconds = 5.0;
constexpr double kSplitMinSeconds = 30.0;

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

// Collects failed sub-checks for one criterion.
struct Checks {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

int failed = 0;

void criterion(const std::string& name, const std::function<void(Checks&)>& body) {
  Checks c;
  const auto start = Clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.failures.push_back(std::string("exception: ") + e.what());
  }
  const double s = since(start);
  std::ostringstream line;
  line << (c.failures.empty() ? "PASS " : "FAIL ") << name << " (" << std::fixed << std::setprecision(2) << s
       << " s)";
  for (const auto& f : c.failures) line << "\n     - " << f;
  std::cout << line.str() << std::endl;
  if (!c.failures.empty()) ++failed;
}

bool word_matches(const Word& w, const Graph& g, int k) {
  const Word x = relabel(w, g.alphabet());
  return oracle::edges_of_word(oracle::letters(x), g.order(), k) == oracle::edge_set(g);
}

std::string labels_of(const Orientation& d, const std::vector<VertexId>& p) {
  std::string s;
  for (VertexId v : p) s += (s.empty() ? "" : "->") + d.base().label(v);
  return s;
}

Word uniform_of(const Graph& g) {
  auto r = find_uniform_representant(g);
  if (!r.found()) throw std::runtime_error("no uniform representant found");
  return *r.value;
}

void golden_words(Checks& c) {
  for (const char* name : {"graph12", "graph17"}) {
    const auto e = catalog_get(name);
    const Word w = e.golden_words.front().word;
    const auto t = Clock::now();
    const bool holds = bool(verify_k11(w, e.graph, 1));
    c.expect(since(t) < kGoldenSeconds, std::string(name) + " verification slower than 1 s");
    c.expect(holds, std::string(name) + " golden word does not verify at k=1");
    c.expect(word_matches(w, e.graph, 1), std::string(name) + " golden word disagrees with counting oracle");
    // Every single-letter substitution, which subsumes any random sample of them.
    const auto letters = oracle::letters(w);
    int total = 0;
    std::vector<std::string> undetected;
    for (std::size_t i = 0; i < letters.size(); ++i) {
      for (int x = 0; x < e.graph.order(); ++x) {
        if (x == letters[i]) continue;
        auto m = letters;
        m[i] = x;
        ++total;
        const Word mw(w.alphabet(), m);
        bool detected = true;
        if (contains_every_letter(mw)) detected = !verify_k11(mw, e.graph, 1);
        if (!detected) {
          undetected.push_back("position " + std::to_string(i + 1) + ": " + e.graph.label(letters[i]) + "->" +
                               e.graph.label(x));
        }
      }
    }
    if (!undetected.empty()) {
      std::string list;
      for (const auto& u : undetected) list += (list.empty() ? "" : ", ") + u;
      c.expect(false, std::string(name) + ": " + std::to_string(undetected.size()) + " of " +
                          std::to_string(total) + " single-letter mutations still represent the graph (" + list +
                          ")");
    }
  }
}

void split_example(Checks& c) {
  const Graph g = catalog_get("split-min").graph;
  const SplitPartition p(g, {0, 1, 2, 3}, {4, 5, 6, 7});
  std::string joined;
  for (const auto& b : split_blocks(p)) joined += (joined.empty() ? "" : " ") + b.word().to_string(true);
  c.expect(joined == "12345678 12348765 12345678 12356478 41258367 43125678 43267158 43215678",
           "split word differs: " + joined);
  const Word w = split_word(p);
  c.expect(bool(verify_k11(w, g, 1)), "split word does not verify at k=1");
  c.expect(word_matches(w, g, 1), "split word disagrees with counting oracle");
}

void chvatal_pipeline(Checks& c) {
  const auto aug = catalog_get("chvatal-augmented");
  const auto& d = aug.golden_orientations.front();
  const auto t = Clock::now();
  c.expect(is_acyclic(d) && !oracle::has_cycle_naive(d), "(a) orientation is not acyclic");
  c.expect(!find_shortcut(d) && !oracle::has_shortcut_by_paths(d), "(a) orientation has a shortcut");
  const auto three = directed_paths_with_arcs(d, 3);
  const auto four = directed_paths_with_arcs(d, 4);
  c.expect(since(t) < kChvatalSeconds, "(a),(b) slower than 1 s");
  std::set<std::string> got;
  for (const auto& p : three) got.insert(labels_of(d, p));
  const std::set<std::string> listed{"9->10->11->12", "6->10->11->12", "6->7->11->12", "6->7->8->12",
                                     "4->10->11->12", "4->3->11->12",  "4->3->2->1"};
  if (got != listed) {
    std::string extra;
    for (const auto& p : got)
      if (!listed.count(p)) extra += (extra.empty() ? "" : ", ") + p;
    c.expect(false, "(b) " + std::to_string(three.size()) + " paths with 3 arcs instead of the seven listed; extra: " +
                        extra);
  }
  if (!four.empty()) {
    std::string list;
    for (const auto& p : four) list += (list.empty() ? "" : ", ") + labels_of(d, p);
    c.expect(false, "(b) paths with 4 arcs exist: " + list);
  }
  const Word witness = aug.golden_words.front().word;
  c.expect(bool(verify_k11(witness, aug.graph, 0)) && uniformity(witness).has_value(),
           "(c) stored witness is not a uniform representant of the augmented graph");
  const auto ch = catalog_get("chvatal");
  const Word w = remove_matching(ch.graph, ch.added_edges, witness);
  c.expect(bool(verify_k11(w, ch.graph, 1)) && word_matches(w, ch.graph, 1),
           "(c) remove_matching word does not verify the Chvatal graph at k=1");
}

std::set<std::uint64_t> codes_of(const CensusResult& r) {
  std::set<std::uint64_t> s;
  for (const auto& g : r.non_word_representable) s.insert(canonical_code(g));
  return s;
}

void census(Checks& c) {
  c.expect(census_non_word_representable(5).non_word_representable.empty(), "n=5 has non-word-representable graphs");
  auto t = Clock::now();
  const auto six = census_non_word_representable(6);
  c.expect(since(t) < kCensusSixSeconds, "n=6 slower than 10 s");
  c.expect(six.non_word_representable.size() == 1 &&
               are_isomorphic(six.non_word_representable.front(), wheel_graph(5)),
           "n=6 is not exactly W5");
  t = Clock::now();
  const auto seven = census_non_word_representable(7, true, 0);
  c.expect(since(t) < kCensusSevenSeconds, "n=7 slower than 15 min");
  c.expect(seven.non_word_representable.size() == 25,
           "n=7 gives " + std::to_string(seven.non_word_representable.size()) + " instead of 25");
  const auto codes = codes_of(seven);
  for (const char* name : {"graph12", "graph17"})
    c.expect(codes.count(canonical_code(catalog_get(name).graph)) == 1, std::string(name) + " not in the n=7 list");
  for (unsigned threads : {1u, 2u, 4u}) {
    const auto again = census_non_word_representable(7, true, threads);
    bool same = again.non_word_representable.size() == seven.non_word_representable.size();
    for (std::size_t i = 0; same && i < again.non_word_representable.size(); ++i)
      same = again.non_word_representable[i] == seven.non_word_representable[i];
    c.expect(same, "n=7 result differs with " + std::to_string(threads) + " thread(s)");
  }
  std::stringstream stream;
  const auto all = enumerate_nonisomorphic(7);
  write_graph6(stream, all);
  const auto streamed = census_of(7, read_graph6(stream));
  c.expect(codes_of(streamed) == codes, "graph6 stream census differs from the built-in one");
}

void mycielski_words(Checks& c) {
  for (int n = 3; n <= 50; ++n) {
    const Word w = mycielski_cycle_word(n);
    const Graph mu = mycielski(cycle_graph(n, "v"));
    VertexSet keep = mu.all_vertices();
    keep.reset(mu.index("x"));
    const Graph target = induced_subgraph(mu, keep);
    c.expect(is_t_uniform(w, 2), "n=" + std::to_string(n) + " word is not 2-uniform");
    c.expect(graph_of_word(w, 0) == target, "n=" + std::to_string(n) + " word graph differs");
    c.expect(word_matches(w, target, 0), "n=" + std::to_string(n) + " disagrees with counting oracle");
  }
}

void chvatal_facts(Checks& c) {
  const auto e = catalog_get("chvatal");
  const Graph& g = e.graph;
  bool regular = true, triangle_free = true;
  for (int v = 0; v < g.order(); ++v) regular = regular && g.degree(v) == 4;
  for (auto [u, v] : g.edges()) triangle_free = triangle_free && !(g.neighbors(u) & g.neighbors(v)).any();
  c.expect(regular, "not 4-regular");
  c.expect(triangle_free, "not triangle-free");
  c.expect(chromatic_number(g) == 4, "chromatic number is not 4");
  const Graph bw3 = catalog_get("bw3").graph;
  VertexSet common = g.all_vertices();
  for (const char* name : {"V1", "V2", "V3", "V4"}) {
    auto it = std::find_if(e.special_subsets.begin(), e.special_subsets.end(),
                           [&](const NamedSubset& s) { return s.name == name; });
    if (it == e.special_subsets.end()) {
      c.expect(false, std::string(name) + " missing");
      continue;
    }
    c.expect(are_isomorphic(induced_subgraph(g, it->vertices), bw3), std::string(name) + " does not induce BW3");
    common &= it->vertices;
  }
  c.expect(!common.any(), "V1..V4 intersect");
  const VertexSet a = g.vertex_set({"1", "2", "3", "7", "8"});
  const VertexSet b = g.vertex_set({"5", "6", "10", "11", "12"});
  c.expect(!a.intersects(b), "the five-cycles share a vertex");
  c.expect(are_isomorphic(induced_subgraph(g, a), cycle_graph(5)), "{1,2,3,7,8} is not an induced C5");
  c.expect(are_isomorphic(induced_subgraph(g, b), cycle_graph(5)), "{5,6,10,11,12} is not an induced C5");
}

void split_min(Checks& c) {
  const auto t = Clock::now();
  const Graph g = catalog_get("split-min").graph;
  c.expect(!is_word_representable(g) && !oracle::any_semi_transitive_naive(g), "split-min is word-representable");
  for (int v = 0; v < g.order(); ++v) {
    const Graph h = remove_vertex(g, v);
    c.expect(is_word_representable(h) && oracle::any_semi_transitive_naive(h),
             "deleting " + g.label(v) + " leaves a non-word-representable graph");
  }
  c.expect(since(t) < kSplitMinSeconds, "slower than 30 s");
}

std::vector<Graph> representable_up_to_five() {
  std::vector<Graph> out;
  for (int n = 1; n <= 5; ++n)
    for (auto& g : enumerate_nonisomorphic(n))
      if (is_word_representable(g)) out.push_back(g);
  return out;
}

void property_suites(Checks& c) {
  std::mt19937 rng(2026);
  {  // (i)
    bool ok = true;
    for (int trial = 0; trial < 10000 && ok; ++trial) {
      const int n = 2 + trial % 6;
      auto a = numbered_alphabet(n);
      const Word w = oracle::random_word(rng, a, n + static_cast<int>(rng() % 16));
      if (!contains_every_letter(w)) continue;
      for (int k = 0; k < 4 && ok; ++k) {
        const auto lo = oracle::edge_set(graph_of_word(w, k));
        const auto hi = oracle::edge_set(graph_of_word(w, k + 1));
        ok = std::includes(hi.begin(), hi.end(), lo.begin(), lo.end()) &&
             lo == oracle::edges_of_word(oracle::letters(w), n, k);
      }
    }
    c.expect(ok, "(i) k-monotonicity");
  }
  {  // (ii)
    bool ok = true;
    auto a = numbered_alphabet(2);
    for (int len = 2; len <= 10; ++len) {
      for (int mask = 0; mask < (1 << len); ++mask) {
        std::vector<VertexId> letters;
        for (int i = 0; i < len; ++i) letters.push_back(mask >> i & 1);
        const Word w(a, letters);
        const bool zero = oracle::count_11(letters, 0, 1) == 0;
        ok = ok && alternates(w, 0, 1) == zero && (count_pattern_11(w, 0, 1) == 0) == zero &&
             zero == oracle::alternate(letters, 0, 1);
      }
    }
    c.expect(ok, "(ii) alternation vs zero 11");
  }
  const auto small = representable_up_to_five();
  {  // (iii)
    bool ok = true;
    for (const Graph& g : small) {
      const Word w = uniform_of(g);
      for (auto variant : {Doubling::repeat, Doubling::reversed_prefix}) ok = ok && word_matches(double_word(w, variant), g, 1);
    }
    c.expect(ok, "(iii) doubling");
  }
  {  // (iv)
    bool ok = true;
    for (int trial = 0; trial < 1000; ++trial) {
      auto a = numbered_alphabet(1 + trial % 8);
      const auto p1 = oracle::random_permutation(rng, a), p2 = oracle::random_permutation(rng, a),
                 p3 = oracle::random_permutation(rng, a);
      const auto joined = oracle::letters(p1.word() + p2.word() + p3.word());
      ok = ok && oracle::edge_set(three_perm_graph(p1, p2, p3)) == oracle::edges_of_word(joined, a->size(), 1);
    }
    c.expect(ok, "(iv) three-permutation characterisation");
  }
  {  // (v)
    bool ok = true;
    for (const Graph& g : small) {
      const Word w = uniform_of(g);
      for (int trial = 0; trial < 5; ++trial) {
        const int n = g.order();
        const int groups = 1 + static_cast<int>(rng() % 3);
        std::vector<int> part_of(n);
        for (auto& x : part_of) x = static_cast<int>(rng() % (groups + 1));
        std::vector<VertexSet> parts(groups, g.empty_set());
        for (int v = 0; v < n; ++v)
          if (part_of[v] > 0) parts[part_of[v] - 1].set(v);
        std::vector<Edge> removed;
        for (auto [x, y] : g.edges())
          if (part_of[x] > 0 && part_of[x] == part_of[y]) removed.emplace_back(x, y);
        ok = ok && word_matches(remove_edge_sets(g, w, parts), without_edges(g, removed), 1);
      }
    }
    c.expect(ok, "(v) edge-set removal");
  }
  {  // (vi)
    bool ok = true;
    for (int trial = 0; trial < 1000; ++trial) {
      const int n = 1 + trial % 10;
      const int k = static_cast<int>(rng() % (n + 1));
      std::vector<Edge> edges;
      for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) edges.emplace_back(i, j);
      for (int x = 0; x < k; ++x)
        for (int y = k; y < n; ++y)
          if (rng() % 2) edges.emplace_back(x, y);
      const Graph g(numbered_alphabet(n), edges);
      std::vector<VertexId> a(k), b(n - k);
      std::iota(a.begin(), a.end(), 0);
      std::iota(b.begin(), b.end(), k);
      std::shuffle(a.begin(), a.end(), rng);
      const Word w = split_word(SplitPartition(g, a, b));
      ok = ok && is_permutational(w) && word_matches(w, g, 1);
    }
    for (int trial = 0; trial < 1000; ++trial) {
      const int n = 1 + trial % 10;
      const int k = static_cast<int>(rng() % (n + 1));
      auto sub = numbered_alphabet(k);
      std::vector<Permutation> orders;
      for (int i = 0; i < 1 + trial % 3; ++i) orders.push_back(oracle::random_permutation(rng, sub));
      std::vector<Edge> edges;
      for (int x = 0; x < k; ++x) {
        for (int y = x + 1; y < k; ++y) {
          bool xy = true, yx = true;
          for (const auto& o : orders) {
            xy = xy && o.before(x, y);
            yx = yx && o.before(y, x);
          }
          if (xy || yx) edges.emplace_back(x, y);
        }
      }
      for (int x = 0; x < k; ++x)
        for (int y = k; y < n; ++y)
          if (rng() % 2) edges.emplace_back(x, y);
      const Graph g(numbered_alphabet(n), edges);
      VertexSet b = g.empty_set();
      for (int y = k; y < n; ++y) b.set(y);
      const Word w = comp_plus_ind_word(CompIndPartition::with_independent_set(g, b));
      ok = ok && is_permutational(w) && word_matches(w, g, 1);
    }
    c.expect(ok, "(vi) split and comparability-plus-independent constructions");
  }
  {  // (vii)
    bool ok = true;
    std::size_t checked = 0;
    for (int n = 1; n <= 5; ++n) {
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n * (n - 1) / 2)); ++mask) {
        oracle::for_each_orientation(oracle::graph_from_mask(n, mask), [&](const Orientation& d) {
          if (oracle::has_cycle_naive(d)) {
            ok = ok && !is_acyclic(d) && !is_semi_transitive(d);
            return;
          }
          ++checked;
          ok = ok && find_shortcut(d).has_value() == oracle::has_shortcut_by_paths(d) &&
               is_semi_transitive(d) == !oracle::has_shortcut_by_paths(d);
        });
      }
    }
    c.expect(ok && checked > 0, "(vii) shortcut checker vs path oracle");
  }
}

}  // namespace

int main() {
  criterion("golden words", golden_words);
  criterion("split worked example", split_example);
  criterion("Chvatal pipeline", chvatal_pipeline);
  criterion("census", census);
  criterion("Mycielski words", mycielski_words);
  criterion("Chvatal facts", chvatal_facts);
  criterion("split-min minimality", split_min);
  criterion("property suites", property_suites);
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criterion/criteria failed")
            << std::endl;
  return failed == 0 ? 0 : 1;
}
