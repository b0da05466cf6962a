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

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "oracles.hpp"
#include "wordrep/canonical.hpp"
#include "wordrep/catalog.hpp"
#include "wordrep/errors.hpp"
#include "wordrep/search.hpp"
#include "wordrep/verify.hpp"

using namespace wordrep;

namespace {

Graph relabeled(const Graph& g, const std::vector<int>& perm) {
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return Graph(numbered_alphabet(g.order()), edges);
}

void expect_represents(const Word& word, const Graph& g, int k) {
  const Word x = relabel(word, g.alphabet());
  EXPECT_EQ(oracle::edges_of_word(oracle::letters(x), g.order(), k), oracle::edge_set(g));
}

// Canonical codes of all graphs on n vertices having a t-uniform representant.
std::set<std::uint64_t> t_representable_codes(int n, int t) {
  std::vector<int> letters;
  for (int v = 0; v < n; ++v)
    for (int i = 0; i < t; ++i) letters.push_back(v);
  std::set<std::uint64_t> codes;
  do {
    const auto edges = oracle::edges_of_word(letters, n, 0);
    const std::vector<Edge> list(edges.begin(), edges.end());
    codes.insert(oracle::brute_canonical_code(Graph(numbered_alphabet(n), list)));
  } while (std::next_permutation(letters.begin(), letters.end()));
  return codes;
}

// Shortest k-11-representant length by exhaustive enumeration.
int shortest_k11_length(const Graph& g, int k, int max_length) {
  const int n = g.order();
  const auto want = oracle::edge_set(g);
  for (int len = n; len <= max_length; ++len) {
    std::vector<int> word(len, 0);
    while (true) {
      std::vector<bool> seen(n, false);
      for (int x : word) seen[x] = true;
      if (std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }) &&
          oracle::edges_of_word(word, n, k) == want) {
        return len;
      }
      int i = len - 1;
      while (i >= 0 && word[i] == n - 1) word[i--] = 0;
      if (i < 0) break;
      ++word[i];
    }
  }
  return -1;
}

}  // namespace

TEST(Enumeration, CountsOfNonisomorphicGraphs) {
  const std::vector<std::size_t> all{1, 2, 4, 11, 34, 156, 1044, 12346};
  const std::vector<std::size_t> connected{1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(enumerate_nonisomorphic(n).size(), all[n - 1]) << n;
  for (int n = 1; n <= 7; ++n) EXPECT_EQ(enumerate_nonisomorphic(n, true).size(), connected[n - 1]) << n;
  EXPECT_THROW(enumerate_nonisomorphic(9), InputError);
}

TEST(Enumeration, MatchesBruteForceClassesUpToFive) {
  for (int n = 1; n <= 5; ++n) {
    std::set<std::uint64_t> brute;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n * (n - 1) / 2)); ++mask)
      brute.insert(oracle::brute_canonical_code(oracle::graph_from_mask(n, mask)));
    std::set<std::uint64_t> ours;
    for (const Graph& g : enumerate_nonisomorphic(n)) ours.insert(oracle::brute_canonical_code(g));
    EXPECT_EQ(ours, brute) << n;
    EXPECT_EQ(enumerate_nonisomorphic(n).size(), brute.size());
  }
}

TEST(Canonical, SeparatesExactlyTheBruteForceClasses) {
  std::mt19937 rng(3);
  std::vector<Graph> sample;
  for (int trial = 0; trial < 300; ++trial)
    sample.push_back(oracle::random_graph(rng, 6, 0.2 + 0.1 * (trial % 7)));
  for (std::size_t i = 0; i < sample.size(); ++i) {
    for (std::size_t j = i; j < sample.size(); ++j) {
      const bool ours = canonical_code(sample[i]) == canonical_code(sample[j]);
      const bool brute = oracle::brute_canonical_code(sample[i]) == oracle::brute_canonical_code(sample[j]);
      ASSERT_EQ(ours, brute);
    }
  }
}

TEST(Canonical, InvariantUnderRelabeling) {
  std::mt19937 rng(4);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + trial % kMaxCanonicalOrder;
    const Graph g = oracle::random_graph(rng, n, 0.15 + 0.1 * (trial % 8));
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const Graph h = relabeled(g, perm);
    const auto code = canonical_code(g);
    ASSERT_EQ(canonical_code(h), code);
    ASSERT_TRUE(are_isomorphic(graph_from_code(n, code), g));
    ASSERT_EQ(adjacency_code(canonical_graph(g)), code);
    const auto lab = canonical_labeling(g);
    ASSERT_EQ(lab.size(), static_cast<std::size_t>(n));
  }
}

TEST(Canonical, RegularGraphs) {
  // Vertex-transitive graphs stress the refinement.
  const Graph c = remove_vertex(catalog_get("chvatal").graph, 0);
  std::vector<int> perm(11);
  std::iota(perm.begin(), perm.end(), 0);
  std::reverse(perm.begin(), perm.end());
  EXPECT_EQ(canonical_code(c), canonical_code(relabeled(c, perm)));
  EXPECT_EQ(canonical_code(cycle_graph(11)), canonical_code(relabeled(cycle_graph(11), {0, 2, 4, 6, 8, 10, 1, 3, 5, 7, 9})));
  EXPECT_NE(canonical_code(cycle_graph(6)), canonical_code(Graph(numbered_alphabet(6), {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}})));
  EXPECT_THROW(canonical_code(catalog_get("chvatal").graph), InputError);
}

TEST(Census, SmallOrders) {
  EXPECT_TRUE(census_non_word_representable(4).non_word_representable.empty());
  EXPECT_TRUE(census_non_word_representable(5).non_word_representable.empty());
  const auto six = census_non_word_representable(6);
  EXPECT_EQ(six.examined, 112u);
  ASSERT_EQ(six.non_word_representable.size(), 1u);
  EXPECT_TRUE(are_isomorphic(six.non_word_representable.front(), wheel_graph(5)));
  EXPECT_EQ(census_non_word_representable(6, false).examined, 156u);
}

TEST(Census, IndependentOfThreadCount) {
  const auto one = census_non_word_representable(6, false, 1);
  const auto many = census_non_word_representable(6, false, 4);
  ASSERT_EQ(one.non_word_representable.size(), many.non_word_representable.size());
  for (std::size_t i = 0; i < one.non_word_representable.size(); ++i)
    EXPECT_EQ(one.non_word_representable[i], many.non_word_representable[i]);
}

TEST(Census, OfExplicitListDeduplicates) {
  std::vector<Graph> input;
  std::mt19937 rng(5);
  const Graph w5 = wheel_graph(5);
  for (int i = 0; i < 3; ++i) {
    std::vector<int> perm(6);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    input.push_back(relabeled(w5, perm));
  }
  input.push_back(complete_graph(6));
  const auto r = census_of(6, input);
  EXPECT_EQ(r.examined, 2u);
  EXPECT_EQ(r.non_word_representable.size(), 1u);
  std::vector<Graph> wrong{complete_graph(5)};
  EXPECT_THROW(census_of(6, wrong), InputError);
}

TEST(ChromaticNumber, Examples) {
  EXPECT_EQ(chromatic_number(complete_graph(3)), 3);
  EXPECT_EQ(chromatic_number(catalog_get("chvatal").graph), 4);
  EXPECT_EQ(chromatic_number(cycle_graph(5)), 3);
  EXPECT_EQ(chromatic_number(cycle_graph(6)), 2);
  EXPECT_EQ(chromatic_number(empty_graph(4)), 1);
  EXPECT_EQ(chromatic_number(wheel_graph(5)), 4);
}

TEST(FindUniform, Examples) {
  auto c4 = find_uniform_representant(cycle_graph(4));
  ASSERT_TRUE(c4.found());
  EXPECT_EQ(uniformity(*c4.value), 2);
  expect_represents(*c4.value, cycle_graph(4), 0);
  auto k2 = find_uniform_representant(complete_graph(2));
  ASSERT_TRUE(k2.found());
  EXPECT_EQ(uniformity(*k2.value), 1);
  EXPECT_EQ(find_uniform_representant(wheel_graph(5)).outcome, Outcome::none);
  EXPECT_EQ(find_uniform_representant(catalog_get("chvatal").graph).outcome, Outcome::none);
}

TEST(FindUniform, AugmentedChvatalFromOrientation) {
  const auto aug = catalog_get("chvatal-augmented");
  auto r = uniform_word_from_orientation(aug.golden_orientations.front());
  ASSERT_TRUE(r.found());
  expect_represents(*r.value, aug.graph, 0);
  EXPECT_TRUE(uniformity(*r.value).has_value());
  const Graph p3 = path_graph(4);
  EXPECT_THROW(uniform_word_from_orientation(Orientation(with_edges(p3, std::vector<Edge>{{0, 3}}),
                                                         std::vector<Arc>{{0, 1}, {1, 2}, {2, 3}, {0, 3}})),
               InputError);
}

TEST(FindUniform, AllGraphsUpToSix) {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : enumerate_nonisomorphic(n)) {
      auto r = find_uniform_representant(g);
      ASSERT_NE(r.outcome, Outcome::unknown);
      ASSERT_EQ(r.found(), is_word_representable(g));
      if (r.found()) {
        ASSERT_TRUE(uniformity(*r.value).has_value());
        ASSERT_EQ(oracle::edges_of_word(oracle::letters(relabel(*r.value, g.alphabet())), n, 0),
                  oracle::edge_set(g));
      }
    }
  }
}

TEST(FindUniform, OrientationBlocksOnRandomGraphs) {
  std::mt19937 rng(6);
  int built = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = oracle::random_graph(rng, 5 + trial % 6, 0.3 + 0.1 * (trial % 4));
    auto d = search_semi_transitive(g);
    if (!d.found()) continue;
    auto r = uniform_word_from_orientation(*d.value);
    ASSERT_TRUE(r.found());
    ASSERT_EQ(oracle::edges_of_word(oracle::letters(*r.value), g.order(), 0), oracle::edge_set(g));
    ++built;
  }
  EXPECT_GT(built, 100);
}

TEST(FindTUniform, MatchesExhaustiveWordEnumeration) {
  for (auto [n, t] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {3, 2}, {3, 3}, {4, 1}, {4, 2}, {4, 3}, {5, 2}}) {
    const auto codes = t_representable_codes(n, t);
    for (const Graph& g : enumerate_nonisomorphic(n)) {
      auto r = find_t_uniform_representant(g, t);
      ASSERT_NE(r.outcome, Outcome::unknown);
      ASSERT_EQ(r.found(), codes.count(oracle::brute_canonical_code(g)) > 0) << n << " " << t;
      if (r.found()) {
        ASSERT_TRUE(is_t_uniform(*r.value, t));
        expect_represents(*r.value, g, 0);
      }
    }
  }
}

TEST(FindTUniform, BudgetExhaustionIsUnknown) {
  const auto r = find_t_uniform_representant(catalog_get("chvatal-augmented").graph, 3, 50);
  EXPECT_EQ(r.outcome, Outcome::unknown);
  EXPECT_THROW(find_t_uniform_representant(cycle_graph(4), 0), InputError);
}

TEST(FindK11, Examples) {
  auto k2 = find_k11_representant(complete_graph(2), 0);
  ASSERT_TRUE(k2.found());
  EXPECT_EQ(k2.value->length(), 2u);
  auto e2 = find_k11_representant(empty_graph(2), 1);
  ASSERT_TRUE(e2.found());
  EXPECT_EQ(e2.value->length(), 4u);
  expect_represents(*e2.value, empty_graph(2), 1);
  EXPECT_EQ(find_k11_representant(wheel_graph(5), 0, {1'000'000, 12, 64, 0}).outcome, Outcome::none);
}

TEST(FindK11, GraphsTwelveAndSeventeen) {
  for (const char* name : {"graph12", "graph17"}) {
    const Graph g = catalog_get(name).graph;
    auto r = find_k11_representant(g, 1);
    ASSERT_TRUE(r.found()) << name;
    expect_represents(*r.value, g, 1);
  }
}

TEST(FindK11, ShortestLengthMatchesExhaustiveSearch) {
  for (int n = 1; n <= 3; ++n) {
    for (const Graph& g : enumerate_nonisomorphic(n)) {
      for (int k = 0; k <= 2; ++k) {
        const int brute = shortest_k11_length(g, k, 8);
        auto r = find_k11_representant(g, k, {kUnlimited, 8, 64, 0});
        if (brute < 0) {
          ASSERT_EQ(r.outcome, Outcome::none);
        } else {
          ASSERT_TRUE(r.found());
          ASSERT_EQ(static_cast<int>(r.value->length()), brute) << n << " k=" << k;
        }
      }
    }
  }
}

TEST(FindK11, EveryGraphUpToFiveAtKOne) {
  for (int n = 1; n <= 5; ++n) {
    for (const Graph& g : enumerate_nonisomorphic(n)) {
      auto r = find_k11_representant(g, 1);
      ASSERT_TRUE(r.found());
      ASSERT_EQ(oracle::edges_of_word(oracle::letters(*r.value), n, 1), oracle::edge_set(g));
    }
  }
}

TEST(FindK11, BudgetAndValidation) {
  const Graph g = catalog_get("graph12").graph;
  EXPECT_EQ(find_k11_representant(g, 1, {10, 64, 64, 0}).outcome, Outcome::unknown);
  EXPECT_THROW(find_k11_representant(g, -1), InputError);
  EXPECT_THROW(find_k11_representant(g, 1, {0, 64, 64, 0}), InputError);
  EXPECT_THROW(validate(SearchBudget{10, 64, 64, -1}), InputError);
}
