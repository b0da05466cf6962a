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

#include "wordrep/catalog.hpp"

#include <charconv>

#include "wordrep/construct.hpp"
#include "wordrep/errors.hpp"
#include "wordrep/verify.hpp"

namespace wordrep {

namespace {

using LabelPairs = std::vector<std::pair<std::string, std::string>>;

std::vector<std::string> labels_1_to(int n) {
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) out.push_back(std::to_string(i));
  return out;
}

// Edges written as two-digit codes over single-digit labels.
LabelPairs digit_pairs(std::initializer_list<std::string_view> codes) {
  LabelPairs out;
  for (auto c : codes) out.emplace_back(std::string(1, c[0]), std::string(1, c[1]));
  return out;
}

const LabelPairs kChvatalEdges = {
    {"5", "6"},  {"5", "12"}, {"5", "9"},  {"6", "7"},  {"7", "8"},  {"7", "11"},
    {"8", "9"},  {"9", "10"}, {"10", "11"}, {"11", "12"}, {"8", "12"}, {"6", "10"},
    {"1", "2"},  {"1", "4"},  {"1", "7"},  {"1", "12"}, {"2", "3"},  {"3", "4"},
    {"3", "8"},  {"3", "11"}, {"2", "6"},  {"2", "9"},  {"4", "5"},  {"4", "10"}};

const LabelPairs kChvatalAddedEdges = {{"1", "3"}, {"2", "4"}};

const LabelPairs kChvatalArcs = {
    {"1", "12"}, {"2", "1"},  {"3", "1"},  {"3", "2"},  {"3", "8"},  {"3", "11"}, {"4", "1"},
    {"4", "2"},  {"4", "3"},  {"4", "5"},  {"4", "10"}, {"5", "12"}, {"6", "2"},  {"6", "5"},
    {"6", "7"},  {"6", "10"}, {"7", "1"},  {"7", "8"},  {"7", "11"}, {"8", "12"}, {"9", "2"},
    {"9", "5"},  {"9", "8"},  {"9", "10"}, {"10", "11"}, {"11", "12"}};

// 9-uniform, assembled from the orientation above and checked at k = 0.
constexpr std::string_view kChvatalAugmentedWord =
    "4 3 6 7 9 2 1 5 8 10 11 12 9 6 4 10 5 3 2 7 11 8 1 12 4 3 6 7 9 2 5 8 10 6 1 4 "
    "9 11 3 2 7 10 12 1 5 8 11 12 4 3 6 7 9 2 5 8 10 9 1 4 6 11 3 2 7 10 12 1 5 8 11 12 "
    "6 7 4 3 9 8 10 11 2 1 5 12 4 3 6 7 9 2 1 5 10 4 6 8 9 11 3 2 7 10 12 1 5 8 11 12";

constexpr std::string_view kWord12 = "4573275465142631256";
constexpr std::string_view kWord17 = "23474625731436251645";

Graph chvatal() { return Graph::from_labels(labels_1_to(12), kChvatalEdges); }

Graph chvatal_augmented() {
  auto edges = kChvatalEdges;
  edges.insert(edges.end(), kChvatalAddedEdges.begin(), kChvatalAddedEdges.end());
  return Graph::from_labels(labels_1_to(12), edges);
}

Graph bw3() {
  return Graph::from_labels(labels_1_to(7),
                            digit_pairs({"12", "23", "34", "45", "56", "67", "16", "27", "47"}));
}

Graph split_min() {
  return Graph::from_labels(labels_1_to(8),
                            digit_pairs({"12", "13", "14", "23", "24", "34", "15", "18", "25",
                                         "26", "27", "28", "36", "37", "47", "48"}));
}

Graph graph12() {
  return Graph::from_labels(labels_1_to(7),
                            digit_pairs({"12", "13", "14", "16", "23", "26", "27", "34", "35",
                                         "36", "37", "45", "56"}));
}

Graph graph17() {
  return Graph::from_labels(labels_1_to(7),
                            digit_pairs({"12", "13", "14", "15", "16", "23", "24", "26", "27",
                                         "34", "45", "47", "56", "57", "67"}));
}

NamedSubset subset(const Graph& g, std::string name, std::initializer_list<std::string> labels,
                   Graph induces) {
  return NamedSubset{std::move(name), g.vertex_set(labels), std::move(induces)};
}

std::optional<int> parameter(std::string_view name, std::string_view family) {
  if (!name.starts_with(family) || name.size() == family.size()) return std::nullopt;
  std::string_view rest = name.substr(family.size());
  int n = 0;
  auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), n);
  if (ec != std::errc{} || ptr != rest.data() + rest.size()) {
    throw InputError("bad catalog parameter in '" + std::string(name) + "'");
  }
  return n;
}

CatalogEntry make(std::string name, std::string description, Graph g) {
  CatalogEntry e;
  e.name = std::move(name);
  e.description = std::move(description);
  e.graph = std::move(g);
  return e;
}

}  // namespace

std::vector<std::string> catalog_names() {
  return {"chvatal",  "chvatal-augmented", "w5",      "bw3",      "split-min",
          "graph12",  "graph17",           "cycle:n", "complete:n", "empty:n",
          "path:n",   "wheel:n",           "mycielski-c:n"};
}

CatalogEntry catalog_get(std::string_view name) {
  if (name == "chvatal") {
    auto e = make("chvatal", "Chvatal graph, 12 vertices, 24 edges", chvatal());
    const Graph b = bw3();
    const Graph c5 = cycle_graph(5);
    e.special_subsets = {
        subset(e.graph, "V1", {"2", "3", "5", "6", "8", "9", "12"}, b),
        subset(e.graph, "V2", {"3", "4", "6", "7", "8", "10", "11"}, b),
        subset(e.graph, "V3", {"1", "4", "5", "8", "9", "10", "12"}, b),
        subset(e.graph, "V4", {"1", "2", "6", "7", "10", "11", "12"}, b),
        subset(e.graph, "C5a", {"1", "2", "3", "7", "8"}, c5),
        subset(e.graph, "C5b", {"5", "6", "10", "11", "12"}, c5),
    };
    e.golden_orientations.push_back(Orientation::from_labels(chvatal_augmented(), kChvatalArcs));
    for (const auto& [u, v] : kChvatalAddedEdges)
      e.added_edges.emplace_back(e.graph.index(u), e.graph.index(v));
    return e;
  }
  if (name == "chvatal-augmented") {
    auto e = make("chvatal-augmented", "Chvatal graph plus edges 1-3 and 2-4",
                  chvatal_augmented());
    e.golden_orientations.push_back(Orientation::from_labels(e.graph, kChvatalArcs));
    e.golden_words.push_back(
        {Word::parse(e.graph.alphabet(), kChvatalAugmentedWord), 0, 9, true});
    return e;
  }
  if (name == "w5") return make("w5", "wheel on a 5-cycle", wheel_graph(5));
  if (name == "bw3") return make("bw3", "graph excluded from circle graphs", bw3());
  if (name == "split-min") {
    return make("split-min", "minimal non-word-representable split graph, clique 1-4",
                split_min());
  }
  if (name == "graph12") {
    auto e = make("graph12", "Graph 12 on 7 vertices", graph12());
    e.golden_words.push_back({Word::parse(e.graph.alphabet(), kWord12), 1, std::nullopt, false});
    return e;
  }
  if (name == "graph17") {
    auto e = make("graph17", "Graph 17 on 7 vertices", graph17());
    e.golden_words.push_back({Word::parse(e.graph.alphabet(), kWord17), 1, std::nullopt, false});
    return e;
  }
  if (auto n = parameter(name, "mycielski-c:")) {
    auto e = make(std::string(name), "Mycielski graph of a cycle", mycielski(cycle_graph(*n, "v")));
    VertexSet without_apex = e.graph.all_vertices();
    without_apex.reset(e.graph.index("x"));
    e.special_subsets.push_back(
        NamedSubset{"no-apex", without_apex, induced_subgraph(e.graph, without_apex)});
    return e;
  }
  if (auto n = parameter(name, "cycle:")) return make(std::string(name), "cycle", cycle_graph(*n));
  if (auto n = parameter(name, "complete:")) {
    if (*n < 0) throw InputError("order must not be negative");
    return make(std::string(name), "complete graph", complete_graph(*n));
  }
  if (auto n = parameter(name, "empty:")) {
    if (*n < 0) throw InputError("order must not be negative");
    return make(std::string(name), "edgeless graph", empty_graph(*n));
  }
  if (auto n = parameter(name, "path:")) {
    if (*n < 0) throw InputError("order must not be negative");
    return make(std::string(name), "path", path_graph(*n));
  }
  if (auto n = parameter(name, "wheel:")) return make(std::string(name), "wheel", wheel_graph(*n));
  throw InputError("unknown catalog entry '" + std::string(name) + "'");
}

std::vector<CatalogCheck> verify_entry(const CatalogEntry& entry) {
  std::vector<CatalogCheck> out;
  auto record = [&](std::string item, auto&& check) {
    CatalogCheck c{entry.name, std::move(item), false, ""};
    try {
      c.detail = check();
      c.passed = c.detail.empty();
    } catch (const std::exception& e) {
      c.detail = e.what();
    }
    out.push_back(std::move(c));
  };

  for (std::size_t i = 0; i < entry.golden_words.size(); ++i) {
    const auto& gw = entry.golden_words[i];
    record("word " + std::to_string(i + 1) + " (k=" + std::to_string(gw.k) + ")",
           [&]() -> std::string {
             const Verdict v = verify_k11(gw.word, entry.graph, gw.k);
             if (!v) return describe(v, entry.graph, gw.k);
             if (gw.uniformity && !is_t_uniform(gw.word, *gw.uniformity)) {
               return "word is not " + std::to_string(*gw.uniformity) + "-uniform";
             }
             return "";
           });
  }
  const Graph extended = with_edges(entry.graph, entry.added_edges);
  for (std::size_t i = 0; i < entry.golden_orientations.size(); ++i) {
    const auto& d = entry.golden_orientations[i];
    record("orientation " + std::to_string(i + 1), [&]() -> std::string {
      if (!(d.base() == extended)) return "orientation base differs from the entry graph";
      if (!is_acyclic(d)) return "orientation has a directed cycle";
      if (auto s = find_shortcut(d)) {
        return "shortcut with missing pair " + d.base().label(s->missing.first) + "-" +
               d.base().label(s->missing.second);
      }
      return "";
    });
  }
  for (const auto& s : entry.special_subsets) {
    record("subset " + s.name, [&]() -> std::string {
      if (!induces_copy(entry.graph, s.vertices, s.induces)) return "subset does not induce the expected graph";
      return "";
    });
  }
  return out;
}

bool CatalogReport::all_passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

CatalogReport verify_catalog() {
  CatalogReport report;
  for (const auto& name : catalog_names()) {
    if (name.find(':') != std::string::npos) continue;
    auto checks = verify_entry(catalog_get(name));
    report.checks.insert(report.checks.end(), checks.begin(), checks.end());
  }
  for (int n : {3, 4, 5}) {
    auto checks = verify_entry(catalog_get("mycielski-c:" + std::to_string(n)));
    report.checks.insert(report.checks.end(), checks.begin(), checks.end());
  }
  return report;
}

}  // namespace wordrep
