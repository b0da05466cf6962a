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

#include "wordrep/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "wordrep/canonical.hpp"
#include "wordrep/catalog.hpp"
#include "wordrep/construct.hpp"
#include "wordrep/errors.hpp"
#include "wordrep/formats.hpp"
#include "wordrep/graph6.hpp"
#include "wordrep/search.hpp"
#include "wordrep/verify.hpp"

namespace wordrep::cli {

namespace {

std::vector<std::string> tokens_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

bool natural_less(const std::string& a, const std::string& b) {
  auto numeric = [](const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  const bool na = numeric(a), nb = numeric(b);
  if (na && nb && a.size() != b.size()) return a.size() < b.size();
  if (na != nb) return na;
  return a < b;
}

// Distinct letters of a literal word, naturally sorted. A lone token is read
// letter by letter.
AlphabetPtr alphabet_of_literal(const std::string& text) {
  auto letters = tokens_of(text);
  if (letters.size() == 1) {
    const std::string t = letters.front();
    letters.clear();
    for (char ch : t) letters.emplace_back(1, ch);
  }
  std::sort(letters.begin(), letters.end(), natural_less);
  letters.erase(std::unique(letters.begin(), letters.end()), letters.end());
  return make_alphabet(std::move(letters));
}

CatalogEntry entry_of(const std::string& operand) { return catalog_get(std::string_view(operand).substr(1)); }

Graph load_graph(const std::string& operand) {
  if (operand.starts_with("@")) return entry_of(operand).graph;
  return parse_graph(read_file(operand));
}

Orientation load_orientation(const std::string& operand) {
  if (operand.starts_with("@")) {
    auto e = entry_of(operand);
    if (e.golden_orientations.empty()) throw InputError("catalog entry has no orientation");
    return e.golden_orientations.front();
  }
  return parse_orientation(read_file(operand));
}

Word load_word(const std::string& operand, const Graph& g, bool literal) {
  if (literal) return Word::parse(g.alphabet(), operand);
  if (operand.starts_with("@")) {
    auto e = entry_of(operand);
    if (e.golden_words.empty()) throw InputError("catalog entry has no word");
    return relabel(e.golden_words.front().word, g.alphabet());
  }
  auto words = parse_words(read_file(operand), g.alphabet());
  if (words.empty()) throw InputError("word file is empty");
  return words.front();
}

VertexSet set_of(const Graph& g, const std::string& text) {
  VertexSet s = g.empty_set();
  for (const auto& t : tokens_of(text)) s.set(g.index(t));
  return s;
}

std::vector<VertexId> list_of(const Graph& g, const std::string& text) {
  std::vector<VertexId> out;
  for (const auto& t : tokens_of(text)) out.push_back(g.index(t));
  return out;
}

std::uint64_t default_nodes() {
  SearchBudget b;
  if (const char* env = std::getenv(kBudgetVariable)) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw InputError(std::string(kBudgetVariable) + " is not a number");
    }
  }
  return b.max_nodes;
}

int exit_for(Outcome o) {
  switch (o) {
    case Outcome::found: return kVerified;
    case Outcome::none: return kRefuted;
    case Outcome::unknown: return kUnknown;
  }
  return kUnknown;
}

// First maximum clique (lexicographic) whose complement is independent.
std::optional<std::vector<VertexId>> find_split_clique(const Graph& g) {
  const int n = g.order();
  if (n > 24) throw InputError("automatic split partition supports at most 24 vertices");
  std::optional<std::vector<VertexId>> best;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    VertexSet a = g.empty_set();
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1) a.set(v);
    if (best && a.count() <= best->size()) continue;
    if (is_clique(g, a) && is_independent(g, ~a)) best = members(a);
  }
  return best;
}

// Largest independent set whose complement induces a comparability graph.
std::optional<VertexSet> find_comp_independent(const Graph& g) {
  const int n = g.order();
  if (n > 20) throw InputError("automatic partition supports at most 20 vertices");
  std::vector<std::uint32_t> masks(std::uint32_t{1} << n);
  for (std::uint32_t m = 0; m < masks.size(); ++m) masks[m] = m;
  std::stable_sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
    return std::popcount(a) > std::popcount(b);
  });
  for (auto mask : masks) {
    VertexSet b = g.empty_set();
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1) b.set(v);
    if (!is_independent(g, b)) continue;
    if (search_transitive(induced_subgraph(g, ~b)).found()) return b;
  }
  return std::nullopt;
}

struct Context {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
  int code = kVerified;
};

// Permutational words print one block per permutation in compact form.
std::string permutation_blocks(const Word& w, bool compact) {
  if (!compact || !w.alphabet()->single_character() || w.alphabet()->size() == 0) {
    return w.to_string(compact);
  }
  const std::string flat = w.to_string(true);
  const std::size_t n = static_cast<std::size_t>(w.alphabet()->size());
  std::string out;
  for (std::size_t i = 0; i < flat.size(); i += n) {
    if (i) out += ' ';
    out += flat.substr(i, n);
  }
  return out;
}

void print_word_and_verdict(Context& c, const Word& w, const Graph& g, int k, bool compact,
                            bool permutational = false) {
  c.out << (permutational ? permutation_blocks(w, compact) : w.to_string(compact)) << "\n";
  const Verdict v = verify_k11(w, g, k);
  c.out << (v ? "verified: " : "refuted: ") << describe(v, g, k) << "\n";
  c.code = v ? kVerified : kRefuted;
}

void add_verify(CLI::App& app, Context& c) {
  auto* sub = app.add_subcommand("verify", "check that a word k-11-represents a graph");
  auto graph = std::make_shared<std::string>();
  auto word = std::make_shared<std::string>();
  auto k = std::make_shared<int>(0);
  auto quiet = std::make_shared<bool>(false);
  auto literal = std::make_shared<bool>(false);
  sub->add_option("graph", *graph, "graph file or @catalog-name")->required();
  sub->add_option("word", *word, "word file, @catalog-name, or text with --literal")->required();
  sub->add_option("-k", *k, "number of allowed 11 occurrences for an edge")->check(CLI::NonNegativeNumber);
  sub->add_flag("-q,--quiet", *quiet, "print nothing, report through the exit status");
  sub->add_flag("-l,--literal", *literal, "read the word argument as the word itself");
  sub->callback([=, &c] {
    const Graph g = load_graph(*graph);
    const Word w = load_word(*word, g, *literal);
    const Verdict v = verify_k11(w, g, *k);
    if (!*quiet) c.out << (v ? "verified: " : "refuted: ") << describe(v, g, *k) << "\n";
    c.code = v ? kVerified : kRefuted;
  });
}

void add_orient(CLI::App& app, Context& c) {
  auto* sub = app.add_subcommand("orient", "orientation checks and searches");
  sub->require_subcommand(1);
  auto input = std::make_shared<std::string>();
  auto nodes = std::make_shared<std::uint64_t>(0);

  auto* check = sub->add_subcommand("check", "is the orientation semi-transitive");
  check->add_option("orientation", *input, "orientation file or @catalog-name")->required();
  check->callback([=, &c] {
    const Orientation d = load_orientation(*input);
    if (!is_acyclic(d)) {
      c.out << "not semi-transitive: directed cycle\n";
      c.code = kRefuted;
      return;
    }
    if (auto s = find_shortcut(d)) {
      const Graph& g = d.base();
      c.out << "not semi-transitive: shortcut";
      for (VertexId v : s->path) c.out << " " << g.label(v);
      c.out << " with missing pair {" << g.label(s->missing.first) << ","
            << g.label(s->missing.second) << "}\n";
      c.code = kRefuted;
      return;
    }
    c.out << "semi-transitive\n";
    c.code = kVerified;
  });

  auto* check_t = sub->add_subcommand("check-transitive", "is the orientation transitive");
  check_t->add_option("orientation", *input, "orientation file or @catalog-name")->required();
  check_t->callback([=, &c] {
    const bool t = is_transitive(load_orientation(*input));
    c.out << (t ? "transitive\n" : "not transitive\n");
    c.code = t ? kVerified : kRefuted;
  });

  auto search_cmd = [&](const char* name, const char* help, bool transitive) {
    auto* s = sub->add_subcommand(name, help);
    s->add_option("graph", *input, "graph file or @catalog-name")->required();
    s->add_option("--max-nodes", *nodes, "node budget");
    s->callback([=, &c] {
      const Graph g = load_graph(*input);
      const std::uint64_t budget = *nodes ? *nodes : default_nodes();
      auto r = transitive ? search_transitive(g, budget) : search_semi_transitive(g, budget);
      c.code = exit_for(r.outcome);
      if (r.found()) {
        c.out << "# " << (transitive ? "transitive" : "semi-transitive") << " orientation found\n"
              << format_orientation(*r.value);
      } else if (r.outcome == Outcome::none) {
        c.out << (transitive ? "none (not a comparability graph)\n"
                             : "none (not word-representable)\n");
      } else {
        c.out << "unknown (node budget exhausted after " << r.nodes << " nodes)\n";
      }
    });
  };
  search_cmd("search", "search for a semi-transitive orientation", false);
  search_cmd("search-transitive", "search for a transitive orientation", true);

  auto* paths = sub->add_subcommand("paths", "directed paths with a given number of arcs");
  auto arcs = std::make_shared<int>(3);
  paths->add_option("arcs", *arcs, "number of arcs")->required()->check(CLI::NonNegativeNumber);
  paths->add_option("orientation", *input, "orientation file or @catalog-name")->required();
  paths->callback([=, &c] {
    const Orientation d = load_orientation(*input);
    const auto ps = directed_paths_with_arcs(d, *arcs);
    for (const auto& p : ps) {
      for (std::size_t i = 0; i < p.size(); ++i) c.out << (i ? " -> " : "") << d.base().label(p[i]);
      c.out << "\n";
    }
    c.out << ps.size() << " path(s) with " << *arcs << " arc(s)\n";
    c.code = kVerified;
  });
}

void add_construct(CLI::App& app, Context& c) {
  auto* sub = app.add_subcommand("construct", "build verified representants");
  sub->require_subcommand(1);
  auto compact = std::make_shared<bool>(false);
  sub->add_flag("--compact", *compact, "print words without separators when possible");

  {
    auto* s = sub->add_subcommand("three-perm", "graph 1-11-represented by three permutations");
    auto perms = std::make_shared<std::vector<std::string>>();
    s->add_option("permutations", *perms, "three permutations")->required()->expected(3);
    s->callback([=, &c] {
      const AlphabetPtr alphabet = alphabet_of_literal((*perms)[0]);
      const Permutation p1 = Permutation::parse(alphabet, (*perms)[0]);
      const Permutation p2 = Permutation::parse(alphabet, (*perms)[1]);
      const Permutation p3 = Permutation::parse(alphabet, (*perms)[2]);
      const Graph g = three_perm_graph(p1, p2, p3);
      c.out << format_graph(g);
      print_word_and_verdict(c, p1.word() + p2.word() + p3.word(), g, 1, *compact, true);
    });
  }
  {
    auto* s = sub->add_subcommand("double", "ww or r(pi(w))w from a word-representant w");
    auto word = std::make_shared<std::string>();
    auto variant = std::make_shared<std::string>("repeat");
    s->add_option("word", *word, "the word, as text")->required();
    s->add_option("--variant", *variant, "repeat or reversed-prefix")
        ->check(CLI::IsMember({"repeat", "reversed-prefix"}));
    s->callback([=, &c] {
      const Word w = Word::parse(alphabet_of_literal(*word), *word);
      const Word d = double_word(w, *variant == "repeat" ? Doubling::repeat : Doubling::reversed_prefix);
      print_word_and_verdict(c, d, graph_of_word(w, 0), 1, *compact);
    });
  }
  {
    auto* s = sub->add_subcommand("remove-edges", "remove all edges inside disjoint vertex sets");
    auto graph = std::make_shared<std::string>();
    auto word = std::make_shared<std::string>();
    auto parts = std::make_shared<std::vector<std::string>>();
    auto literal = std::make_shared<bool>(false);
    auto shorter = std::make_shared<bool>(false);
    s->add_option("graph", *graph, "graph file or @catalog-name")->required();
    s->add_option("word", *word, "uniform representant of the graph")->required();
    s->add_option("-p,--part", *parts, "vertex set, e.g. \"1 3\" (repeatable)");
    s->add_flag("-l,--literal", *literal, "read the word argument as the word itself");
    s->add_flag("--short", *shorter, "omit the pi(w) block");
    s->callback([=, &c] {
      const Graph g = load_graph(*graph);
      const Word w = load_word(*word, g, *literal);
      std::vector<VertexSet> sets;
      std::vector<Edge> removed;
      for (const auto& p : *parts) {
        sets.push_back(set_of(g, p));
        const auto m = members(sets.back());
        for (std::size_t i = 0; i < m.size(); ++i)
          for (std::size_t j = i + 1; j < m.size(); ++j)
            if (g.adjacent(m[i], m[j])) removed.emplace_back(m[i], m[j]);
      }
      const Word out = remove_edge_sets(g, w, sets, *shorter);
      print_word_and_verdict(c, out, without_edges(g, removed), 1, *compact);
    });
  }
  {
    auto* s = sub->add_subcommand("remove-matching",
                                  "1-11-representant of H from a uniform representant of H plus a matching");
    auto graph = std::make_shared<std::string>();
    auto word = std::make_shared<std::string>();
    auto edges = std::make_shared<std::vector<std::string>>();
    auto literal = std::make_shared<bool>(false);
    auto shorter = std::make_shared<bool>(false);
    s->add_option("graph", *graph, "the graph H")->required();
    s->add_option("word", *word, "uniform representant of H plus the matching");
    s->add_option("-e,--edge", *edges, "matching edge, e.g. \"1 3\" (repeatable)");
    s->add_flag("-l,--literal", *literal, "read the word argument as the word itself");
    s->add_flag("--short", *shorter, "omit the pi(w) block");
    s->callback([=, &c] {
      const Graph h = load_graph(*graph);
      std::vector<Edge> matching;
      for (const auto& e : *edges) {
        const auto ends = list_of(h, e);
        if (ends.size() != 2) throw InputError("a matching edge needs two labels");
        matching.emplace_back(ends[0], ends[1]);
      }
      std::string word_operand = *word;
      if (graph->starts_with("@")) {
        // Catalog graphs with documented added edges default to them and to
        // the stored uniform word of the extended graph.
        const auto e = entry_of(*graph);
        if (matching.empty()) matching = e.added_edges;
        if (word_operand.empty() && !e.added_edges.empty()) {
          const Graph extended = with_edges(e.graph, e.added_edges);
          for (const auto& name : catalog_names()) {
            if (name.find(':') != std::string::npos) continue;
            const auto other = catalog_get(name);
            if (other.graph == extended && !other.golden_words.empty() &&
                other.golden_words.front().uniformity) {
              word_operand = "@" + name;
            }
          }
        }
      }
      if (word_operand.empty()) throw InputError("no word given");
      const Graph extended = with_edges(h, matching);
      const Word w = load_word(word_operand, extended, *literal);
      print_word_and_verdict(c, remove_matching(h, matching, w, *shorter), h, 1, *compact);
    });
  }
  {
    auto* s = sub->add_subcommand("split", "permutational 1-11-representant of a split graph");
    auto graph = std::make_shared<std::string>();
    auto clique = std::make_shared<std::string>();
    auto independent = std::make_shared<std::string>();
    s->add_option("graph", *graph, "graph file or @catalog-name")->required();
    s->add_option("--clique", *clique, "clique vertices in order a_1 ... a_k");
    s->add_option("--independent", *independent, "independent vertices in order b_1 ... b_l");
    s->callback([=, &c] {
      const Graph g = load_graph(*graph);
      std::vector<VertexId> a;
      if (!clique->empty()) {
        a = list_of(g, *clique);
      } else if (auto found = find_split_clique(g)) {
        a = *found;
      } else {
        throw InputError("graph is not a split graph");
      }
      auto p = independent->empty() ? SplitPartition::with_clique(g, a)
                                    : SplitPartition(g, a, list_of(g, *independent));
      print_word_and_verdict(c, split_word(p), g, 1, *compact, true);
    });
  }
  {
    auto* s = sub->add_subcommand("comp-ind",
                                  "permutational 1-11-representant of a comparability graph plus an independent set");
    auto graph = std::make_shared<std::string>();
    auto independent = std::make_shared<std::string>();
    s->add_option("graph", *graph, "graph file or @catalog-name")->required();
    s->add_option("--independent", *independent, "the independent set B");
    s->callback([=, &c] {
      const Graph g = load_graph(*graph);
      VertexSet b;
      if (!independent->empty()) {
        b = set_of(g, *independent);
      } else if (auto found = find_comp_independent(g)) {
        b = *found;
      } else {
        throw InputError("no independent set leaves a comparability graph");
      }
      const auto p = CompIndPartition::with_independent_set(g, b);
      print_word_and_verdict(c, comp_plus_ind_word(p), g, 1, *compact, true);
    });
  }
  {
    auto* s = sub->add_subcommand("mycielski-word", "2-uniform word for the Mycielski cycle graph minus its apex");
    auto n = std::make_shared<int>(3);
    s->add_option("n", *n, "cycle length")->required()->check(CLI::Range(3, 100000));
    s->callback([=, &c] {
      const Word w = mycielski_cycle_word(*n);
      const Graph mu = mycielski(cycle_graph(*n, "v"));
      VertexSet keep = mu.all_vertices();
      keep.reset(mu.index("x"));
      print_word_and_verdict(c, w, induced_subgraph(mu, keep), 0, *compact);
    });
  }
  for (auto* s : sub->get_subcommands([](CLI::App*) { return true; })) s->fallthrough();
}

void add_census(CLI::App& app, Context& c) {
  auto* sub = app.add_subcommand("census", "count non-word-representable graphs of a given order");
  auto n = std::make_shared<int>(0);
  auto source = std::make_shared<std::string>("builtin");
  auto emit = std::make_shared<std::string>();
  auto all = std::make_shared<bool>(false);
  auto threads = std::make_shared<unsigned>(0);
  sub->add_option("n", *n, "number of vertices")->required()->check(CLI::NonNegativeNumber);
  sub->add_option("--source", *source, "builtin enumeration or graph6 on standard input")
      ->check(CLI::IsMember({"builtin", "graph6"}));
  sub->add_option("--emit", *emit, "print the non-word-representable graphs")
      ->check(CLI::IsMember({"graph6", "graph"}));
  sub->add_flag("--all", *all, "include disconnected graphs");
  sub->add_option("--threads", *threads, "worker threads (0 = all cores)");
  sub->callback([=, &c] {
    CensusResult r;
    if (*source == "builtin") {
      r = census_non_word_representable(*n, !*all, *threads);
    } else {
      const auto graphs = read_graph6(c.in);
      r = census_of(*n, graphs, !*all, *threads);
    }
    c.out << "n=" << r.n << ": " << r.examined << (*all ? " graphs" : " connected graphs")
          << ", " << r.non_word_representable.size() << " non-word-representable\n";
    if (*emit == "graph6") {
      write_graph6(c.out, r.non_word_representable);
    } else if (*emit == "graph") {
      for (const auto& g : r.non_word_representable) c.out << format_graph(g) << "\n";
    }
    c.code = kVerified;
  });
}

void add_catalog(CLI::App& app, Context& c) {
  auto* sub = app.add_subcommand("catalog", "named graphs and stored artifacts");
  sub->require_subcommand(1);
  auto name = std::make_shared<std::string>();
  auto format = std::make_shared<std::string>("graph");

  sub->add_subcommand("list", "list entry names")->callback([&c] {
    for (const auto& n : catalog_names()) c.out << n << "\n";
  });

  auto* show = sub->add_subcommand("show", "describe an entry and its artifacts");
  show->add_option("name", *name, "entry name")->required();
  show->callback([=, &c] {
    const auto e = catalog_get(*name);
    c.out << "# " << e.name << ": " << e.description << "\n";
    c.out << "# " << e.graph.order() << " vertices, " << e.graph.size() << " edges\n";
    c.out << format_graph(e.graph);
    for (const auto& w : e.golden_words) {
      c.out << "word (k=" << w.k << (w.derived ? ", derived" : "") << "): " << w.word.to_string(true) << "\n";
    }
    for (const auto& [u, v] : e.added_edges) c.out << "added edge: " << e.graph.label(u) << " " << e.graph.label(v) << "\n";
    for (const auto& d : e.golden_orientations)
      for (auto [u, v] : d.arcs()) c.out << "arc: " << d.base().label(u) << " " << d.base().label(v) << "\n";
    for (const auto& s : e.special_subsets) {
      c.out << "subset " << s.name << ":";
      for (VertexId v : members(s.vertices)) c.out << " " << e.graph.label(v);
      c.out << "\n";
    }
  });

  auto* exp = sub->add_subcommand("export", "write an entry as a graph, orientation or graph6 file");
  exp->add_option("name", *name, "entry name")->required();
  exp->add_option("--format", *format, "graph, orientation, graph6 or words")
      ->check(CLI::IsMember({"graph", "orientation", "graph6", "words"}));
  exp->callback([=, &c] {
    const auto e = catalog_get(*name);
    if (*format == "graph") {
      c.out << format_graph(e.graph);
    } else if (*format == "graph6") {
      c.out << to_graph6(e.graph) << "\n";
    } else if (*format == "words") {
      for (const auto& w : e.golden_words) c.out << w.word.to_string() << "\n";
    } else {
      if (e.golden_orientations.empty()) throw InputError("entry has no orientation");
      c.out << format_orientation(e.golden_orientations.front());
    }
  });

  sub->add_subcommand("verify", "re-verify every stored artifact")->callback([&c] {
    const auto report = verify_catalog();
    for (const auto& check : report.checks) {
      c.out << (check.passed ? "pass " : "FAIL ") << check.entry << " " << check.item;
      if (!check.passed) c.out << ": " << check.detail;
      c.out << "\n";
    }
    c.code = report.all_passed() ? kVerified : kRefuted;
  });
}

void add_find(CLI::App& app, Context& c) {
  auto* sub = app.add_subcommand("find", "search for representants");
  sub->require_subcommand(1);
  auto graph = std::make_shared<std::string>();
  auto nodes = std::make_shared<std::uint64_t>(0);
  auto compact = std::make_shared<bool>(false);
  auto budget = std::make_shared<SearchBudget>();
  auto k = std::make_shared<int>(1);

  auto* uniform = sub->add_subcommand("uniform", "uniform word-representant");
  uniform->add_option("graph", *graph, "graph file or @catalog-name")->required();
  uniform->add_option("--max-nodes", *nodes, "node budget");
  uniform->add_option("--max-uniformity", budget->max_uniformity, "largest t")->check(CLI::PositiveNumber);
  uniform->add_flag("--compact", *compact, "print without separators when possible");
  uniform->callback([=, &c] {
    const Graph g = load_graph(*graph);
    SearchBudget b = *budget;
    b.max_nodes = *nodes ? *nodes : default_nodes();
    auto r = find_uniform_representant(g, b);
    c.code = exit_for(r.outcome);
    if (r.found()) {
      c.out << "# " << uniformity(*r.value).value_or(0) << "-uniform, " << r.nodes << " nodes\n";
      print_word_and_verdict(c, *r.value, g, 0, *compact);
    } else {
      c.out << to_string(r.outcome) << (r.outcome == Outcome::none ? " (not word-representable)" : "")
            << " after " << r.nodes << " nodes\n";
    }
  });

  auto* k11 = sub->add_subcommand("k11", "shortest k-11-representant");
  k11->add_option("graph", *graph, "graph file or @catalog-name")->required();
  k11->add_option("-k", *k, "number of allowed 11 occurrences for an edge")->check(CLI::NonNegativeNumber);
  k11->add_option("--max-nodes", *nodes, "node budget");
  k11->add_option("--max-length", budget->max_word_length, "longest word tried")->check(CLI::PositiveNumber);
  k11->add_option("--min-length", budget->min_word_length, "first length tried")->check(CLI::NonNegativeNumber);
  k11->add_flag("--compact", *compact, "print without separators when possible");
  k11->callback([=, &c] {
    const Graph g = load_graph(*graph);
    SearchBudget b = *budget;
    b.max_nodes = *nodes ? *nodes : default_nodes();
    auto r = find_k11_representant(g, *k, b);
    c.code = exit_for(r.outcome);
    if (r.found()) {
      c.out << "# length " << r.value->length() << ", " << r.nodes << " nodes\n";
      print_word_and_verdict(c, *r.value, g, *k, *compact);
    } else {
      c.out << to_string(r.outcome) << " after " << r.nodes << " nodes\n";
    }
  });
}

void add_info(CLI::App& app, Context& c) {
  auto* sub = app.add_subcommand("info", "basic invariants of a graph");
  auto graph = std::make_shared<std::string>();
  sub->add_option("graph", *graph, "graph file or @catalog-name")->required();
  sub->callback([=, &c] {
    const Graph g = load_graph(*graph);
    c.out << "vertices: " << g.order() << "\nedges: " << g.size() << "\ndegrees:";
    for (VertexId v = 0; v < g.order(); ++v) c.out << " " << g.degree(v);
    c.out << "\nconnected: " << (is_connected(g) ? "yes" : "no") << "\n";
    if (g.order() <= 16) c.out << "chromatic number: " << chromatic_number(g) << "\n";
    if (g.order() <= kMaxCanonicalOrder) c.out << "canonical graph6: " << to_graph6(canonical_graph(g)) << "\n";
    c.out << "word-representable: " << (is_word_representable(g) ? "yes" : "no") << "\n";
  });
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Context c{in, out, err};
  CLI::App app{"Word-representations and k-11-representations of graphs", "wordrep"};
  app.require_subcommand(1);
  add_verify(app, c);
  add_orient(app, c);
  add_construct(app, c);
  add_census(app, c);
  add_catalog(app, c);
  add_find(app, c);
  add_info(app, c);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kVerified;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kVerified;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kUsage;
  } catch (const PreconditionError& e) {
    err << "precondition failed: " << e.what() << "\n";
    return kUsage;
  } catch (const VerificationError& e) {
    err << "verification failed: " << e.what() << "\n";
    return kRefuted;
  }
  return c.code;
}

}  // namespace wordrep::cli
