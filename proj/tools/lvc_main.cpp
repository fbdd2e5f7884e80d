#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lvc/graph.hpp"
#include "lvc/json_io.hpp"
#include "lvc/refine.hpp"
#include "lvc/structure.hpp"
#include "lvc/suite.hpp"

namespace {

// Accepts a file path or an inline "gen:family:p1,p2" reference.
lvc::Graph load_graph(const std::string& ref) {
  if (ref.rfind("gen:", 0) == 0) {
    const std::string rest = ref.substr(4);
    const auto colon = rest.find(':');
    const std::string family =
        colon == std::string::npos ? rest : rest.substr(0, colon);
    std::vector<int> params;
    if (colon != std::string::npos) {
      std::stringstream ss(rest.substr(colon + 1));
      std::string token;
      while (std::getline(ss, token, ',')) {
        if (!token.empty()) params.push_back(std::stoi(token));
      }
    }
    return lvc::generate(family, params);
  }
  std::ifstream in(ref);
  if (!in) throw std::invalid_argument("cannot open graph file: " + ref);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return lvc::parse_edge_list(buffer.str());
}

std::vector<int> load_labels(const std::string& path, int n) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open labels file: " + path);
  std::vector<int> labels;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    try {
      labels.push_back(std::stoi(line));
    } catch (const std::exception&) {
      throw std::invalid_argument("labels file: not an integer: " + line);
    }
  }
  if (static_cast<int>(labels.size()) != n) {
    throw std::invalid_argument(
        "labels file must list exactly one label per vertex (found " +
        std::to_string(labels.size()) + ", graph has " + std::to_string(n) +
        ")");
  }
  return labels;
}

lvc::MethodKind parse_method(const std::string& name) {
  if (name == "wl1") return lvc::MethodKind::wl1;
  if (name == "fwl2") return lvc::MethodKind::fwl2;
  if (name == "bfc") return lvc::MethodKind::bfc;
  if (name == "dfc") return lvc::MethodKind::dfc;
  throw std::invalid_argument("unknown method: " + name);
}

bool needs_delta(lvc::MethodKind kind) {
  return kind == lvc::MethodKind::bfc || kind == lvc::MethodKind::dfc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"search-guided local vertex colouring over delta-hop subgraphs"};
  app.require_subcommand(1);
  const auto method_values = CLI::IsMember({"wl1", "fwl2", "bfc", "dfc"});

  auto* colour = app.add_subcommand(
      "colour", "refine one graph and print the stable colouring as JSON");
  std::string colour_graph, colour_method, colour_labels;
  int colour_delta = 0;
  std::uint64_t colour_seed = 0;
  colour->add_option("graph", colour_graph,
                     "edge-list path or gen:family:p1,p2")->required();
  colour->add_option("--method", colour_method, "wl1 | fwl2 | bfc | dfc")
      ->required()
      ->check(method_values);
  colour->add_option("--delta", colour_delta,
                     "hop radius, required for bfc and dfc");
  colour->add_option("--labels", colour_labels,
                     "path with one integer label per vertex");
  colour->add_option("--seed", colour_seed, "switch to seeded tie-breaking");

  auto* compare = app.add_subcommand(
      "compare", "refine two graphs jointly and report the verdict as JSON");
  std::string compare_g1, compare_g2, compare_method;
  int compare_delta = 0;
  compare->add_option("graph1", compare_g1,
                      "edge-list path or gen:family:p1,p2")->required();
  compare->add_option("graph2", compare_g2,
                      "edge-list path or gen:family:p1,p2")->required();
  compare->add_option("--method", compare_method, "wl1 | fwl2 | bfc | dfc")
      ->required()
      ->check(method_values);
  compare->add_option("--delta", compare_delta,
                      "hop radius, required for bfc and dfc");

  auto* detect = app.add_subcommand(
      "detect", "print one biconnectivity slice of a graph as JSON");
  std::string detect_graph, detect_what;
  detect->add_option("graph", detect_graph,
                     "edge-list path or gen:family:p1,p2")->required();
  detect->add_option("--what", detect_what,
                     "cut-vertices | cut-edges | cycles")
      ->required()
      ->check(CLI::IsMember({"cut-vertices", "cut-edges", "cycles"}));

  auto* gen = app.add_subcommand("gen", "write a named graph as an edge list");
  std::string gen_family, gen_out;
  std::vector<int> gen_params;
  gen->add_option("--family", gen_family, "generator family name")->required();
  gen->add_option("--params", gen_params, "integer family parameters");
  gen->add_option("--out", gen_out, "output path (default: standard output)");

  auto* suite = app.add_subcommand(
      "suite", "run the reproduction suite; JSON report on standard output");
  std::string suite_filter;
  std::uint64_t suite_seed = 42;
  suite->add_option("--filter", suite_filter,
                    "run only cases whose name contains this substring");
  suite->add_option("--seed", suite_seed,
                    "seed for the informational witness search");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (colour->parsed()) {
      const lvc::MethodKind kind = parse_method(colour_method);
      if (needs_delta(kind) && colour->count("--delta") == 0) {
        std::cerr << "error: --delta is required for method " << colour_method
                  << "\n";
        return 2;
      }
      const lvc::Graph g = load_graph(colour_graph);
      std::vector<int> labels;
      if (colour->count("--labels") > 0) {
        if (kind == lvc::MethodKind::fwl2) {
          std::cerr << "error: --labels is not supported with fwl2\n";
          return 2;
        }
        labels = load_labels(colour_labels, g.n);
      }
      const lvc::TieBreaker tie = colour->count("--seed") > 0
                                      ? lvc::TieBreaker::seeded(colour_seed)
                                      : lvc::TieBreaker::ascending();
      lvc::ColourTable table;
      lvc::RefineResult result;
      std::optional<int> delta;
      if (kind == lvc::MethodKind::wl1) {
        result = lvc::refine_wl1(g, table, labels);
      } else if (kind == lvc::MethodKind::fwl2) {
        result = lvc::refine_fwl2(g, table);
      } else {
        const lvc::Scheme scheme = kind == lvc::MethodKind::bfc
                                       ? lvc::Scheme::bfc
                                       : lvc::Scheme::dfc;
        result = lvc::refine_lvc(g, colour_delta, scheme, table, labels, tie);
        delta = colour_delta;
      }
      std::cout << lvc::refine_result_json(result, colour_method, delta).dump(2)
                << "\n";
      return 0;
    }

    if (compare->parsed()) {
      const lvc::MethodKind kind = parse_method(compare_method);
      if (needs_delta(kind) && compare->count("--delta") == 0) {
        std::cerr << "error: --delta is required for method " << compare_method
                  << "\n";
        return 2;
      }
      const lvc::Graph g1 = load_graph(compare_g1);
      const lvc::Graph g2 = load_graph(compare_g2);
      const lvc::MethodSpec m{kind, needs_delta(kind) ? compare_delta : 0};
      const lvc::CompareReport rep = lvc::distinguishable(g1, g2, m);
      std::optional<int> delta;
      if (needs_delta(kind)) delta = compare_delta;
      std::cout << lvc::compare_report_json(rep, compare_method, delta).dump(2)
                << "\n";
      return 0;
    }

    if (detect->parsed()) {
      const lvc::Graph g = load_graph(detect_graph);
      const nlohmann::json full =
          lvc::biconn_report_json(lvc::tarjan_biconnectivity(g));
      const char* key = detect_what == "cut-vertices" ? "cut_vertices"
                        : detect_what == "cut-edges"  ? "cut_edges"
                                                      : "in_cycle";
      std::cout << full[key].dump(2) << "\n";
      return 0;
    }

    if (gen->parsed()) {
      const lvc::Graph g = lvc::generate(gen_family, gen_params);
      const std::string text = lvc::format_edge_list(g);
      if (gen_out.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(gen_out);
        if (!out) {
          throw std::invalid_argument("cannot open output file: " + gen_out);
        }
        out << text;
      }
      return 0;
    }

    if (suite->parsed()) {
      const lvc::SuiteReport rep = lvc::run_suite(suite_filter, suite_seed);
      std::cout << rep.json.dump(2) << "\n";
      std::cerr << rep.summary;
      return rep.all_pass ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
