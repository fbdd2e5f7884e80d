#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "lvc/graph.hpp"
#include "lvc/json_io.hpp"
#include "lvc/refine.hpp"
#include "lvc/structure.hpp"
#include "lvc/suite.hpp"

using namespace lvc;

TEST_CASE("case list is sorted, unique, and well-formed") {
  const auto cases = all_cases(42);
  CHECK(cases.size() >= 25);
  std::set<std::string> names;
  for (const auto& c : cases) {
    CAPTURE(c.name);
    CHECK(names.insert(c.name).second);
    CHECK(!c.name.empty());
    CHECK(c.criterion >= 0);
    CHECK(c.criterion <= 13);
    CHECK(!c.generators.empty());
    CHECK(!c.method.empty());
    const bool known_expected = c.expected == "distinguished" ||
                                c.expected == "not_distinguished" ||
                                c.expected == "property-pass";
    CHECK(known_expected);
    const bool known_provenance = c.provenance == "literature" ||
                                  c.provenance == "definition" ||
                                  c.provenance == "computed";
    CHECK(known_provenance);
    CHECK(static_cast<bool>(c.run));
  }
  CHECK(std::is_sorted(cases.begin(), cases.end(),
                       [](const SuiteCase& a, const SuiteCase& b) {
                         return a.name < b.name;
                       }));

  std::set<int> criteria;
  for (const auto& c : cases) criteria.insert(c.criterion);
  for (int k = 1; k <= 13; ++k) {
    CAPTURE(k);
    CHECK(criteria.count(k) == 1);
  }
}

TEST_CASE("filter selects by substring and reports totals") {
  const auto report = run_suite("pair-2xc3", 1);
  CHECK(report.total == 4);
  CHECK(report.failed == 0);
  CHECK(report.all_pass);
  CHECK(report.json["total"] == 4);
  CHECK(report.json["filter"] == "pair-2xc3");
  CHECK(report.json["cases"].size() == 4);
  for (const auto& c : report.json["cases"]) {
    CHECK(c["pass"] == true);
    const std::string name = c["name"];
    CHECK(name.find("pair-2xc3") != std::string::npos);
  }
  CHECK(report.summary.find("PASS") != std::string::npos);
}

TEST_CASE("an unmatched filter runs nothing and passes") {
  const auto report = run_suite("no-such-case", 7);
  CHECK(report.total == 0);
  CHECK(report.failed == 0);
  CHECK(report.all_pass);
  CHECK(report.json["cases"].empty());
  CHECK(report.summary.find("no cases match") != std::string::npos);
}

TEST_CASE("refinement results serialize losslessly") {
  ColourTable table;
  const auto r = refine_wl1(generate("path", {3}), table);
  const auto j = refine_result_json(r, "wl1", {});
  CHECK(j["method"] == "wl1");
  CHECK(j["delta"].is_null());
  CHECK(j["rounds"] == r.rounds);
  CHECK(j["colour_histogram"].size() == 2);
  CHECK(j["classes"].size() == 2);
  const auto round_trip = nlohmann::json::parse(j.dump());
  CHECK(round_trip == j);

  ColourTable table2;
  const auto r2 =
      refine_lvc(generate("cycle", {6}), 2, Scheme::bfc, table2);
  const auto j2 = refine_result_json(r2, "bfc", 2);
  CHECK(j2["method"] == "bfc");
  CHECK(j2["delta"] == 2);
}

TEST_CASE("compare reports serialize with both histograms") {
  const auto rep = distinguishable(generate("union_cycles", {3, 3}),
                                   generate("cycle", {6}),
                                   {MethodKind::dfc, 1});
  const auto j = compare_report_json(rep, "dfc", 1);
  CHECK(j["method"] == "dfc");
  CHECK(j["delta"] == 1);
  CHECK(j["distinguished"] == true);
  CHECK(j["histograms"].size() == 2);
  CHECK(nlohmann::json::parse(j.dump()) == j);
}

TEST_CASE("biconnectivity reports serialize") {
  const auto r = tarjan_biconnectivity(generate("uneven_barbell", {3, 3, 1}));
  const auto j = biconn_report_json(r);
  CHECK(j["cut_vertices"].size() == r.cut_vertices.size());
  CHECK(j["cut_edges"].size() == r.cut_edges.size());
  CHECK(j["in_cycle"].size() == r.in_cycle.size());
  CHECK(nlohmann::json::parse(j.dump()) == j);
}

TEST_CASE("suite json mirrors the case fields") {
  const auto report = run_suite("srg-rook-shrikhande-dfc1", 3);
  REQUIRE(report.total == 1);
  const auto& c = report.json["cases"][0];
  CHECK(c["criterion"] == 5);
  CHECK(c["expected"] == "distinguished");
  CHECK(c["method"] == "dfc delta=1");
  CHECK(c.contains("generators"));
  CHECK(c.contains("provenance"));
  CHECK(c.contains("detail"));
  CHECK(report.json["seed"] == 3);
}
