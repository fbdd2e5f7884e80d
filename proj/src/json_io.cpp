#include "lvc/json_io.hpp"

#include <map>

namespace lvc {

namespace {

nlohmann::json histogram_json(const Histogram& h) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [colour, count] : h) out.push_back({colour, count});
  return out;
}

}  // namespace

nlohmann::json refine_result_json(const RefineResult& result,
                                  const std::string& method,
                                  std::optional<int> delta) {
  nlohmann::json out;
  out["method"] = method;
  out["delta"] = delta ? nlohmann::json(*delta) : nlohmann::json(nullptr);
  out["rounds"] = result.rounds;
  out["colour_histogram"] = histogram_json(result.histogram);
  std::map<int, std::vector<int>> classes;
  for (int u = 0; u < static_cast<int>(result.colouring.size()); ++u) {
    classes[result.colouring[u]].push_back(u);
  }
  nlohmann::json cls = nlohmann::json::array();
  for (const auto& [colour, members] : classes) cls.push_back(members);
  out["classes"] = std::move(cls);
  return out;
}

nlohmann::json compare_report_json(const CompareReport& report,
                                   const std::string& method,
                                   std::optional<int> delta) {
  nlohmann::json out;
  out["method"] = method;
  out["delta"] = delta ? nlohmann::json(*delta) : nlohmann::json(nullptr);
  out["distinguished"] = report.distinguished;
  out["rounds"] = report.rounds;
  out["histograms"] = {histogram_json(report.histogram1),
                       histogram_json(report.histogram2)};
  return out;
}

nlohmann::json biconn_report_json(const BiconnReport& report) {
  nlohmann::json out;
  out["cut_vertices"] = report.cut_vertices;
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [a, b] : report.cut_edges) edges.push_back({a, b});
  out["cut_edges"] = std::move(edges);
  out["in_cycle"] = report.in_cycle;
  return out;
}

}  // namespace lvc
