#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "lvc/refine.hpp"
#include "lvc/structure.hpp"

namespace lvc {

// {method, delta (null when not applicable), rounds, colour_histogram,
// classes}. Classes are vertex lists ordered by colour id; for fwl2 the
// domain is ordered pairs indexed row-major, so entry u*n+v names (u, v).
nlohmann::json refine_result_json(const RefineResult& result,
                                  const std::string& method,
                                  std::optional<int> delta);

// {method, delta, distinguished, rounds, histograms: [h1, h2]}.
nlohmann::json compare_report_json(const CompareReport& report,
                                   const std::string& method,
                                   std::optional<int> delta);

// {cut_vertices, cut_edges, in_cycle}.
nlohmann::json biconn_report_json(const BiconnReport& report);

}  // namespace lvc
