#pragma once

// Machine-readable renderings of a ChainReport.
//
// JSON: {"n", "i_max", "wt_bound", "all_match", "rows": [ {"n", "i", "r_i",
// "h_i", "generators": [text], "counts": {k: int}, "predicted": {k: int},
// "total", "predicted_total", "checked", "match", "discards"} ]}
//
// CSV: n,i,r,h,k,count,predicted,match   (one line per row and layer; match
// is "-" for rows below the threshold)

#include <ostream>
#include <sstream>
#include <string>

#include "json.hpp"

#include "chains.hpp"

namespace hyperwreath {

inline nlohmann::ordered_json to_json(const ChainReport& report) {
  nlohmann::ordered_json j;
  j["n"] = report.n;
  j["i_max"] = report.i_max;
  j["wt_bound"] = report.wt_bound;
  j["all_match"] = report.all_match();
  j["rows"] = nlohmann::ordered_json::array();
  for (const ChainRow& row : report.rows) {
    nlohmann::ordered_json r;
    r["n"] = report.n;
    r["i"] = row.i;
    r["r_i"] = row.r;
    r["h_i"] = row.h;
    r["generators"] = nlohmann::ordered_json::array();
    for (const MonicMonomial& m : row.generators) r["generators"].push_back(m.to_string());
    r["counts"] = nlohmann::ordered_json::object();
    r["predicted"] = nlohmann::ordered_json::object();
    for (const auto& [k, c] : row.counts) r["counts"][std::to_string(k)] = c;
    for (const auto& [k, c] : row.predicted) r["predicted"][std::to_string(k)] = c;
    r["total"] = row.total;
    r["predicted_total"] = row.predicted_total;
    r["checked"] = row.checked;
    r["match"] = row.match;
    r["discards"] = row.discards;
    j["rows"].push_back(std::move(r));
  }
  return j;
}

inline void write_csv(std::ostream& os, const ChainReport& report) {
  os << "n,i,r,h,k,count,predicted,match\n";
  for (const ChainRow& row : report.rows)
    for (const auto& [k, count] : row.counts) {
      const bool layer_match = count == row.predicted.at(k);
      os << report.n << ',' << row.i << ',' << row.r << ',' << row.h << ',' << k << ',' << count << ','
         << row.predicted.at(k) << ',' << (row.checked ? (layer_match ? "true" : "false") : "-") << '\n';
    }
}

inline void write_text(std::ostream& os, const ChainReport& report) {
  os << "normalizer chain of W_" << report.n << " (threshold i > " << (report.n - 4) * (report.n - 1) << ")\n";
  for (const ChainRow& row : report.rows) {
    os << "i=" << row.i << " r=" << row.r << " h=" << row.h << " |L_i|=" << row.total
       << " predicted=" << row.predicted_total << " per-layer:";
    for (const auto& [k, c] : row.counts) os << ' ' << c << '/' << row.predicted.at(k);
    os << (row.checked ? (row.match ? "  ok" : "  MISMATCH") : "  (below threshold)") << '\n';
    os << "    L_i = {";
    for (std::size_t g = 0; g < row.generators.size(); ++g)
      os << (g ? ", " : "") << row.generators[g].to_string();
    os << "}\n";
  }
}

} // namespace hyperwreath
