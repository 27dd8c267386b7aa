#pragma once

/**
 * @file jsonio.hpp
 * @brief Deterministic JSON renderings of the domain values, shared by the
 *        CLI and the golden-file tests. Key order is fixed; no timestamps.
 */

#include <json.hpp>

#include <map>

#include "linksing/conjecture.hpp"
#include "linksing/semigroup.hpp"
#include "linksing/series.hpp"

namespace linksing {

using ordered_json = nlohmann::ordered_json;

/// Big integers render as JSON numbers while they fit the double-safe range,
/// as decimal strings beyond it.
inline ordered_json json_int(const Int& v) {
  static const Int kSafe = Int(1) << 53;
  if (v > -kSafe && v < kSafe) return ordered_json(static_cast<long long>(v));
  return ordered_json(v.str());
}

inline ordered_json semigroup_json(const NumSemigroup& sg) {
  ordered_json j;
  j["generators"] = sg.generators();
  j["gaps"] = sg.gaps();
  j["conductor"] = sg.conductor();
  j["delta"] = sg.delta();
  j["milnor"] = sg.milnor();
  return j;
}

inline ordered_json shift_set_json(const ShiftSet& s) {
  ordered_json j;
  j["exceptional"] = s.exceptional;
  j["threshold"] = s.threshold;
  return j;
}

/// One row per module: minimal generators, delta - #(N \ Delta), shifts.
inline ordered_json modules_table_json(const NumSemigroup& sg) {
  ordered_json rows = ordered_json::array();
  for (const GammaModule& mod : semigroup_modules(sg)) {
    ordered_json row;
    row["module"] = mod.min_generators();
    row["value"] = mod.added_gap_count();
    row["shifts"] = shift_set_json(module_shifts(sg, mod));
    rows.push_back(std::move(row));
  }
  ordered_json j;
  j["semigroup"] = semigroup_json(sg);
  j["modules"] = std::move(rows);
  return j;
}

inline ordered_json series_json(const TruncSeries& s) {
  ordered_json coeffs = ordered_json::array();
  for (const auto& [e, c] : s.coeffs()) {
    ordered_json term;
    term["q"] = e;
    term["coeff"] = c.to_string();
    coeffs.push_back(std::move(term));
  }
  ordered_json j;
  j["trunc"] = s.trunc();
  j["coeffs"] = std::move(coeffs);
  return j;
}

inline ordered_json report_json(const CheckReport& r) {
  ordered_json j;
  j["check"] = r.check;
  ordered_json params;
  for (const auto& [name, value] : r.parameters) params[name] = value;
  j["parameters"] = std::move(params);
  j["status"] = r.pass ? "pass" : "fail";
  if (r.first_mismatch) {
    ordered_json m;
    m["q_exponent"] = r.first_mismatch->q_exponent;
    m["expected"] = r.first_mismatch->expected;
    m["actual"] = r.first_mismatch->actual;
    j["first_mismatch"] = std::move(m);
  }
  return j;
}

inline ordered_json histogram_json(
    int k, int n, const std::map<long long, std::map<int, long long>>& hist) {
  ordered_json rows = ordered_json::array();
  for (const auto& [l, by_m] : hist) {
    ordered_json row;
    row["l"] = l;
    ordered_json counts = ordered_json::array();
    for (const auto& [m, count] : by_m) {
      ordered_json c;
      c["m"] = m;
      c["count"] = count;
      counts.push_back(std::move(c));
    }
    row["counts"] = std::move(counts);
    rows.push_back(std::move(row));
  }
  ordered_json j;
  j["k"] = k;
  j["n"] = n;
  j["histogram"] = std::move(rows);
  return j;
}

inline ordered_json genus_json(const GenusExpansion& g) {
  ordered_json terms = ordered_json::array();
  for (int h = 0; h <= g.delta(); ++h) {
    ordered_json t;
    t["h"] = h;
    t["n_h"] = g.n(h).to_string();
    t["n_h_at_zero"] = json_int(g.n_at_zero(h));
    terms.push_back(std::move(t));
  }
  ordered_json j;
  j["branches"] = g.branches;
  j["milnor"] = g.milnor;
  j["coefficients"] = std::move(terms);
  return j;
}

}  // namespace linksing
