#pragma once

#include <string>

#include "json.hpp"
#include "ordtrail/extremal.hpp"
#include "ordtrail/graph.hpp"
#include "ordtrail/labeling.hpp"
#include "ordtrail/oracle.hpp"
#include "ordtrail/trail.hpp"

// JSON renderings of the library's results. Keys keep insertion order so
// output is byte-stable; docs/*.schema.json describe each document.

namespace ordtrail::report {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

inline Json weight_json(const Weight& w) {
  if (w.is_integer()) return Json(w.num());
  return Json(w.to_double());
}

/// {"start", "vertices", "weights", "length"}; vertices are 1-based.
inline Json trail_json(const WeightedGraph& g, const Trail& t, VertexId start) {
  Json vertices = Json::array();
  for (VertexId v : t.vertices()) vertices.push_back(v.label());
  Json weights = Json::array();
  for (const Step& s : t.steps) {
    const auto w = g.weight(s.from, s.to);
    weights.push_back(w ? weight_json(*w) : Json(nullptr));
  }
  Json out;
  out["start"] = t.empty() ? start.label() : t.steps.front().from.label();
  out["vertices"] = std::move(vertices);
  out["weights"] = std::move(weights);
  out["length"] = t.length();
  return out;
}

inline Json trail_report_json(const WeightedGraph& g, const TrailReport& r, bool with_trail,
                              bool with_labels) {
  Json out;
  out["schema_version"] = kSchemaVersion;
  out["kind"] = std::string(to_string(r.kind));
  out["optimum"] = r.optimum;
  out["start"] = r.start.label();
  if (with_trail) out["trail"] = trail_json(g, r.witness, r.start);
  if (with_labels) out["labels"] = r.labels;
  out["bound_2_floor_q_over_n"] = r.bound_a;
  out["bound_floor_2q_over_n"] = r.bound_b;
  return out;
}

inline Json bound_check_json(const BoundCheck& b) {
  Json out;
  out["longest"] = b.longest;
  out["bound_2_floor_q_over_n"] = b.bound_a;
  out["pass_2_floor_q_over_n"] = b.pass_a;
  out["bound_floor_2q_over_n"] = b.bound_b;
  out["pass_floor_2q_over_n"] = b.pass_b;
  return out;
}

inline Json structure_json(const Structure& s) {
  Json out;
  if (s.complete) {
    out["kind"] = "complete";
    out["n"] = s.n;
    return out;
  }
  out["kind"] = "edges";
  out["n"] = s.n;
  Json edges = Json::array();
  for (const EdgeKey& k : s.keys) edges.push_back({k.a.label(), k.b.label()});
  out["edges"] = std::move(edges);
  return out;
}

/// elapsed_ms is wall-clock and therefore only emitted on request.
inline Json extremal_json(const ExtremalReport& r, bool with_timing) {
  Json out;
  out["schema_version"] = kSchemaVersion;
  out["structure"] = structure_json(r.structure);
  Json mode;
  if (r.options.mode == SearchMode::Exhaustive) {
    mode["kind"] = "exhaustive";
  } else {
    mode["kind"] = "sampled";
    mode["samples"] = r.options.samples;
    mode["seed"] = r.options.seed;
  }
  out["mode"] = std::move(mode);
  out["reduced"] = r.reduced;
  out["reduction_factor"] = r.reduction_factor;
  out["examined"] = r.examined;
  out["f"] = r.minimum;
  out["witness"] = r.witness;
  if (with_timing) out["elapsed_ms"] = r.elapsed.count();
  return out;
}

}  // namespace ordtrail::report
