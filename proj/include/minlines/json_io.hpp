#pragma once

// JSON encodings shared by the CLI and tests. Roots, coroots and weights are
// integer arrays; node sets are sorted arrays; elements are serialized as
// their lexicographically least reduced word.

#include "json.hpp"

#include "minlines/bottsam.hpp"
#include "minlines/perrin.hpp"
#include "minlines/schubert.hpp"
#include "minlines/weyl.hpp"

namespace minlines::json {

using Json = nlohmann::ordered_json;

template <class Tag>
Json coeffs(const Coeffs<Tag>& v) {
  return v.to_vector();
}

inline Json nodes(const ParabolicSet& s) { return s.nodes(); }

inline Json word(const Word& w) { return Json(w); }

inline Json element(const WeylElement& w) { return w.reduced_word(); }

inline Json elements(const std::vector<WeylElement>& v) {
  Json out = Json::array();
  for (const auto& e : v) out.push_back(element(e));
  return out;
}

inline Json lines_report(const LinesThroughPoint& r) {
  Json j;
  j["node"] = r.node;
  j["ambient"] = nodes(r.ambient);
  j["dimension"] = r.dimension;
  j["height_dimension"] = r.height_dimension;
  j["levi"] = nodes(r.levi);
  j["levi_type"] = r.levi_type;
  j["stabilizer_levi"] = nodes(r.stabilizer_levi);
  j["stabilizer_type"] = r.stabilizer_type;
  if (r.labels) {
    j["space"] = r.labels->space;
    j["lines"] = r.labels->lines;
  } else {
    j["space"] = nullptr;
    j["lines"] = nullptr;
  }
  return j;
}

inline Json curve(const FlagSpace& space, const TStableCurve& c) {
  Json j;
  j["beta"] = coeffs(c.beta);
  Json deg = Json::object();
  for (auto [node, d] : curve_degrees(space, c)) deg[std::to_string(node)] = d;
  j["degrees"] = deg;
  j["antican"] = anticanonical_degree(space, c);
  return j;
}

inline Json block_strings(const GeneralizedDecomposition& d) {
  Json out = Json::array();
  for (const auto& b : d.block_words) out.push_back(format_word(b));
  return out;
}

inline Json goodness(const GoodnessReport& g) {
  Json rows = Json::array();
  for (const auto& r : g.rows) {
    Json j;
    j["block"] = r.block;
    j["left"] = r.left;
    j["right"] = r.right;
    j["left_set"] = nodes(r.left_set);
    j["tail_lower"] = nodes(r.tail_lower);
    j["right_set"] = nodes(r.right_set);
    rows.push_back(j);
  }
  Json j;
  j["construction1"] = g.construction1;
  j["good"] = g.good();
  j["rows"] = rows;
  return j;
}

inline Json family(const MinimalFamilyReport& r) {
  Json j;
  j["block"] = r.block;
  j["alpha"] = r.alpha;
  j["heights"] = {r.tail_height, r.block_height};
  j["minimal"] = r.minimal;
  j["dimension"] = r.dimension ? Json(*r.dimension) : Json(nullptr);
  j["fiber"] = lines_report(r.fiber);
  return j;
}

}  // namespace minlines::json
