#pragma once

// JSON encoding of spaces, maps, homotopies, distance certificates and motion
// plans. Scalars are written as "p/q" strings (or integers) and read from
// either, so files round-trip exactly.

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "drht/invariants.hpp"

namespace drht {

using nlohmann::json;

inline json scalar_json(const Rational& q) { return q.is_integer() ? json(q.num()) : json(q.str()); }

inline Rational scalar_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<Rational::Int>());
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  throw Error("expected a scalar (\"p/q\" string or integer), got " + j.dump());
}

inline json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(path.string() + ": " + e.what());
  }
}

// Spaces ---------------------------------------------------------------------

inline json to_json(const FiniteMetricSpace& x) {
  json metric = json::array();
  for (std::size_t i = 0; i < x.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < x.size(); ++j) row.push_back(scalar_json(x.dist(i, j)));
    metric.push_back(std::move(row));
  }
  return {{"points", x.labels()}, {"metric", std::move(metric)}};
}

inline Space space_from_json(const json& j) {
  if (!j.is_object() || !j.contains("points") || !j.contains("metric"))
    throw Error("space must be an object with \"points\" and \"metric\"");
  const auto labels = j.at("points").get<std::vector<std::string>>();
  const auto& rows = j.at("metric");
  if (!rows.is_array() || rows.size() != labels.size()) throw Error("metric must have one row per point");
  std::vector<std::vector<Rational>> m;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i].is_array() || rows[i].size() != labels.size())
      throw Error("metric row " + std::to_string(i) + " has the wrong length");
    std::vector<Rational> row;
    for (const auto& v : rows[i]) row.push_back(scalar_from_json(v));
    m.push_back(std::move(row));
  }
  return build_space(labels, m);
}

/// A space reference: inline object or path to a space file (relative to `base`).
inline Space space_ref(const json& j, const std::filesystem::path& base = {}) {
  if (j.is_string()) return space_from_json(read_json_file(base / j.get<std::string>()));
  return space_from_json(j);
}

// Maps -----------------------------------------------------------------------

inline json values_json(const LipschitzMap& f) {
  json v = json::object();
  for (std::size_t x = 0; x < f.size(); ++x) v[f.domain()->label(x)] = f.codomain()->label(f(x));
  return v;
}

inline json to_json(const LipschitzMap& f) {
  return {{"domain", to_json(*f.domain())}, {"codomain", to_json(*f.codomain())}, {"values", values_json(f)}};
}

inline LipschitzMap map_values(const Space& x, const Space& y, const json& values) {
  if (!values.is_object()) throw Error("map values must be an object {point: point}");
  std::vector<std::size_t> v(x->size());
  std::vector<bool> seen(x->size(), false);
  for (const auto& [k, val] : values.items()) {
    if (!x->contains(k)) throw Error("map value for unknown domain point " + k);
    if (!val.is_string() || !y->contains(val.get<std::string>()))
      throw Error("map sends " + k + " to an unknown codomain point " + val.dump());
    v[x->index_of(k)] = y->index_of(val.get<std::string>());
    seen[x->index_of(k)] = true;
  }
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (!seen[i]) throw Error("map has no value for " + x->label(i));
  return {x, y, std::move(v)};
}

inline LipschitzMap map_from_json(const json& j, const std::filesystem::path& base = {}) {
  if (!j.is_object() || !j.contains("domain") || !j.contains("codomain") || !j.contains("values"))
    throw Error("map must have \"domain\", \"codomain\" and \"values\"");
  return map_values(space_ref(j.at("domain"), base), space_ref(j.at("codomain"), base), j.at("values"));
}

inline LipschitzMap read_map(const std::filesystem::path& path) {
  return map_from_json(read_json_file(path), path.parent_path());
}

// Homotopies -----------------------------------------------------------------

inline json frames_json(const Homotopy& h) {
  json frames = json::array();
  for (const auto& fr : h.frames) {
    json row = json::array();
    for (auto v : fr) row.push_back(h.codomain->label(v));
    frames.push_back(std::move(row));
  }
  return frames;
}

/// Self-contained witness: spaces, parameters and frames (frame i lists the
/// image of each domain point, in domain order).
inline json to_json(const Homotopy& h) {
  return {{"kind", "homotopy"},
          {"domain", to_json(*h.domain)},
          {"codomain", to_json(*h.codomain)},
          {"s", scalar_json(h.params.s)},
          {"r", scalar_json(h.params.r)},
          {"frames", frames_json(h)}};
}

inline Homotopy homotopy_frames(const Space& x, const Space& y, ScaleParams params, const json& frames) {
  Homotopy h{x, y, {}, params};
  if (!frames.is_array() || frames.empty()) throw Error("homotopy needs a nonempty list of frames");
  for (const auto& row : frames) {
    if (!row.is_array() || row.size() != x->size()) throw Error("frame has the wrong number of points");
    Frame fr;
    for (const auto& v : row) {
      if (!v.is_string() || !y->contains(v.get<std::string>())) throw Error("frame value " + v.dump() + " is not a codomain point");
      fr.push_back(y->index_of(v.get<std::string>()));
    }
    h.frames.push_back(std::move(fr));
  }
  return h;
}

inline Homotopy homotopy_from_json(const json& j, const std::filesystem::path& base = {}) {
  return homotopy_frames(space_ref(j.at("domain"), base), space_ref(j.at("codomain"), base),
                         ScaleParams{scalar_from_json(j.at("s")), scalar_from_json(j.at("r"))}, j.at("frames"));
}

// Distance certificates ------------------------------------------------------

inline json value_json(const DistanceResult& d) {
  switch (d.kind) {
    case DistanceResult::Kind::finite: return d.value;
    case DistanceResult::Kind::infinite: return "inf";
    case DistanceResult::Kind::bounded:
      return {{"lower", d.lower}, {"upper", d.upper == DistanceResult::kUnbounded ? json("inf") : json(d.upper)}};
  }
  return nullptr;
}

inline json to_json(const DistanceResult& d, const LipschitzMap& f, const LipschitzMap& g, ScaleParams params) {
  json j{{"kind", "distance"}, {"s", scalar_json(params.s)}, {"r", scalar_json(params.r)}, {"value", value_json(d)},
         {"f", to_json(f)}, {"g", values_json(g)}};
  json cover = json::array(), wit = json::array();
  for (const auto& u : d.cover) {
    json pts = json::array();
    for (auto p : u.points) pts.push_back(f.domain()->label(p));
    cover.push_back(std::move(pts));
  }
  for (const auto& h : d.witnesses) wit.push_back(frames_json(h));
  j["cover"] = std::move(cover);
  j["witnesses"] = std::move(wit);
  if (d.bad_point) j["bad_point"] = f.domain()->label(*d.bad_point);
  if (!d.reason.empty()) j["reason"] = d.reason;
  return j;
}

struct DistanceCertificate {
  LipschitzMap f, g;
  ScaleParams params;
  DistanceResult result;
};

inline DistanceCertificate distance_from_json(const json& j, const std::filesystem::path& base = {}) {
  auto f = map_from_json(j.at("f"), base);
  auto g = map_values(f.domain(), f.codomain(), j.at("g"));
  ScaleParams params{scalar_from_json(j.at("s")), scalar_from_json(j.at("r"))};
  DistanceResult d;
  const auto& v = j.at("value");
  if (v.is_number_unsigned()) {
    d.kind = DistanceResult::Kind::finite;
    d.value = v.get<std::size_t>();
  } else if (v == "inf") {
    d.kind = DistanceResult::Kind::infinite;
  } else {
    d.kind = DistanceResult::Kind::bounded;
    d.lower = v.at("lower").get<std::size_t>();
    d.upper = v.at("upper") == "inf" ? DistanceResult::kUnbounded : v.at("upper").get<std::size_t>();
  }
  const auto& X = f.domain();
  for (const auto& pts : j.at("cover")) {
    std::vector<std::size_t> idx;
    for (const auto& p : pts) {
      if (!X->contains(p.get<std::string>())) throw Error("cover point " + p.dump() + " not in domain");
      idx.push_back(X->index_of(p.get<std::string>()));
    }
    d.cover.push_back(PointSubset::make(X, idx));
  }
  const auto& wit = j.at("witnesses");
  for (std::size_t i = 0; i < wit.size() && i < d.cover.size(); ++i)
    d.witnesses.push_back(homotopy_frames(subspace(d.cover[i]), f.codomain(), params, wit[i]));
  if (wit.size() != d.cover.size()) throw Error("distance certificate: one witness per cover set expected");
  if (j.contains("bad_point")) d.bad_point = X->index_of(j.at("bad_point").get<std::string>());
  return {std::move(f), std::move(g), params, std::move(d)};
}

// Motion plans ---------------------------------------------------------------

inline json to_json(const MotionPlan& p, const Rational& r, ProductMetric metric) {
  json pairs = json::array(), paths = json::array();
  const std::size_t n = p.space->size();
  for (auto q : p.pairs) pairs.push_back({p.space->label(q / n), p.space->label(q % n)});
  for (const auto& path : p.paths) {
    json row = json::array();
    for (auto v : path) row.push_back(p.space->label(v));
    paths.push_back(std::move(row));
  }
  return {{"kind", "motion_plan"}, {"space", to_json(*p.space)}, {"product_metric", to_string(metric)},
          {"r", scalar_json(r)},   {"pairs", std::move(pairs)},  {"paths", std::move(paths)}};
}

struct MotionPlanFile {
  MotionPlan plan;
  Rational r;
};

inline MotionPlanFile motion_plan_from_json(const json& j, const std::filesystem::path& base = {}) {
  auto x = space_ref(j.at("space"), base);
  auto xx = product(x, x, parse_product_metric(j.at("product_metric").get<std::string>()));
  MotionPlan p{x, xx, {}, {}};
  auto idx = [&](const json& v) {
    if (!v.is_string() || !x->contains(v.get<std::string>())) throw Error("unknown point " + v.dump());
    return x->index_of(v.get<std::string>());
  };
  for (const auto& pr : j.at("pairs")) {
    if (!pr.is_array() || pr.size() != 2) throw Error("motion-plan pair must be [a, b]");
    p.pairs.push_back(idx(pr[0]) * x->size() + idx(pr[1]));
  }
  for (const auto& path : j.at("paths")) {
    std::vector<std::size_t> v;
    for (const auto& q : path) v.push_back(idx(q));
    p.paths.push_back(std::move(v));
  }
  return {std::move(p), scalar_from_json(j.at("r"))};
}

// Validation of any file kind ------------------------------------------------

struct ValidateOutcome {
  std::string kind;
  VerifyReport report;
};

/// Space, map, homotopy, distance certificate, motion plan, a search result
/// carrying a "witness", or a report carrying "plans" (tc output). Homotopies are checked between their own first and last frames.
inline ValidateOutcome validate_json(const json& j, const std::filesystem::path& base = {}) {
  ValidateOutcome out;
  const std::string kind = j.contains("kind") ? j.at("kind").get<std::string>()
                           : j.contains("values")   ? "map"
                           : j.contains("points")   ? "space"
                           : j.contains("witness")  ? "search"
                                                    : "";
  out.kind = kind;
  if (kind == "space") {
    space_from_json(j);  // build_space validates the axioms
  } else if (kind == "map") {
    map_from_json(j, base);
  } else if (kind == "homotopy") {
    auto h = homotopy_from_json(j, base);
    out.report = verify_homotopy(h, h.frame(0), h.frame(h.frames.size() - 1));
  } else if (kind == "search") {
    auto h = homotopy_from_json(j.at("witness"), base);
    out.report = verify_homotopy(h, h.frame(0), h.frame(h.frames.size() - 1));
  } else if (kind == "distance") {
    auto c = distance_from_json(j, base);
    out.report = verify_distance_certificate(c.result, c.f, c.g);
  } else if (kind == "motion_plan") {
    auto p = motion_plan_from_json(j, base);
    out.report = verify_motion_plan(p.plan, p.r);
  } else if (kind == "tc") {
    for (const auto& pj : j.at("plans")) {
      auto p = motion_plan_from_json(pj, base);
      for (auto& v : verify_motion_plan(p.plan, p.r).violations) out.report.fail(v);
    }
  } else {
    throw Error("unrecognized file: expected a space, map, homotopy, distance certificate or motion plan");
  }
  return out;
}

}  // namespace drht
