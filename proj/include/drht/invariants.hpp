#pragma once

// Discrete Lusternik-Schnirelmann category of spaces and maps, r-contractibility
// and discrete topological complexity, each available by its own definition
// and through the homotopic distance.

#include <optional>
#include <string>
#include <vector>

#include "drht/distance.hpp"

namespace drht {

enum class Method { by_definition, via_distance };

inline std::string to_string(Method m) { return m == Method::by_definition ? "by-definition" : "via-distance"; }

/// r-paths S(a, b) from a to b of a common length m, one per pair of a subset of X x X.
struct MotionPlan {
  Space space;                            // X
  Space square;                           // X x X
  std::vector<std::size_t> pairs;         // indices into `square`
  std::vector<std::vector<std::size_t>> paths;

  std::size_t horizon() const { return paths.empty() ? 0 : paths.front().size() - 1; }
};

struct InvariantResult {
  DistanceResult value;
  Method method;
  std::vector<MotionPlan> plans;  // tc only
};

/// Checks: S(a, b) starts at a and ends at b, each S(a, b) is an r-path, and
/// S is 1-Lipschitz into paths with the uniform metric.
inline VerifyReport verify_motion_plan(const MotionPlan& plan, const Rational& r) {
  VerifyReport rep;
  const auto& X = *plan.space;
  const auto& XX = *plan.square;
  const std::size_t n = X.size();
  if (plan.pairs.size() != plan.paths.size()) {
    rep.fail("pair and path counts differ");
    return rep;
  }
  const std::size_t m = plan.horizon();
  for (std::size_t i = 0; i < plan.pairs.size(); ++i) {
    const auto& path = plan.paths[i];
    const std::size_t a = plan.pairs[i] / n, b = plan.pairs[i] % n;
    if (path.size() != m + 1) rep.fail("path " + std::to_string(i) + " has a different horizon");
    if (path.empty()) continue;
    if (path.front() != a || path.back() != b) rep.fail("path for " + XX.label(plan.pairs[i]) + " has wrong endpoints");
    if (!is_r_path(X, path, r)) rep.fail("path for " + XX.label(plan.pairs[i]) + " is not an r-path");
  }
  for (std::size_t i = 0; i < plan.pairs.size(); ++i)
    for (std::size_t j = i + 1; j < plan.pairs.size(); ++j) {
      Rational sup = 0;
      for (std::size_t t = 0; t <= m && t < plan.paths[i].size() && t < plan.paths[j].size(); ++t)
        sup = max(sup, X.dist(plan.paths[i][t], plan.paths[j][t]));
      if (sup > XX.dist(plan.pairs[i], plan.pairs[j]))
        rep.fail("section not 1-Lipschitz at (" + XX.label(plan.pairs[i]) + "," + XX.label(plan.pairs[j]) + ")");
    }
  return rep;
}

/// S(a, b)(j) = H((a, b), j) for a homotopy p1|U ~ p2|U.
inline MotionPlan motion_plan_from_homotopy(const Space& x, const Space& xx, const PointSubset& u, const Homotopy& h) {
  MotionPlan plan{x, xx, u.points, {}};
  for (std::size_t i = 0; i < u.points.size(); ++i) {
    std::vector<std::size_t> path;
    for (const auto& fr : h.frames) path.push_back(fr[i]);
    plan.paths.push_back(std::move(path));
  }
  return plan;
}

/// H((a, b), j) = S(a, b)(j), a (1, r)-homotopy p1|U ~ p2|U.
inline Homotopy homotopy_from_motion_plan(const MotionPlan& plan, const Rational& r) {
  const auto u = PointSubset::make(plan.square, plan.pairs);
  Homotopy h{subspace(u), plan.space, {}, ScaleParams{1, r}};
  for (std::size_t t = 0; t <= plan.horizon(); ++t) {
    Frame fr;
    for (const auto& path : plan.paths) fr.push_back(path[t]);
    h.frames.push_back(std::move(fr));
  }
  return h;
}

/// Inclusion of a subset of X as a map into X.
inline LipschitzMap inclusion(const PointSubset& u) { return {subspace(u), u.space, u.points}; }

/// Whether id_X ~(1,r) c_x for some x (equivalently for any x when X is r-connected).
inline HomotopyVerdict is_r_contractible(const Space& x, const Rational& r, std::size_t budget = kDefaultBudget) {
  if (!is_r_connected(*x, r).connected) return {HomotopyVerdict::Kind::not_homotopic, std::nullopt, 0};
  return find_homotopy(identity(x), constant(x, x, 0), ScaleParams{1, r}, budget);
}

/// U is r-contractible in X: the inclusion U -> X is (1, r)-homotopic to a
/// constant. Constants in one r-component are homotopic to each other, so a
/// single target suffices once U lies in one component.
inline SubsetDecision contractible_in(const Space& x, const PointSubset& u, const Rational& r, std::size_t budget) {
  const auto inc = inclusion(u);
  const ScaleParams params{1, r};
  const auto comps = r_components(*x, r);
  // All points of U must share one r-component.
  for (auto p : u.points)
    if (comps[p] != comps[u.points.front()]) return {Tri::bad, std::nullopt};
  auto v = find_homotopy(inc, constant(inc.domain(), x, u.points.front()), params, budget);
  return to_decision(std::move(v));
}

inline InvariantResult cat_space(const Space& x, const Rational& r, Method method = Method::by_definition,
                                 std::size_t budget = kDefaultBudget) {
  const ScaleParams params{1, r};
  if (method == Method::via_distance) {
    return {homotopic_distance(identity(x), constant(x, x, 0), params, budget), method, {}};
  }
  SubsetOracle oracle(x, params, [&](Mask m) {
    return contractible_in(x, PointSubset::make(x, mask_points(m)), r, budget);
  });
  return {minimal_good_cover(oracle), method, {}};
}

/// cat_r(f): cover on which f is (s, r)-homotopic to some constant map.
/// s defaults to Lip(f).
inline InvariantResult cat_map(const LipschitzMap& f, const Rational& r, std::optional<Rational> s = std::nullopt,
                               Method method = Method::by_definition, std::size_t budget = kDefaultBudget) {
  const ScaleParams params{s.value_or(lipschitz_constant(f)), r};
  const auto& Y = f.codomain();
  const bool y_connected = is_r_connected(*Y, r).connected;
  if (method == Method::via_distance) {
    return {homotopic_distance(f, constant(f.domain(), Y, 0), params, budget), method, {}};
  }
  SubsetOracle oracle(f.domain(), params, [&](Mask m) -> SubsetDecision {
    const auto fu = restrict(f, PointSubset::make(f.domain(), mask_points(m)));
    bool unknown = false;
    const std::size_t tries = y_connected ? 1 : Y->size();
    for (std::size_t y = 0; y < tries; ++y) {
      const std::size_t target = y_connected ? fu(0) : y;
      auto v = find_homotopy(fu, constant(fu.domain(), Y, target), params, budget);
      if (v.found()) return {Tri::good, std::move(v.homotopy)};
      if (v.kind == HomotopyVerdict::Kind::budget_exceeded) unknown = true;
    }
    return {unknown ? Tri::unknown : Tri::bad, std::nullopt};
  });
  return {minimal_good_cover(oracle), method, {}};
}

/// TC_r(X) on X x X with the chosen product metric. via-distance computes
/// D_r(p1, p2) at s = 1 and converts each witness into a motion plan;
/// by-definition accepts a subset only when the section read off the search
/// passes the motion-plan checks and converts back to a valid homotopy.
/// Plans of one cover share a horizon.
inline InvariantResult tc_space(const Space& x, const Rational& r, ProductMetric metric = ProductMetric::l1,
                                Method method = Method::via_distance, std::size_t budget = kDefaultBudget) {
  const auto xx = product(x, x, metric);
  const auto p1 = projection1(x, xx), p2 = projection2(x, xx);
  const ScaleParams params{1, r};
  InvariantResult out{{}, method, {}};
  if (method == Method::via_distance) {
    out.value = homotopic_distance(p1, p2, params, budget);
  } else {
    SubsetOracle oracle(xx, params, [&](Mask m) -> SubsetDecision {
      const auto u = PointSubset::make(xx, mask_points(m));
      auto v = find_homotopy(restrict(p1, u), restrict(p2, u), params, budget);
      if (!v.found()) return to_decision(std::move(v));
      const auto plan = motion_plan_from_homotopy(x, xx, u, *v.homotopy);
      if (!verify_motion_plan(plan, r).ok) throw Error("tc: search produced an invalid motion plan");
      return {Tri::good, homotopy_from_motion_plan(plan, r)};
    });
    out.value = minimal_good_cover(oracle);
  }
  std::size_t horizon = 0;
  for (const auto& h : out.value.witnesses) horizon = std::max(horizon, h.length());
  for (std::size_t i = 0; i < out.value.witnesses.size(); ++i) {
    out.value.witnesses[i] = extend(out.value.witnesses[i], horizon);
    out.plans.push_back(motion_plan_from_homotopy(x, xx, out.value.cover[i], out.value.witnesses[i]));
  }
  return out;
}

}  // namespace drht
