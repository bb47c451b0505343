#pragma once

// Executable law suite: each law draws a random instance from its own seed,
// filters on its hypotheses, computes both sides exactly and compares.

#include <functional>
#include <limits>
#include <string>
#include <thread>
#include <vector>

#include "drht/invariants.hpp"
#include "drht/random_instance.hpp"

namespace drht {

enum class InverseSide { left, right };

/// Brute force over maps b (Y' -> Y for a left inverse of a: Y -> Y', or
/// X -> X' for a right inverse of a: X' -> X) with Lip(b) <= bound such that
/// b∘a ~(1,r) id (left) or a∘b ~(1,r) id (right). Candidates are tried in
/// lexicographic order of their value vectors. With `exact` the composite
/// must equal the identity.
inline std::optional<LipschitzMap> find_homotopy_inverse(const LipschitzMap& a, const Rational& bound, const Rational& r,
                                                         InverseSide side, std::size_t budget = 100'000,
                                                         bool exact = false, std::size_t max_candidates = 20'000) {
  const Space& from = a.codomain();
  const Space& to = a.domain();
  const std::size_t n = from->size(), m = to->size();
  const auto id = side == InverseSide::left ? identity(to) : identity(from);
  std::vector<std::size_t> v(n, 0);
  for (std::size_t tried = 0; tried < max_candidates; ++tried) {
    LipschitzMap b(from, to, v);
    if (is_s_lipschitz(b, bound)) {
      auto comp = side == InverseSide::left ? compose(b, a) : compose(a, b);
      if (exact ? comp.values() == id.values()
                : is_s_lipschitz(comp, 1) && find_homotopy(comp, id, ScaleParams{1, r}, budget).found())
        return b;
    }
    // next value vector in lexicographic order
    std::size_t i = n;
    while (i > 0 && ++v[i - 1] == m) v[--i] = 0;
    if (i == 0) return std::nullopt;
  }
  return std::nullopt;
}

// -----------------------------------------------------------------------------

struct LawOutcome {
  enum class Kind { pass, fail, skip };
  Kind kind = Kind::pass;
  std::string detail;
};

struct LawConfig {
  std::size_t budget = 100'000;
  ProductMetric metric = ProductMetric::l1;
};

struct Law {
  std::string id;
  std::string statement;
  std::function<LawOutcome(Rng&, const LawConfig&)> trial;
};

struct Counterexample {
  std::uint64_t trial_seed;
  std::string detail;
};

struct LawStats {
  std::string id;
  std::size_t tried = 0, passed = 0, skipped = 0;
  std::vector<Counterexample> counterexamples;
  bool exercised_enough = true;

  bool ok() const { return counterexamples.empty() && exercised_enough; }
};

struct LawReport {
  std::vector<LawStats> laws;
  bool ok() const {
    for (const auto& l : laws)
      if (!l.ok()) return false;
    return true;
  }
};

namespace laws_detail {

struct Skip {
  std::string why;
};

inline LawOutcome pass() { return {LawOutcome::Kind::pass, {}}; }
inline LawOutcome fail(std::string d) { return {LawOutcome::Kind::fail, std::move(d)}; }

/// Exact D or a skip when the budget ran out.
inline DistanceResult dist(const LipschitzMap& f, const LipschitzMap& g, const Rational& s, const Rational& r,
                           const LawConfig& cfg) {
  auto d = homotopic_distance(f, g, ScaleParams{s, r}, cfg.budget);
  if (d.kind == DistanceResult::Kind::bounded) throw Skip{"budget"};
  return d;
}

inline DistanceResult exact(DistanceResult d) {
  if (d.kind == DistanceResult::Kind::bounded) throw Skip{"budget"};
  return d;
}

/// Finite values compare as integers, infinity above all of them.
inline std::size_t rank(const DistanceResult& d) {
  return d.finite() ? d.value : std::numeric_limits<std::size_t>::max();
}

inline std::string show(const std::string& name, const DistanceResult& d) { return name + "=" + d.value_string(); }

inline LawOutcome check_le(const std::string& a, const DistanceResult& lhs, const std::string& b,
                           const DistanceResult& rhs) {
  if (rank(lhs) <= rank(rhs)) return pass();
  return fail(show(a, lhs) + " > " + show(b, rhs));
}

inline LawOutcome check_eq(const std::string& a, const DistanceResult& lhs, const std::string& b,
                           const DistanceResult& rhs) {
  if (rank(lhs) == rank(rhs)) return pass();
  return fail(show(a, lhs) + " != " + show(b, rhs));
}

inline Rational lip2(const LipschitzMap& f, const LipschitzMap& g) { return default_s(f, g); }

inline Rational pick_r(Rng& rng) { return rng.pick(default_r_choices()); }

/// End of a random (s, r)-walk from f.
inline LipschitzMap walk_end(Rng& rng, const LipschitzMap& f, const Rational& s, const Rational& r,
                             std::size_t steps) {
  return {f.domain(), f.codomain(), random_walk(rng, f, ScaleParams{s, r}, steps).frames.back()};
}

/// A walk away from f, a fresh s-Lipschitz map, or the constant at f's first
/// value, so 0, finite and infinite distances all show up.
inline LipschitzMap nearby(Rng& rng, const LipschitzMap& f, const Rational& s, const Rational& r) {
  const std::size_t mode = rng.below(10);
  if (mode < 4) return walk_end(rng, f, s, r, rng.between(1, 4));
  if (mode < 7) return constant(f.domain(), f.codomain(), f(0));
  auto g = random_map(rng, f.domain(), f.codomain());
  return is_s_lipschitz(g, s) ? g : walk_end(rng, f, s, r, 2);
}

struct Pair {
  Space x, y;
  LipschitzMap f, g;
  Rational s, r;
};

/// X, Y and s-Lipschitz f, g with s = max(Lip f, Lip g). A third of the time
/// Y = X and f is a rotation of X's point order.
inline Pair random_pair(Rng& rng, std::size_t max_x = 5, std::size_t max_y = 6) {
  const bool self = rng.chance(33) && max_x >= 4;
  auto x = self ? random_cycle_space(rng, rng.between(4, max_x), "x") : random_space(rng, {1, max_x}, "x");
  auto y = self ? x : random_space(rng, {1, max_y}, "y");
  const Rational r = self && rng.chance(50) ? Rational(1) : pick_r(rng);
  std::optional<LipschitzMap> f;
  if (self) {
    std::vector<std::size_t> v(x->size());
    const std::size_t off = rng.below(x->size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = (i + off) % v.size();
    f.emplace(x, y, std::move(v));
  } else {
    f = random_map(rng, x, y);
  }
  const Rational sf = lipschitz_constant(*f);
  auto g = self && rng.chance(50) ? constant(x, y, (*f)(0)) : nearby(rng, *f, sf, r);
  const Rational s = lip2(*f, g);
  return {x, y, std::move(*f), std::move(g), s, r};
}

inline Space connected_space(Rng& rng, std::size_t lo, std::size_t hi, const Rational& r, const std::string& prefix) {
  for (int t = 0; t < 20; ++t) {
    auto x = random_space(rng, {lo, hi}, prefix);
    if (is_r_connected(*x, r).connected) return x;
  }
  throw Skip{"no r-connected space drawn"};
}

inline Homotopy require_homotopy(const LipschitzMap& f, const LipschitzMap& g, ScaleParams p, const LawConfig& cfg) {
  auto v = find_homotopy(f, g, p, cfg.budget);
  if (v.kind == HomotopyVerdict::Kind::budget_exceeded) throw Skip{"budget"};
  if (!v.found()) throw Skip{"not homotopic"};
  return *v.homotopy;
}

// Laws ------------------------------------------------------------------------

inline LawOutcome law_zero_iff_homotopic(Rng& rng, const LawConfig& cfg) {
  auto p = random_pair(rng);
  auto d = dist(p.f, p.g, p.s, p.r, cfg);
  auto v = find_homotopy(p.f, p.g, {p.s, p.r}, cfg.budget);
  if (v.kind == HomotopyVerdict::Kind::budget_exceeded) throw Skip{"budget"};
  if ((d.finite() && d.value == 0) == v.found()) return pass();
  return fail(show("D", d) + " but search says " + to_string(v.kind));
}

inline LawOutcome law_symmetry(Rng& rng, const LawConfig& cfg) {
  auto p = random_pair(rng);
  return check_eq("D(f,g)", dist(p.f, p.g, p.s, p.r, cfg), "D(g,f)", dist(p.g, p.f, p.s, p.r, cfg));
}

inline LawOutcome law_homotopy_invariance(Rng& rng, const LawConfig& cfg) {
  auto p = random_pair(rng);
  auto f2 = walk_end(rng, p.f, p.s, p.r, rng.between(0, 4));
  auto g2 = walk_end(rng, p.g, p.s, p.r, rng.between(0, 4));
  return check_eq("D(f,g)", dist(p.f, p.g, p.s, p.r, cfg), "D(f',g')", dist(f2, g2, p.s, p.r, cfg));
}

inline LawOutcome law_concatenation(Rng& rng, const LawConfig& cfg) {
  auto p = random_pair(rng);
  const ScaleParams sp{p.s, p.r};
  auto hmap = walk_end(rng, p.g, p.s, p.r, rng.between(0, 4));
  auto fg = require_homotopy(p.f, p.g, sp, cfg);
  auto gh = require_homotopy(p.g, hmap, sp, cfg);
  auto fh = concatenate(fg, gh);
  auto rep = verify_homotopy(fh, p.f, hmap);
  if (rep.ok) return pass();
  return fail("concatenated witness fails: " + rep.violations.front());
}

inline LawOutcome law_monotone_in_r(Rng& rng, const LawConfig& cfg) {
  auto p = random_pair(rng);
  Rational r1 = pick_r(rng), r2 = pick_r(rng);
  if (r2 < r1) std::swap(r1, r2);
  return check_le("D_r2", dist(p.f, p.g, p.s, r2, cfg), "D_r1", dist(p.f, p.g, p.s, r1, cfg));
}

inline LawOutcome law_post_compose_homotopy(Rng& rng, const LawConfig&) {
  auto p = random_pair(rng);
  auto z = random_space(rng, {1, 5}, "z");
  auto h = random_map(rng, p.y, z);
  const Rational s1 = p.s, s2 = lipschitz_constant(h);
  auto H = random_walk(rng, p.f, {s1, p.r}, rng.between(1, 4));
  auto g = H.frame(H.frames.size() - 1);
  auto K = compose_after(h, H, {s1 * s2, s2 * p.r});
  auto rep = verify_homotopy(K, compose(h, p.f), compose(h, g));
  if (!rep.ok) return fail("h∘F fails at (s2 s1, s2 r): " + rep.violations.front());
  if (s2 <= Rational(1)) {
    auto K1 = compose_after(h, H, {s1, p.r});
    auto rep1 = verify_homotopy(K1, compose(h, p.f), compose(h, g));
    if (!rep1.ok) return fail("h∘F fails at (s1, r) with s2 <= 1: " + rep1.violations.front());
  }
  return pass();
}

inline LawOutcome law_pre_compose_homotopy(Rng& rng, const LawConfig&) {
  auto x = random_space(rng, {1, 4}, "x");
  auto y = random_space(rng, {1, 5}, "y");
  auto z = random_space(rng, {1, 5}, "z");
  const Rational r = pick_r(rng);
  auto f = random_map(rng, x, y);
  auto h = random_map(rng, y, z);
  const Rational s1 = lipschitz_constant(f), s2 = lipschitz_constant(h);
  auto H = random_walk(rng, h, {s2, r}, rng.between(1, 4));
  auto K = compose_before(H, f, {s1 * s2, r});
  auto rep = verify_homotopy(K, compose(h, f), compose(H.frame(H.frames.size() - 1), f));
  if (rep.ok) return pass();
  return fail("H∘f fails at (s1 s2, r): " + rep.violations.front());
}

inline LawOutcome law_post_compose_bound(Rng& rng, const LawConfig& cfg) {
  auto p = random_pair(rng);
  auto z = random_space(rng, {1, 5}, "z");
  auto h = random_map(rng, p.y, z);
  const Rational s2 = lipschitz_constant(h);
  return check_le("D_{s2 r}(hf,hg)", dist(compose(h, p.f), compose(h, p.g), p.s * s2, s2 * p.r, cfg), "D_r(f,g)",
                  dist(p.f, p.g, p.s, p.r, cfg));
}

inline LawOutcome law_cat_map_le_cat_domain(Rng& rng, const LawConfig& cfg) {
  const Rational r = pick_r(rng);
  auto x = connected_space(rng, 1, 4, r, "x");
  auto y = random_space(rng, {1, 5}, "y");
  auto f = random_map_within(rng, x, y, 1);
  if (!f) throw Skip{"no 1-Lipschitz map drawn"};
  const Rational s = lipschitz_constant(*f);
  return check_le("cat(f)", exact(cat_map(*f, r, s, Method::by_definition, cfg.budget).value), "cat(X)",
                  exact(cat_space(x, r, Method::by_definition, cfg.budget).value));
}

inline LawOutcome law_pre_compose_bound(Rng& rng, const LawConfig& cfg) {
  auto p = random_pair(rng);
  auto z = random_space(rng, {1, 5}, "z");
  auto h = random_map(rng, z, p.x);
  const Rational s2 = lipschitz_constant(h);
  return check_le("D(fh,gh)", dist(compose(p.f, h), compose(p.g, h), p.s * s2, p.r, cfg), "D(f,g)",
                  dist(p.f, p.g, p.s, p.r, cfg));
}

inline LawOutcome law_cat_le_tc(Rng& rng, const LawConfig& cfg) {
  const Rational r = pick_r(rng);
  auto x = connected_space(rng, 1, 3, r, "x");
  return check_le("cat(X)", exact(cat_space(x, r, Method::by_definition, cfg.budget).value), "TC(X)",
                  exact(tc_space(x, r, cfg.metric, Method::by_definition, cfg.budget).value));
}

inline LawOutcome law_cat_map_le_cat_codomain(Rng& rng, const LawConfig& cfg) {
  const Rational r = pick_r(rng);
  auto x = random_space(rng, {1, 4}, "x");
  auto y = connected_space(rng, 1, 5, r, "y");
  auto f = random_map(rng, x, y);
  return check_le("cat(f)", exact(cat_map(f, r, lipschitz_constant(f), Method::by_definition, cfg.budget).value),
                  "cat(Y)", exact(cat_space(y, r, Method::by_definition, cfg.budget).value));
}

inline LawOutcome law_cat_product_bound(Rng& rng, const LawConfig& cfg) {
  const Rational r = pick_r(rng);
  auto x = random_space(rng, {1, 4}, "x");
  auto y = connected_space(rng, 1, 5, r, "y");
  auto f = random_map(rng, x, y);
  auto g = nearby(rng, f, lipschitz_constant(f), r);
  const Rational s = lip2(f, g);
  auto cf = exact(cat_map(f, r, s, Method::by_definition, cfg.budget).value);
  auto cg = exact(cat_map(g, r, s, Method::by_definition, cfg.budget).value);
  auto d = dist(f, g, s, r, cfg);
  if (!cf.finite() || !cg.finite()) return fail("cat of a map into an r-connected space is infinite");
  const std::size_t bound = (cf.value + 1) * (cg.value + 1) - 1;
  if (d.finite() && d.value <= bound) return pass();
  return fail(show("D", d) + " > (" + cf.value_string() + "+1)(" + cg.value_string() + "+1)-1");
}

struct ComposedPair {
  Space z;
  LipschitzMap f, g, h, h2;
  Rational s1, s2, r;
};

/// f ~(s1,r) g : X -> Y and h, h' : Z -> X with s2 = max Lip.
inline ComposedPair composed_pair(Rng& rng, bool unit_s1) {
  const Rational r = pick_r(rng);
  auto x = random_space(rng, {1, 4}, "x");
  auto y = random_space(rng, {1, 5}, "y");
  auto z = random_space(rng, {1, 4}, "z");
  std::optional<LipschitzMap> f;
  if (unit_s1) {
    f = random_map_within(rng, x, y, 1);
    if (!f) throw Skip{"no 1-Lipschitz map drawn"};
  } else {
    f = random_map(rng, x, y);
  }
  const Rational s1 = unit_s1 ? Rational(1) : lipschitz_constant(*f);
  auto g = walk_end(rng, *f, s1, r, rng.between(0, 4));
  auto h = random_map(rng, z, x);
  auto h2 = nearby(rng, h, lipschitz_constant(h), r);
  const Rational s2 = lip2(h, h2);
  return {z, *f, g, h, h2, s1, s2, r};
}

inline LawOutcome law_two_sided_compose(Rng& rng, const LawConfig& cfg) {
  auto c = composed_pair(rng, false);
  return check_le("D_{(s1+1)r}(fh,gh')",
                  dist(compose(c.f, c.h), compose(c.g, c.h2), c.s1 * c.s2, (c.s1 + 1) * c.r, cfg), "D_r(h,h')",
                  dist(c.h, c.h2, c.s2, c.r, cfg));
}

inline LawOutcome law_two_sided_compose_short(Rng& rng, const LawConfig& cfg) {
  auto c = composed_pair(rng, true);
  return check_le("D_r(fh,gh')", dist(compose(c.f, c.h), compose(c.g, c.h2), c.s2, c.r, cfg), "D_r(h,h')",
                  dist(c.h, c.h2, c.s2, c.r, cfg));
}

/// alpha : Y -> Y' where Y' is Y rescaled (maybe with an extra point); alpha is
/// the embedding, sometimes with one point moved.
inline LipschitzMap random_embedding(Rng& rng, const Space& y, const Rational& c, const std::string& prefix) {
  auto y2 = rescaled_space(rng, y, c, rng.chance(50), prefix);
  std::vector<std::size_t> v(y->size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = i;
  if (rng.chance(40) && !v.empty()) v[rng.below(v.size())] = rng.below(y2->size());
  return {y, y2, std::move(v)};
}

/// beta : X' -> X where X' is X rescaled (maybe with an extra point); beta
/// undoes the rescaling and sends the extra point anywhere.
inline LipschitzMap random_projection(Rng& rng, const Space& x, const Rational& c, const std::string& prefix) {
  auto x2 = rescaled_space(rng, x, c, rng.chance(50), prefix);
  std::vector<std::size_t> v(x2->size());
  for (std::size_t i = 0; i < x->size(); ++i) v[i] = i;
  if (x2->size() > x->size()) v.back() = rng.below(x->size());
  if (rng.chance(30)) v[rng.below(x->size())] = rng.below(x->size());
  return {x2, x, std::move(v)};
}

inline Rational pick_scale(Rng& rng) {
  static const std::vector<Rational> cs{Rational(1), Rational(1), Rational(2), Rational(1, 2), Rational(3, 2)};
  return rng.pick(cs);
}

inline LawOutcome law_left_inverse_invariance(Rng& rng, const LawConfig& cfg) {
  auto p = random_pair(rng, 4, 4);
  auto alpha = random_embedding(rng, p.y, pick_scale(rng), "w");
  const Rational s2 = lipschitz_constant(alpha);
  if (s2.is_zero()) throw Skip{"alpha constant"};
  auto beta = find_homotopy_inverse(alpha, Rational(1) / s2, p.r, InverseSide::left, cfg.budget);
  if (!beta) throw Skip{"no left homotopy inverse"};
  return check_eq("D_r(f,g)", dist(p.f, p.g, p.s, p.r, cfg), "D_{s2 r}(af,ag)",
                  dist(compose(alpha, p.f), compose(alpha, p.g), p.s * s2, s2 * p.r, cfg));
}

inline LawOutcome law_right_inverse_invariance(Rng& rng, const LawConfig& cfg) {
  auto p = random_pair(rng, 4, 4);
  auto beta = random_projection(rng, p.x, pick_scale(rng), "v");
  const Rational s2 = lipschitz_constant(beta);
  if (s2.is_zero()) throw Skip{"beta constant"};
  // f∘(beta∘eta) ~ f only moves points by s1*r, so for s1 > 1 the inverse must be exact.
  auto eta = find_homotopy_inverse(beta, Rational(1) / s2, p.r, InverseSide::right, cfg.budget, p.s > Rational(1));
  if (!eta) throw Skip{"no right homotopy inverse"};
  return check_eq("D_r(f,g)", dist(p.f, p.g, p.s, p.r, cfg), "D_r(fb,gb)",
                  dist(compose(p.f, beta), compose(p.g, beta), p.s * s2, p.r, cfg));
}

inline LawOutcome law_equivalence_invariance(Rng& rng, const LawConfig& cfg) {
  auto p = random_pair(rng, 3, 4);
  auto alpha = random_embedding(rng, p.y, Rational(1), "w");
  auto beta = random_projection(rng, p.x, Rational(1), "v");
  if (!is_s_lipschitz(alpha, 1) || !is_s_lipschitz(beta, 1)) throw Skip{"alpha or beta not 1-Lipschitz"};
  if (!find_homotopy_inverse(alpha, 1, p.r, InverseSide::left, cfg.budget)) throw Skip{"no left homotopy inverse"};
  if (!find_homotopy_inverse(beta, 1, p.r, InverseSide::right, cfg.budget, p.s > Rational(1)))
    throw Skip{"no right homotopy inverse"};
  auto fp = walk_end(rng, compose(alpha, compose(p.f, beta)), p.s, p.r, rng.between(0, 3));
  auto gp = walk_end(rng, compose(alpha, compose(p.g, beta)), p.s, p.r, rng.between(0, 3));
  return check_eq("D_r(f,g)", dist(p.f, p.g, p.s, p.r, cfg), "D_r(f',g')", dist(fp, gp, p.s, p.r, cfg));
}

inline LawOutcome law_cat_distance_chain(Rng& rng, const LawConfig& cfg) {
  const Rational r = pick_r(rng);
  auto x = connected_space(rng, 1, 4, r, "x");
  const std::size_t x0 = rng.below(x->size());
  auto xx = product(x, x, cfg.metric);
  const std::size_t base = x0 * x->size() + x0;
  auto i1 = axis1(x, xx, x0), i2 = axis2(x, xx, x0);
  std::vector<std::pair<std::string, DistanceResult>> chain;
  chain.emplace_back("cat(X)", exact(cat_space(x, r, Method::by_definition, cfg.budget).value));
  chain.emplace_back("D(id,c)", dist(identity(x), constant(x, x, x0), 1, r, cfg));
  chain.emplace_back("D(i1,c)", dist(i1, constant(x, xx, base), 1, r, cfg));
  chain.emplace_back("D(i2,c)", dist(i2, constant(x, xx, base), 1, r, cfg));
  chain.emplace_back("D(i1,i2)", dist(i1, i2, 1, r, cfg));
  for (std::size_t i = 1; i < chain.size(); ++i) {
    auto o = check_eq(chain[i - 1].first, chain[i - 1].second, chain[i].first, chain[i].second);
    if (o.kind == LawOutcome::Kind::fail) return o;
  }
  return pass();
}

inline LawOutcome law_cat_map_as_distance(Rng& rng, const LawConfig& cfg) {
  const Rational r = pick_r(rng);
  auto x = random_space(rng, {1, 4}, "x");
  auto y = connected_space(rng, 1, 5, r, "y");
  auto f = random_map(rng, x, y);
  const Rational s = lipschitz_constant(f);
  const std::size_t y0 = rng.below(y->size());
  return check_eq("cat(f)", exact(cat_map(f, r, s, Method::by_definition, cfg.budget).value), "D(f,c)",
                  dist(f, constant(x, y, y0), s, r, cfg));
}

inline LawOutcome law_tc_as_distance(Rng& rng, const LawConfig& cfg) {
  const Rational r = pick_r(rng);
  auto x = random_space(rng, {1, 3}, "x");
  auto by_def = tc_space(x, r, cfg.metric, Method::by_definition, cfg.budget);
  auto via = tc_space(x, r, cfg.metric, Method::via_distance, cfg.budget);
  exact(by_def.value);
  exact(via.value);
  for (const auto* res : {&by_def, &via})
    for (const auto& plan : res->plans) {
      auto rep = verify_motion_plan(plan, r);
      if (!rep.ok) return fail(to_string(res->method) + " motion plan invalid: " + rep.violations.front());
    }
  return check_eq("TC(X)", by_def.value, "D(p1,p2)", via.value);
}

}  // namespace laws_detail

inline const std::vector<Law>& all_laws() {
  using namespace laws_detail;
  static const std::vector<Law> laws{
      {"zero-iff-homotopic", "D_r(f,g) = 0 iff f ~(s,r) g", law_zero_iff_homotopic},
      {"symmetry", "D_r(f,g) = D_r(g,f)", law_symmetry},
      {"homotopy-invariance", "f ~ f', g ~ g' => D_r(f,g) = D_r(f',g')", law_homotopy_invariance},
      {"concatenation", "f ~ g ~ h => concatenated witness f ~ h verifies", law_concatenation},
      {"monotone-in-r", "r1 <= r2 => D_r2 <= D_r1", law_monotone_in_r},
      {"post-compose-homotopy", "f ~(s1,r) g => h f ~(s2 s1, s2 r) h g; (s1,r) when s2 <= 1", law_post_compose_homotopy},
      {"pre-compose-homotopy", "h ~(s2,r) h' => h' f ~(s1 s2, r) h f", law_pre_compose_homotopy},
      {"post-compose-bound", "D_{s2 r}(h f, h g) <= D_r(f,g)", law_post_compose_bound},
      {"cat-map-le-cat-domain", "X r-connected, Lip f <= 1 => cat_r(f) <= cat_r(X)", law_cat_map_le_cat_domain},
      {"pre-compose-bound", "D_r(f h, g h) <= D_r(f,g)", law_pre_compose_bound},
      {"cat-le-tc", "X r-connected => cat_r(X) <= TC_r(X)", law_cat_le_tc},
      {"cat-map-le-cat-codomain", "Y r-connected => cat_r(f) <= cat_r(Y)", law_cat_map_le_cat_codomain},
      {"cat-product-bound", "Y r-connected => D_r(f,g) <= (cat f + 1)(cat g + 1) - 1", law_cat_product_bound},
      {"two-sided-compose", "f ~(s1,r) g => D_{(s1+1)r}(f h, g h') <= D_r(h,h')", law_two_sided_compose},
      {"two-sided-compose-short", "f ~(s1,r) g, s1 <= 1 => D_r(f h, g h') <= D_r(h,h')", law_two_sided_compose_short},
      {"left-inverse-invariance", "alpha with left homotopy inverse => D_r(f,g) = D_{s2 r}(alpha f, alpha g)", law_left_inverse_invariance},
      {"right-inverse-invariance", "beta with right homotopy inverse => D_r(f,g) = D_r(f beta, g beta)", law_right_inverse_invariance},
      {"equivalence-invariance", "alpha f beta ~ f', alpha g beta ~ g' => D_r(f,g) = D_r(f',g')", law_equivalence_invariance},
      {"cat-distance-chain", "cat_r(X) = D(id,c) = D(i1,c) = D(i2,c) = D(i1,i2)", law_cat_distance_chain},
      {"cat-map-as-distance", "Y r-connected => cat_r(f) = D_r(f, c_y)", law_cat_map_as_distance},
      {"tc-as-distance", "TC_r(X) = D_r(p1,p2), motion plans verify", law_tc_as_distance},
  };
  return laws;
}

inline const Law& find_law(const std::string& id) {
  for (const auto& l : all_laws())
    if (l.id == id) return l;
  throw Error("unknown law id " + id);
}

inline std::uint64_t trial_seed(std::uint64_t seed, std::size_t law_index, std::size_t trial) {
  return mix_seed(mix_seed(seed ^ (0x1000003ULL * (law_index + 1))) + trial);
}

/// Runs one trial of a law from its trial seed (used for replaying counterexamples).
inline LawOutcome run_trial(const Law& law, std::uint64_t seed, const LawConfig& cfg) {
  Rng rng(seed);
  try {
    return law.trial(rng, cfg);
  } catch (const laws_detail::Skip& s) {
    return {LawOutcome::Kind::skip, s.why};
  }
}

/// Every listed law (all when `ids` is empty) over `trials` seeded trials.
/// A law with fewer than max(1, trials/10) exercised trials fails. Results do
/// not depend on `workers`.
inline LawReport run_suite(const std::vector<std::string>& ids, std::size_t trials, std::uint64_t seed,
                           const LawConfig& cfg = {}, std::size_t workers = 1) {
  LawReport report;
  const auto& laws = all_laws();
  for (const auto& id : ids) find_law(id);
  for (std::size_t li = 0; li < laws.size(); ++li) {
    const auto& law = laws[li];
    if (!ids.empty() && std::find(ids.begin(), ids.end(), law.id) == ids.end()) continue;
    std::vector<LawOutcome> outcomes(trials);
    const std::size_t w = std::max<std::size_t>(1, std::min(workers, trials));
    std::vector<std::thread> pool;
    for (std::size_t k = 0; k < w; ++k)
      pool.emplace_back([&, k] {
        for (std::size_t t = k; t < trials; t += w) outcomes[t] = run_trial(law, trial_seed(seed, li, t), cfg);
      });
    for (auto& th : pool) th.join();
    LawStats st;
    st.id = law.id;
    for (std::size_t t = 0; t < trials; ++t) {
      ++st.tried;
      switch (outcomes[t].kind) {
        case LawOutcome::Kind::pass: ++st.passed; break;
        case LawOutcome::Kind::skip: ++st.skipped; break;
        case LawOutcome::Kind::fail: st.counterexamples.push_back({trial_seed(seed, li, t), outcomes[t].detail}); break;
      }
    }
    st.exercised_enough = st.passed + st.counterexamples.size() >= std::max<std::size_t>(1, trials / 10);
    report.laws.push_back(std::move(st));
  }
  return report;
}

}  // namespace drht
