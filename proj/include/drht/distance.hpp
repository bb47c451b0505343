#pragma once

// Discrete homotopic distance D_r(f, g): the minimal cover of the domain by
// "good" subsets (restrictions (s, r)-homotopic) minus one.
//
// The good family is closed under taking subsets (restricting a witness gives
// a witness), so a minimum cover can always be chosen among maximal good
// sets, and a cover exists iff every singleton is good.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "drht/homotopy.hpp"

namespace drht {

using Mask = std::uint64_t;

inline Mask full_mask(std::size_t n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

inline std::vector<std::size_t> mask_points(Mask m) {
  std::vector<std::size_t> out;
  for (; m != 0; m &= m - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
  return out;
}

inline Mask points_mask(std::span<const std::size_t> pts) {
  Mask m = 0;
  for (auto p : pts) m |= Mask{1} << p;
  return m;
}

enum class Tri { good, bad, unknown };

struct SubsetDecision {
  Tri status;
  std::optional<Homotopy> witness;  // on subspace(U), when good
};

/// Memoized three-valued goodness of subsets of a domain, where goodness is
/// certified by a homotopy on the induced subspace. Known good sets answer
/// their subsets; exhaustively bad sets answer their supersets.
class SubsetOracle {
 public:
  using Search = std::function<SubsetDecision(Mask)>;

  SubsetOracle(Space domain, ScaleParams params, Search search)
      : domain_(std::move(domain)), params_(params), search_(std::move(search)) {
    if (domain_->size() > 64) throw Error("cover search: domain larger than 64 points");
  }
  SubsetOracle(const SubsetOracle&) = delete;
  SubsetOracle& operator=(const SubsetOracle&) = delete;
  virtual ~SubsetOracle() = default;

  const Space& domain() const { return domain_; }
  const ScaleParams& params() const { return params_; }
  std::size_t searches() const { return searches_; }

  PointSubset subset(Mask m) const { return PointSubset::make(domain_, mask_points(m)); }

  Tri status(Mask u) { return decide(u).status; }

  const SubsetDecision& decide(Mask u) {
    if (auto it = memo_.find(u); it != memo_.end()) return it->second;
    for (const auto& [g, h] : good_)
      if ((u & ~g) == 0) return memo_.emplace(u, SubsetDecision{Tri::good, restrict_witness(u, g, h)}).first->second;
    for (auto b : bad_)
      if ((b & ~u) == 0) return memo_.emplace(u, SubsetDecision{Tri::bad, std::nullopt}).first->second;
    ++searches_;
    SubsetDecision d = search_(u);
    if (d.status == Tri::good) good_.emplace_back(u, *d.witness);
    if (d.status == Tri::bad) bad_.push_back(u);
    return memo_.emplace(u, std::move(d)).first->second;
  }

  /// Seeds a known good set (e.g. from a smaller r); the witness is re-scaled to our params.
  void import_good(Mask u, Homotopy h) {
    h.params = params_;
    if (!memo_.count(u)) memo_.emplace(u, SubsetDecision{Tri::good, h});
    good_.emplace_back(u, std::move(h));
  }
  void import_bad(Mask u) {
    if (!memo_.count(u)) memo_.emplace(u, SubsetDecision{Tri::bad, std::nullopt});
    bad_.push_back(u);
  }

  const std::vector<std::pair<Mask, Homotopy>>& known_good() const { return good_; }
  const std::vector<Mask>& known_bad() const { return bad_; }

 private:
  Homotopy restrict_witness(Mask u, Mask g, const Homotopy& h) const {
    // positions of u's points inside g's sorted point list
    std::vector<std::size_t> pos;
    std::size_t idx = 0;
    for (auto p : mask_points(g)) {
      if ((u >> p) & 1) pos.push_back(idx);
      ++idx;
    }
    Homotopy out{subspace(domain_, mask_points(u)), h.codomain, {}, params_};
    for (const auto& fr : h.frames) {
      Frame v;
      for (auto q : pos) v.push_back(fr[q]);
      out.frames.push_back(std::move(v));
    }
    return out;
  }

  Space domain_;
  ScaleParams params_;
  Search search_;
  std::size_t searches_ = 0;
  std::unordered_map<Mask, SubsetDecision> memo_;
  std::vector<std::pair<Mask, Homotopy>> good_;
  std::vector<Mask> bad_;
};

inline SubsetDecision to_decision(HomotopyVerdict v) {
  switch (v.kind) {
    case HomotopyVerdict::Kind::found: return {Tri::good, std::move(v.homotopy)};
    case HomotopyVerdict::Kind::not_homotopic: return {Tri::bad, std::nullopt};
    case HomotopyVerdict::Kind::budget_exceeded: break;
  }
  return {Tri::unknown, std::nullopt};
}

/// Goodness for D_r(f, g): f|U ~(s,r) g|U.
class GoodSubsetOracle : public SubsetOracle {
 public:
  GoodSubsetOracle(const LipschitzMap& f, const LipschitzMap& g, ScaleParams params,
                   std::size_t budget = kDefaultBudget)
      : SubsetOracle(checked_domain(f, g, params), params,
                     [f, g, params, budget, this](Mask u) {
                       const auto sub = subset(u);
                       return to_decision(find_homotopy(restrict(f, sub), restrict(g, sub), params, budget));
                     }),
        f_(f),
        g_(g) {}

  const LipschitzMap& f() const { return f_; }
  const LipschitzMap& g() const { return g_; }

 private:
  static Space checked_domain(const LipschitzMap& f, const LipschitzMap& g, const ScaleParams& params) {
    if (!same_space(f.domain(), g.domain()) || !same_space(f.codomain(), g.codomain()))
      throw Error("distance: maps have different domains or codomains");
    if (!is_s_lipschitz(f, params.s)) throw Error("distance: f is not " + params.s.str() + "-Lipschitz");
    if (!is_s_lipschitz(g, params.s)) throw Error("distance: g is not " + params.s.str() + "-Lipschitz");
    return f.domain();
  }

  LipschitzMap f_, g_;
};

/// All maximal good subsets (sets whose goodness was undecided are treated
/// as not good). Returns false in `complete` if any decision was unknown.
inline std::vector<Mask> maximal_good_subsets(SubsetOracle& oracle, bool& complete) {
  const std::size_t n = oracle.domain()->size();
  complete = true;
  std::vector<Mask> out;
  auto good = [&](Mask m) {
    const Tri t = oracle.status(m);
    if (t == Tri::unknown) complete = false;
    return t == Tri::good;
  };
  // Greedy seeds warm the memo so most later queries resolve by closure.
  for (std::size_t seed = 0; seed < n; ++seed) {
    Mask c = Mask{1} << seed;
    if (!good(c)) continue;
    for (std::size_t p = 0; p < n; ++p)
      if (!((c >> p) & 1) && good(c | (Mask{1} << p))) c |= Mask{1} << p;
  }
  // Exact enumeration: include/exclude each point in order; a leaf is kept
  // when no single-point extension stays good.
  auto rec = [&](auto&& self, std::size_t i, Mask c) -> void {
    if (i == n) {
      if (c == 0) return;
      for (std::size_t p = 0; p < n; ++p)
        if (!((c >> p) & 1) && good(c | (Mask{1} << p))) return;
      out.push_back(c);
      return;
    }
    const Mask with = c | (Mask{1} << i);
    const bool can_add = good(with);
    if (can_add) self(self, i + 1, with);
    // Excluding i is only useful if something later blocks i.
    if (can_add) {
      Mask rest = 0;
      for (std::size_t p = i + 1; p < n; ++p) rest |= Mask{1} << p;
      if (good(with | rest)) return;
    }
    self(self, i + 1, c);
  };
  rec(rec, 0, 0);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Deterministic ordering used by cover search: larger sets first, then the
/// lexicographically smaller point list.
inline bool cover_order(Mask a, Mask b) {
  const int ca = std::popcount(a), cb = std::popcount(b);
  if (ca != cb) return ca > cb;
  return mask_points(a) < mask_points(b);
}

inline std::vector<Mask> greedy_cover(std::vector<Mask> sets, Mask universe) {
  std::sort(sets.begin(), sets.end(), cover_order);
  std::vector<Mask> out;
  Mask covered = 0;
  while ((covered & universe) != universe) {
    std::optional<Mask> best;
    int best_gain = 0;
    for (auto s : sets) {
      const int gain = std::popcount(s & universe & ~covered);
      if (gain > best_gain) {
        best_gain = gain;
        best = s;
      }
    }
    if (!best) throw Error("greedy cover: sets do not cover the universe");
    out.push_back(*best);
    covered |= *best;
  }
  return out;
}

/// Exact minimum set cover by branch and bound (greedy upper bound, counting
/// lower bound, branch on the lowest uncovered element).
inline std::vector<Mask> exact_cover(std::vector<Mask> sets, Mask universe) {
  std::sort(sets.begin(), sets.end(), cover_order);
  std::vector<Mask> best = greedy_cover(sets, universe);
  int max_size = 0;
  for (auto s : sets) max_size = std::max(max_size, std::popcount(s & universe));
  std::vector<Mask> cur;
  auto rec = [&](auto&& self, Mask covered) -> void {
    const Mask left = universe & ~covered;
    if (left == 0) {
      if (cur.size() < best.size()) best = cur;
      return;
    }
    const int lb = (std::popcount(left) + max_size - 1) / max_size;
    if (cur.size() + static_cast<std::size_t>(lb) >= best.size()) return;
    const int e = std::countr_zero(left);
    for (auto s : sets) {
      if (!((s >> e) & 1)) continue;
      cur.push_back(s);
      self(self, covered | s);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return best;
}

struct DistanceResult {
  enum class Kind { finite, infinite, bounded };
  Kind kind = Kind::finite;
  std::size_t value = 0;                 // finite: k
  std::vector<PointSubset> cover;        // finite: k + 1 sets; bounded: the upper-bound cover
  std::vector<Homotopy> witnesses;       // one per cover set
  std::optional<std::size_t> bad_point;  // infinite
  std::string reason;
  std::size_t lower = 0, upper = 0;      // bounded; upper == kUnbounded when D may be infinite

  static constexpr std::size_t kUnbounded = static_cast<std::size_t>(-1);

  bool finite() const { return kind == Kind::finite; }
  std::string value_string() const {
    switch (kind) {
      case Kind::finite: return std::to_string(value);
      case Kind::infinite: return "inf";
      case Kind::bounded:
        return "[" + std::to_string(lower) + "," + (upper == kUnbounded ? "inf" : std::to_string(upper)) + "]";
    }
    return "?";
  }
  friend bool operator==(const DistanceResult& a, const DistanceResult& b) {
    return a.kind == b.kind && a.value == b.value && a.lower == b.lower && a.upper == b.upper;
  }
};

/// Minimal cover by good sets at the oracle's (s, r); for a GoodSubsetOracle this is D_r(f, g).
inline DistanceResult minimal_good_cover(SubsetOracle& oracle) {
  using Kind = DistanceResult::Kind;
  const auto& X = oracle.domain();
  const std::size_t n = X->size();
  const Mask all = full_mask(n);
  DistanceResult res;

  bool unknown_singleton = false;
  for (std::size_t x = 0; x < n; ++x) {
    const Tri t = oracle.status(Mask{1} << x);
    if (t == Tri::bad) {
      res.kind = Kind::infinite;
      res.bad_point = x;
      res.reason = "singleton {" + X->label(x) + "} is not good at r=" + oracle.params().r.str();
      return res;
    }
    if (t == Tri::unknown) unknown_singleton = true;
  }
  if (unknown_singleton) {
    res.kind = Kind::bounded;
    res.lower = 0;
    res.upper = DistanceResult::kUnbounded;  // the singleton may be bad
    res.reason = "budget exceeded deciding a singleton";
    return res;
  }

  auto fill = [&](const std::vector<Mask>& cover) {
    for (auto m : cover) {
      res.cover.push_back(oracle.subset(m));
      res.witnesses.push_back(*oracle.decide(m).witness);
    }
  };

  if (oracle.status(all) == Tri::good) {
    res.value = 0;
    fill({all});
    return res;
  }
  bool complete = true;
  auto maximal = maximal_good_subsets(oracle, complete);
  if (!complete) {
    res.kind = Kind::bounded;
    const auto cover = greedy_cover(maximal, all);
    res.upper = cover.size() - 1;
    res.lower = oracle.status(all) == Tri::bad ? 1 : 0;
    res.reason = "budget exceeded deciding some subsets";
    fill(cover);
    return res;
  }
  const auto cover = exact_cover(maximal, all);
  res.value = cover.size() - 1;
  fill(cover);
  return res;
}

inline DistanceResult homotopic_distance(GoodSubsetOracle& oracle) { return minimal_good_cover(oracle); }

inline DistanceResult homotopic_distance(const LipschitzMap& f, const LipschitzMap& g, ScaleParams params,
                                         std::size_t budget = kDefaultBudget) {
  GoodSubsetOracle oracle(f, g, params, budget);
  return homotopic_distance(oracle);
}

/// Default s for a pair: the larger of the two Lipschitz constants.
inline Rational default_s(const LipschitzMap& f, const LipschitzMap& g) {
  return max(lipschitz_constant(f), lipschitz_constant(g));
}

/// Re-checks a finite (or bounded upper) certificate: the sets cover the
/// domain and every witness is a valid homotopy between the restrictions.
inline VerifyReport verify_distance_certificate(const DistanceResult& res, const LipschitzMap& f,
                                                const LipschitzMap& g) {
  VerifyReport rep;
  if (res.kind == DistanceResult::Kind::infinite) {
    if (!res.bad_point) {
      rep.fail("infinite result without a bad point");
      return rep;
    }
    return rep;
  }
  if (res.kind == DistanceResult::Kind::bounded && res.upper == DistanceResult::kUnbounded) return rep;
  if (res.cover.size() != res.witnesses.size()) rep.fail("cover and witness counts differ");
  if (res.kind == DistanceResult::Kind::finite && res.cover.size() != res.value + 1)
    rep.fail("cover size is not k + 1");
  std::vector<bool> hit(f.domain()->size(), false);
  for (std::size_t i = 0; i < res.cover.size() && i < res.witnesses.size(); ++i) {
    for (auto p : res.cover[i].points) hit[p] = true;
    const auto fu = restrict(f, res.cover[i]), gu = restrict(g, res.cover[i]);
    auto vr = verify_homotopy(res.witnesses[i], fu, gu);
    for (auto& v : vr.violations) rep.fail("cover set " + std::to_string(i) + ": " + v);
  }
  for (std::size_t p = 0; p < hit.size(); ++p)
    if (!hit[p]) rep.fail("point " + f.domain()->label(p) + " is not covered");
  return rep;
}

struct SweepRow {
  Rational r;
  DistanceResult result;
};

/// D_r over ascending r with warm-started good/bad sets; throws if a fully
/// finite table fails to be non-increasing.
inline std::vector<SweepRow> dr_sweep(const LipschitzMap& f, const LipschitzMap& g, const Rational& s,
                                      const std::vector<Rational>& r_values, std::size_t budget = kDefaultBudget) {
  for (std::size_t i = 1; i < r_values.size(); ++i)
    if (r_values[i] < r_values[i - 1]) throw Error("sweep: r values must be ascending");
  std::vector<SweepRow> rows;
  std::vector<std::pair<Mask, Homotopy>> carried_good;
  for (const auto& r : r_values) {
    GoodSubsetOracle oracle(f, g, ScaleParams{s, r}, budget);
    for (const auto& [m, h] : carried_good) oracle.import_good(m, h);
    rows.push_back({r, homotopic_distance(oracle)});
    carried_good = oracle.known_good();
  }
  bool all_finite = std::all_of(rows.begin(), rows.end(), [](const SweepRow& row) { return row.result.finite(); });
  if (all_finite)
    for (std::size_t i = 1; i < rows.size(); ++i)
      if (rows[i].result.value > rows[i - 1].result.value)
        throw Error("sweep: D_r increased from r=" + rows[i - 1].r.str() + " to r=" + rows[i].r.str());
  return rows;
}

}  // namespace drht
