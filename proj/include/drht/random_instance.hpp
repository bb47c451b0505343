#pragma once

// Deterministic pseudo-random small spaces and maps for property checks.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "drht/homotopy.hpp"

namespace drht {

/// splitmix64 step, used to derive independent per-trial seeds.
inline std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// mt19937_64 with draws that do not depend on the standard library's
/// distribution implementations, so instances are portable.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  std::uint64_t next() { return eng_(); }
  std::size_t below(std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(eng_() % n); }
  std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }
  bool chance(unsigned percent) { return below(100) < percent; }
  template <class T>
  const T& pick(const std::vector<T>& v) { return v[below(v.size())]; }

 private:
  std::mt19937_64 eng_;
};

struct SizeCaps {
  std::size_t min_points = 1;
  std::size_t max_points = 5;
};

/// Metric repaired by shortest-path closure (Floyd-Warshall).
inline std::vector<std::vector<Rational>> shortest_path_closure(std::vector<std::vector<Rational>> d) {
  const std::size_t n = d.size();
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
  return d;
}

/// Points in a cycle of mostly unit edges with occasional chords; keeps loops
/// that do not contract at small r.
inline Space random_cycle_space(Rng& rng, std::size_t n, const std::string& prefix) {
  const Rational far(1'000'000);
  std::vector<std::vector<Rational>> d(n, std::vector<Rational>(n, far));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
  auto set = [&](std::size_t i, std::size_t j, const Rational& w) { d[i][j] = d[j][i] = w; };
  const std::size_t edges = n > 2 ? n : n - 1;
  for (std::size_t i = 0; i < edges; ++i)
    set(i, (i + 1) % n, rng.chance(85) ? Rational(1) : Rational(static_cast<Rational::Int>(rng.between(2, 4)), 2));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 2; j < n; ++j)
      if (!(i == 0 && j == n - 1) && rng.chance(10)) set(i, j, Rational(static_cast<Rational::Int>(rng.between(2, 3))));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(prefix + std::to_string(i));
  return build_space(std::move(labels), shortest_path_closure(std::move(d)));
}

/// Random metric on n points, repaired by shortest-path closure: all pairs
/// weighted in {1/2, 1, ..., 3}, or (half the time, n >= 4) a random cycle.
/// `prefix` keeps labels distinct between spaces of one instance.
inline Space random_space(Rng& rng, std::size_t n, const std::string& prefix) {
  if (n >= 4 && rng.chance(50)) return random_cycle_space(rng, n, prefix);
  std::vector<std::vector<Rational>> d(n, std::vector<Rational>(n, Rational(0)));
  const bool halves = rng.chance(40);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      d[i][j] = d[j][i] = halves ? Rational(static_cast<Rational::Int>(rng.between(1, 6)), 2)
                                 : Rational(static_cast<Rational::Int>(rng.between(1, 3)));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(prefix + std::to_string(i));
  return build_space(std::move(labels), shortest_path_closure(std::move(d)));
}

inline Space random_space(Rng& rng, const SizeCaps& caps, const std::string& prefix) {
  return random_space(rng, rng.between(caps.min_points, caps.max_points), prefix);
}

/// The same points with every distance multiplied by c, plus optionally one
/// extra point glued at random distances (repaired by closure).
inline Space rescaled_space(Rng& rng, const Space& x, const Rational& c, bool extra_point, const std::string& prefix) {
  const std::size_t n = x->size() + (extra_point ? 1 : 0);
  std::vector<std::vector<Rational>> d(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < x->size(); ++i)
    for (std::size_t j = 0; j < x->size(); ++j) d[i][j] = c * x->dist(i, j);
  if (extra_point) {
    const std::size_t e = n - 1;
    for (std::size_t i = 0; i < e; ++i) {
      const Rational w = c * Rational(static_cast<Rational::Int>(rng.between(1, 4)), 2);
      d[i][e] = d[e][i] = w;
    }
  }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(prefix + std::to_string(i));
  return build_space(std::move(labels), shortest_path_closure(std::move(d)));
}

/// Uniformly random values, or (half the time) a winding map
/// i -> (k i + offset) mod |Y| that follows the point order.
inline LipschitzMap random_map(Rng& rng, const Space& x, const Space& y) {
  std::vector<std::size_t> v(x->size());
  if (rng.chance(50)) {
    for (auto& e : v) e = rng.below(y->size());
  } else {
    const std::size_t k = rng.between(1, 2), off = rng.below(y->size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = (k * i + off) % y->size();
  }
  return {x, y, std::move(v)};
}

/// Random map with Lipschitz constant at most `s`, or none after `tries` draws.
inline std::optional<LipschitzMap> random_map_within(Rng& rng, const Space& x, const Space& y, const Rational& s,
                                                     std::size_t tries = 50) {
  for (std::size_t t = 0; t < tries; ++t) {
    auto f = random_map(rng, x, y);
    if (is_s_lipschitz(f, s)) return f;
  }
  return std::nullopt;
}

/// A random walk of up to `steps` moves in the frame graph starting at f; the
/// result is (s, r)-homotopic to f by construction and the walk is the witness.
inline Homotopy random_walk(Rng& rng, const LipschitzMap& f, ScaleParams params, std::size_t steps) {
  FrameGraph graph(f.domain(), f.codomain(), params);
  Homotopy h{f.domain(), f.codomain(), {f.values()}, params};
  std::vector<std::uint16_t> cur(f.values().begin(), f.values().end()), scratch;
  for (std::size_t t = 0; t < steps; ++t) {
    std::vector<std::vector<std::uint16_t>> nbrs;
    graph.for_each_neighbor(cur, scratch, [&](std::span<const std::uint16_t> v) {
      if (nbrs.size() < 4096) nbrs.emplace_back(v.begin(), v.end());
    });
    if (nbrs.empty()) break;
    cur = rng.pick(nbrs);
    h.frames.emplace_back(cur.begin(), cur.end());
  }
  return h;
}

inline std::vector<Rational> default_r_choices() {
  return {Rational(1, 2), Rational(1), Rational(3, 2), Rational(2), Rational(3)};
}

/// The basic instance: X, Y, random f, g : X -> Y and a scale r.
struct Instance {
  Space x, y;
  LipschitzMap f, g;
  Rational r;
  Rational lip_f, lip_g;
};

inline Instance generate_instance(std::uint64_t seed, const SizeCaps& x_caps = {1, 5}, const SizeCaps& y_caps = {1, 6}) {
  Rng rng(seed);
  auto x = random_space(rng, x_caps, "x");
  auto y = random_space(rng, y_caps, "y");
  auto f = random_map(rng, x, y);
  auto g = random_map(rng, x, y);
  const Rational r = rng.pick(default_r_choices());
  const Rational lf = lipschitz_constant(f), lg = lipschitz_constant(g);
  return {x, y, std::move(f), std::move(g), r, lf, lg};
}

}  // namespace drht
