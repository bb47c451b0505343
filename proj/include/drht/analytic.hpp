#pragma once

// Closed-form examples: the straight-line homotopy between power maps on a
// sampled circle (float backend), and a two-hole grid with a pair of paths.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "drht/distance.hpp"

namespace drht {

using Complex = std::complex<double>;

struct PowerMapHomotopy {
  int n = 1, k = 1;
  Rational r = 1;
  std::size_t samples = 0;
  std::size_t m = 0;
  std::vector<Complex> points;               // z_j = exp(2 pi i j / N)
  std::vector<std::vector<Complex>> frames;  // frames[t][j] = F(z_j, t)
};

/// m = 2 floor(2 / r) + 1.
inline std::size_t power_map_steps(const Rational& r) {
  if (r <= Rational(0)) throw Error("power map homotopy needs r > 0");
  return static_cast<std::size_t>(2 * (Rational(2) / r).floor() + 1);
}

/// F(z, t) = (m - t)/m z^n + t/m z^k at the N sample points.
inline PowerMapHomotopy power_map_homotopy(int n, int k, const Rational& r, std::size_t samples = 120) {
  if (n < 1 || k < 1) throw Error("power map exponents must be >= 1");
  if (samples < 3) throw Error("need at least 3 samples");
  PowerMapHomotopy out;
  out.n = n;
  out.k = k;
  out.r = r;
  out.samples = samples;
  out.m = power_map_steps(r);
  for (std::size_t j = 0; j < samples; ++j)
    out.points.push_back(std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(samples)));
  const double md = static_cast<double>(out.m);
  for (std::size_t t = 0; t <= out.m; ++t) {
    std::vector<Complex> fr;
    fr.reserve(samples);
    const double a = (md - static_cast<double>(t)) / md, b = static_cast<double>(t) / md;
    for (const auto& z : out.points) {
      const Complex v = a * std::pow(z, n) + b * std::pow(z, k);
      if (std::abs(v) < ApproxFloat::kDefaultTolerance)
        throw Error("frame " + std::to_string(t) + " hits 0");
      fr.push_back(v);
    }
    out.frames.push_back(std::move(fr));
  }
  return out;
}

struct AnalyticReport {
  bool ok = true;
  double max_lipschitz_ratio = 0;  // over frames and sample pairs
  double max_step = 0;             // max |F(z, t+1) - F(z, t)|
  double s = 0, r = 0;
  std::vector<std::string> violations;
};

inline constexpr double kAnalyticSlack = 1e-6;

/// Each frame s-Lipschitz on the samples and each time step within r, both up
/// to a factor 1 + slack and the float tolerance.
inline AnalyticReport verify_analytic(const PowerMapHomotopy& h, double s, double r, double slack = kAnalyticSlack,
                                      double tolerance = ApproxFloat::kDefaultTolerance) {
  AnalyticReport rep;
  rep.s = s;
  rep.r = r;
  const std::size_t n = h.points.size();
  for (std::size_t t = 0; t < h.frames.size(); ++t) {
    const auto& fr = h.frames[t];
    if (fr.size() != n) {
      rep.ok = false;
      rep.violations.push_back("frame " + std::to_string(t) + " has the wrong size");
      continue;
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        const double dz = std::abs(h.points[i] - h.points[j]);
        const double dv = std::abs(fr[i] - fr[j]);
        rep.max_lipschitz_ratio = std::max(rep.max_lipschitz_ratio, dv / dz);
        if (dv > s * (1 + slack) * dz + tolerance) {
          rep.ok = false;
          rep.violations.push_back("frame " + std::to_string(t) + " not " + std::to_string(s) + "-Lipschitz at (" +
                                   std::to_string(i) + "," + std::to_string(j) + ")");
        }
      }
    if (t + 1 < h.frames.size())
      for (std::size_t i = 0; i < n && i < h.frames[t + 1].size(); ++i) {
        const double step = std::abs(h.frames[t + 1][i] - fr[i]);
        rep.max_step = std::max(rep.max_step, step);
        if (step > r * (1 + slack) + tolerance) {
          rep.ok = false;
          rep.violations.push_back("step " + std::to_string(t) + " moves sample " + std::to_string(i) + " by " +
                                   std::to_string(step));
        }
      }
  }
  return rep;
}

/// z -> z^n on the chord-metric sample circle, as the index map j -> n j mod N.
inline LipschitzMap cycle_power_map(const Space& circle, int n) {
  if (n < 0) throw Error("power map exponent must be nonnegative");
  const std::size_t size = circle->size();
  std::vector<std::size_t> v(size);
  for (std::size_t j = 0; j < size; ++j) v[j] = (static_cast<std::size_t>(n) * j) % size;
  return {circle, circle, std::move(v)};
}

// Two-hole grid --------------------------------------------------------------

struct TwoHoleInstance {
  Space space;
  Rect hole0, hole1;
  Rational d0, d1;   // measured hole diameters
  LipschitzMap f, g; // paths above and below both holes, from interval(L)
  Rational s;        // common Lipschitz constant of f and g
};

/// Distance between the cells just above and just below the hole's middle
/// column: the step length needed to jump the hole in one move.
inline Rational hole_jump(const FiniteMetricSpace& y, const Rect& hole) {
  const int cx = (hole.x0 + hole.x1) / 2;
  return y.dist(y.index_of(grid_label(cx, hole.y0 - 1)), y.index_of(grid_label(cx, hole.y1 + 1)));
}

namespace detail {

inline std::vector<std::size_t> walk(const FiniteMetricSpace& y, const std::vector<std::pair<int, int>>& corners) {
  std::vector<std::size_t> out;
  auto [x, yy] = corners.front();
  out.push_back(y.index_of(grid_label(x, yy)));
  for (std::size_t c = 1; c < corners.size(); ++c) {
    const auto [tx, ty] = corners[c];
    while (x != tx || yy != ty) {
      if (x != tx) x += tx > x ? 1 : -1;
      else yy += ty > yy ? 1 : -1;
      out.push_back(y.index_of(grid_label(x, yy)));
    }
  }
  return out;
}

inline std::vector<std::size_t> sample_path(const std::vector<std::size_t>& path, std::size_t points) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < points; ++i) out.push_back(path[i * (path.size() - 1) / (points - 1)]);
  return out;
}

}  // namespace detail

/// f runs from the left edge along row 1 to the right edge, g along row h-2;
/// both are sampled at `samples` evenly spaced points of the unit path so the
/// domain is interval(samples - 1).
inline TwoHoleInstance two_hole_instance(int w, int h, Rect hole0, Rect hole1, std::size_t samples = 3) {
  if (samples < 2) throw Error("two-hole paths need at least 2 samples");
  const std::vector<Rect> holes{hole0, hole1};
  auto y = holed_grid(w, h, holes);
  const Rational d0 = hole_jump(*y, hole0), d1 = hole_jump(*y, hole1);
  if (!(d0 < d1)) throw Error("two-hole instance needs d0 < d1, measured " + d0.str() + " and " + d1.str());
  for (const auto& hole : holes)
    if (hole.y0 <= 1 || hole.y1 >= h - 2) throw Error("holes must leave rows 1 and h-2 free");

  const int mid = h / 2;
  auto top = detail::walk(*y, {{0, mid}, {0, 1}, {w - 1, 1}, {w - 1, mid}});
  auto bottom = detail::walk(*y, {{0, mid}, {0, h - 2}, {w - 1, h - 2}, {w - 1, mid}});
  auto dom = interval(samples - 1);
  LipschitzMap f(dom, y, detail::sample_path(top, samples));
  LipschitzMap g(dom, y, detail::sample_path(bottom, samples));
  const Rational s = default_s(f, g);
  return {y, hole0, hole1, d0, d1, std::move(f), std::move(g), s};
}

/// Default instance: 15 x 10 grid, a 2 x 2 hole and a 4 x 4 hole.
inline TwoHoleInstance default_two_hole_instance(std::size_t samples = 3) {
  return two_hole_instance(15, 10, Rect{3, 4, 4, 5}, Rect{8, 3, 11, 6}, samples);
}

/// r values straddling the measured thresholds: below 1, then d0 and d1 with neighbours.
inline std::vector<Rational> two_hole_r_values(const TwoHoleInstance& inst) {
  std::vector<Rational> rs{Rational(1, 2), Rational(1), inst.d0 - 1, inst.d0, inst.d0 + 1, inst.d1, inst.d1 + 1};
  std::sort(rs.begin(), rs.end());
  rs.erase(std::unique(rs.begin(), rs.end()), rs.end());
  std::erase_if(rs, [](const Rational& r) { return r <= Rational(0); });
  return rs;
}

}  // namespace drht
