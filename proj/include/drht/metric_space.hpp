#pragma once

// Finite metric spaces: construction with full axiom checks, generators,
// products, induced subspaces and r-connectivity.

#include <algorithm>
#include <cmath>
#include <deque>
#include <memory>
#include <numbers>
#include <span>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "drht/scalar.hpp"

namespace drht {

class FiniteMetricSpace;
using Space = std::shared_ptr<const FiniteMetricSpace>;

enum class ProductMetric { l1, max };

inline std::string to_string(ProductMetric m) { return m == ProductMetric::l1 ? "l1" : "max"; }
inline ProductMetric parse_product_metric(std::string_view s) {
  if (s == "l1") return ProductMetric::l1;
  if (s == "max") return ProductMetric::max;
  throw Error("unknown product metric '" + std::string(s) + "' (expected l1 or max)");
}

class FiniteMetricSpace {
 public:
  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }

  const Rational& dist(std::size_t i, std::size_t j) const { return dist_[i * size() + j]; }

  /// Index of a label, or throws.
  std::size_t index_of(std::string_view label) const {
    if (auto it = index_.find(std::string(label)); it != index_.end()) return it->second;
    throw Error("unknown point '" + std::string(label) + "'");
  }
  bool contains(std::string_view label) const { return index_.count(std::string(label)) != 0; }

  Rational diameter() const {
    Rational d = 0;
    for (const auto& v : dist_) d = max(d, v);
    return d;
  }

  /// Factor sizes when the space was built as a product (empty otherwise).
  /// Product point (a, b) has index a * right_size + b.
  std::pair<std::size_t, std::size_t> factor_sizes() const { return factors_; }
  bool is_product() const { return factors_.first != 0; }

  friend Space build_space(std::vector<std::string> labels, std::vector<std::vector<Rational>> matrix);
  friend Space product(const Space& a, const Space& b, ProductMetric metric);
  friend Space subspace(const Space& a, std::span<const std::size_t> points);

 private:
  FiniteMetricSpace(std::vector<std::string> labels, std::vector<Rational> dist)
      : labels_(std::move(labels)), dist_(std::move(dist)) {
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (!index_.emplace(labels_[i], i).second) throw Error("duplicate point label '" + labels_[i] + "'");
    }
  }

  static Space make(std::vector<std::string> labels, std::vector<Rational> dist) {
    return Space(new FiniteMetricSpace(std::move(labels), std::move(dist)));
  }

  void validate() const {
    const std::size_t n = size();
    for (std::size_t i = 0; i < n; ++i) {
      if (!dist(i, i).is_zero()) throw Error("nonzero self-distance at '" + label(i) + "'");
      for (std::size_t j = i + 1; j < n; ++j) {
        if (dist(i, j) != dist(j, i))
          throw Error("asymmetric distance between '" + label(i) + "' and '" + label(j) + "'");
        if (dist(i, j) <= Rational(0))
          throw Error("non-positive distance between distinct points '" + label(i) + "' and '" + label(j) + "'");
      }
    }
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
          if (dist(i, k) > dist(i, j) + dist(j, k))
            throw Error("triangle inequality violated by (" + label(i) + "," + label(j) + "," + label(k) +
                        "): " + dist(i, k).str() + " > " + dist(i, j).str() + " + " + dist(j, k).str());
  }

  std::vector<std::string> labels_;
  std::vector<Rational> dist_;
  std::unordered_map<std::string, std::size_t> index_;
  std::pair<std::size_t, std::size_t> factors_{0, 0};
};

/// Validated space from labels and a full square matrix.
inline Space build_space(std::vector<std::string> labels, std::vector<std::vector<Rational>> matrix) {
  const std::size_t n = labels.size();
  if (n == 0) throw Error("a metric space needs at least one point");
  if (matrix.size() != n) throw Error("metric matrix has " + std::to_string(matrix.size()) + " rows, expected " +
                                      std::to_string(n));
  std::vector<Rational> flat;
  flat.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (matrix[i].size() != n) throw Error("metric matrix row " + std::to_string(i) + " is not of length " +
                                           std::to_string(n));
    flat.insert(flat.end(), matrix[i].begin(), matrix[i].end());
  }
  auto space = FiniteMetricSpace::make(std::move(labels), std::move(flat));
  space->validate();
  return space;
}

/// Builds labels "0".."n-1" and a matrix from a distance function.
template <class DistFn>
Space build_indexed(std::size_t n, DistFn&& d) {
  std::vector<std::string> labels;
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(std::to_string(i));
    for (std::size_t j = 0; j < n; ++j) m[i][j] = i == j ? Rational(0) : d(i, j);
  }
  return build_space(std::move(labels), std::move(m));
}

inline Space product(const Space& a, const Space& b, ProductMetric metric = ProductMetric::l1) {
  const std::size_t na = a->size(), nb = b->size(), n = na * nb;
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) labels.push_back("(" + a->label(i) + "," + b->label(j) + ")");
  std::vector<Rational> flat(n * n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      const auto& da = a->dist(p / nb, q / nb);
      const auto& db = b->dist(p % nb, q % nb);
      flat[p * n + q] = metric == ProductMetric::l1 ? da + db : max(da, db);
    }
  auto space = std::shared_ptr<FiniteMetricSpace>(new FiniteMetricSpace(std::move(labels), std::move(flat)));
  space->factors_ = {na, nb};
  space->validate();
  return space;
}

/// Induced metric on the listed points (labels kept, order as given).
inline Space subspace(const Space& a, std::span<const std::size_t> points) {
  if (points.empty()) throw Error("subspace of an empty subset");
  std::vector<std::string> labels;
  std::vector<Rational> flat;
  flat.reserve(points.size() * points.size());
  for (auto p : points) {
    if (p >= a->size()) throw Error("subspace point index out of range");
    labels.push_back(a->label(p));
  }
  for (auto p : points)
    for (auto q : points) flat.push_back(a->dist(p, q));
  return FiniteMetricSpace::make(std::move(labels), std::move(flat));
}

/// Sorted set of point indices of one space.
struct PointSubset {
  Space space;
  std::vector<std::size_t> points;

  static PointSubset make(Space s, std::vector<std::size_t> pts) {
    std::sort(pts.begin(), pts.end());
    if (std::adjacent_find(pts.begin(), pts.end()) != pts.end()) throw Error("duplicate point in subset");
    for (auto p : pts)
      if (p >= s->size()) throw Error("subset point index out of range");
    return {std::move(s), std::move(pts)};
  }
  static PointSubset full(Space s) {
    std::vector<std::size_t> pts(s->size());
    for (std::size_t i = 0; i < pts.size(); ++i) pts[i] = i;
    return {std::move(s), std::move(pts)};
  }
};

inline Space subspace(const PointSubset& s) { return subspace(s.space, s.points); }

/// Component id per point for the graph with edges {d <= r}; ids numbered by first point.
inline std::vector<std::size_t> r_components(const FiniteMetricSpace& a, const Rational& r) {
  const std::size_t n = a.size();
  constexpr auto kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> comp(n, kUnset);
  std::size_t next = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] != kUnset) continue;
    std::deque<std::size_t> queue{s};
    comp[s] = next;
    while (!queue.empty()) {
      const auto u = queue.front();
      queue.pop_front();
      for (std::size_t v = 0; v < n; ++v)
        if (comp[v] == kUnset && a.dist(u, v) <= r) {
          comp[v] = next;
          queue.push_back(v);
        }
    }
    ++next;
  }
  return comp;
}

struct Connectivity {
  bool connected;
  std::vector<std::vector<std::size_t>> components;
};

inline Connectivity is_r_connected(const FiniteMetricSpace& a, const Rational& r) {
  const auto comp = r_components(a, r);
  std::size_t count = 0;
  for (auto c : comp) count = std::max(count, c + 1);
  Connectivity out{count <= 1, std::vector<std::vector<std::size_t>>(count)};
  for (std::size_t i = 0; i < comp.size(); ++i) out.components[comp[i]].push_back(i);
  return out;
}

/// Shortest r-path from a to b (BFS on hops), empty if none.
inline std::vector<std::size_t> shortest_r_path(const FiniteMetricSpace& a, std::size_t from, std::size_t to,
                                                const Rational& r) {
  constexpr auto kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> parent(a.size(), kUnset);
  std::deque<std::size_t> queue{from};
  parent[from] = from;
  while (!queue.empty()) {
    const auto u = queue.front();
    queue.pop_front();
    if (u == to) break;
    for (std::size_t v = 0; v < a.size(); ++v)
      if (parent[v] == kUnset && a.dist(u, v) <= r) {
        parent[v] = u;
        queue.push_back(v);
      }
  }
  if (parent[to] == kUnset) return {};
  std::vector<std::size_t> path{to};
  while (path.back() != from) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

inline bool is_r_path(const FiniteMetricSpace& a, std::span<const std::size_t> path, const Rational& r) {
  for (std::size_t i = 0; i + 1 < path.size(); ++i)
    if (a.dist(path[i], path[i + 1]) > r) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Generators

/// Points 0..m with d(a, b) = |a - b|.
inline Space interval(std::size_t m) {
  return build_indexed(m + 1, [](std::size_t i, std::size_t j) {
    return Rational(static_cast<Rational::Int>(i > j ? i - j : j - i));
  });
}

enum class CycleMetric { geodesic, chord };

/// Chord 2 sin(pi k / n) rounded to a multiple of 1e-6.
inline Rational rationalized_chord(std::size_t k, std::size_t n) {
  constexpr Rational::Int kDen = 1'000'000;
  const double chord = 2.0 * std::sin(std::numbers::pi * static_cast<double>(k) / static_cast<double>(n));
  return {static_cast<Rational::Int>(std::llround(chord * static_cast<double>(kDen))), kDen};
}

inline Space cycle(std::size_t n, CycleMetric metric = CycleMetric::geodesic) {
  if (n < 3) throw Error("cycle needs at least 3 points");
  return build_indexed(n, [&](std::size_t i, std::size_t j) {
    const std::size_t diff = i > j ? i - j : j - i;
    const std::size_t k = std::min(diff, n - diff);
    return metric == CycleMetric::geodesic ? Rational(static_cast<Rational::Int>(k)) : rationalized_chord(k, n);
  });
}

/// Inclusive rectangle of grid cells.
struct Rect {
  int x0, y0, x1, y1;
  bool contains(int x, int y) const { return x >= x0 && x <= x1 && y >= y0 && y <= y1; }
};

inline std::string grid_label(int x, int y) { return std::to_string(x) + "," + std::to_string(y); }

/// w x h lattice points with the l1 metric scaled by `unit`.
inline Space grid(int w, int h, const Rational& unit = 1) {
  if (w <= 0 || h <= 0 || unit <= Rational(0)) throw Error("grid parameters must be positive");
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> xy;
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) {
      labels.push_back(grid_label(x, y));
      xy.emplace_back(x, y);
    }
  const std::size_t n = labels.size();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m[i][j] = unit * Rational(std::abs(xy[i].first - xy[j].first) + std::abs(xy[i].second - xy[j].second));
  return build_space(std::move(labels), std::move(m));
}

/// Grid points outside the holes, metric = shortest path in the remaining
/// 4-neighbour unit grid graph. Holes must keep a one-cell margin from the
/// boundary and from each other.
inline Space holed_grid(int w, int h, std::span<const Rect> holes) {
  if (w <= 0 || h <= 0) throw Error("grid parameters must be positive");
  for (std::size_t i = 0; i < holes.size(); ++i) {
    const auto& r = holes[i];
    if (r.x0 > r.x1 || r.y0 > r.y1) throw Error("degenerate hole rectangle");
    if (r.x0 < 1 || r.y0 < 1 || r.x1 > w - 2 || r.y1 > h - 2) throw Error("hole touches the grid boundary");
    for (std::size_t j = 0; j < i; ++j) {
      const auto& o = holes[j];
      const bool apart = r.x1 + 1 < o.x0 || o.x1 + 1 < r.x0 || r.y1 + 1 < o.y0 || o.y1 + 1 < r.y0;
      if (!apart) throw Error("holes overlap or touch");
    }
  }
  auto removed = [&](int x, int y) {
    return std::any_of(holes.begin(), holes.end(), [&](const Rect& r) { return r.contains(x, y); });
  };
  std::vector<std::string> labels;
  std::vector<int> id(static_cast<std::size_t>(w * h), -1);
  std::vector<std::pair<int, int>> xy;
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x)
      if (!removed(x, y)) {
        id[static_cast<std::size_t>(y * w + x)] = static_cast<int>(labels.size());
        labels.push_back(grid_label(x, y));
        xy.emplace_back(x, y);
      }
  const std::size_t n = labels.size();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  constexpr int kDx[] = {1, -1, 0, 0}, kDy[] = {0, 0, 1, -1};
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<int> d(n, -1);
    std::deque<std::size_t> queue{s};
    d[s] = 0;
    while (!queue.empty()) {
      const auto u = queue.front();
      queue.pop_front();
      for (int k = 0; k < 4; ++k) {
        const int x = xy[u].first + kDx[k], y = xy[u].second + kDy[k];
        if (x < 0 || y < 0 || x >= w || y >= h) continue;
        const int v = id[static_cast<std::size_t>(y * w + x)];
        if (v < 0 || d[static_cast<std::size_t>(v)] >= 0) continue;
        d[static_cast<std::size_t>(v)] = d[u] + 1;
        queue.push_back(static_cast<std::size_t>(v));
      }
    }
    for (std::size_t t = 0; t < n; ++t) {
      if (d[t] < 0) throw Error("holed grid is disconnected");
      m[s][t] = d[t];
    }
  }
  return build_space(std::move(labels), std::move(m));
}

}  // namespace drht
