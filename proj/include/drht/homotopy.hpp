#pragma once

// (s, r)-homotopies between maps of finite metric spaces: certificates,
// verification, and a bidirectional breadth-first search over the frame graph
// (nodes are s-Lipschitz maps, edges join maps whose pointwise gap is <= r).

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "drht/lipschitz.hpp"

namespace drht {

using Frame = std::vector<std::size_t>;

struct Homotopy {
  Space domain;
  Space codomain;
  std::vector<Frame> frames;  // frames[0] = f, frames.back() = g
  ScaleParams params;

  std::size_t length() const { return frames.empty() ? 0 : frames.size() - 1; }
  LipschitzMap frame(std::size_t i) const { return {domain, codomain, frames.at(i)}; }
};

struct VerifyReport {
  bool ok = true;
  std::vector<std::string> violations;

  void fail(std::string msg) {
    ok = false;
    violations.push_back(std::move(msg));
  }
};

/// Checks the three defining conditions: every frame s-Lipschitz, every
/// point moves at most r per unit time step, endpoints equal f and g.
/// Consecutive steps suffice for the time condition by the triangle inequality.
inline VerifyReport verify_homotopy(const Homotopy& h, const LipschitzMap& f, const LipschitzMap& g) {
  if (h.frames.empty()) throw Error("homotopy has no frames");
  if (!same_space(h.domain, f.domain()) || !same_space(h.domain, g.domain()) ||
      !same_space(h.codomain, f.codomain()) || !same_space(h.codomain, g.codomain()))
    throw Error("homotopy spaces do not match the endpoint maps");
  const auto& X = *h.domain;
  const auto& Y = *h.codomain;
  const auto& [s, r] = h.params;
  VerifyReport rep;
  for (std::size_t t = 0; t < h.frames.size(); ++t) {
    const auto& fr = h.frames[t];
    if (fr.size() != X.size()) throw Error("frame " + std::to_string(t) + " has the wrong domain size");
    for (auto v : fr)
      if (v >= Y.size()) throw Error("frame " + std::to_string(t) + " value out of range");
    for (std::size_t i = 0; i < X.size(); ++i)
      for (std::size_t j = i + 1; j < X.size(); ++j)
        if (Y.dist(fr[i], fr[j]) > s * X.dist(i, j))
          rep.fail("frame " + std::to_string(t) + " not s-Lipschitz at pair (" + X.label(i) + "," + X.label(j) +
                   "): " + Y.dist(fr[i], fr[j]).str() + " > " + (s * X.dist(i, j)).str());
    if (t + 1 < h.frames.size())
      for (std::size_t i = 0; i < X.size(); ++i)
        if (Y.dist(fr[i], h.frames[t + 1][i]) > r)
          rep.fail("step " + std::to_string(t) + "->" + std::to_string(t + 1) + " moves point " + X.label(i) +
                   " by " + Y.dist(fr[i], h.frames[t + 1][i]).str() + " > " + r.str());
  }
  if (h.frames.front() != f.values()) rep.fail("first frame differs from f");
  if (h.frames.back() != g.values()) rep.fail("last frame differs from g");
  return rep;
}

/// Glues H1 : f ~ g and H2 : g ~ h into f ~ h of length n + m.
inline Homotopy concatenate(const Homotopy& h1, const Homotopy& h2) {
  if (h1.frames.empty() || h2.frames.empty()) throw Error("concatenate: empty homotopy");
  if (!same_space(h1.domain, h2.domain) || !same_space(h1.codomain, h2.codomain))
    throw Error("concatenate: homotopies live on different spaces");
  if (h1.frames.back() != h2.frames.front()) throw Error("concatenate: first homotopy does not end where the second starts");
  if (h1.params.s != h2.params.s || h1.params.r != h2.params.r) throw Error("concatenate: scale parameters differ");
  Homotopy out{h1.domain, h1.codomain, {}, h1.params};
  out.frames.assign(h1.frames.begin(), h1.frames.end() - 1);
  out.frames.insert(out.frames.end(), h2.frames.begin(), h2.frames.end());
  return out;
}

/// Pads with copies of the final frame up to length m_target.
inline Homotopy extend(const Homotopy& h, std::size_t m_target) {
  if (m_target < h.length()) throw Error("extend: target length shorter than the homotopy");
  Homotopy out = h;
  while (out.length() < m_target) out.frames.push_back(out.frames.back());
  return out;
}

inline Homotopy reverse(const Homotopy& h) {
  Homotopy out = h;
  std::reverse(out.frames.begin(), out.frames.end());
  return out;
}

/// Frames k o F_i. The caller supplies the scales of the result.
inline Homotopy compose_after(const LipschitzMap& k, const Homotopy& h, ScaleParams params) {
  if (!same_space(h.codomain, k.domain())) throw Error("compose_after: space mismatch");
  Homotopy out{h.domain, k.codomain(), {}, params};
  for (const auto& fr : h.frames) {
    Frame v(fr.size());
    for (std::size_t x = 0; x < fr.size(); ++x) v[x] = k(fr[x]);
    out.frames.push_back(std::move(v));
  }
  return out;
}

/// Frames G_i o f.
inline Homotopy compose_before(const Homotopy& h, const LipschitzMap& f, ScaleParams params) {
  if (!same_space(f.codomain(), h.domain)) throw Error("compose_before: space mismatch");
  Homotopy out{f.domain(), h.codomain, {}, params};
  for (const auto& fr : h.frames) {
    Frame v(f.size());
    for (std::size_t x = 0; x < f.size(); ++x) v[x] = fr[f(x)];
    out.frames.push_back(std::move(v));
  }
  return out;
}

/// Restriction of every frame to the listed domain points.
inline Homotopy restrict(const Homotopy& h, const PointSubset& u) {
  Homotopy out{subspace(u), h.codomain, {}, h.params};
  for (const auto& fr : h.frames) {
    Frame v;
    for (auto p : u.points) v.push_back(fr[p]);
    out.frames.push_back(std::move(v));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Frame graph

constexpr std::size_t kDefaultBudget = 1'000'000;

/// Implicit graph of s-Lipschitz maps X -> Y with edges of pointwise gap <= r.
class FrameGraph {
 public:
  FrameGraph(Space domain, Space codomain, ScaleParams params)
      : X_(std::move(domain)), Y_(std::move(codomain)), params_(params), n_(X_->size()), m_(Y_->size()) {
    if (m_ > 0xFFFF) throw Error("codomain too large for the frame search");
    balls_.resize(m_);
    for (std::size_t y = 0; y < m_; ++y)
      for (std::size_t z = 0; z < m_; ++z)
        if (Y_->dist(y, z) <= params_.r) balls_[y].push_back(static_cast<std::uint16_t>(z));
    // compat_[(i*n + j)*m*m + a*m + b]: images a of i and b of j respect the leash s*d(i, j).
    if (n_ * n_ * m_ * m_ <= kMaxTable) {
      compat_.assign(n_ * n_ * m_ * m_, 0);
      for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < i; ++j) {
          const Rational leash = params_.s * X_->dist(i, j);
          for (std::size_t a = 0; a < m_; ++a)
            for (std::size_t b = 0; b < m_; ++b)
              compat_[((i * n_ + j) * m_ + a) * m_ + b] = Y_->dist(a, b) <= leash ? 1 : 0;
        }
    }
  }

  const Space& domain() const { return X_; }
  const Space& codomain() const { return Y_; }
  const ScaleParams& params() const { return params_; }
  std::size_t points() const { return n_; }

  bool compatible(std::size_t i, std::size_t a, std::size_t j, std::size_t b) const {
    if (!compat_.empty()) return compat_[((i * n_ + j) * m_ + a) * m_ + b] != 0;
    return Y_->dist(a, b) <= params_.s * X_->dist(i, j);
  }

  bool is_frame(std::span<const std::uint16_t> v) const {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (!compatible(i, v[i], j, v[j])) return false;
    return true;
  }

  /// Calls visit(neighbor) for each frame within pointwise gap r of `from`
  /// (excluding `from`), in lexicographic order of (point, image index).
  template <class Visit>
  void for_each_neighbor(std::span<const std::uint16_t> from, std::vector<std::uint16_t>& scratch, Visit&& visit) const {
    scratch.resize(n_);
    assign(0, from, scratch, visit);
  }

 private:
  static constexpr std::size_t kMaxTable = std::size_t{1} << 26;

  template <class Visit>
  void assign(std::size_t i, std::span<const std::uint16_t> from, std::vector<std::uint16_t>& cur, Visit& visit) const {
    if (i == n_) {
      if (!std::equal(cur.begin(), cur.end(), from.begin())) visit(std::span<const std::uint16_t>(cur));
      return;
    }
    for (auto c : balls_[from[i]]) {
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) ok = compatible(i, c, j, cur[j]);
      if (!ok) continue;
      cur[i] = c;
      assign(i + 1, from, cur, visit);
    }
  }

  Space X_, Y_;
  ScaleParams params_;
  std::size_t n_, m_;
  std::vector<std::vector<std::uint16_t>> balls_;
  std::vector<std::uint8_t> compat_;
};

struct HomotopyVerdict {
  enum class Kind { found, not_homotopic, budget_exceeded };
  Kind kind;
  std::optional<Homotopy> homotopy;  // set iff found
  std::size_t states = 0;            // frames visited; for not_homotopic the exhausted component size

  bool found() const { return kind == Kind::found; }
};

inline std::string to_string(HomotopyVerdict::Kind k) {
  switch (k) {
    case HomotopyVerdict::Kind::found: return "found";
    case HomotopyVerdict::Kind::not_homotopic: return "not_homotopic";
    case HomotopyVerdict::Kind::budget_exceeded: return "budget_exceeded";
  }
  return "?";
}

namespace detail {

/// Frames stored contiguously; ids index into the arena.
class FrameStore {
 public:
  explicit FrameStore(std::size_t width) : width_(width), set_(64, Hash{this}, Eq{this}) {}

  std::span<const std::uint16_t> get(std::uint32_t id) const { return {arena_.data() + id * width_, width_}; }
  std::size_t size() const { return parent_.size(); }

  /// Returns (id, inserted).
  std::pair<std::uint32_t, bool> insert(std::span<const std::uint16_t> v, std::uint32_t parent, std::uint8_t side,
                                        std::uint32_t depth) {
    const auto id = static_cast<std::uint32_t>(parent_.size());
    arena_.insert(arena_.end(), v.begin(), v.end());
    parent_.push_back(parent);
    side_.push_back(side);
    depth_.push_back(depth);
    auto [it, inserted] = set_.insert(id);
    if (!inserted) {
      arena_.resize(arena_.size() - width_);
      parent_.pop_back();
      side_.pop_back();
      depth_.pop_back();
      return {*it, false};
    }
    return {id, true};
  }

  std::uint32_t parent(std::uint32_t id) const { return parent_[id]; }
  std::uint8_t side(std::uint32_t id) const { return side_[id]; }
  std::uint32_t depth(std::uint32_t id) const { return depth_[id]; }

 private:
  struct Hash {
    const FrameStore* s;
    std::size_t operator()(std::uint32_t id) const {
      std::size_t h = 1469598103934665603ull;
      for (auto v : s->get(id)) h = (h ^ v) * 1099511628211ull;
      return h;
    }
  };
  struct Eq {
    const FrameStore* s;
    bool operator()(std::uint32_t a, std::uint32_t b) const {
      auto x = s->get(a), y = s->get(b);
      return std::equal(x.begin(), x.end(), y.begin());
    }
  };

  std::size_t width_;
  std::vector<std::uint16_t> arena_;
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint8_t> side_;
  std::vector<std::uint32_t> depth_;
  std::unordered_set<std::uint32_t, Hash, Eq> set_;
};

inline std::vector<std::uint16_t> narrow(const Frame& f) { return {f.begin(), f.end()}; }

}  // namespace detail

/// Shortest (s, r)-homotopy from a to b by bidirectional BFS on the frame graph.
/// Both endpoints must already be frames of the graph.
inline HomotopyVerdict search_frames(const FrameGraph& graph, const Frame& a, const Frame& b,
                                     std::size_t budget = kDefaultBudget) {
  using Kind = HomotopyVerdict::Kind;
  const std::size_t n = graph.points();
  auto make_h = [&](std::vector<Frame> frames) {
    return Homotopy{graph.domain(), graph.codomain(), std::move(frames), graph.params()};
  };
  if (a == b) return {Kind::found, make_h({a}), 1};

  constexpr std::uint32_t kRoot = UINT32_MAX;
  detail::FrameStore store(n);
  const auto na = detail::narrow(a), nb = detail::narrow(b);
  std::vector<std::uint32_t> frontier[2];
  frontier[0].push_back(store.insert(na, kRoot, 0, 0).first);
  frontier[1].push_back(store.insert(nb, kRoot, 1, 0).first);
  std::vector<std::uint16_t> scratch;

  auto chain = [&](std::uint32_t id) {
    std::vector<Frame> out;
    for (; id != kRoot; id = store.parent(id)) {
      auto v = store.get(id);
      out.emplace_back(v.begin(), v.end());
    }
    return out;  // from id back to its root
  };

  while (true) {
    const int side = frontier[0].size() <= frontier[1].size() ? 0 : 1;
    std::vector<std::uint32_t> next;
    std::optional<std::pair<std::uint32_t, std::uint32_t>> best;  // (node on `side`, node on other side)
    std::uint64_t best_len = UINT64_MAX;
    bool over_budget = false;
    for (auto u : frontier[side]) {
      const auto du = store.depth(u);
      // copy: the arena may reallocate while inserting neighbours
      const std::vector<std::uint16_t> from(store.get(u).begin(), store.get(u).end());
      graph.for_each_neighbor(from, scratch, [&](std::span<const std::uint16_t> v) {
        if (over_budget) return;
        auto [id, inserted] = store.insert(v, u, static_cast<std::uint8_t>(side), du + 1);
        if (inserted) {
          next.push_back(id);
          if (store.size() > budget) over_budget = true;
        } else if (store.side(id) != side) {
          const std::uint64_t len = std::uint64_t{du} + 1 + store.depth(id);
          if (len < best_len) {
            best_len = len;
            best = std::pair{u, id};
          }
        }
      });
      if (over_budget) break;
    }
    if (best) {
      auto left = chain(best->first);    // u .. root(side)
      auto right = chain(best->second);  // v .. root(other)
      std::reverse(left.begin(), left.end());
      left.insert(left.end(), right.begin(), right.end());  // root(side) .. u, v .. root(other)
      if (side == 1) std::reverse(left.begin(), left.end());
      return {Kind::found, make_h(std::move(left)), store.size()};
    }
    if (over_budget) return {Kind::budget_exceeded, std::nullopt, store.size()};
    if (next.empty()) return {Kind::not_homotopic, std::nullopt, store.size()};
    frontier[side] = std::move(next);
  }
}

/// Decides f ~(s,r) g. f and g must share domain and codomain and be s-Lipschitz.
inline HomotopyVerdict find_homotopy(const LipschitzMap& f, const LipschitzMap& g, ScaleParams params,
                                     std::size_t budget = kDefaultBudget) {
  if (!same_space(f.domain(), g.domain()) || !same_space(f.codomain(), g.codomain()))
    throw Error("find_homotopy: maps have different domains or codomains");
  if (!is_s_lipschitz(f, params.s)) throw Error("find_homotopy: f is not " + params.s.str() + "-Lipschitz");
  if (!is_s_lipschitz(g, params.s)) throw Error("find_homotopy: g is not " + params.s.str() + "-Lipschitz");
  FrameGraph graph(f.domain(), f.codomain(), params);
  return search_frames(graph, f.values(), g.values(), budget);
}

}  // namespace drht
