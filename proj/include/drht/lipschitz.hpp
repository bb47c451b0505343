#pragma once

// Pointwise maps between finite metric spaces and their Lipschitz constants.

#include <optional>
#include <utility>
#include <vector>

#include "drht/metric_space.hpp"

namespace drht {

/// Structural equality: same labels in the same order and the same distances.
inline bool same_space(const Space& a, const Space& b) {
  if (a == b) return true;
  if (!a || !b || a->size() != b->size() || a->labels() != b->labels()) return false;
  for (std::size_t i = 0; i < a->size(); ++i)
    for (std::size_t j = 0; j < a->size(); ++j)
      if (a->dist(i, j) != b->dist(i, j)) return false;
  return true;
}

class LipschitzMap {
 public:
  LipschitzMap(Space domain, Space codomain, std::vector<std::size_t> values)
      : domain_(std::move(domain)), codomain_(std::move(codomain)), values_(std::move(values)) {
    if (values_.size() != domain_->size()) throw Error("map is not total on its domain");
    for (auto v : values_)
      if (v >= codomain_->size()) throw Error("map value out of codomain range");
  }

  const Space& domain() const { return domain_; }
  const Space& codomain() const { return codomain_; }
  const std::vector<std::size_t>& values() const { return values_; }
  std::size_t operator()(std::size_t x) const { return values_[x]; }
  std::size_t size() const { return values_.size(); }

  friend bool operator==(const LipschitzMap& a, const LipschitzMap& b) {
    return a.values_ == b.values_ && same_space(a.domain_, b.domain_) && same_space(a.codomain_, b.codomain_);
  }

 private:
  Space domain_;
  Space codomain_;
  std::vector<std::size_t> values_;
};

struct ScaleParams {
  Rational s;
  Rational r;

  ScaleParams(Rational s_, Rational r_) : s(s_), r(r_) {
    if (s < Rational(0) || r < Rational(0)) throw Error("scale parameters must be nonnegative");
  }
};

/// Lipschitz constant and a pair attaining it (absent for constant-valued ratios of 0).
struct LipschitzWitness {
  Rational constant = 0;
  std::optional<std::pair<std::size_t, std::size_t>> pair;
};

inline LipschitzWitness lipschitz_witness(const LipschitzMap& f) {
  const auto& X = *f.domain();
  const auto& Y = *f.codomain();
  LipschitzWitness out;
  for (std::size_t i = 0; i < X.size(); ++i)
    for (std::size_t j = i + 1; j < X.size(); ++j) {
      const auto& dy = Y.dist(f(i), f(j));
      if (dy.is_zero()) continue;
      const Rational ratio = dy / X.dist(i, j);
      if (ratio > out.constant) {
        out.constant = ratio;
        out.pair = std::pair{i, j};
      }
    }
  return out;
}

inline Rational lipschitz_constant(const LipschitzMap& f) { return lipschitz_witness(f).constant; }

inline bool is_s_lipschitz(const LipschitzMap& f, const Rational& s) {
  const auto& X = *f.domain();
  const auto& Y = *f.codomain();
  for (std::size_t i = 0; i < X.size(); ++i)
    for (std::size_t j = i + 1; j < X.size(); ++j)
      if (Y.dist(f(i), f(j)) > s * X.dist(i, j)) return false;
  return true;
}

/// h after f.
inline LipschitzMap compose(const LipschitzMap& h, const LipschitzMap& f) {
  if (!same_space(f.codomain(), h.domain())) throw Error("compose: codomain of f differs from domain of h");
  std::vector<std::size_t> v(f.size());
  for (std::size_t x = 0; x < f.size(); ++x) v[x] = h(f(x));
  return {f.domain(), h.codomain(), std::move(v)};
}

/// Restriction to a subset of the domain; the new domain is the induced subspace.
inline LipschitzMap restrict(const LipschitzMap& f, const PointSubset& u) {
  if (u.points.empty()) throw Error("restriction to an empty subset");
  if (!same_space(u.space, f.domain())) throw Error("restriction subset lives in a different space");
  std::vector<std::size_t> v;
  v.reserve(u.points.size());
  for (auto p : u.points) v.push_back(f(p));
  return {subspace(u), f.codomain(), std::move(v)};
}

// Canonical maps -------------------------------------------------------------

inline LipschitzMap identity(const Space& x) {
  std::vector<std::size_t> v(x->size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = i;
  return {x, x, std::move(v)};
}

inline LipschitzMap constant(const Space& x, const Space& y, std::size_t y0) {
  if (y0 >= y->size()) throw Error("constant map target out of range");
  return {x, y, std::vector<std::size_t>(x->size(), y0)};
}

inline void require_square_product(const Space& x, const Space& xx) {
  if (!xx->is_product() || xx->factor_sizes() != std::pair{x->size(), x->size()})
    throw Error("expected the product space X x X");
}

/// p1(a, b) = a.
inline LipschitzMap projection1(const Space& x, const Space& xx) {
  require_square_product(x, xx);
  const std::size_t n = x->size();
  std::vector<std::size_t> v(n * n);
  for (std::size_t p = 0; p < v.size(); ++p) v[p] = p / n;
  return {xx, x, std::move(v)};
}

/// p2(a, b) = b.
inline LipschitzMap projection2(const Space& x, const Space& xx) {
  require_square_product(x, xx);
  const std::size_t n = x->size();
  std::vector<std::size_t> v(n * n);
  for (std::size_t p = 0; p < v.size(); ++p) v[p] = p % n;
  return {xx, x, std::move(v)};
}

/// i1(a) = (a, x0).
inline LipschitzMap axis1(const Space& x, const Space& xx, std::size_t x0) {
  require_square_product(x, xx);
  if (x0 >= x->size()) throw Error("base point out of range");
  const std::size_t n = x->size();
  std::vector<std::size_t> v(n);
  for (std::size_t a = 0; a < n; ++a) v[a] = a * n + x0;
  return {x, xx, std::move(v)};
}

/// i2(a) = (x0, a).
inline LipschitzMap axis2(const Space& x, const Space& xx, std::size_t x0) {
  require_square_product(x, xx);
  if (x0 >= x->size()) throw Error("base point out of range");
  const std::size_t n = x->size();
  std::vector<std::size_t> v(n);
  for (std::size_t a = 0; a < n; ++a) v[a] = x0 * n + a;
  return {x, xx, std::move(v)};
}

}  // namespace drht
