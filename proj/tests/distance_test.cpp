#include <gtest/gtest.h>

#include "drht/distance.hpp"
#include "drht/random_instance.hpp"
#include "oracle.hpp"

using namespace drht;

TEST(Cover, ExactBeatsGreedy) {
  // Greedy takes {0,1,3,4} first and then needs two more sets.
  const std::vector<Mask> sets{0b000111, 0b111000, 0b011011};
  const Mask all = full_mask(6);
  EXPECT_EQ(greedy_cover(sets, all).size(), 3u);
  EXPECT_EQ(exact_cover(sets, all).size(), 2u);
  EXPECT_THROW(greedy_cover({0b01}, 0b11), Error);
}

TEST(Cover, MaskHelpers) {
  EXPECT_EQ(full_mask(3), Mask{7});
  EXPECT_EQ(full_mask(64), ~Mask{0});
  const std::vector<std::size_t> pts{0, 2, 5};
  EXPECT_EQ(points_mask(pts), Mask{0b100101});
  EXPECT_EQ(mask_points(0b100101), pts);
}

TEST(Distance, CycleIdentityToConstant) {
  auto c6 = cycle(6);
  auto id = identity(c6);
  auto c0 = constant(c6, c6, 0);
  auto d1 = homotopic_distance(id, c0, {1, 1});
  ASSERT_TRUE(d1.finite());
  EXPECT_EQ(d1.value, 1u);
  EXPECT_TRUE(verify_distance_certificate(d1, id, c0).ok);
  auto d2 = homotopic_distance(id, c0, {1, 2});
  ASSERT_TRUE(d2.finite());
  EXPECT_EQ(d2.value, 0u);
  auto dh = homotopic_distance(id, c0, {1, Rational(1, 2)});
  EXPECT_EQ(dh.kind, DistanceResult::Kind::infinite);
  ASSERT_TRUE(dh.bad_point);
  EXPECT_TRUE(verify_distance_certificate(dh, id, c0).ok);
  EXPECT_EQ(dh.value_string(), "inf");
}

TEST(Distance, CertificateRejectsTampering) {
  auto c6 = cycle(6);
  auto id = identity(c6);
  auto c0 = constant(c6, c6, 0);
  auto d = homotopic_distance(id, c0, {1, 1});
  auto dropped = d;
  dropped.cover.pop_back();
  dropped.witnesses.pop_back();
  EXPECT_FALSE(verify_distance_certificate(dropped, id, c0).ok);
  auto bent = d;
  bent.witnesses[0].frames.back()[0] = (bent.witnesses[0].frames.back()[0] + 3) % 6;
  EXPECT_FALSE(verify_distance_certificate(bent, id, c0).ok);
}

TEST(Sweep, MonotoneAndWarmStarted) {
  auto c6 = cycle(6);
  auto id = identity(c6);
  auto c0 = constant(c6, c6, 0);
  auto rows = dr_sweep(id, c0, Rational(1), {Rational(1, 2), Rational(1), Rational(2), Rational(3)});
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[0].result.value_string(), "inf");
  EXPECT_EQ(rows[1].result.value, 1u);
  EXPECT_EQ(rows[2].result.value, 0u);
  EXPECT_EQ(rows[3].result.value, 0u);
  for (const auto& row : rows) EXPECT_TRUE(verify_distance_certificate(row.result, id, c0).ok) << row.r;
  EXPECT_THROW(dr_sweep(id, c0, Rational(1), {Rational(2), Rational(1)}), Error);
}

TEST(Distance, BoundedWhenBudgetRunsOut) {
  auto c6 = cycle(6);
  auto id = identity(c6);
  auto c3 = constant(c6, c6, 3);
  auto d = homotopic_distance(id, c3, {1, 2}, 1);
  ASSERT_EQ(d.kind, DistanceResult::Kind::bounded);
  EXPECT_EQ(d.value_string(), "[0,inf]");
  EXPECT_TRUE(verify_distance_certificate(d, id, c3).ok);
  auto e = homotopic_distance(id, c3, {1, 2}, 30);
  EXPECT_NE(e.kind, DistanceResult::Kind::infinite);
  if (e.kind == DistanceResult::Kind::bounded && e.upper != DistanceResult::kUnbounded) {
    EXPECT_LE(e.lower, e.upper);
    EXPECT_TRUE(verify_distance_certificate(e, id, c3).ok);
  }
}

// Against brute force over every partition with explicit-graph BFS.
TEST(Property, MatchesBruteForce) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    auto in = generate_instance(mix_seed(seed + 31337), {1, 4}, {1, 5});
    const Rational s = max(in.lip_f, in.lip_g);
    auto d = homotopic_distance(in.f, in.g, {s, in.r});
    auto ref = oracle::distance(in.f, in.g, s, in.r);
    ASSERT_NE(d.kind, DistanceResult::Kind::bounded);
    ASSERT_EQ(d.finite(), ref.has_value()) << "seed " << seed;
    if (ref) {
      EXPECT_EQ(d.value, *ref) << "seed " << seed;
    }
    EXPECT_TRUE(verify_distance_certificate(d, in.f, in.g).ok);
  }
}

// D is symmetric, D(f, f) = 0, and D_r is non-increasing in r.
TEST(Property, SymmetryReflexivityMonotonicity) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    auto in = generate_instance(mix_seed(seed + 999), {1, 4}, {1, 5});
    const Rational s = max(in.lip_f, in.lip_g);
    EXPECT_EQ(homotopic_distance(in.f, in.g, {s, in.r}), homotopic_distance(in.g, in.f, {s, in.r}));
    auto self = homotopic_distance(in.f, in.f, {s, in.r});
    EXPECT_TRUE(self.finite() && self.value == 0);
    EXPECT_NO_THROW(dr_sweep(in.f, in.g, s, default_r_choices()));
  }
}
