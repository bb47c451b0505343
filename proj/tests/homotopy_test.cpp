#include <gtest/gtest.h>

#include "drht/homotopy.hpp"
#include "drht/random_instance.hpp"
#include "oracle.hpp"

using namespace drht;

namespace {

Homotopy line(const Space& x, const Space& y, std::vector<Frame> frames, ScaleParams p) {
  return {x, y, std::move(frames), p};
}

}  // namespace

TEST(VerifyHomotopy, AcceptsAndRejects) {
  auto i1 = interval(1), i2 = interval(2);
  LipschitzMap f(i1, i2, {0, 1}), g(i1, i2, {1, 2});
  auto ok = line(i1, i2, {{0, 1}, {1, 2}}, {1, 1});
  EXPECT_TRUE(verify_homotopy(ok, f, g).ok);
  auto jump = line(i1, i2, {{0, 1}, {1, 2}}, {1, Rational(1, 2)});
  EXPECT_FALSE(verify_homotopy(jump, f, g).ok);
  auto stretched = line(i1, i2, {{0, 1}, {0, 2}, {1, 2}}, {1, 1});
  auto rep = verify_homotopy(stretched, f, g);
  EXPECT_FALSE(rep.ok);
  EXPECT_EQ(rep.violations.size(), 1u);
  auto wrong_end = line(i1, i2, {{0, 1}, {1, 1}}, {1, 1});
  EXPECT_FALSE(verify_homotopy(wrong_end, f, g).ok);
  EXPECT_THROW(verify_homotopy(line(i1, i2, {}, {1, 1}), f, g), Error);
  EXPECT_THROW(verify_homotopy(line(i1, i2, {{0, 3}}, {1, 1}), f, g), Error);
}

TEST(HomotopyOps, ConcatenateExtendReverse) {
  auto i1 = interval(1), i3 = interval(3);
  auto h1 = line(i1, i3, {{0, 1}, {1, 2}}, {1, 1});
  auto h2 = line(i1, i3, {{1, 2}, {2, 3}}, {1, 1});
  auto h = concatenate(h1, h2);
  EXPECT_EQ(h.length(), 2u);
  EXPECT_TRUE(verify_homotopy(h, h1.frame(0), h2.frame(1)).ok);
  EXPECT_THROW(concatenate(h2, h2), Error);
  auto e = extend(h, 5);
  EXPECT_EQ(e.length(), 5u);
  EXPECT_TRUE(verify_homotopy(e, h1.frame(0), h2.frame(1)).ok);
  EXPECT_THROW(extend(h, 1), Error);
  auto rv = reverse(h);
  EXPECT_TRUE(verify_homotopy(rv, h2.frame(1), h1.frame(0)).ok);
}

TEST(HomotopyOps, ComposeAndRestrict) {
  auto i1 = interval(1), i3 = interval(3), c4 = cycle(4);
  auto h = line(i1, i3, {{0, 1}, {1, 2}}, {1, 1});
  LipschitzMap wrap(i3, c4, {0, 1, 2, 3});
  auto after = compose_after(wrap, h, {1, 1});
  EXPECT_EQ(after.frames[1], (Frame{1, 2}));
  LipschitzMap swap(i1, i1, {1, 0});
  auto before = compose_before(h, swap, {1, 1});
  EXPECT_EQ(before.frames[0], (Frame{1, 0}));
  auto r = restrict(h, PointSubset::make(i1, {1}));
  EXPECT_EQ(r.frames, (std::vector<Frame>{{1}, {2}}));
}

TEST(FindHomotopy, CycleIdentityAgainstConstant) {
  auto c6 = cycle(6);
  auto id = identity(c6);
  auto c0 = constant(c6, c6, 0);
  EXPECT_EQ(find_homotopy(id, c0, {1, 1}).kind, HomotopyVerdict::Kind::not_homotopic);
  auto v = find_homotopy(id, c0, {1, 2});
  ASSERT_TRUE(v.found());
  EXPECT_TRUE(verify_homotopy(*v.homotopy, id, c0).ok);
  auto c4 = cycle(4);
  auto w = find_homotopy(identity(c4), constant(c4, c4, 0), {1, 1});
  ASSERT_TRUE(w.found());
  EXPECT_EQ(w.homotopy->length(), 2u);
}

TEST(FindHomotopy, TrivialAndRejectedInputs) {
  auto c4 = cycle(4);
  auto v = find_homotopy(identity(c4), identity(c4), {1, 1});
  ASSERT_TRUE(v.found());
  EXPECT_EQ(v.homotopy->length(), 0u);
  LipschitzMap doubling(c4, c4, {0, 2, 0, 2});
  EXPECT_THROW(find_homotopy(doubling, identity(c4), {1, 1}), Error);
  EXPECT_THROW(find_homotopy(identity(c4), identity(cycle(5)), {1, 1}), Error);
  EXPECT_THROW(ScaleParams(-1, 1), Error);
}

TEST(FindHomotopy, BudgetExceeded) {
  auto c6 = cycle(6);
  auto v = find_homotopy(identity(c6), constant(c6, c6, 3), {1, 2}, 3);
  EXPECT_EQ(v.kind, HomotopyVerdict::Kind::budget_exceeded);
  EXPECT_FALSE(v.homotopy);
}

// Verdict and shortest witness length against the explicit-graph BFS.
TEST(Property, MatchesExplicitGraphOracle) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    auto in = generate_instance(mix_seed(seed + 77), {1, 4}, {1, 5});
    const Rational s = max(in.lip_f, in.lip_g);
    auto v = find_homotopy(in.f, in.g, {s, in.r});
    auto ref = oracle::homotopy_length(oracle::matrix(*in.x), oracle::matrix(*in.y), in.f.values(), in.g.values(),
                                       s, in.r);
    ASSERT_NE(v.kind, HomotopyVerdict::Kind::budget_exceeded);
    ASSERT_EQ(v.found(), ref.has_value()) << "seed " << seed;
    if (ref) {
      EXPECT_EQ(v.homotopy->length(), *ref) << "seed " << seed;
      EXPECT_TRUE(verify_homotopy(*v.homotopy, in.f, in.g).ok);
    }
  }
}

// Homotopy is an equivalence relation: symmetric verdicts, walks are witnesses.
TEST(Property, SymmetricAndWalksAreHomotopies) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    auto in = generate_instance(mix_seed(seed + 5000), {1, 4}, {1, 5});
    const ScaleParams p{max(in.lip_f, in.lip_g), in.r};
    EXPECT_EQ(find_homotopy(in.f, in.g, p).found(), find_homotopy(in.g, in.f, p).found());
    Rng rng(seed);
    auto walk = random_walk(rng, in.f, p, 6);
    EXPECT_TRUE(verify_homotopy(walk, in.f, walk.frame(walk.length())).ok);
    EXPECT_TRUE(find_homotopy(in.f, walk.frame(walk.length()), p).found());
  }
}
