#include <gtest/gtest.h>

#include <set>

#include "drht/laws.hpp"

using namespace drht;

TEST(Laws, RegistryIsWellFormed) {
  std::set<std::string> ids;
  for (const auto& law : all_laws()) {
    EXPECT_TRUE(ids.insert(law.id).second) << law.id;
    EXPECT_FALSE(law.statement.empty());
  }
  EXPECT_EQ(ids.size(), 21u);
  EXPECT_EQ(find_law("symmetry").id, "symmetry");
  EXPECT_THROW(find_law("nope"), Error);
  EXPECT_THROW(run_suite({"nope"}, 1, 1), Error);
}

TEST(Laws, SuitePassesAndIsDeterministic) {
  auto a = run_suite({}, 40, 7, {}, 1);
  auto b = run_suite({}, 40, 7, {}, 4);
  ASSERT_EQ(a.laws.size(), all_laws().size());
  for (std::size_t i = 0; i < a.laws.size(); ++i) {
    const auto& x = a.laws[i];
    EXPECT_TRUE(x.ok()) << x.id << ": " << (x.counterexamples.empty() ? "under-exercised" : x.counterexamples[0].detail);
    EXPECT_EQ(x.tried, 40u);
    EXPECT_EQ(x.passed + x.skipped + x.counterexamples.size(), x.tried);
    EXPECT_EQ(x.passed, b.laws[i].passed) << x.id;
    EXPECT_EQ(x.skipped, b.laws[i].skipped) << x.id;
  }
  EXPECT_TRUE(a.ok());
}

TEST(Laws, OnlySelectsAndSeedsDiffer) {
  auto r = run_suite({"symmetry", "cat-le-tc"}, 10, 3);
  ASSERT_EQ(r.laws.size(), 2u);
  EXPECT_NE(trial_seed(1, 0, 0), trial_seed(2, 0, 0));
  EXPECT_NE(trial_seed(1, 0, 0), trial_seed(1, 1, 0));
  EXPECT_NE(trial_seed(1, 0, 0), trial_seed(1, 0, 1));
}

TEST(Laws, ReplayMatchesSuite) {
  const auto& law = find_law("homotopy-invariance");
  const LawConfig cfg;
  for (std::size_t t = 0; t < 5; ++t) {
    auto once = run_trial(law, trial_seed(9, 2, t), cfg);
    auto twice = run_trial(law, trial_seed(9, 2, t), cfg);
    EXPECT_EQ(once.kind, twice.kind);
    EXPECT_EQ(once.detail, twice.detail);
  }
}

TEST(Inverse, FindsExactAndHomotopyInverses) {
  auto c4 = cycle(4);
  LipschitzMap rot(c4, c4, {1, 2, 3, 0});
  auto inv = find_homotopy_inverse(rot, 1, Rational(1, 2), InverseSide::left, 1000, true);
  ASSERT_TRUE(inv);
  EXPECT_EQ(compose(*inv, rot), identity(c4));
  // A point of the interval retracts onto its neighbour up to homotopy at r = 1.
  auto i1 = interval(1), i0 = interval(0);
  LipschitzMap point(i0, i1, {0});
  EXPECT_TRUE(find_homotopy_inverse(point, 1, 1, InverseSide::right, 1000));
  EXPECT_FALSE(find_homotopy_inverse(point, 1, Rational(1, 2), InverseSide::right, 1000));
}

// A homotopy right inverse is not enough for the pre-composition equality
// once s > 1: composing f with a (1, r)-homotopy moves points by s r.
TEST(Inverse, HomotopyRightInverseGapForSteepMaps) {
  auto x = build_space({"x0", "x1", "x2"}, {{0, 1, 1}, {1, 0, 2}, {1, 2, 0}});
  auto xp = build_space({"v0", "v1", "v2"}, {{0, 1, 1}, {1, 0, 2}, {1, 2, 0}});
  auto y = build_space({"y0", "y1"}, {{0, Rational(5, 2)}, {Rational(5, 2), 0}});
  LipschitzMap f(x, y, {1, 0, 1}), g(x, y, {1, 1, 1});
  LipschitzMap beta(xp, x, {0, 0, 2});
  const Rational s(5, 2), r(3, 2);
  auto eta = find_homotopy_inverse(beta, 1, r, InverseSide::right, 1000);
  ASSERT_TRUE(eta);
  EXPECT_EQ(homotopic_distance(f, g, {s, r}).value_string(), "inf");
  EXPECT_EQ(homotopic_distance(compose(f, beta), compose(g, beta), {s, r}).value_string(), "0");
  // The law therefore asks for an exact right inverse when s > 1; none exists here.
  EXPECT_FALSE(find_homotopy_inverse(beta, 1, r, InverseSide::right, 1000, true));
}
