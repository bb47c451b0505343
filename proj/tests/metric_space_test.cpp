#include <gtest/gtest.h>

#include "drht/metric_space.hpp"
#include "drht/random_instance.hpp"

using namespace drht;

namespace {

std::vector<std::vector<Rational>> square(std::initializer_list<std::initializer_list<int>> rows) {
  std::vector<std::vector<Rational>> m;
  for (auto row : rows) {
    m.emplace_back();
    for (int v : row) m.back().push_back(Rational(v));
  }
  return m;
}

}  // namespace

TEST(BuildSpace, AcceptsAMetric) {
  auto x = build_space({"a", "b", "c"}, square({{0, 1, 2}, {1, 0, 1}, {2, 1, 0}}));
  EXPECT_EQ(x->size(), 3u);
  EXPECT_EQ(x->index_of("c"), 2u);
  EXPECT_EQ(x->dist(0, 2), Rational(2));
  EXPECT_EQ(x->diameter(), Rational(2));
  EXPECT_TRUE(x->contains("b"));
  EXPECT_FALSE(x->contains("z"));
  EXPECT_THROW(x->index_of("z"), Error);
}

TEST(BuildSpace, RejectsBrokenAxioms) {
  EXPECT_THROW(build_space({"a", "b"}, square({{0, 1}, {2, 0}})), Error);
  EXPECT_THROW(build_space({"a", "b"}, square({{1, 1}, {1, 0}})), Error);
  EXPECT_THROW(build_space({"a", "b"}, square({{0, 0}, {0, 0}})), Error);
  EXPECT_THROW(build_space({"a", "b", "c"}, square({{0, 1, 5}, {1, 0, 1}, {5, 1, 0}})), Error);
  EXPECT_THROW(build_space({"a", "a"}, square({{0, 1}, {1, 0}})), Error);
  EXPECT_THROW(build_space({"a", "b"}, square({{0, 1, 1}, {1, 0, 1}})), Error);
}

TEST(Generators, IntervalAndCycle) {
  auto i3 = interval(3);
  EXPECT_EQ(i3->size(), 4u);
  EXPECT_EQ(i3->dist(0, 3), Rational(3));
  auto c6 = cycle(6);
  EXPECT_EQ(c6->dist(0, 3), Rational(3));
  EXPECT_EQ(c6->dist(0, 5), Rational(1));
  EXPECT_THROW(cycle(2), Error);
  auto chord = cycle(6, CycleMetric::chord);
  EXPECT_EQ(chord->dist(0, 1), Rational(1));  // 2 sin(pi/6)
  EXPECT_EQ(chord->dist(0, 3), Rational(2));
}

TEST(Generators, HoledGridMetricIsShortestPath) {
  const std::vector<Rect> holes{Rect{2, 1, 2, 3}};
  auto y = holed_grid(5, 5, holes);
  EXPECT_EQ(y->size(), 22u);
  EXPECT_FALSE(y->contains(grid_label(2, 2)));
  // (1,2) to (3,2) must walk around the column hole.
  EXPECT_EQ(y->dist(y->index_of(grid_label(1, 2)), y->index_of(grid_label(3, 2))), Rational(6));
  const std::vector<Rect> edge{Rect{0, 1, 1, 2}};
  EXPECT_THROW(holed_grid(5, 5, edge), Error);
  auto g = grid(3, 2, Rational(1, 2));
  EXPECT_EQ(g->dist(g->index_of("0,0"), g->index_of("2,1")), Rational(3, 2));
}

TEST(Product, MetricsAndIndexing) {
  auto i1 = interval(1);
  auto l1 = product(i1, i1, ProductMetric::l1);
  auto mx = product(i1, i1, ProductMetric::max);
  ASSERT_EQ(l1->size(), 4u);
  EXPECT_EQ(l1->label(1), "(0,1)");
  EXPECT_EQ(l1->dist(0, 3), Rational(2));
  EXPECT_EQ(mx->dist(0, 3), Rational(1));
  EXPECT_TRUE(l1->is_product());
  EXPECT_EQ(l1->factor_sizes(), (std::pair<std::size_t, std::size_t>{2, 2}));
  EXPECT_EQ(parse_product_metric("max"), ProductMetric::max);
  EXPECT_THROW(parse_product_metric("l2"), Error);
}

TEST(Subspace, KeepsLabelsAndDistances) {
  auto c6 = cycle(6);
  const std::vector<std::size_t> pts{0, 2, 4};
  auto s = subspace(c6, pts);
  EXPECT_EQ(s->label(1), "2");
  EXPECT_EQ(s->dist(0, 2), Rational(2));
  EXPECT_THROW(PointSubset::make(c6, {1, 1}), Error);
  EXPECT_THROW(PointSubset::make(c6, {7}), Error);
  EXPECT_EQ(PointSubset::make(c6, {3, 1}).points, (std::vector<std::size_t>{1, 3}));
}

TEST(Connectivity, ComponentsAndPaths) {
  auto c6 = cycle(6);
  EXPECT_TRUE(is_r_connected(*c6, Rational(1)).connected);
  EXPECT_EQ(is_r_connected(*c6, Rational(1, 2)).components.size(), 6u);
  auto path = shortest_r_path(*c6, 0, 3, Rational(1));
  EXPECT_EQ(path.size(), 4u);
  EXPECT_TRUE(is_r_path(*c6, path, Rational(1)));
  EXPECT_TRUE(shortest_r_path(*c6, 0, 3, Rational(1, 2)).empty());
  EXPECT_EQ(shortest_r_path(*c6, 0, 3, Rational(3)).size(), 2u);
}

// Every generated space must pass the metric axioms (build_space checks them).
TEST(Property, RandomSpacesAreMetrics) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    Rng rng(mix_seed(seed));
    auto x = random_space(rng, SizeCaps{1, 7}, "p");
    for (std::size_t i = 0; i < x->size(); ++i)
      for (std::size_t j = 0; j < x->size(); ++j)
        for (std::size_t k = 0; k < x->size(); ++k) ASSERT_LE(x->dist(i, k), x->dist(i, j) + x->dist(j, k));
    auto y = rescaled_space(rng, x, Rational(3, 2), false, "q");
    auto z = rescaled_space(rng, x, Rational(3, 2), true, "q");
    EXPECT_EQ(z->size(), x->size() + 1);
    const std::size_t last = x->size() - 1;
    EXPECT_EQ(y->dist(0, last), Rational(3, 2) * x->dist(0, last));
    EXPECT_LE(z->dist(0, last), y->dist(0, last));  // the glued point may shortcut
  }
}
