#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "drht/io.hpp"

using namespace drht;

TEST(Io, ScalarForms) {
  EXPECT_EQ(scalar_json(Rational(3)), json(3));
  EXPECT_EQ(scalar_json(Rational(1, 2)), json("1/2"));
  EXPECT_EQ(scalar_from_json(json("0.25")), Rational(1, 4));
  EXPECT_EQ(scalar_from_json(json(-2)), Rational(-2));
  EXPECT_THROW(scalar_from_json(json(0.5)), Error);
  EXPECT_THROW(scalar_from_json(json::array()), Error);
}

TEST(Io, SpaceRoundTrip) {
  auto x = cycle(5, CycleMetric::chord);
  auto back = space_from_json(to_json(*x));
  EXPECT_TRUE(same_space(x, back));
  EXPECT_EQ(validate_json(to_json(*x)).kind, "space");
}

TEST(Io, SpaceRejectsMalformed) {
  EXPECT_THROW(space_from_json(json::parse(R"({"points":["a"]})")), Error);
  EXPECT_THROW(space_from_json(json::parse(R"({"points":["a","b"],"metric":[[0,1]]})")), Error);
  EXPECT_THROW(space_from_json(json::parse(R"({"points":["a","b"],"metric":[[0,1],[2,0]]})")), Error);
  EXPECT_THROW(space_from_json(json::parse(R"({"points":["a","b"],"metric":[[0,"x"],[1,0]]})")), Error);
}

TEST(Io, MapAndHomotopyRoundTrip) {
  auto c6 = cycle(6);
  LipschitzMap rot(c6, c6, {1, 2, 3, 4, 5, 0});
  auto m = map_from_json(to_json(rot));
  EXPECT_EQ(m, rot);
  Homotopy h{c6, c6, {identity(c6).values(), rot.values()}, {1, 1}};
  auto hj = to_json(h);
  auto back = homotopy_from_json(hj);
  EXPECT_EQ(back.frames, h.frames);
  EXPECT_EQ(back.params.r, Rational(1));
  EXPECT_TRUE(validate_json(hj).report.ok);
  hj["r"] = "1/2";
  auto v = validate_json(hj);
  EXPECT_EQ(v.kind, "homotopy");
  EXPECT_FALSE(v.report.ok);
}

TEST(Io, MapRejectsUnknownLabels) {
  auto c4 = cycle(4);
  json j{{"domain", to_json(*c4)}, {"codomain", to_json(*c4)}, {"values", {{"0", "9"}, {"1", "1"}, {"2", "2"}, {"3", "3"}}}};
  EXPECT_THROW(map_from_json(j), Error);
  j["values"] = {{"0", "0"}};
  EXPECT_THROW(map_from_json(j), Error);
}

TEST(Io, DistanceCertificateRoundTrip) {
  auto c6 = cycle(6);
  auto id = identity(c6);
  auto c0 = constant(c6, c6, 0);
  const ScaleParams p{1, 1};
  auto d = homotopic_distance(id, c0, p);
  auto j = to_json(d, id, c0, p);
  auto cert = distance_from_json(j);
  EXPECT_EQ(cert.result, d);
  auto v = validate_json(j);
  EXPECT_EQ(v.kind, "distance");
  EXPECT_TRUE(v.report.ok);
  j["cover"].erase(j["cover"].size() - 1);
  EXPECT_THROW(validate_json(j), Error);
}

TEST(Io, InfiniteCertificate) {
  auto c6 = cycle(6);
  auto id = identity(c6);
  auto c0 = constant(c6, c6, 0);
  const ScaleParams p{1, Rational(1, 2)};
  auto d = homotopic_distance(id, c0, p);
  auto j = to_json(d, id, c0, p);
  EXPECT_EQ(j["value"], "inf");
  EXPECT_TRUE(j.contains("bad_point"));
  EXPECT_TRUE(validate_json(j).report.ok);
}

TEST(Io, MotionPlanRoundTrip) {
  auto x = interval(2);
  auto res = tc_space(x, 1);
  ASSERT_FALSE(res.plans.empty());
  auto j = to_json(res.plans[0], Rational(1), ProductMetric::l1);
  auto back = motion_plan_from_json(j);
  EXPECT_EQ(back.plan.pairs, res.plans[0].pairs);
  EXPECT_EQ(back.plan.paths, res.plans[0].paths);
  EXPECT_TRUE(validate_json(j).report.ok);
  j["r"] = "1/2";
  EXPECT_FALSE(validate_json(j).report.ok);
}

TEST(Io, RelativeSpaceReferences) {
  const auto dir = std::filesystem::temp_directory_path() / "drht_io_test";
  std::filesystem::create_directories(dir);
  {
    std::ofstream(dir / "c4.json") << to_json(*cycle(4)).dump();
  }
  json m{{"domain", "c4.json"}, {"codomain", "c4.json"}, {"values", {{"0", "1"}, {"1", "2"}, {"2", "3"}, {"3", "0"}}}};
  {
    std::ofstream(dir / "rot.json") << m.dump();
  }
  auto f = read_map(dir / "rot.json");
  EXPECT_EQ(f.values(), (std::vector<std::size_t>{1, 2, 3, 0}));
  EXPECT_THROW(read_map(dir / "missing.json"), Error);
  {
    std::ofstream(dir / "broken.json") << "{not json";
  }
  EXPECT_THROW(read_json_file(dir / "broken.json"), Error);
  std::filesystem::remove_all(dir);
}

TEST(Io, UnknownKind) {
  EXPECT_THROW(validate_json(json::parse(R"({"kind":"nonsense"})")), Error);
  EXPECT_THROW(validate_json(json::parse(R"({"hello":1})")), Error);
}
