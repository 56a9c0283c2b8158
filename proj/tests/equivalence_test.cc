#include "gtest/gtest.h"
#include "framespace/equivalence.hpp"
#include "framespace/random.hpp"
#include "support.hpp"

using namespace framespace;
using fstest::makeBase;
using fstest::makeSystem;
using fstest::v;

namespace {

TunnelFrameSpace twoTunnelSpace() {
  return buildTunnelSpace(makeSystem({{"A", "1"}, {"B", "3/2"}}, {{"A", "B", "2"}}));
}

std::string joined(const std::vector<std::string>& diff) {
  std::string out;
  for (const auto& d : diff) out += d + "\n";
  return out;
}

}  // namespace

TEST(FunctorF, OneTunnel) {
  auto x = buildTunnelSpace(makeSystem({{"A", "1"}}));
  auto image = functorF(x);
  EXPECT_EQ(image.space.base.size(), 1u);
  EXPECT_EQ(image.space.base.cost(0), v("1"));
  EXPECT_EQ(image.space.metric, x.metric);
}

TEST(FunctorF, InterferenceBecomesCompositeCost) {
  auto x = twoTunnelSpace();
  auto image = functorF(x);
  const auto& b = image.space.base;
  EXPECT_FALSE(b.hasCompose());
  ASSERT_TRUE(b.compositeCost(0, 1).has_value());
  EXPECT_EQ(*b.compositeCost(0, 1), v("2"));
  EXPECT_EQ(*b.compositeCost(1, 0), v("2"));
  EXPECT_TRUE(b.compositeCost(0, 0)->isZero());
  EXPECT_EQ(image.space.sceneFrame, x.frame);
  EXPECT_EQ(image.space.foci, x.points);
  EXPECT_EQ(image.space.rawDistance, x.rawDistance);
  EXPECT_EQ(image.space.metric, x.metric);
  EXPECT_TRUE(regeneratedFrameMatches(image));
  EXPECT_EQ(image.correspondence.toDistinction, (std::vector<size_t>{0, 1}));
}

TEST(FunctorG, OneDistinction) {
  auto y = buildProlifSpace(makeBase({{"a", "0"}}, {{"a", "a", "a"}}));
  auto image = functorG(y);
  EXPECT_EQ(image.space.system.size(), 1u);
  EXPECT_EQ(image.space.metric, y.metric);
}

TEST(FunctorG, RecoversInterference) {
  auto back = functorG(functorF(twoTunnelSpace()).space).space;
  ASSERT_TRUE(back.system.interference(0, 1).has_value());
  EXPECT_EQ(*back.system.interference(0, 1), v("2"));
}

TEST(FunctorG, DisconnectedBaseKeepsOnlyTheDiagonal) {
  auto y = buildProlifSpace(makeBase({{"a", "0"}, {"b", "0"}}, {{"a", "a", "a"}, {"b", "b", "b"}}));
  auto sys = functorG(y).space.system;
  EXPECT_TRUE(sys.interference(0, 0).has_value());
  EXPECT_TRUE(sys.interference(1, 1).has_value());
  EXPECT_FALSE(sys.interference(0, 1).has_value());
}

TEST(RoundTrip, ExampleSpaces) {
  for (const auto& x : {twoTunnelSpace(), buildTunnelSpace(makeSystem({{"A", "1"}})),
                        buildTunnelSpace(makeSystem({{"A", "1"}, {"B", "1"}, {"C", "1"}},
                                                    {{"A", "B", "1"}, {"B", "C", "1"}}))}) {
    auto r = checkRoundTrip(x);
    EXPECT_TRUE(r.ok) << joined(r.diff);
  }
  auto chain = buildProlifSpace(makeBase({{"a", "1"}, {"x", "1"}, {"b", "2"}}, {{"a", "x", "b"}}));
  auto r = checkRoundTrip(chain);
  EXPECT_TRUE(r.ok) << joined(r.diff);
}

TEST(RoundTrip, RandomTunnelSystems) {
  Rng rng(0);
  for (int i = 0; i < 100; ++i) {
    auto x = buildTunnelSpace(randomTunnelSystem(rng, 6, i % 2 == 1));
    auto r = checkRoundTrip(x);
    ASSERT_TRUE(r.ok) << "instance " << i << "\n" << joined(r.diff);
    auto image = functorF(x);
    if (!x.system.hasComposition()) {
      EXPECT_TRUE(regeneratedFrameMatches(image)) << "instance " << i;
    }
    auto back = checkRoundTrip(image.space);
    EXPECT_TRUE(back.ok) << "instance " << i << "\n" << joined(back.diff);
  }
}

TEST(RoundTrip, RandomGradedBases) {
  Rng rng(1);
  for (int i = 0; i < 100; ++i) {
    auto y = buildProlifSpace(randomGradedBase(rng, 1 + i % 6, 3));
    auto r = checkRoundTrip(y);
    ASSERT_TRUE(r.ok) << "instance " << i << "\n" << joined(r.diff);
  }
}

TEST(RegeneratedFrame, DiffersWhenScenesAreNotReflexive) {
  // C(a·a) = 1, so a enters its own scene only above 1 while the tunnel
  // neighbourhood of a always holds a. The carried frame is unaffected.
  auto y = buildProlifSpace(makeBase({{"a", "1"}, {"b", "1"}}, {{"a", "a", "a"}, {"b", "b", "b"}}));
  auto image = functorG(y);
  EXPECT_TRUE(regeneratedFrameMatches(image));
  auto z = buildProlifSpace(makeBase({{"a", "1"}, {"x", "1"}, {"b", "2"}}, {{"a", "x", "b"}}));
  EXPECT_FALSE(regeneratedFrameMatches(functorG(z)));
  EXPECT_TRUE(checkRoundTrip(z).ok);
}

TEST(StructuralDiff, NamesACorruptedMetricEntry) {
  auto x = twoTunnelSpace();
  auto corrupted = x;
  corrupted.metric.at(0, 1) = v("7");
  auto diff = structuralDiff(x, corrupted);
  ASSERT_EQ(diff.size(), 1u);
  EXPECT_NE(diff[0].find("metric[0][1]"), std::string::npos) << diff[0];
  EXPECT_TRUE(structuralDiff(x, x).empty());
}

TEST(Transport, IdentityStaysIdentity) {
  auto x = twoTunnelSpace();
  auto id = FrameHom::identity(x.frame);
  EXPECT_EQ(transportMorphism(id, Direction::TGeomToPLog), id);
  EXPECT_EQ(transportMorphism(id, Direction::PLogToTGeom), id);
}

TEST(Transport, ValidityIsPreservedBothWays) {
  Rng rng(2);
  size_t valid = 0, invalid = 0;
  for (int i = 0; i < 60; ++i) {
    const auto shape = static_cast<MorphismShape>(i % 3);
    auto m = randomMorphism(rng, shape);
    const bool tgeom = checkTGeomMorphism(m.source, m.target, m.hom).ok;
    auto fs = functorF(m.source).space, ft = functorF(m.target).space;
    const auto forward = transportMorphism(m.hom, Direction::TGeomToPLog);
    EXPECT_EQ(checkPLogMorphism(fs, ft, forward).ok, tgeom) << shapeName(shape) << " " << i;
    auto gs = functorG(fs).space, gt = functorG(ft).space;
    EXPECT_EQ(checkTGeomMorphism(gs, gt, transportMorphism(forward, Direction::PLogToTGeom)).ok, tgeom);
    (tgeom ? valid : invalid) += 1;
  }
  EXPECT_GT(valid, 0u);
  EXPECT_GT(invalid, 0u);
}

int main(int argc, char **argv) {
  ::testing::InitGoogleTest(&argc, argv);
  return RUN_ALL_TESTS();
}
