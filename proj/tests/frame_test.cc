#include <random>

#include "gtest/gtest.h"
#include "framespace/error.hpp"
#include "framespace/frame.hpp"
#include "support.hpp"

using namespace framespace;
using fstest::set;

namespace {

Frame frameOf(std::vector<std::string> carrier, std::vector<OpenSet> opens) {
  return Frame::fromOpens(Carrier(std::move(carrier)), opens);
}

Frame sierpinski() { return frameOf({"a", "b"}, {set(2, {}), set(2, {0}), set(2, {0, 1})}); }
Frame boolean2() {
  return frameOf({"a", "b"}, {set(2, {}), set(2, {0}), set(2, {1}), set(2, {0, 1})});
}
Frame chain3() {
  return frameOf({"a", "b", "c"},
                 {set(3, {}), set(3, {0}), set(3, {0, 1}), set(3, {0, 1, 2})});
}

std::vector<std::vector<size_t>> generators(const std::vector<Point>& pts) {
  std::vector<std::vector<size_t>> out;
  for (const auto& p : pts) out.push_back(p.generator.members());
  return out;
}

}  // namespace

TEST(Closure, OneGenerator) {
  std::vector<OpenSet> gens{set(1, {0})};
  auto f = Frame::closure(Carrier({"a"}), gens);
  EXPECT_EQ(fstest::family(f.opens()), (fstest::SetFamily{{}, {0}}));
}

TEST(Closure, TwoDisjointGeneratorsGiveBooleanLattice) {
  std::vector<OpenSet> gens{set(2, {0}), set(2, {1})};
  auto f = Frame::closure(Carrier({"a", "b"}), gens);
  EXPECT_EQ(fstest::family(f.opens()), (fstest::SetFamily{{}, {0}, {1}, {0, 1}}));
}

TEST(Closure, OverlappingGeneratorsMatchFixpoint) {
  std::vector<OpenSet> gens{set(3, {0, 1}), set(3, {1, 2})};
  auto f = Frame::closure(Carrier({"a", "b", "c"}), gens);
  const fstest::SetFamily expected{{}, {1}, {0, 1}, {1, 2}, {0, 1, 2}};
  EXPECT_EQ(fstest::family(f.opens()), expected);
  EXPECT_EQ(fstest::fixpointClosure(3, gens), expected);
}

TEST(Closure, RandomGeneratorsMatchFixpointOracle) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const size_t width = 1 + rng() % 6;
    std::vector<OpenSet> gens;
    const size_t count = rng() % 5;
    for (size_t g = 0; g < count; ++g) {
      OpenSet s(width);
      for (size_t x = 0; x < width; ++x) {
        if (rng() % 2) s.set(x);
      }
      gens.push_back(s);
    }
    std::vector<std::string> ids;
    for (size_t x = 0; x < width; ++x) ids.push_back("e" + std::to_string(x));
    auto f = Frame::closure(Carrier(ids), gens);
    const auto oracle = fstest::fixpointClosure(width, gens);
    ASSERT_EQ(fstest::family(f.opens()), oracle) << "trial " << trial;
    EXPECT_EQ(fstest::family(f.joinIrreducibles()), fstest::literalJoinIrreducibles(oracle));
    EXPECT_EQ(f.countOpens(4096), oracle.size());
  }
}

TEST(Frame, RejectsFamilyNotClosedUnderUnion) {
  std::vector<OpenSet> opens{set(2, {}), set(2, {0}), set(2, {1})};
  EXPECT_THROW(Frame::fromOpens(Carrier({"a", "b"}), opens), Error);
}

TEST(Frame, OpenLimitIsEnforced) {
  std::vector<OpenSet> gens;
  for (size_t x = 0; x < 13; ++x) gens.push_back(OpenSet::of(13, {x}));
  std::vector<std::string> ids;
  for (size_t x = 0; x < 13; ++x) ids.push_back("e" + std::to_string(x));
  auto f = Frame::closure(Carrier(ids), gens);
  EXPECT_EQ(f.countOpens(4096), 4097u);
  try {
    f.opens();
    FAIL() << "expected OracleBoundExceeded";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::OracleBoundExceeded);
  }
}

TEST(Carrier, RejectsDuplicateIds) { EXPECT_THROW(Carrier({"a", "a"}), Error); }

TEST(Points, SingleOpen) {
  auto f = frameOf({"a"}, {set(1, {}), set(1, {0})});
  auto pts = points(f);
  ASSERT_EQ(pts.size(), 1u);
  EXPECT_EQ(pts[0].generator, set(1, {0}));
  EXPECT_EQ(pointsBruteForce(f), pts);
}

TEST(Points, BooleanFrame) {
  auto pts = points(boolean2());
  EXPECT_EQ(generators(pts), (std::vector<std::vector<size_t>>{{0}, {1}}));
  EXPECT_EQ(pointsBruteForce(boolean2()), pts);
}

TEST(Points, SierpinskiFilters) {
  auto f = sierpinski();
  auto pts = points(f);
  ASSERT_EQ(pts.size(), 2u);
  const auto opens = f.opens();
  // Opens in canonical order: {}, {a}, {a,b}.
  EXPECT_EQ(filterIndices(pts[0], opens), (std::vector<size_t>{1, 2}));
  EXPECT_EQ(filterIndices(pts[1], opens), (std::vector<size_t>{2}));
  EXPECT_EQ(pointsBruteForce(f), pts);
}

TEST(Points, ChainHasThreeFilters) {
  EXPECT_EQ(pointsBruteForce(chain3()).size(), 3u);
  EXPECT_EQ(points(chain3()), pointsBruteForce(chain3()));
}

TEST(Points, BruteForceRespectsOpenBound) {
  std::vector<OpenSet> gens;
  for (size_t x = 0; x < 6; ++x) gens.push_back(OpenSet::of(6, {x}));
  auto f = Frame::closure(Carrier({"a", "b", "c", "d", "e", "f"}), gens);
  try {
    pointsBruteForce(f);
    FAIL() << "expected OracleBoundExceeded";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::OracleBoundExceeded);
  }
}

TEST(Heyting, NegationOfBottomAndTop) {
  for (const auto& f : {sierpinski(), boolean2(), chain3()}) {
    EXPECT_EQ(heytingNegation(f, f.bottom()), f.top());
    EXPECT_EQ(heytingNegation(f, f.top()), f.bottom());
  }
}

TEST(Heyting, SierpinskiPointIsNotRegular) {
  auto f = sierpinski();
  EXPECT_EQ(heytingNegation(f, set(2, {0})), f.bottom());
  EXPECT_EQ(heytingNegation(f, heytingNegation(f, set(2, {0}))), f.top());
}

TEST(Regular, Examples) {
  EXPECT_EQ(fstest::family(regularElements(boolean2())), fstest::family(boolean2().opens()));
  EXPECT_EQ(fstest::family(regularElements(sierpinski())), (fstest::SetFamily{{}, {0, 1}}));
  EXPECT_EQ(fstest::family(regularElements(chain3())), (fstest::SetFamily{{}, {0, 1, 2}}));
}

TEST(FrameHom, IdentityIsValid) {
  for (const auto& f : {sierpinski(), boolean2(), chain3()}) {
    auto hom = FrameHom::identity(f);
    EXPECT_TRUE(checkFrameHom(hom).ok);
    auto pts = points(f);
    auto map = inducedPointMap(hom, pts, pts);
    for (size_t i = 0; i < map.size(); ++i) EXPECT_EQ(map[i], i);
  }
}

TEST(FrameHom, ConstantTopFailsOnBottom) {
  auto f = boolean2();
  std::map<OpenSet, OpenSet, CanonicalLess> table;
  for (const auto& o : f.opens()) table.emplace(o, f.top());
  auto result = checkFrameHom(FrameHom(f, f, table));
  EXPECT_FALSE(result.ok);
  EXPECT_NE(result.report.find("bottom"), std::string::npos) << result.report;
}

TEST(FrameHom, ContinuousPreimagesAreValid) {
  // Every carrier map between small topologies that is continuous gives a
  // valid hom; a discontinuous one fails the check.
  const std::vector<Frame> frames{sierpinski(), boolean2(), chain3(),
                                  frameOf({"a"}, {set(1, {}), set(1, {0})})};
  size_t checked = 0;
  for (const auto& src : frames) {
    for (const auto& dst : frames) {
      const size_t n = dst.carrier().size(), m = src.carrier().size();
      std::vector<std::optional<size_t>> map(n);
      size_t combos = 1;
      for (size_t i = 0; i < n; ++i) combos *= m;
      for (size_t code = 0; code < combos; ++code) {
        size_t c = code;
        for (size_t i = 0; i < n; ++i, c /= m) map[i] = c % m;
        bool continuous = true;
        for (const auto& v : src.opens()) {
          OpenSet pre(n);
          for (size_t i = 0; i < n; ++i) {
            if (v.test(*map[i])) pre.set(i);
          }
          continuous &= dst.isOpen(pre);
        }
        if (!continuous) {
          EXPECT_FALSE(checkFrameHom(FrameHom::preimage(src, dst, map)).ok);
          continue;
        }
        auto hom = FrameHom::preimage(src, dst, map);
        EXPECT_TRUE(checkFrameHom(hom).ok) << checkFrameHom(hom).report;
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 20u);
}

TEST(FrameHom, SierpinskiIntoBooleanPointMap) {
  const std::vector<std::optional<size_t>> identity{0, 1};
  auto hom = FrameHom::preimage(sierpinski(), boolean2(), identity);
  ASSERT_TRUE(checkFrameHom(hom).ok);
  auto srcPts = points(sierpinski()), dstPts = points(boolean2());
  // Boolean point {a} lands on Sierpinski {a}; {b} only sees the top.
  EXPECT_EQ(inducedPointMap(hom, dstPts, srcPts), (std::vector<size_t>{0, 1}));
}

TEST(FrameHom, CollapseSendsEveryPointToTheSingleOne) {
  auto one = frameOf({"z"}, {set(1, {}), set(1, {0})});
  const std::vector<std::optional<size_t>> toZ{0, 0};
  auto hom = FrameHom::preimage(one, boolean2(), toZ);
  ASSERT_TRUE(checkFrameHom(hom).ok);
  auto map = inducedPointMap(hom, points(boolean2()), points(one));
  EXPECT_EQ(map, (std::vector<size_t>{0, 0}));
}

int main(int argc, char **argv) {
  ::testing::InitGoogleTest(&argc, argv);
  return RUN_ALL_TESTS();
}
