#include <random>

#include "gtest/gtest.h"
#include "framespace/error.hpp"
#include "framespace/metric.hpp"
#include "framespace/value.hpp"
#include "support.hpp"

using namespace framespace;
using fstest::v;

TEST(Value, ParseAndPrintRoundTrip) {
  for (const char* text : {"0", "1", "3/2", "inf", "-log(1/2)", "7/3"}) {
    EXPECT_EQ(Value::parse(text).str(), text);
  }
  EXPECT_EQ(v("6/4").str(), "3/2");
  EXPECT_TRUE(v("-log(1)").isZero());
  EXPECT_TRUE(v("-log(0)").isInfinite());
}

TEST(Value, RejectsMalformedAndNegative) {
  for (const char* text : {"", "1/0", "abc", "1.5", "-log(2)", " 1", "-log()"}) {
    EXPECT_THROW(Value::parse(text), Error) << text;
  }
  try {
    Value::parse("-1");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidInput);
  }
}

TEST(Value, LinearArithmeticAndOrder) {
  EXPECT_EQ(v("1/2") + v("1/3"), v("5/6"));
  EXPECT_EQ(v("0") + v("2"), v("2"));
  EXPECT_TRUE((v("2") + v("inf")).isInfinite());
  EXPECT_LT(v("0"), v("1/1000"));
  EXPECT_LT(v("1000"), v("inf"));
  EXPECT_EQ(v("2").asRational(), mpq_class(2));
  EXPECT_FALSE(v("inf").asRational().has_value());
}

TEST(Value, LogScaleAddsByMultiplying) {
  EXPECT_EQ(v("-log(1/2)") + v("-log(1/3)"), v("-log(1/6)"));
  // Smaller argument means a larger quantity.
  EXPECT_LT(v("-log(1/2)"), v("-log(1/3)"));
  EXPECT_LT(v("0"), v("-log(9/10)"));
  EXPECT_LT(v("-log(1/1000)"), v("inf"));
  EXPECT_NEAR(v("-log(1/2)").toDouble(), std::log(2.0), 1e-15);
  EXPECT_FALSE(v("-log(1/2)").asRational().has_value());
}

TEST(Value, MixedScalesAreRejected) {
  EXPECT_THROW(v("1") + v("-log(1/2)"), Error);
  EXPECT_THROW((void)(v("1") < v("-log(1/2)")), Error);
}

TEST(Value, AboveIsStrictlyGreater) {
  for (const char* text : {"0", "5/2", "-log(1/3)"}) EXPECT_LT(v(text), v(text).above());
  EXPECT_THROW(v("inf").above(), Error);
}

namespace {

MetricTable table(std::vector<std::vector<const char*>> rows) {
  MetricTable t(rows.size());
  for (size_t i = 0; i < rows.size(); ++i) {
    for (size_t j = 0; j < rows.size(); ++j) t.at(i, j) = v(rows[i][j]);
  }
  return t;
}

}  // namespace

TEST(Closure, MetricIsUnchanged) {
  auto t = table({{"0", "1", "2"}, {"1", "0", "1"}, {"2", "1", "0"}});
  EXPECT_TRUE(satisfiesMetricAxioms(t));
  EXPECT_EQ(metricClosure(t), t);
}

TEST(Closure, ShortcutThroughMiddlePoint) {
  auto closed = metricClosure(table({{"0", "1", "5"}, {"1", "0", "1"}, {"5", "1", "0"}}));
  EXPECT_EQ(closed.at(0, 2), v("2"));
  EXPECT_EQ(closed.at(2, 0), v("2"));
}

TEST(Closure, DisconnectedStaysInfinite) {
  auto closed = metricClosure(table({{"0", "1", "inf"}, {"1", "0", "inf"}, {"inf", "inf", "0"}}));
  EXPECT_TRUE(closed.at(0, 2).isInfinite());
  EXPECT_TRUE(closed.at(1, 2).isInfinite());
  EXPECT_TRUE(satisfiesMetricAxioms(closed));
}

TEST(Closure, RejectsAsymmetricTable) {
  EXPECT_THROW(metricClosure(table({{"0", "1"}, {"2", "0"}})), Error);
}

TEST(Closure, RandomTablesMatchFloydWarshall) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const size_t n = 1 + rng() % 9;
    MetricTable raw(n);
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = i + 1; j < n; ++j) {
        mpq_class q(rng() % 20, 1 + rng() % 5);
        q.canonicalize();
        raw.at(i, j) = raw.at(j, i) = rng() % 10 < 3 ? Value::infinity() : Value::rational(q);
      }
    }
    auto closed = metricClosure(raw);
    ASSERT_EQ(fstest::distOf(closed), fstest::floydWarshall(fstest::distOf(raw)));
    std::string why;
    EXPECT_TRUE(satisfiesMetricAxioms(closed, &why)) << why;
    EXPECT_EQ(metricClosure(closed), closed);
  }
}

TEST(Closure, LogScaleMatchesBestProductPath) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const size_t n = 2 + rng() % 5;
    MetricTable raw(n);
    std::vector<std::vector<mpq_class>> mu(n, std::vector<mpq_class>(n, 0));
    for (size_t i = 0; i < n; ++i) mu[i][i] = 1;
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = i + 1; j < n; ++j) {
        if (rng() % 4 == 0) continue;
        mpq_class m(1 + rng() % 9, 10);
        m.canonicalize();
        mu[i][j] = mu[j][i] = m;
        raw.at(i, j) = raw.at(j, i) = Value::negLog(m);
      }
    }
    // Widest-path closure on the arguments: the largest product of mu.
    for (size_t k = 0; k < n; ++k) {
      for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) mu[i][j] = std::max(mu[i][j], mpq_class(mu[i][k] * mu[k][j]));
      }
    }
    auto closed = metricClosure(raw);
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < n; ++j) ASSERT_EQ(closed.at(i, j), Value::negLog(mu[i][j]));
    }
    EXPECT_TRUE(satisfiesMetricAxioms(closed));
  }
}

TEST(Axioms, ReportFirstViolation) {
  std::string why;
  EXPECT_FALSE(satisfiesMetricAxioms(table({{"1", "1"}, {"1", "0"}}), &why));
  EXPECT_FALSE(why.empty());
  EXPECT_FALSE(satisfiesMetricAxioms(table({{"0", "1"}, {"2", "0"}}), &why));
  EXPECT_FALSE(satisfiesMetricAxioms(table({{"0", "1", "5"}, {"1", "0", "1"}, {"5", "1", "0"}}), &why));
  EXPECT_NE(why.find("triangle"), std::string::npos) << why;
}

int main(int argc, char **argv) {
  ::testing::InitGoogleTest(&argc, argv);
  return RUN_ALL_TESTS();
}
