#include <Eigen/Eigenvalues>

#include <cstdlib>
#include <random>

#include "gtest/gtest.h"
#include "framespace/error.hpp"
#include "framespace/random.hpp"
#include "framespace/spectral.hpp"
#include "support.hpp"

using namespace framespace;
using fstest::makeBase;
using fstest::makeSystem;

namespace {

ProliferativeBase chainBase() { return makeBase({{"a", "1"}, {"x", "1"}, {"b", "2"}}, {{"a", "x", "b"}}); }

OperatorMatrix matrix(std::vector<std::vector<int>> rows) {
  std::vector<std::string> basis;
  for (size_t i = 0; i < rows.size(); ++i) basis.push_back("e" + std::to_string(i));
  OperatorMatrix m(basis);
  for (size_t r = 0; r < rows.size(); ++r) {
    for (size_t c = 0; c < rows.size(); ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

Spectrum eigenOracle(const std::vector<double>& a, size_t n) {
  Eigen::MatrixXd m(n, n);
  for (size_t r = 0; r < n; ++r) {
    for (size_t c = 0; c < n; ++c) m(r, c) = a[r * n + c];
  }
  Eigen::EigenSolver<Eigen::MatrixXd> solver(m, false);
  Spectrum out;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) out.push_back(solver.eigenvalues()(i));
  return out;
}

// Largest distance after matching each oracle value to its nearest unused
// value on the other side.
double matchedDistance(const Spectrum& oracle, Spectrum ours) {
  if (oracle.size() != ours.size()) return INFINITY;
  double worst = 0;
  for (const auto& z : oracle) {
    auto best = ours.begin();
    for (auto it = ours.begin(); it != ours.end(); ++it) {
      if (std::abs(*it - z) < std::abs(*best - z)) best = it;
    }
    worst = std::max(worst, std::abs(*best - z));
    ours.erase(best);
  }
  return worst;
}

}  // namespace

TEST(TunnelLaplacian, EmptyRelationIsZero) {
  auto m = tunnelLaplacian(makeSystem({{"a", "1"}, {"b", "2"}}), {});
  for (size_t r = 0; r < 2; ++r) {
    for (size_t c = 0; c < 2; ++c) EXPECT_EQ(m.at(r, c), 0);
  }
  EXPECT_EQ(m.basis(), (std::vector<std::string>{"a", "b"}));
}

TEST(TunnelLaplacian, GapInTheColumnOfTheLargerTunnel) {
  auto s = makeSystem({{"a", "1"}, {"b", "2"}});
  auto m = tunnelLaplacian(s, {{{0, 1}}});
  EXPECT_EQ(m.at(0, 1), 1);
  EXPECT_EQ(m.at(1, 0), 0);
  EXPECT_EQ(m.at(0, 0), 0);
  EXPECT_EQ(m.at(1, 1), 0);

  auto three = makeSystem({{"a", "1"}, {"b", "2"}, {"x", "1"}});
  auto col = tunnelLaplacian(three, {{{0, 1}, {2, 1}}});
  EXPECT_EQ(col.at(0, 1), 1);
  EXPECT_EQ(col.at(2, 1), 1);
}

TEST(TunnelLaplacian, RejectsBadPairs) {
  auto s = makeSystem({{"a", "1"}, {"b", "2"}});
  EXPECT_THROW(tunnelLaplacian(s, {{{0, 0}}}), Error);
  EXPECT_THROW(tunnelLaplacian(s, {{{1, 0}}}), Error);
  auto logScale = makeSystem({{"a", "-log(1/2)"}, {"b", "-log(1/4)"}});
  EXPECT_THROW(tunnelLaplacian(logScale, {{{0, 1}}}), Error);
}

TEST(ProlifLaplacian, Examples) {
  auto none = prolifLaplacian(makeBase({{"a", "1"}, {"b", "2"}}));
  EXPECT_TRUE(nilpotencyCheck(none));
  for (size_t r = 0; r < 2; ++r) {
    for (size_t c = 0; c < 2; ++c) EXPECT_EQ(none.at(r, c), 0);
  }
  auto chain = prolifLaplacian(chainBase());
  ASSERT_EQ(chain.basis(), (std::vector<std::string>{"a", "x", "b"}));
  EXPECT_EQ(chain.at(0, 2), 1);
  EXPECT_EQ(chain.at(1, 2), 1);
  for (size_t r = 0; r < 3; ++r) {
    EXPECT_EQ(chain.at(r, 0), 0);
    EXPECT_EQ(chain.at(r, 1), 0);
  }
  auto flat = prolifLaplacian(makeBase({{"a", "2"}, {"x", "0"}, {"b", "2"}}, {{"a", "x", "b"}}));
  EXPECT_TRUE(refines(makeBase({{"a", "2"}, {"x", "0"}, {"b", "2"}}, {{"a", "x", "b"}}), 0, 1));
  const auto& basis = flat.basis();
  const auto ia = std::find(basis.begin(), basis.end(), "a") - basis.begin();
  const auto ib = std::find(basis.begin(), basis.end(), "b") - basis.begin();
  EXPECT_EQ(flat.at(ia, ib), 0);
}

TEST(DeriveSubstructure, Examples) {
  auto empty = makeBase({{"a", "1"}});
  auto fe = functorG(buildProlifSpace(empty));
  EXPECT_TRUE(deriveSubstructureFromBase(empty, fe.correspondence).pairs.empty());

  auto b = chainBase();
  auto g = functorG(buildProlifSpace(b));
  auto sub = deriveSubstructureFromBase(b, g.correspondence);
  std::set<std::pair<std::string, std::string>> named;
  for (auto [u, t] : sub.pairs) named.emplace(g.space.system.tunnels().id(u), g.space.system.tunnels().id(t));
  EXPECT_EQ(named, (std::set<std::pair<std::string, std::string>>{{"a", "b"}, {"x", "b"}}));
}

TEST(Conjugation, IdentityPermutationOnEqualMatrices) {
  auto m = matrix({{0, 1}, {0, 0}});
  EXPECT_TRUE(conjugationCheck({{0, 1}}, m, m).ok);
}

TEST(Conjugation, ChainThroughTheFunctor) {
  auto y = buildProlifSpace(chainBase());
  auto g = functorG(y);
  auto sub = deriveSubstructureFromBase(y.base, g.correspondence);
  auto dT = tunnelLaplacian(g.space.system, sub);
  auto dP = prolifLaplacian(y.base);
  auto u = unitaryFromCorrespondence(dT, dP, g.space.system.tunnels(), y.base.distinctions(), g.correspondence);
  auto result = conjugationCheck(u, dT, dP);
  EXPECT_TRUE(result.ok) << result.report;
  EXPECT_EQ(result.maxDiscrepancy, 0);
}

TEST(Conjugation, PerturbedEntryIsNamed) {
  auto y = buildProlifSpace(chainBase());
  auto g = functorG(y);
  auto dT = tunnelLaplacian(g.space.system, deriveSubstructureFromBase(y.base, g.correspondence));
  auto dP = prolifLaplacian(y.base);
  auto u = unitaryFromCorrespondence(dT, dP, g.space.system.tunnels(), y.base.distinctions(), g.correspondence);
  dP.at(0, 2) += mpq_class(1, 2);
  auto result = conjugationCheck(u, dT, dP);
  EXPECT_FALSE(result.ok);
  EXPECT_EQ(result.maxDiscrepancy, mpq_class(1, 2));
  EXPECT_NE(result.report.find("(a, b)"), std::string::npos) << result.report;
}

TEST(Conjugation, DimensionMismatchIsAnError) {
  EXPECT_THROW(conjugationCheck({{0}}, matrix({{0}}), matrix({{0, 0}, {0, 0}})), Error);
}

TEST(Nilpotency, Examples) {
  EXPECT_TRUE(nilpotencyCheck(matrix({{0, 0, 0}, {0, 0, 0}, {0, 0, 0}})));
  EXPECT_TRUE(nilpotencyCheck(matrix({{0, 0, 0}, {4, 0, 0}, {1, 7, 0}})));
  EXPECT_FALSE(nilpotencyCheck(matrix({{0, 0}, {0, 1}})));
  EXPECT_FALSE(nilpotencyCheck(matrix({{0, 1}, {1, 0}})));
}

TEST(Spectrum, Examples) {
  for (const auto& z : spectrum(matrix({{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}))) EXPECT_EQ(z, 0.0);
  EXPECT_EQ(spectrum(matrix({{2, 0}, {0, 3}})), (Spectrum{2.0, 3.0}));
  for (const auto& z : spectrum(prolifLaplacian(chainBase()))) EXPECT_LT(std::abs(z), 1e-12);
  auto rotation = spectrum(matrix({{0, -1}, {1, 0}}));
  ASSERT_EQ(rotation.size(), 2u);
  EXPECT_NEAR(rotation[0].imag(), -1.0, 1e-12);
  EXPECT_NEAR(rotation[1].imag(), 1.0, 1e-12);
}

TEST(Spectrum, DimensionBound) {
  auto m = matrix({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  EXPECT_THROW(spectrum(m, 2), Error);
  setenv("FRAMESPACE_MAX_DIM", "5", 1);
  EXPECT_EQ(spectralDimBound(), 5u);
  setenv("FRAMESPACE_MAX_DIM", "junk", 1);
  EXPECT_EQ(spectralDimBound(), kDefaultSpectralDim);
  unsetenv("FRAMESPACE_MAX_DIM");
  EXPECT_EQ(spectralDimBound(), kDefaultSpectralDim);
}

TEST(Eigensolver, MatchesEigenOnRandomMatrices) {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (int trial = 0; trial < 300; ++trial) {
    const size_t n = 1 + trial % 40;
    std::vector<double> a(n * n);
    const int shape = trial % 4;
    for (size_t r = 0; r < n; ++r) {
      for (size_t c = 0; c < n; ++c) {
        double x = unit(rng);
        if (shape == 1 && r > c + 1) x = 0;             // Hessenberg already
        if (shape == 2 && rng() % 3 != 0) x = 0;        // sparse, exercises isolation
        if (shape == 3) x = std::round(x * 4);          // small integers, repeated roots
        a[r * n + c] = x;
      }
    }
    const auto ours = realEigenvalues(a, n);
    const auto oracle = eigenOracle(a, n);
    double scale = 1;
    for (double x : a) scale = std::max(scale, std::abs(x));
    EXPECT_LT(matchedDistance(oracle, ours), 1e-6 * scale * n) << "trial " << trial << " n=" << n;
    for (size_t i = 1; i < ours.size(); ++i) {
      EXPECT_TRUE(ours[i - 1].real() < ours[i].real() ||
                  (ours[i - 1].real() == ours[i].real() && ours[i - 1].imag() <= ours[i].imag()));
    }
  }
}

TEST(Eigensolver, PermutationInvariance) {
  std::mt19937_64 rng(32);
  std::uniform_real_distribution<double> unit(-2.0, 2.0);
  for (int trial = 0; trial < 50; ++trial) {
    const size_t n = 2 + trial % 12;
    std::vector<double> a(n * n);
    for (auto& x : a) x = unit(rng);
    std::vector<size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<double> b(n * n);
    for (size_t r = 0; r < n; ++r) {
      for (size_t c = 0; c < n; ++c) b[perm[r] * n + perm[c]] = a[r * n + c];
    }
    EXPECT_LT(spectrumDeviation(realEigenvalues(a, n), realEigenvalues(b, n)), 1e-9) << "trial " << trial;
  }
}

TEST(Eigensolver, KnownSpectra) {
  // Companion matrix of (t-1)(t-2)(t-3).
  const std::vector<double> companion{0, 0, 6, 1, 0, -11, 0, 1, 6};
  auto s = realEigenvalues(companion, 3);
  ASSERT_EQ(s.size(), 3u);
  for (size_t i = 0; i < 3; ++i) EXPECT_NEAR(s[i].real(), double(i + 1), 1e-9);
  EXPECT_EQ(spectrumDeviation({1.0}, {1.0, 2.0}), INFINITY);
}

TEST(SpectralProperties, RandomGradedBases) {
  Rng rng(33);
  for (int i = 0; i < 100; ++i) {
    auto y = buildProlifSpace(randomGradedBase(rng, 1 + i % 8, 4));
    auto g = functorG(y);
    auto sub = deriveSubstructureFromBase(y.base, g.correspondence);
    EXPECT_EQ(sub.pairs.size(), fstest::transitiveReductionOracle(y.base).size());
    auto dT = tunnelLaplacian(g.space.system, sub);
    auto dP = prolifLaplacian(y.base);
    auto u = unitaryFromCorrespondence(dT, dP, g.space.system.tunnels(), y.base.distinctions(), g.correspondence);
    ASSERT_TRUE(conjugationCheck(u, dT, dP).ok) << "instance " << i;
    for (const auto* m : {&dT, &dP}) {
      EXPECT_TRUE(fstest::allZero(fstest::matrixPower(*m, m->dim())));
      EXPECT_TRUE(nilpotencyCheck(*m));
      for (const auto& z : spectrum(*m)) EXPECT_LT(std::abs(z), 1e-9);
    }
    EXPECT_LT(spectrumDeviation(spectrum(dT), spectrum(dP)), 1e-9);
  }
}

int main(int argc, char **argv) {
  ::testing::InitGoogleTest(&argc, argv);
  return RUN_ALL_TESTS();
}
