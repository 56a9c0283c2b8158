#include "framespace/spectral.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <numeric>

#include "framespace/error.hpp"

namespace framespace {

OperatorMatrix::OperatorMatrix(std::vector<std::string> basis)
    : basis_(std::move(basis)), entries_(basis_.size() * basis_.size()) {}

namespace {

mpq_class rationalOf(const Value& v, const std::string& what) {
  auto q = v.asRational();
  if (!q) fail(ErrorCode::InvalidInput, "Laplacian needs finite rational " + what + ", got " + v.str());
  return *q;
}

}  // namespace

OperatorMatrix tunnelLaplacian(const TunnelSystem& system, const SubstructureRelation& sub) {
  OperatorMatrix m(system.tunnels().ids());
  for (auto [u, t] : sub.pairs) {
    if (u >= system.size() || t >= system.size()) {
      fail(ErrorCode::InvalidInput, "substructure pair references an unknown tunnel");
    }
    const auto& ids = system.tunnels();
    if (u == t) fail(ErrorCode::InvalidInput, "substructure relation must be irreflexive ('" + ids.id(u) + "')");
    const mpq_class lu = rationalOf(system.intensity(u), "intensity");
    const mpq_class lt = rationalOf(system.intensity(t), "intensity");
    if (lu > lt) {
      fail(ErrorCode::InvalidInput, "substructure '" + ids.id(u) + "' of '" + ids.id(t) +
                                        "' has larger intensity");
    }
    m.at(u, t) = lt - lu;
  }
  return m;
}

namespace {

std::vector<size_t> costOrder(const ProliferativeBase& base) {
  std::vector<size_t> order(base.size());
  std::iota(order.begin(), order.end(), size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](size_t a, size_t b) { return base.cost(a) < base.cost(b); });
  return order;
}

}  // namespace

OperatorMatrix prolifLaplacian(const ProliferativeBase& base) {
  const auto order = costOrder(base);
  std::vector<size_t> position(base.size());
  std::vector<std::string> basis;
  for (size_t i = 0; i < order.size(); ++i) {
    position[order[i]] = i;
    basis.push_back(base.distinctions().id(order[i]));
  }
  OperatorMatrix m(std::move(basis));
  const auto rel = refinementRelation(base);
  for (size_t e = 0; e < base.size(); ++e) {
    for (size_t d = 0; d < base.size(); ++d) {
      if (!rel.isImmediate(e, d)) continue;
      m.at(position[e], position[d]) =
          rationalOf(base.cost(d), "cost") - rationalOf(base.cost(e), "cost");
    }
  }
  return m;
}

SubstructureRelation deriveSubstructureFromBase(const ProliferativeBase& base,
                                                const Correspondence& corr) {
  if (corr.toTunnel.size() != base.size()) {
    fail(ErrorCode::InvalidInput, "correspondence does not cover the base");
  }
  SubstructureRelation sub;
  const auto rel = refinementRelation(base);
  for (size_t d = 0; d < base.size(); ++d) {
    for (size_t e = 0; e < base.size(); ++e) {
      if (rel.isImmediate(e, d)) sub.pairs.emplace_back(corr.toTunnel[e], corr.toTunnel[d]);
    }
  }
  return sub;
}

PermutationUnitary unitaryFromCorrespondence(const OperatorMatrix& tunnelSide,
                                             const OperatorMatrix& prolifSide,
                                             const Carrier& tunnels, const Carrier& distinctions,
                                             const Correspondence& corr) {
  const size_t n = tunnelSide.dim();
  if (prolifSide.dim() != n || corr.toDistinction.size() != n) {
    fail(ErrorCode::InvalidInput, "unitary between spaces of different dimension");
  }
  std::vector<size_t> prolifPos(n);
  for (size_t i = 0; i < n; ++i) prolifPos[distinctions.indexOf(prolifSide.basis()[i])] = i;
  PermutationUnitary u;
  std::vector<char> hit(n, 0);
  for (size_t i = 0; i < n; ++i) {
    const size_t t = tunnels.indexOf(tunnelSide.basis()[i]);
    const size_t target = prolifPos[corr.toDistinction[t]];
    if (hit[target]++) fail(ErrorCode::InternalInconsistency, "correspondence is not a bijection");
    u.image.push_back(target);
  }
  return u;
}

ConjugationResult conjugationCheck(const PermutationUnitary& u, const OperatorMatrix& dT,
                                   const OperatorMatrix& dP) {
  const size_t n = dT.dim();
  if (dP.dim() != n || u.image.size() != n) {
    fail(ErrorCode::InvalidInput, "conjugation check on mismatched dimensions");
  }
  ConjugationResult result;
  for (size_t r = 0; r < n; ++r) {
    for (size_t c = 0; c < n; ++c) {
      const size_t pr = u.image[r];
      const size_t pc = u.image[c];
      const mpq_class gap = abs(dT.at(r, c) - dP.at(pr, pc));
      if (sgn(gap) == 0) continue;
      if (result.ok) {
        result.ok = false;
        result.report = "entry (" + dP.basis()[pr] + ", " + dP.basis()[pc] + "): conjugated " +
                        dT.at(r, c).get_str() + " != " + dP.at(pr, pc).get_str();
      }
      if (gap > result.maxDiscrepancy) result.maxDiscrepancy = gap;
    }
  }
  return result;
}

namespace {

std::vector<mpq_class> multiply(const std::vector<mpq_class>& a, const std::vector<mpq_class>& b,
                                size_t n) {
  std::vector<mpq_class> out(n * n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t k = 0; k < n; ++k) {
      const mpq_class& aik = a[i * n + k];
      if (sgn(aik) == 0) continue;
      for (size_t j = 0; j < n; ++j) out[i * n + j] += aik * b[k * n + j];
    }
  }
  return out;
}

bool isZero(const std::vector<mpq_class>& m) {
  return std::all_of(m.begin(), m.end(), [](const mpq_class& q) { return sgn(q) == 0; });
}

}  // namespace

bool nilpotencyCheck(const OperatorMatrix& m) {
  const size_t n = m.dim();
  std::vector<mpq_class> power(n * n);
  for (size_t r = 0; r < n; ++r) {
    for (size_t c = 0; c < n; ++c) power[r * n + c] = m.at(r, c);
  }
  // The nilpotency index never exceeds n, so m^n = 0 iff m^(2^k) = 0 for
  // the first 2^k ≥ n.
  for (size_t exponent = 1; exponent < n; exponent *= 2) {
    if (isZero(power)) return true;
    power = multiply(power, power, n);
  }
  return isZero(power);
}

size_t spectralDimBound() {
  if (const char* env = std::getenv("FRAMESPACE_MAX_DIM")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<size_t>(v);
  }
  return kDefaultSpectralDim;
}

Spectrum spectrum(const OperatorMatrix& m, size_t maxDim) {
  const size_t n = m.dim();
  if (n > maxDim) {
    fail(ErrorCode::InvalidInput, "matrix dimension " + std::to_string(n) + " exceeds spectral bound " +
                                      std::to_string(maxDim));
  }
  std::vector<double> a(n * n);
  for (size_t r = 0; r < n; ++r) {
    for (size_t c = 0; c < n; ++c) a[r * n + c] = m.at(r, c).get_d();
  }
  return realEigenvalues(std::move(a), n);
}

double spectrumDeviation(const Spectrum& a, const Spectrum& b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  std::vector<char> used(b.size(), 0);
  double worst = 0.0;
  for (const auto& x : a) {
    size_t best = b.size();
    double bestDist = std::numeric_limits<double>::infinity();
    for (size_t j = 0; j < b.size(); ++j) {
      if (used[j]) continue;
      const double d = std::abs(x - b[j]);
      if (d < bestDist) {
        bestDist = d;
        best = j;
      }
    }
    used[best] = 1;
    worst = std::max(worst, bestDist);
  }
  return worst;
}

}  // namespace framespace
