#include "framespace/tunnel.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "framespace/error.hpp"

namespace framespace {

namespace {

void requireOneScale(const std::vector<const Value*>& values, const std::string& what) {
  std::optional<Value::Scale> seen;
  for (const Value* v : values) {
    auto s = v->scale();
    if (!s) continue;
    if (seen && *seen != *s) {
      fail(ErrorCode::Validation, what + " mixes linear and log-scale values");
    }
    seen = s;
  }
}

}  // namespace

TunnelSystem TunnelSystem::create(std::vector<TunnelSpec> tunnels,
                                  std::vector<InterferenceEntry> interference,
                                  std::optional<std::vector<CompositeEntry>> composition) {
  if (tunnels.empty()) fail(ErrorCode::Validation, "tunnel system has an empty carrier");
  std::sort(tunnels.begin(), tunnels.end(),
            [](const TunnelSpec& a, const TunnelSpec& b) { return a.id < b.id; });
  std::vector<std::string> ids;
  for (const auto& t : tunnels) ids.push_back(t.id);
  for (size_t i = 1; i < ids.size(); ++i) {
    if (ids[i] == ids[i - 1]) fail(ErrorCode::Validation, "duplicate tunnel '" + ids[i] + "'");
  }

  TunnelSystem sys{Carrier(std::move(ids))};
  const size_t n = sys.size();
  for (auto& t : tunnels) sys.intensity_.push_back(std::move(t.intensity));
  sys.interference_.assign(n * n, std::nullopt);

  auto lookup = [&](const std::string& id) {
    auto idx = sys.tunnels_.find(id);
    if (!idx) fail(ErrorCode::Validation, "interference names unknown tunnel '" + id + "'");
    return *idx;
  };
  for (auto& e : interference) {
    const size_t a = lookup(e.a);
    const size_t b = lookup(e.b);
    if (a == b && !e.value.isZero()) {
      fail(ErrorCode::Validation, "nonzero self-interference for '" + e.a + "': " + e.value.str());
    }
    for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
      auto& slot = sys.interference_[x * n + y];
      if (slot && !(*slot == e.value)) {
        fail(ErrorCode::Validation, "asymmetric interference for pair (" + e.a + ", " + e.b +
                                        "): " + slot->str() + " vs " + e.value.str());
      }
      slot = e.value;
    }
  }
  for (size_t t = 0; t < n; ++t) sys.interference_[t * n + t] = Value::zero();

  std::vector<const Value*> all;
  for (const auto& v : sys.intensity_) all.push_back(&v);
  for (const auto& v : sys.interference_) {
    if (v) all.push_back(&*v);
  }
  requireOneScale(all, "tunnel system");

  if (composition) {
    auto& table = sys.composition_.emplace(n * n);
    auto name = [&](const std::string& id) {
      auto idx = sys.tunnels_.find(id);
      if (!idx) fail(ErrorCode::Validation, "composition names unknown tunnel '" + id + "'");
      return *idx;
    };
    for (const auto& c : *composition) {
      const size_t l = name(c.left), r = name(c.right), res = name(c.result);
      auto& slot = table[l * n + r];
      if (slot && *slot != res) {
        fail(ErrorCode::Validation, "conflicting composites for (" + c.left + ", " + c.right + ")");
      }
      slot = res;
    }
    for (size_t a = 0; a < n; ++a) {
      for (size_t b = 0; b < n; ++b) {
        for (size_t c = 0; c < n; ++c) {
          const auto ab = table[a * n + b];
          const auto bc = table[b * n + c];
          if (!ab || !bc) continue;
          const auto left = table[*ab * n + c];
          const auto right = table[a * n + *bc];
          if (left && right && *left != *right) {
            fail(ErrorCode::Validation, "composition not associative at (" + sys.tunnels_.id(a) +
                                            ", " + sys.tunnels_.id(b) + ", " + sys.tunnels_.id(c) + ")");
          }
        }
      }
    }
    for (size_t a = 0; a < n; ++a) {
      for (size_t b = 0; b < n; ++b) {
        if (a == b) continue;
        std::optional<Value> expected;
        for (auto r : {table[a * n + b], table[b * n + a]}) {
          if (r && (!expected || sys.intensity_[*r] < *expected)) expected = sys.intensity_[*r];
        }
        const auto& actual = sys.interference_[a * n + b];
        if (expected != actual) {
          fail(ErrorCode::Validation,
               "interference of (" + sys.tunnels_.id(a) + ", " + sys.tunnels_.id(b) +
                   ") disagrees with the composition table: " + (actual ? actual->str() : "undefined") +
                   " vs " + (expected ? expected->str() : "undefined"));
        }
      }
    }
  }
  return sys;
}

std::optional<size_t> TunnelSystem::composite(size_t left, size_t right) const {
  if (!composition_) return std::nullopt;
  return composition_->at(left * size() + right);
}

std::vector<Value> frameThresholds(const std::vector<Value>& defined) {
  std::vector<Value> out;
  for (const auto& v : defined) {
    if (v.isFinite() && !v.isZero()) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  out.push_back(out.empty() ? Value::zero().above() : out.back().above());
  return out;
}

OpenSet neighbourhood(const TunnelSystem& system, size_t tunnel, const Value& epsilon) {
  if (tunnel >= system.size()) fail(ErrorCode::InvalidInput, "unknown tunnel index");
  if (epsilon.isZero()) fail(ErrorCode::InvalidInput, "neighbourhood radius must be positive");
  OpenSet out(system.size());
  for (size_t other = 0; other < system.size(); ++other) {
    const auto& v = system.interference(tunnel, other);
    if (v && *v < epsilon) out.set(other);
  }
  return out;
}

Frame generateFrame(const TunnelSystem& system) {
  std::vector<Value> defined;
  for (size_t a = 0; a < system.size(); ++a) {
    for (size_t b = 0; b < system.size(); ++b) {
      if (const auto& v = system.interference(a, b)) defined.push_back(*v);
    }
  }
  std::set<OpenSet, CanonicalLess> generators;
  for (const auto& eps : frameThresholds(defined)) {
    for (size_t t = 0; t < system.size(); ++t) generators.insert(neighbourhood(system, t, eps));
  }
  const std::vector<OpenSet> gens(generators.begin(), generators.end());
  return Frame::closure(system.tunnels(), gens);
}

std::vector<std::vector<size_t>> pointMembers(const Frame& frame, std::span<const Point> pts) {
  std::vector<std::vector<size_t>> members(pts.size());
  for (size_t p = 0; p < pts.size(); ++p) {
    for (size_t x = 0; x < frame.carrier().size(); ++x) {
      const OpenSet* iota = frame.minimalOpen(x);
      if (!iota) continue;
      if (pts[p].contains(*iota)) members[p].push_back(x);
    }
  }
  return members;
}

MetricTable rawDistance(const TunnelSystem& system, const Frame& frame, std::span<const Point> pts) {
  return rawDistanceTable(pointMembers(frame, pts), system.size(),
                          [&](size_t a, size_t b) -> const std::optional<Value>& {
                            return system.interference(a, b);
                          });
}

TunnelFrameSpace buildTunnelSpace(TunnelSystem system) {
  Frame frame = generateFrame(system);
  std::vector<Point> pts = points(frame);
  MetricTable raw = rawDistance(system, frame, pts);
  MetricTable metric = metricClosure(raw);
  std::string why;
  if (!satisfiesMetricAxioms(metric, &why)) {
    fail(ErrorCode::InternalInconsistency, "closed tunnel metric is not a metric: " + why);
  }
  return TunnelFrameSpace{std::move(system), std::move(frame), std::move(pts), std::move(raw),
                          std::move(metric)};
}

CheckResult checkNonExpansive(const Frame& srcFrame, std::span<const Point> srcPoints,
                              const MetricTable& srcMetric, const Frame& dstFrame,
                              std::span<const Point> dstPoints, const MetricTable& dstMetric,
                              const FrameHom& hom) {
  if (!(hom.source() == dstFrame) || !(hom.target() == srcFrame)) {
    fail(ErrorCode::InvalidInput, "morphism must map the target frame into the source frame");
  }
  if (auto homCheck = checkFrameHom(hom); !homCheck.ok) {
    return {false, "not a frame homomorphism: " + homCheck.report};
  }
  const auto f = inducedPointMap(hom, srcPoints, dstPoints);
  for (size_t p = 0; p < srcPoints.size(); ++p) {
    for (size_t q = p + 1; q < srcPoints.size(); ++q) {
      const Value& after = dstMetric.at(f[p], f[q]);
      const Value& before = srcMetric.at(p, q);
      if (before < after) {
        return {false, "expansive at points (" + std::to_string(p) + ", " + std::to_string(q) +
                           "): " + after.str() + " > " + before.str()};
      }
    }
  }
  return {};
}

CheckResult checkTGeomMorphism(const TunnelFrameSpace& src, const TunnelFrameSpace& dst,
                               const FrameHom& hom) {
  return checkNonExpansive(src.frame, src.points, src.metric, dst.frame, dst.points, dst.metric, hom);
}

}  // namespace framespace
