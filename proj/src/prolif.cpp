#include "framespace/prolif.hpp"

#include <algorithm>
#include <set>

#include "framespace/error.hpp"
#include "framespace/tunnel.hpp"

namespace framespace {

ProliferativeBase ProliferativeBase::create(std::vector<DistinctionSpec> distinctions,
                                            std::vector<ComposeEntry> compose,
                                            std::vector<SynthesizedEntry> synthesized) {
  if (distinctions.empty()) fail(ErrorCode::Validation, "proliferative base has no distinctions");
  std::sort(distinctions.begin(), distinctions.end(),
            [](const DistinctionSpec& a, const DistinctionSpec& b) { return a.id < b.id; });
  std::vector<std::string> ids;
  for (const auto& d : distinctions) ids.push_back(d.id);
  for (size_t i = 1; i < ids.size(); ++i) {
    if (ids[i] == ids[i - 1]) fail(ErrorCode::Validation, "duplicate distinction '" + ids[i] + "'");
  }
  ProliferativeBase base{Carrier(std::move(ids))};
  const size_t n = base.size();
  for (auto& d : distinctions) base.cost_.push_back(std::move(d.cost));
  base.compose_.assign(n * n, std::nullopt);
  base.synthesized_.assign(n * n, std::nullopt);

  auto lookup = [&](const std::string& id) {
    auto idx = base.distinctions_.find(id);
    if (!idx) fail(ErrorCode::Validation, "composition names unknown distinction '" + id + "'");
    return *idx;
  };
  for (const auto& c : compose) {
    const size_t l = lookup(c.left), r = lookup(c.right), res = lookup(c.result);
    auto& slot = base.compose_[l * n + r];
    if (slot && *slot != res) {
      fail(ErrorCode::Validation, "conflicting composites for (" + c.left + ", " + c.right + ")");
    }
    if (!slot) ++base.composeCount_;
    slot = res;
  }
  for (auto& s : synthesized) {
    const size_t l = lookup(s.left), r = lookup(s.right);
    auto& slot = base.synthesized_[l * n + r];
    if (slot && !(*slot == s.cost)) {
      fail(ErrorCode::Validation, "conflicting synthesized costs for (" + s.left + ", " + s.right + ")");
    }
    if (!slot) ++base.synthesizedCount_;
    slot = std::move(s.cost);
  }
  if (base.composeCount_ > 0 && base.synthesizedCount_ > 0) {
    fail(ErrorCode::Validation, "base mixes explicit and synthesized composites");
  }

  std::optional<Value::Scale> scale;
  auto note = [&](const Value& v) {
    auto s = v.scale();
    if (!s) return;
    if (scale && *scale != *s) fail(ErrorCode::Validation, "base mixes linear and log-scale costs");
    scale = s;
  };
  for (const auto& c : base.cost_) note(c);
  for (const auto& s : base.synthesized_) {
    if (s) note(*s);
  }

  const auto& table = base.compose_;
  for (size_t a = 0; a < n; ++a) {
    for (size_t b = 0; b < n; ++b) {
      const auto ab = table[a * n + b];
      if (!ab) continue;
      for (size_t c = 0; c < n; ++c) {
        const auto bc = table[b * n + c];
        if (!bc) continue;
        const auto left = table[*ab * n + c];
        const auto right = table[a * n + *bc];
        if (left && right && *left != *right) {
          fail(ErrorCode::Validation, "composition not associative at (" + base.distinctions_.id(a) +
                                          ", " + base.distinctions_.id(b) + ", " +
                                          base.distinctions_.id(c) + ")");
        }
      }
    }
  }
  return base;
}

std::optional<Value> ProliferativeBase::compositeCost(size_t left, size_t right) const {
  if (auto r = compose(left, right)) return cost_[*r];
  return synthesized(left, right);
}

OpenSet scene(const ProliferativeBase& base, size_t distinction, const Value& epsilon) {
  if (distinction >= base.size()) fail(ErrorCode::InvalidInput, "unknown distinction index");
  if (epsilon.isZero()) fail(ErrorCode::InvalidInput, "scene radius must be positive");
  OpenSet out(base.size());
  for (size_t e = 0; e < base.size(); ++e) {
    auto c = base.compositeCost(distinction, e);
    if (c && *c < epsilon) out.set(e);
  }
  return out;
}

Frame sceneFrame(const ProliferativeBase& base) {
  std::vector<Value> defined;
  for (size_t a = 0; a < base.size(); ++a) {
    for (size_t b = 0; b < base.size(); ++b) {
      if (auto c = base.compositeCost(a, b)) defined.push_back(*c);
    }
  }
  std::set<OpenSet, CanonicalLess> generators;
  for (const auto& eps : frameThresholds(defined)) {
    for (size_t d = 0; d < base.size(); ++d) generators.insert(scene(base, d, eps));
  }
  const std::vector<OpenSet> gens(generators.begin(), generators.end());
  return Frame::closure(base.distinctions(), gens);
}

MetricTable rawFocusDistance(const ProliferativeBase& base, const Frame& frame,
                             std::span<const Point> foci) {
  const size_t n = base.size();
  std::vector<std::optional<Value>> symmetric(n * n);
  for (size_t a = 0; a < n; ++a) {
    for (size_t b = 0; b < n; ++b) {
      auto& slot = symmetric[a * n + b];
      for (auto c : {base.compositeCost(a, b), base.compositeCost(b, a)}) {
        if (c && (!slot || *c < *slot)) slot = c;
      }
    }
  }
  return rawDistanceTable(pointMembers(frame, foci), n,
                          [&](size_t a, size_t b) -> const std::optional<Value>& {
                            return symmetric[a * n + b];
                          });
}

ProlifFrameSpace buildProlifSpace(ProliferativeBase base) {
  Frame frame = sceneFrame(base);
  std::vector<Point> foci = points(frame);
  MetricTable raw = rawFocusDistance(base, frame, foci);
  MetricTable metric = metricClosure(raw);
  std::string why;
  if (!satisfiesMetricAxioms(metric, &why)) {
    fail(ErrorCode::InternalInconsistency, "closed focus metric is not a metric: " + why);
  }
  return ProlifFrameSpace{std::move(base), std::move(frame), std::move(foci), std::move(raw),
                          std::move(metric)};
}

bool refines(const ProliferativeBase& base, size_t e, size_t d) {
  if (base.cost(d) < base.cost(e)) return false;
  for (size_t x = 0; x < base.size(); ++x) {
    if (base.compose(e, x) == d || base.compose(x, e) == d) return true;
  }
  return false;
}

RefinementRelation refinementRelation(const ProliferativeBase& base) {
  const size_t n = base.size();
  RefinementRelation rel{n, std::vector<char>(n * n, 0), std::vector<char>(n * n, 0)};
  for (size_t a = 0; a < n; ++a) {
    for (size_t x = 0; x < n; ++x) {
      if (auto d = base.compose(a, x)) {
        // a is the left factor, x the right factor of d.
        for (size_t e : {a, x}) {
          if (!(base.cost(*d) < base.cost(e))) rel.pairs[e * n + *d] = 1;
        }
      }
    }
  }
  for (size_t e = 0; e < n; ++e) {
    for (size_t d = 0; d < n; ++d) {
      if (e == d || !rel.refines(e, d)) continue;
      bool direct = true;
      for (size_t f = 0; f < n && direct; ++f) {
        if (f != e && f != d && rel.refines(e, f) && rel.refines(f, d)) direct = false;
      }
      rel.immediate[e * n + d] = direct ? 1 : 0;
    }
  }
  return rel;
}

std::vector<size_t> immediateRefinements(const ProliferativeBase& base, size_t d) {
  if (d >= base.size()) fail(ErrorCode::InvalidInput, "unknown distinction index");
  const auto rel = refinementRelation(base);
  std::vector<size_t> out;
  for (size_t e = 0; e < base.size(); ++e) {
    if (rel.isImmediate(e, d)) out.push_back(e);
  }
  return out;
}

CheckResult checkPLogMorphism(const ProlifFrameSpace& src, const ProlifFrameSpace& dst,
                              const FrameHom& hom) {
  return checkNonExpansive(src.sceneFrame, src.foci, src.metric, dst.sceneFrame, dst.foci,
                           dst.metric, hom);
}

}  // namespace framespace
