#include "framespace/equivalence.hpp"

#include "framespace/error.hpp"

namespace framespace {

namespace {

Correspondence matchCarriers(const Carrier& tunnels, const Carrier& distinctions) {
  if (tunnels.size() != distinctions.size()) {
    fail(ErrorCode::InternalInconsistency, "correspondence between carriers of different size");
  }
  Correspondence corr{std::vector<size_t>(tunnels.size()), std::vector<size_t>(tunnels.size())};
  for (size_t t = 0; t < tunnels.size(); ++t) {
    const size_t d = distinctions.indexOf(tunnels.id(t));
    corr.toDistinction[t] = d;
    corr.toTunnel[d] = t;
  }
  return corr;
}

}  // namespace

FunctorFResult functorF(const TunnelFrameSpace& space) {
  const TunnelSystem& sys = space.system;
  const size_t n = sys.size();
  std::vector<DistinctionSpec> distinctions;
  for (size_t t = 0; t < n; ++t) distinctions.push_back({sys.tunnels().id(t), sys.intensity(t)});
  std::vector<ComposeEntry> compose;
  std::vector<SynthesizedEntry> synthesized;
  for (size_t a = 0; a < n; ++a) {
    for (size_t b = 0; b < n; ++b) {
      if (sys.hasComposition()) {
        if (auto r = sys.composite(a, b)) {
          compose.push_back({sys.tunnels().id(a), sys.tunnels().id(b), sys.tunnels().id(*r)});
        }
      } else if (const auto& v = sys.interference(a, b)) {
        synthesized.push_back({sys.tunnels().id(a), sys.tunnels().id(b), *v});
      }
    }
  }
  auto base = ProliferativeBase::create(std::move(distinctions), std::move(compose),
                                        std::move(synthesized));
  auto corr = matchCarriers(sys.tunnels(), base.distinctions());
  return {ProlifFrameSpace{std::move(base), space.frame, space.points, space.rawDistance, space.metric},
          std::move(corr)};
}

FunctorGResult functorG(const ProlifFrameSpace& space) {
  const ProliferativeBase& base = space.base;
  const size_t n = base.size();
  std::vector<TunnelSpec> tunnels;
  for (size_t d = 0; d < n; ++d) tunnels.push_back({base.distinctions().id(d), base.cost(d)});
  std::vector<InterferenceEntry> interference;
  for (size_t a = 0; a < n; ++a) {
    for (size_t b = a + 1; b < n; ++b) {
      std::optional<Value> best;
      for (auto c : {base.compositeCost(a, b), base.compositeCost(b, a)}) {
        if (c && (!best || *c < *best)) best = c;
      }
      if (best) interference.push_back({base.distinctions().id(a), base.distinctions().id(b), *best});
    }
  }
  std::optional<std::vector<CompositeEntry>> composition;
  if (!base.hasSynthesized()) {
    auto& table = composition.emplace();
    for (size_t a = 0; a < n; ++a) {
      for (size_t b = 0; b < n; ++b) {
        if (auto r = base.compose(a, b)) {
          table.push_back({base.distinctions().id(a), base.distinctions().id(b),
                           base.distinctions().id(*r)});
        }
      }
    }
  }
  auto system = TunnelSystem::create(std::move(tunnels), std::move(interference), std::move(composition));
  auto corr = matchCarriers(system.tunnels(), base.distinctions());
  return {TunnelFrameSpace{std::move(system), space.sceneFrame, space.foci, space.rawDistance,
                           space.metric},
          std::move(corr)};
}

namespace {

void diffCarrier(const Carrier& a, const Carrier& b, const std::string& name,
                 std::vector<std::string>& out) {
  if (!(a == b)) out.push_back(name + ": identifiers differ");
}

void diffFrame(const Frame& a, const Frame& b, const std::string& name, std::vector<std::string>& out) {
  if (!(a.carrier() == b.carrier())) {
    out.push_back(name + ".carrier differs");
    return;
  }
  if (!(a.top() == b.top())) {
    out.push_back(name + ".top: " + a.top().str(a.carrier()) + " != " + b.top().str(b.carrier()));
  }
  for (size_t x = 0; x < a.carrier().size(); ++x) {
    const OpenSet* ma = a.minimalOpen(x);
    const OpenSet* mb = b.minimalOpen(x);
    if ((ma == nullptr) != (mb == nullptr) || (ma && !(*ma == *mb))) {
      out.push_back(name + ": minimal open of '" + a.carrier().id(x) + "' differs");
    }
  }
}

void diffPoints(const std::vector<Point>& a, const std::vector<Point>& b, const Carrier& carrier,
                const std::string& name, std::vector<std::string>& out) {
  if (a.size() != b.size()) {
    out.push_back(name + ": " + std::to_string(a.size()) + " vs " + std::to_string(b.size()) + " points");
    return;
  }
  for (size_t i = 0; i < a.size(); ++i) {
    if (!(a[i] == b[i])) {
      out.push_back(name + "[" + std::to_string(i) + "]: " + a[i].generator.str(carrier) +
                    " != " + b[i].generator.str(carrier));
    }
  }
}

void diffMetric(const MetricTable& a, const MetricTable& b, const std::string& name,
                std::vector<std::string>& out) {
  if (a.size() != b.size()) {
    out.push_back(name + ": size " + std::to_string(a.size()) + " vs " + std::to_string(b.size()));
    return;
  }
  for (size_t i = 0; i < a.size(); ++i) {
    for (size_t j = 0; j < a.size(); ++j) {
      if (!(a.at(i, j) == b.at(i, j))) {
        out.push_back(name + "[" + std::to_string(i) + "][" + std::to_string(j) + "]: " +
                      a.at(i, j).str() + " != " + b.at(i, j).str());
      }
    }
  }
}

std::string optStr(const std::optional<Value>& v) { return v ? v->str() : "undefined"; }

void diffSystem(const TunnelSystem& a, const TunnelSystem& b, std::vector<std::string>& out) {
  if (!(a.tunnels() == b.tunnels())) {
    diffCarrier(a.tunnels(), b.tunnels(), "system.tunnels", out);
    return;
  }
  const auto& ids = a.tunnels();
  for (size_t t = 0; t < a.size(); ++t) {
    if (!(a.intensity(t) == b.intensity(t))) {
      out.push_back("system.intensity[" + ids.id(t) + "]: " + a.intensity(t).str() + " != " +
                    b.intensity(t).str());
    }
  }
  for (size_t x = 0; x < a.size(); ++x) {
    for (size_t y = 0; y < a.size(); ++y) {
      if (a.interference(x, y) != b.interference(x, y)) {
        out.push_back("system.interference[" + ids.id(x) + "][" + ids.id(y) + "]: " +
                      optStr(a.interference(x, y)) + " != " + optStr(b.interference(x, y)));
      }
    }
  }
  if (a.hasComposition() != b.hasComposition()) {
    out.push_back("system.composition: present on one side only");
    return;
  }
  for (size_t x = 0; x < a.size(); ++x) {
    for (size_t y = 0; y < a.size(); ++y) {
      if (a.composite(x, y) != b.composite(x, y)) {
        out.push_back("system.composition[" + ids.id(x) + "][" + ids.id(y) + "] differs");
      }
    }
  }
}

void diffBase(const ProliferativeBase& a, const ProliferativeBase& b, std::vector<std::string>& out) {
  if (!(a.distinctions() == b.distinctions())) {
    diffCarrier(a.distinctions(), b.distinctions(), "base.distinctions", out);
    return;
  }
  const auto& ids = a.distinctions();
  for (size_t d = 0; d < a.size(); ++d) {
    if (!(a.cost(d) == b.cost(d))) {
      out.push_back("base.cost[" + ids.id(d) + "]: " + a.cost(d).str() + " != " + b.cost(d).str());
    }
  }
  for (size_t x = 0; x < a.size(); ++x) {
    for (size_t y = 0; y < a.size(); ++y) {
      if (a.compose(x, y) != b.compose(x, y)) {
        out.push_back("base.compose[" + ids.id(x) + "][" + ids.id(y) + "] differs");
      }
      if (a.synthesized(x, y) != b.synthesized(x, y)) {
        out.push_back("base.synthesized[" + ids.id(x) + "][" + ids.id(y) + "]: " +
                      optStr(a.synthesized(x, y)) + " != " + optStr(b.synthesized(x, y)));
      }
    }
  }
}

}  // namespace

std::vector<std::string> structuralDiff(const TunnelFrameSpace& a, const TunnelFrameSpace& b) {
  std::vector<std::string> out;
  diffSystem(a.system, b.system, out);
  diffFrame(a.frame, b.frame, "frame", out);
  diffPoints(a.points, b.points, a.frame.carrier(), "points", out);
  diffMetric(a.rawDistance, b.rawDistance, "raw_distance", out);
  diffMetric(a.metric, b.metric, "metric", out);
  return out;
}

std::vector<std::string> structuralDiff(const ProlifFrameSpace& a, const ProlifFrameSpace& b) {
  std::vector<std::string> out;
  diffBase(a.base, b.base, out);
  diffFrame(a.sceneFrame, b.sceneFrame, "scene_frame", out);
  diffPoints(a.foci, b.foci, a.sceneFrame.carrier(), "foci", out);
  diffMetric(a.rawDistance, b.rawDistance, "raw_distance", out);
  diffMetric(a.metric, b.metric, "metric", out);
  return out;
}

RoundTripResult checkRoundTrip(const TunnelFrameSpace& space) {
  auto back = functorG(functorF(space).space).space;
  auto diff = structuralDiff(back, space);
  return {diff.empty(), std::move(diff)};
}

RoundTripResult checkRoundTrip(const ProlifFrameSpace& space) {
  auto back = functorF(functorG(space).space).space;
  auto diff = structuralDiff(back, space);
  return {diff.empty(), std::move(diff)};
}

bool regeneratedFrameMatches(const FunctorFResult& image) {
  return sceneFrame(image.space.base) == image.space.sceneFrame;
}

bool regeneratedFrameMatches(const FunctorGResult& image) {
  return generateFrame(image.space.system) == image.space.frame;
}

FrameHom transportMorphism(const FrameHom& hom, Direction) { return hom; }

}  // namespace framespace
