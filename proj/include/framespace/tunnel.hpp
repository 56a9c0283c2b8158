#pragma once

#include <optional>
#include <string>
#include <vector>

#include "framespace/frame.hpp"
#include "framespace/metric.hpp"
#include "framespace/value.hpp"

namespace framespace {

struct TunnelSpec {
  std::string id;
  Value intensity;
};

struct InterferenceEntry {
  std::string a;
  std::string b;
  Value value;
};

// Ordered composite: left ⊗ right = result.
struct CompositeEntry {
  std::string left;
  std::string right;
  std::string result;
};

// Tunnels with intensities and a partial symmetric interference table.
//
// Tunnels are sorted by identifier. Every tunnel interferes with itself at
// zero; an omitted self entry is filled in, an explicit nonzero one is a
// validation error. "Undefined" interference is an absent entry, distinct
// from a stored infinity.
//
// A system may also carry its monoidal composition table. When present,
// composites must be associative where both bracketings are defined, and
// the interference of two distinct tunnels must be defined exactly when a
// composite exists in some order, with value equal to the smaller composite
// intensity.
class TunnelSystem {
 public:
  static TunnelSystem create(std::vector<TunnelSpec> tunnels,
                             std::vector<InterferenceEntry> interference,
                             std::optional<std::vector<CompositeEntry>> composition = std::nullopt);

  const Carrier& tunnels() const noexcept { return tunnels_; }
  size_t size() const noexcept { return tunnels_.size(); }
  const Value& intensity(size_t t) const { return intensity_.at(t); }
  const std::optional<Value>& interference(size_t a, size_t b) const {
    return interference_.at(a * size() + b);
  }
  bool hasComposition() const noexcept { return composition_.has_value(); }
  std::optional<size_t> composite(size_t left, size_t right) const;

  friend bool operator==(const TunnelSystem&, const TunnelSystem&) = default;

 private:
  explicit TunnelSystem(Carrier tunnels) : tunnels_(std::move(tunnels)) {}

  Carrier tunnels_;
  std::vector<Value> intensity_;
  std::vector<std::optional<Value>> interference_;
  std::optional<std::vector<std::optional<size_t>>> composition_;
};

// Distinct positive finite values plus one value above the largest: for a
// finite table these realise every distinct strict-threshold neighbourhood.
std::vector<Value> frameThresholds(const std::vector<Value>& defined);

OpenSet neighbourhood(const TunnelSystem& system, size_t tunnel, const Value& epsilon);
Frame generateFrame(const TunnelSystem& system);

// Tunnels lying at each point, one list per point: T lies at p when ι(T),
// the minimal open containing T, belongs to p's filter.
std::vector<std::vector<size_t>> pointMembers(const Frame& frame, std::span<const Point> pts);

MetricTable rawDistance(const TunnelSystem& system, const Frame& frame, std::span<const Point> pts);

struct TunnelFrameSpace {
  TunnelSystem system;
  Frame frame;
  std::vector<Point> points;
  MetricTable rawDistance;
  MetricTable metric;

  // The point generated by ι(tunnel).
  std::optional<size_t> homePoint(size_t tunnel) const { return frame.homeOf(tunnel); }
};

TunnelFrameSpace buildTunnelSpace(TunnelSystem system);

// hom runs from dst.frame to src.frame; the induced point map runs src → dst.
CheckResult checkTGeomMorphism(const TunnelFrameSpace& src, const TunnelFrameSpace& dst,
                               const FrameHom& hom);

// Shared by both categories: frame-hom validity plus non-expansiveness of
// the induced point map.
CheckResult checkNonExpansive(const Frame& srcFrame, std::span<const Point> srcPoints,
                              const MetricTable& srcMetric, const Frame& dstFrame,
                              std::span<const Point> dstPoints, const MetricTable& dstMetric,
                              const FrameHom& hom);

}  // namespace framespace
