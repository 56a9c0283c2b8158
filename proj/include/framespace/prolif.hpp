#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "framespace/frame.hpp"
#include "framespace/metric.hpp"
#include "framespace/tunnel.hpp"
#include "framespace/value.hpp"

namespace framespace {

struct DistinctionSpec {
  std::string id;
  Value cost;
};

struct ComposeEntry {
  std::string left;
  std::string right;
  std::string result;
};

// Composite that has a cost but no carrier among the distinctions.
struct SynthesizedEntry {
  std::string left;
  std::string right;
  Value cost;
};

// Distinctions with costs and a partial composition table.
//
// `compose` maps ordered pairs to distinctions and must be associative where
// both bracketings are defined. `synthesized` holds composites created when
// a tunnel system without a monoidal table is read as a base: they carry a
// cost but no identity, so they feed scenes and distances but never witness
// a refinement. A base uses one of the two tables, not both.
class ProliferativeBase {
 public:
  static ProliferativeBase create(std::vector<DistinctionSpec> distinctions,
                                  std::vector<ComposeEntry> compose,
                                  std::vector<SynthesizedEntry> synthesized = {});

  const Carrier& distinctions() const noexcept { return distinctions_; }
  size_t size() const noexcept { return distinctions_.size(); }
  const Value& cost(size_t d) const { return cost_.at(d); }
  std::optional<size_t> compose(size_t left, size_t right) const {
    return compose_.at(left * size() + right);
  }
  const std::optional<Value>& synthesized(size_t left, size_t right) const {
    return synthesized_.at(left * size() + right);
  }
  bool hasSynthesized() const noexcept { return synthesizedCount_ > 0; }
  bool hasCompose() const noexcept { return composeCount_ > 0; }

  // C(left · right) when the composite is defined.
  std::optional<Value> compositeCost(size_t left, size_t right) const;

  friend bool operator==(const ProliferativeBase&, const ProliferativeBase&) = default;

 private:
  explicit ProliferativeBase(Carrier distinctions) : distinctions_(std::move(distinctions)) {}

  Carrier distinctions_;
  std::vector<Value> cost_;
  std::vector<std::optional<size_t>> compose_;
  std::vector<std::optional<Value>> synthesized_;
  size_t composeCount_ = 0;
  size_t synthesizedCount_ = 0;
};

OpenSet scene(const ProliferativeBase& base, size_t distinction, const Value& epsilon);
Frame sceneFrame(const ProliferativeBase& base);

struct ProlifFrameSpace {
  ProliferativeBase base;
  Frame sceneFrame;
  std::vector<Point> foci;
  MetricTable rawDistance;
  MetricTable metric;
};

ProlifFrameSpace buildProlifSpace(ProliferativeBase base);

// Raw focus distance: both composition orders, diagonal pinned to zero.
MetricTable rawFocusDistance(const ProliferativeBase& base, const Frame& frame,
                             std::span<const Point> foci);

// e ⪯ d: d = e·x or d = x·e for some x, and C(e) ≤ C(d).
bool refines(const ProliferativeBase& base, size_t e, size_t d);

struct RefinementRelation {
  size_t size = 0;
  std::vector<char> pairs;      // pairs[e * size + d] ⇔ e ⪯ d
  std::vector<char> immediate;  // e ≺ d, never e == d

  bool refines(size_t e, size_t d) const { return pairs[e * size + d] != 0; }
  bool isImmediate(size_t e, size_t d) const { return immediate[e * size + d] != 0; }
};

RefinementRelation refinementRelation(const ProliferativeBase& base);
std::vector<size_t> immediateRefinements(const ProliferativeBase& base, size_t d);

CheckResult checkPLogMorphism(const ProlifFrameSpace& src, const ProlifFrameSpace& dst,
                              const FrameHom& hom);

}  // namespace framespace
