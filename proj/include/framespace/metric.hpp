#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "framespace/value.hpp"

namespace framespace {

// Square table of extended nonnegative values over a list of points.
class MetricTable {
 public:
  MetricTable() = default;
  // All off-diagonal entries start at infinity, the diagonal at zero.
  explicit MetricTable(size_t size);

  size_t size() const noexcept { return size_; }
  const Value& at(size_t i, size_t j) const { return entries_.at(i * size_ + j); }
  Value& at(size_t i, size_t j) { return entries_.at(i * size_ + j); }

  friend bool operator==(const MetricTable&, const MetricTable&) = default;

 private:
  size_t size_ = 0;
  std::vector<Value> entries_;
};

// All-pairs (min, +) closure. Requires a symmetric table with zero diagonal.
MetricTable metricClosure(const MetricTable& raw);

// Zero diagonal, symmetry and triangle inequality, checked exactly. On
// failure `why` names the first offending entry.
bool satisfiesMetricAxioms(const MetricTable& table, std::string* why = nullptr);

// raw(p, q) = min over a ∈ members[p], b ∈ members[q] of pair(a, b), with an
// undefined pair counting as infinity. The diagonal is pinned to zero.
// `pair` must be symmetric.
using PairValue = std::function<const std::optional<Value>&(size_t, size_t)>;
MetricTable rawDistanceTable(const std::vector<std::vector<size_t>>& members,
                             size_t elementCount, const PairValue& pair);

}  // namespace framespace
