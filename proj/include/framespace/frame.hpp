#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace framespace {

// Ordered set of opaque identifiers; order is significant and preserved.
class Carrier {
 public:
  explicit Carrier(std::vector<std::string> ids);

  size_t size() const noexcept { return ids_.size(); }
  const std::string& id(size_t index) const { return ids_.at(index); }
  const std::vector<std::string>& ids() const noexcept { return ids_; }
  std::optional<size_t> find(const std::string& id) const;
  size_t indexOf(const std::string& id) const;  // throws InvalidInput

  friend bool operator==(const Carrier& a, const Carrier& b) { return a.ids_ == b.ids_; }

 private:
  std::vector<std::string> ids_;
  std::unordered_map<std::string, size_t> index_;
};

// A subset of a carrier, stored as a membership bitset.
class OpenSet {
 public:
  OpenSet() = default;
  explicit OpenSet(size_t width) : bits_(width) {}
  static OpenSet of(size_t width, std::initializer_list<size_t> members);
  static OpenSet full(size_t width);

  size_t width() const noexcept { return bits_.size(); }
  size_t count() const noexcept { return bits_.count(); }
  bool empty() const noexcept { return bits_.none(); }
  bool test(size_t i) const { return bits_.test(i); }
  void set(size_t i) { bits_.set(i); }
  bool isSubsetOf(const OpenSet& other) const { return bits_.is_subset_of(other.bits_); }
  bool intersects(const OpenSet& other) const { return bits_.intersects(other.bits_); }
  std::vector<size_t> members() const;

  OpenSet& operator|=(const OpenSet& o) { bits_ |= o.bits_; return *this; }
  OpenSet& operator&=(const OpenSet& o) { bits_ &= o.bits_; return *this; }
  friend OpenSet operator|(OpenSet a, const OpenSet& b) { return a |= b; }
  friend OpenSet operator&(OpenSet a, const OpenSet& b) { return a &= b; }
  friend bool operator==(const OpenSet& a, const OpenSet& b) { return a.bits_ == b.bits_; }

  std::string str(const Carrier& carrier) const;  // "{a,b}"

 private:
  boost::dynamic_bitset<unsigned long long> bits_;
};

// Canonical order: by cardinality, then lexicographic on member indices.
bool canonicalLess(const OpenSet& a, const OpenSet& b);

struct CanonicalLess {
  bool operator()(const OpenSet& a, const OpenSet& b) const { return canonicalLess(a, b); }
};

// Finite frame of subsets of a carrier, closed under union and intersection.
//
// A finite set-lattice of this kind is an Alexandrov topology on its top
// element, so it is fully determined by the minimal open around each member
// of top. Those minimal opens are exactly the join-irreducible opens. The
// frame is stored through them; the full family of opens is only
// materialised on request, because a frame generated from n tunnels can hold
// up to 2^n opens.
class Frame {
 public:
  static constexpr size_t kDefaultOpenLimit = 4096;

  // Smallest frame containing the generators, the empty set and their union.
  static Frame closure(Carrier carrier, std::span<const OpenSet> generators);
  // Frame given extensionally; validated for closure under union/intersection.
  static Frame fromOpens(Carrier carrier, std::span<const OpenSet> opens);

  const Carrier& carrier() const noexcept { return carrier_; }
  const OpenSet& top() const noexcept { return top_; }
  OpenSet bottom() const { return OpenSet(carrier_.size()); }

  // Distinct join-irreducible opens in canonical order.
  const std::vector<OpenSet>& joinIrreducibles() const noexcept { return irreducibles_; }
  // Index into joinIrreducibles() of the minimal open containing `element`;
  // nullopt when the element lies outside top.
  std::optional<size_t> homeOf(size_t element) const { return home_.at(element); }
  const OpenSet* minimalOpen(size_t element) const;

  bool isOpen(const OpenSet& set) const;

  // All opens in canonical order. Throws OracleBoundExceeded past `limit`.
  std::vector<OpenSet> opens(size_t limit = kDefaultOpenLimit) const;
  // Number of opens, saturating at limit + 1.
  size_t countOpens(size_t limit) const;

  friend bool operator==(const Frame& a, const Frame& b);

 private:
  Frame(Carrier carrier, OpenSet top, std::vector<std::optional<OpenSet>> minimal);

  Carrier carrier_;
  OpenSet top_;
  std::vector<OpenSet> irreducibles_;
  std::vector<std::optional<size_t>> home_;
};

// A completely prime filter, represented by its join-irreducible generator:
// the filter is {a : generator ⊆ a}.
struct Point {
  OpenSet generator;

  bool contains(const OpenSet& open) const { return generator.isSubsetOf(open); }
  friend bool operator==(const Point&, const Point&) = default;
};

std::vector<Point> points(const Frame& frame);

// Independent oracle: searches subsets of the opens for upward-closed,
// intersection-closed, bottom-free, completely prime families.
struct BruteForceLimits {
  size_t maxOpens = 32;
  size_t nodeBudget = size_t{1} << 20;
};
std::vector<Point> pointsBruteForce(const Frame& frame, BruteForceLimits limits = {});

// Filter of a point materialised against an explicit open list (indices).
std::vector<size_t> filterIndices(const Point& point, std::span<const OpenSet> opens);

OpenSet heytingNegation(const Frame& frame, const OpenSet& open);
std::vector<OpenSet> regularElements(const Frame& frame);

// Map between the opens of two frames, stored as an explicit table over the
// source opens.
class FrameHom {
 public:
  FrameHom(Frame source, Frame target, std::map<OpenSet, OpenSet, CanonicalLess> table);

  static FrameHom identity(const Frame& frame);
  // V ↦ {x ∈ top(target) : f(x) ∈ V}, the frame map of a carrier function
  // f from target's carrier into source's carrier. Elements with no image
  // (nullopt) are excluded from every preimage.
  static FrameHom preimage(const Frame& source, const Frame& target,
                           std::span<const std::optional<size_t>> carrierMap);

  const Frame& source() const noexcept { return source_; }
  const Frame& target() const noexcept { return target_; }
  const std::map<OpenSet, OpenSet, CanonicalLess>& table() const noexcept { return table_; }
  const OpenSet& operator()(const OpenSet& open) const;

  friend bool operator==(const FrameHom& a, const FrameHom& b);

 private:
  Frame source_;
  Frame target_;
  std::map<OpenSet, OpenSet, CanonicalLess> table_;
};

struct CheckResult {
  bool ok = true;
  std::string report;
};

CheckResult checkFrameHom(const FrameHom& hom);

// Point map running opposite to the hom: hom goes source → target on opens,
// the returned vector maps each target point to a source point index.
std::vector<size_t> inducedPointMap(const FrameHom& hom,
                                    std::span<const Point> targetPoints,
                                    std::span<const Point> sourcePoints);

}  // namespace framespace
