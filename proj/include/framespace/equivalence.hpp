#pragma once

#include <string>
#include <vector>

#include "framespace/prolif.hpp"
#include "framespace/tunnel.hpp"

namespace framespace {

// Bijection between tunnel indices and distinction indices.
struct Correspondence {
  std::vector<size_t> toDistinction;
  std::vector<size_t> toTunnel;

  friend bool operator==(const Correspondence&, const Correspondence&) = default;
};

struct FunctorFResult {
  ProlifFrameSpace space;
  Correspondence correspondence;
};

struct FunctorGResult {
  TunnelFrameSpace space;
  Correspondence correspondence;
};

// Tunnels become distinctions with cost = intensity. Frame, points and both
// metric tables are carried across unchanged. A monoidal table, when the
// system has one, becomes the composition table; otherwise every defined
// interference pair (both orders, self pairs included) becomes a
// synthesized composite whose cost is the interference value.
FunctorFResult functorF(const TunnelFrameSpace& space);

// Distinctions become tunnels with intensity = cost. Interference of two
// distinct distinctions is the cheaper of the two composite orders; a base
// with explicit composites hands its table over as the monoidal table.
FunctorGResult functorG(const ProlifFrameSpace& space);

// Field-by-field differences, empty when the two are structurally equal.
std::vector<std::string> structuralDiff(const TunnelFrameSpace& a, const TunnelFrameSpace& b);
std::vector<std::string> structuralDiff(const ProlifFrameSpace& a, const ProlifFrameSpace& b);

struct RoundTripResult {
  bool ok = true;
  std::vector<std::string> diff;
};

// G(F(space)) against space.
RoundTripResult checkRoundTrip(const TunnelFrameSpace& space);
// F(G(space)) against space.
RoundTripResult checkRoundTrip(const ProlifFrameSpace& space);

// Whether the frame regenerated from the transported structure equals the
// frame carried across.
bool regeneratedFrameMatches(const FunctorFResult& image);
bool regeneratedFrameMatches(const FunctorGResult& image);

enum class Direction { TGeomToPLog, PLogToTGeom };

// Both functors act as the identity on frame homomorphisms.
FrameHom transportMorphism(const FrameHom& hom, Direction direction);

}  // namespace framespace
