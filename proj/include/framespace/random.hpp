#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "framespace/models.hpp"
#include "framespace/prolif.hpp"
#include "framespace/tunnel.hpp"

namespace framespace {

using Rng = std::mt19937_64;

// Up to maxTunnels tunnels with random rational intensities and a random
// partial interference table. With withComposition the system also carries
// an associative monoidal table (see randomUnionSystem).
TunnelSystem randomTunnelSystem(Rng& rng, size_t maxTunnels, bool withComposition);

// Tunnels labelled by distinct nonempty subsets of a ground set of size
// `ground`, composing by union whenever the union is itself a label. Each
// ground element has a random positive weight and Λ(S) is the weight of S,
// so composites never cost less than their factors.
TunnelSystem randomUnionSystem(Rng& rng, size_t count, size_t ground);

// The same construction as a base, with weights chosen so distinct labels
// have distinct costs: every refinement has a strictly positive gap and the
// costs strictly order the basis.
ProliferativeBase randomGradedBase(Rng& rng, size_t count, size_t ground);

// Connected graph on 1..maxVertices vertices with pairwise distinct positive
// rational weights.
WeightedGraph randomConnectedGraph(Rng& rng, size_t maxVertices);

enum class MorphismShape { Identity, Collapse, Embedding };

struct GeneratedMorphism {
  MorphismShape shape;
  TunnelFrameSpace source;
  TunnelFrameSpace target;
  FrameHom hom;  // target.frame → source.frame
};

GeneratedMorphism randomMorphism(Rng& rng, MorphismShape shape);
const char* shapeName(MorphismShape shape);

}  // namespace framespace
