#include "framespace/random.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "framespace/error.hpp"

namespace framespace {

namespace {

size_t uniform(Rng& rng, size_t lo, size_t hi) {
  return std::uniform_int_distribution<size_t>(lo, hi)(rng);
}

bool chance(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

mpq_class randomRational(Rng& rng, size_t minNum, size_t maxNum) {
  mpq_class q(static_cast<unsigned long>(uniform(rng, minNum, maxNum)),
              static_cast<unsigned long>(uniform(rng, 1, 4)));
  q.canonicalize();
  return q;
}

std::string label(const char* prefix, size_t i) { return prefix + std::to_string(i); }

struct UnionData {
  std::vector<unsigned> sets;
  std::vector<mpq_class> cost;
  std::vector<std::tuple<size_t, size_t, size_t>> composites;
};

UnionData unionData(Rng& rng, size_t count, size_t ground, const std::vector<mpq_class>& weight) {
  const unsigned subsets = (1u << ground) - 1;
  if (count > subsets) fail(ErrorCode::InvalidInput, "ground set too small for the requested size");
  std::vector<unsigned> all(subsets);
  std::iota(all.begin(), all.end(), 1u);
  std::shuffle(all.begin(), all.end(), rng);
  UnionData data;
  data.sets.assign(all.begin(), all.begin() + static_cast<long>(count));
  for (unsigned s : data.sets) {
    mpq_class c = 0;
    for (size_t i = 0; i < ground; ++i) {
      if (s & (1u << i)) c += weight[i];
    }
    data.cost.push_back(c);
  }
  for (size_t a = 0; a < count; ++a) {
    for (size_t b = 0; b < count; ++b) {
      const unsigned u = data.sets[a] | data.sets[b];
      auto it = std::find(data.sets.begin(), data.sets.end(), u);
      if (it != data.sets.end() && chance(rng, 0.8)) {
        data.composites.emplace_back(a, b, static_cast<size_t>(it - data.sets.begin()));
      }
    }
  }
  return data;
}

}  // namespace

TunnelSystem randomUnionSystem(Rng& rng, size_t count, size_t ground) {
  std::vector<mpq_class> weight;
  for (size_t i = 0; i < ground; ++i) weight.push_back(randomRational(rng, 1, 12));
  const auto data = unionData(rng, count, ground, weight);
  std::vector<TunnelSpec> tunnels;
  for (size_t t = 0; t < count; ++t) tunnels.push_back({label("T", t), Value::rational(data.cost[t])});
  std::vector<std::optional<mpq_class>> best(count * count);
  std::vector<CompositeEntry> composition;
  for (auto [a, b, c] : data.composites) {
    composition.push_back({label("T", a), label("T", b), label("T", c)});
    auto& slot = best[std::min(a, b) * count + std::max(a, b)];
    if (!slot || data.cost[c] < *slot) slot = data.cost[c];
  }
  std::vector<InterferenceEntry> interference;
  for (size_t a = 0; a < count; ++a) {
    for (size_t b = a + 1; b < count; ++b) {
      if (const auto& v = best[a * count + b]) {
        interference.push_back({label("T", a), label("T", b), Value::rational(*v)});
      }
    }
  }
  return TunnelSystem::create(std::move(tunnels), std::move(interference), std::move(composition));
}

TunnelSystem randomTunnelSystem(Rng& rng, size_t maxTunnels, bool withComposition) {
  const size_t n = uniform(rng, 1, maxTunnels);
  if (withComposition) return randomUnionSystem(rng, n, n <= 3 ? 2 + (n == 3) : 3);
  std::vector<TunnelSpec> tunnels;
  for (size_t t = 0; t < n; ++t) tunnels.push_back({label("T", t), Value::rational(randomRational(rng, 0, 12))});
  std::vector<InterferenceEntry> interference;
  for (size_t a = 0; a < n; ++a) {
    for (size_t b = a + 1; b < n; ++b) {
      if (chance(rng, 0.6)) {
        interference.push_back({label("T", a), label("T", b), Value::rational(randomRational(rng, 0, 12))});
      }
    }
  }
  return TunnelSystem::create(std::move(tunnels), std::move(interference));
}

ProliferativeBase randomGradedBase(Rng& rng, size_t count, size_t ground) {
  // Binary integer parts keep every subset sum distinct; the small random
  // fractional parts keep the instances from being all alike.
  std::vector<mpq_class> weight;
  for (size_t i = 0; i < ground; ++i) {
    weight.push_back(mpq_class(1u << i) + mpq_class(static_cast<unsigned long>(uniform(rng, 0, 99)), 1000u));
    weight.back().canonicalize();
  }
  const auto data = unionData(rng, count, ground, weight);
  std::vector<DistinctionSpec> distinctions;
  for (size_t d = 0; d < count; ++d) distinctions.push_back({label("d", d), Value::rational(data.cost[d])});
  std::vector<ComposeEntry> compose;
  for (auto [a, b, c] : data.composites) compose.push_back({label("d", a), label("d", b), label("d", c)});
  return ProliferativeBase::create(std::move(distinctions), std::move(compose));
}

WeightedGraph randomConnectedGraph(Rng& rng, size_t maxVertices) {
  const size_t n = uniform(rng, 1, maxVertices);
  std::vector<std::string> vertices;
  for (size_t v = 0; v < n; ++v) vertices.push_back(label("v", v));
  std::set<mpq_class> used;
  auto freshWeight = [&]() {
    for (;;) {
      mpq_class w = randomRational(rng, 1, 40);
      if (used.insert(w).second) return w;
    }
  };
  std::vector<WeightedEdge> edges;
  std::set<std::pair<size_t, size_t>> present;
  for (size_t v = 1; v < n; ++v) {
    const size_t u = uniform(rng, 0, v - 1);
    present.emplace(u, v);
    edges.push_back({vertices[u], vertices[v], freshWeight()});
  }
  for (size_t u = 0; u < n; ++u) {
    for (size_t v = u + 1; v < n; ++v) {
      if (!present.count({u, v}) && chance(rng, 0.3)) edges.push_back({vertices[u], vertices[v], freshWeight()});
    }
  }
  return WeightedGraph::create(std::move(vertices), std::move(edges));
}

namespace {

// Positive cross interference only, so every tunnel's minimal open is a
// singleton and the frame is the full powerset: any carrier map then has a
// preimage frame map, and validity is decided by distances alone.
TunnelSystem discreteSystem(Rng& rng, size_t n, const char* prefix) {
  std::vector<TunnelSpec> tunnels;
  for (size_t t = 0; t < n; ++t) tunnels.push_back({label(prefix, t), Value::rational(randomRational(rng, 0, 8))});
  std::vector<InterferenceEntry> interference;
  for (size_t a = 0; a < n; ++a) {
    for (size_t b = a + 1; b < n; ++b) {
      if (chance(rng, 0.7)) {
        interference.push_back({label(prefix, a), label(prefix, b), Value::rational(randomRational(rng, 1, 12))});
      }
    }
  }
  return TunnelSystem::create(std::move(tunnels), std::move(interference));
}

}  // namespace

GeneratedMorphism randomMorphism(Rng& rng, MorphismShape shape) {
  switch (shape) {
    case MorphismShape::Identity: {
      auto x = buildTunnelSpace(discreteSystem(rng, uniform(rng, 1, 4), "A"));
      FrameHom hom = FrameHom::identity(x.frame);
      return {shape, x, x, std::move(hom)};
    }
    case MorphismShape::Collapse: {
      auto x = buildTunnelSpace(discreteSystem(rng, uniform(rng, 1, 4), "A"));
      auto y = buildTunnelSpace(discreteSystem(rng, 1, "B"));
      std::vector<std::optional<size_t>> map(x.system.size(), size_t{0});
      FrameHom hom = FrameHom::preimage(y.frame, x.frame, map);
      return {shape, std::move(x), std::move(y), std::move(hom)};
    }
    case MorphismShape::Embedding: {
      const size_t k = uniform(rng, 1, 3);
      auto x = buildTunnelSpace(discreteSystem(rng, k, "A"));
      auto y = buildTunnelSpace(discreteSystem(rng, uniform(rng, k, 4), "B"));
      std::vector<size_t> slots(y.system.size());
      std::iota(slots.begin(), slots.end(), size_t{0});
      std::shuffle(slots.begin(), slots.end(), rng);
      std::vector<std::optional<size_t>> map(slots.begin(), slots.begin() + static_cast<long>(k));
      FrameHom hom = FrameHom::preimage(y.frame, x.frame, map);
      return {shape, std::move(x), std::move(y), std::move(hom)};
    }
  }
  fail(ErrorCode::InternalInconsistency, "unknown morphism shape");
}

const char* shapeName(MorphismShape shape) {
  switch (shape) {
    case MorphismShape::Identity: return "identity";
    case MorphismShape::Collapse: return "collapse";
    case MorphismShape::Embedding: return "embedding";
  }
  return "unknown";
}

}  // namespace framespace
