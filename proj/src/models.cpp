#include "framespace/models.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <set>

#include "framespace/error.hpp"

namespace framespace {

WeightedGraph WeightedGraph::create(std::vector<std::string> vertices,
                                    std::vector<WeightedEdge> edges, bool allowZeroWeights) {
  WeightedGraph g{Carrier(std::move(vertices))};
  std::set<std::pair<size_t, size_t>> seen;
  for (auto& e : edges) {
    const auto a = g.vertices_.find(e.u);
    const auto b = g.vertices_.find(e.v);
    if (!a || !b) fail(ErrorCode::Validation, "edge (" + e.u + ", " + e.v + ") names an unknown vertex");
    if (*a == *b) fail(ErrorCode::Validation, "self-loop at vertex '" + e.u + "'");
    const auto key = std::minmax(*a, *b);
    if (!seen.insert(key).second) fail(ErrorCode::Validation, "repeated edge (" + e.u + ", " + e.v + ")");
    if (sgn(e.weight) < 0 || (sgn(e.weight) == 0 && !allowZeroWeights)) {
      fail(ErrorCode::Validation, "edge (" + e.u + ", " + e.v + ") has non-positive weight");
    }
    if (*a > *b) std::swap(e.u, e.v);
    g.ends_.push_back(key);
    g.edges_.push_back(std::move(e));
  }
  return g;
}

bool WeightedGraph::isConnected() const {
  const size_t n = vertices_.size();
  std::vector<size_t> parent(n);
  std::iota(parent.begin(), parent.end(), size_t{0});
  std::function<size_t(size_t)> root = [&](size_t x) {
    return parent[x] == x ? x : parent[x] = root(parent[x]);
  };
  size_t components = n;
  for (auto [a, b] : ends_) {
    const size_t ra = root(a);
    const size_t rb = root(b);
    if (ra != rb) {
      parent[ra] = rb;
      --components;
    }
  }
  return components <= 1;
}

TunnelSystem graphModelEdges(const WeightedGraph& g) {
  std::vector<TunnelSpec> tunnels;
  std::vector<std::string> ids;
  for (const auto& e : g.edges()) {
    ids.push_back(e.u + "-" + e.v);
    tunnels.push_back({ids.back(), Value::rational(e.weight)});
  }
  std::vector<InterferenceEntry> interference;
  for (size_t a = 0; a < g.edges().size(); ++a) {
    for (size_t b = a + 1; b < g.edges().size(); ++b) {
      const auto [a1, a2] = g.endpoints(a);
      const auto [b1, b2] = g.endpoints(b);
      if (a1 == b1 || a1 == b2 || a2 == b1 || a2 == b2) {
        interference.push_back(
            {ids[a], ids[b], Value::rational(g.edges()[a].weight + g.edges()[b].weight)});
      }
    }
  }
  return TunnelSystem::create(std::move(tunnels), std::move(interference));
}

TunnelSystem graphModelStars(const WeightedGraph& g) {
  const auto& vs = g.vertices();
  std::vector<mpq_class> degree(vs.size());
  std::vector<InterferenceEntry> interference;
  for (size_t e = 0; e < g.edges().size(); ++e) {
    const auto [a, b] = g.endpoints(e);
    degree[a] += g.edges()[e].weight;
    degree[b] += g.edges()[e].weight;
    interference.push_back({vs.id(a), vs.id(b), Value::rational(g.edges()[e].weight)});
  }
  std::vector<TunnelSpec> tunnels;
  for (size_t v = 0; v < vs.size(); ++v) tunnels.push_back({vs.id(v), Value::rational(degree[v])});
  return TunnelSystem::create(std::move(tunnels), std::move(interference));
}

OperatorMatrix graphLaplacianOracle(const WeightedGraph& g) {
  OperatorMatrix m(g.vertices().ids());
  for (size_t e = 0; e < g.edges().size(); ++e) {
    const auto [a, b] = g.endpoints(e);
    const mpq_class& w = g.edges()[e].weight;
    m.at(a, a) += w;
    m.at(b, b) += w;
    m.at(a, b) -= w;
    m.at(b, a) -= w;
  }
  return m;
}

MetricTable shortestPathOracle(const WeightedGraph& g) {
  const size_t n = g.vertices().size();
  std::vector<std::vector<std::pair<size_t, mpq_class>>> adj(n);
  for (size_t e = 0; e < g.edges().size(); ++e) {
    const auto [a, b] = g.endpoints(e);
    adj[a].emplace_back(b, g.edges()[e].weight);
    adj[b].emplace_back(a, g.edges()[e].weight);
  }
  MetricTable out(n);
  using Item = std::pair<mpq_class, size_t>;
  auto later = [](const Item& x, const Item& y) { return x.first > y.first; };
  for (size_t s = 0; s < n; ++s) {
    std::vector<std::optional<mpq_class>> dist(n);
    std::vector<char> done(n, 0);
    std::priority_queue<Item, std::vector<Item>, decltype(later)> queue(later);
    dist[s] = 0;
    queue.emplace(mpq_class(0), s);
    while (!queue.empty()) {
      const auto [d, u] = queue.top();
      queue.pop();
      if (done[u]) continue;
      done[u] = 1;
      for (const auto& [v, w] : adj[u]) {
        const mpq_class candidate = d + w;
        if (!dist[v] || candidate < *dist[v]) {
          dist[v] = candidate;
          queue.emplace(candidate, v);
        }
      }
    }
    for (size_t t = 0; t < n; ++t) {
      if (dist[t]) out.at(s, t) = Value::rational(*dist[t]);
    }
  }
  return out;
}

std::string intervalId(unsigned i, unsigned j, unsigned n) {
  const size_t width = std::to_string(n).size();
  auto pad = [&](unsigned k) {
    std::string s = std::to_string(k);
    return std::string(width - s.size(), '0') + s;
  };
  return "[" + pad(i) + "," + pad(j) + "]/" + std::to_string(n);
}

TunnelSystem intervalModel(unsigned n, IntervalVariant variant) {
  if (n == 0) fail(ErrorCode::InvalidInput, "interval grid resolution must be at least 1");
  struct Interval {
    unsigned lo;
    unsigned hi;
    std::string id;
  };
  std::vector<Interval> all;
  for (unsigned i = 0; i <= n; ++i) {
    for (unsigned j = i; j <= n; ++j) all.push_back({i, j, intervalId(i, j, n)});
  }
  const mpq_class scale(1, n);
  std::vector<TunnelSpec> tunnels;
  for (const auto& t : all) tunnels.push_back({t.id, Value::rational((t.hi - t.lo) * scale)});
  std::vector<InterferenceEntry> interference;
  for (size_t a = 0; a < all.size(); ++a) {
    for (size_t b = a + 1; b < all.size(); ++b) {
      const auto& s = all[a];
      const auto& t = all[b];
      if (variant == IntervalVariant::Hull) {
        const unsigned len = std::max(s.hi, t.hi) - std::min(s.lo, t.lo);
        interference.push_back({s.id, t.id, Value::rational(len * scale)});
      } else {
        const unsigned lo = std::max(s.lo, t.lo);
        const unsigned hi = std::min(s.hi, t.hi);
        if (lo <= hi) interference.push_back({s.id, t.id, Value::rational((hi - lo) * scale)});
      }
    }
  }
  return TunnelSystem::create(std::move(tunnels), std::move(interference));
}

TunnelSystem localeModel(const Frame& frame, const std::vector<mpq_class>& weights) {
  const auto& carrier = frame.carrier();
  if (weights.size() != carrier.size()) {
    fail(ErrorCode::InvalidInput, "locale weights must cover the carrier");
  }
  for (const auto& w : weights) {
    if (sgn(w) <= 0) fail(ErrorCode::InvalidInput, "locale weights must be positive");
  }
  auto mass = [&](const OpenSet& a) {
    mpq_class total = 0;
    for (size_t x : a.members()) total += weights[x];
    return total;
  };
  const mpq_class whole = mass(frame.top());
  if (sgn(whole) == 0) fail(ErrorCode::InvalidInput, "measure of top is zero");
  auto intensity = [&](const OpenSet& a) { return Value::negLog(mpq_class(mass(a) / whole)); };

  std::vector<OpenSet> regular;
  for (auto& a : regularElements(frame)) {
    if (!a.empty()) regular.push_back(std::move(a));
  }
  std::vector<TunnelSpec> tunnels;
  for (const auto& a : regular) tunnels.push_back({a.str(carrier), intensity(a)});
  std::vector<InterferenceEntry> interference;
  for (size_t i = 0; i < regular.size(); ++i) {
    for (size_t j = i + 1; j < regular.size(); ++j) {
      const OpenSet meet = regular[i] & regular[j];
      if (!meet.empty()) interference.push_back({tunnels[i].id, tunnels[j].id, intensity(meet)});
    }
  }
  return TunnelSystem::create(std::move(tunnels), std::move(interference));
}

}  // namespace framespace
