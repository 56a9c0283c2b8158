#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <complex>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "framespace/equivalence.hpp"
#include "framespace/models.hpp"
#include "framespace/prolif.hpp"
#include "framespace/spectral.hpp"
#include "framespace/tunnel.hpp"

namespace framespace {

inline void PrintTo(const Value& value, std::ostream* os) { *os << value.str(); }

}  // namespace framespace

namespace fstest {

using namespace framespace;

inline Value v(const char* text) { return Value::parse(text); }

inline mpq_class q(long num, unsigned long den) {
  mpq_class out(num, den);
  out.canonicalize();
  return out;
}

inline TunnelSystem makeSystem(std::vector<std::pair<std::string, std::string>> tunnels,
                           std::vector<std::tuple<std::string, std::string, std::string>> interference = {}) {
  std::vector<TunnelSpec> specs;
  for (auto& [id, value] : tunnels) specs.push_back({id, Value::parse(value)});
  std::vector<InterferenceEntry> entries;
  for (auto& [a, b, value] : interference) entries.push_back({a, b, Value::parse(value)});
  return TunnelSystem::create(std::move(specs), std::move(entries));
}

inline ProliferativeBase makeBase(std::vector<std::pair<std::string, std::string>> distinctions,
                              std::vector<std::tuple<std::string, std::string, std::string>> compose = {}) {
  std::vector<DistinctionSpec> specs;
  for (auto& [id, value] : distinctions) specs.push_back({id, Value::parse(value)});
  std::vector<ComposeEntry> entries;
  for (auto& [a, b, c] : compose) entries.push_back({a, b, c});
  return ProliferativeBase::create(std::move(specs), std::move(entries));
}

inline OpenSet set(size_t width, std::initializer_list<size_t> members) { return OpenSet::of(width, members); }

using SetFamily = std::set<std::vector<size_t>>;

inline std::vector<size_t> membersOf(const OpenSet& s) { return s.members(); }

inline SetFamily family(const std::vector<OpenSet>& opens) {
  SetFamily out;
  for (const auto& o : opens) out.insert(o.members());
  return out;
}

// Pairwise union/intersection closure iterated until nothing new appears.
inline SetFamily fixpointClosure(size_t width, const std::vector<OpenSet>& generators) {
  std::vector<std::vector<char>> sets;
  auto add = [&](std::vector<char> s) {
    if (std::find(sets.begin(), sets.end(), s) == sets.end()) sets.push_back(std::move(s));
  };
  std::vector<char> top(width, 0);
  add(std::vector<char>(width, 0));
  for (const auto& g : generators) {
    std::vector<char> s(width, 0);
    for (size_t x : g.members()) s[x] = top[x] = 1;
    add(s);
  }
  add(top);
  for (bool grew = true; grew;) {
    grew = false;
    const size_t before = sets.size();
    for (size_t i = 0; i < before; ++i) {
      for (size_t j = 0; j < before; ++j) {
        std::vector<char> u(width), n(width);
        for (size_t x = 0; x < width; ++x) {
          u[x] = sets[i][x] | sets[j][x];
          n[x] = sets[i][x] & sets[j][x];
        }
        add(u);
        add(n);
      }
    }
    grew = sets.size() != before;
  }
  SetFamily out;
  for (const auto& s : sets) {
    std::vector<size_t> m;
    for (size_t x = 0; x < width; ++x) {
      if (s[x]) m.push_back(x);
    }
    out.insert(m);
  }
  return out;
}

inline bool subset(const std::vector<size_t>& a, const std::vector<size_t>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Nonempty opens that are not the union of the opens strictly below them.
inline SetFamily literalJoinIrreducibles(const SetFamily& opens) {
  SetFamily out;
  for (const auto& a : opens) {
    if (a.empty()) continue;
    std::set<size_t> below;
    for (const auto& b : opens) {
      if (b != a && subset(b, a)) below.insert(b.begin(), b.end());
    }
    if (below.size() != a.size()) out.insert(a);
  }
  return out;
}

// All-pairs shortest paths over finite rationals; nullopt is unreachable.
using Dist = std::vector<std::vector<std::optional<mpq_class>>>;

inline Dist floydWarshall(Dist d) {
  const size_t n = d.size();
  for (size_t k = 0; k < n; ++k) {
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < n; ++j) {
        if (d[i][k] && d[k][j] && (!d[i][j] || *d[i][k] + *d[k][j] < *d[i][j])) {
          d[i][j] = *d[i][k] + *d[k][j];
        }
      }
    }
  }
  return d;
}

inline Dist distOf(const MetricTable& t) {
  Dist d(t.size(), std::vector<std::optional<mpq_class>>(t.size()));
  for (size_t i = 0; i < t.size(); ++i) {
    for (size_t j = 0; j < t.size(); ++j) d[i][j] = t.at(i, j).asRational();
  }
  return d;
}

// m^k by k − 1 plain multiplications.
inline std::vector<mpq_class> matrixPower(const OperatorMatrix& m, size_t k) {
  const size_t n = m.dim();
  std::vector<mpq_class> base(n * n), acc(n * n);
  for (size_t r = 0; r < n; ++r) {
    for (size_t c = 0; c < n; ++c) base[r * n + c] = acc[r * n + c] = m.at(r, c);
  }
  for (size_t step = 1; step < k; ++step) {
    std::vector<mpq_class> next(n * n);
    for (size_t r = 0; r < n; ++r) {
      for (size_t c = 0; c < n; ++c) {
        for (size_t t = 0; t < n; ++t) next[r * n + c] += acc[r * n + t] * base[t * n + c];
      }
    }
    acc = std::move(next);
  }
  return acc;
}

inline bool allZero(const std::vector<mpq_class>& m) {
  return std::all_of(m.begin(), m.end(), [](const mpq_class& q) { return sgn(q) == 0; });
}

// Refinement pairs minus those factoring through a third distinction.
inline std::set<std::pair<size_t, size_t>> transitiveReductionOracle(const ProliferativeBase& b) {
  const size_t n = b.size();
  auto rel = [&](size_t e, size_t d) {
    if (b.cost(d) < b.cost(e)) return false;
    for (size_t x = 0; x < n; ++x) {
      if (b.compose(e, x) == d || b.compose(x, e) == d) return true;
    }
    return false;
  };
  std::set<std::pair<size_t, size_t>> out;
  for (size_t e = 0; e < n; ++e) {
    for (size_t d = 0; d < n; ++d) {
      if (e == d || !rel(e, d)) continue;
      bool through = false;
      for (size_t f = 0; f < n; ++f) through |= f != e && f != d && rel(e, f) && rel(f, d);
      if (!through) out.emplace(e, d);
    }
  }
  return out;
}

}  // namespace fstest
