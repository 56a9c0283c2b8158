#include "framespace/frame.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "framespace/error.hpp"

namespace framespace {

Carrier::Carrier(std::vector<std::string> ids) : ids_(std::move(ids)) {
  if (ids_.empty()) fail(ErrorCode::InvalidInput, "empty carrier");
  for (size_t i = 0; i < ids_.size(); ++i) {
    if (!index_.emplace(ids_[i], i).second) {
      fail(ErrorCode::InvalidInput, "duplicate identifier '" + ids_[i] + "'");
    }
  }
}

std::optional<size_t> Carrier::find(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

size_t Carrier::indexOf(const std::string& id) const {
  auto found = find(id);
  if (!found) fail(ErrorCode::InvalidInput, "unknown identifier '" + id + "'");
  return *found;
}

OpenSet OpenSet::of(size_t width, std::initializer_list<size_t> members) {
  OpenSet s(width);
  for (size_t m : members) s.set(m);
  return s;
}

OpenSet OpenSet::full(size_t width) {
  OpenSet s(width);
  s.bits_.set();
  return s;
}

std::vector<size_t> OpenSet::members() const {
  std::vector<size_t> out;
  out.reserve(count());
  for (auto i = bits_.find_first(); i != decltype(bits_)::npos; i = bits_.find_next(i)) {
    out.push_back(i);
  }
  return out;
}

std::string OpenSet::str(const Carrier& carrier) const {
  std::string out = "{";
  bool first = true;
  for (size_t m : members()) {
    if (!first) out += ",";
    out += carrier.id(m);
    first = false;
  }
  return out + "}";
}

bool canonicalLess(const OpenSet& a, const OpenSet& b) {
  const size_t ca = a.count();
  const size_t cb = b.count();
  if (ca != cb) return ca < cb;
  const auto ma = a.members();
  const auto mb = b.members();
  return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
}

static void requireWidth(const Carrier& carrier, const OpenSet& set) {
  if (set.width() != carrier.size()) {
    fail(ErrorCode::InvalidInput, "subset width does not match carrier size");
  }
}

Frame::Frame(Carrier carrier, OpenSet top, std::vector<std::optional<OpenSet>> minimal)
    : carrier_(std::move(carrier)), top_(std::move(top)), home_(carrier_.size()) {
  std::set<OpenSet, CanonicalLess> distinct;
  for (const auto& m : minimal) {
    if (m) distinct.insert(*m);
  }
  irreducibles_.assign(distinct.begin(), distinct.end());
  for (size_t x = 0; x < minimal.size(); ++x) {
    if (!minimal[x]) continue;
    auto it = std::lower_bound(irreducibles_.begin(), irreducibles_.end(), *minimal[x], canonicalLess);
    home_[x] = static_cast<size_t>(it - irreducibles_.begin());
  }
}

Frame Frame::closure(Carrier carrier, std::span<const OpenSet> generators) {
  const size_t n = carrier.size();
  OpenSet top(n);
  for (const auto& g : generators) {
    requireWidth(carrier, g);
    top |= g;
  }
  std::vector<std::optional<OpenSet>> minimal(n);
  for (size_t x = 0; x < n; ++x) {
    if (!top.test(x)) continue;
    OpenSet m = top;
    for (const auto& g : generators) {
      if (g.test(x)) m &= g;
    }
    minimal[x] = std::move(m);
  }
  return Frame(std::move(carrier), std::move(top), std::move(minimal));
}

Frame Frame::fromOpens(Carrier carrier, std::span<const OpenSet> opens) {
  const size_t n = carrier.size();
  std::set<OpenSet, CanonicalLess> family;
  OpenSet top(n);
  for (const auto& o : opens) {
    requireWidth(carrier, o);
    family.insert(o);
    top |= o;
  }
  if (!family.contains(OpenSet(n))) fail(ErrorCode::Validation, "frame lacks the empty open");
  if (!family.contains(top)) fail(ErrorCode::Validation, "frame lacks its top " + top.str(carrier));
  for (auto a = family.begin(); a != family.end(); ++a) {
    for (auto b = std::next(a); b != family.end(); ++b) {
      if (!family.contains(*a | *b)) {
        fail(ErrorCode::Validation, "not closed under union: " + a->str(carrier) + " ∪ " + b->str(carrier));
      }
      if (!family.contains(*a & *b)) {
        fail(ErrorCode::Validation,
             "not closed under intersection: " + a->str(carrier) + " ∩ " + b->str(carrier));
      }
    }
  }
  std::vector<std::optional<OpenSet>> minimal(n);
  for (size_t x = 0; x < n; ++x) {
    if (!top.test(x)) continue;
    OpenSet m = top;
    for (const auto& o : family) {
      if (o.test(x)) m &= o;
    }
    minimal[x] = std::move(m);
  }
  return Frame(std::move(carrier), std::move(top), std::move(minimal));
}

const OpenSet* Frame::minimalOpen(size_t element) const {
  const auto& h = home_.at(element);
  return h ? &irreducibles_[*h] : nullptr;
}

bool Frame::isOpen(const OpenSet& set) const {
  if (set.width() != carrier_.size() || !set.isSubsetOf(top_)) return false;
  for (size_t x : set.members()) {
    if (!minimalOpen(x)->isSubsetOf(set)) return false;
  }
  return true;
}

namespace {

// Breadth-first union closure of the join-irreducibles, stopping once the
// family outgrows `limit`.
std::set<OpenSet, CanonicalLess> enumerateOpens(const Frame& frame, size_t limit) {
  std::set<OpenSet, CanonicalLess> seen{frame.bottom()};
  std::vector<OpenSet> frontier{frame.bottom()};
  while (!frontier.empty() && seen.size() <= limit) {
    std::vector<OpenSet> next;
    for (const auto& open : frontier) {
      for (const auto& j : frame.joinIrreducibles()) {
        if (j.isSubsetOf(open)) continue;
        OpenSet u = open | j;
        if (seen.insert(u).second) {
          next.push_back(std::move(u));
          if (seen.size() > limit) return seen;
        }
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

}  // namespace

std::vector<OpenSet> Frame::opens(size_t limit) const {
  auto all = enumerateOpens(*this, limit);
  if (all.size() > limit) {
    fail(ErrorCode::OracleBoundExceeded,
         "frame has more than " + std::to_string(limit) + " opens");
  }
  return {all.begin(), all.end()};
}

size_t Frame::countOpens(size_t limit) const {
  return std::min(enumerateOpens(*this, limit).size(), limit + 1);
}

bool operator==(const Frame& a, const Frame& b) {
  return a.carrier_ == b.carrier_ && a.top_ == b.top_ && a.irreducibles_ == b.irreducibles_ &&
         a.home_ == b.home_;
}

std::vector<Point> points(const Frame& frame) {
  std::vector<Point> out;
  out.reserve(frame.joinIrreducibles().size());
  for (const auto& j : frame.joinIrreducibles()) out.push_back(Point{j});
  return out;
}

std::vector<size_t> filterIndices(const Point& point, std::span<const OpenSet> opens) {
  std::vector<size_t> out;
  for (size_t i = 0; i < opens.size(); ++i) {
    if (point.contains(opens[i])) out.push_back(i);
  }
  return out;
}

namespace {

bool isCompletelyPrimeFilter(std::span<const OpenSet> opens, const std::vector<char>& in,
                             const std::set<OpenSet, CanonicalLess>& family) {
  auto indexOf = [&](const OpenSet& s) -> std::optional<size_t> {
    if (!family.contains(s)) return std::nullopt;
    for (size_t i = 0; i < opens.size(); ++i) {
      if (opens[i] == s) return i;
    }
    return std::nullopt;
  };
  bool hasTop = false;
  for (size_t i = 0; i < opens.size(); ++i) {
    if (!in[i]) continue;
    if (opens[i].empty()) return false;
    hasTop = true;
    for (size_t j = 0; j < opens.size(); ++j) {
      if (opens[i].isSubsetOf(opens[j]) && !in[j]) return false;
      if (in[j]) {
        auto meet = indexOf(opens[i] & opens[j]);
        if (!meet || !in[*meet]) return false;
      }
    }
  }
  if (!hasTop) return false;
  for (size_t i = 0; i < opens.size(); ++i) {
    for (size_t j = i + 1; j < opens.size(); ++j) {
      auto join = indexOf(opens[i] | opens[j]);
      if (join && in[*join] && !in[i] && !in[j]) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<Point> pointsBruteForce(const Frame& frame, BruteForceLimits limits) {
  if (frame.countOpens(limits.maxOpens) > limits.maxOpens) {
    fail(ErrorCode::OracleBoundExceeded,
         "point oracle limited to " + std::to_string(limits.maxOpens) + " opens");
  }
  // Largest opens first, so every strict superset of an open is decided
  // before the open itself.
  std::vector<OpenSet> opens = frame.opens(limits.maxOpens);
  std::reverse(opens.begin(), opens.end());
  const std::set<OpenSet, CanonicalLess> family(opens.begin(), opens.end());
  const size_t n = opens.size();

  std::vector<std::vector<size_t>> meetIndex(n, std::vector<size_t>(n));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      const OpenSet m = opens[i] & opens[j];
      meetIndex[i][j] = static_cast<size_t>(std::find(opens.begin(), opens.end(), m) - opens.begin());
    }
  }

  enum : char { Undecided = 0, In = 1, Out = 2 };
  std::vector<std::vector<char>> found;
  size_t nodes = 0;

  std::function<void(size_t, std::vector<char>, std::vector<char>)> search =
      [&](size_t k, std::vector<char> state, std::vector<char> forced) {
        if (++nodes > limits.nodeBudget) {
          fail(ErrorCode::OracleBoundExceeded, "point oracle exceeded its search budget");
        }
        if (k == n) {
          std::vector<char> in(n);
          for (size_t i = 0; i < n; ++i) in[i] = state[i] == In;
          if (isCompletelyPrimeFilter(opens, in, family)) found.push_back(std::move(in));
          return;
        }
        bool supersetsIn = true;
        for (size_t i = 0; i < k; ++i) {
          if (opens[k].isSubsetOf(opens[i]) && state[i] != In) supersetsIn = false;
        }
        if (supersetsIn) {
          auto s = state;
          auto f = forced;
          s[k] = In;
          bool consistent = true;
          for (size_t i = 0; i <= k && consistent; ++i) {
            if (s[i] != In) continue;
            const size_t m = meetIndex[k][i];
            if (s[m] == Out) consistent = false;
            else if (s[m] == Undecided) f[m] = 1;
          }
          if (consistent) search(k + 1, std::move(s), std::move(f));
        }
        if (!forced[k]) {
          state[k] = Out;
          search(k + 1, std::move(state), std::move(forced));
        }
      };
  search(0, std::vector<char>(n, Undecided), std::vector<char>(n, 0));

  std::vector<Point> out;
  for (const auto& in : found) {
    OpenSet meet = frame.top();
    for (size_t i = 0; i < n; ++i) {
      if (in[i]) meet &= opens[i];
    }
    for (size_t i = 0; i < n; ++i) {
      if (static_cast<bool>(in[i]) != meet.isSubsetOf(opens[i])) {
        fail(ErrorCode::InternalInconsistency, "non-principal filter found on a finite frame");
      }
    }
    out.push_back(Point{meet});
  }
  std::sort(out.begin(), out.end(),
            [](const Point& a, const Point& b) { return canonicalLess(a.generator, b.generator); });
  return out;
}

OpenSet heytingNegation(const Frame& frame, const OpenSet& open) {
  if (!frame.isOpen(open)) fail(ErrorCode::InvalidInput, "not an open of the frame");
  OpenSet out = frame.bottom();
  for (const auto& j : frame.joinIrreducibles()) {
    if (!j.intersects(open)) out |= j;
  }
  return out;
}

std::vector<OpenSet> regularElements(const Frame& frame) {
  std::vector<OpenSet> out;
  for (const auto& a : frame.opens()) {
    if (heytingNegation(frame, heytingNegation(frame, a)) == a) out.push_back(a);
  }
  return out;
}

FrameHom::FrameHom(Frame source, Frame target, std::map<OpenSet, OpenSet, CanonicalLess> table)
    : source_(std::move(source)), target_(std::move(target)), table_(std::move(table)) {
  const auto opens = source_.opens();
  if (opens.size() != table_.size()) {
    fail(ErrorCode::InvalidInput, "frame map is not total on the source opens");
  }
  for (const auto& o : opens) {
    if (!table_.contains(o)) {
      fail(ErrorCode::InvalidInput, "frame map has no image for " + o.str(source_.carrier()));
    }
  }
}

FrameHom FrameHom::identity(const Frame& frame) {
  std::map<OpenSet, OpenSet, CanonicalLess> table;
  for (const auto& o : frame.opens()) table.emplace(o, o);
  return FrameHom(frame, frame, std::move(table));
}

FrameHom FrameHom::preimage(const Frame& source, const Frame& target,
                            std::span<const std::optional<size_t>> carrierMap) {
  if (carrierMap.size() != target.carrier().size()) {
    fail(ErrorCode::InvalidInput, "carrier map size does not match the target carrier");
  }
  std::map<OpenSet, OpenSet, CanonicalLess> table;
  for (const auto& v : source.opens()) {
    OpenSet pre(target.carrier().size());
    for (size_t x : target.top().members()) {
      const auto& fx = carrierMap[x];
      if (fx && *fx < v.width() && v.test(*fx)) pre.set(x);
    }
    table.emplace(v, std::move(pre));
  }
  return FrameHom(source, target, std::move(table));
}

const OpenSet& FrameHom::operator()(const OpenSet& open) const {
  auto it = table_.find(open);
  if (it == table_.end()) fail(ErrorCode::InvalidInput, "argument is not a source open");
  return it->second;
}

bool operator==(const FrameHom& a, const FrameHom& b) {
  return a.source_ == b.source_ && a.target_ == b.target_ && a.table_ == b.table_;
}

CheckResult checkFrameHom(const FrameHom& hom) {
  const auto& src = hom.source();
  const auto& dst = hom.target();
  for (const auto& [from, to] : hom.table()) {
    if (!dst.isOpen(to)) {
      return {false, "image " + to.str(dst.carrier()) + " of " + from.str(src.carrier()) +
                         " is not a target open"};
    }
  }
  if (!hom(src.bottom()).empty()) {
    return {false, "bottom not preserved: ∅ ↦ " + hom(src.bottom()).str(dst.carrier())};
  }
  if (!(hom(src.top()) == dst.top())) {
    return {false, "top not preserved: " + src.top().str(src.carrier()) + " ↦ " +
                       hom(src.top()).str(dst.carrier())};
  }
  for (auto a = hom.table().begin(); a != hom.table().end(); ++a) {
    for (auto b = std::next(a); b != hom.table().end(); ++b) {
      const std::string pair = "(" + a->first.str(src.carrier()) + ", " + b->first.str(src.carrier()) + ")";
      if (!(hom(a->first | b->first) == (a->second | b->second))) {
        return {false, "union not preserved at " + pair};
      }
      if (!(hom(a->first & b->first) == (a->second & b->second))) {
        return {false, "intersection not preserved at " + pair};
      }
    }
  }
  return {};
}

std::vector<size_t> inducedPointMap(const FrameHom& hom, std::span<const Point> targetPoints,
                                    std::span<const Point> sourcePoints) {
  const auto& src = hom.source();
  std::vector<size_t> out;
  out.reserve(targetPoints.size());
  for (const auto& p : targetPoints) {
    std::vector<const OpenSet*> filter;
    OpenSet meet = src.top();
    for (const auto& [v, image] : hom.table()) {
      if (p.contains(image)) {
        filter.push_back(&v);
        meet &= v;
      }
    }
    auto inconsistent = [&](const std::string& why) {
      fail(ErrorCode::InternalInconsistency,
           "induced filter of point " + p.generator.str(hom.target().carrier()) + " " + why);
    };
    if (filter.empty()) inconsistent("is empty");
    for (const auto* v : filter) {
      if (v->empty()) inconsistent("contains bottom");
    }
    for (const auto& [v, image] : hom.table()) {
      const bool member = p.contains(image);
      if (member != meet.isSubsetOf(v)) inconsistent("is not principal");
    }
    for (auto a = hom.table().begin(); a != hom.table().end(); ++a) {
      for (auto b = std::next(a); b != hom.table().end(); ++b) {
        if (meet.isSubsetOf(a->first | b->first) && !meet.isSubsetOf(a->first) &&
            !meet.isSubsetOf(b->first)) {
          inconsistent("is not completely prime");
        }
      }
    }
    auto it = std::find_if(sourcePoints.begin(), sourcePoints.end(),
                           [&](const Point& q) { return q.generator == meet; });
    if (it == sourcePoints.end()) inconsistent("has a generator that is not a point");
    out.push_back(static_cast<size_t>(it - sourcePoints.begin()));
  }
  return out;
}

}  // namespace framespace
