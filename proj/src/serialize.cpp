#include "framespace/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "framespace/error.hpp"

namespace framespace {

namespace {

[[noreturn]] void schema(const std::string& where, const std::string& what) {
  fail(ErrorCode::Parse, where + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) schema(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) schema(where, std::string("missing field \"") + key + "\"");
  return *it;
}

const Json* optionalField(const Json& j, const char* key) {
  auto it = j.find(key);
  return it == j.end() || it->is_null() ? nullptr : &*it;
}

const Json& array(const Json& j, const std::string& where) {
  if (!j.is_array()) schema(where, "expected an array");
  return j;
}

std::string text(const Json& j, const std::string& where) {
  if (!j.is_string()) schema(where, "expected a string");
  return j.get<std::string>();
}

std::vector<std::string> idList(const Json& j, const std::string& where) {
  std::vector<std::string> ids;
  size_t i = 0;
  for (const auto& item : array(j, where)) ids.push_back(text(item, where + "[" + std::to_string(i++) + "]"));
  return ids;
}

const Json& tuple(const Json& j, size_t arity, const std::string& where) {
  if (!j.is_array() || j.size() != arity) {
    schema(where, "expected an array of " + std::to_string(arity) + " elements");
  }
  return j;
}

Json idsJson(const OpenSet& set, const Carrier& carrier) {
  Json out = Json::array();
  for (size_t x : set.members()) out.push_back(carrier.id(x));
  return out;
}

OpenSet openFromJson(const Json& j, const Carrier& carrier, const std::string& where) {
  OpenSet set(carrier.size());
  for (const auto& id : idList(j, where)) {
    auto x = carrier.find(id);
    if (!x) fail(ErrorCode::Validation, where + ": unknown carrier element '" + id + "'");
    set.set(*x);
  }
  return set;
}

std::pair<size_t, size_t> lineColumn(std::string_view text, size_t offset) {
  size_t line = 1;
  size_t column = 1;
  for (size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

}  // namespace

Json parseJsonText(std::string_view input) {
  try {
    return Json::parse(input.begin(), input.end());
  } catch (const nlohmann::json::parse_error& e) {
    // byte is one past the offending character
    const auto [line, column] = lineColumn(input, e.byte == 0 ? 0 : e.byte - 1);
    // nlohmann's message repeats the position; keep only the description
    std::string message = e.what();
    if (auto pos = message.find(": ", message.find("parse error")); pos != std::string::npos) {
      message = message.substr(pos + 2);
    }
    fail(ErrorCode::Parse, "line " + std::to_string(line) + ", column " + std::to_string(column) +
                               ": " + message);
  }
}

Json readJsonFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::InvalidInput, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parseJsonText(buffer.str());
}

Value valueFromJson(const Json& j, const std::string& where) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Value::rational(mpq_class(j.get<unsigned long>()));
    const long v = j.get<long>();
    if (v < 0) fail(ErrorCode::Validation, where + ": negative value");
    return Value::rational(mpq_class(v));
  }
  if (!j.is_string()) schema(where, "expected a rational string such as \"3/2\"");
  try {
    return Value::parse(j.get<std::string>());
  } catch (const Error& e) {
    fail(e.code(), where + ": " + e.what());
  }
}

Json toJson(const Value& v) { return v.str(); }

Json toJson(const TunnelSystem& system) {
  const auto& ids = system.tunnels();
  Json tunnels = Json::array();
  for (size_t t = 0; t < system.size(); ++t) {
    tunnels.push_back({{"id", ids.id(t)}, {"intensity", system.intensity(t).str()}});
  }
  Json interference = Json::array();
  for (size_t a = 0; a < system.size(); ++a) {
    for (size_t b = a + 1; b < system.size(); ++b) {
      if (const auto& v = system.interference(a, b)) interference.push_back({ids.id(a), ids.id(b), v->str()});
    }
  }
  Json out = {{"tunnels", std::move(tunnels)}, {"interference", std::move(interference)}};
  if (system.hasComposition()) {
    Json composition = Json::array();
    for (size_t a = 0; a < system.size(); ++a) {
      for (size_t b = 0; b < system.size(); ++b) {
        if (auto c = system.composite(a, b)) composition.push_back({ids.id(a), ids.id(b), ids.id(*c)});
      }
    }
    out["composition"] = std::move(composition);
  }
  return out;
}

TunnelSystem tunnelSystemFromJson(const Json& j) {
  std::vector<TunnelSpec> tunnels;
  size_t i = 0;
  for (const auto& t : array(field(j, "tunnels", "$"), "$.tunnels")) {
    const std::string where = "$.tunnels[" + std::to_string(i++) + "]";
    tunnels.push_back({text(field(t, "id", where), where + ".id"),
                       valueFromJson(field(t, "intensity", where), where + ".intensity")});
  }
  std::vector<InterferenceEntry> interference;
  i = 0;
  if (const Json* list = optionalField(j, "interference")) {
    for (const auto& e : array(*list, "$.interference")) {
      const std::string where = "$.interference[" + std::to_string(i++) + "]";
      tuple(e, 3, where);
      interference.push_back({text(e[0], where), text(e[1], where), valueFromJson(e[2], where)});
    }
  }
  std::optional<std::vector<CompositeEntry>> composition;
  if (const Json* list = optionalField(j, "composition")) {
    composition.emplace();
    i = 0;
    for (const auto& e : array(*list, "$.composition")) {
      const std::string where = "$.composition[" + std::to_string(i++) + "]";
      tuple(e, 3, where);
      composition->push_back({text(e[0], where), text(e[1], where), text(e[2], where)});
    }
  }
  return TunnelSystem::create(std::move(tunnels), std::move(interference), std::move(composition));
}

Json toJson(const ProliferativeBase& base) {
  const auto& ids = base.distinctions();
  Json distinctions = Json::array();
  for (size_t d = 0; d < base.size(); ++d) {
    distinctions.push_back({{"id", ids.id(d)}, {"cost", base.cost(d).str()}});
  }
  Json compose = Json::array();
  Json synthesized = Json::array();
  for (size_t a = 0; a < base.size(); ++a) {
    for (size_t b = 0; b < base.size(); ++b) {
      if (auto c = base.compose(a, b)) compose.push_back({ids.id(a), ids.id(b), ids.id(*c)});
      if (const auto& s = base.synthesized(a, b)) synthesized.push_back({ids.id(a), ids.id(b), s->str()});
    }
  }
  Json out = {{"distinctions", std::move(distinctions)}, {"compose", std::move(compose)}};
  if (base.hasSynthesized()) out["synthesized"] = std::move(synthesized);
  return out;
}

ProliferativeBase baseFromJson(const Json& j) {
  std::vector<DistinctionSpec> distinctions;
  size_t i = 0;
  for (const auto& d : array(field(j, "distinctions", "$"), "$.distinctions")) {
    const std::string where = "$.distinctions[" + std::to_string(i++) + "]";
    distinctions.push_back({text(field(d, "id", where), where + ".id"),
                            valueFromJson(field(d, "cost", where), where + ".cost")});
  }
  std::vector<ComposeEntry> compose;
  if (const Json* list = optionalField(j, "compose")) {
    i = 0;
    for (const auto& e : array(*list, "$.compose")) {
      const std::string where = "$.compose[" + std::to_string(i++) + "]";
      tuple(e, 3, where);
      compose.push_back({text(e[0], where), text(e[1], where), text(e[2], where)});
    }
  }
  std::vector<SynthesizedEntry> synthesized;
  if (const Json* list = optionalField(j, "synthesized")) {
    i = 0;
    for (const auto& e : array(*list, "$.synthesized")) {
      const std::string where = "$.synthesized[" + std::to_string(i++) + "]";
      tuple(e, 3, where);
      synthesized.push_back({text(e[0], where), text(e[1], where), valueFromJson(e[2], where)});
    }
  }
  return ProliferativeBase::create(std::move(distinctions), std::move(compose), std::move(synthesized));
}

Json toJson(const Frame& frame) {
  const auto& carrier = frame.carrier();
  Json out = {{"carrier", carrier.ids()}};
  Json irreducibles = Json::array();
  for (const auto& j : frame.joinIrreducibles()) irreducibles.push_back(idsJson(j, carrier));
  out["join_irreducibles"] = std::move(irreducibles);
  if (frame.countOpens(Frame::kDefaultOpenLimit) <= Frame::kDefaultOpenLimit) {
    Json opens = Json::array();
    for (const auto& o : frame.opens()) opens.push_back(idsJson(o, carrier));
    out["opens"] = std::move(opens);
  }
  return out;
}

Frame frameFromJson(const Json& j) {
  Carrier carrier(idList(field(j, "carrier", "$"), "$.carrier"));
  if (const Json* opens = optionalField(j, "opens")) {
    std::vector<OpenSet> sets;
    size_t i = 0;
    for (const auto& o : array(*opens, "$.opens")) {
      sets.push_back(openFromJson(o, carrier, "$.opens[" + std::to_string(i++) + "]"));
    }
    return Frame::fromOpens(std::move(carrier), sets);
  }
  const Json* irr = optionalField(j, "join_irreducibles");
  if (!irr) schema("$", "frame needs \"opens\" or \"join_irreducibles\"");
  std::vector<OpenSet> sets;
  size_t i = 0;
  for (const auto& o : array(*irr, "$.join_irreducibles")) {
    sets.push_back(openFromJson(o, carrier, "$.join_irreducibles[" + std::to_string(i++) + "]"));
  }
  Frame frame = Frame::closure(carrier, sets);
  std::vector<OpenSet> given = sets;
  std::sort(given.begin(), given.end(), canonicalLess);
  given.erase(std::unique(given.begin(), given.end()), given.end());
  if (given != frame.joinIrreducibles()) {
    fail(ErrorCode::Validation, "listed join-irreducibles are not those of the frame they generate");
  }
  return frame;
}

Json pointsJson(const Frame& frame, std::span<const Point> pts) {
  Json out = Json::array();
  for (const auto& p : pts) out.push_back({{"generator", idsJson(p.generator, frame.carrier())}});
  return out;
}

std::vector<Point> pointsFromJson(const Json& j, const Frame& frame) {
  std::vector<Point> pts;
  size_t i = 0;
  for (const auto& p : array(j, "$.points")) {
    const std::string where = "$.points[" + std::to_string(i++) + "]";
    pts.push_back({openFromJson(field(p, "generator", where), frame.carrier(), where + ".generator")});
  }
  if (pts != points(frame)) fail(ErrorCode::Validation, "stored points are not the points of the stored frame");
  return pts;
}

Json toJson(const MetricTable& table) {
  Json out = Json::array();
  for (size_t i = 0; i < table.size(); ++i) {
    Json row = Json::array();
    for (size_t k = 0; k < table.size(); ++k) row.push_back(table.at(i, k).str());
    out.push_back(std::move(row));
  }
  return out;
}

MetricTable metricFromJson(const Json& j, size_t size, const std::string& where) {
  if (!j.is_array() || j.size() != size) schema(where, "expected " + std::to_string(size) + " rows");
  MetricTable table(size);
  for (size_t i = 0; i < size; ++i) {
    const std::string rowWhere = where + "[" + std::to_string(i) + "]";
    if (!j[i].is_array() || j[i].size() != size) schema(rowWhere, "expected " + std::to_string(size) + " entries");
    for (size_t k = 0; k < size; ++k) {
      table.at(i, k) = valueFromJson(j[i][k], rowWhere + "[" + std::to_string(k) + "]");
    }
  }
  return table;
}

Json toJson(const TunnelFrameSpace& space) {
  return {{"kind", "tunnel-space"},
          {"system", toJson(space.system)},
          {"frame", toJson(space.frame)},
          {"points", pointsJson(space.frame, space.points)},
          {"raw_distance", toJson(space.rawDistance)},
          {"metric", toJson(space.metric)}};
}

Json toJson(const ProlifFrameSpace& space) {
  return {{"kind", "prolif-space"},
          {"base", toJson(space.base)},
          {"scene_frame", toJson(space.sceneFrame)},
          {"foci", pointsJson(space.sceneFrame, space.foci)},
          {"raw_distance", toJson(space.rawDistance)},
          {"metric", toJson(space.metric)}};
}

TunnelFrameSpace tunnelSpaceFromJson(const Json& j) {
  TunnelSystem system = tunnelSystemFromJson(field(j, "system", "$"));
  Frame frame = frameFromJson(field(j, "frame", "$"));
  if (!(frame.carrier() == system.tunnels())) {
    fail(ErrorCode::Validation, "frame carrier differs from the tunnel list");
  }
  auto pts = pointsFromJson(field(j, "points", "$"), frame);
  auto raw = metricFromJson(field(j, "raw_distance", "$"), pts.size(), "$.raw_distance");
  auto metric = metricFromJson(field(j, "metric", "$"), pts.size(), "$.metric");
  return TunnelFrameSpace{std::move(system), std::move(frame), std::move(pts), std::move(raw),
                          std::move(metric)};
}

ProlifFrameSpace prolifSpaceFromJson(const Json& j) {
  ProliferativeBase base = baseFromJson(field(j, "base", "$"));
  Frame frame = frameFromJson(field(j, "scene_frame", "$"));
  if (!(frame.carrier() == base.distinctions())) {
    fail(ErrorCode::Validation, "scene frame carrier differs from the distinction list");
  }
  auto foci = pointsFromJson(field(j, "foci", "$"), frame);
  auto raw = metricFromJson(field(j, "raw_distance", "$"), foci.size(), "$.raw_distance");
  auto metric = metricFromJson(field(j, "metric", "$"), foci.size(), "$.metric");
  return ProlifFrameSpace{std::move(base), std::move(frame), std::move(foci), std::move(raw),
                          std::move(metric)};
}

Json toJson(const OperatorMatrix& m) {
  Json entries = Json::array();
  for (size_t r = 0; r < m.dim(); ++r) {
    Json row = Json::array();
    for (size_t c = 0; c < m.dim(); ++c) row.push_back(rationalString(m.at(r, c)));
    entries.push_back(std::move(row));
  }
  return {{"basis", m.basis()}, {"entries", std::move(entries)}};
}

namespace {

double significant12(double v) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.12g", v);
  const double rounded = std::strtod(buffer, nullptr);
  return rounded == 0.0 ? 0.0 : rounded;
}

}  // namespace

Json spectrumJson(const Spectrum& s) {
  Json out = Json::array();
  for (const auto& z : s) out.push_back({{"re", significant12(z.real())}, {"im", significant12(z.imag())}});
  return out;
}

Json toJson(const SubstructureRelation& sub, const Carrier& tunnels) {
  Json pairs = Json::array();
  for (auto [u, t] : sub.pairs) pairs.push_back({tunnels.id(u), tunnels.id(t)});
  return {{"pairs", std::move(pairs)}};
}

SubstructureRelation substructureFromJson(const Json& j, const Carrier& tunnels) {
  SubstructureRelation sub;
  size_t i = 0;
  for (const auto& p : array(field(j, "pairs", "$.substructure"), "$.substructure.pairs")) {
    const std::string where = "$.substructure.pairs[" + std::to_string(i++) + "]";
    tuple(p, 2, where);
    const auto u = tunnels.find(text(p[0], where));
    const auto t = tunnels.find(text(p[1], where));
    if (!u || !t) fail(ErrorCode::InvalidInput, where + ": unknown tunnel");
    sub.pairs.emplace_back(*u, *t);
  }
  return sub;
}

FrameHom homFromJson(const Json& j, const Frame& source, const Frame& target) {
  if (const Json* pre = optionalField(j, "preimage_of")) {
    if (!pre->is_object()) schema("$.hom.preimage_of", "expected an object");
    const auto& tc = target.carrier();
    std::vector<std::optional<size_t>> map(tc.size());
    for (const auto& [key, value] : pre->items()) {
      const auto x = tc.find(key);
      if (!x) fail(ErrorCode::InvalidInput, "$.hom.preimage_of: unknown element '" + key + "'");
      if (value.is_null()) continue;
      const auto y = source.carrier().find(text(value, "$.hom.preimage_of." + key));
      if (!y) fail(ErrorCode::InvalidInput, "$.hom.preimage_of." + key + ": unknown image");
      map[*x] = *y;
    }
    return FrameHom::preimage(source, target, map);
  }
  const Json& list = array(field(j, "map", "$.hom"), "$.hom.map");
  std::map<OpenSet, OpenSet, CanonicalLess> table;
  size_t i = 0;
  for (const auto& e : list) {
    const std::string where = "$.hom.map[" + std::to_string(i++) + "]";
    tuple(e, 2, where);
    OpenSet from = openFromJson(e[0], source.carrier(), where + "[0]");
    OpenSet to = openFromJson(e[1], target.carrier(), where + "[1]");
    if (!table.emplace(std::move(from), std::move(to)).second) {
      fail(ErrorCode::InvalidInput, where + ": source open listed twice");
    }
  }
  return FrameHom(source, target, std::move(table));
}

Json toJson(const FrameHom& hom) {
  Json list = Json::array();
  for (const auto& [from, to] : hom.table()) {
    list.push_back({idsJson(from, hom.source().carrier()), idsJson(to, hom.target().carrier())});
  }
  return {{"map", std::move(list)}};
}

WeightedGraph graphFromJson(const Json& j, bool allowZeroWeights) {
  auto vertices = idList(field(j, "vertices", "$"), "$.vertices");
  std::vector<WeightedEdge> edges;
  size_t i = 0;
  for (const auto& e : array(field(j, "edges", "$"), "$.edges")) {
    const std::string where = "$.edges[" + std::to_string(i++) + "]";
    tuple(e, 3, where);
    const Value w = valueFromJson(e[2], where);
    auto q = w.asRational();
    if (!q) fail(ErrorCode::Validation, where + ": edge weight must be a finite rational");
    edges.push_back({text(e[0], where), text(e[1], where), *q});
  }
  return WeightedGraph::create(std::move(vertices), std::move(edges), allowZeroWeights);
}

Json toJson(const WeightedGraph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v, rationalString(e.weight)});
  return {{"vertices", g.vertices().ids()}, {"edges", std::move(edges)}};
}

std::vector<mpq_class> weightsFromJson(const Json& j, const Carrier& carrier) {
  if (!j.is_object()) schema("$", "weights must be an object keyed by carrier element");
  std::vector<std::optional<mpq_class>> found(carrier.size());
  for (const auto& [key, value] : j.items()) {
    const auto x = carrier.find(key);
    if (!x) fail(ErrorCode::InvalidInput, "weight for unknown element '" + key + "'");
    auto q = valueFromJson(value, "$." + key).asRational();
    if (!q) fail(ErrorCode::InvalidInput, "weight of '" + key + "' must be a finite rational");
    found[*x] = *q;
  }
  std::vector<mpq_class> out;
  for (size_t x = 0; x < carrier.size(); ++x) {
    if (!found[x]) fail(ErrorCode::InvalidInput, "missing weight for '" + carrier.id(x) + "'");
    out.push_back(*found[x]);
  }
  return out;
}

InputKind detectKind(const Json& j) {
  if (!j.is_object()) schema("$", "expected a JSON object");
  if (auto it = j.find("kind"); it != j.end() && it->is_string()) {
    const auto k = it->get<std::string>();
    if (k == "tunnel-space") return InputKind::TunnelSpace;
    if (k == "prolif-space") return InputKind::ProlifSpace;
    if (k == "tgeom-morphism" || k == "plog-morphism") return InputKind::Morphism;
    schema("$.kind", "unknown kind '" + k + "'");
  }
  if (j.contains("tunnels")) return InputKind::TunnelSystem;
  if (j.contains("distinctions")) return InputKind::ProlifBase;
  if (j.contains("vertices")) return InputKind::Graph;
  if (j.contains("carrier")) return InputKind::Frame;
  schema("$", "cannot tell what kind of input this is");
}

const char* kindName(InputKind kind) {
  switch (kind) {
    case InputKind::TunnelSystem: return "tunnel-system";
    case InputKind::ProlifBase: return "prolif-base";
    case InputKind::TunnelSpace: return "tunnel-space";
    case InputKind::ProlifSpace: return "prolif-space";
    case InputKind::Graph: return "graph";
    case InputKind::Frame: return "frame";
    case InputKind::Morphism: return "morphism";
  }
  return "unknown";
}

}  // namespace framespace
