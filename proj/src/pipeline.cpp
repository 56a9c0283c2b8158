#include "framespace/pipeline.hpp"

#include <chrono>
#include <cmath>

#include "framespace/error.hpp"
#include "framespace/random.hpp"

namespace framespace {

namespace {

constexpr double kSpectralTolerance = 1e-9;

class Phases {
 public:
  explicit Phases(bool on) : on_(on) {}

  template <class F>
  decltype(auto) run(const char* name, F&& f) {
    const auto start = std::chrono::steady_clock::now();
    struct Stop {
      Phases& self;
      const char* name;
      std::chrono::steady_clock::time_point start;
      ~Stop() { self.add(name, start); }
    } stop{*this, name, start};
    return f();
  }

  void attach(Json& report) const {
    if (on_) report["timings_ms"] = times_;
  }

 private:
  void add(const char* name, std::chrono::steady_clock::time_point start) {
    if (!on_) return;
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    times_[name] = times_.value(name, 0.0) + ms;
  }

  bool on_;
  Json times_ = Json::object();
};

Json check(const std::string& name, bool pass, Json detail = nullptr) {
  Json c = {{"name", name}, {"status", pass ? "PASS" : "FAIL"}};
  if (!detail.is_null()) c["detail"] = std::move(detail);
  return c;
}

Json skipped(const std::string& name, const std::string& why) {
  return {{"name", name}, {"status", "SKIP"}, {"detail", why}};
}

struct Loaded {
  InputKind kind;
  std::optional<TunnelFrameSpace> tunnel{};
  std::optional<ProlifFrameSpace> prolif{};
  std::optional<Frame> frame{};
  const Json* substructure = nullptr;
};

Loaded load(const Json& input, Phases& phases, bool frameAllowed = false) {
  Loaded out{detectKind(input)};
  if (const auto it = input.find("substructure"); it != input.end()) out.substructure = &*it;
  switch (out.kind) {
    case InputKind::TunnelSystem:
      out.tunnel = phases.run("build", [&] { return buildTunnelSpace(tunnelSystemFromJson(input)); });
      break;
    case InputKind::TunnelSpace:
      out.tunnel = phases.run("load", [&] { return tunnelSpaceFromJson(input); });
      break;
    case InputKind::ProlifBase:
      out.prolif = phases.run("build", [&] { return buildProlifSpace(baseFromJson(input)); });
      break;
    case InputKind::ProlifSpace:
      out.prolif = phases.run("load", [&] { return prolifSpaceFromJson(input); });
      break;
    case InputKind::Frame:
      if (!frameAllowed) fail(ErrorCode::InvalidInput, "a bare frame is not accepted here");
      out.frame = frameFromJson(input);
      break;
    case InputKind::Graph:
      fail(ErrorCode::InvalidInput, "graph input must first be turned into a tunnel system with 'gen graph'");
    case InputKind::Morphism:
      fail(ErrorCode::InvalidInput, "morphism input is only accepted by check-morphism");
  }
  return out;
}

const Frame& frameOf(const Loaded& l) {
  if (l.tunnel) return l.tunnel->frame;
  if (l.prolif) return l.prolif->sceneFrame;
  return *l.frame;
}

// Both presentations of one instance, linked by the correspondence.
struct Paired {
  TunnelFrameSpace tunnel;
  ProlifFrameSpace prolif;
  Correspondence corr;
  bool tunnelIsInput;
};

Paired pair(const Loaded& l, Phases& phases) {
  if (l.tunnel) {
    auto image = phases.run("functor", [&] { return functorF(*l.tunnel); });
    return {*l.tunnel, std::move(image.space), std::move(image.correspondence), true};
  }
  auto image = phases.run("functor", [&] { return functorG(*l.prolif); });
  return {std::move(image.space), *l.prolif, std::move(image.correspondence), false};
}

// Reason the Laplacians cannot be formed, if any.
std::optional<std::string> spectralBlocker(const TunnelSystem& system) {
  for (size_t t = 0; t < system.size(); ++t) {
    if (!system.intensity(t).asRational()) {
      return "Laplacians need finite rational intensities; '" + system.tunnels().id(t) + "' has " +
             system.intensity(t).str();
    }
  }
  return std::nullopt;
}

struct Spectral {
  SubstructureRelation sub;
  bool supplied = false;
  OperatorMatrix tunnelSide;
  OperatorMatrix prolifSide;
  PermutationUnitary unitary;
};

Spectral spectral(const Paired& p, const Json* supplied, Phases& phases) {
  return phases.run("laplacian", [&] {
    Spectral s;
    s.supplied = supplied != nullptr;
    s.sub = supplied ? substructureFromJson(*supplied, p.tunnel.system.tunnels())
                     : deriveSubstructureFromBase(p.prolif.base, p.corr);
    s.tunnelSide = tunnelLaplacian(p.tunnel.system, s.sub);
    s.prolifSide = prolifLaplacian(p.prolif.base);
    s.unitary = unitaryFromCorrespondence(s.tunnelSide, s.prolifSide, p.tunnel.system.tunnels(),
                                          p.prolif.base.distinctions(), p.corr);
    return s;
  });
}

Json conjugationCheckJson(const Spectral& s) {
  const auto result = conjugationCheck(s.unitary, s.tunnelSide, s.prolifSide);
  Json detail = {{"substructure", s.supplied ? "supplied" : "derived"},
                 {"max_discrepancy", rationalString(result.maxDiscrepancy)}};
  if (!result.ok) detail["first_mismatch"] = result.report;
  return check("conjugation", result.ok, std::move(detail));
}

std::optional<std::string> firstTableDifference(const char* name, const MetricTable& stored,
                                                const MetricTable& recomputed) {
  for (size_t i = 0; i < stored.size(); ++i) {
    for (size_t k = 0; k < stored.size(); ++k) {
      if (!(stored.at(i, k) == recomputed.at(i, k))) {
        return std::string(name) + "[" + std::to_string(i) + "][" + std::to_string(k) + "]: stored " +
               stored.at(i, k).str() + " != recomputed " + recomputed.at(i, k).str();
      }
    }
  }
  return std::nullopt;
}

Json consistencyCheck(const MetricTable& storedRaw, const MetricTable& storedMetric,
                      const MetricTable& raw) {
  const MetricTable closed = metricClosure(raw);
  Json problems = Json::array();
  if (auto d = firstTableDifference("raw_distance", storedRaw, raw)) problems.push_back(*d);
  if (auto d = firstTableDifference("metric", storedMetric, closed)) problems.push_back(*d);
  return check("closed-metric-consistency", problems.empty(), problems.empty() ? Json(nullptr) : problems);
}

Json metricAxiomsCheck(const MetricTable& metric) {
  std::string why;
  const bool ok = satisfiesMetricAxioms(metric, &why);
  return check("metric-axioms", ok, ok ? Json(nullptr) : Json(why));
}

Json spectraCheck(const Spectral& s, Phases& phases, Json* out = nullptr) {
  const size_t bound = spectralDimBound();
  if (s.tunnelSide.dim() > bound) {
    return skipped("spectra", "dimension " + std::to_string(s.tunnelSide.dim()) + " exceeds bound " +
                                  std::to_string(bound));
  }
  try {
    const auto [a, b] = phases.run("spectrum", [&] {
      return std::pair(spectrum(s.tunnelSide, bound), spectrum(s.prolifSide, bound));
    });
    const double deviation = spectrumDeviation(a, b);
    if (out) {
      (*out)["tunnel_spectrum"] = spectrumJson(a);
      (*out)["prolif_spectrum"] = spectrumJson(b);
    }
    return check("spectra", deviation <= kSpectralTolerance, {{"max_deviation", deviation}});
  } catch (const NumericalFailure& e) {
    return check("spectra", false, {{"numerical_failure", e.what()}});
  }
}

Json diffJson(const std::vector<std::string>& diff) {
  Json out = Json::array();
  for (const auto& d : diff) out.push_back(d);
  return out;
}

Json roundTripCheck(const Paired& p) {
  const auto result = p.tunnelIsInput ? checkRoundTrip(p.tunnel) : checkRoundTrip(p.prolif);
  return check("round-trip", result.ok, result.ok ? Json(nullptr) : diffJson(result.diff));
}

Json spaceJson(const Loaded& l) { return l.tunnel ? toJson(*l.tunnel) : toJson(*l.prolif); }

}  // namespace

Json buildReport(const Json& input, const PipelineOptions& options) {
  Phases phases(options.timings);
  Json out = spaceJson(load(input, phases));
  phases.attach(out);
  return out;
}

Json pointsReport(const Json& input, const PipelineOptions& options) {
  Phases phases(options.timings);
  const Loaded l = load(input, phases, true);
  const Frame& frame = frameOf(l);
  const auto pts = l.frame ? points(frame) : (l.tunnel ? l.tunnel->points : l.prolif->foci);
  Json out = {{"frame", toJson(frame)}, {"count", pts.size()}, {"points", pointsJson(frame, pts)}};
  phases.attach(out);
  return out;
}

Json metricReport(const Json& input, const PipelineOptions& options) {
  Phases phases(options.timings);
  const Loaded l = load(input, phases);
  const Frame& frame = frameOf(l);
  const auto& pts = l.tunnel ? l.tunnel->points : l.prolif->foci;
  const auto& raw = l.tunnel ? l.tunnel->rawDistance : l.prolif->rawDistance;
  const auto& metric = l.tunnel ? l.tunnel->metric : l.prolif->metric;
  Json out = {{"points", pointsJson(frame, pts)},
              {"raw_distance", toJson(raw)},
              {"metric", toJson(metric)},
              {"checks", Json::array({metricAxiomsCheck(metric)})}};
  phases.attach(out);
  return out;
}

Json laplacianReport(const Json& input, const PipelineOptions& options) {
  Phases phases(options.timings);
  const Loaded l = load(input, phases);
  const Paired p = pair(l, phases);
  if (auto why = spectralBlocker(p.tunnel.system)) fail(ErrorCode::InvalidInput, *why);
  const Spectral s = spectral(p, l.substructure, phases);
  Json unitary = Json::array();
  for (size_t i = 0; i < s.unitary.image.size(); ++i) {
    unitary.push_back({s.tunnelSide.basis()[i], s.prolifSide.basis()[s.unitary.image[i]]});
  }
  Json out = {{"substructure", toJson(s.sub, p.tunnel.system.tunnels())},
              {"substructure_source", s.supplied ? "supplied" : "derived"},
              {"tunnel_laplacian", toJson(s.tunnelSide)},
              {"prolif_laplacian", toJson(s.prolifSide)},
              {"unitary", std::move(unitary)},
              {"checks", Json::array({conjugationCheckJson(s)})}};
  phases.attach(out);
  return out;
}

Json spectrumReport(const Json& input, const PipelineOptions& options) {
  Phases phases(options.timings);
  const Loaded l = load(input, phases);
  const Paired p = pair(l, phases);
  if (auto why = spectralBlocker(p.tunnel.system)) fail(ErrorCode::InvalidInput, *why);
  const Spectral s = spectral(p, l.substructure, phases);
  const size_t bound = spectralDimBound();
  Json out = Json::object();
  Spectrum sides[2];
  const OperatorMatrix* matrices[2] = {&s.tunnelSide, &s.prolifSide};
  const char* names[2] = {"tunnel_spectrum", "prolif_spectrum"};
  for (int i = 0; i < 2; ++i) {
    try {
      sides[i] = phases.run("spectrum", [&] { return spectrum(*matrices[i], bound); });
      out[names[i]] = spectrumJson(sides[i]);
    } catch (const NumericalFailure& e) {
      out[names[i]] = spectrumJson(e.partial());
      out["error"] = {{"code", "numerical-failure"}, {"message", e.what()}};
    }
  }
  if (!out.contains("error")) {
    const double deviation = spectrumDeviation(sides[0], sides[1]);
    out["max_deviation"] = deviation;
    out["checks"] = Json::array({check("spectra", deviation <= kSpectralTolerance,
                                       {{"max_deviation", deviation}})});
  }
  phases.attach(out);
  return out;
}

Json equivalenceReport(const Json& input, const PipelineOptions& options) {
  Phases phases(options.timings);
  const Loaded l = load(input, phases);
  const Paired p = pair(l, phases);
  Json checks = Json::array();
  if (p.tunnelIsInput) {
    const auto& x = p.tunnel;
    checks.push_back(metricAxiomsCheck(x.metric));
    checks.push_back(consistencyCheck(x.rawDistance, x.metric, rawDistance(x.system, x.frame, x.points)));
  } else {
    const auto& y = p.prolif;
    checks.push_back(metricAxiomsCheck(y.metric));
    checks.push_back(consistencyCheck(y.rawDistance, y.metric, rawFocusDistance(y.base, y.sceneFrame, y.foci)));
  }
  checks.push_back(phases.run("round-trip", [&] { return roundTripCheck(p); }));
  if (auto why = spectralBlocker(p.tunnel.system)) {
    checks.push_back(skipped("conjugation", *why));
    checks.push_back(skipped("spectra", *why));
  } else {
    const Spectral s = spectral(p, l.substructure, phases);
    checks.push_back(conjugationCheckJson(s));
    checks.push_back(spectraCheck(s, phases));
  }
  const bool regenerated = p.tunnelIsInput ? regeneratedFrameMatches(FunctorFResult{p.prolif, p.corr})
                                           : regeneratedFrameMatches(FunctorGResult{p.tunnel, p.corr});
  Json out = {{"instance", kindName(l.kind)},
              {"checks", std::move(checks)},
              {"notes", {{"regenerated_frame_matches", regenerated}}}};
  phases.attach(out);
  return out;
}

Json randomEquivalenceReport(size_t count, const PipelineOptions& options) {
  Phases phases(options.timings);
  Rng rng(options.seed);
  size_t roundTrips = 0;
  size_t conjugations = 0;
  size_t spectra = 0;
  double worst = 0.0;
  Json failures = Json::array();
  for (size_t i = 0; i < count; ++i) {
    const bool composed = i % 2 == 1;
    const auto x = phases.run("build", [&] { return buildTunnelSpace(randomTunnelSystem(rng, 6, composed)); });
    const auto y = phases.run("build", [&] {
      return buildProlifSpace(randomGradedBase(rng, std::uniform_int_distribution<size_t>(1, 6)(rng), 3));
    });
    const auto forward = phases.run("round-trip", [&] { return checkRoundTrip(x); });
    const auto backward = phases.run("round-trip", [&] { return checkRoundTrip(y); });
    if (forward.ok && backward.ok) {
      ++roundTrips;
    } else {
      failures.push_back({{"instance", i}, {"check", "round-trip"},
                          {"diff", diffJson(forward.ok ? backward.diff : forward.diff)}});
    }
    bool conjugated = true;
    bool spectraAgree = true;
    for (int side = 0; side < 2; ++side) {
      const Loaded l = side == 0 ? Loaded{InputKind::TunnelSpace, x, std::nullopt, std::nullopt}
                                 : Loaded{InputKind::ProlifSpace, std::nullopt, y, std::nullopt};
      const Paired p = pair(l, phases);
      const Spectral s = spectral(p, nullptr, phases);
      const auto c = conjugationCheck(s.unitary, s.tunnelSide, s.prolifSide);
      if (!c.ok) {
        conjugated = false;
        failures.push_back({{"instance", i}, {"check", "conjugation"}, {"detail", c.report}});
      }
      const Json sc = spectraCheck(s, phases);
      if (sc.contains("detail") && sc["detail"].contains("max_deviation")) {
        worst = std::max(worst, sc["detail"]["max_deviation"].get<double>());
      }
      if (sc["status"] != "PASS") {
        spectraAgree = false;
        failures.push_back({{"instance", i}, {"check", "spectra"}, {"detail", sc.value("detail", Json())}});
      }
    }
    conjugations += conjugated;
    spectra += spectraAgree;
  }
  auto tally = [&](size_t passed) { return std::to_string(passed) + "/" + std::to_string(count); };
  Json out = {{"seed", options.seed},
              {"instances", count},
              {"checks", Json::array({check("round-trip", roundTrips == count, tally(roundTrips)),
                                      check("conjugation", conjugations == count, tally(conjugations)),
                                      check("spectra", spectra == count,
                                            {{"agreeing", tally(spectra)}, {"max_deviation", worst}})})}};
  if (!failures.empty()) out["failures"] = std::move(failures);
  phases.attach(out);
  return out;
}

namespace {

struct MorphismOutcome {
  bool tgeom;
  bool plog;
  std::string report;
};

// Validity in the input category, then again after transport.
MorphismOutcome morphismOutcome(const TunnelFrameSpace& src, const TunnelFrameSpace& dst,
                                const FrameHom& hom) {
  const auto t = checkTGeomMorphism(src, dst, hom);
  const auto p = checkPLogMorphism(functorF(src).space, functorF(dst).space,
                                   transportMorphism(hom, Direction::TGeomToPLog));
  return {t.ok, p.ok, t.report};
}

MorphismOutcome morphismOutcome(const ProlifFrameSpace& src, const ProlifFrameSpace& dst,
                                const FrameHom& hom) {
  const auto p = checkPLogMorphism(src, dst, hom);
  const auto t = checkTGeomMorphism(functorG(src).space, functorG(dst).space,
                                    transportMorphism(hom, Direction::PLogToTGeom));
  return {t.ok, p.ok, p.report};
}

}  // namespace

Json morphismReport(const Json& input, const PipelineOptions& options) {
  Phases phases(options.timings);
  if (detectKind(input) != InputKind::Morphism) {
    fail(ErrorCode::InvalidInput, "check-morphism expects {\"kind\": \"tgeom-morphism\" | \"plog-morphism\", ...}");
  }
  const bool tgeom = input.at("kind") == "tgeom-morphism";
  if (!input.contains("source") || !input.contains("target") || !input.contains("hom")) {
    fail(ErrorCode::Parse, "$: morphism needs \"source\", \"target\" and \"hom\"");
  }
  const Loaded src = load(input["source"], phases);
  const Loaded dst = load(input["target"], phases);
  MorphismOutcome outcome{};
  if (tgeom) {
    if (!src.tunnel || !dst.tunnel) fail(ErrorCode::InvalidInput, "tgeom-morphism needs tunnel spaces");
    const FrameHom hom = homFromJson(input["hom"], dst.tunnel->frame, src.tunnel->frame);
    outcome = phases.run("check", [&] { return morphismOutcome(*src.tunnel, *dst.tunnel, hom); });
  } else {
    if (!src.prolif || !dst.prolif) fail(ErrorCode::InvalidInput, "plog-morphism needs proliferative spaces");
    const FrameHom hom = homFromJson(input["hom"], dst.prolif->sceneFrame, src.prolif->sceneFrame);
    outcome = phases.run("check", [&] { return morphismOutcome(*src.prolif, *dst.prolif, hom); });
  }
  const bool valid = tgeom ? outcome.tgeom : outcome.plog;
  Json out = {{"category", tgeom ? "TGeom" : "PLog"},
              {"checks", Json::array({check("morphism", valid, valid ? Json(nullptr) : Json(outcome.report)),
                                      check("transport-agrees", outcome.tgeom == outcome.plog,
                                            {{"tgeom_valid", outcome.tgeom}, {"plog_valid", outcome.plog}})})}};
  phases.attach(out);
  return out;
}

Json randomMorphismReport(size_t count, const PipelineOptions& options) {
  Phases phases(options.timings);
  Rng rng(options.seed);
  size_t forwardAgree = 0;
  size_t backwardAgree = 0;
  Json shapes = Json::object();
  Json failures = Json::array();
  for (size_t i = 0; i < count; ++i) {
    const auto shape = static_cast<MorphismShape>(i % 3);
    const auto m = phases.run("generate", [&] { return randomMorphism(rng, shape); });
    const auto forward = phases.run("check", [&] { return morphismOutcome(m.source, m.target, m.hom); });
    const auto backward = phases.run("check", [&] {
      return morphismOutcome(functorF(m.source).space, functorF(m.target).space,
                             transportMorphism(m.hom, Direction::TGeomToPLog));
    });
    forwardAgree += forward.tgeom == forward.plog;
    backwardAgree += backward.tgeom == backward.plog;
    if (forward.tgeom != forward.plog || backward.tgeom != backward.plog) {
      failures.push_back({{"instance", i}, {"shape", shapeName(shape)}});
    }
    Json& tally = shapes[shapeName(shape)];
    if (tally.is_null()) tally = {{"valid", 0}, {"invalid", 0}};
    tally[forward.tgeom ? "valid" : "invalid"] = tally[forward.tgeom ? "valid" : "invalid"].get<int>() + 1;
  }
  auto ratio = [&](size_t n) { return std::to_string(n) + "/" + std::to_string(count); };
  Json out = {{"seed", options.seed},
              {"morphisms", count},
              {"shapes", std::move(shapes)},
              {"checks", Json::array({check("transport-tgeom-to-plog", forwardAgree == count, ratio(forwardAgree)),
                                      check("transport-plog-to-tgeom", backwardAgree == count, ratio(backwardAgree))})}};
  if (!failures.empty()) out["failures"] = std::move(failures);
  phases.attach(out);
  return out;
}

Json generateGraphSystem(const Json& graph, const std::string& variant, const PipelineOptions& options) {
  const WeightedGraph g = graphFromJson(graph, options.allowZeroWeights);
  if (variant == "stars") return toJson(graphModelStars(g));
  if (variant == "edges") return toJson(graphModelEdges(g));
  fail(ErrorCode::InvalidInput, "graph variant must be 'stars' or 'edges'");
}

Json generateIntervalSystem(unsigned n, const std::string& variant) {
  if (variant == "hull") return toJson(intervalModel(n, IntervalVariant::Hull));
  if (variant == "intersection") return toJson(intervalModel(n, IntervalVariant::Intersection));
  fail(ErrorCode::InvalidInput, "interval variant must be 'hull' or 'intersection'");
}

Json generateLocaleSystem(const Json& frame, const Json& weights) {
  const Frame f = frameFromJson(frame);
  return toJson(localeModel(f, weightsFromJson(weights, f.carrier())));
}

Json pointsOracleReport(const Json& input, const PipelineOptions& options) {
  Phases phases(options.timings);
  const Loaded l = load(input, phases, true);
  const Frame& frame = frameOf(l);
  const auto fast = phases.run("join-irreducibles", [&] { return points(frame); });
  const auto slow = phases.run("brute-force", [&] { return pointsBruteForce(frame); });
  const bool agree = fast == slow;
  Json out = {{"oracle", "points"},
              {"verdict", agree ? "AGREE" : "DISAGREE"},
              {"join_irreducible_points", fast.size()},
              {"brute_force_points", slow.size()}};
  phases.attach(out);
  return out;
}

Json shortestPathOracleReport(const Json& input, const PipelineOptions& options) {
  Phases phases(options.timings);
  if (detectKind(input) != InputKind::Graph) {
    fail(ErrorCode::InvalidInput, "shortest-path oracle expects a weighted graph");
  }
  const WeightedGraph g = graphFromJson(input, options.allowZeroWeights);
  const auto space = phases.run("build", [&] { return buildTunnelSpace(graphModelStars(g)); });
  const auto oracle = phases.run("dijkstra", [&] { return shortestPathOracle(g); });
  const size_t n = g.vertices().size();
  Json mismatches = Json::array();
  bool bijective = space.points.size() == n;
  for (size_t u = 0; u < n && bijective; ++u) {
    for (size_t v = 0; v < n; ++v) {
      const auto pu = space.homePoint(u);
      const auto pv = space.homePoint(v);
      if (!pu || !pv || (u != v && *pu == *pv)) {
        bijective = false;
        break;
      }
      if (!(space.metric.at(*pu, *pv) == oracle.at(u, v))) {
        mismatches.push_back(g.vertices().id(u) + "," + g.vertices().id(v) + ": " +
                             space.metric.at(*pu, *pv).str() + " != " + oracle.at(u, v).str());
      }
    }
  }
  const bool agree = bijective && mismatches.empty();
  Json out = {{"oracle", "shortest-path"},
              {"verdict", agree ? "AGREE" : "DISAGREE"},
              {"vertices", n},
              {"points", space.points.size()}};
  if (!mismatches.empty()) out["mismatches"] = std::move(mismatches);
  phases.attach(out);
  return out;
}

Json nilpotentOracleReport(const Json& input, const PipelineOptions& options) {
  Phases phases(options.timings);
  const Loaded l = load(input, phases);
  const Paired p = pair(l, phases);
  if (auto why = spectralBlocker(p.tunnel.system)) fail(ErrorCode::InvalidInput, *why);
  const Spectral s = spectral(p, l.substructure, phases);
  Json sides = Json::object();
  bool agree = true;
  const std::pair<const char*, const OperatorMatrix*> matrices[] = {{"tunnel", &s.tunnelSide},
                                                                   {"prolif", &s.prolifSide}};
  for (const auto& [name, m] : matrices) {
    const bool exact = phases.run("exact-power", [&] { return nilpotencyCheck(*m); });
    const auto values = phases.run("spectrum", [&] { return spectrum(*m); });
    double largest = 0.0;
    for (const auto& z : values) largest = std::max(largest, std::abs(z));
    const bool numeric = largest <= kSpectralTolerance;
    agree = agree && exact == numeric;
    sides[name] = {{"nilpotent_exact", exact}, {"spectrum_all_zero", numeric}, {"max_abs_eigenvalue", largest}};
  }
  Json out = {{"oracle", "nilpotent"}, {"verdict", agree ? "AGREE" : "DISAGREE"}, {"sides", std::move(sides)}};
  phases.attach(out);
  return out;
}

bool reportFailed(const Json& report) {
  if (report.value("verdict", "") == "DISAGREE") return true;
  if (const auto it = report.find("checks"); it != report.end()) {
    for (const auto& c : *it) {
      if (c.value("status", "") == "FAIL") return true;
    }
  }
  return false;
}

bool reportHasError(const Json& report) { return report.contains("error"); }

}  // namespace framespace
