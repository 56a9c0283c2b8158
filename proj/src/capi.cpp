#include "framespace/framespace.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "framespace/error.hpp"
#include "framespace/pipeline.hpp"

struct fs_tunnel_system {
  framespace::TunnelSystem value;
};
struct fs_prolif_base {
  framespace::ProliferativeBase value;
};
struct fs_tunnel_space {
  framespace::TunnelFrameSpace value;
};
struct fs_prolif_space {
  framespace::ProlifFrameSpace value;
};

namespace {

using framespace::ErrorCode;
using framespace::Json;

thread_local std::string lastError;

fs_status statusOf(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse: return FS_ERR_PARSE;
    case ErrorCode::InvalidInput:
    case ErrorCode::Validation: return FS_ERR_INVALID;
    case ErrorCode::NumericalFailure: return FS_ERR_NUMERICAL;
    case ErrorCode::OracleBoundExceeded: return FS_ERR_ORACLE_BOUND;
    case ErrorCode::InternalInconsistency: return FS_ERR_INTERNAL;
  }
  return FS_ERR_INTERNAL;
}

char* copyString(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class F>
fs_status guarded(F&& body) {
  lastError.clear();
  try {
    return body();
  } catch (const framespace::Error& e) {
    lastError = std::string(framespace::errorCodeName(e.code())) + ": " + e.what();
    return statusOf(e.code());
  } catch (const std::bad_alloc&) {
    lastError = "internal-inconsistency: out of memory";
    return FS_ERR_INTERNAL;
  } catch (const std::exception& e) {
    lastError = std::string("internal-inconsistency: ") + e.what();
    return FS_ERR_INTERNAL;
  }
}

fs_status nullArgument(const char* name) {
  lastError = std::string("null argument: ") + name;
  return FS_ERR_NULL_ARGUMENT;
}

framespace::PipelineOptions optionsOf(const fs_options* options) {
  framespace::PipelineOptions out;
  if (options) {
    out.seed = options->seed;
    out.allowZeroWeights = options->allow_zero_weights != 0;
    out.timings = options->timings != 0;
  }
  return out;
}

fs_status emitReport(const Json& report, char** out) {
  *out = copyString(report.dump());
  if (framespace::reportHasError(report)) {
    lastError = "numerical-failure: " + report["error"].value("message", std::string());
    return FS_ERR_NUMERICAL;
  }
  return framespace::reportFailed(report) ? FS_CHECK_FAILED : FS_OK;
}

using ReportFn = Json (*)(const Json&, const framespace::PipelineOptions&);

fs_status runReport(ReportFn fn, const char* input, const fs_options* options, char** report) {
  if (!input) return nullArgument("input");
  if (!report) return nullArgument("report");
  *report = nullptr;
  return guarded([&] { return emitReport(fn(framespace::parseJsonText(input), optionsOf(options)), report); });
}

template <class Handle, class Make>
fs_status makeHandle(Handle** out, Make&& make) {
  if (!out) return nullArgument("out");
  *out = nullptr;
  return guarded([&] {
    *out = new Handle{make()};
    return FS_OK;
  });
}

template <class T>
fs_status writeJson(const T* handle, char** out) {
  if (!handle) return nullArgument("handle");
  if (!out) return nullArgument("out");
  return guarded([&] {
    *out = copyString(framespace::toJson(handle->value).dump());
    return FS_OK;
  });
}

template <class Space>
fs_status roundTrip(const Space* space, int* ok, char** diff) {
  if (!space) return nullArgument("space");
  if (!ok) return nullArgument("ok");
  if (diff) *diff = nullptr;
  return guarded([&] {
    const auto result = framespace::checkRoundTrip(space->value);
    *ok = result.ok ? 1 : 0;
    if (diff) *diff = copyString(Json(result.diff).dump());
    return FS_OK;
  });
}

}  // namespace

extern "C" {

const char* fs_version(void) { return "1.0.0"; }

const char* fs_last_error(void) { return lastError.c_str(); }

const char* fs_status_name(fs_status status) {
  switch (status) {
    case FS_OK: return "ok";
    case FS_CHECK_FAILED: return "check-failed";
    case FS_ERR_PARSE: return "parse";
    case FS_ERR_INVALID: return "validation";
    case FS_ERR_NUMERICAL: return "numerical-failure";
    case FS_ERR_ORACLE_BOUND: return "oracle-bound-exceeded";
    case FS_ERR_INTERNAL: return "internal-inconsistency";
    case FS_ERR_NULL_ARGUMENT: return "null-argument";
  }
  return "unknown";
}

void fs_free_string(char* text) { std::free(text); }

fs_status fs_tunnel_system_parse(const char* json, fs_tunnel_system** out) {
  if (!json) return nullArgument("json");
  return makeHandle(out, [&] { return framespace::tunnelSystemFromJson(framespace::parseJsonText(json)); });
}

fs_status fs_tunnel_system_to_json(const fs_tunnel_system* system, char** out) {
  return writeJson(system, out);
}

fs_status fs_tunnel_system_size(const fs_tunnel_system* system, size_t* out) {
  if (!system) return nullArgument("system");
  if (!out) return nullArgument("out");
  *out = system->value.size();
  return FS_OK;
}

void fs_tunnel_system_free(fs_tunnel_system* system) { delete system; }

fs_status fs_prolif_base_parse(const char* json, fs_prolif_base** out) {
  if (!json) return nullArgument("json");
  return makeHandle(out, [&] { return framespace::baseFromJson(framespace::parseJsonText(json)); });
}

fs_status fs_prolif_base_to_json(const fs_prolif_base* base, char** out) { return writeJson(base, out); }

void fs_prolif_base_free(fs_prolif_base* base) { delete base; }

fs_status fs_tunnel_space_build(const fs_tunnel_system* system, fs_tunnel_space** out) {
  if (!system) return nullArgument("system");
  return makeHandle(out, [&] { return framespace::buildTunnelSpace(system->value); });
}

fs_status fs_tunnel_space_parse(const char* json, fs_tunnel_space** out) {
  if (!json) return nullArgument("json");
  return makeHandle(out, [&] { return framespace::tunnelSpaceFromJson(framespace::parseJsonText(json)); });
}

fs_status fs_tunnel_space_to_json(const fs_tunnel_space* space, char** out) { return writeJson(space, out); }

fs_status fs_tunnel_space_point_count(const fs_tunnel_space* space, size_t* out) {
  if (!space) return nullArgument("space");
  if (!out) return nullArgument("out");
  *out = space->value.points.size();
  return FS_OK;
}

fs_status fs_tunnel_space_distance(const fs_tunnel_space* space, size_t p, size_t q, char** out) {
  if (!space) return nullArgument("space");
  if (!out) return nullArgument("out");
  return guarded([&] {
    const auto& metric = space->value.metric;
    if (p >= metric.size() || q >= metric.size()) {
      framespace::fail(ErrorCode::InvalidInput, "point index out of range");
    }
    *out = copyString(metric.at(p, q).str());
    return FS_OK;
  });
}

void fs_tunnel_space_free(fs_tunnel_space* space) { delete space; }

fs_status fs_prolif_space_build(const fs_prolif_base* base, fs_prolif_space** out) {
  if (!base) return nullArgument("base");
  return makeHandle(out, [&] { return framespace::buildProlifSpace(base->value); });
}

fs_status fs_prolif_space_parse(const char* json, fs_prolif_space** out) {
  if (!json) return nullArgument("json");
  return makeHandle(out, [&] { return framespace::prolifSpaceFromJson(framespace::parseJsonText(json)); });
}

fs_status fs_prolif_space_to_json(const fs_prolif_space* space, char** out) { return writeJson(space, out); }

fs_status fs_prolif_space_point_count(const fs_prolif_space* space, size_t* out) {
  if (!space) return nullArgument("space");
  if (!out) return nullArgument("out");
  *out = space->value.foci.size();
  return FS_OK;
}

void fs_prolif_space_free(fs_prolif_space* space) { delete space; }

fs_status fs_functor_f(const fs_tunnel_space* space, fs_prolif_space** out) {
  if (!space) return nullArgument("space");
  return makeHandle(out, [&] { return framespace::functorF(space->value).space; });
}

fs_status fs_functor_g(const fs_prolif_space* space, fs_tunnel_space** out) {
  if (!space) return nullArgument("space");
  return makeHandle(out, [&] { return framespace::functorG(space->value).space; });
}

fs_status fs_tunnel_round_trip(const fs_tunnel_space* space, int* ok, char** diff) {
  return roundTrip(space, ok, diff);
}

fs_status fs_prolif_round_trip(const fs_prolif_space* space, int* ok, char** diff) {
  return roundTrip(space, ok, diff);
}

fs_status fs_build(const char* input, const fs_options* options, char** report) {
  return runReport(framespace::buildReport, input, options, report);
}

fs_status fs_points(const char* input, const fs_options* options, char** report) {
  return runReport(framespace::pointsReport, input, options, report);
}

fs_status fs_metric(const char* input, const fs_options* options, char** report) {
  return runReport(framespace::metricReport, input, options, report);
}

fs_status fs_laplacian(const char* input, const fs_options* options, char** report) {
  return runReport(framespace::laplacianReport, input, options, report);
}

fs_status fs_spectrum(const char* input, const fs_options* options, char** report) {
  return runReport(framespace::spectrumReport, input, options, report);
}

fs_status fs_check_equivalence(const char* input, const fs_options* options, char** report) {
  return runReport(framespace::equivalenceReport, input, options, report);
}

fs_status fs_check_equivalence_random(size_t count, const fs_options* options, char** report) {
  if (!report) return nullArgument("report");
  *report = nullptr;
  return guarded([&] { return emitReport(framespace::randomEquivalenceReport(count, optionsOf(options)), report); });
}

fs_status fs_check_morphism(const char* input, const fs_options* options, char** report) {
  return runReport(framespace::morphismReport, input, options, report);
}

fs_status fs_check_morphism_random(size_t count, const fs_options* options, char** report) {
  if (!report) return nullArgument("report");
  *report = nullptr;
  return guarded([&] { return emitReport(framespace::randomMorphismReport(count, optionsOf(options)), report); });
}

fs_status fs_generate_graph(const char* graph, const char* variant, const fs_options* options,
                            char** system) {
  if (!graph) return nullArgument("graph");
  if (!variant) return nullArgument("variant");
  if (!system) return nullArgument("system");
  *system = nullptr;
  return guarded([&] {
    *system = copyString(
        framespace::generateGraphSystem(framespace::parseJsonText(graph), variant, optionsOf(options)).dump());
    return FS_OK;
  });
}

fs_status fs_generate_interval(unsigned n, const char* variant, char** system) {
  if (!variant) return nullArgument("variant");
  if (!system) return nullArgument("system");
  *system = nullptr;
  return guarded([&] {
    *system = copyString(framespace::generateIntervalSystem(n, variant).dump());
    return FS_OK;
  });
}

fs_status fs_generate_locale(const char* frame, const char* weights, char** system) {
  if (!frame) return nullArgument("frame");
  if (!weights) return nullArgument("weights");
  if (!system) return nullArgument("system");
  *system = nullptr;
  return guarded([&] {
    *system = copyString(framespace::generateLocaleSystem(framespace::parseJsonText(frame),
                                                          framespace::parseJsonText(weights))
                             .dump());
    return FS_OK;
  });
}

fs_status fs_oracle_points(const char* input, const fs_options* options, char** report) {
  return runReport(framespace::pointsOracleReport, input, options, report);
}

fs_status fs_oracle_shortest_path(const char* input, const fs_options* options, char** report) {
  return runReport(framespace::shortestPathOracleReport, input, options, report);
}

fs_status fs_oracle_nilpotent(const char* input, const fs_options* options, char** report) {
  return runReport(framespace::nilpotentOracleReport, input, options, report);
}

}  // extern "C"
