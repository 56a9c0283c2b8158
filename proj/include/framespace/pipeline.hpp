#pragma once

#include <cstdint>
#include <string>

#include "framespace/serialize.hpp"

namespace framespace {

struct PipelineOptions {
  uint64_t seed = 0;
  bool allowZeroWeights = false;
  bool timings = false;
};

// Reports are JSON objects. Reports that run checks carry
// "checks": [{"name", "status": "PASS" | "FAIL" | "SKIP", "detail"}].
// Phase timings, when requested, go under "timings_ms" and nowhere else.

// Tunnel system, base or stored space → full space dump.
Json buildReport(const Json& input, const PipelineOptions& options = {});
Json pointsReport(const Json& input, const PipelineOptions& options = {});
Json metricReport(const Json& input, const PipelineOptions& options = {});
Json laplacianReport(const Json& input, const PipelineOptions& options = {});
// When the eigensolver gives up, the report still lists what converged and
// carries "error": {"code": "numerical-failure", "message"}.
Json spectrumReport(const Json& input, const PipelineOptions& options = {});
Json equivalenceReport(const Json& input, const PipelineOptions& options = {});
// Seeded harness over `count` random instances.
Json randomEquivalenceReport(size_t count, const PipelineOptions& options = {});
Json morphismReport(const Json& input, const PipelineOptions& options = {});
Json randomMorphismReport(size_t count, const PipelineOptions& options = {});

Json generateGraphSystem(const Json& graph, const std::string& variant,
                         const PipelineOptions& options = {});
Json generateIntervalSystem(unsigned n, const std::string& variant);
Json generateLocaleSystem(const Json& frame, const Json& weights);

Json pointsOracleReport(const Json& input, const PipelineOptions& options = {});
Json shortestPathOracleReport(const Json& input, const PipelineOptions& options = {});
Json nilpotentOracleReport(const Json& input, const PipelineOptions& options = {});

// True when the report has a FAIL check or a DISAGREE verdict.
bool reportFailed(const Json& report);
// Error recorded inside a report (see spectrumReport).
bool reportHasError(const Json& report);

}  // namespace framespace
