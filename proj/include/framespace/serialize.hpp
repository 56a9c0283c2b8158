#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <string_view>
#include <vector>

#include "framespace/equivalence.hpp"
#include "framespace/models.hpp"
#include "framespace/spectral.hpp"

namespace framespace {

using Json = nlohmann::ordered_json;

// Parses JSON text; syntax errors become Parse errors with line and column.
Json parseJsonText(std::string_view text);
Json readJsonFile(const std::string& path);

// Schema errors (wrong type, missing field) are Parse errors naming the
// offending path; semantic errors come from the constructors as Validation.
Value valueFromJson(const Json& j, const std::string& where);
Json toJson(const Value& v);

Json toJson(const TunnelSystem& system);
TunnelSystem tunnelSystemFromJson(const Json& j);

Json toJson(const ProliferativeBase& base);
ProliferativeBase baseFromJson(const Json& j);

// {"carrier", "join_irreducibles", "opens"}; opens are omitted when the
// frame has more than Frame::kDefaultOpenLimit of them.
Json toJson(const Frame& frame);
Frame frameFromJson(const Json& j);

Json pointsJson(const Frame& frame, std::span<const Point> pts);
std::vector<Point> pointsFromJson(const Json& j, const Frame& frame);

Json toJson(const MetricTable& table);
MetricTable metricFromJson(const Json& j, size_t size, const std::string& where);

Json toJson(const TunnelFrameSpace& space);
Json toJson(const ProlifFrameSpace& space);
// Stored spaces are loaded as written: frame, points and both tables are
// taken from the file, not recomputed.
TunnelFrameSpace tunnelSpaceFromJson(const Json& j);
ProlifFrameSpace prolifSpaceFromJson(const Json& j);

Json toJson(const OperatorMatrix& m);
// Each value rounded to 12 significant digits.
Json spectrumJson(const Spectrum& s);

Json toJson(const SubstructureRelation& sub, const Carrier& tunnels);
SubstructureRelation substructureFromJson(const Json& j, const Carrier& tunnels);

// {"preimage_of": {"x": "y" | null}} for a carrier map from target's
// carrier into source's carrier, or {"map": [[[ids], [ids]], ...]} listing
// every source open with its image.
FrameHom homFromJson(const Json& j, const Frame& source, const Frame& target);
Json toJson(const FrameHom& hom);

WeightedGraph graphFromJson(const Json& j, bool allowZeroWeights = false);
Json toJson(const WeightedGraph& g);
// {"a": "1", "b": "2"} keyed by carrier identifiers.
std::vector<mpq_class> weightsFromJson(const Json& j, const Carrier& carrier);

enum class InputKind { TunnelSystem, ProlifBase, TunnelSpace, ProlifSpace, Graph, Frame, Morphism };

InputKind detectKind(const Json& j);
const char* kindName(InputKind kind);

}  // namespace framespace
