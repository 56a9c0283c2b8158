// Command-line front end. Talks to the engine only through the C API.
#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "framespace/framespace.h"

namespace {

using Json = nlohmann::ordered_json;

struct Settings {
  bool pretty = false;
  bool timings = false;
  unsigned long long seed = 0;
  bool allowZeroWeights = false;
};

int fail(int status, const std::string& message) {
  std::cerr << "error: " << message << "\n";
  return status;
}

bool readFile(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  out = buffer.str();
  return true;
}

std::string cell(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

bool isTable(const Json& v) {
  if (!v.is_array() || v.empty()) return false;
  for (const auto& row : v) {
    if (!row.is_array() || row.size() != v.size()) return false;
  }
  return true;
}

void printTable(std::ostream& os, const Json& rows, const std::vector<std::string>& labels) {
  std::vector<size_t> width(rows.size() + 1, 0);
  for (size_t r = 0; r < rows.size(); ++r) {
    if (r < labels.size()) width[0] = std::max(width[0], labels[r].size());
    for (size_t c = 0; c < rows[r].size(); ++c) width[c + 1] = std::max(width[c + 1], cell(rows[r][c]).size());
  }
  for (size_t c = 0; c < labels.size() && c < rows.size(); ++c) width[c + 1] = std::max(width[c + 1], labels[c].size());
  if (!labels.empty()) {
    os << "  " << std::string(width[0], ' ');
    for (size_t c = 0; c < rows.size(); ++c) os << "  " << std::string(width[c + 1] - labels[c].size(), ' ') << labels[c];
    os << "\n";
  }
  for (size_t r = 0; r < rows.size(); ++r) {
    os << "  ";
    if (!labels.empty()) os << labels[r] << std::string(width[0] - labels[r].size(), ' ');
    for (size_t c = 0; c < rows[r].size(); ++c) {
      const std::string s = cell(rows[r][c]);
      os << "  " << std::string(width[c + 1] - s.size(), ' ') << s;
    }
    os << "\n";
  }
}

void printPretty(std::ostream& os, const Json& report, const std::string& indent = "") {
  if (!report.is_object()) {
    os << indent << report.dump(2) << "\n";
    return;
  }
  for (const auto& [key, value] : report.items()) {
    if (key == "checks" && value.is_array()) {
      for (const auto& c : value) {
        os << indent << c.value("status", "?") << "  " << c.value("name", "?");
        if (c.contains("detail")) os << "  " << (c["detail"].is_string() ? c["detail"].get<std::string>() : c["detail"].dump());
        os << "\n";
      }
    } else if ((key == "raw_distance" || key == "metric") && isTable(value)) {
      os << indent << key << ":\n";
      printTable(os, value, {});
    } else if (value.is_object() && value.contains("basis") && value.contains("entries")) {
      os << indent << key << ":\n";
      printTable(os, value["entries"], value["basis"].get<std::vector<std::string>>());
    } else if (value.is_array() && !value.empty() && value[0].is_object() && value[0].contains("re")) {
      os << indent << key << ":\n";
      for (const auto& z : value) {
        const double re = z["re"].get<double>();
        const double im = z["im"].get<double>();
        char buffer[96];
        std::snprintf(buffer, sizeof buffer, "  %.12g %c %.12gi", re, im < 0 ? '-' : '+', im < 0 ? -im : im);
        os << indent << buffer << "\n";
      }
    } else if (value.is_object() && key != "frame" && key != "system" && key != "base") {
      os << indent << key << ":\n";
      printPretty(os, value, indent + "  ");
    } else {
      os << indent << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    }
  }
}

// Emits a report handed back by the library and turns the status into the
// process exit code.
int finish(fs_status status, char* text, const Settings& settings) {
  if (!text) return fail(status, fs_last_error());
  Json report = Json::parse(text);
  fs_free_string(text);
  if (auto it = report.find("timings_ms"); it != report.end()) {
    for (const auto& [phase, ms] : it->items()) std::cerr << "timing " << phase << " " << ms.get<double>() << " ms\n";
    report.erase(it);
  }
  if (settings.pretty) {
    printPretty(std::cout, report);
  } else {
    std::cout << report.dump() << "\n";
  }
  if (status != FS_OK && status != FS_CHECK_FAILED) std::cerr << "error: " << fs_last_error() << "\n";
  return status;
}

fs_options optionsOf(const Settings& s) {
  return fs_options{s.seed, s.allowZeroWeights ? 1 : 0, s.timings ? 1 : 0};
}

using ReportCall = fs_status (*)(const char*, const fs_options*, char**);

int runOnFile(ReportCall call, const std::string& path, const Settings& settings) {
  std::string input;
  if (!readFile(path, input)) return fail(FS_ERR_INVALID, "cannot read '" + path + "'");
  char* text = nullptr;
  const fs_options options = optionsOf(settings);
  const fs_status status = call(input.c_str(), &options, &text);
  return finish(status, text, settings);
}

// "tunnel" matches tunnel systems and spaces, "prolif" bases and spaces.
int checkKind(const std::string& path, const std::string& kind) {
  if (kind.empty()) return 0;
  std::string input;
  if (!readFile(path, input)) return fail(FS_ERR_INVALID, "cannot read '" + path + "'");
  Json j;
  try {
    j = Json::parse(input);
  } catch (const Json::parse_error&) {
    return 0;  // the library reports the syntax error with its position
  }
  const bool tunnel = j.contains("tunnels") || j.value("kind", "") == "tunnel-space";
  const bool prolif = j.contains("distinctions") || j.value("kind", "") == "prolif-space";
  if ((kind == "tunnel" && !tunnel) || (kind == "prolif" && !prolif)) {
    return fail(FS_ERR_INVALID, "input is not a " + kind + " description");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite frame-space engine: builds tunnel and proliferative frame-spaces and checks "
               "their equivalence, Laplacians and spectra."};
  app.require_subcommand(1);
  app.fallthrough();
  Settings settings;
  app.add_flag("--pretty", settings.pretty, "Human-readable output instead of JSON");
  app.add_flag("--timings", settings.timings, "Print per-phase timings to stderr");
  app.add_option("--seed", settings.seed, "Seed for randomized harnesses")->default_val(0);

  std::string input;
  std::string kind;
  int exitCode = 0;

  auto* build = app.add_subcommand("build", "Build a frame-space and print frame, points and metrics");
  build->add_option("input", input, "Tunnel system, base or stored space (JSON)")->required();
  build->add_option("--kind", kind, "Expected input kind")->check(CLI::IsMember({"tunnel", "prolif"}));
  build->callback([&] {
    exitCode = checkKind(input, kind);
    if (exitCode == 0) exitCode = runOnFile(fs_build, input, settings);
  });

  const std::pair<const char*, ReportCall> simple[] = {
      {"points", fs_points}, {"metric", fs_metric}, {"laplacian", fs_laplacian}, {"spectrum", fs_spectrum}};
  const char* simpleHelp[] = {"List the points of the generated frame",
                              "Print raw and closed distance tables",
                              "Print both Laplacians, the substructure relation and the unitary",
                              "Print both spectra side by side with their deviation"};
  for (size_t i = 0; i < 4; ++i) {
    auto* sub = app.add_subcommand(simple[i].first, simpleHelp[i]);
    sub->add_option("input", input, "Input file (JSON)")->required();
    const ReportCall call = simple[i].second;
    sub->callback([&, call] { exitCode = runOnFile(call, input, settings); });
  }

  size_t randomCount = 0;
  auto* equivalence = app.add_subcommand("check-equivalence", "Round-trip, conjugation and spectral checks");
  equivalence->add_option("input", input, "Tunnel system, base or stored space (JSON)");
  equivalence->add_option("--random", randomCount, "Run the seeded harness on N random instances instead");
  equivalence->callback([&] {
    if (randomCount > 0) {
      char* text = nullptr;
      const fs_options options = optionsOf(settings);
      const fs_status status = fs_check_equivalence_random(randomCount, &options, &text);
      exitCode = finish(status, text, settings);
    } else if (!input.empty()) {
      exitCode = runOnFile(fs_check_equivalence, input, settings);
    } else {
      exitCode = fail(FS_ERR_INVALID, "check-equivalence needs an input file or --random N");
    }
  });

  auto* morphism = app.add_subcommand("check-morphism", "Check a morphism and its transport");
  morphism->add_option("input", input, "Morphism description (JSON)");
  morphism->add_option("--random", randomCount, "Run the seeded harness on N generated morphisms instead");
  morphism->callback([&] {
    if (randomCount > 0) {
      char* text = nullptr;
      const fs_options options = optionsOf(settings);
      const fs_status status = fs_check_morphism_random(randomCount, &options, &text);
      exitCode = finish(status, text, settings);
    } else if (!input.empty()) {
      exitCode = runOnFile(fs_check_morphism, input, settings);
    } else {
      exitCode = fail(FS_ERR_INVALID, "check-morphism needs an input file or --random N");
    }
  });

  auto* gen = app.add_subcommand("gen", "Generate model tunnel systems");
  gen->require_subcommand(1);
  std::string file;
  std::string variant;
  std::string frameFile;
  std::string weightsFile;
  unsigned resolution = 0;

  auto* graph = gen->add_subcommand("graph", "Tunnel system from a weighted graph");
  graph->add_option("--file", file, "Graph JSON {\"vertices\", \"edges\"}")->required();
  graph->add_option("--variant", variant, "stars or edges")->default_val("stars")->check(CLI::IsMember({"stars", "edges"}));
  graph->add_flag("--allow-zero-weights", settings.allowZeroWeights, "Accept zero edge weights");
  graph->callback([&] {
    std::string text;
    if (!readFile(file, text)) {
      exitCode = fail(FS_ERR_INVALID, "cannot read '" + file + "'");
      return;
    }
    char* out = nullptr;
    const fs_options options = optionsOf(settings);
    const fs_status status = fs_generate_graph(text.c_str(), variant.c_str(), &options, &out);
    exitCode = finish(status, out, settings);
  });

  auto* interval = gen->add_subcommand("interval", "Grid interval model");
  interval->add_option("--n", resolution, "Grid resolution")->required()->check(CLI::PositiveNumber);
  interval->add_option("--variant", variant, "hull or intersection")->default_val("hull")->check(CLI::IsMember({"hull", "intersection"}));
  interval->callback([&] {
    char* out = nullptr;
    const fs_status status = fs_generate_interval(resolution, variant.c_str(), &out);
    exitCode = finish(status, out, settings);
  });

  auto* locale = gen->add_subcommand("locale", "Regular elements of a frame with a weight measure");
  locale->add_option("--frame", frameFile, "Frame JSON")->required();
  locale->add_option("--weights", weightsFile, "Weights JSON keyed by carrier element")->required();
  locale->callback([&] {
    std::string frameText;
    std::string weightsText;
    if (!readFile(frameFile, frameText) || !readFile(weightsFile, weightsText)) {
      exitCode = fail(FS_ERR_INVALID, "cannot read frame or weights file");
      return;
    }
    char* out = nullptr;
    const fs_status status = fs_generate_locale(frameText.c_str(), weightsText.c_str(), &out);
    exitCode = finish(status, out, settings);
  });

  auto* oracle = app.add_subcommand("oracle", "Compare a fast path with its brute-force oracle");
  oracle->require_subcommand(1);
  const std::pair<const char*, ReportCall> oracles[] = {{"points", fs_oracle_points},
                                                        {"shortest-path", fs_oracle_shortest_path},
                                                        {"nilpotent", fs_oracle_nilpotent}};
  const char* oracleHelp[] = {"Join-irreducible points against brute-force filter search",
                              "Star-model metric against Dijkstra shortest paths",
                              "Exact nilpotency against the float spectrum"};
  for (size_t i = 0; i < 3; ++i) {
    auto* sub = oracle->add_subcommand(oracles[i].first, oracleHelp[i]);
    sub->add_option("input", input, "Input file (JSON)")->required();
    sub->add_flag("--allow-zero-weights", settings.allowZeroWeights, "Accept zero edge weights");
    const ReportCall call = oracles[i].second;
    sub->callback([&, call] { exitCode = runOnFile(call, input, settings); });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : FS_ERR_PARSE;
  }
  return exitCode;
}
