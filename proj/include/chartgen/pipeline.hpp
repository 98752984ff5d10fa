#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chartgen/chart.hpp"
#include "chartgen/layout.hpp"
#include "chartgen/metadata.hpp"
#include "chartgen/render.hpp"
#include "chartgen/style.hpp"
#include "chartgen/vocab.hpp"

namespace chartgen::pipeline {

inline constexpr int kMaxAttempts = 8;
inline constexpr std::size_t kShardSize = 10'000;

// Every "occasionally" in the generator, overridable from the config file.
struct Probabilities {
  layout::StyleProbabilities style;
  double outlier = 0.1;
  double line_markers = 0.5;
  double line_smoothing = 0.3;
  double dot_label_omission = 0.3;
  double dot_ytick_removal = 0.3;
};

struct GenConfig {
  std::uint64_t root_seed = 0;
  std::size_t total = 0;
  std::array<double, 5> type_weights{1, 1, 1, 1, 1};  // indexed like kAllPlotTypes
  std::filesystem::path output_dir = "chartgen_out";
  bool emit_png = false;
  bool overwrite = false;
  std::size_t workers = 1;
  // Empty paths use the bundled tables.
  std::filesystem::path places_path;
  std::filesystem::path months_path;
  std::filesystem::path days_path;
  std::filesystem::path word_groups_path;
  Probabilities probs;

  // Throws ConfigError.
  void validate() const;
};

// `key = value` lines, '#' comments. Keys mirror GenConfig fields:
// seed, total, types, out, png, overwrite, workers, places, months, days,
// word_groups, prob.ticks, prob.grid, prob.spines, prob.outlier,
// prob.line_markers, prob.line_smoothing, prob.dot_label_omission,
// prob.dot_ytick_removal. Throws ConfigError.
GenConfig parse_config(std::string_view text, GenConfig base = {});
GenConfig load_config(const std::filesystem::path& path, GenConfig base = {});
// "vbar=1,hbar=2,..." ; unspecified types get weight 0.
std::array<double, 5> parse_type_weights(std::string_view text);

// Shared read-only inputs of the generator.
struct Resources {
  vocab::LabelCatalog catalog;
  std::vector<vocab::WordGroup> groups;

  static Resources bundled();
  static Resources from_config(const GenConfig& config);
};

// Seed of chart `index`: mix_seed(root_seed, index).
std::uint64_t chart_seed(std::uint64_t root_seed, std::uint64_t index);
// Attempt 0 uses the chart seed itself; attempt a > 0 uses mix_seed(chart_seed, a).
std::uint64_t attempt_seed(std::uint64_t chart_seed, int attempt);

// Exact per-type counts for `total` charts (largest remainder).
std::array<std::size_t, 5> type_counts(std::size_t total, const std::array<double, 5>& weights);
// Deterministic stratified assignment: a keyed bijection of [0, total)
// scatters the indices over contiguous per-type blocks.
PlotType assign_type(std::size_t index, std::size_t total, const std::array<double, 5>& weights,
                     std::uint64_t root_seed);

// Builds a full chart for one plot type from a seed. Layout failures surface
// as LayoutError subclasses.
struct BuiltChart {
  ChartSpec spec;
  layout::Geometry geometry;
};
BuiltChart build_chart(PlotType type, std::uint64_t seed, const Resources& resources,
                       const Probabilities& probs);

struct ChartResult {
  ChartSpec spec;
  render::SvgDocument svg;
  metadata::GroundTruth ground_truth;
  std::uint64_t chart_seed = 0;
  std::uint64_t seed = 0;  // seed of the successful attempt
  int attempt = 0;
};

struct GenerationFailed : Error {
  GenerationFailed(std::size_t index, const std::string& why)
      : Error("chart " + std::to_string(index) + ": " + why), index(index) {}
  std::size_t index;
};

// Pure function of (root_seed, index, config). Throws GenerationFailed after
// kMaxAttempts layout failures.
ChartResult generate_one(std::uint64_t root_seed, std::size_t index, const GenConfig& config,
                         const Resources& resources);

struct ManifestRecord {
  std::string id;
  PlotType plot_type = PlotType::vbar;
  std::string svg_path;  // relative to the manifest directory
  std::string txt_path;
  std::optional<std::string> png_path;
  std::string metadata;
  std::uint64_t seed = 0;
  std::uint64_t chart_seed = 0;
  int attempt = 0;
  std::string style_digest;
};

std::string to_json_line(const ManifestRecord& record);
// Throws ConfigError on a malformed row.
ManifestRecord parse_manifest_line(std::string_view line);

struct FailedIndex {
  std::size_t index;
  std::string reason;
};

struct GenerationSummary {
  std::filesystem::path manifest_path;
  std::size_t written = 0;
  std::vector<FailedIndex> failures;
  std::array<std::size_t, 5> per_type{};
  double seconds = 0;
};

// Writes {out}/shard_NNNNN/{id}.svg|.txt[|.png] and {out}/manifest.jsonl.
// Refuses a non-empty output directory unless config.overwrite is set.
// On I/O failure the manifest is left as manifest.jsonl.partial.
GenerationSummary generate_dataset(const GenConfig& config);
GenerationSummary generate_dataset(const GenConfig& config, const Resources& resources);

inline constexpr const char* kManifestName = "manifest.jsonl";

// ---- verification ----------------------------------------------------------

struct Violation {
  std::string id;
  std::string invariant;
  std::string detail;
};

struct VerifyReport {
  std::size_t records = 0;
  std::vector<Violation> violations;
  std::map<std::string, std::size_t> counts;  // per invariant

  bool ok() const { return violations.empty(); }
  void add(std::string id, std::string invariant, std::string detail);
};

// Re-checks a chart from its artifacts alone: SVG text plus metadata string.
// Appends to `report` under `id`.
void verify_chart(std::string_view id, PlotType type, std::string_view svg_text,
                  const metadata::GroundTruth& gt, VerifyReport& report);

// Throws IoError when the manifest cannot be read.
VerifyReport verify_dataset(const std::filesystem::path& manifest_path);

}  // namespace chartgen::pipeline
