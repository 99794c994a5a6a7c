#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "richness/estimate.hpp"
#include "richness/fieldsim.hpp"
#include "richness/inference.hpp"
#include "richness/sample.hpp"

namespace richness::io {

enum class InputFormat { csv, tsv };
enum class OutputFormat { table, json, csv };

inline constexpr int kReportSchemaVersion = 1;

/// Two columns (label, count) separated by ',' or '\t'. An optional header is
/// recognised on the first non-blank line when its count column is not an
/// integer. Blank lines are skipped; CR, LF and CRLF endings are accepted and
/// fields are whitespace-trimmed.
/// Throws ParseError(line, reason), then the errors of validate().
AbundanceSample parse_abundance(std::string_view text, InputFormat format = InputFormat::csv);

/// Chooses tsv for a ".tsv" suffix, csv otherwise.
InputFormat input_format_for(std::string_view path);

struct SampleSummary {
  std::vector<CategoryCount> entries;
  std::uint64_t n = 0;
  std::uint64_t c = 0;
  FrequencyCounts frequencies;

  friend bool operator==(const SampleSummary&, const SampleSummary&) = default;
};

struct Provenance {
  std::string tool;
  std::string version;
  int schema_version = kReportSchemaVersion;
  std::uint64_t seed = 0;
  std::uint32_t replicates = 0;
  double risk = 0.05;
  inference::Sidedness sidedness = inference::Sidedness::two_sided;

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

/// Estimates table plus the upper-bound table, with enough provenance to
/// rerun the stochastic rows.
struct ReportDocument {
  SampleSummary sample;
  std::vector<RichnessEstimate> estimates;
  std::vector<inference::ConfidenceAnswer> answers;
  Provenance provenance;

  friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

SampleSummary summarize(const AbundanceSample& s);

struct ReportRequest {
  std::vector<MethodSpec> methods = default_methods();
  EstimateOptions options;
  double risk = 0.05;
  inference::Sidedness sidedness = inference::Sidedness::two_sided;
};

ReportDocument build_report(const AbundanceSample& s, const ReportRequest& request);

/// table: aligned columns, every real printed fixed with 4 decimals.
/// json: schema "richness-report", version kReportSchemaVersion.
/// csv: one line per estimate and per answer under a shared header.
std::string render_report(const ReportDocument& doc, OutputFormat format);

/// Inverse of render_report(doc, json). Throws ParseError on schema mismatch.
ReportDocument report_from_json(std::string_view text);

/// Experiment description read from a JSON scenario file.
struct Scenario {
  std::string name;
  fieldsim::FieldModel model;
  std::uint64_t sample_size = 0;
  std::uint64_t trials = 1000;
  std::uint64_t seed = 0;
  double risk = 0.05;
  inference::Sidedness sidedness = inference::Sidedness::two_sided;
  std::uint32_t replicates = bootstrap::kDefaultReplicates;
  std::vector<MethodSpec> methods;
};

/// Throws ParseError for malformed JSON or missing keys.
Scenario parse_scenario(std::string_view text);

std::string render_coverage(const Scenario& scenario, const fieldsim::CoverageReport& report,
                            OutputFormat format);

OutputFormat parse_output_format(const std::string& text);

}  // namespace richness::io
