#include "richness/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"

#include "richness/error.hpp"
#include "richness/version.hpp"

namespace richness::io {
namespace {

using json = nlohmann::ordered_json;

constexpr const char* kReportSchema = "richness-report";
constexpr const char* kCoverageSchema = "richness-coverage";

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n\v\f");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n\v\f");
  return s.substr(first, last - first + 1);
}

std::string_view unquote(std::string_view s) {
  if (s.size() >= 2 && s.front() == '"' && s.back() == '"') return s.substr(1, s.size() - 2);
  return s;
}

bool parse_integer(std::string_view s, std::int64_t& out) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size() && !s.empty();
}

// Splits on CR, LF or CRLF.
std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '\n' || text[i] == '\r') {
      lines.push_back(text.substr(start, i - start));
      if (text[i] == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
      start = i + 1;
    }
  }
  if (start < text.size()) lines.push_back(text.substr(start));
  return lines;
}

std::string fixed4(double v) {
  if (std::abs(v) < 0.00005) v = 0.0;  // no "-0.0000"
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

// Shortest representation that reads back to the same double.
std::string exact(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

std::string pad(std::string s, std::size_t width, bool left = false) {
  if (s.size() >= width) return s;
  return left ? s + std::string(width - s.size(), ' ') : std::string(width - s.size(), ' ') + s;
}

std::string param_text(const ParamValue& v) {
  if (const auto* i = std::get_if<std::int64_t>(&v)) return std::to_string(*i);
  if (const auto* d = std::get_if<double>(&v)) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", *d);
    return buf;
  }
  return std::get<std::string>(v);
}

json param_json(const ParamValue& v) {
  return std::visit([](const auto& x) { return json(x); }, v);
}

ParamValue param_from_json(const json& j) {
  if (j.is_number_integer()) return j.get<std::int64_t>();
  if (j.is_number_float()) return j.get<double>();
  if (j.is_string()) return j.get<std::string>();
  throw ParseError(0, "unsupported parameter value");
}

std::string method_label(const std::string& tag) {
  if (tag == "fisher") return "Fisher";
  if (tag == "bootstrap") return "Bootstrap";
  if (tag == "bootstrap-exact") return "Bootstrap (exact)";
  if (tag.starts_with("jackknife:")) return "Jackknife order " + tag.substr(10);
  return tag;
}

}  // namespace

AbundanceSample parse_abundance(std::string_view text, InputFormat format) {
  if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);
  const char sep = format == InputFormat::csv ? ',' : '\t';
  std::vector<std::pair<std::string, std::int64_t>> rows;
  bool first_content = true;
  std::size_t line_no = 0;
  for (auto line : split_lines(text)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto cut = line.find(sep);
    if (cut == std::string_view::npos) throw ParseError(line_no, "expected two columns");
    const auto label = trim(line.substr(0, cut));
    const auto count_text = unquote(trim(line.substr(cut + 1)));
    if (count_text.find(sep) != std::string_view::npos) {
      throw ParseError(line_no, "expected two columns");
    }
    std::int64_t count = 0;
    if (!parse_integer(count_text, count)) {
      if (first_content) {
        first_content = false;  // header row
        continue;
      }
      throw ParseError(line_no, "count '" + std::string(count_text) + "' is not an integer");
    }
    first_content = false;
    if (label.empty()) throw ParseError(line_no, "empty label");
    rows.emplace_back(std::string(unquote(label)), count);
  }
  if (rows.empty()) throw ParseError(line_no, "no data rows");
  return validate(std::move(rows));
}

InputFormat input_format_for(std::string_view path) {
  return path.ends_with(".tsv") ? InputFormat::tsv : InputFormat::csv;
}

SampleSummary summarize(const AbundanceSample& s) {
  return {s.entries(), s.total(), s.categories(), frequency_counts(s)};
}

ReportDocument build_report(const AbundanceSample& s, const ReportRequest& request) {
  ReportDocument doc;
  doc.sample = summarize(s);
  for (const auto& m : request.methods) {
    doc.estimates.push_back(estimate_with(s, m, request.options));
  }
  doc.answers = answers_for(doc.estimates, request.risk, request.sidedness);
  doc.provenance = {kToolName,
                    kVersion,
                    kReportSchemaVersion,
                    request.options.bootstrap.seed,
                    request.options.bootstrap.replicates,
                    request.risk,
                    request.sidedness};
  return doc;
}

namespace {

std::string render_table(const ReportDocument& doc) {
  std::ostringstream os;
  os << "Sample: n = " << doc.sample.n << ", C = " << doc.sample.c << "\n";
  os << "Counts:";
  for (const auto& e : doc.sample.entries) os << " " << e.label << "=" << e.count;
  os << "\nFrequency counts:";
  for (auto [j, fj] : doc.sample.frequencies) os << " f" << j << "=" << fj;
  os << "\n\nEstimates for the number of categories\n";
  os << pad("Method", 20, true) << pad("Estimate", 12) << pad("Variance", 12)
     << pad("Std.dev", 12) << "  Details\n";
  for (const auto& row : doc.estimates) {
    os << pad(method_label(row.method), 20, true) << pad(fixed4(row.estimate), 12)
       << pad(fixed4(row.variance), 12) << pad(fixed4(std::sqrt(row.variance)), 12) << " ";
    for (const auto& [key, value] : row.params) os << " " << key << "=" << param_text(value);
    os << "\n";
  }
  os << "\nHow many categories at most (risk " << fixed4(doc.provenance.risk) << ")\n";
  os << pad("Method", 20, true) << pad("Sided", 11, true) << pad("Estimate", 10)
     << pad("Std.dev", 10) << pad("Quantile", 10) << pad("Bound", 10) << pad("C_max", 7)
     << "\n";
  for (const auto& a : doc.answers) {
    os << pad(method_label(a.method), 20, true) << pad(to_string(a.sidedness), 11, true)
       << pad(fixed4(a.estimate), 10) << pad(fixed4(a.std_dev), 10)
       << pad(fixed4(a.quantile), 10) << pad(fixed4(a.upper_bound), 10)
       << pad(std::to_string(a.c_max), 7) << "\n";
  }
  os << "\n" << doc.provenance.tool << " " << doc.provenance.version
     << "  seed=" << doc.provenance.seed << " replicates=" << doc.provenance.replicates << "\n";
  return os.str();
}

json report_json(const ReportDocument& doc) {
  json j;
  j["schema"] = kReportSchema;
  j["schema_version"] = doc.provenance.schema_version;
  json sample;
  sample["n"] = doc.sample.n;
  sample["c"] = doc.sample.c;
  sample["entries"] = json::array();
  for (const auto& e : doc.sample.entries) {
    sample["entries"].push_back({{"label", e.label}, {"count", e.count}});
  }
  sample["frequencies"] = json::object();
  for (auto [jj, fj] : doc.sample.frequencies) sample["frequencies"][std::to_string(jj)] = fj;
  j["sample"] = sample;

  j["estimates"] = json::array();
  for (const auto& row : doc.estimates) {
    json params = json::object();
    for (const auto& [key, value] : row.params) params[key] = param_json(value);
    j["estimates"].push_back({{"method", row.method},
                              {"estimate", row.estimate},
                              {"variance", row.variance},
                              {"std_dev", std::sqrt(row.variance)},
                              {"params", params}});
  }
  j["answers"] = json::array();
  for (const auto& a : doc.answers) {
    j["answers"].push_back({{"method", a.method},
                            {"sidedness", to_string(a.sidedness)},
                            {"risk", a.risk},
                            {"estimate", a.estimate},
                            {"std_dev", a.std_dev},
                            {"quantile", a.quantile},
                            {"upper_bound", a.upper_bound},
                            {"c_max", a.c_max}});
  }
  j["provenance"] = {{"tool", doc.provenance.tool},
                     {"version", doc.provenance.version},
                     {"seed", doc.provenance.seed},
                     {"replicates", doc.provenance.replicates},
                     {"risk", doc.provenance.risk},
                     {"sidedness", to_string(doc.provenance.sidedness)}};
  return j;
}

std::string render_csv(const ReportDocument& doc) {
  std::ostringstream os;
  os << "section,method,sidedness,estimate,variance,std_dev,quantile,upper_bound,c_max,risk\n";
  for (const auto& row : doc.estimates) {
    os << "estimate," << row.method << ",," << exact(row.estimate) << ","
       << exact(row.variance) << "," << exact(std::sqrt(row.variance)) << ",,,,\n";
  }
  for (const auto& a : doc.answers) {
    os << "answer," << a.method << "," << to_string(a.sidedness) << "," << exact(a.estimate)
       << "," << exact(a.std_dev * a.std_dev) << "," << exact(a.std_dev) << ","
       << exact(a.quantile) << "," << exact(a.upper_bound) << "," << a.c_max << ","
       << exact(a.risk) << "\n";
  }
  return os.str();
}

}  // namespace

std::string render_report(const ReportDocument& doc, OutputFormat format) {
  switch (format) {
    case OutputFormat::table: return render_table(doc);
    case OutputFormat::json: return report_json(doc).dump(2) + "\n";
    case OutputFormat::csv: return render_csv(doc);
  }
  return {};
}

ReportDocument report_from_json(std::string_view text) {
  try {
    const auto j = json::parse(text);
    if (j.at("schema").get<std::string>() != kReportSchema) {
      throw ParseError(0, "not a richness report");
    }
    ReportDocument doc;
    const auto& sample = j.at("sample");
    doc.sample.n = sample.at("n").get<std::uint64_t>();
    doc.sample.c = sample.at("c").get<std::uint64_t>();
    for (const auto& e : sample.at("entries")) {
      doc.sample.entries.push_back(
          {e.at("label").get<std::string>(), e.at("count").get<std::uint64_t>()});
    }
    for (const auto& [key, value] : sample.at("frequencies").items()) {
      doc.sample.frequencies[std::stoull(key)] = value.get<std::uint64_t>();
    }
    for (const auto& e : j.at("estimates")) {
      RichnessEstimate row;
      row.method = e.at("method").get<std::string>();
      row.estimate = e.at("estimate").get<double>();
      row.variance = e.at("variance").get<double>();
      for (const auto& [key, value] : e.at("params").items()) {
        row.params.emplace_back(key, param_from_json(value));
      }
      doc.estimates.push_back(std::move(row));
    }
    for (const auto& e : j.at("answers")) {
      inference::ConfidenceAnswer a;
      a.method = e.at("method").get<std::string>();
      a.sidedness = inference::parse_sidedness(e.at("sidedness").get<std::string>());
      a.risk = e.at("risk").get<double>();
      a.estimate = e.at("estimate").get<double>();
      a.std_dev = e.at("std_dev").get<double>();
      a.quantile = e.at("quantile").get<double>();
      a.upper_bound = e.at("upper_bound").get<double>();
      a.c_max = e.at("c_max").get<long long>();
      doc.answers.push_back(std::move(a));
    }
    const auto& p = j.at("provenance");
    doc.provenance.tool = p.at("tool").get<std::string>();
    doc.provenance.version = p.at("version").get<std::string>();
    doc.provenance.schema_version = j.at("schema_version").get<int>();
    doc.provenance.seed = p.at("seed").get<std::uint64_t>();
    doc.provenance.replicates = p.at("replicates").get<std::uint32_t>();
    doc.provenance.risk = p.at("risk").get<double>();
    doc.provenance.sidedness = inference::parse_sidedness(p.at("sidedness").get<std::string>());
    return doc;
  } catch (const json::exception& e) {
    throw ParseError(0, e.what());
  } catch (const InvalidInput& e) {
    throw ParseError(0, e.what());
  }
}

Scenario parse_scenario(std::string_view text) {
  try {
    const auto j = json::parse(text);
    Scenario s;
    s.name = j.value("name", std::string("scenario"));
    auto& m = s.model;
    m.kind = fieldsim::parse_field_kind(j.at("model").get<std::string>());
    m.true_categories = j.value("true_categories", std::uint64_t{0});
    m.field_size = j.value("field_size", std::uint64_t{0});
    m.nb_size = j.value("nb_size", 1.0);
    if (j.contains("nb_mean")) m.nb_mean = j.at("nb_mean").get<double>();
    if (j.contains("log_series_x")) m.log_series_x = j.at("log_series_x").get<double>();
    if (j.contains("abundances")) m.abundances = j.at("abundances").get<std::vector<std::uint64_t>>();
    if (j.contains("labels")) m.labels = j.at("labels").get<std::vector<std::string>>();
    s.sample_size = j.at("sample_size").get<std::uint64_t>();
    s.trials = j.value("trials", std::uint64_t{1000});
    s.seed = j.value("seed", std::uint64_t{0});
    s.risk = j.value("risk", 0.05);
    s.sidedness = inference::parse_sidedness(j.value("sidedness", std::string("two_sided")));
    s.replicates = j.value("replicates", bootstrap::kDefaultReplicates);
    if (j.contains("methods")) {
      for (const auto& tag : j.at("methods")) s.methods.push_back(MethodSpec::parse(tag));
    } else {
      s.methods = default_methods();
    }
    return s;
  } catch (const json::exception& e) {
    throw ParseError(0, std::string("scenario: ") + e.what());
  } catch (const InvalidInput& e) {
    throw ParseError(0, std::string("scenario: ") + e.what());
  }
}

std::string render_coverage(const Scenario& scenario, const fieldsim::CoverageReport& report,
                            OutputFormat format) {
  const auto& m = scenario.model;
  json model = {{"kind", fieldsim::to_string(m.kind)}};
  if (m.kind == fieldsim::FieldKind::negative_binomial) {
    model["nb_size"] = m.nb_size;
    model["nb_mean"] = m.nb_mean.value_or(static_cast<double>(m.field_size) /
                                          static_cast<double>(m.true_categories));
    model["parameter_source"] = m.nb_mean ? "scenario" : "simulation default";
  } else if (m.kind == fieldsim::FieldKind::log_series) {
    model["parameter_source"] = m.log_series_x ? "scenario" : "simulation default";
  }

  if (format == OutputFormat::json) {
    json j;
    j["schema"] = kCoverageSchema;
    j["schema_version"] = kReportSchemaVersion;
    j["scenario"] = scenario.name;
    j["model"] = model;
    j["true_categories"] = report.true_categories;
    j["field_size"] = report.field_size;
    j["sample_size"] = report.sample_size;
    j["trials"] = report.trials;
    j["seed"] = report.seed;
    j["risk"] = report.risk;
    j["sidedness"] = to_string(report.sidedness);
    j["replicates"] = scenario.replicates;
    j["observed_categories"] = {{"mean", report.mean_observed},
                                {"min", report.min_observed},
                                {"max", report.max_observed}};
    j["methods"] = json::array();
    for (const auto& mc : report.methods) {
      j["methods"].push_back({{"method", mc.method},
                              {"trials", mc.trials},
                              {"failures", mc.failures},
                              {"mean_estimate", mc.mean_estimate},
                              {"bias", mc.bias},
                              {"rmse", mc.rmse},
                              {"coverage", mc.coverage},
                              {"mean_c_max", mc.mean_c_max}});
    }
    j["provenance"] = {{"tool", kToolName}, {"version", kVersion}};
    return j.dump(2) + "\n";
  }

  std::ostringstream os;
  if (format == OutputFormat::csv) {
    os << "method,trials,failures,mean_estimate,bias,rmse,coverage,mean_c_max\n";
    for (const auto& mc : report.methods) {
      os << mc.method << "," << mc.trials << "," << mc.failures << ","
         << exact(mc.mean_estimate) << "," << exact(mc.bias) << "," << exact(mc.rmse) << ","
         << exact(mc.coverage) << "," << exact(mc.mean_c_max) << "\n";
    }
    return os.str();
  }

  os << "Scenario: " << scenario.name << " (" << fieldsim::to_string(m.kind) << ")";
  if (model.contains("parameter_source")) {
    os << ", parameters: " << model["parameter_source"].get<std::string>();
  }
  os << "\nField: " << report.true_categories << " categories, " << report.field_size
     << " individuals\n";
  os << "Samples: n = " << report.sample_size << ", trials = " << report.trials
     << ", seed = " << report.seed << ", risk = " << fixed4(report.risk) << " "
     << to_string(report.sidedness) << "\n";
  os << "Observed categories: mean " << fixed4(report.mean_observed) << ", min "
     << report.min_observed << ", max " << report.max_observed << "\n\n";
  os << pad("Method", 20, true) << pad("Trials", 8) << pad("Failed", 8) << pad("Mean", 10)
     << pad("Bias", 10) << pad("RMSE", 10) << pad("Coverage", 10) << pad("Mean C_max", 12)
     << "\n";
  for (const auto& mc : report.methods) {
    os << pad(method_label(mc.method), 20, true) << pad(std::to_string(mc.trials), 8)
       << pad(std::to_string(mc.failures), 8) << pad(fixed4(mc.mean_estimate), 10)
       << pad(fixed4(mc.bias), 10) << pad(fixed4(mc.rmse), 10) << pad(fixed4(mc.coverage), 10)
       << pad(fixed4(mc.mean_c_max), 12) << "\n";
  }
  return os.str();
}

OutputFormat parse_output_format(const std::string& text) {
  if (text == "table") return OutputFormat::table;
  if (text == "json") return OutputFormat::json;
  if (text == "csv") return OutputFormat::csv;
  throw InvalidInput("unknown output format '" + text + "'");
}

}  // namespace richness::io
