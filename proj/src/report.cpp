#include "phantom/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json_io.hpp"
#include "phantom/error.hpp"
#include "phantom/rng.hpp"
#include "phantom/text.hpp"

namespace phantom {

namespace {

using detail::Json;

std::string fmt(const char* pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, v);
  return buf;
}

std::string num(double v) { return fmt("%.6f", v); }

std::string signed_num(double v, int digits = 3) {
  if (std::isinf(v)) return v > 0 ? "+inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%+.*f", digits, v);
  return buf;
}

std::string p_text(double p) {
  if (p < 0.001) return "<0.001";
  return fmt("%.3f", p);
}

std::string mean_sd(const stats::SampleSummary& s) { return fmt("%.3f", s.mean) + " ± " + fmt("%.3f", s.sd); }

std::string pad(std::string s, std::size_t width) {
  // UTF-8 aware enough for the one multibyte glyph used here.
  std::size_t visible = 0;
  for (unsigned char ch : s) visible += (ch & 0xC0) != 0x80 ? 1 : 0;
  if (visible < width) s.append(width - visible, ' ');
  return s;
}

Json summary_json(const stats::SampleSummary& s) { return {{"n", s.n}, {"mean", s.mean}, {"sd", s.sd}}; }

Json comparison_json(const MetricComparison& m) {
  Json j{{"metric", m.metric}};
  if (!m.group.empty()) j["group"] = m.group;
  j["template"] = summary_json(m.template_summary);
  j["contextual"] = summary_json(m.contextual_summary);
  j["delta"] = m.delta;
  j["defined"] = m.defined;
  j["t"] = m.test.t_stat;  // +-inf serialises as null
  j["df"] = m.test.df;
  j["p_raw"] = m.test.p_raw;
  j["p_adjusted"] = m.test.p_adjusted;
  j["cohens_d"] = m.test.cohens_d;
  j["label"] = std::string(stats::to_string(m.test.label));
  return j;
}

Json rate_json(const RateComparison& r) {
  return {{"metric", r.metric},
          {"template", {{"hits", r.template_hits}, {"n", r.template_n}, {"rate", r.template_rate}}},
          {"contextual", {{"hits", r.contextual_hits}, {"n", r.contextual_n}, {"rate", r.contextual_rate}}},
          {"delta", r.delta},
          {"z", r.test.z},
          {"p_raw", r.test.p_raw},
          {"p_adjusted", r.p_adjusted},
          {"label", std::string(stats::to_string(r.label))}};
}

Json record_json(const TokenRecord& r) {
  const auto& c = r.components;
  const auto& s = r.scan;
  return {{"id", r.token.id},
          {"type", std::string(to_string(r.token.token_type))},
          {"method", std::string(to_string(r.token.method))},
          {"org", r.org},
          {"org_short", r.token.org_short},
          {"seed_label", r.token.seed_label},
          {"content_hash", r.content_hash},
          {"content", r.token.content},
          {"components", {{"s_v", c.s_v}, {"s_c", c.s_c}, {"s_n", c.s_n}, {"s_h", c.s_h}}},
          {"b", r.b},
          {"fooled", r.fooled},
          {"scan", {{"pd1", s.pd1}, {"pd2", s.pd2}, {"pd3", s.pd3}, {"pd_combined", s.pd_combined}, {"dr", s.dr}}},
          {"h", r.h},
          {"in_ideal_zone", r.in_ideal_zone}};
}

TokenRecord record_from_json(const Json& j) {
  TokenRecord r;
  r.token.id = j.at("id").get<std::string>();
  r.token.token_type = parse_token_type(j.at("type").get<std::string>());
  r.token.method = parse_method(j.at("method").get<std::string>());
  r.org = j.at("org").get<std::string>();
  r.token.org_short = j.at("org_short").get<std::string>();
  r.token.seed_label = j.at("seed_label").get<std::string>();
  r.content_hash = j.at("content_hash").get<std::string>();
  r.token.content = j.at("content").get<std::string>();
  const auto& c = j.at("components");
  r.components = {c.at("s_v").get<double>(), c.at("s_c").get<double>(), c.at("s_n").get<double>(),
                  c.at("s_h").get<double>()};
  r.b = j.at("b").get<double>();
  r.fooled = j.at("fooled").get<bool>();
  const auto& s = j.at("scan");
  r.scan = {s.at("pd1").get<double>(), s.at("pd2").get<double>(), s.at("pd3").get<double>(),
            s.at("pd_combined").get<double>(), s.at("dr").get<double>()};
  r.h = j.at("h").get<double>();
  r.in_ideal_zone = j.at("in_ideal_zone").get<bool>();
  return r;
}

Json report_json(const ExperimentReport& rep) {
  Json j;
  j["seed"] = rep.seed;
  j["rng"] = std::string(DeterministicRng::algorithm);
  j["config"] = detail::config_to_json(rep.config);
  Json records = Json::array();
  for (const auto& r : rep.records) records.push_back(record_json(r));
  j["records"] = std::move(records);
  auto list = [](const std::vector<MetricComparison>& v) {
    Json a = Json::array();
    for (const auto& m : v) a.push_back(comparison_json(m));
    return a;
  };
  j["main"] = list(rep.main);
  j["fooled"] = rate_json(rep.fooled);
  j["ideal_zone"] = rate_json(rep.ideal_zone);
  j["per_type"] = list(rep.per_type);
  j["per_org"] = list(rep.per_org);
  j["per_scanner"] = list(rep.per_scanner);
  return j;
}

struct RowLabel {
  const char* metric;
  const char* label;
};

constexpr RowLabel kRowLabels[] = {
    {"b", "Believability B"},   {"s_v", "Syntactic S_v"}, {"s_c", "Semantic S_c"},
    {"s_n", "Statistical S_n"}, {"s_h", "Human S_h"},     {"dr", "Detection resist. DR"},
    {"h", "Composite H"},
};

std::string comparison_row(const std::string& label, const MetricComparison& m) {
  std::string row = pad(label, 22) + pad(mean_sd(m.template_summary), 17) + pad(mean_sd(m.contextual_summary), 17) +
                    pad(signed_num(m.delta), 9);
  if (!m.defined) {
    row += pad("-", 9) + pad("-", 8) + pad("-", 8);
  } else {
    row += pad(fmt("%.2f", m.test.t_stat), 9) + pad(p_text(m.test.p_adjusted), 8) +
           pad(signed_num(m.test.cohens_d, 2), 8);
  }
  row += std::string(stats::to_string(m.test.label));
  return row;
}

std::string rate_row(const std::string& label, const RateComparison& r) {
  return pad(label, 22) + pad(fmt("%.1f%%", 100.0 * r.template_rate), 17) +
         pad(fmt("%.1f%%", 100.0 * r.contextual_rate), 17) + pad(signed_num(100.0 * r.delta, 1), 9) +
         pad("z=" + fmt("%.2f", r.test.z), 9) + pad(p_text(r.p_adjusted), 8) + pad("", 8) +
         std::string(stats::to_string(r.label));
}

std::string header(const std::string& first) {
  return pad(first, 22) + pad("Template", 17) + pad("Contextual", 17) + pad("Δ", 9) + pad("t", 9) + pad("p_adj", 8) +
         pad("d", 8) + "Sig\n";
}

void section(std::ostringstream& out, const std::string& title, const std::string& first,
             const std::vector<MetricComparison>& rows) {
  out << "\n" << title << "\n" << header(first);
  for (const auto& m : rows) out << comparison_row(m.group, m) << "\n";
}

std::string comparison_csv_row(const std::string& key, const MetricComparison& m) {
  return key + "," + num(m.template_summary.mean) + "," + num(m.template_summary.sd) + "," +
         num(m.contextual_summary.mean) + "," + num(m.contextual_summary.sd) + "," + num(m.delta) + "," +
         num(m.test.p_adjusted) + "," + std::string(stats::to_string(m.test.label)) + "\n";
}

void write_file(const std::filesystem::path& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(path.string(), "cannot open for writing");
  out << body;
  out.flush();
  if (!out) throw IoError(path.string(), "write failed");
}

}  // namespace

std::string_view to_string(ReportFormat format) {
  switch (format) {
    case ReportFormat::TableText: return "table";
    case ReportFormat::StructuredRecord: return "json";
    case ReportFormat::TabularData: return "csv";
  }
  return "table";
}

ReportFormat parse_report_format(std::string_view name) {
  const auto n = text::to_lower(text::trim(name));
  if (n == "table" || n == "text") return ReportFormat::TableText;
  if (n == "json" || n == "record") return ReportFormat::StructuredRecord;
  if (n == "csv" || n == "tabular") return ReportFormat::TabularData;
  throw ValidationError("format", "expected table, json or csv");
}

std::string render_table(const ExperimentReport& rep) {
  std::size_t n_t = 0;
  for (const auto& r : rep.records) n_t += r.token.method == GenerationMethod::Template ? 1 : 0;
  std::ostringstream out;
  out << "seed " << rep.seed << ", " << rep.records.size() << " tokens (" << n_t << " template, "
      << rep.records.size() - n_t << " contextual), Bonferroni m=" << rep.config.comparisons << "\n\n";
  out << header("Metric");
  for (const auto& row : kRowLabels) out << comparison_row(row.label, rep.metric(row.metric)) << "\n";
  out << rate_row("Fooled rate", rep.fooled) << "\n";
  out << rate_row("Ideal zone", rep.ideal_zone) << "\n";
  section(out, "Believability by token type", "Type", rep.per_type);
  section(out, "Believability by organisation", "Organisation", rep.per_org);
  section(out, "Detection probability by scanner", "Scanner", rep.per_scanner);
  return out.str();
}

std::string render_json(const ExperimentReport& rep) { return report_json(rep).dump(2) + "\n"; }

std::string token_record_json(const TokenRecord& record) { return record_json(record).dump(2) + "\n"; }

std::map<std::string, std::string> render_tabular(const ExperimentReport& rep) {
  std::map<std::string, std::string> files;
  const auto method = [](const TokenRecord& r) { return std::string(to_string(r.token.method)); };
  const auto type = [](const TokenRecord& r) { return std::string(to_string(r.token.token_type)); };

  std::string dist = "method,org,type,b,s_v,s_c,s_n,s_h,dr,h\n";
  std::string scanner = "scanner,method,org,type,pd\n";
  std::string scatter = "method,b,dr,in_ideal_zone\n";
  for (const auto& r : rep.records) {
    const auto& c = r.components;
    dist += method(r) + "," + r.org + "," + type(r) + "," + num(r.b) + "," + num(c.s_v) + "," + num(c.s_c) + "," +
            num(c.s_n) + "," + num(c.s_h) + "," + num(r.scan.dr) + "," + num(r.h) + "\n";
    scatter += method(r) + "," + num(r.b) + "," + num(r.scan.dr) + "," + (r.in_ideal_zone ? "1" : "0") + "\n";
  }
  const std::pair<const char*, double ScanResult::*> pds[] = {
      {"S1", &ScanResult::pd1}, {"S2", &ScanResult::pd2}, {"S3", &ScanResult::pd3}};
  for (const auto& [name, field] : pds) {
    for (const auto& r : rep.records) {
      scanner += std::string(name) + "," + method(r) + "," + r.org + "," + type(r) + "," + num(r.scan.*field) + "\n";
    }
  }
  files["fig_distributions.csv"] = dist;
  files["fig_per_scanner.csv"] = scanner;
  files["fig_scatter.csv"] = scatter;

  const std::string cols = "template_mean,template_sd,contextual_mean,contextual_sd,delta,p_adjusted,label\n";
  std::string per_type = "type," + cols;
  for (const auto& m : rep.per_type) per_type += comparison_csv_row(m.group, m);
  std::string per_org = "org," + cols;
  for (const auto& m : rep.per_org) per_org += comparison_csv_row(m.group, m);
  files["fig_per_type.csv"] = per_type;
  files["fig_per_org.csv"] = per_org;

  std::string radar = "method,axis,value\n";
  const char* axes[] = {"s_v", "s_c", "s_n", "s_h", "dr"};
  for (const char* m : {"template", "contextual"}) {
    for (const char* axis : axes) {
      const auto& cmp = rep.metric(axis);
      const double v = std::string_view(m) == "template" ? cmp.template_summary.mean : cmp.contextual_summary.mean;
      radar += std::string(m) + "," + axis + "," + num(v) + "\n";
    }
  }
  files["fig_radar.csv"] = radar;
  return files;
}

ExperimentReport report_from_json(std::string_view document) {
  Json j;
  try {
    j = Json::parse(document);
  } catch (const nlohmann::json::parse_error&) {
    throw ParseError(0, "report", "invalid JSON");
  }
  try {
    const auto config = detail::config_from_json(j.at("config"));
    std::vector<TokenRecord> records;
    for (const auto& r : j.at("records")) records.push_back(record_from_json(r));
    return aggregate(std::move(records), j.at("seed").get<std::uint64_t>(), config);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, "report", e.what());
  }
}

ExperimentReport load_report_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(path.string(), "cannot open report");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return report_from_json(buffer.str());
}

void emit_report(const ExperimentReport& report, ReportFormat format, std::ostream& out) {
  switch (format) {
    case ReportFormat::TableText: out << render_table(report); break;
    case ReportFormat::StructuredRecord: out << render_json(report); break;
    case ReportFormat::TabularData: throw ValidationError("format", "tabular output needs a directory");
  }
  if (!out) throw IoError("<stream>", "write failed");
}

void emit_report(const ExperimentReport& report, ReportFormat format, const std::filesystem::path& out) {
  if (format != ReportFormat::TabularData) {
    write_file(out, format == ReportFormat::TableText ? render_table(report) : render_json(report));
    return;
  }
  std::error_code ec;
  std::filesystem::create_directories(out, ec);
  if (ec) throw IoError(out.string(), ec.message());
  for (const auto& [name, body] : render_tabular(report)) write_file(out / name, body);
}

}  // namespace phantom
