#pragma once

#include <filesystem>
#include <map>
#include <ostream>
#include <string>
#include <string_view>

#include "phantom/harness.hpp"

namespace phantom {

enum class ReportFormat { TableText, StructuredRecord, TabularData };

std::string_view to_string(ReportFormat format);  // "table", "json", "csv"
// Accepts table|text, json|record, csv|tabular. Throws ValidationError.
ReportFormat parse_report_format(std::string_view name);

std::string render_table(const ExperimentReport& report);
std::string render_json(const ExperimentReport& report);
// File name -> CSV body, one file per figure.
std::map<std::string, std::string> render_tabular(const ExperimentReport& report);

// Rebuilds a report from render_json output by re-aggregating the records.
ExperimentReport report_from_json(std::string_view document);
ExperimentReport load_report_file(const std::filesystem::path& path);

// One token record as a JSON object (used by the CLI and C API).
std::string token_record_json(const TokenRecord& record);

// TableText/StructuredRecord write one file; TabularData writes into the
// directory `out`, creating it if needed. Throws IoError naming the path.
void emit_report(const ExperimentReport& report, ReportFormat format, const std::filesystem::path& out);
void emit_report(const ExperimentReport& report, ReportFormat format, std::ostream& out);

}  // namespace phantom
