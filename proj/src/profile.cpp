#include "phantom/profile.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <map>
#include <optional>
#include <regex>
#include <sstream>

#include "phantom/error.hpp"
#include "phantom/text.hpp"

namespace phantom {

namespace {

const std::regex kShortName("[a-z][a-z0-9]*");
const std::regex kIdentifier("[a-z][a-z0-9_]*");

constexpr std::array<std::string_view, 11> kFields = {
    "domain",       "short_name", "services", "db_type", "db_host",      "db_name",
    "cloud_region", "git_org",    "teams",    "jwt_issuer", "jwt_audience",
};

bool has_whitespace(std::string_view s) {
  return s.find_first_of(" \t\r\n\v\f") != std::string_view::npos;
}

void require_nonempty(std::string_view field, std::string_view value) {
  if (value.empty()) throw ValidationError(std::string(field), "must not be empty");
  if (has_whitespace(value)) throw ValidationError(std::string(field), "must not contain whitespace");
}

void validate_list(std::string_view field, const std::vector<std::string>& items) {
  if (items.empty()) throw ValidationError(std::string(field), "needs at least one entry");
  for (const auto& item : items) {
    if (!std::regex_match(item, kIdentifier)) {
      throw ValidationError(std::string(field), "entry '" + item + "' must match [a-z][a-z0-9_]*");
    }
  }
}

std::vector<std::string> split_list(std::string_view value) {
  std::vector<std::string> items;
  while (true) {
    const auto comma = value.find(',');
    const auto item = text::trim(value.substr(0, comma));
    if (!item.empty()) items.emplace_back(item);
    if (comma == std::string_view::npos) break;
    value.remove_prefix(comma + 1);
  }
  return items;
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ", ";
    out += items[i];
  }
  return out;
}

std::string derive_short_name(std::string_view domain) {
  std::string out;
  for (char c : domain.substr(0, domain.find('.'))) {
    const auto lc = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if ((lc >= 'a' && lc <= 'z') || (lc >= '0' && lc <= '9')) out.push_back(lc);
  }
  return out;
}

OrgProfile make(std::string domain, std::string short_name, std::vector<std::string> services, DbType db,
                std::string db_host, std::string db_name, std::string region, std::string git_org,
                std::vector<std::string> teams, std::string issuer, std::string audience) {
  OrgProfile p;
  p.domain = std::move(domain);
  p.short_name = std::move(short_name);
  p.services = std::move(services);
  p.db_type = db;
  p.db_host = std::move(db_host);
  p.db_name = std::move(db_name);
  p.cloud_region = std::move(region);
  p.git_org = std::move(git_org);
  p.teams = std::move(teams);
  p.jwt_issuer = std::move(issuer);
  p.jwt_audience = std::move(audience);
  return p;
}

}  // namespace

std::string_view to_string(DbType type) {
  switch (type) {
    case DbType::Postgresql: return "postgresql";
    case DbType::Mysql: return "mysql";
    case DbType::Mongodb: return "mongodb";
  }
  return "postgresql";
}

DbType parse_db_type(std::string_view name) {
  const auto lc = text::to_lower(name);
  if (lc == "postgresql") return DbType::Postgresql;
  if (lc == "mysql") return DbType::Mysql;
  if (lc == "mongodb") return DbType::Mongodb;
  throw ValidationError("db_type", "'" + std::string(name) + "' is not one of postgresql, mysql, mongodb");
}

std::string OrgProfile::jwt_issuer_host() const {
  std::string_view rest = jwt_issuer;
  if (const auto scheme = rest.find("://"); scheme != std::string_view::npos) rest.remove_prefix(scheme + 3);
  rest = rest.substr(0, rest.find_first_of("/:?#"));
  return std::string(rest);
}

void validate(const OrgProfile& p) {
  require_nonempty("domain", p.domain);
  if (p.domain.find('.') == std::string::npos || p.domain.front() == '.' || p.domain.back() == '.') {
    throw ValidationError("domain", "'" + p.domain + "' must be a dotted domain name");
  }
  if (p.short_name.size() < 2 || p.short_name.size() > 20 || !std::regex_match(p.short_name, kShortName)) {
    throw ValidationError("short_name", "'" + p.short_name + "' must match [a-z][a-z0-9]* with length 2-20");
  }
  validate_list("services", p.services);
  require_nonempty("db_host", p.db_host);
  require_nonempty("db_name", p.db_name);
  require_nonempty("cloud_region", p.cloud_region);
  require_nonempty("git_org", p.git_org);
  validate_list("teams", p.teams);
  require_nonempty("jwt_issuer", p.jwt_issuer);
  if (!p.jwt_issuer.starts_with("https://") || p.jwt_issuer.size() == 8) {
    throw ValidationError("jwt_issuer", "'" + p.jwt_issuer + "' must be an https:// URI");
  }
  require_nonempty("jwt_audience", p.jwt_audience);
}

OrgProfile load_profile(std::string_view document) {
  std::map<std::string, std::pair<std::string, std::size_t>, std::less<>> entries;
  std::size_t line_no = 0;
  for (auto raw : text::split_lines(document)) {
    ++line_no;
    const auto line = text::trim(raw);
    if (line.empty() || line.starts_with('#')) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError(line_no, "", "expected 'key = value'");
    const auto key = text::trim(line.substr(0, eq));
    const auto value = text::trim(line.substr(eq + 1));
    if (key.empty()) throw ParseError(line_no, "", "missing key before '='");
    if (std::find(kFields.begin(), kFields.end(), key) == kFields.end()) {
      throw ParseError(line_no, std::string(key), "unknown key");
    }
    if (entries.contains(key)) throw ParseError(line_no, std::string(key), "duplicate key");
    entries.emplace(std::string(key), std::pair{std::string(value), line_no});
  }

  const auto get = [&](std::string_view field) -> std::optional<std::string> {
    const auto it = entries.find(field);
    if (it == entries.end()) return std::nullopt;
    return it->second.first;
  };
  const auto required = [&](std::string_view field) {
    auto v = get(field);
    if (!v) throw ValidationError(std::string(field), "missing");
    return *v;
  };

  OrgProfile p;
  p.domain = required("domain");
  p.short_name = get("short_name").value_or(derive_short_name(p.domain));
  p.services = split_list(required("services"));
  p.db_type = parse_db_type(required("db_type"));
  p.db_host = required("db_host");
  p.db_name = required("db_name");
  p.cloud_region = required("cloud_region");
  p.git_org = required("git_org");
  p.teams = split_list(required("teams"));
  p.jwt_issuer = required("jwt_issuer");
  p.jwt_audience = required("jwt_audience");
  validate(p);
  return p;
}

OrgProfile load_profile_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(path.string(), "cannot open profile");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError(path.string(), "read failed");
  return load_profile(buffer.str());
}

std::string render_profile(const OrgProfile& p) {
  std::ostringstream out;
  out << "domain = " << p.domain << '\n'
      << "short_name = " << p.short_name << '\n'
      << "services = " << join(p.services) << '\n'
      << "db_type = " << to_string(p.db_type) << '\n'
      << "db_host = " << p.db_host << '\n'
      << "db_name = " << p.db_name << '\n'
      << "cloud_region = " << p.cloud_region << '\n'
      << "git_org = " << p.git_org << '\n'
      << "teams = " << join(p.teams) << '\n'
      << "jwt_issuer = " << p.jwt_issuer << '\n'
      << "jwt_audience = " << p.jwt_audience << '\n';
  return out.str();
}

// Domain, stack and region come from the evaluation table; everything else is
// a fixed constant so the experiment is reproducible.
const std::vector<BuiltinProfile>& builtin_entries() {
  static const std::vector<BuiltinProfile> entries = {
      {"fintech", "FinTech",
       make("payflow.io", "payflow", {"payments_api", "ledger", "kyc_service"}, DbType::Postgresql,
            "pg-prod.payflow.internal", "payflow_ledger", "us-east-1", "payflow-eng",
            {"platform", "payments", "risk_ops"}, "https://auth.payflow.io", "payflow-api")},
      {"healthcare", "Healthcare",
       make("medsync.health", "medsync", {"patient_portal", "ehr_sync", "billing"}, DbType::Mysql,
            "mysql-prod.medsync.internal", "medsync_ehr", "us-east-2", "medsync-health",
            {"clinical_apps", "infra", "compliance"}, "https://login.medsync.health", "medsync-portal")},
      {"defense", "Defense",
       make("arcsecure.defense", "arcsecure", {"mission_planner", "telemetry", "c2_gateway"}, DbType::Postgresql,
            "pgsql-core.arcsecure.internal", "arcsecure_ops", "us-gov-west-1", "arcsecure-gov",
            {"secops", "mission_systems", "cyber_range"}, "https://sso.arcsecure.defense", "arcsecure-c2")},
      {"ecommerce", "E-commerce",
       make("shopnest.com", "shopnest", {"checkout", "catalog", "order_service"}, DbType::Mongodb,
            "mongo-prod.shopnest.internal", "shopnest_orders", "eu-west-1", "shopnest-dev",
            {"storefront", "fulfillment", "growth"}, "https://accounts.shopnest.com", "shopnest-web")},
  };
  return entries;
}

std::vector<OrgProfile> builtin_profiles() {
  std::vector<OrgProfile> out;
  for (const auto& entry : builtin_entries()) out.push_back(entry.profile);
  return out;
}

const OrgProfile& builtin_profile(std::string_view name) {
  const auto lc = text::to_lower(name);
  for (const auto& entry : builtin_entries()) {
    if (lc == entry.key || lc == text::to_lower(entry.sector) || lc == entry.profile.short_name) {
      return entry.profile;
    }
  }
  throw ValidationError("profile", "no builtin profile named '" + std::string(name) + "'");
}

}  // namespace phantom
