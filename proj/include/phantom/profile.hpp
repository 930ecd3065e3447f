#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace phantom {

enum class DbType { Postgresql, Mysql, Mongodb };

std::string_view to_string(DbType type);
DbType parse_db_type(std::string_view name);  // throws ValidationError on "db_type"

// Organisational context driving contextual generation. Immutable once built.
struct OrgProfile {
  std::string domain;
  std::string short_name;
  std::vector<std::string> services;
  DbType db_type = DbType::Postgresql;
  std::string db_host;
  std::string db_name;
  std::string cloud_region;
  std::string git_org;
  std::vector<std::string> teams;
  std::string jwt_issuer;
  std::string jwt_audience;

  bool operator==(const OrgProfile&) const = default;

  // Host part of jwt_issuer ("https://auth.payflow.io/x" -> "auth.payflow.io").
  std::string jwt_issuer_host() const;
};

// Throws ValidationError naming the first offending field.
void validate(const OrgProfile& profile);

// Parses the key = value profile format. Throws ParseError (line/field) on
// malformed documents and ValidationError on invariant violations.
OrgProfile load_profile(std::string_view document);
OrgProfile load_profile_file(const std::filesystem::path& path);

// Canonical profile document; load_profile(render_profile(p)) == p.
std::string render_profile(const OrgProfile& profile);

struct BuiltinProfile {
  std::string_view key;     // "fintech", "healthcare", "defense", "ecommerce"
  std::string_view sector;  // "FinTech", ...
  OrgProfile profile;
};

// The four evaluation organisations, in a fixed order.
const std::vector<BuiltinProfile>& builtin_entries();
std::vector<OrgProfile> builtin_profiles();
// Lookup by key or sector name, case-insensitive. Throws ValidationError on "profile".
const OrgProfile& builtin_profile(std::string_view name);

}  // namespace phantom
