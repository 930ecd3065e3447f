#include "phantom/tokens.hpp"

#include "phantom/error.hpp"
#include "phantom/text.hpp"

namespace phantom {

namespace {

std::string squash(std::string_view name) {
  std::string out;
  for (char c : text::to_lower(name)) {
    if (c != '_' && c != '-' && c != ' ') out.push_back(c);
  }
  return out;
}

}  // namespace

std::string_view to_string(TokenType type) {
  switch (type) {
    case TokenType::AwsKey: return "AwsKey";
    case TokenType::EnvFile: return "EnvFile";
    case TokenType::Jwt: return "Jwt";
    case TokenType::SshPrivateKey: return "SshPrivateKey";
    case TokenType::GitConfig: return "GitConfig";
    case TokenType::SlackBotToken: return "SlackBotToken";
    case TokenType::DbConnectionString: return "DbConnectionString";
    case TokenType::ApiKey: return "ApiKey";
  }
  return "AwsKey";
}

std::string_view to_string(GenerationMethod method) {
  return method == GenerationMethod::Contextual ? "contextual" : "template";
}

TokenType parse_token_type(std::string_view name) {
  const auto key = squash(name);
  for (auto type : kAllTokenTypes) {
    if (key == squash(to_string(type))) return type;
  }
  throw ValidationError("type", "unknown token type '" + std::string(name) + "'");
}

GenerationMethod parse_method(std::string_view name) {
  const auto key = squash(name);
  if (key == "contextual" || key == "phantom") return GenerationMethod::Contextual;
  if (key == "template") return GenerationMethod::Template;
  throw ValidationError("method", "unknown generation method '" + std::string(name) + "'");
}

HoneyToken make_token(TokenType type, std::string_view content) {
  HoneyToken token;
  token.id = "input/" + std::string(to_string(type));
  token.token_type = type;
  token.content = text::normalize_newlines(content);
  return token;
}

}  // namespace phantom
