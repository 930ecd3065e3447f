#pragma once

#include <array>
#include <string>
#include <string_view>

namespace phantom {

enum class TokenType {
  AwsKey,
  EnvFile,
  Jwt,
  SshPrivateKey,
  GitConfig,
  SlackBotToken,
  DbConnectionString,
  ApiKey,
};

inline constexpr std::array<TokenType, 8> kAllTokenTypes = {
    TokenType::AwsKey,    TokenType::EnvFile,       TokenType::Jwt,
    TokenType::SshPrivateKey, TokenType::GitConfig, TokenType::SlackBotToken,
    TokenType::DbConnectionString, TokenType::ApiKey,
};

enum class GenerationMethod { Contextual, Template };

inline constexpr std::array<GenerationMethod, 2> kAllMethods = {GenerationMethod::Template,
                                                                GenerationMethod::Contextual};

std::string_view to_string(TokenType type);
std::string_view to_string(GenerationMethod method);
// Case-insensitive; also accepts snake_case ("aws_key"). Throws ValidationError.
TokenType parse_token_type(std::string_view name);
GenerationMethod parse_method(std::string_view name);

struct HoneyToken {
  std::string id;
  TokenType token_type = TokenType::AwsKey;
  GenerationMethod method = GenerationMethod::Contextual;
  std::string org_short;
  std::string content;     // '\n' line endings only
  std::string seed_label;  // '/'-joined RNG stream labels
};

// Wraps externally supplied content (CLI score/scan) as a token of the given type.
HoneyToken make_token(TokenType type, std::string_view content);

}  // namespace phantom
