// phantom command-line front end. Talks to the library only through the C API.
#include <phantom/phantom.h>

#include <CLI11.hpp>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitIo = 2;

struct Failure {
  int code;
  std::string message;
};

int exit_code(phantom_status status) { return status == PHANTOM_ERR_IO ? kExitIo : kExitValidation; }

void check(phantom_status status) {
  if (status != PHANTOM_OK) throw Failure{exit_code(status), phantom_last_error()};
}

template <typename T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using Profile = std::unique_ptr<phantom_profile, Deleter<phantom_profile, phantom_profile_free>>;
using Token = std::unique_ptr<phantom_token, Deleter<phantom_token, phantom_token_free>>;
using Config = std::unique_ptr<phantom_config, Deleter<phantom_config, phantom_config_free>>;
using Report = std::unique_ptr<phantom_report, Deleter<phantom_report, phantom_report_free>>;

std::string take(char* s) {
  std::string out(s);
  phantom_string_free(s);
  return out;
}

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kExitIo, path + ": cannot open input"};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& body) {
  if (path.empty() || path == "-") {
    std::cout << body;
    std::cout.flush();
    if (!std::cout) throw Failure{kExitIo, "<stdout>: write failed"};
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Failure{kExitIo, path + ": cannot open for writing"};
  out << body;
  if (!out.flush()) throw Failure{kExitIo, path + ": write failed"};
}

struct Globals {
  std::uint64_t seed = 42;
  bool seed_given = false;
  std::string config_path;
  std::string profile;
  std::string out;
  std::string format;
};

Config load_config(const Globals& g) {
  phantom_config* raw = nullptr;
  if (g.config_path.empty()) {
    check(phantom_config_default(&raw));
  } else {
    check(phantom_config_load_file(g.config_path.c_str(), &raw));
  }
  return Config(raw);
}

std::uint64_t effective_seed(const Globals& g, const phantom_config* config) {
  return g.seed_given ? g.seed : phantom_config_seed(config);
}

// A path that exists is read as a profile file, anything else as a builtin name.
Profile load_profile(const std::string& name) {
  if (name.empty()) throw Failure{kExitValidation, "--profile is required"};
  phantom_profile* raw = nullptr;
  std::error_code ec;
  if (std::filesystem::is_regular_file(name, ec)) {
    check(phantom_profile_load_file(name.c_str(), &raw));
  } else if (name.find('/') != std::string::npos || name.find('.') != std::string::npos) {
    throw Failure{kExitIo, name + ": cannot open profile"};
  } else {
    check(phantom_profile_builtin(name.c_str(), &raw));
  }
  return Profile(raw);
}

Token token_from_input(const std::string& type, const std::string& input) {
  phantom_token* raw = nullptr;
  check(phantom_token_from_content(type.c_str(), read_input(input).c_str(), &raw));
  return Token(raw);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Contextual honeytoken generation, scoring and experiment harness."};
  app.fallthrough();
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(phantom_version()));

  Globals g;
  app.add_option("--seed", g.seed, "Master seed (default 42, or the config's seed)")
      ->each([&](const std::string&) { g.seed_given = true; });
  app.add_option("--config", g.config_path, "JSON experiment config");
  app.add_option("--profile", g.profile, "Profile file or builtin name (fintech, healthcare, defense, ecommerce)");
  app.add_option("--out", g.out, "Output file, or directory for experiment/csv output");
  app.add_option("--format", g.format, "table, json or csv");

  std::string type;
  std::string method = "contextual";
  std::string input = "-";
  bool emit_record = false;
  std::vector<double> weights;
  std::string report_in;
  std::size_t replicates = 0;
  std::size_t threads = 0;
  bool quiet = false;

  auto* generate = app.add_subcommand("generate", "Generate one honeytoken");
  generate->add_option("--type", type, "Token type, e.g. AwsKey or env_file")->required();
  generate->add_option("--method", method, "contextual or template");
  generate->add_flag("--emit-record", emit_record, "Emit a JSON record with metadata instead of raw content");

  auto* score = app.add_subcommand("score", "Score token content for believability");
  score->add_option("--type", type, "Token type")->required();
  score->add_option("input", input, "Token file, - for stdin");

  auto* scan = app.add_subcommand("scan", "Run the simulated secret scanners on token content");
  scan->add_option("--type", type, "Token type")->required();
  scan->add_option("input", input, "Token file, - for stdin");
  scan->add_option("--weights", weights, "Scanner weights l1,l2,l3")->delimiter(',')->expected(3);

  auto* experiment = app.add_subcommand("experiment", "Run the template vs contextual experiment");
  experiment->add_option("--replicates", replicates, "Instances per (org, type, method) cell");
  experiment->add_option("--threads", threads, "Worker threads");
  experiment->add_flag("--quiet", quiet, "Do not print the table to stdout");

  auto* report = app.add_subcommand("report", "Render a saved experiment report");
  report->add_option("--in", report_in, "report.json written by experiment")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  try {
    if (*generate) {
      auto config = load_config(g);
      auto profile = load_profile(g.profile);
      phantom_token* raw = nullptr;
      check(phantom_token_generate(profile.get(), type.c_str(), method.c_str(), effective_seed(g, config.get()),
                                   config.get(), &raw));
      Token token(raw);
      if (emit_record) {
        char* json = nullptr;
        check(phantom_token_record_json(token.get(), &json));
        write_output(g.out, take(json));
      } else {
        std::string content = phantom_token_content(token.get());
        if (!content.empty() && content.back() != '\n') content += '\n';
        write_output(g.out, content);
      }
    } else if (*score) {
      auto config = load_config(g);
      auto profile = load_profile(g.profile);
      auto token = token_from_input(type, input);
      char* json = nullptr;
      check(phantom_score_json(token.get(), profile.get(), config.get(), &json));
      write_output(g.out, take(json));
    } else if (*scan) {
      auto config = load_config(g);
      auto profile = load_profile(g.profile);
      auto token = token_from_input(type, input);
      char* json = nullptr;
      check(phantom_scan_json(token.get(), profile.get(), config.get(), weights.empty() ? nullptr : weights.data(),
                              &json));
      write_output(g.out, take(json));
    } else if (*experiment) {
      auto config = load_config(g);
      if (replicates > 0) check(phantom_config_set_replicates(config.get(), replicates));
      if (threads > 0) check(phantom_config_set_threads(config.get(), threads));
      phantom_report* raw = nullptr;
      check(phantom_experiment_run(effective_seed(g, config.get()), config.get(), &raw));
      Report rep(raw);
      const std::filesystem::path dir = g.out.empty() ? "phantom-report" : g.out;
      std::error_code ec;
      std::filesystem::create_directories(dir, ec);
      if (ec) throw Failure{kExitIo, dir.string() + ": " + ec.message()};
      const bool all = g.format.empty();
      if (all || g.format == "json") check(phantom_report_write(rep.get(), "json", (dir / "report.json").c_str()));
      if (all || g.format == "csv") check(phantom_report_write(rep.get(), "csv", dir.c_str()));
      if (g.format == "table") check(phantom_report_write(rep.get(), "table", (dir / "table.txt").c_str()));
      if (!all && g.format != "json" && g.format != "csv" && g.format != "table") {
        throw Failure{kExitValidation, "format: expected table, json or csv"};
      }
      if (!quiet) {
        char* table = nullptr;
        check(phantom_report_render(rep.get(), "table", &table));
        write_output("-", take(table));
      }
    } else if (*report) {
      phantom_report* raw = nullptr;
      check(phantom_report_load_file(report_in.c_str(), &raw));
      Report rep(raw);
      const std::string format = g.format.empty() ? "table" : g.format;
      if (format == "csv") {
        if (g.out.empty()) throw Failure{kExitValidation, "format: csv output needs --out <directory>"};
        check(phantom_report_write(rep.get(), "csv", g.out.c_str()));
      } else {
        char* body = nullptr;
        check(phantom_report_render(rep.get(), format.c_str(), &body));
        write_output(g.out, take(body));
      }
    }
  } catch (const Failure& f) {
    std::cerr << "phantom: " << f.message << "\n";
    return f.code;
  }
  return kExitOk;
}
