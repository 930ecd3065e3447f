// Runs the built phantom executable and checks output and exit codes.
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(PHANTOM_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::filesystem::path scratch(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("phantom_cli_" + name);
  std::filesystem::remove_all(p);
  return p;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("generate prints raw content and is seed-deterministic") {
    const auto a = run("generate --profile fintech --type AwsKey --method contextual --seed 42");
    CHECK(a.code == 0);
    CHECK(a.out.rfind("[payflow-prod]", 0) == 0);
    CHECK(run("generate --profile fintech --type AwsKey --seed 42").out == a.out);
    CHECK(run("generate --profile fintech --type AwsKey").out == a.out);
    CHECK(run("generate --profile fintech --type AwsKey --seed 43").out != a.out);
  }

  TEST_CASE("generate --emit-record") {
    const auto r = run("generate --profile defense --type jwt --method template --emit-record");
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("type") == "Jwt");
    CHECK(j.at("method") == "template");
    CHECK(j.at("content").get<std::string>().find("TOKEN=") != std::string::npos);
  }

  TEST_CASE("profile from file") {
    const auto r = run(std::string("generate --profile ") + PHANTOM_SOURCE_DIR + "/docs/acme.profile --type GitConfig");
    CHECK(r.code == 0);
    CHECK(r.out.find("git@github.acme-logistics.net:acme-logistics/") != std::string::npos);
  }

  TEST_CASE("score and scan read a token file") {
    const auto token = scratch("token.txt");
    CHECK(run("generate --profile ecommerce --type SlackBotToken --out " + token.string()).code == 0);
    const auto s = run("score --profile ecommerce --type SlackBotToken " + token.string());
    REQUIRE(s.code == 0);
    const auto sj = nlohmann::json::parse(s.out);
    CHECK(sj.at("fooled") == true);
    CHECK(sj.at("components").at("s_v") == 1.0);
    const auto sc = run("scan --profile ecommerce --type SlackBotToken --weights 0.5,0.25,0.25 < " + token.string());
    REQUIRE(sc.code == 0);
    const auto scj = nlohmann::json::parse(sc.out);
    CHECK(scj.at("weights").at(0) == 0.5);
    CHECK(scj.at("dr").get<double>() + scj.at("pd_combined").get<double>() == 1.0);
    std::filesystem::remove(token);
  }

  TEST_CASE("experiment writes json and csv, report re-renders") {
    const auto dir = scratch("exp");
    const auto e = run("experiment --seed 42 --out " + dir.string());
    REQUIRE(e.code == 0);
    CHECK(e.out.find("Semantic S_c") != std::string::npos);
    for (const char* f : {"report.json", "fig_distributions.csv", "fig_per_type.csv", "fig_per_scanner.csv",
                          "fig_scatter.csv", "fig_radar.csv", "fig_per_org.csv"}) {
      CHECK(std::filesystem::exists(dir / f));
    }
    const auto json = slurp(dir / "report.json");
    CHECK(run("report --in " + (dir / "report.json").string() + " --format json").out == json);
    CHECK(run("report --in " + (dir / "report.json").string()).out == e.out);
    const auto again = scratch("exp2");
    CHECK(run("experiment --quiet --out " + again.string() + " --format json").code == 0);
    CHECK(slurp(again / "report.json") == json);
    CHECK_FALSE(std::filesystem::exists(again / "fig_radar.csv"));
    std::filesystem::remove_all(dir);
    std::filesystem::remove_all(again);
  }

  TEST_CASE("config file is honoured") {
    const auto cfg = scratch("cfg.json");
    {
      std::ofstream out(cfg);
      out << R"({"seed": 9})";
    }
    const auto a = run("generate --config " + cfg.string() + " --profile fintech --type ApiKey");
    CHECK(a.code == 0);
    CHECK(a.out == run("generate --seed 9 --profile fintech --type ApiKey").out);
    CHECK(a.out != run("generate --config " + cfg.string() + " --seed 10 --profile fintech --type ApiKey").out);
    std::filesystem::remove(cfg);
  }

  TEST_CASE("exit codes") {
    CHECK(run("generate --profile nowhere --type AwsKey").code == 1);
    CHECK(run("generate --profile fintech --type Nope").code == 1);
    CHECK(run("generate --profile fintech --type AwsKey --method sideways").code == 1);
    CHECK(run("scan --profile fintech --type AwsKey --weights 0.9,0.9,0.9 < /dev/null").code == 1);
    CHECK(run("bogus").code == 1);
    CHECK(run("").code == 1);
    CHECK(run("generate --profile /nonexistent/x.profile --type AwsKey").code == 2);
    CHECK(run("score --profile fintech --type AwsKey /nonexistent/token").code == 2);
    CHECK(run("report --in /nonexistent/report.json").code == 2);
    CHECK(run("experiment --config /nonexistent/cfg.json").code == 2);
    CHECK(run("experiment --quiet --out /proc/phantom/x").code == 2);
    CHECK(run("generate --profile fintech --type AwsKey --out /nonexistent/dir/t.txt").code == 2);
    CHECK(run("--help").code == 0);
  }
}
