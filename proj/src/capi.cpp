#include "phantom/phantom.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <nlohmann/json.hpp>
#include <string>

#include "phantom/believability.hpp"
#include "phantom/config.hpp"
#include "phantom/error.hpp"
#include "phantom/generation.hpp"
#include "phantom/harness.hpp"
#include "phantom/profile.hpp"
#include "phantom/report.hpp"
#include "phantom/scanners.hpp"

struct phantom_profile {
  phantom::OrgProfile value;
};
struct phantom_token {
  phantom::HoneyToken value;
};
struct phantom_config {
  phantom::ExperimentConfig value;
};
struct phantom_report {
  phantom::ExperimentReport value;
};

namespace {

#define PHANTOM_STR_(x) #x
#define PHANTOM_STR(x) PHANTOM_STR_(x)

thread_local std::string last_error;

using Json = nlohmann::ordered_json;

phantom_status fail(phantom_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

template <typename F>
phantom_status guarded(F&& body) {
  last_error.clear();
  try {
    body();
    return PHANTOM_OK;
  } catch (const phantom::Error& e) {
    switch (e.kind()) {
      case phantom::ErrorKind::Validation: return fail(PHANTOM_ERR_VALIDATION, e.what());
      case phantom::ErrorKind::Parse: return fail(PHANTOM_ERR_PARSE, e.what());
      case phantom::ErrorKind::Io: return fail(PHANTOM_ERR_IO, e.what());
      case phantom::ErrorKind::Precondition: return fail(PHANTOM_ERR_INVALID_ARGUMENT, e.what());
      case phantom::ErrorKind::UndefinedStatistic: return fail(PHANTOM_ERR_INTERNAL, e.what());
    }
    return fail(PHANTOM_ERR_INTERNAL, e.what());
  } catch (const std::bad_alloc&) {
    return fail(PHANTOM_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(PHANTOM_ERR_INTERNAL, e.what());
  }
}

template <typename T>
const T& need(const T* p, const char* name) {
  if (p == nullptr) throw phantom::PreconditionError(std::string(name) + " is NULL");
  return *p;
}

const char* need_str(const char* s, const char* name) {
  if (s == nullptr) throw phantom::PreconditionError(std::string(name) + " is NULL");
  return s;
}

template <typename T>
T** need_out(T** out) {
  if (out == nullptr) throw phantom::PreconditionError("out is NULL");
  *out = nullptr;
  return out;
}

char* dup(const std::string& s) {
  auto* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p == nullptr) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

const phantom::ExperimentConfig& config_or_default(const phantom_config* config) {
  static const phantom::ExperimentConfig defaults;
  return config != nullptr ? config->value : defaults;
}

phantom::ScanConfig scan_config(const phantom_config* config, const double* weights) {
  auto sc = config_or_default(config).scanning;
  if (weights != nullptr) {
    sc.weights = {weights[0], weights[1], weights[2]};
    phantom::validate(sc.weights);
  }
  return sc;
}

Json scores_json(const phantom::HoneyToken& t, const phantom::BelievabilityResult& r) {
  const auto& c = r.components;
  return {{"id", t.id},
          {"type", std::string(phantom::to_string(t.token_type))},
          {"components", {{"s_v", c.s_v}, {"s_c", c.s_c}, {"s_n", c.s_n}, {"s_h", c.s_h}}},
          {"b", r.b},
          {"fooled", r.fooled}};
}

}  // namespace

extern "C" {

const char* phantom_version(void) { return PHANTOM_STR(PHANTOM_VERSION); }

const char* phantom_last_error(void) { return last_error.c_str(); }

void phantom_string_free(char* s) { std::free(s); }

phantom_status phantom_profile_load_file(const char* path, phantom_profile** out) {
  return guarded([&] {
    need_out(out);
    *out = new phantom_profile{phantom::load_profile_file(need_str(path, "path"))};
  });
}

phantom_status phantom_profile_parse(const char* document, phantom_profile** out) {
  return guarded([&] {
    need_out(out);
    *out = new phantom_profile{phantom::load_profile(need_str(document, "document"))};
  });
}

phantom_status phantom_profile_builtin(const char* name, phantom_profile** out) {
  return guarded([&] {
    need_out(out);
    *out = new phantom_profile{phantom::builtin_profile(need_str(name, "name"))};
  });
}

size_t phantom_builtin_count(void) { return phantom::builtin_entries().size(); }

const char* phantom_builtin_name(size_t index) {
  const auto& entries = phantom::builtin_entries();
  return index < entries.size() ? entries[index].key.data() : nullptr;
}

phantom_status phantom_profile_render(const phantom_profile* profile, char** out) {
  return guarded([&] {
    need_out(out);
    *out = dup(phantom::render_profile(need(profile, "profile").value));
  });
}

void phantom_profile_free(phantom_profile* profile) { delete profile; }

phantom_status phantom_config_default(phantom_config** out) {
  return guarded([&] {
    need_out(out);
    *out = new phantom_config{};
  });
}

phantom_status phantom_config_parse(const char* json, phantom_config** out) {
  return guarded([&] {
    need_out(out);
    *out = new phantom_config{phantom::parse_config(need_str(json, "json"))};
  });
}

phantom_status phantom_config_load_file(const char* path, phantom_config** out) {
  return guarded([&] {
    need_out(out);
    *out = new phantom_config{phantom::load_config_file(need_str(path, "path"))};
  });
}

phantom_status phantom_config_render(const phantom_config* config, char** out) {
  return guarded([&] {
    need_out(out);
    *out = dup(phantom::render_config(need(config, "config").value));
  });
}

uint64_t phantom_config_seed(const phantom_config* config) { return config_or_default(config).seed; }

phantom_status phantom_config_set_replicates(phantom_config* config, size_t replicates) {
  return guarded([&] {
    auto next = need(config, "config").value;
    next.replicates = replicates;
    phantom::validate(next);
    config->value = next;
  });
}

phantom_status phantom_config_set_threads(phantom_config* config, size_t threads) {
  return guarded([&] {
    auto next = need(config, "config").value;
    next.threads = threads;
    phantom::validate(next);
    config->value = next;
  });
}

void phantom_config_free(phantom_config* config) { delete config; }

phantom_status phantom_token_generate(const phantom_profile* profile, const char* type, const char* method,
                                      uint64_t seed, const phantom_config* config, phantom_token** out) {
  return guarded([&] {
    need_out(out);
    const auto t = phantom::parse_token_type(need_str(type, "type"));
    const auto m = phantom::parse_method(need_str(method, "method"));
    *out = new phantom_token{phantom::generate_seeded(need(profile, "profile").value, t, m, seed,
                                                      config_or_default(config).generation)};
  });
}

phantom_status phantom_token_from_content(const char* type, const char* content, phantom_token** out) {
  return guarded([&] {
    need_out(out);
    const auto t = phantom::parse_token_type(need_str(type, "type"));
    *out = new phantom_token{phantom::make_token(t, need_str(content, "content"))};
  });
}

const char* phantom_token_content(const phantom_token* token) {
  return token != nullptr ? token->value.content.c_str() : nullptr;
}

phantom_status phantom_token_record_json(const phantom_token* token, char** out) {
  return guarded([&] {
    need_out(out);
    const auto& t = need(token, "token").value;
    const Json j{{"id", t.id},
                 {"type", std::string(phantom::to_string(t.token_type))},
                 {"method", std::string(phantom::to_string(t.method))},
                 {"org_short", t.org_short},
                 {"seed_label", t.seed_label},
                 {"content_hash", phantom::content_hash(t.content)},
                 {"content", t.content}};
    *out = dup(j.dump(2) + "\n");
  });
}

void phantom_token_free(phantom_token* token) { delete token; }

phantom_status phantom_score(const phantom_token* token, const phantom_profile* profile,
                             const phantom_config* config, phantom_scores* out) {
  return guarded([&] {
    if (out == nullptr) throw phantom::PreconditionError("out is NULL");
    const auto r = phantom::evaluate(need(token, "token").value, need(profile, "profile").value,
                                     config_or_default(config).evaluator);
    *out = {r.components.s_v, r.components.s_c, r.components.s_n, r.components.s_h, r.b, r.fooled ? 1 : 0};
  });
}

phantom_status phantom_score_json(const phantom_token* token, const phantom_profile* profile,
                                  const phantom_config* config, char** out) {
  return guarded([&] {
    need_out(out);
    const auto& t = need(token, "token").value;
    const auto r = phantom::evaluate(t, need(profile, "profile").value, config_or_default(config).evaluator);
    *out = dup(scores_json(t, r).dump(2) + "\n");
  });
}

phantom_status phantom_scan(const phantom_token* token, const phantom_profile* profile,
                            const phantom_config* config, const double* weights, phantom_scan_result* out) {
  return guarded([&] {
    if (out == nullptr) throw phantom::PreconditionError("out is NULL");
    const auto r = phantom::scan(need(token, "token").value, need(profile, "profile").value,
                                 scan_config(config, weights));
    *out = {r.pd1, r.pd2, r.pd3, r.pd_combined, r.dr};
  });
}

phantom_status phantom_scan_json(const phantom_token* token, const phantom_profile* profile,
                                 const phantom_config* config, const double* weights, char** out) {
  return guarded([&] {
    need_out(out);
    const auto& t = need(token, "token").value;
    const auto sc = scan_config(config, weights);
    const auto r = phantom::scan(t, need(profile, "profile").value, sc);
    const Json j{{"id", t.id},
                 {"type", std::string(phantom::to_string(t.token_type))},
                 {"weights", {sc.weights.lambda1, sc.weights.lambda2, sc.weights.lambda3}},
                 {"pd1", r.pd1},
                 {"pd2", r.pd2},
                 {"pd3", r.pd3},
                 {"pd_combined", r.pd_combined},
                 {"dr", r.dr}};
    *out = dup(j.dump(2) + "\n");
  });
}

phantom_status phantom_experiment_run(uint64_t seed, const phantom_config* config, phantom_report** out) {
  return guarded([&] {
    need_out(out);
    *out = new phantom_report{phantom::run_experiment(seed, config_or_default(config))};
  });
}

phantom_status phantom_report_load_file(const char* path, phantom_report** out) {
  return guarded([&] {
    need_out(out);
    *out = new phantom_report{phantom::load_report_file(need_str(path, "path"))};
  });
}

phantom_status phantom_report_render(const phantom_report* report, const char* format, char** out) {
  return guarded([&] {
    need_out(out);
    const auto& r = need(report, "report").value;
    switch (phantom::parse_report_format(need_str(format, "format"))) {
      case phantom::ReportFormat::TableText: *out = dup(phantom::render_table(r)); break;
      case phantom::ReportFormat::StructuredRecord: *out = dup(phantom::render_json(r)); break;
      case phantom::ReportFormat::TabularData:
        throw phantom::ValidationError("format", "csv output needs a directory, use phantom_report_write");
    }
  });
}

phantom_status phantom_report_write(const phantom_report* report, const char* format, const char* path) {
  return guarded([&] {
    phantom::emit_report(need(report, "report").value, phantom::parse_report_format(need_str(format, "format")),
                         std::filesystem::path(need_str(path, "path")));
  });
}

size_t phantom_report_record_count(const phantom_report* report) {
  return report != nullptr ? report->value.records.size() : 0;
}

void phantom_report_free(phantom_report* report) { delete report; }

}  // extern "C"
