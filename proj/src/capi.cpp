#include "mustafin/mustafin.h"

#include <cstring>
#include <new>
#include <optional>
#include <string>

#include "mustafin/apartment.hpp"
#include "mustafin/errors.hpp"
#include "mustafin/hull.hpp"
#include "mustafin/linked_graph.hpp"
#include "mustafin/report.hpp"
#include "mustafin/special_fiber.hpp"

struct mf_config {
  mustafin::Configuration config;
  std::optional<std::string> label;
};

namespace {

thread_local std::string last_error;

mf_status fail(mf_status s, const char* what) {
  last_error = what;
  return s;
}

// Runs body, translating exceptions into status codes.
template <typename F>
mf_status guarded(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const mustafin::ParseError& e) {
    return fail(MF_ERR_PARSE, e.what());
  } catch (const mustafin::DimensionError& e) {
    return fail(MF_ERR_DIMENSION, e.what());
  } catch (const mustafin::ContractError& e) {
    return fail(MF_ERR_CONTRACT, e.what());
  } catch (const mustafin::DomainError& e) {
    return fail(MF_ERR_DOMAIN, e.what());
  } catch (const mustafin::InvariantViolation& e) {
    return fail(MF_ERR_INVARIANT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(MF_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(MF_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(MF_ERR_INTERNAL, "unknown exception");
  }
}

char* dup(const std::string& s) {
  char* p = new char[s.size() + 1];
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

template <typename Report>
mf_status emit(const Report& r, mf_format fmt, char** out) {
  switch (fmt) {
    case MF_FORMAT_JSON:
      *out = dup(nlohmann::json(r).dump(2) + "\n");
      return MF_OK;
    case MF_FORMAT_TABLE:
      *out = dup(mustafin::render_table(r));
      return MF_OK;
    default:
      return fail(MF_ERR_USAGE, "format not supported for this report");
  }
}

#define MF_REQUIRE(cond, msg) \
  if (!(cond)) return fail(MF_ERR_USAGE, msg)

}  // namespace

extern "C" {

const char* mf_version(void) { return "1.0.0"; }

const char* mf_last_error(void) { return last_error.c_str(); }

const char* mf_status_name(mf_status status) {
  switch (status) {
    case MF_OK: return "ok";
    case MF_ERR_USAGE: return "usage_error";
    case MF_ERR_PARSE: return "parse_error";
    case MF_ERR_DOMAIN: return "domain_error";
    case MF_ERR_INVARIANT: return "invariant_violation";
    case MF_ERR_DIMENSION: return "dimension_mismatch";
    case MF_ERR_CONTRACT: return "contract_violation";
    case MF_ERR_INTERNAL: return "internal_error";
  }
  return "unknown";
}

void mf_string_free(char* s) { delete[] s; }

mf_status mf_config_parse_json(const char* text, mf_config** out) {
  MF_REQUIRE(text && out, "null argument");
  return guarded([&] {
    auto doc = mustafin::parse_configuration_document(text);
    *out = new mf_config{mustafin::to_configuration(doc), doc.label};
    return MF_OK;
  });
}

mf_status mf_config_create(size_t d, size_t n, const int64_t* coords, mf_config** out) {
  MF_REQUIRE(out && (coords || n == 0), "null argument");
  return guarded([&] {
    std::vector<std::vector<mustafin::Coord>> raw(n);
    for (size_t i = 0; i < n; ++i) raw[i].assign(coords + i * d, coords + (i + 1) * d);
    *out = new mf_config{mustafin::Configuration::from_raw(d, raw), std::nullopt};
    return MF_OK;
  });
}

mf_status mf_config_local_model(size_t d, mf_config** out) {
  MF_REQUIRE(out, "null argument");
  return guarded([&] {
    *out = new mf_config{mustafin::local_model_chain(d), std::nullopt};
    return MF_OK;
  });
}

void mf_config_free(mf_config* cfg) { delete cfg; }

size_t mf_config_dim(const mf_config* cfg) { return cfg ? cfg->config.dim() : 0; }

size_t mf_config_size(const mf_config* cfg) { return cfg ? cfg->config.size() : 0; }

mf_status mf_config_point(const mf_config* cfg, size_t i, int64_t* out) {
  MF_REQUIRE(cfg && out, "null argument");
  MF_REQUIRE(i < cfg->config.size(), "point index out of range");
  const auto& p = cfg->config[i];
  for (size_t j = 0; j < p.dim(); ++j) out[j] = p[j];
  return MF_OK;
}

mf_status mf_contains(const mf_config* cfg, const int64_t* x, int* result) {
  MF_REQUIRE(cfg && x && result, "null argument");
  return guarded([&] {
    const auto p = mustafin::TorusPoint::normalize({x, cfg->config.dim()});
    *result = mustafin::contains(cfg->config, p) ? 1 : 0;
    return MF_OK;
  });
}

mf_status mf_general_position(const mf_config* cfg, int* result) {
  MF_REQUIRE(cfg && result, "null argument");
  return guarded([&] {
    *result = mustafin::is_general_position(cfg->config) ? 1 : 0;
    return MF_OK;
  });
}

mf_status mf_component_counts(const mf_config* cfg, size_t* total, size_t* primary,
                              size_t* secondary) {
  MF_REQUIRE(cfg, "null argument");
  return guarded([&] {
    const auto c = mustafin::component_counts(cfg->config);
    if (total) *total = c.total;
    if (primary) *primary = c.primary;
    if (secondary) *secondary = c.secondary;
    return MF_OK;
  });
}

mf_status mf_hilbert(const mf_config* cfg, const int64_t* vertex, const size_t* u,
                     char** out) {
  MF_REQUIRE(cfg && vertex && u && out, "null argument");
  return guarded([&] {
    const auto v = mustafin::TorusPoint::normalize({vertex, cfg->config.dim()});
    const auto desc = mustafin::describe_vertex(cfg->config, v);
    const auto value = mustafin::hilbert_function(
        desc.multidegrees, std::span<const size_t>(u, cfg->config.size()));
    *out = dup(value.str());
    return MF_OK;
  });
}

mf_status mf_report_config(const mf_config* cfg, mf_format fmt, char** out) {
  MF_REQUIRE(cfg && out, "null argument");
  return guarded([&] { return emit(mustafin::to_document(cfg->config, cfg->label), fmt, out); });
}

mf_status mf_report_hull(const mf_config* cfg, mf_format fmt, char** out) {
  MF_REQUIRE(cfg && out, "null argument");
  return guarded(
      [&] { return emit(mustafin::build_hull_report(cfg->config, cfg->label), fmt, out); });
}

mf_status mf_report_classify(const mf_config* cfg, mf_format fmt, char** out) {
  MF_REQUIRE(cfg && out, "null argument");
  return guarded([&] {
    return emit(mustafin::build_classification_report(cfg->config, cfg->label), fmt, out);
  });
}

mf_status mf_report_graph(const mf_config* cfg, mf_format fmt, char** out) {
  MF_REQUIRE(cfg && out, "null argument");
  return guarded([&] {
    if (fmt == MF_FORMAT_DOT) {
      *out = dup(mustafin::to_dot(mustafin::build_graph(cfg->config)));
      return MF_OK;
    }
    return emit(mustafin::build_graph_report(cfg->config), fmt, out);
  });
}

mf_status mf_report_gp(const mf_config* cfg, mf_format fmt, char** out) {
  MF_REQUIRE(cfg && out, "null argument");
  return guarded(
      [&] { return emit(mustafin::build_general_position_report(cfg->config), fmt, out); });
}

mf_status mf_report_verify(const mf_config* cfg, uint64_t seed, mf_format fmt, char** out,
                           int* all_passed) {
  MF_REQUIRE(cfg && out, "null argument");
  return guarded([&] {
    const auto r = mustafin::run_verification(cfg->config, seed);
    if (all_passed) *all_passed = r.passed ? 1 : 0;
    return emit(r, fmt, out);
  });
}

}  // extern "C"
