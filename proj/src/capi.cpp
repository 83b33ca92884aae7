#include "octf4/octf4.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <string>

#include "octf4/json_io.hpp"
#include "octf4/verify.hpp"

struct octf4_config {
  octf4::Config cfg;
};
struct octf4_herm {
  octf4::HermMat3 a;
};
struct octf4_real_herm {
  octf4::RealHermMat3 x;
};
struct octf4_trace {
  octf4::ReductionTrace t;
};

namespace {

thread_local std::string last_error;

octf4_status status_of(octf4::ErrorCode c) {
  switch (c) {
    case octf4::ErrorCode::invalid_argument: return OCTF4_INVALID_ARGUMENT;
    case octf4::ErrorCode::parse_error: return OCTF4_PARSE_ERROR;
    case octf4::ErrorCode::not_on_variety: return OCTF4_NOT_ON_VARIETY;
    case octf4::ErrorCode::residual_failure: return OCTF4_RESIDUAL_FAILURE;
  }
  return OCTF4_INTERNAL_ERROR;
}

struct null_pointer {};

template <class T>
T& deref(T* p) {
  if (p == nullptr) throw null_pointer{};
  return *p;
}

template <class F>
octf4_status try_(F&& f) {
  try {
    f();
  } catch (const null_pointer&) {
    last_error = "null pointer argument";
    return OCTF4_INVALID_ARGUMENT;
  } catch (const octf4::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    last_error = e.what();
    return OCTF4_INTERNAL_ERROR;
  } catch (...) {
    last_error = "unknown exception";
    return OCTF4_INTERNAL_ERROR;
  }
  last_error.clear();
  return OCTF4_OK;
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

octf4::Json parse(const char* text) {
  if (text == nullptr) throw null_pointer{};
  return octf4::parse_json(text);
}

const octf4::Config& config_or_default(const octf4_config* c) {
  static const octf4::Config defaults;
  return c ? c->cfg : defaults;
}

}  // namespace

extern "C" {

const char* octf4_last_error(void) { return last_error.c_str(); }

const char* octf4_status_name(octf4_status s) {
  switch (s) {
    case OCTF4_OK: return "ok";
    case OCTF4_INVALID_ARGUMENT: return "invalid argument";
    case OCTF4_PARSE_ERROR: return "parse error";
    case OCTF4_NOT_ON_VARIETY: return "not on the variety";
    case OCTF4_RESIDUAL_FAILURE: return "residual failure";
    case OCTF4_INTERNAL_ERROR: return "internal error";
  }
  return "unknown status";
}

void octf4_string_free(char* s) { std::free(s); }

const char* octf4_version(void) { return "1.0.0"; }

octf4_status octf4_config_create(octf4_config** out) {
  return try_([&] { deref(out) = new octf4_config{}; });
}

octf4_status octf4_config_from_json(const char* json, octf4_config** out) {
  return try_([&] {
    auto& slot = deref(out);
    slot = nullptr;
    slot = new octf4_config{octf4::config_from_json(parse(json))};
  });
}

octf4_status octf4_config_to_json(const octf4_config* cfg, char** out) {
  return try_([&] { deref(out) = copy_string(octf4::to_json(deref(cfg).cfg).dump()); });
}

octf4_status octf4_config_set_seed(octf4_config* cfg, uint64_t seed) {
  return try_([&] { deref(cfg).cfg.seed = seed; });
}

octf4_status octf4_config_get_seed(const octf4_config* cfg, uint64_t* seed) {
  return try_([&] { deref(seed) = deref(cfg).cfg.seed; });
}

octf4_status octf4_config_set_samples(octf4_config* cfg, int samples) {
  return try_([&] {
    octf4::Config c = deref(cfg).cfg;
    c.samples = samples;
    c.validate();
    cfg->cfg = c;
  });
}

octf4_status octf4_config_get_samples(const octf4_config* cfg, int* samples) {
  return try_([&] { deref(samples) = deref(cfg).cfg.samples; });
}

octf4_status octf4_config_set_accept(octf4_config* cfg, double tol) {
  return try_([&] {
    octf4::Config c = deref(cfg).cfg;
    c.tol.accept = tol;
    c.tol.classify = std::max(c.tol.classify, tol);
    c.validate();
    cfg->cfg = c;
  });
}

void octf4_config_destroy(octf4_config* cfg) { delete cfg; }

octf4_status octf4_herm_from_json(const char* json, octf4_herm** out) {
  return try_([&] {
    auto& slot = deref(out);
    slot = nullptr;
    slot = new octf4_herm{octf4::herm_from_json(parse(json))};
  });
}

octf4_status octf4_herm_canonical(octf4_herm** out) {
  return try_([&] { deref(out) = new octf4_herm{octf4::canonical_form()}; });
}

octf4_status octf4_herm_to_json(const octf4_herm* a, char** out) {
  return try_([&] { deref(out) = copy_string(octf4::to_json(deref(a).a).dump()); });
}

void octf4_herm_destroy(octf4_herm* a) { delete a; }

octf4_status octf4_real_herm_from_json(const char* json, octf4_real_herm** out) {
  return try_([&] {
    auto& slot = deref(out);
    slot = nullptr;
    slot = new octf4_real_herm{octf4::real_herm_from_json(parse(json))};
  });
}

octf4_status octf4_real_herm_to_json(const octf4_real_herm* x, char** out) {
  return try_([&] { deref(out) = copy_string(octf4::to_json(deref(x).x).dump()); });
}

void octf4_real_herm_destroy(octf4_real_herm* x) { delete x; }

octf4_status octf4_classify(const octf4_herm* a, const octf4_config* cfg, char** out) {
  return try_([&] {
    auto& slot = deref(out);
    slot = nullptr;
    const auto c = octf4::classify(deref(a).a, config_or_default(cfg).tol);
    slot = copy_string(octf4::to_json(c).dump());
  });
}

octf4_status octf4_reduce(const octf4_herm* a, const octf4_config* cfg, octf4_trace** out) {
  if (out) *out = nullptr;
  return try_([&] {
    auto& dst = deref(out);
    try {
      dst = new octf4_trace{octf4::reduce_to_canonical(deref(a).a, config_or_default(cfg).tol)};
    } catch (const octf4::ReductionError& e) {
      dst = new octf4_trace{e.trace()};
      throw;
    }
  });
}

octf4_status octf4_reduce_real(const octf4_real_herm* x, const octf4_config* cfg,
                               octf4_trace** out) {
  if (out) *out = nullptr;
  return try_([&] {
    auto& dst = deref(out);
    try {
      dst = new octf4_trace{octf4::reduce_real(deref(x).x, config_or_default(cfg).tol)};
    } catch (const octf4::ReductionError& e) {
      dst = new octf4_trace{e.trace()};
      throw;
    }
  });
}

octf4_status octf4_trace_from_json(const char* json, octf4_trace** out) {
  return try_([&] {
    auto& slot = deref(out);
    slot = nullptr;
    slot = new octf4_trace{octf4::trace_from_json(parse(json))};
  });
}

octf4_status octf4_trace_to_json(const octf4_trace* t, char** out) {
  return try_([&] { deref(out) = copy_string(octf4::to_json(deref(t).t).dump()); });
}

octf4_status octf4_trace_residual(const octf4_trace* t, double* out) {
  return try_([&] { deref(out) = deref(t).t.residual; });
}

octf4_status octf4_trace_word_length(const octf4_trace* t, int* out) {
  return try_([&] { deref(out) = static_cast<int>(deref(t).t.word.size()); });
}

octf4_status octf4_trace_verify(const octf4_trace* t, const octf4_config* cfg, int* ok,
                                char** report) {
  return try_([&] {
    const auto check = octf4::verify_trace(deref(t).t, config_or_default(cfg).tol);
    deref(ok) = check.ok ? 1 : 0;
    if (report) *report = copy_string(octf4::to_json(check).dump());
  });
}

void octf4_trace_destroy(octf4_trace* t) { delete t; }

octf4_status octf4_sample(uint64_t seed, int n, int real, char** out) {
  return try_([&] {
    auto& slot = deref(out);
    slot = nullptr;
    if (n < 0) throw octf4::Error(octf4::ErrorCode::invalid_argument, "negative sample count");
    octf4::Json j = octf4::Json::array();
    if (real) {
      for (const auto& x : octf4::sample_real_orbit(seed, n)) j.push_back(octf4::to_json(x));
    } else {
      for (const auto& a : octf4::sample_orbit(seed, n)) j.push_back(octf4::to_json(a));
    }
    slot = copy_string(j.dump());
  });
}

octf4_status octf4_verify_suite(const char* name, int n, uint64_t seed, const octf4_config* cfg,
                                int* passed, char** report) {
  return try_([&] {
    if (name == nullptr) throw null_pointer{};
    const auto r = octf4::run_suite(name, n, seed, config_or_default(cfg));
    deref(passed) = r.passed ? 1 : 0;
    if (report) {
      octf4::Json j = {{"suite", r.name}, {"passed", r.passed}, {"details", r.details}};
      *report = copy_string(j.dump());
    }
  });
}

const char* octf4_suite_names(void) {
  static const std::string names = [] {
    std::string s;
    for (const auto& n : octf4::suite_names()) s += (s.empty() ? "" : " ") + n;
    return s;
  }();
  return names.c_str();
}

octf4_status octf4_dims_json(char** out) {
  return try_([&] { deref(out) = copy_string(octf4::dims_report().dump()); });
}

}  // extern "C"
