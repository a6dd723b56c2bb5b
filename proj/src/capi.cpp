#include "msym/msym.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "msym/calculus.hpp"
#include "msym/commands.hpp"
#include "msym/parallel.hpp"
#include "msym/young.hpp"

struct msym_context {
  int threads = 1;
  std::string last_error;
};

struct msym_form {
  msym::MultiForm value;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Runs f, translating exceptions into status codes and an error document.
template <class F>
int guarded(msym_context* ctx, F&& f, msym::Json* error_doc = nullptr) {
  if (!ctx) return MSYM_ERR_VALIDATION;
  ctx->last_error.clear();
  msym::set_default_threads(ctx->threads);
  int code = MSYM_OK;
  std::string kind;
  msym::Json extra = msym::Json::object();
  try {
    f();
    return MSYM_OK;
  } catch (const msym::NotClosedError& e) {
    code = MSYM_ERR_PRECONDITION;
    kind = "not_closed";
    ctx->last_error = e.what();
    extra["residual"] = msym::multiform_to_json(e.residual());
  } catch (const msym::Error& e) {
    code = static_cast<int>(e.kind());
    static const char* names[] = {"", "", "validation", "precondition", "resource", "consistency"};
    kind = names[code];
    ctx->last_error = e.what();
  } catch (const std::bad_alloc&) {
    code = MSYM_ERR_RESOURCE;
    kind = "resource";
    ctx->last_error = "out of memory";
  } catch (const std::exception& e) {
    code = MSYM_ERR_CONSISTENCY;
    kind = "internal";
    ctx->last_error = std::string("internal error: ") + e.what();
  }
  if (error_doc) {
    extra["kind"] = kind;
    extra["message"] = ctx->last_error;
    extra["exit_code"] = code;
    *error_doc = msym::Json{{"error", extra}};
  }
  return code;
}

int null_argument(msym_context* ctx) {
  if (ctx) ctx->last_error = "null argument";
  return MSYM_ERR_VALIDATION;
}

int emit_form(msym_context* ctx, msym::MultiForm value, msym_form** out) {
  *out = new msym_form{std::move(value)};
  (void)ctx;
  return MSYM_OK;
}

}  // namespace

extern "C" {

const char* msym_version(void) { return msym::library_version(); }

int msym_context_create(msym_context** out) {
  if (!out) return MSYM_ERR_VALIDATION;
  *out = new (std::nothrow) msym_context();
  return *out ? MSYM_OK : MSYM_ERR_RESOURCE;
}

void msym_context_destroy(msym_context* ctx) { delete ctx; }

int msym_set_threads(msym_context* ctx, int threads) {
  if (!ctx) return MSYM_ERR_VALIDATION;
  if (threads < 1) {
    ctx->last_error = "thread count must be at least 1";
    return MSYM_ERR_VALIDATION;
  }
  ctx->threads = threads;
  ctx->last_error.clear();
  return MSYM_OK;
}

const char* msym_last_error(const msym_context* ctx) { return ctx ? ctx->last_error.c_str() : "null context"; }

int msym_command(msym_context* ctx, const char* name, const char* request_json, char** out_json) {
  if (!ctx || !name || !request_json || !out_json) return null_argument(ctx);
  *out_json = nullptr;
  msym::Json result;
  msym::Json error;
  const int code = guarded(
      ctx, [&] { result = msym::run_command(name, msym::parse_json(request_json)); }, &error);
  try {
    *out_json = dup_string((code == MSYM_OK ? result : error).dump(2) + "\n");
  } catch (const std::bad_alloc&) {
    ctx->last_error = "out of memory";
    return MSYM_ERR_RESOURCE;
  }
  return code;
}

void msym_string_free(char* s) { std::free(s); }

int msym_form_parse(msym_context* ctx, const char* json, msym_form** out) {
  if (!ctx || !json || !out) return null_argument(ctx);
  return guarded(ctx, [&] { emit_form(ctx, msym::multiform_from_json(msym::parse_json(json)), out); });
}

void msym_form_destroy(msym_form* form) { delete form; }

int msym_form_to_json(msym_context* ctx, const msym_form* form, char** out_json) {
  if (!ctx || !form || !out_json) return null_argument(ctx);
  return guarded(ctx, [&] { *out_json = dup_string(msym::multiform_to_json(form->value).dump(2) + "\n"); });
}

int msym_form_project(msym_context* ctx, const msym_form* form, msym_form** out) {
  if (!ctx || !form || !out) return null_argument(ctx);
  return guarded(ctx, [&] { emit_form(ctx, msym::project(form->value), out); });
}

int msym_form_d(msym_context* ctx, const msym_form* form, int slot, msym_form** out) {
  if (!ctx || !form || !out) return null_argument(ctx);
  return guarded(ctx, [&] {
    if (slot < 1 || slot > form->value.shape().N()) throw msym::ValidationError("slot must lie in [1, N]");
    emit_form(ctx, msym::d_i(form->value, slot - 1), out);
  });
}

int msym_form_delta_n(msym_context* ctx, const msym_form* form, msym_form** out, int* top_degree) {
  if (!ctx || !form || !out) return null_argument(ctx);
  return guarded(ctx, [&] {
    bool top = false;
    emit_form(ctx, msym::delta_N(form->value, &top), out);
    if (top_degree) *top_degree = top ? 1 : 0;
  });
}

int msym_form_hodge(msym_context* ctx, const msym_form* form, const int* slots, size_t nslots, const char* metric,
                    msym_form** out) {
  if (!ctx || !form || !out || (!slots && nslots) || !metric) return null_argument(ctx);
  return guarded(ctx, [&] {
    std::vector<int> s;
    for (size_t i = 0; i < nslots; ++i) {
      if (slots[i] < 1 || slots[i] > form->value.shape().N()) throw msym::ValidationError("slots must lie in [1, N]");
      s.push_back(slots[i] - 1);
    }
    emit_form(ctx, msym::hodge_slots(form->value, s, msym::Metric::parse(metric, form->value.shape().D)), out);
  });
}

int msym_form_homotopy(msym_context* ctx, const msym_form* form, msym_form** potential) {
  if (!ctx || !form || !potential) return null_argument(ctx);
  return guarded(ctx, [&] { emit_form(ctx, msym::poincare_homotopy(form->value).potential, potential); });
}

int msym_form_add(msym_context* ctx, const msym_form* a, const msym_form* b, msym_form** out) {
  if (!ctx || !a || !b || !out) return null_argument(ctx);
  return guarded(ctx, [&] { emit_form(ctx, a->value + b->value, out); });
}

int msym_form_is_zero(msym_context* ctx, const msym_form* form, int* out) {
  if (!ctx || !form || !out) return null_argument(ctx);
  return guarded(ctx, [&] { *out = form->value.is_zero() ? 1 : 0; });
}

int msym_form_equal(msym_context* ctx, const msym_form* a, const msym_form* b, int* out) {
  if (!ctx || !a || !b || !out) return null_argument(ctx);
  return guarded(ctx, [&] { *out = a->value == b->value ? 1 : 0; });
}

}  // extern "C"
