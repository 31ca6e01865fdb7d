#include "padim/padim.h"

#include <cstdlib>
#include <cstring>
#include <limits>
#include <memory>
#include <new>
#include <optional>
#include <string>

#include "padim/arith.hpp"
#include "padim/dimcore.hpp"
#include "service.hpp"

struct padim_context {
  padim::service::Config config;
  std::string error_kind;
  std::string error_detail;
  std::int64_t error_index = -1;
};

struct padim_series {
  padim::FpSeries value;
};

struct padim_padic {
  padim::PadicInt value;
};

namespace {

void clear(padim_context* ctx) {
  ctx->error_kind.clear();
  ctx->error_detail.clear();
  ctx->error_index = -1;
}

padim_status record(padim_context* ctx, padim_status status, std::string kind, std::string detail,
                    std::optional<std::int64_t> index = std::nullopt) {
  ctx->error_kind = std::move(kind);
  ctx->error_detail = std::move(detail);
  ctx->error_index = index.value_or(-1);
  return status;
}

// Runs f, translating exceptions into a status recorded on ctx.
template <class F>
padim_status guarded(padim_context* ctx, F&& f) {
  if (!ctx) return PADIM_USAGE_ERROR;
  clear(ctx);
  try {
    f();
    return PADIM_OK;
  } catch (const padim::Error& e) {
    return record(ctx, PADIM_DOMAIN_ERROR, std::string(padim::to_string(e.kind())), e.what(), e.index());
  } catch (const std::bad_alloc&) {
    return record(ctx, PADIM_INTERNAL_ERROR, "Internal", "out of memory");
  } catch (const std::exception& e) {
    return record(ctx, PADIM_INTERNAL_ERROR, "Internal", e.what());
  }
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* padim_version(void) { return "1.0.0"; }

padim_context* padim_context_new(void) { return new (std::nothrow) padim_context(); }

void padim_context_free(padim_context* ctx) { delete ctx; }

void padim_context_set_precision(padim_context* ctx, size_t digits) {
  if (ctx && digits > 0) ctx->config.default_precision = digits;
}

void padim_context_set_size_cap(padim_context* ctx, size_t cap) {
  if (ctx && cap > 0) ctx->config.limits.size_cap = cap;
}

const char* padim_last_error_kind(const padim_context* ctx) { return ctx ? ctx->error_kind.c_str() : ""; }

const char* padim_last_error(const padim_context* ctx) { return ctx ? ctx->error_detail.c_str() : ""; }

int64_t padim_last_error_index(const padim_context* ctx) { return ctx ? ctx->error_index : -1; }

padim_status padim_call(padim_context* ctx, const char* op, const char* request_json, char** response) {
  if (!ctx || !op || !request_json || !response) return PADIM_USAGE_ERROR;
  clear(ctx);
  *response = nullptr;
  padim::service::Response r{padim::service::Status::Internal, {}};
  try {
    const auto request = nlohmann::json::parse(request_json);
    r = padim::service::dispatch(op, request, ctx->config);
  } catch (const nlohmann::json::parse_error& e) {
    r = {padim::service::Status::Usage,
         {{"ok", false}, {"error", {{"kind", "UsageError"}, {"detail", std::string("invalid JSON: ") + e.what()}}}}};
  } catch (const std::exception& e) {
    r = {padim::service::Status::Internal, {{"ok", false}, {"error", {{"kind", "Internal"}, {"detail", e.what()}}}}};
  }
  if (r.status != padim::service::Status::Ok) {
    const auto& err = r.body.at("error");
    std::optional<std::int64_t> index;
    if (err.contains("index")) index = err.at("index").get<std::int64_t>();
    record(ctx, static_cast<padim_status>(r.status), err.at("kind").get<std::string>(),
           err.at("detail").get<std::string>(), index);
  }
  *response = duplicate(r.body.dump());
  if (!*response) return record(ctx, PADIM_INTERNAL_ERROR, "Internal", "out of memory");
  return static_cast<padim_status>(r.status);
}

void padim_string_free(char* s) { std::free(s); }

size_t padim_operation_count(void) { return padim::service::operations().size(); }

const char* padim_operation_name(size_t i) {
  const auto& ops = padim::service::operations();
  return i < ops.size() ? ops[i].c_str() : nullptr;
}

padim_status padim_padic_new(padim_context* ctx, uint32_t p, const uint32_t* digits, size_t precision,
                             padim_padic** out) {
  return guarded(ctx, [&] {
    if (!out || (!digits && precision)) padim::fail(padim::ErrorKind::InvalidArgument, "null argument");
    *out = new padim_padic{padim::PadicInt(p, std::vector<padim::Residue>(digits, digits + precision))};
  });
}

padim_status padim_padic_from_int(padim_context* ctx, uint32_t p, size_t precision, int64_t value,
                                  padim_padic** out) {
  return guarded(ctx, [&] {
    if (!out) padim::fail(padim::ErrorKind::InvalidArgument, "null argument");
    *out = new padim_padic{padim::PadicInt::from_integer(p, precision, value)};
  });
}

void padim_padic_free(padim_padic* t) { delete t; }

uint32_t padim_padic_prime(const padim_padic* t) { return t ? t->value.p() : 0; }

size_t padim_padic_precision(const padim_padic* t) { return t ? t->value.precision() : 0; }

uint32_t padim_padic_digit(const padim_padic* t, size_t i) {
  return t && i < t->value.precision() ? t->value.digits()[i] : 0;
}

padim_status padim_padic_to_int(padim_context* ctx, const padim_padic* t, int64_t* out) {
  return guarded(ctx, [&] {
    if (!t || !out) padim::fail(padim::ErrorKind::InvalidArgument, "null argument");
    const padim::BigInt v = t->value.to_signed();
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
      padim::fail(padim::ErrorKind::InvalidArgument, "value does not fit in 64 bits");
    *out = static_cast<std::int64_t>(v);
  });
}

padim_status padim_series_new(padim_context* ctx, uint32_t p, const uint32_t* coeffs, size_t trunc,
                              padim_series** out) {
  return guarded(ctx, [&] {
    if (!out || (!coeffs && trunc)) padim::fail(padim::ErrorKind::InvalidArgument, "null argument");
    *out = new padim_series{padim::FpSeries(p, std::vector<padim::Residue>(coeffs, coeffs + trunc))};
  });
}

padim_status padim_series_binomial_base(padim_context* ctx, uint32_t p, size_t trunc, padim_base base,
                                        padim_series** out) {
  return guarded(ctx, [&] {
    if (!out) padim::fail(padim::ErrorKind::InvalidArgument, "null argument");
    *out = new padim_series{padim::FpSeries::one_plus_z(p, trunc, base == PADIM_BASE_MINUS ? -1 : 1)};
  });
}

void padim_series_free(padim_series* s) { delete s; }

size_t padim_series_trunc(const padim_series* s) { return s ? s->value.trunc() : 0; }

uint32_t padim_series_coeff(const padim_series* s, size_t i) {
  return s && i < s->value.trunc() ? s->value.coeffs()[i] : 0;
}

padim_status padim_series_pow(padim_context* ctx, const padim_series* f, const padim_padic* t, padim_series** out) {
  return guarded(ctx, [&] {
    if (!f || !t || !out) padim::fail(padim::ErrorKind::InvalidArgument, "null argument");
    *out = new padim_series{padim::pow_padic(f->value, t->value)};
  });
}

padim_status padim_series_extract(padim_context* ctx, const padim_series* f, padim_base base, padim_padic** out) {
  return guarded(ctx, [&] {
    if (!f || !out) padim::fail(padim::ErrorKind::InvalidArgument, "null argument");
    *out = new padim_padic{
        padim::extract_exponent(f->value, base == PADIM_BASE_MINUS ? padim::Base::Minus : padim::Base::Plus)};
  });
}

padim_status padim_dim(padim_context* ctx, uint32_t p, padim_kind kind, const uint32_t* values, size_t count,
                       padim_padic** out) {
  return guarded(ctx, [&] {
    if (!out || (!values && count)) padim::fail(padim::ErrorKind::InvalidArgument, "null argument");
    const padim::DimSequence seq(p, kind == PADIM_EXTERIOR ? padim::Kind::Exterior : padim::Kind::Symmetric,
                                 std::vector<padim::Residue>(values, values + count));
    *out = new padim_padic{kind == PADIM_EXTERIOR ? padim::dim_minus(seq) : padim::dim_plus(seq)};
  });
}

}  // extern "C"
