#include "cohjl.h"

#include <cstring>
#include <string>

#include "core/error.hpp"
#include "core/json_io.hpp"
#include "core/tables.hpp"

using namespace coh;

struct cohjl_ctx {
  std::string last_error;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// a check that ran to completion and failed; carries the structured JSON
// result alongside the message
struct check_failure {
  std::string payload;
  std::string message;
};

cohjl_status status_of(errc c) {
  switch (c) {
    case errc::invalid_input:
      return COHJL_ERR_INVALID_INPUT;
    case errc::check_failed:
      return COHJL_ERR_CHECK_FAILED;
    default:
      return COHJL_ERR_DOMAIN;
  }
}

template <typename Fn>
cohjl_status guarded(cohjl_ctx* ctx, char** out, Fn&& fn) {
  if (!ctx || !out) return COHJL_ERR_INVALID_INPUT;
  *out = nullptr;
  try {
    *out = dup_string(fn());
    ctx->last_error.clear();
    return COHJL_OK;
  } catch (const check_failure& e) {
    *out = dup_string(e.payload);
    ctx->last_error = e.message;
    return COHJL_ERR_CHECK_FAILED;
  } catch (const error& e) {
    ctx->last_error = std::string(errc_name(e.code())) + ": " + e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    ctx->last_error = e.what();
    return COHJL_ERR_INTERNAL;
  }
}

std::string require_str(const char* s, const char* what) {
  if (!s) fail(errc::invalid_input, std::string(what) + " must not be null");
  return s;
}

Weight mu_from_arg(const char* mu_json, int n) {
  Weight mu = weight_from_json(parse_json(require_str(mu_json, "mu")));
  if (static_cast<int>(mu.size()) != n)
    fail(errc::invalid_input, "mu must have " + std::to_string(n) + " entries");
  return mu;
}

Json predicates_json(const WeilParameter& t) {
  Json j;
  j["parameter"] = parameter_to_json(t);
  j["n"] = t.n();
  const bool alg = is_algebraic(t);
  j["algebraic"] = alg;
  if (alg) {
    j["regular"] = is_regular(t);
    auto w = purity_weight({t});
    j["purity"] = w ? Json(*w) : Json(nullptr);
  } else {
    j["regular"] = nullptr;
    j["purity"] = nullptr;
  }
  return j;
}

}  // namespace

extern "C" {

cohjl_ctx* cohjl_ctx_new(void) { return new cohjl_ctx(); }

void cohjl_ctx_free(cohjl_ctx* ctx) { delete ctx; }

const char* cohjl_last_error(const cohjl_ctx* ctx) {
  return ctx ? ctx->last_error.c_str() : "";
}

void cohjl_string_free(char* s) { std::free(s); }

const char* cohjl_version(void) { return "0.1.0"; }

cohjl_status cohjl_enumerate_partitions(cohjl_ctx* ctx, int k, char** out_json) {
  return guarded(ctx, out_json, [&] {
    Json j = Json::array();
    for (const OrderedPartition& p : enumerate_partitions(k)) j.push_back(partition_to_json(p));
    return j.dump();
  });
}

cohjl_status cohjl_catalog(cohjl_ctx* ctx, const char* kind, int k, const char* mu_json,
                           char** out_json) {
  return guarded(ctx, out_json, [&] {
    const std::string ks = require_str(kind, "kind");
    if (ks != "H" && ks != "R") fail(errc::invalid_input, "kind must be \"H\" or \"R\"");
    const GroupKind gk = ks == "H" ? GroupKind::quaternionic(k) : GroupKind::split_real(2 * k);
    const Weight mu = mu_from_arg(mu_json, gk.ambient_n());
    Json j = Json::array();
    for (const AqModule& m : enumerate_coh(gk, mu)) j.push_back(catalog_row_json(m));
    return j.dump();
  });
}

cohjl_status cohjl_tables(cohjl_ctx* ctx, int k, const char* mu_json, char** out_text) {
  return guarded(ctx, out_text, [&] {
    if (k < 1) fail(errc::invalid_input, "k must be >= 1");
    return render_tables(k, mu_from_arg(mu_json, 2 * k));
  });
}

cohjl_status cohjl_poincare(cohjl_ctx* ctx, const char* row_json, char** out_json) {
  return guarded(ctx, out_json, [&] {
    const AqModule m = module_from_json(parse_json(require_str(row_json, "row")));
    const IntPoly p = poincare(m);
    Json coeffs = Json::object();
    for (auto& [d, c] : p.coeffs()) coeffs[std::to_string(d)] = c;
    return Json{{"poincare", coeffs}, {"pretty", p.pretty()}}.dump();
  });
}

cohjl_status cohjl_transfer(cohjl_ctx* ctx, const char* row_json, char** out_json) {
  return guarded(ctx, out_json, [&] {
    const AqModule m = module_from_json(parse_json(require_str(row_json, "row")));
    return catalog_row_json(transfer(m)).dump();
  });
}

cohjl_status cohjl_fiber(cohjl_ctx* ctx, const char* row_json, const char* mu_json,
                         char** out_json) {
  return guarded(ctx, out_json, [&] {
    const AqModule m = module_from_json(parse_json(require_str(row_json, "row")));
    if (m.kind.is_split()) fail(errc::invalid_direction, "fiber expects a quaternionic row");
    const Weight mu = mu_from_arg(mu_json, m.kind.ambient_n());
    Json j = Json::array();
    for (const AqModule& s : fiber(m, mu)) j.push_back(catalog_row_json(s));
    return j.dump();
  });
}

cohjl_status cohjl_parameter(cohjl_ctx* ctx, const char* row_json, char** out_json) {
  return guarded(ctx, out_json, [&] {
    const AqModule m = module_from_json(parse_json(require_str(row_json, "row")));
    return predicates_json(parameter_of(m)).dump();
  });
}

cohjl_status cohjl_param_predicates(cohjl_ctx* ctx, const char* pairs_json, char** out_json) {
  return guarded(ctx, out_json, [&] {
    const WeilParameter t = parameter_from_json(parse_json(require_str(pairs_json, "pairs")));
    return predicates_json(t).dump();
  });
}

cohjl_status cohjl_descriptor_run(cohjl_ctx* ctx, const char* op, const char* descriptor_json,
                                  char** out_json) {
  return guarded(ctx, out_json, [&] {
    const std::string which = require_str(op, "op");
    const GlobalRepDescriptor desc =
        descriptor_from_json(parse_json(require_str(descriptor_json, "descriptor")));
    if (which == "jl") return descriptor_to_json(global_jl(desc)).dump();
    if (which == "purity") {
      auto w = global_purity(desc);
      return Json{{"purity", w ? Json(*w) : Json(nullptr)}}.dump();
    }
    if (which == "rationality")
      return subfield_to_json(global_rationality_field(desc)).dump();
    if (which == "kunneth") {
      const IntPoly p = kunneth_poincare(desc);
      Json coeffs = Json::object();
      for (auto& [d, c] : p.coeffs()) coeffs[std::to_string(d)] = c;
      return Json{{"poincare", coeffs}, {"pretty", p.pretty()}}.dump();
    }
    if (which == "field-equality") {
      const bool equal = jl_field_equality_check(desc);
      if (!equal)
        throw check_failure{Json{{"equal", false}}.dump(),
                            "rationality fields differ across the transfer"};
      return Json{{"equal", true}}.dump();
    }
    if (which == "check-regular-algebraic") {
      const CheckReport r = check_regular_algebraic(desc);
      const Json out{{"pass", r.pass}, {"reasons", r.reasons}};
      if (!r.pass) {
        std::string msg = "regular-algebraic check failed";
        for (const auto& reason : r.reasons) msg += "; " + reason;
        throw check_failure{out.dump(), msg};
      }
      return out.dump();
    }
    fail(errc::invalid_input, "unknown descriptor op '" + which + "'");
  });
}

}  // extern "C"
