#include <functional>
#include <new>

#include "internal.hpp"

using g2c::capi::Outcome;

namespace g2c::capi {

g2c_status status_of(ErrorKind k) {
  switch (k) {
    case ErrorKind::Usage: return G2C_USAGE;
    case ErrorKind::Parse: return G2C_PARSE;
    case ErrorKind::Validation: return G2C_VALIDATION;
    case ErrorKind::BoundNotMet: return G2C_BOUND_NOT_MET;
    case ErrorKind::EmptyRange: return G2C_EMPTY_RANGE;
    case ErrorKind::Ramified: return G2C_RAMIFIED;
    case ErrorKind::DenominatorVanishes: return G2C_DENOMINATOR_VANISHES;
    case ErrorKind::GuardExceeded: return G2C_GUARD_EXCEEDED;
    case ErrorKind::NonGeneric: return G2C_NON_GENERIC;
    case ErrorKind::NotRational: return G2C_NOT_RATIONAL;
    case ErrorKind::Exhausted: return G2C_EXHAUSTED;
    case ErrorKind::Inconsistent: return G2C_INCONSISTENT;
    case ErrorKind::Internal: return G2C_INTERNAL;
  }
  return G2C_INTERNAL;
}

}  // namespace g2c::capi

namespace {

g2c::ErrorKind kind_of(g2c_status s) {
  using g2c::ErrorKind;
  switch (s) {
    case G2C_USAGE: return ErrorKind::Usage;
    case G2C_PARSE: return ErrorKind::Parse;
    case G2C_VALIDATION: return ErrorKind::Validation;
    case G2C_BOUND_NOT_MET: return ErrorKind::BoundNotMet;
    case G2C_EMPTY_RANGE: return ErrorKind::EmptyRange;
    case G2C_RAMIFIED: return ErrorKind::Ramified;
    case G2C_DENOMINATOR_VANISHES: return ErrorKind::DenominatorVanishes;
    case G2C_GUARD_EXCEEDED: return ErrorKind::GuardExceeded;
    case G2C_NON_GENERIC: return ErrorKind::NonGeneric;
    case G2C_NOT_RATIONAL: return ErrorKind::NotRational;
    case G2C_EXHAUSTED: return ErrorKind::Exhausted;
    case G2C_INCONSISTENT: return ErrorKind::Inconsistent;
    default: return ErrorKind::Internal;
  }
}

g2c_result* make_result(g2c_status s, nlohmann::json body, const std::string& message) {
  auto* r = new (std::nothrow) g2c_result;
  if (!r) return nullptr;
  r->status = s;
  r->error = message;
  if (s != G2C_OK)
    body["error"] = {{"class", g2c_status_name(s)}, {"message", message}, {"exit_code", g2c_status_exit_code(s)}};
  r->json = body.dump();
  return r;
}

g2c_status guarded(g2c_result** out, const std::function<Outcome()>& f) {
  g2c_status s = G2C_INTERNAL;
  nlohmann::json body = nlohmann::json::object();
  std::string message;
  try {
    Outcome o = f();
    s = o.status;
    body = std::move(o.body);
    message = std::move(o.message);
  } catch (const g2c::Error& e) {
    s = g2c::capi::status_of(e.kind());
    message = e.what();
  } catch (const std::bad_alloc&) {
    message = "out of memory";
  } catch (const std::exception& e) {
    message = e.what();
  }
  if (out) {
    try {
      *out = make_result(s, std::move(body), message);
    } catch (...) {
      *out = nullptr;
    }
  }
  return s;
}

}  // namespace

extern "C" {

const char* g2c_version(void) { return "0.1.0"; }

const char* g2c_status_name(g2c_status s) {
  if (s == G2C_OK) return "OK";
  return g2c::error_kind_name(kind_of(s));
}

int g2c_status_exit_code(g2c_status s) { return s == G2C_OK ? 0 : g2c::error_exit_code(kind_of(s)); }

g2c_status g2c_curve_parse(const char* text, g2c_curve** out, g2c_result** err) {
  if (out) *out = nullptr;
  if (err) *err = nullptr;
  g2c_curve* made = nullptr;
  g2c_result* r = nullptr;
  const g2c_status s = guarded(&r, [&] {
    if (!text || !out) g2c::fail(g2c::ErrorKind::Usage, "null argument");
    g2c::Curve C = g2c::parse_curve(text);
    made = new g2c_curve{C, g2c::curve_to_string(C)};
    return Outcome{{{"curve", made->text}}, G2C_OK, {}};
  });
  if (s == G2C_OK) *out = made;
  if (err) *err = r;
  else g2c_result_free(r);
  return s;
}

const char* g2c_curve_string(const g2c_curve* c) { return c ? c->text.c_str() : ""; }
void g2c_curve_free(g2c_curve* c) { delete c; }

g2c_options* g2c_options_new(void) { return new (std::nothrow) g2c_options; }
void g2c_options_free(g2c_options* o) { delete o; }

void g2c_options_set_primes(g2c_options* o, const int64_t* primes, size_t n) {
  if (!o) return;
  o->pipe.primes.assign(primes, primes + (primes ? n : 0));
}
void g2c_options_set_max_prime(g2c_options* o, int64_t max_prime) {
  if (o) o->pipe.max_prime = max_prime;
}
void g2c_options_set_jobs(g2c_options* o, unsigned jobs) {
  if (o) o->pipe.jobs = jobs ? jobs : 1;
}
void g2c_options_set_seed(g2c_options* o, uint64_t seed) {
  if (o) o->seed = seed;
}
void g2c_options_set_ext_guard(g2c_options* o, int guard) {
  if (o) o->ext_guard = guard;
}
void g2c_options_set_count_guard(g2c_options* o, uint64_t guard) {
  if (o) o->count_guard = guard;
}
void g2c_options_set_modeq_dir(g2c_options* o, const char* dir) {
  if (!o) return;
  if (dir) o->modeq_dir = dir;
  else o->modeq_dir.reset();
}
void g2c_options_set_disc(g2c_options* o, int64_t disc) {
  if (o) o->disc = disc;
}
void g2c_options_set_bound(g2c_options* o, int64_t x) {
  if (o) o->bound = x;
}
void g2c_options_set_epsilon(g2c_options* o, int64_t num, int64_t den) {
  if (o && den != 0) o->eps = g2c::Rational(num, den);
}
void g2c_options_set_verify(g2c_options* o, int verify) {
  if (o) o->verify = verify != 0;
}

namespace {
const g2c_options& opts_or_default(const g2c_options* o) {
  static const g2c_options defaults;
  return o ? *o : defaults;
}
}  // namespace

g2c_status g2c_count(const g2c_curve* c, g2c_count_mode mode, const g2c_options* o, g2c_result** out) {
  return guarded(out, [&] {
    if (!c) g2c::fail(g2c::ErrorKind::Usage, "null curve");
    return g2c::capi::count(*c, mode, opts_or_default(o));
  });
}

g2c_status g2c_classify(const g2c_curve* c, const g2c_options* o, g2c_result** out) {
  return guarded(out, [&] {
    if (!c) g2c::fail(g2c::ErrorKind::Usage, "null curve");
    return g2c::capi::classify(*c, opts_or_default(o));
  });
}

g2c_status g2c_rm_reconstruct(int64_t disc, int64_t q, const g2c_residue* residues, size_t n, g2c_result** out) {
  return guarded(out, [&] {
    if (!residues && n) g2c::fail(g2c::ErrorKind::Usage, "null residues");
    return g2c::capi::rm_reconstruct(disc, q, residues, n);
  });
}

g2c_status g2c_torsion(const g2c_curve* c, int64_t ell, const g2c_options* o, g2c_result** out) {
  return guarded(out, [&] {
    if (!c) g2c::fail(g2c::ErrorKind::Usage, "null curve");
    return g2c::capi::torsion(*c, ell, opts_or_default(o));
  });
}

g2c_status g2c_verify_props(const g2c_curve* c, const g2c_options* o, g2c_result** out) {
  return guarded(out, [&] {
    if (!c) g2c::fail(g2c::ErrorKind::Usage, "null curve");
    return g2c::capi::verify_props(*c, opts_or_default(o));
  });
}

g2c_status g2c_result_status(const g2c_result* r) { return r ? r->status : G2C_USAGE; }
const char* g2c_result_json(const g2c_result* r) { return r ? r->json.c_str() : "{}"; }
const char* g2c_result_error(const g2c_result* r) { return r ? r->error.c_str() : ""; }
void g2c_result_free(g2c_result* r) { delete r; }

}  // extern "C"
