#pragma once

#include <optional>
#include <string>

#include "g2count/g2count.h"
#include "g2count/siegel.hpp"
#include "json.hpp"

struct g2c_curve {
  g2c::Curve curve;
  std::string text;
};

struct g2c_options {
  g2c::PipelineOptions pipe;
  std::uint64_t seed = 1;
  int ext_guard = g2c::kDefaultExtGuard;
  std::uint64_t count_guard = g2c::kDefaultCountGuard;
  std::optional<std::string> modeq_dir;
  std::optional<std::int64_t> disc;
  std::optional<std::int64_t> bound;
  g2c::Rational eps{3, 8};
  bool verify = false;
};

struct g2c_result {
  g2c_status status = G2C_OK;
  std::string json;
  std::string error;
};

namespace g2c::capi {

using nlohmann::json;

// Payload plus status; a non-OK status without an exception (exhaustion,
// failed verification) keeps the payload.
struct Outcome {
  json body;
  g2c_status status = G2C_OK;
  std::string message;
};

g2c_status status_of(ErrorKind k);

json to_json(const CharPoly& chi);
json big(const BigInt& v);
json rational(const Rational& r);
json vec(const modl::Vec& v);
json mat(const modl::Mat& m);

Outcome count(const g2c_curve& c, g2c_count_mode mode, const g2c_options& o);
Outcome classify(const g2c_curve& c, const g2c_options& o);
Outcome rm_reconstruct(std::int64_t disc, std::int64_t q, const g2c_residue* residues, std::size_t n);
Outcome torsion(const g2c_curve& c, std::int64_t ell, const g2c_options& o);
Outcome verify_props(const g2c_curve& c, const g2c_options& o);

}  // namespace g2c::capi
