// Command-line front end over the C API. Results go to stdout (text or JSON),
// progress and diagnostics to stderr.

#include <cstdint>
#include <functional>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "g2count/g2count.h"
#include "json.hpp"

using nlohmann::json;

namespace {

constexpr int kUsageExit = 2;

struct Common {
  std::vector<std::string> curve_tokens;
  std::string curve_opt;
  bool as_json = false;
  bool quiet = false;
  std::uint64_t seed = 1;
  unsigned jobs = 1;
  int ext_guard = 12;
  std::uint64_t count_guard = std::uint64_t{1} << 26;
};

struct Args {
  Common common;
  bool naive = false, siegel = false, hilbert = false;
  bool oracle = false;
  std::string modeq_dir;
  bool verify = false;
  std::optional<std::int64_t> disc;
  std::string primes;
  std::int64_t max_prime = 0;
  std::optional<std::int64_t> bound;
  std::string epsilon = "3/8";
  std::int64_t q = 0;
  std::vector<std::string> residues;
  std::int64_t ell = 0;
};

using CurvePtr = std::unique_ptr<g2c_curve, decltype(&g2c_curve_free)>;
using OptsPtr = std::unique_ptr<g2c_options, decltype(&g2c_options_free)>;
using ResultPtr = std::unique_ptr<g2c_result, decltype(&g2c_result_free)>;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void progress(const Common& c, const std::string& msg) {
  if (!c.quiet) std::cerr << "g2count: " << msg << '\n';
}

std::string curve_text(const Common& c) {
  std::string text = c.curve_opt;
  for (const auto& t : c.curve_tokens) text += (text.empty() ? "" : ";") + t;
  if (text.empty()) throw UsageError("a curve is required, e.g. p=11 P=[1,0,0,0,0,1]");
  return text;
}

std::int64_t to_int(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw UsageError("bad integer for " + what + ": '" + s + "'");
  return v;
}

std::pair<std::int64_t, std::int64_t> parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) return {to_int(s, "epsilon"), 1};
  const auto den = to_int(s.substr(slash + 1), "epsilon");
  if (den == 0) throw UsageError("epsilon has zero denominator");
  return {to_int(s.substr(0, slash), "epsilon"), den};
}

// "ell:value" or "ell:a,b:value" with beta = a + b w.
g2c_residue parse_residue(const std::string& s) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
  g2c_residue r{};
  if (parts.size() == 2) {
    r.ell = to_int(parts[0], "residue prime");
    r.value = to_int(parts[1], "residue value");
  } else if (parts.size() == 3) {
    const auto comma = parts[1].find(',');
    if (comma == std::string::npos) throw UsageError("residue generator must be a,b: '" + s + "'");
    r.ell = to_int(parts[0], "residue prime");
    r.beta_a = to_int(parts[1].substr(0, comma), "generator");
    r.beta_b = to_int(parts[1].substr(comma + 1), "generator");
    r.value = to_int(parts[2], "residue value");
  } else {
    throw UsageError("residue must be ell:value or ell:a,b:value, got '" + s + "'");
  }
  return r;
}

OptsPtr make_options(const Args& a) {
  OptsPtr o(g2c_options_new(), &g2c_options_free);
  if (!o) throw std::bad_alloc();
  g2c_options_set_seed(o.get(), a.common.seed);
  g2c_options_set_jobs(o.get(), a.common.jobs);
  g2c_options_set_ext_guard(o.get(), a.common.ext_guard);
  g2c_options_set_count_guard(o.get(), a.common.count_guard);
  if (!a.primes.empty()) {
    std::vector<std::int64_t> primes;
    std::stringstream ss(a.primes);
    for (std::string t; std::getline(ss, t, ',');) primes.push_back(to_int(t, "--primes"));
    g2c_options_set_primes(o.get(), primes.data(), primes.size());
  }
  if (a.max_prime) g2c_options_set_max_prime(o.get(), a.max_prime);
  if (!a.modeq_dir.empty()) g2c_options_set_modeq_dir(o.get(), a.modeq_dir.c_str());
  if (a.disc) g2c_options_set_disc(o.get(), *a.disc);
  if (a.bound) g2c_options_set_bound(o.get(), *a.bound);
  const auto [num, den] = parse_rational(a.epsilon);
  g2c_options_set_epsilon(o.get(), num, den);
  g2c_options_set_verify(o.get(), a.verify);
  return o;
}

std::string join(const json& arr) {
  if (!arr.is_array()) return "-";
  std::string s = "[";
  for (std::size_t i = 0; i < arr.size(); ++i) s += (i ? "," : "") + arr[i].dump();
  return s + "]";
}

std::string str(const json& v) {
  if (v.is_null()) return "-";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void print_chi(std::ostream& os, const json& chi) {
  if (chi.is_null()) {
    os << "result     none\n";
    return;
  }
  os << "result     q=" << str(chi["q"]) << " s1=" << str(chi["s1"]) << " s2=" << str(chi["s2"]) << '\n';
  os << "chi        " << join(chi["coefficients"]) << "  (low degree first)\n";
  os << "#A(F_q)    " << str(chi["jacobian_order"]) << '\n';
}

void print_degenerate(std::ostream& os, const json& d) {
  if (d.is_null() || (d["flags"].empty() && d["undecided"].empty())) return;
  os << "degenerate " << join(d["flags"]);
  if (!d["undecided"].empty()) os << " undecided " << join(d["undecided"]);
  os << '\n';
}

void print_prime_rows(std::ostream& os, const json& rows, bool hilbert) {
  os << std::left << std::setw(6) << "ell" << std::setw(11) << "status" << std::setw(22) << "verdict"
     << std::setw(18) << "chi mod ell" << std::setw(5) << "ext" << std::setw(10) << "micros";
  if (hilbert) os << "residues";
  os << '\n';
  for (const auto& r : rows) {
    os << std::setw(6) << str(r["ell"]) << std::setw(11) << str(r["status"]) << std::setw(22) << str(r["verdict"])
       << std::setw(18) << join(r["chi_mod"]) << std::setw(5) << str(r["ext_degree"]) << std::setw(10)
       << str(r["micros"]);
    if (hilbert) {
      if (r["betas"].is_array())
        os << str(r["betas"][0]) << "/" << str(r["betas"][1]) << " " << join(r["residues"]);
    }
    if (r.contains("reason")) os << "  " << str(r["reason"]);
    os << '\n';
  }
  os << std::right;
}

void print_count(std::ostream& os, const json& j) {
  os << "curve      " << str(j["curve"]) << '\n';
  os << "mode       " << str(j["mode"]);
  if (j.contains("provider")) os << " (provider " << str(j["provider"]) << ")";
  os << '\n';
  print_degenerate(os, j["degenerate"]);
  if (j.contains("field")) os << "field      " << str(j["field"]) << '\n';
  if (j.contains("primes")) print_prime_rows(os, j["primes"], j["mode"] == "hilbert");
  if (j.contains("crt")) {
    const auto& c = j["crt"];
    os << "crt        s1 = " << str(c["s1"]["value"]) << " mod " << str(c["s1"]["modulus"]) << ", s2 = "
       << str(c["s2"]["value"]) << " mod " << str(c["s2"]["modulus"]) << ", need > " << str(c["target"]) << '\n';
  }
  if (j.contains("norm_B"))
    os << "norm B     " << str(j["norm_B"]) << " (need > " << str(j["target"]) << "), candidates "
       << str(j["candidates"]) << ", psi " << str(j["psi"]) << '\n';
  if (j.contains("elkies"))
    os << "elkies     " << str(j["elkies"]["elkies_betas"]) << " of " << str(j["elkies"]["split_betas"])
       << " split generators, fraction " << str(j["elkies"]["fraction"]) << " vs 1/2\n";
  print_chi(os, j["chi"]);
  if (j.contains("verified")) os << "verified   " << (j["verified"].get<bool>() ? "yes" : "NO") << '\n';
  if (j.contains("modeq_notes"))
    for (const auto& n : j["modeq_notes"]) os << "modeq      " << str(n) << '\n';
}

void print_classify(std::ostream& os, const json& j) {
  os << "curve      " << str(j["curve"]) << '\n';
  print_degenerate(os, j["degenerate"]);
  print_chi(os, j["chi"]);
  os << std::left << std::setw(6) << "ell" << std::setw(22) << "verdict" << std::setw(18) << "chi mod ell"
     << "witness\n";
  for (const auto& r : j["rows"])
    os << std::setw(6) << str(r["ell"]) << std::setw(22) << str(r["verdict"]) << std::setw(18) << join(r["chi_mod"])
       << join(r["witness"]) << '\n';
  os << std::right;
  const auto& p = j["proportion"];
  os << "proportion " << str(p["elkies"]) << "/" << str(p["primes"]) << " = " << str(p["value"]) << " vs "
     << str(p["reference"]) << " (X = " << str(j["X"]) << ")\n";
  if (j.contains("rm")) {
    const auto& rm = j["rm"];
    os << "rm field   " << str(rm["field"]) << ", psi " << str(rm["psi"]) << '\n';
    for (const auto& r : rm["rows"])
      os << "  ell " << std::setw(4) << str(r["ell"]) << " beta " << std::setw(10) << str(r["beta"]) << " psi mod beta "
         << std::setw(4) << str(r["psi_mod_beta"]) << (r["elkies"].get<bool>() ? "  Elkies" : "  Atkin") << '\n';
    os << "rm split   " << str(rm["elkies_betas"]) << "/" << str(rm["split_betas"]) << " = " << str(rm["fraction"])
       << " vs 1/2\n";
  }
}

void print_rm(std::ostream& os, const json& j) {
  os << "field      " << str(j["field"]) << ", q = " << str(j["q"]) << '\n';
  for (const auto& r : j["residues"])
    os << "residue    psi = " << str(r["value"]) << " mod " << str(r["beta"]) << " (ell " << str(r["ell"]) << ")\n";
  os << "class      N(B) = " << str(j["class"]["N"]) << " (need > " << str(j["target"]) << ")\n";
  os << "psi        " << str(j["psi"]) << '\n';
  os << "xi         X^2 - " << str(j["xi"]["s1"]) << " X + " << str(j["xi"]["s2"]) << '\n';
  print_chi(os, j["chi"]);
}

void print_torsion(std::ostream& os, const json& j) {
  os << "curve      " << str(j["curve"]) << ", ell = " << str(j["ell"]) << '\n';
  os << "degree     torsion computed over F_q^" << str(j["working_degree"]) << "\n";
  for (const auto& d : j["rational_dims"])
    os << "  dim A[ell](F_q^" << str(d["k"]) << ") = " << str(d["dim"]) << '\n';
  os << "frobenius  " << join(j["frobenius_matrix"]) << '\n';
  os << "charpoly   " << join(j["frobenius_charpoly"]) << " (chi mod ell " << join(j["chi_mod"]) << ")\n";
  os << "pairing    " << join(j["gram_matrix"]) << '\n';
  os << "M^T G M = qG " << (j["multiplier_identity"].get<bool>() ? "holds" : "FAILS") << '\n';
  os << "stable     " << str(j["stable_lines"]) << " lines, " << str(j["stable_lagrangians"]) << " Lagrangians\n";
  os << "verdict    " << str(j["verdict"]) << '\n';
}

void print_props(std::ostream& os, const json& j) {
  os << "curve      " << str(j["curve"]) << '\n';
  print_chi(os, j["chi"]);
  for (const auto& p : j["properties"]) {
    const std::string tag = p["holds"].is_null() ? "SKIP" : (p["holds"].get<bool>() ? "ok" : "FAIL");
    os << std::left << std::setw(6) << tag << std::setw(30) << str(p["name"]) << std::right;
    if (p.contains("detail")) os << str(p["detail"]);
    if (p.contains("skipped")) os << str(p["skipped"]);
    os << '\n';
  }
}

int emit(const Common& c, g2c_status status, g2c_result* raw, void (*printer)(std::ostream&, const json&)) {
  ResultPtr r(raw, &g2c_result_free);
  if (!r) {
    std::cerr << "g2count: error: " << g2c_status_name(status) << ": no result\n";
    return g2c_status_exit_code(status);
  }
  const json j = json::parse(g2c_result_json(r.get()));
  if (c.as_json) {
    std::cout << j.dump(2) << '\n';
  } else if (status == G2C_OK || j.size() > 1) {
    // Non-OK results can still carry a partial report.
    if (printer && j.contains("command")) printer(std::cout, j);
  }
  if (status != G2C_OK)
    std::cerr << "g2count: error: " << g2c_status_name(status) << ": " << g2c_result_error(r.get()) << '\n';
  return g2c_status_exit_code(status);
}

int with_curve(const Common& c, const std::function<int(const g2c_curve*)>& body) {
  g2c_curve* raw = nullptr;
  g2c_result* err = nullptr;
  const g2c_status s = g2c_curve_parse(curve_text(c).c_str(), &raw, &err);
  if (s != G2C_OK) return emit(c, s, err, nullptr);
  CurvePtr curve(raw, &g2c_curve_free);
  return body(curve.get());
}

void add_common(CLI::App* sub, Common& c, bool curve) {
  if (curve) {
    sub->add_option("spec", c.curve_tokens, "Curve spec, e.g. p=11 P=[1,0,0,0,0,1] (tokens are joined)");
    sub->add_option("--curve", c.curve_opt, "Curve spec as one string");
  }
  sub->add_flag("--json", c.as_json, "Emit JSON instead of text");
  sub->add_flag("--quiet", c.quiet, "No progress on stderr");
  sub->add_option("--seed", c.seed, "Random seed")->capture_default_str();
  sub->add_option("--jobs,-j", c.jobs, "Parallel workers for per-prime work")->capture_default_str();
  sub->add_option("--ext-guard", c.ext_guard, "Largest extension degree for torsion searches")->capture_default_str();
  sub->add_option("--count-guard", c.count_guard, "Largest field size for exhaustive counting")
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Genus-2 Jacobian point counting over small prime fields"};
  app.set_version_flag("--version", g2c_version());
  app.require_subcommand(1);
  Args a;

  auto* count = app.add_subcommand("count", "Frobenius characteristic polynomial");
  add_common(count, a.common, true);
  auto* naive = count->add_flag("--naive", a.naive, "Exhaustive point counts");
  auto* siegel = count->add_flag("--siegel", a.siegel, "Elkies primes with Lagrangian kernels (default)");
  auto* hilbert = count->add_flag("--hilbert", a.hilbert, "Real multiplication with cyclic kernels");
  naive->excludes(siegel, hilbert);
  siegel->excludes(hilbert);
  auto* oracle = count->add_flag("--oracle", a.oracle, "Brute-force kernel provider (default)");
  count->add_option("--modeq-dir", a.modeq_dir, "Directory of .modeq files screening levels")->excludes(oracle);
  count->add_option("--disc", a.disc, "Real quadratic discriminant for --hilbert (5, 8, 13, 17)");
  count->add_option("--primes", a.primes, "Explicit primes to try, comma separated");
  count->add_option("--max-prime", a.max_prime, "Largest prime in the default budget");
  count->add_flag("--verify", a.verify, "Cross-check against exhaustive counting");

  auto* classify = app.add_subcommand("classify", "Elkies/Atkin table for primes up to X");
  add_common(classify, a.common, true);
  classify->add_option("-X,--bound", a.bound, "Largest prime classified (default 30)");
  classify->add_option("--epsilon", a.epsilon, "Proportion parameter as a rational")->capture_default_str();
  classify->add_option("--disc", a.disc, "Also classify split primes of Q(sqrt D)");

  auto* rm = app.add_subcommand("rm-reconstruct", "Recover psi and chi from residues of real Frobenius");
  add_common(rm, a.common, true);
  rm->add_option("--disc", a.disc, "Real quadratic discriminant (default 5)");
  rm->add_option("--q", a.q, "Field size (residue mode)");
  rm->add_option("--residue,-r", a.residues, "ell:value or ell:a,b:value (psi = value mod a + b w)");
  rm->add_option("--primes", a.primes, "Explicit primes (curve mode)");
  rm->add_option("--max-prime", a.max_prime, "Largest prime in the default budget (curve mode)");
  rm->add_option("--modeq-dir", a.modeq_dir, "Directory of .modeq files (curve mode)");
  rm->add_flag("--verify", a.verify, "Cross-check against exhaustive counting (curve mode)");

  auto* torsion = app.add_subcommand("torsion", "Frobenius and pairing on the l-torsion");
  add_common(torsion, a.common, true);
  torsion->add_option("--ell,-l", a.ell, "Torsion prime")->required();

  auto* props = app.add_subcommand("verify-props", "Check structural properties on one curve");
  add_common(props, a.common, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageExit;
  }

  try {
    const Common& c = a.common;
    OptsPtr opts = make_options(a);
    if (*count) {
      const g2c_count_mode mode = a.naive ? G2C_COUNT_NAIVE : a.hilbert ? G2C_COUNT_HILBERT : G2C_COUNT_SIEGEL;
      return with_curve(c, [&](const g2c_curve* curve) {
        progress(c, std::string("count ") + (a.naive ? "naive" : a.hilbert ? "hilbert" : "siegel") + " on " +
                        g2c_curve_string(curve));
        g2c_result* r = nullptr;
        const g2c_status s = g2c_count(curve, mode, opts.get(), &r);
        progress(c, std::string("done: ") + g2c_status_name(s));
        return emit(c, s, r, print_count);
      });
    }
    if (*classify) {
      return with_curve(c, [&](const g2c_curve* curve) {
        g2c_result* r = nullptr;
        const g2c_status s = g2c_classify(curve, opts.get(), &r);
        return emit(c, s, r, print_classify);
      });
    }
    if (*rm) {
      if (!c.curve_tokens.empty() || !c.curve_opt.empty()) {
        if (!a.residues.empty()) throw UsageError("give either a curve or residues, not both");
        return with_curve(c, [&](const g2c_curve* curve) {
          progress(c, std::string("hilbert pipeline on ") + g2c_curve_string(curve));
          g2c_result* r = nullptr;
          const g2c_status s = g2c_count(curve, G2C_COUNT_HILBERT, opts.get(), &r);
          return emit(c, s, r, print_count);
        });
      }
      if (a.q <= 0) throw UsageError("--q is required with residues");
      std::vector<g2c_residue> res;
      for (const auto& text : a.residues) res.push_back(parse_residue(text));
      g2c_result* r = nullptr;
      const g2c_status s = g2c_rm_reconstruct(a.disc.value_or(5), a.q, res.data(), res.size(), &r);
      return emit(c, s, r, print_rm);
    }
    if (*torsion) {
      return with_curve(c, [&](const g2c_curve* curve) {
        progress(c, "torsion search for ell = " + std::to_string(a.ell));
        g2c_result* r = nullptr;
        const g2c_status s = g2c_torsion(curve, a.ell, opts.get(), &r);
        return emit(c, s, r, print_torsion);
      });
    }
    if (*props) {
      return with_curve(c, [&](const g2c_curve* curve) {
        g2c_result* r = nullptr;
        const g2c_status s = g2c_verify_props(curve, opts.get(), &r);
        return emit(c, s, r, print_props);
      });
    }
  } catch (const UsageError& e) {
    if (a.common.as_json)
      std::cout << json{{"error", {{"class", "Usage"}, {"message", e.what()}, {"exit_code", kUsageExit}}}}.dump(2)
                << '\n';
    std::cerr << "g2count: error: Usage: " << e.what() << '\n';
    return kUsageExit;
  } catch (const std::exception& e) {
    std::cerr << "g2count: error: InternalInconsistency: " << e.what() << '\n';
    return 4;
  }
  return kUsageExit;
}
