#include <memory>

#include "g2count/hilbert.hpp"
#include "g2count/modeq.hpp"
#include "g2count/oracle.hpp"
#include "internal.hpp"

namespace g2c::capi {

json to_json(const CharPoly& chi) {
  json coeffs = json::array();
  for (const auto& c : chi.coefficients()) coeffs.push_back(big(c));
  return {{"q", chi.q}, {"s1", chi.s1}, {"s2", chi.s2}, {"coefficients", coeffs}, {"jacobian_order", big(chi.at_one())}};
}

json big(const BigInt& v) { return v.str(); }
json rational(const Rational& r) { return r.str(); }

json vec(const modl::Vec& v) {
  json a = json::array();
  for (auto x : v) a.push_back(x);
  return a;
}

json mat(const modl::Mat& m) {
  json a = json::array();
  for (const auto& row : m) a.push_back(vec(row));
  return a;
}

namespace {

Curve odd_of(const Curve& C) { return C.degree() == 5 ? C : odd_model(C); }

json degenerate_json(const Curve& C) {
  const auto rep = detect_degenerate(C);
  json flags = json::array();
  for (auto f : rep.flags) flags.push_back(degenerate_name(f));
  return {{"flags", flags}, {"undecided", rep.unknown}};
}

json outcome_json(const PrimeOutcome& o) {
  json j{{"ell", o.ell}, {"status", status_name(o.status)}};
  if (!o.reason.empty()) j["reason"] = o.reason;
  j["chi_mod"] = o.chi_mod ? vec(*o.chi_mod) : json(nullptr);
  j["kernel_charpoly"] = o.kernel_charpoly ? vec(*o.kernel_charpoly) : json(nullptr);
  j["verdict"] = o.verdict ? json(verdict_name(*o.verdict)) : json(nullptr);
  j["ext_degree"] = o.ext_degree;
  j["kernels"] = o.kernels;
  j["micros"] = o.micros;
  return j;
}

std::shared_ptr<KernelProvider> make_provider(const g2c_options& o) {
  auto oracle = std::make_shared<OracleKernelProvider>(o.ext_guard, o.seed);
  if (!o.modeq_dir) return oracle;
  return std::make_shared<ModEqScreenedProvider>(*o.modeq_dir, oracle);
}

json notes_of(const KernelProvider& p) {
  if (const auto* s = dynamic_cast<const ModEqScreenedProvider*>(&p)) return s->notes();
  return json::array();
}

void verify_against_naive(const Curve& C, const std::optional<CharPoly>& result, const g2c_options& o, Outcome& out) {
  if (!o.verify || !result) return;
  const CharPoly naive = chi_naive(C, o.count_guard);
  out.body["verified"] = naive == *result;
  out.body["naive_chi"] = to_json(naive);
  if (naive != *result) {
    out.status = G2C_INTERNAL;
    out.message = "pipeline gave " + result->to_string() + " but exhaustive counting gives " + naive.to_string();
  }
}

std::int64_t checked_prime(std::int64_t ell, std::int64_t p) {
  if (ell < 2 || !is_prime_u64(static_cast<std::uint64_t>(ell))) fail(ErrorKind::Usage, std::to_string(ell) + " is not prime");
  if (ell == p) fail(ErrorKind::Usage, "l equals the characteristic");
  return ell;
}

}  // namespace

Outcome count(const g2c_curve& c, g2c_count_mode mode, const g2c_options& o) {
  const Curve& C = c.curve;
  const auto q = static_cast<std::int64_t>(C.p());
  Outcome out;
  out.body = {{"command", "count"}, {"curve", c.text}, {"q", q}, {"degenerate", degenerate_json(C)}};
  if (mode == G2C_COUNT_NAIVE) {
    out.body["mode"] = "naive";
    out.body["chi"] = to_json(chi_naive(C, o.count_guard));
    return out;
  }
  const auto provider = make_provider(o);
  out.body["provider"] = provider->name();
  if (mode == G2C_COUNT_SIEGEL) {
    const SiegelReport r = pipeline_count_siegel(C, *provider, o.pipe);
    out.body["mode"] = "siegel";
    json rows = json::array();
    for (const auto& p : r.primes) rows.push_back(outcome_json(p));
    out.body["primes"] = rows;
    out.body["crt"] = {{"s1", {{"value", big(r.s1.value)}, {"modulus", big(r.s1.modulus)}}},
                       {"s2", {{"value", big(r.s2.value)}, {"modulus", big(r.s2.modulus)}}},
                       {"target", big(r.target)}};
    out.body["chi"] = r.result ? to_json(*r.result) : json(nullptr);
    if (!r.result) {
      out.status = G2C_EXHAUSTED;
      out.message = "prime budget exhausted with product " + r.s1.modulus.str() + " <= 8q = " + r.target.str();
    }
    verify_against_naive(C, r.result, o, out);
  } else if (mode == G2C_COUNT_HILBERT) {
    const auto F = RealQuadField::make(o.disc.value_or(5));
    const HilbertReport r = pipeline_count_hilbert(C, F, *provider, o.pipe);
    out.body["mode"] = "hilbert";
    out.body["field"] = F.header();
    json rows = json::array();
    for (const auto& hp : r.primes) {
      json row = outcome_json(hp.base);
      row["betas"] = hp.betas ? json{F.to_string(hp.betas->first), F.to_string(hp.betas->second)} : json(nullptr);
      row["residues"] = hp.residues;
      rows.push_back(std::move(row));
    }
    out.body["primes"] = rows;
    out.body["norm_B"] = big(r.norm_B);
    out.body["target"] = big(BigInt(16) * q);
    out.body["candidates"] = r.candidates.size();
    out.body["psi"] = r.psi ? json(F.to_string(*r.psi)) : json(nullptr);
    out.body["chi"] = r.result ? to_json(*r.result) : json(nullptr);
    out.body["elkies"] = {{"split_betas", r.split_betas},
                          {"elkies_betas", r.elkies_betas},
                          {"fraction", r.split_betas ? rational(r.elkies_fraction) : json(nullptr)},
                          {"reference", "1/2"}};
    if (!r.result) {
      out.status = G2C_EXHAUSTED;
      out.message = "prime budget exhausted with N(B) = " + r.norm_B.str() + " and " +
                    std::to_string(r.candidates.size()) + " candidates; need N(B) > 16q = " + std::to_string(16 * q) +
                    " and one candidate";
    }
    verify_against_naive(C, r.result, o, out);
  } else {
    fail(ErrorKind::Usage, "unknown count mode");
  }
  out.body["modeq_notes"] = notes_of(*provider);
  return out;
}

Outcome classify(const g2c_curve& c, const g2c_options& o) {
  const Curve& C = c.curve;
  const auto q = static_cast<std::int64_t>(C.p());
  const std::int64_t X = o.bound.value_or(30);
  const CharPoly chi = chi_naive(C, o.count_guard);
  std::map<std::int64_t, modl::Vec> chis;
  for (std::int64_t l = 2; l <= X; ++l)
    if (l != q && is_prime_u64(static_cast<std::uint64_t>(l))) chis[l] = chi.mod(l);
  const ProportionReport rep = elkies_proportion(chis, q, X, o.eps);
  Outcome out;
  json rows = json::array();
  for (const auto& r : rep.rows) {
    json factors = json::array();
    for (const auto& [f, m] : r.factors) factors.push_back({{"poly", vec(f)}, {"multiplicity", m}});
    rows.push_back({{"ell", r.ell},
                    {"chi_mod", vec(chis.at(r.ell))},
                    {"verdict", verdict_name(r.verdict)},
                    {"elkies", is_elkies(r.verdict)},
                    {"factors", factors},
                    {"witness", r.witness ? vec(*r.witness) : json(nullptr)}});
  }
  out.body = {{"command", "classify"},
              {"curve", c.text},
              {"q", q},
              {"chi", to_json(chi)},
              {"degenerate", degenerate_json(C)},
              {"X", X},
              {"epsilon", rational(o.eps)},
              {"min_X", rep.min_X},
              {"rows", rows},
              {"proportion", {{"primes", rep.primes}, {"elkies", rep.elkies}, {"value", rational(rep.proportion)},
                              {"reference", rational(rep.reference)}}}};
  if (o.disc) {
    const auto F = RealQuadField::make(*o.disc);
    const auto psi = psi_from_xi(F, {chi.s1, chi.s2});
    if (!psi)
      fail(ErrorKind::Validation, "the real Frobenius of " + chi.to_string() + " does not lie in Q(sqrt " +
                                      std::to_string(*o.disc) + ")");
    json rm = json::array();
    std::size_t total = 0, elkies = 0;
    for (const auto& [l, unused] : chis) {
      if (F.disc() % l == 0) continue;
      const auto betas = split_prime(F, l);
      if (!betas) continue;
      for (const RQElem& beta : {betas->first, betas->second}) {
        // beta is Elkies iff X^2 - (psi mod beta) X + q has a root mod l.
        const std::int64_t r = reduce_mod(*psi, beta, l);
        bool split = false;
        for (std::int64_t x = 0; x < l && !split; ++x) split = modl::reduce(x * x - r * x + q, l) == 0;
        ++total;
        elkies += split;
        rm.push_back({{"ell", l}, {"beta", F.to_string(beta)}, {"psi_mod_beta", r}, {"elkies", split}});
      }
    }
    out.body["rm"] = {{"field", F.header()},
                      {"psi", F.to_string(*psi)},
                      {"rows", rm},
                      {"split_betas", total},
                      {"elkies_betas", elkies},
                      {"fraction", total ? rational(Rational(static_cast<long long>(elkies), static_cast<long long>(total)))
                                         : json(nullptr)},
                      {"reference", "1/2"}};
  }
  return out;
}

Outcome rm_reconstruct(std::int64_t disc, std::int64_t q, const g2c_residue* residues, std::size_t n) {
  if (q < 2) fail(ErrorKind::Usage, "q must be at least 2");
  const auto F = RealQuadField::make(disc);
  std::vector<RMResidue> res;
  json echo = json::array();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& r = residues[i];
    const std::int64_t ell = r.ell;
    if (ell < 2 || !is_prime_u64(static_cast<std::uint64_t>(ell))) fail(ErrorKind::Usage, std::to_string(ell) + " is not prime");
    RQElem beta{r.beta_a, r.beta_b};
    if (beta == RQElem{0, 0}) {
      const auto s = split_prime(F, ell);
      if (!s) fail(ErrorKind::Validation, std::to_string(ell) + " is inert in Q(sqrt " + std::to_string(disc) + ")");
      beta = s->first;
    } else if (F.norm(beta) != ell && F.norm(beta) != -ell) {
      fail(ErrorKind::Validation, F.to_string(beta) + " does not have norm " + std::to_string(ell));
    }
    res.push_back(residue_value(r.value, beta, ell));
    echo.push_back({{"ell", ell}, {"beta", F.to_string(beta)}, {"value", modl::reduce(r.value, ell)}});
  }
  const RMClass cls = rm_crt(res);
  Outcome out;
  out.body = {{"command", "rm-reconstruct"},
              {"field", F.header()},
              {"q", q},
              {"residues", echo},
              {"class", {{"N", big(cls.N)}, {"T", big(cls.T)}, {"c", big(cls.c)}}},
              {"target", big(BigInt(16) * q)}};
  const RQElem psi = reconstruct_psi(F, res, q);
  const XiPoly xi = xi_of(F, psi);
  out.body["psi"] = F.to_string(psi);
  out.body["psi_coords"] = {psi.a, psi.b};
  out.body["xi"] = {{"s1", xi.s1}, {"s2", xi.s2}};
  out.body["chi"] = to_json(chi_from_xi(xi, q));
  return out;
}

Outcome torsion(const g2c_curve& c, std::int64_t ell, const g2c_options& o) {
  const Curve odd = odd_of(c.curve);
  const auto q = static_cast<std::int64_t>(odd.p());
  checked_prime(ell, q);
  const CharPoly chi = chi_naive(odd, o.count_guard);
  const TorsionSpace T = torsion_basis(odd, chi, ell, o.seed, o.ext_guard);
  const DlTable dl(T.J, T.basis, ell);
  const modl::Mat M = frob_matrix(T, dl);
  Rng rng(o.seed);
  const modl::Mat G = gram_matrix(T, rng);
  json dims = json::array();
  for (int j = 1; j <= T.k; ++j) {
    const auto Mj = modl::sub(modl::pow(M, static_cast<std::uint64_t>(j), ell), modl::identity(4), ell);
    dims.push_back({{"k", j}, {"dim", 4 - modl::rank(Mj, ell)}});
  }
  std::size_t lines = 0;
  for (const auto& B : enumerate_subspaces(4, 1, ell)) lines += subspace_is_stable(M, B, ell);
  const auto cls = classify_prime(chi.mod(ell), q, ell);
  Outcome out;
  out.body = {{"command", "torsion"},
              {"curve", c.text},
              {"q", q},
              {"ell", ell},
              {"chi", to_json(chi)},
              {"chi_mod", vec(chi.mod(ell))},
              {"working_degree", T.k},
              {"dim", T.dim()},
              {"rational_dims", dims},
              {"frobenius_matrix", mat(M)},
              {"frobenius_charpoly", vec(modl::charpoly(M, ell))},
              {"gram_matrix", mat(G)},
              {"multiplier_identity",
               modl::mul(modl::mul(modl::transpose(M), G, ell), M, ell) == modl::scale(G, q, ell)},
              {"stable_lines", lines},
              {"stable_lagrangians", enumerate_stable_lagrangians(M, G, ell).size()},
              {"verdict", verdict_name(cls.verdict)}};
  return out;
}

Outcome verify_props(const g2c_curve& c, const g2c_options& o) {
  const Curve odd = odd_of(c.curve);
  const auto q = static_cast<std::int64_t>(odd.p());
  const CharPoly chi = chi_naive(odd, o.count_guard);
  json props = json::array();
  std::vector<std::string> failed;
  auto record = [&](const std::string& name, bool holds, const std::string& detail = {}) {
    json p{{"name", name}, {"holds", holds}};
    if (!detail.empty()) p["detail"] = detail;
    props.push_back(std::move(p));
    if (!holds) failed.push_back(name);
  };
  auto skip = [&](const std::string& name, const std::string& why) {
    props.push_back({{"name", name}, {"holds", nullptr}, {"skipped", why}});
  };

  record("weil_ruck", weil_ruck_holds(chi), chi.to_string());
  {
    const Jacobian J(odd, odd.field);
    Rng rng(o.seed);
    bool ok = true;
    for (int i = 0; i < 10; ++i) ok &= J.is_identity(J.scalar_mul(J.random_divisor(rng), chi.at_one()));
    record("group_order_annihilates", ok, "#A(F_q) = " + chi.at_one().str());
  }
  record("chi_mod2_from_roots",
         modlpoly::normalize(chi_mod2_from_roots(c.curve)) == modlpoly::normalize(chi.mod(2)));

  for (std::int64_t ell : {2, 3}) {
    const std::string sfx = "_l" + std::to_string(ell);
    if (ell == q) continue;
    std::optional<TorsionSpace> T;
    try {
      T = torsion_basis(odd, chi, ell, o.seed, o.ext_guard);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::GuardExceeded) throw;
      skip("torsion" + sfx, e.what());
      continue;
    }
    const DlTable dl(T->J, T->basis, ell);
    const modl::Mat M = frob_matrix(*T, dl);
    Rng rng(o.seed + static_cast<std::uint64_t>(ell));
    const modl::Mat G = gram_matrix(*T, rng);
    record("frobenius_charpoly" + sfx, modlpoly::normalize(modl::charpoly(M, ell)) == modlpoly::normalize(chi.mod(ell)));
    bool alt = true;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) alt &= modl::reduce(G[i][j] + G[j][i], ell) == 0;
    record("pairing_alternating" + sfx, alt);
    record("pairing_nondegenerate" + sfx, modl::det(G, ell) != 0);
    bool bilinear = true;
    for (int t = 0; t < 4; ++t) {
      modl::Vec x(4), y(4), z(4);
      for (int i = 0; i < 4; ++i) {
        x[i] = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(ell));
        y[i] = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(ell));
        z[i] = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(ell));
      }
      modl::Vec xy(4);
      for (int i = 0; i < 4; ++i) xy[i] = (x[i] + y[i]) % ell;
      auto e = [&](const modl::Vec& a, const modl::Vec& b) {
        return weil_pairing(T->J, dl.element(a), dl.element(b), ell, rng);
      };
      bilinear &= modl::reduce(e(xy, z) - e(x, z) - e(y, z), ell) == 0;
    }
    record("pairing_bilinear" + sfx, bilinear);
    record("pairing_equivariant" + sfx, modl::mul(modl::mul(modl::transpose(M), G, ell), M, ell) == modl::scale(G, q, ell));
    record("lagrangian_universe" + sfx,
           enumerate_lagrangians(G, ell).size() == static_cast<std::size_t>(lagrangian_count(ell)));
    const auto stable = enumerate_stable_lagrangians(M, G, ell);
    bool factor_ok = true;
    for (const auto& B : stable) {
      const auto P = modl::charpoly(restrict_to_subspace(M, B, ell), ell);
      factor_ok &= modlpoly::normalize(chi_from_kernel_charpoly(P, q, ell)) == modlpoly::normalize(chi.mod(ell));
    }
    record("chi_equals_p_rec_p" + sfx, factor_ok, std::to_string(stable.size()) + " stable Lagrangians");
    const auto verdict = classify_prime(chi.mod(ell), q, ell).verdict;
    record("elkies_has_kernel" + sfx, !is_elkies(verdict) || !stable.empty(), verdict_name(verdict));
  }

  Outcome out;
  out.body = {{"command", "verify-props"}, {"curve", c.text}, {"q", q}, {"chi", to_json(chi)}, {"properties", props},
              {"all_hold", failed.empty()}};
  if (!failed.empty()) {
    out.status = G2C_INTERNAL;
    out.message = "failed properties:";
    for (const auto& f : failed) out.message += " " + f;
  }
  return out;
}

}  // namespace g2c::capi
