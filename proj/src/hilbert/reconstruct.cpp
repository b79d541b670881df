#include <cmath>
#include <set>

#include "g2count/hilbert.hpp"

namespace g2c {

namespace {

std::int64_t isqrt(std::int64_t n) {
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

BigInt mod_pos(const BigInt& a, const BigInt& n) {
  BigInt r = a % n;
  return r < 0 ? r + n : r;
}

}  // namespace

RMResidue residue_value(std::int64_t r, const RQElem& beta, std::int64_t ell) {
  return {beta, ell, 0, modl::reduce(r, ell)};
}

RMResidue residue_from_eigenvalue(std::int64_t lambda, std::int64_t q, const RQElem& beta, std::int64_t ell) {
  const std::int64_t l = modl::reduce(lambda, ell);
  if (l == 0) fail(ErrorKind::Validation, "eigenvalue 0 mod " + std::to_string(ell));
  const std::int64_t r = modl::reduce(l + modl::reduce(q, ell) * modl::inv(l, ell), ell);
  return {beta, ell, l, r};
}

bool RMClass::contains(const RQElem& x) const { return mod_pos(BigInt(x.a) + BigInt(x.b) * T - c, N) == 0; }

RMClass rm_crt(const std::vector<RMResidue>& residues) {
  std::set<std::int64_t> seen;
  std::vector<Congruence> ts, cs;
  for (const auto& r : residues) {
    if (!seen.insert(r.ell).second)
      fail(ErrorKind::Validation, "two residues with norm " + std::to_string(r.ell));
    ts.push_back({omega_residue(r.beta, r.ell), r.ell});
    cs.push_back({modl::reduce(r.r, r.ell), r.ell});
  }
  RMClass out;
  if (residues.empty()) return out;
  const Congruence t = integer_crt(ts), c = integer_crt(cs);
  out.N = t.modulus;
  out.T = t.value;
  out.c = c.value;
  return out;
}

bool in_weil_box(const RealQuadField& F, const RQElem& x, std::int64_t q) {
  const std::int64_t tr = F.trace(x);
  return tr * tr <= 16 * q && F.disc_of(x) <= 16 * q;
}

std::vector<RQElem> weil_box(const RealQuadField& F, std::int64_t q) {
  std::vector<RQElem> out;
  const std::int64_t tr_max = isqrt(16 * q);
  const std::int64_t b_max = isqrt(16 * q / F.disc());
  for (std::int64_t b = -b_max; b <= b_max; ++b) {
    // 2a + t b in [-tr_max, tr_max]
    const std::int64_t lo = -tr_max - F.trace_w() * b, hi = tr_max - F.trace_w() * b;
    for (std::int64_t twice = lo + ((lo % 2 + 2) % 2); twice <= hi; twice += 2) out.push_back({twice / 2, b});
  }
  return out;
}

RQElem reconstruct_psi(const RealQuadField& F, const std::vector<RMResidue>& residues, std::int64_t q) {
  const RMClass cls = rm_crt(residues);
  if (cls.N <= BigInt(16) * q)
    fail(ErrorKind::BoundNotMet, "N(B) = " + cls.N.str() + " does not exceed 16q = " + std::to_string(16 * q));
  std::vector<RQElem> hits;
  const std::int64_t tr_max = isqrt(16 * q);
  const std::int64_t b_max = isqrt(16 * q / F.disc());
  for (std::int64_t b = -b_max; b <= b_max; ++b) {
    // a = c - b T mod N, walked through the trace window 2a + t b in [-tr_max, tr_max].
    const std::int64_t lo_twice = -tr_max - F.trace_w() * b;
    const BigInt lo = BigInt(lo_twice >= 0 ? (lo_twice + 1) / 2 : -((-lo_twice) / 2));
    for (BigInt a = lo + mod_pos(cls.c - BigInt(b) * cls.T - lo, cls.N); 2 * a + F.trace_w() * b <= tr_max; a += cls.N) {
      RQElem x{static_cast<std::int64_t>(a), b};
      if (in_weil_box(F, x, q)) hits.push_back(x);
    }
  }
  if (hits.empty()) fail(ErrorKind::Inconsistent, "no element of the Weil box matches the residues");
  if (hits.size() > 1)
    fail(ErrorKind::Internal, "residue class holds " + std::to_string(hits.size()) + " elements of the Weil box");
  return hits.front();
}

XiPoly xi_of(const RealQuadField& F, const RQElem& psi) { return {F.trace(psi), F.norm(psi)}; }

CharPoly chi_from_xi(const XiPoly& xi, std::int64_t q) {
  if (xi.s1 * xi.s1 - 4 * xi.s2 < 0)
    fail(ErrorKind::Validation, "real Frobenius polynomial has negative discriminant");
  CharPoly chi{q, xi.s1, xi.s2};
  if (!weil_ruck_holds(chi)) fail(ErrorKind::Inconsistent, chi.to_string() + " violates the Weil-Ruck bounds");
  return chi;
}

std::optional<RQElem> psi_from_xi(const RealQuadField& F, const XiPoly& xi) {
  const std::int64_t D = xi.s1 * xi.s1 - 4 * xi.s2;
  if (D <= 0 || D % F.disc() != 0) return std::nullopt;
  const std::int64_t y2 = D / F.disc();
  const std::int64_t y = isqrt(y2);
  if (y * y != y2) return std::nullopt;
  const std::int64_t twice = xi.s1 - F.trace_w() * y;
  if (twice % 2 != 0) return std::nullopt;
  return RQElem{twice / 2, y};
}

}  // namespace g2c
