#include <sstream>

#include "g2count/siegel.hpp"

namespace g2c {

namespace {

Poly to_poly(const Field& F, const modl::Vec& a) { return poly::from_ints(F, a); }

modl::Vec to_vec(const Field& F, const Poly& f) {
  modl::Vec out;
  for (const auto& c : f.c) out.push_back(F.prime_value(c));
  return out;
}

}  // namespace

namespace modlpoly {

modl::Vec normalize(modl::Vec a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

modl::Vec mul(const modl::Vec& a, const modl::Vec& b, std::int64_t l) {
  if (a.empty() || b.empty()) return {};
  modl::Vec out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % l;
  return normalize(out);
}

std::string to_string(const modl::Vec& a) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
  os << "]";
  return os.str();
}

}  // namespace modlpoly

modl::Vec rec_q(const modl::Vec& P, std::int64_t q, std::int64_t ell) {
  modl::Vec a = modlpoly::normalize(P);
  if (a.empty() || modl::reduce(a[0], ell) == 0) fail(ErrorKind::Validation, "Rec_q needs an invertible constant term");
  if (modl::reduce(q, ell) == 0) fail(ErrorKind::Validation, "Rec_q needs q invertible mod l");
  const std::size_t d = a.size() - 1;
  const std::int64_t inv0 = modl::inv(modl::reduce(a[0], ell), ell);
  const std::int64_t qr = modl::reduce(q, ell);
  modl::Vec out(d + 1, 0);
  std::int64_t qi = 1;
  for (std::size_t i = 0; i <= d; ++i) {
    out[d - i] = modl::reduce(modl::reduce(a[i], ell) * qi % ell * inv0, ell);
    qi = qi * qr % ell;
  }
  return out;
}

modl::Vec chi_from_kernel_charpoly(const modl::Vec& P, std::int64_t q, std::int64_t ell) {
  if (P.size() != 3 || modl::reduce(P[2], ell) != 1) fail(ErrorKind::Validation, "kernel charpoly must be monic quadratic");
  return modlpoly::mul(P, rec_q(P, q, ell), ell);
}

std::pair<std::int64_t, std::int64_t> s_from_chi_mod(const modl::Vec& chi, std::int64_t q, std::int64_t ell) {
  if (chi.size() != 5) fail(ErrorKind::Internal, "expected a quartic");
  return {modl::reduce(-chi[3], ell), modl::reduce(chi[2] - 2 * modl::reduce(q, ell), ell)};
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::ElkiesCoprimeSplit: return "ElkiesCoprimeSplit";
    case Verdict::ElkiesTotallySplit: return "ElkiesTotallySplit";
    case Verdict::NotGuaranteed: return "NotGuaranteed";
    case Verdict::AtkinLike: return "AtkinLike";
  }
  return "?";
}

PrimeClassification classify_prime(const modl::Vec& chi, std::int64_t q, std::int64_t ell) {
  const Field F = Field::prime(static_cast<std::uint64_t>(ell));
  const Poly f = to_poly(F, chi);
  if (f.degree() != 4 || !F.is_one(f.lead())) fail(ErrorKind::Validation, "chi mod l must be a monic quartic");
  PrimeClassification out;
  out.ell = ell;
  Rng rng(static_cast<std::uint64_t>(ell) * 7919);
  const auto factors = poly_factor(F, f, rng);
  bool split = true, small = true;
  std::vector<Poly> linear, quadratic_divisors;
  for (const auto& fac : factors) {
    out.factors.emplace_back(to_vec(F, fac.f), fac.multiplicity);
    split = split && fac.f.degree() == 1;
    small = small && fac.f.degree() <= 2;
    if (fac.f.degree() == 1)
      for (int m = 0; m < fac.multiplicity; ++m) linear.push_back(fac.f);
    if (fac.f.degree() == 2) quadratic_divisors.push_back(fac.f);
  }
  if (split) {
    out.verdict = Verdict::ElkiesTotallySplit;
    return out;
  }
  for (std::size_t i = 0; i < linear.size(); ++i)
    for (std::size_t j = i + 1; j < linear.size(); ++j) quadratic_divisors.push_back(poly::mul(F, linear[i], linear[j]));
  for (const auto& P : quadratic_divisors) {
    const modl::Vec pv = to_vec(F, P);
    const Poly R = to_poly(F, rec_q(pv, q, ell));
    if (poly::mul(F, P, R) == f && poly::gcd(F, P, R).degree() == 0) {
      out.verdict = Verdict::ElkiesCoprimeSplit;
      out.witness = pv;
      return out;
    }
  }
  out.verdict = small ? Verdict::NotGuaranteed : Verdict::AtkinLike;
  return out;
}

}  // namespace g2c
