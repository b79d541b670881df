#include <cmath>

#include "g2count/siegel.hpp"

namespace g2c {

const char* degenerate_name(DegenerateFlag f) {
  switch (f) {
    case DegenerateFlag::SingularLocus: return "SingularLocus";
    case DegenerateFlag::ProductOfEllipticCurves: return "ProductOfEllipticCurves";
    case DegenerateFlag::CMQuintic: return "CMQuintic";
  }
  return "?";
}

bool same_weighted_point(const Field& K, const IgusaInvariants& a, const IgusaInvariants& b) {
  const std::array<Elem, 4> x{a.I2, a.I4, a.I6, a.I10}, y{b.I2, b.I4, b.I6, b.I10};
  const std::array<std::uint64_t, 4> w{1, 2, 3, 5};
  for (int i = 0; i < 4; ++i)
    if (K.is_zero(x[i]) != K.is_zero(y[i])) return false;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (K.mul(K.pow(x[i], w[j]), K.pow(y[j], w[i])) != K.mul(K.pow(y[i], w[j]), K.pow(x[j], w[i]))) return false;
  return true;
}

DegenerateReport detect_degenerate(const Field& K, const IgusaInvariants& inv) {
  DegenerateReport r;
  if (K.is_zero(inv.I4) || K.is_zero(inv.I10)) r.flags.insert(DegenerateFlag::SingularLocus);
  if (K.is_zero(inv.I10)) {
    r.flags.insert(DegenerateFlag::ProductOfEllipticCurves);
    return r;
  }
  if (K.degree() == 1) {
    try {
      const std::vector<std::int64_t> cm{-1, 0, 0, 0, 0, 1};
      const Curve ref = make_curve(K.characteristic(), cm);
      if (same_weighted_point(K, inv, igusa_invariants(ref))) r.flags.insert(DegenerateFlag::CMQuintic);
    } catch (const Error&) {
      // y^2 = x^5 - 1 is singular in this characteristic.
    }
  }
  return r;
}

DegenerateReport detect_degenerate(const Curve& C) { return detect_degenerate(C.field, igusa_invariants(C)); }

ProportionReport elkies_proportion(const std::map<std::int64_t, modl::Vec>& chis, std::int64_t q, std::int64_t X,
                                   const Rational& eps) {
  ProportionReport r;
  r.X = X;
  if (eps <= 0) fail(ErrorKind::Validation, "epsilon must be positive");
  const double bound = std::log(static_cast<double>(q)) / eps.convert_to<double>();
  r.min_X = static_cast<std::int64_t>(std::ceil(bound));
  for (const auto& [ell, chi] : chis)
    if (ell <= X) r.rows.push_back(classify_prime(chi, q, ell));
  if (r.rows.empty()) fail(ErrorKind::EmptyRange, "no primes l <= " + std::to_string(X));
  if (X < r.min_X)
    fail(ErrorKind::Validation, "X = " + std::to_string(X) + " is below ln(q)/eps = " + std::to_string(r.min_X));
  r.primes = r.rows.size();
  for (const auto& row : r.rows) r.elkies += is_elkies(row.verdict) ? 1 : 0;
  r.proportion = Rational(static_cast<long long>(r.elkies), static_cast<long long>(r.primes));
  return r;
}

}  // namespace g2c
