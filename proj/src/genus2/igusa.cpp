#include <array>

#include "g2count/genus2.hpp"

namespace g2c {

namespace {

struct InvariantTerm {
  std::array<int, 7> e;
  std::int64_t coeff;
};

#include "../igusa_clebsch_tables.inc"

// Ring operations used to evaluate the coefficient tables.
struct FieldOps {
  const Field& K;
  using T = Elem;
  T zero() const { return K.zero(); }
  T from(std::int64_t v) const { return K.from_int(v); }
  T add(const T& a, const T& b) const { return K.add(a, b); }
  T sub(const T& a, const T& b) const { return K.sub(a, b); }
  T mul(const T& a, const T& b) const { return K.mul(a, b); }
  T div(const T& a, const T& b) const { return K.div(a, b); }
  bool is_zero(const T& a) const { return K.is_zero(a); }
};

struct RationalOps {
  using T = Rational;
  T zero() const { return 0; }
  T from(std::int64_t v) const { return T(v); }
  T add(const T& a, const T& b) const { return a + b; }
  T sub(const T& a, const T& b) const { return a - b; }
  T mul(const T& a, const T& b) const { return a * b; }
  T div(const T& a, const T& b) const { return a / b; }
  bool is_zero(const T& a) const { return a == 0; }
};

template <class Ops, std::size_t N>
typename Ops::T eval_table(const Ops& R, const InvariantTerm (&terms)[N], const std::array<typename Ops::T, 7>& a) {
  auto acc = R.zero();
  for (const auto& t : terms) {
    auto m = R.from(t.coeff);
    for (int i = 0; i < 7; ++i)
      for (int k = 0; k < t.e[i]; ++k) m = R.mul(m, a[i]);
    acc = R.add(acc, m);
  }
  return acc;
}

template <class Ops>
IgusaInvariantsT<typename Ops::T> compute(const Ops& R, const std::array<typename Ops::T, 7>& a) {
  IgusaInvariantsT<typename Ops::T> out;
  out.I2 = eval_table(R, kI2Terms, a);
  out.I4 = eval_table(R, kI4Terms, a);
  out.I6 = eval_table(R, kI6Terms, a);
  out.I10 = eval_table(R, kI10Terms, a);
  out.I6p = R.div(R.sub(R.mul(out.I2, out.I4), R.mul(R.from(3), out.I6)), R.from(2));
  out.I12 = R.mul(out.I2, out.I10);
  out.singular_locus = R.is_zero(out.I4) || R.is_zero(out.I10);
  if (!R.is_zero(out.I10)) {
    const auto d2 = R.mul(out.I10, out.I10);
    const auto I4sq = R.mul(out.I4, out.I4);
    out.j1 = R.div(R.mul(out.I4, out.I6p), out.I10);
    out.j2 = R.div(R.mul(I4sq, out.I12), d2);
    out.j3 = R.div(R.mul(R.mul(I4sq, I4sq), out.I4), d2);
  }
  return out;
}

}  // namespace

IgusaInvariants igusa_invariants(const Field& K, const Poly& P) {
  if (P.degree() < 5 || P.degree() > 6) fail(ErrorKind::Validation, "Igusa invariants need a quintic or sextic");
  std::array<Elem, 7> a{};
  for (int i = 0; i < 7; ++i) a[i] = P.coeff(i);
  return compute(FieldOps{K}, a);
}

IgusaInvariants igusa_invariants(const Curve& C) { return igusa_invariants(C.field, C.P); }

RationalIgusaInvariants igusa_invariants(std::span<const Rational> coeffs) {
  if (coeffs.size() < 6 || coeffs.size() > 7) fail(ErrorKind::Validation, "Igusa invariants need 6 or 7 coefficients");
  std::array<Rational, 7> a{};
  for (std::size_t i = 0; i < coeffs.size(); ++i) a[i] = coeffs[i];
  return compute(RationalOps{}, a);
}

}  // namespace g2c
