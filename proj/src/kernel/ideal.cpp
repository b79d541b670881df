#include <algorithm>
#include <set>

#include "g2count/kernel.hpp"

namespace g2c {

bool SubgroupPoints::contains(const MumfordDivisor& D) const {
  return std::binary_search(elements.begin(), elements.end(), D);
}

SubgroupPoints span_subgroup(const Jacobian& J, const std::vector<MumfordDivisor>& gens, std::int64_t ell) {
  std::set<MumfordDivisor> cur{J.identity()};
  for (const auto& g : gens) {
    if (cur.count(g)) continue;
    std::set<MumfordDivisor> next;
    for (const auto& e : cur) {
      MumfordDivisor x = e;
      for (std::int64_t k = 0; k < ell; ++k) {
        next.insert(x);
        x = J.add(x, g);
      }
      if (x != e) fail(ErrorKind::Internal, "subgroup generator is not l-torsion");
    }
    cur = std::move(next);
  }
  return SubgroupPoints{J, {cur.begin(), cur.end()}};
}

bool is_frobenius_stable(const SubgroupPoints& S) {
  return std::all_of(S.elements.begin(), S.elements.end(),
                     [&](const MumfordDivisor& D) { return S.contains(S.J.frobenius(D)); });
}

KernelIdeal ideal_from_subgroup(const SubgroupPoints& S) {
  const Field& L = S.J.field();
  if (S.order() % 2 == 0) fail(ErrorKind::NonGeneric, "even-order subgroup: v vanishes on 2-torsion");
  // One representative per +-pair. Two pairs may share u (P1 + P2 and
  // P1 - P2), which the u1 check below rejects.
  std::set<MumfordDivisor> pairs;
  for (const auto& D : S.elements) {
    if (S.J.is_identity(D)) continue;
    if (D.weight() < 2) fail(ErrorKind::NonGeneric, "subgroup contains a point of weight < 2");
    if (L.is_zero(D.v.coeff(1))) fail(ErrorKind::NonGeneric, "subgroup contains a point with v1 = 0");
    pairs.insert(std::min(D, S.J.negate(D)));
  }
  std::vector<Elem> xs, u0s, v1sq, ratio;
  for (const auto& D : pairs) {
    xs.push_back(D.u.coeff(1));
    u0s.push_back(D.u.coeff(0));
    const Elem v1 = D.v.coeff(1);
    v1sq.push_back(L.sqr(v1));
    ratio.push_back(L.div(D.v.coeff(0), v1));
  }
  {
    std::vector<Elem> sorted = xs;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      fail(ErrorKind::NonGeneric, "two +-pairs share the same u1");
  }
  KernelIdeal I{Field::prime(L.characteristic()), {}, {}, {}, {}, S.order()};
  I.R1 = poly::product_of_linears(L, xs);
  I.R0 = poly::interpolate(L, xs, u0s);
  I.S1 = poly::interpolate(L, xs, v1sq);
  I.S0 = poly::interpolate(L, xs, ratio);
  for (const Poly* f : {&I.R1, &I.R0, &I.S1, &I.S0})
    if (!poly::in_prime_field(L, *f)) fail(ErrorKind::NotRational, "kernel ideal does not descend to the base field");
  return I;
}

bool ideal_vanishes_at(const KernelIdeal& I, const Jacobian& J, const MumfordDivisor& D) {
  const Field& L = J.field();
  if (D.weight() != 2) return false;
  const Elem u1 = D.u.coeff(1), u0 = D.u.coeff(0), v1 = D.v.coeff(1), v0 = D.v.coeff(0);
  return L.is_zero(poly::eval(L, I.R1, u1)) && poly::eval(L, I.R0, u1) == u0 &&
         poly::eval(L, I.S1, u1) == L.sqr(v1) && L.mul(v1, poly::eval(L, I.S0, u1)) == v0;
}

FrobeniusImages frobenius_mod_ideal(const KernelIdeal& I, const BigInt& Q) {
  if (Q % 2 == 0) fail(ErrorKind::Usage, "Frobenius exponent must be odd");
  const Field& K = I.base;
  FrobeniusImages F;
  F.u1 = poly::powmod(K, poly::x(K), Q, I.R1);
  F.u0 = poly::powmod(K, I.R0, Q, I.R1);
  // V1^Q = V1 (V1^2)^{(Q-1)/2} = V1 S1^{(Q-1)/2}.
  F.v1 = poly::powmod(K, I.S1, (Q - 1) / 2, I.R1);
  F.v0 = poly::mulmod(K, F.v1, poly::powmod(K, I.S0, Q, I.R1), I.R1);
  return F;
}

FrobeniusImages compose_images(const KernelIdeal& I, const FrobeniusImages& a, const FrobeniusImages& b) {
  const Field& K = I.base;
  auto at_a = [&](const Poly& f) { return poly::rem(K, poly::compose(K, f, a.u1), I.R1); };
  FrobeniusImages out;
  out.u1 = at_a(b.u1);
  out.u0 = at_a(b.u0);
  out.v1 = poly::mulmod(K, a.v1, at_a(b.v1), I.R1);
  out.v0 = poly::mulmod(K, a.v1, at_a(b.v0), I.R1);
  return out;
}

MumfordDivisor apply_images(const FrobeniusImages& F, const Jacobian& J, const MumfordDivisor& D) {
  const Field& L = J.field();
  const Elem u1 = D.u.coeff(1), v1 = D.v.coeff(1);
  Poly u = poly::from_elems({poly::eval(L, F.u0, u1), poly::eval(L, F.u1, u1), L.one()});
  Poly v = poly::from_elems({L.mul(v1, poly::eval(L, F.v0, u1)), L.mul(v1, poly::eval(L, F.v1, u1))});
  return MumfordDivisor{u, v};
}

std::string ideal_to_string(const KernelIdeal& I) {
  const Field& K = I.base;
  return "order=" + std::to_string(I.order) + ";R1=" + poly::to_string(K, I.R1) + ";R0=" + poly::to_string(K, I.R0) +
         ";S1=" + poly::to_string(K, I.S1) + ";S0=" + poly::to_string(K, I.S0);
}

}  // namespace g2c
