#include "g2count/frobenius.hpp"

namespace g2c {

namespace {

// Value of a Miller function at two effective divisors, kept as num/den.
struct MillerValue {
  std::array<Elem, 2> num;
  std::array<Elem, 2> den;
};

struct ZeroHit {};

void absorb(const Jacobian& J, const std::vector<FunctionFactor>& trace, const std::array<MumfordDivisor, 2>& at,
            MillerValue& m) {
  const Field& L = J.field();
  for (const auto& h : trace)
    for (int i = 0; i < 2; ++i) {
      Elem val = J.evaluate(h, at[i]);
      if (L.is_zero(val)) throw ZeroHit{};
      if (h.exponent > 0)
        m.num[i] = L.mul(m.num[i], val);
      else
        m.den[i] = L.mul(m.den[i], val);
    }
}

// f with div(f) = l (A) - ([l]A), evaluated at at[0] and at[1].
MillerValue miller(const Jacobian& J, const MumfordDivisor& A, std::int64_t l,
                   const std::array<MumfordDivisor, 2>& at) {
  const Field& L = J.field();
  MillerValue m{{L.one(), L.one()}, {L.one(), L.one()}};
  MumfordDivisor T = A;
  int top = 63;
  while (!((l >> top) & 1)) --top;
  for (int b = top - 1; b >= 0; --b) {
    for (int i = 0; i < 2; ++i) {
      m.num[i] = L.sqr(m.num[i]);
      m.den[i] = L.sqr(m.den[i]);
    }
    std::vector<FunctionFactor> tr;
    T = J.add_traced(T, T, tr);
    absorb(J, tr, at, m);
    if ((l >> b) & 1) {
      tr.clear();
      T = J.add_traced(T, A, tr);
      absorb(J, tr, at, m);
    }
  }
  return m;
}

bool coprime(const Field& L, const Poly& a, const Poly& b) { return poly::gcd(L, a, b).degree() == 0; }

// Weight-2 divisor R with D + R of weight 2 as well.
std::pair<MumfordDivisor, MumfordDivisor> shifted(const Jacobian& J, const MumfordDivisor& D, Rng& rng) {
  for (;;) {
    MumfordDivisor R = J.random_divisor(rng);
    MumfordDivisor A = J.add(D, R);
    if (A.weight() == 2 && coprime(J.field(), A.u, R.u)) return {A, R};
  }
}

Elem two_torsion_rule(const Jacobian& J, const MumfordDivisor& D1, const MumfordDivisor& D2) {
  const Field& L = J.field();
  for (const auto* D : {&D1, &D2})
    if (!D->v.is_zero() || !poly::rem(L, J.f(), D->u).is_zero())
      fail(ErrorKind::Internal, "2-torsion pairing expects divisors (u, 0) with u | f");
  // Subsets of the finite Weierstrass points, completed by infinity to even size.
  const int a = D1.u.degree(), b = D2.u.degree();
  const int common = poly::gcd(L, D1.u, D2.u).degree();
  const int parity = (common + a * b) % 2;
  return parity ? L.neg(L.one()) : L.one();
}

}  // namespace

Elem weil_pairing_miller(const Jacobian& J, const MumfordDivisor& D1, const MumfordDivisor& D2, std::int64_t ell,
                         Rng& rng) {
  const Field& L = J.field();
  if (J.is_identity(D1) || J.is_identity(D2)) return L.one();
  for (int attempt = 0; attempt < 64; ++attempt) {
    auto [A, R] = shifted(J, D1, rng);
    auto [E1, S1] = shifted(J, D2, rng);
    if (!coprime(L, A.u, E1.u) || !coprime(L, A.u, S1.u) || !coprime(L, R.u, E1.u) || !coprime(L, R.u, S1.u))
      continue;
    try {
      // D' = A - R and E' = E1 - S1 represent D1 and D2 away from infinity.
      MillerValue fA = miller(J, A, ell, {E1, S1});
      MillerValue fR = miller(J, R, ell, {E1, S1});
      MillerValue gE = miller(J, E1, ell, {A, R});
      MillerValue gS = miller(J, S1, ell, {A, R});
      // f_{D'}(E') / f_{E'}(D') with f_{D'} = fA / fR, f_{E'} = gE / gS.
      Elem num = L.mul(L.mul(fA.num[0], fR.num[1]), L.mul(gS.num[0], gE.num[1]));
      num = L.mul(num, L.mul(L.mul(fA.den[1], fR.den[0]), L.mul(gS.den[1], gE.den[0])));
      Elem den = L.mul(L.mul(fA.num[1], fR.num[0]), L.mul(gS.num[1], gE.num[0]));
      den = L.mul(den, L.mul(L.mul(fA.den[0], fR.den[1]), L.mul(gS.den[0], gE.den[1])));
      if (L.is_zero(den) || L.is_zero(num)) continue;
      return L.div(num, den);
    } catch (const ZeroHit&) {
      continue;
    }
  }
  fail(ErrorKind::Exhausted, "Weil pairing: divisor representatives kept colliding");
}

Elem weil_pairing_value(const Jacobian& J, const MumfordDivisor& D1, const MumfordDivisor& D2, std::int64_t ell,
                        Rng& rng) {
  if (ell == 2) return two_torsion_rule(J, D1, D2);
  return weil_pairing_miller(J, D1, D2, ell, rng);
}

std::int64_t weil_pairing(const Jacobian& J, const MumfordDivisor& D1, const MumfordDivisor& D2, std::int64_t ell,
                          Rng& rng) {
  const Field& L = J.field();
  const Elem w = weil_pairing_value(J, D1, D2, ell, rng);
  if (L.is_one(w)) return 0;
  if ((L.order() - 1) % ell != 0) fail(ErrorKind::Internal, "nontrivial pairing value without l-th roots of unity");
  const Elem zeta = ell == 2 ? L.neg(L.one()) : L.root_of_unity(static_cast<std::uint64_t>(ell));
  Elem cur = zeta;
  for (std::int64_t k = 1; k < ell; ++k) {
    if (cur == w) return k;
    cur = L.mul(cur, zeta);
  }
  fail(ErrorKind::Internal, "pairing value is not an l-th root of unity");
}

modl::Mat gram_matrix(const TorsionSpace& T, Rng& rng) {
  const int r = T.dim();
  modl::Mat G = modl::zero(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) {
      G[i][j] = weil_pairing(T.J, T.basis[i], T.basis[j], T.ell, rng);
      G[j][i] = modl::reduce(-G[i][j], T.ell);
    }
  return G;
}

}  // namespace g2c
