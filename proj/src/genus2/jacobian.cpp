#include <sstream>

#include "g2count/genus2.hpp"

namespace g2c {

namespace {

Poly one(const Field& L) { return poly::constant(L, L.one()); }

Poly lift(const Field& L, const Poly& f) {
  Poly r;
  for (const auto& a : f.c) r.c.push_back(L.from_int(a.c[0]));
  r.normalize();
  return r;
}

}  // namespace

Jacobian::Jacobian(const Curve& odd_curve, Field L) : curve_(odd_curve), L_(std::move(L)) {
  if (odd_curve.degree() != 5) fail(ErrorKind::Internal, "Jacobian arithmetic needs a degree-5 model");
  if (L_.characteristic() != odd_curve.p()) fail(ErrorKind::Internal, "field characteristic mismatch");
  f_ = lift(L_, odd_curve.P);
}

MumfordDivisor Jacobian::identity() const { return {one(L_), Poly{}}; }

bool Jacobian::is_valid(const MumfordDivisor& D) const {
  if (D.u.is_zero() || D.u.degree() > 2 || !L_.is_one(D.u.lead())) return false;
  if (D.v.degree() >= D.u.degree()) return false;
  return poly::rem(L_, poly::sub(L_, poly::mul(L_, D.v, D.v), f_), D.u).is_zero();
}

MumfordDivisor Jacobian::make(Poly u, Poly v) const {
  u.normalize();
  v.normalize();
  MumfordDivisor D{std::move(u), std::move(v)};
  if (!is_valid(D)) fail(ErrorKind::Validation, "not a reduced Mumford divisor: " + to_string(D));
  return D;
}

MumfordDivisor Jacobian::reduce(Poly u, Poly v, std::vector<FunctionFactor>* trace) const {
  while (u.degree() > 2) {
    Poly u2 = poly::quo(L_, poly::sub(L_, f_, poly::mul(L_, v, v)), u);
    Poly v2 = poly::rem(L_, poly::neg(L_, v), u2);
    if (trace) {
      trace->push_back({poly::neg(L_, v), one(L_), 1});
      trace->push_back({u2, Poly{}, -1});
    }
    u = poly::monic(L_, u2);
    v = std::move(v2);
  }
  u = poly::monic(L_, u);
  v = poly::rem(L_, v, u);
  return {std::move(u), std::move(v)};
}

MumfordDivisor Jacobian::add_traced(const MumfordDivisor& a, const MumfordDivisor& b,
                                    std::vector<FunctionFactor>& trace) const {
  if (is_identity(a)) return b;
  if (is_identity(b)) return a;
  auto [d1, e1, e2] = poly::xgcd(L_, a.u, b.u);
  auto [d, c1, c2] = poly::xgcd(L_, d1, poly::add(L_, a.v, b.v));
  Poly s1 = poly::mul(L_, c1, e1);
  Poly s2 = poly::mul(L_, c1, e2);
  const Poly& s3 = c2;
  Poly u = poly::mul(L_, a.u, b.u);
  if (d.degree() > 0) u = poly::quo(L_, u, poly::mul(L_, d, d));
  Poly num = poly::add(L_, poly::mul(L_, poly::mul(L_, s1, a.u), b.v), poly::mul(L_, poly::mul(L_, s2, b.u), a.v));
  num = poly::add(L_, num, poly::mul(L_, s3, poly::add(L_, poly::mul(L_, a.v, b.v), f_)));
  Poly v = d.degree() > 0 ? poly::quo(L_, num, d) : num;
  v = poly::rem(L_, v, u);
  if (d.degree() > 0) trace.push_back({d, Poly{}, 1});
  return reduce(std::move(u), std::move(v), &trace);
}

MumfordDivisor Jacobian::add(const MumfordDivisor& a, const MumfordDivisor& b) const {
  if (is_identity(a)) return b;
  if (is_identity(b)) return a;
  std::vector<FunctionFactor> scratch;
  return add_traced(a, b, scratch);
}

MumfordDivisor Jacobian::negate(const MumfordDivisor& D) const {
  return {D.u, poly::rem(L_, poly::neg(L_, D.v), D.u)};
}

MumfordDivisor Jacobian::scalar_mul(const MumfordDivisor& D, const BigInt& m) const {
  if (m == 0 || is_identity(D)) return identity();
  const BigInt e = m < 0 ? BigInt(-m) : m;
  const MumfordDivisor base = m < 0 ? negate(D) : D;
  MumfordDivisor acc = identity();
  const auto top = boost::multiprecision::msb(e);
  for (auto i = static_cast<std::int64_t>(top); i >= 0; --i) {
    acc = add(acc, acc);
    if (boost::multiprecision::bit_test(e, static_cast<unsigned>(i))) acc = add(acc, base);
  }
  return acc;
}

MumfordDivisor Jacobian::frobenius(const MumfordDivisor& D) const {
  return {poly::frobenius(L_, D.u), poly::frobenius(L_, D.v)};
}

MumfordDivisor Jacobian::random_split_divisor(Rng& rng) const {
  // Two y-signs chosen independently; a zero ordinate has one choice, so it
  // is kept with probability 1/2 to keep the distribution uniform.
  std::bernoulli_distribution coin(0.5);
  for (;;) {
    Elem x1 = L_.random(rng), x2 = L_.random(rng);
    if (x1 == x2) continue;
    std::array<Elem, 2> xs{x1, x2}, ys{};
    bool ok = true;
    for (int i = 0; i < 2 && ok; ++i) {
      Elem fx = poly::eval(L_, f_, xs[i]);
      auto s = L_.sqrt(fx, rng);
      if (!s) {
        ok = false;
      } else if (L_.is_zero(*s)) {
        ok = coin(rng);
      } else {
        ys[i] = coin(rng) ? *s : L_.neg(*s);
      }
    }
    if (!ok) continue;
    Poly u = poly::mul(L_, poly::linear(L_, x1), poly::linear(L_, x2));
    Poly v = poly::interpolate(L_, xs, ys);
    return {std::move(u), std::move(v)};
  }
}

MumfordDivisor Jacobian::random_divisor(Rng& rng) const {
  std::bernoulli_distribution coin(0.5);
  for (;;) {
    Elem c0 = L_.random(rng), c1 = L_.random(rng);
    Elem disc = L_.sub(L_.sqr(c1), L_.mul_small(c0, 4));
    const int chi = L_.legendre(disc);
    if (chi == 0) continue;
    Poly u{{c0, c1, L_.one()}};
    if (chi == 1) {
      auto r = poly_roots_in_field(L_, u, rng);
      std::array<Elem, 2> xs{r[0], r[1]}, ys{};
      bool ok = true;
      for (int i = 0; i < 2 && ok; ++i) {
        auto s = L_.sqrt(poly::eval(L_, f_, xs[i]), rng);
        if (!s)
          ok = false;
        else if (L_.is_zero(*s))
          ok = coin(rng);
        else
          ys[i] = coin(rng) ? *s : L_.neg(*s);
      }
      if (!ok) continue;
      return {std::move(u), poly::interpolate(L_, xs, ys)};
    }
    // Irreducible u: two square roots at most, so halve the acceptance to
    // match the four sign choices of the split case.
    if (!coin(rng)) continue;
    auto s = sqrt_mod_irreducible(L_, poly::rem(L_, f_, u), u, rng);
    if (!s) continue;
    Poly v = *s;
    if (v.is_zero()) {
      if (!coin(rng)) continue;
    } else if (coin(rng)) {
      v = poly::rem(L_, poly::neg(L_, v), u);
    }
    return {std::move(u), std::move(v)};
  }
}

Elem Jacobian::evaluate(const FunctionFactor& h, const MumfordDivisor& E) const {
  if (is_identity(E)) return L_.one();
  Poly g = poly::add(L_, h.a, poly::mul(L_, h.b, E.v));
  return poly::resultant(L_, E.u, poly::rem(L_, g, E.u));
}

std::string Jacobian::to_string(const MumfordDivisor& D) const {
  std::ostringstream os;
  os << "(u=" << poly::to_string(L_, D.u) << ",v=" << poly::to_string(L_, D.v) << ")";
  return os.str();
}

std::optional<Poly> sqrt_mod_irreducible(const Field& L, const Poly& a0, const Poly& u, Rng& rng) {
  const Poly a = poly::rem(L, a0, u);
  if (a.is_zero()) return Poly{};
  const int k = u.degree();
  const BigInt Q = boost::multiprecision::pow(L.order(), static_cast<unsigned>(k));
  const Poly unit = poly::constant(L, L.one());
  const Poly minus_one = poly::constant(L, L.neg(L.one()));
  if (poly::powmod(L, a, (Q - 1) / 2, u) != unit) return std::nullopt;
  BigInt t = Q - 1;
  unsigned s = 0;
  while (!boost::multiprecision::bit_test(t, 0)) {
    t >>= 1;
    ++s;
  }
  Poly z;
  for (;;) {
    Poly cand;
    for (int i = 0; i < k; ++i) cand.c.push_back(L.random(rng));
    cand.normalize();
    if (cand.is_zero()) continue;
    if (poly::powmod(L, cand, (Q - 1) / 2, u) == minus_one) {
      z = cand;
      break;
    }
  }
  Poly c = poly::powmod(L, z, t, u);
  Poly x = poly::powmod(L, a, (t + 1) / 2, u);
  Poly b = poly::powmod(L, a, t, u);
  unsigned m = s;
  while (b != unit) {
    unsigned i = 0;
    Poly b2 = b;
    while (b2 != unit) {
      b2 = poly::mulmod(L, b2, b2, u);
      ++i;
    }
    Poly w = c;
    for (unsigned j = 0; j + i + 1 < m; ++j) w = poly::mulmod(L, w, w, u);
    x = poly::mulmod(L, x, w, u);
    c = poly::mulmod(L, w, w, u);
    b = poly::mulmod(L, b, c, u);
    m = i;
  }
  return x;
}

}  // namespace g2c
