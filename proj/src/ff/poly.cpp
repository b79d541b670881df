#include <algorithm>
#include <cctype>
#include <sstream>

#include "g2count/ff.hpp"

namespace g2c::poly {

Poly constant(const Field& K, const Elem& a) {
  Poly f;
  if (!K.is_zero(a)) f.c.push_back(a);
  return f;
}

Poly x(const Field& K) { return Poly{{K.zero(), K.one()}}; }

Poly from_ints(const Field& K, std::span<const std::int64_t> coeffs) {
  Poly f;
  for (auto v : coeffs) f.c.push_back(K.from_int(v));
  f.normalize();
  return f;
}

Poly from_elems(std::vector<Elem> coeffs) {
  Poly f{std::move(coeffs)};
  f.normalize();
  return f;
}

Poly linear(const Field& K, const Elem& root) { return Poly{{K.neg(root), K.one()}}; }

Poly add(const Field& K, const Poly& f, const Poly& g) {
  Poly r;
  r.c.resize(std::max(f.c.size(), g.c.size()));
  for (std::size_t i = 0; i < r.c.size(); ++i) {
    if (i < f.c.size() && i < g.c.size())
      r.c[i] = K.add(f.c[i], g.c[i]);
    else
      r.c[i] = i < f.c.size() ? f.c[i] : g.c[i];
  }
  r.normalize();
  return r;
}

Poly sub(const Field& K, const Poly& f, const Poly& g) {
  Poly r;
  r.c.resize(std::max(f.c.size(), g.c.size()));
  for (std::size_t i = 0; i < r.c.size(); ++i) {
    const Elem a = i < f.c.size() ? f.c[i] : K.zero();
    const Elem b = i < g.c.size() ? g.c[i] : K.zero();
    r.c[i] = K.sub(a, b);
  }
  r.normalize();
  return r;
}

Poly neg(const Field& K, const Poly& f) {
  Poly r = f;
  for (auto& a : r.c) a = K.neg(a);
  return r;
}

Poly mul(const Field& K, const Poly& f, const Poly& g) {
  if (f.is_zero() || g.is_zero()) return {};
  Poly r;
  r.c.assign(f.c.size() + g.c.size() - 1, K.zero());
  for (std::size_t i = 0; i < f.c.size(); ++i) {
    if (K.is_zero(f.c[i])) continue;
    for (std::size_t j = 0; j < g.c.size(); ++j) r.c[i + j] = K.add(r.c[i + j], K.mul(f.c[i], g.c[j]));
  }
  r.normalize();
  return r;
}

Poly scale(const Field& K, const Poly& f, const Elem& a) {
  if (K.is_zero(a)) return {};
  Poly r = f;
  for (auto& c : r.c) c = K.mul(c, a);
  r.normalize();
  return r;
}

Poly shift(const Poly& f, int k) {
  if (f.is_zero()) return f;
  Poly r;
  r.c.assign(k, Elem{});
  r.c.insert(r.c.end(), f.c.begin(), f.c.end());
  return r;
}

std::pair<Poly, Poly> divrem(const Field& K, const Poly& f, const Poly& g) {
  if (g.is_zero()) fail(ErrorKind::Internal, "polynomial division by zero");
  if (f.degree() < g.degree()) return {Poly{}, f};
  Poly r = f;
  Poly q;
  q.c.assign(f.c.size() - g.c.size() + 1, K.zero());
  const Elem lead_inv = K.inv(g.lead());
  const int dg = g.degree();
  for (int k = r.degree(); k >= dg; --k) {
    const Elem coef = K.mul(r.c[k], lead_inv);
    q.c[k - dg] = coef;
    if (K.is_zero(coef)) continue;
    for (int j = 0; j <= dg; ++j) r.c[k - dg + j] = K.sub(r.c[k - dg + j], K.mul(coef, g.c[j]));
  }
  r.c.resize(dg);
  r.normalize();
  q.normalize();
  return {q, r};
}

Poly rem(const Field& K, const Poly& f, const Poly& g) {
  if (g.is_zero()) fail(ErrorKind::Internal, "polynomial division by zero");
  if (f.degree() < g.degree()) return f;
  Poly r = f;
  const Elem lead_inv = K.inv(g.lead());
  const int dg = g.degree();
  for (int k = r.degree(); k >= dg; --k) {
    if (K.is_zero(r.c[k])) continue;
    const Elem coef = K.mul(r.c[k], lead_inv);
    for (int j = 0; j <= dg; ++j) r.c[k - dg + j] = K.sub(r.c[k - dg + j], K.mul(coef, g.c[j]));
  }
  r.c.resize(dg);
  r.normalize();
  return r;
}

Poly quo(const Field& K, const Poly& f, const Poly& g) { return divrem(K, f, g).first; }

Poly monic(const Field& K, const Poly& f) {
  if (f.is_zero() || K.is_one(f.lead())) return f;
  return scale(K, f, K.inv(f.lead()));
}

Poly gcd(const Field& K, const Poly& f, const Poly& g) {
  Poly a = f, b = g;
  while (!b.is_zero()) {
    Poly r = rem(K, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(K, a);
}

std::tuple<Poly, Poly, Poly> xgcd(const Field& K, const Poly& f, const Poly& h) {
  Poly r0 = f, r1 = h;
  Poly s0 = constant(K, K.one()), s1;
  Poly t0, t1 = constant(K, K.one());
  while (!r1.is_zero()) {
    auto [q, r] = divrem(K, r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s2 = sub(K, s0, mul(K, q, s1));
    Poly t2 = sub(K, t0, mul(K, q, t1));
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const Elem li = K.inv(r0.lead());
  return {scale(K, r0, li), scale(K, s0, li), scale(K, t0, li)};
}

Poly derivative(const Field& K, const Poly& f) {
  Poly r;
  for (int i = 1; i <= f.degree(); ++i) r.c.push_back(K.mul_small(f.c[i], static_cast<std::uint64_t>(i)));
  r.normalize();
  return r;
}

Elem eval(const Field& K, const Poly& f, const Elem& a) {
  Elem r = K.zero();
  for (int i = f.degree(); i >= 0; --i) r = K.add(K.mul(r, a), f.c[i]);
  return r;
}

Poly compose(const Field& K, const Poly& f, const Poly& g) {
  Poly r;
  for (int i = f.degree(); i >= 0; --i) r = add(K, mul(K, r, g), constant(K, f.c[i]));
  return r;
}

Poly mulmod(const Field& K, const Poly& f, const Poly& g, const Poly& m) { return rem(K, mul(K, f, g), m); }

Poly powmod(const Field& K, const Poly& f, const BigInt& e, const Poly& m) {
  if (e < 0) fail(ErrorKind::Internal, "negative exponent in powmod");
  Poly result = rem(K, constant(K, K.one()), m);
  if (e == 0) return result;
  const Poly base = rem(K, f, m);
  const auto top = boost::multiprecision::msb(e);
  for (auto i = static_cast<std::int64_t>(top); i >= 0; --i) {
    result = mulmod(K, result, result, m);
    if (boost::multiprecision::bit_test(e, static_cast<unsigned>(i))) result = mulmod(K, result, base, m);
  }
  return result;
}

Poly invmod(const Field& K, const Poly& f, const Poly& m) {
  auto [g, s, t] = xgcd(K, rem(K, f, m), m);
  if (g.degree() != 0) fail(ErrorKind::Internal, "polynomial not invertible modulo m");
  return rem(K, s, m);
}

Poly frobenius(const Field& K, const Poly& f) {
  Poly r = f;
  for (auto& a : r.c) a = K.frobenius(a);
  return r;
}

Poly product_of_linears(const Field& K, std::span<const Elem> roots) {
  Poly r = constant(K, K.one());
  for (const auto& a : roots) r = mul(K, r, linear(K, a));
  return r;
}

Poly interpolate(const Field& K, std::span<const Elem> xs, std::span<const Elem> ys) {
  if (xs.size() != ys.size()) fail(ErrorKind::Internal, "interpolation size mismatch");
  const Poly full = product_of_linears(K, xs);
  const Poly dfull = derivative(K, full);
  Poly r;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (K.is_zero(ys[i])) continue;
    const Poly basis = quo(K, full, linear(K, xs[i]));
    const Elem w = eval(K, dfull, xs[i]);
    if (K.is_zero(w)) fail(ErrorKind::Internal, "interpolation nodes not distinct");
    r = add(K, r, scale(K, basis, K.div(ys[i], w)));
  }
  return r;
}

Elem resultant(const Field& K, const Poly& f0, const Poly& g0) {
  if (f0.is_zero() || g0.is_zero()) return K.zero();
  Poly f = f0, g = g0;
  Elem acc = K.one();
  // Res(f, g) = lc(f)^{deg g - deg r} Res(f, r) with r = g mod f, and
  // Res(f, r) = (-1)^{deg f deg r} Res(r, f).
  for (;;) {
    const int m = f.degree();
    const int n = g.degree();
    if (m == 0) return K.mul(acc, K.pow(f.c[0], static_cast<std::uint64_t>(n)));
    if (n == 0) return K.mul(acc, K.pow(g.c[0], static_cast<std::uint64_t>(m)));
    Poly r = rem(K, g, f);
    if (r.is_zero()) return K.zero();
    const int d = r.degree();
    acc = K.mul(acc, K.pow(f.lead(), static_cast<std::uint64_t>(n - d)));
    if ((static_cast<long>(m) * d) % 2 == 1) acc = K.neg(acc);
    g = std::move(f);
    f = std::move(r);
  }
}

bool in_prime_field(const Field& K, const Poly& f) {
  return std::all_of(f.c.begin(), f.c.end(), [&](const Elem& a) { return K.in_prime_field(a); });
}

std::string to_string(const Field& K, const Poly& f) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < f.c.size(); ++i) os << (i ? "," : "") << K.to_string(f.c[i]);
  os << ']';
  return os.str();
}

Poly parse(const Field& K, std::string_view text) {
  auto strip = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = strip(text);
  if (text.size() < 2 || text.front() != '[' || text.back() != ']')
    fail(ErrorKind::Parse, "polynomial must be written as [c0,c1,...]: '" + std::string(text) + "'");
  std::string_view body = text.substr(1, text.size() - 2);
  Poly f;
  // Split on top-level commas so nested element vectors stay intact.
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= body.size(); ++i) {
    const bool end = i == body.size();
    if (!end && body[i] == '[') ++depth;
    if (!end && body[i] == ']') --depth;
    if (depth < 0) fail(ErrorKind::Parse, "unbalanced brackets in polynomial");
    if (end || (body[i] == ',' && depth == 0)) {
      const auto tok = strip(body.substr(start, i - start));
      if (tok.empty()) {
        if (!(end && start == 0)) fail(ErrorKind::Parse, "empty coefficient in polynomial");
      } else {
        f.c.push_back(K.parse(tok));
      }
      start = i + 1;
    }
  }
  if (depth != 0) fail(ErrorKind::Parse, "unbalanced brackets in polynomial");
  f.normalize();
  return f;
}

}  // namespace g2c::poly
