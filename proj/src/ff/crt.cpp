#include <algorithm>

#include "g2count/ff.hpp"

namespace g2c {

namespace {

BigInt floor_mod(const BigInt& a, const BigInt& m) {
  BigInt r = a % m;
  if (r < 0) r += m;
  return r;
}

// (g, s) with s * a = g mod m, g = gcd(a, m).
std::pair<BigInt, BigInt> ext_gcd(const BigInt& a, const BigInt& m) {
  BigInt r0 = a, r1 = m, s0 = 1, s1 = 0;
  while (r1 != 0) {
    BigInt q = r0 / r1;
    BigInt r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    BigInt s2 = s0 - q * s1;
    s0 = s1;
    s1 = s2;
  }
  if (r0 < 0) {
    r0 = -r0;
    s0 = -s0;
  }
  return {r0, s0};
}

}  // namespace

Congruence integer_crt(std::span<const Congruence> residues) {
  Congruence acc{0, 1};
  for (const auto& c : residues) {
    if (c.modulus <= 0) fail(ErrorKind::Usage, "CRT modulus must be positive");
    const BigInt v = floor_mod(c.value, c.modulus);
    auto [g, s] = ext_gcd(acc.modulus, c.modulus);
    const BigInt diff = v - acc.value;
    if (diff % g != 0) fail(ErrorKind::Inconsistent, "inconsistent CRT residues");
    const BigInt step = c.modulus / g;
    const BigInt t = floor_mod((diff / g) * s, step);
    const BigInt lcm = acc.modulus * step;
    acc.value = floor_mod(acc.value + acc.modulus * t, lcm);
    acc.modulus = lcm;
  }
  return acc;
}

BigInt centered(const BigInt& value, const BigInt& modulus) {
  BigInt r = floor_mod(value, modulus);
  if (2 * r > modulus) r -= modulus;
  return r;
}

BigInt integer_resultant(std::span<const BigInt> f0, std::span<const BigInt> g0) {
  std::vector<BigInt> f(f0.begin(), f0.end()), g(g0.begin(), g0.end());
  while (!f.empty() && f.back() == 0) f.pop_back();
  while (!g.empty() && g.back() == 0) g.pop_back();
  if (f.empty() || g.empty()) return 0;
  const int m = static_cast<int>(f.size()) - 1;
  const int n = static_cast<int>(g.size()) - 1;
  if (m == 0) return boost::multiprecision::pow(f[0], static_cast<unsigned>(n));
  if (n == 0) return boost::multiprecision::pow(g[0], static_cast<unsigned>(m));
  const int N = m + n;
  std::vector<std::vector<BigInt>> A(N, std::vector<BigInt>(N, 0));
  // Sylvester rows: n shifted copies of f, then m shifted copies of g, with
  // coefficients from the leading one down.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) A[i][i + j] = f[m - j];
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) A[n + i][i + j] = g[n - j];
  int sign = 1;
  BigInt prev = 1;
  for (int k = 0; k < N - 1; ++k) {
    if (A[k][k] == 0) {
      int piv = -1;
      for (int r = k + 1; r < N; ++r)
        if (A[r][k] != 0) {
          piv = r;
          break;
        }
      if (piv < 0) return 0;
      std::swap(A[k], A[piv]);
      sign = -sign;
    }
    for (int i = k + 1; i < N; ++i) {
      for (int j = k + 1; j < N; ++j) A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) / prev;
      A[i][k] = 0;
    }
    prev = A[k][k];
  }
  return sign * A[N - 1][N - 1];
}

Embedding Embedding::find(const Field& source, const Field& target, Rng& rng) {
  if (source.characteristic() != target.characteristic() || target.degree() % source.degree() != 0)
    fail(ErrorKind::Internal, "no embedding between these fields");
  Poly m;
  for (auto c : source.modulus()) m.c.push_back(target.from_int(c));
  m.normalize();
  auto roots = poly_roots_in_field(target, m, rng);
  if (roots.empty()) fail(ErrorKind::Internal, "source modulus has no root in target");
  return Embedding(source, target, roots.front());
}

Embedding Embedding::from_image(const Field& source, const Field& target, const Elem& image) {
  Poly m;
  for (auto c : source.modulus()) m.c.push_back(target.from_int(c));
  m.normalize();
  if (!target.is_zero(poly::eval(target, m, image))) fail(ErrorKind::Internal, "image is not a root of the modulus");
  return Embedding(source, target, image);
}

Elem Embedding::apply(const Elem& a) const {
  Elem r = target_.zero();
  for (int i = source_.degree() - 1; i >= 0; --i)
    r = target_.add(target_.mul(r, image_), target_.from_int(a.c[i]));
  return r;
}

Embedding Embedding::then(const Embedding& next) const {
  if (!next.source_.isomorphic_to(target_)) fail(ErrorKind::Internal, "embedding composition mismatch");
  return Embedding(source_, next.target_, next.apply(image_));
}

}  // namespace g2c
