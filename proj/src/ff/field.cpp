#include <algorithm>
#include <cctype>
#include <sstream>

#include "g2count/ff.hpp"

namespace g2c {

namespace {

using u64 = std::uint64_t;

u64 inv_mod_u64(u64 a, u64 p) {
  // a^{-1} mod p via extended Euclid on signed values.
  std::int64_t t = 0, newt = 1;
  std::int64_t r = static_cast<std::int64_t>(p), newr = static_cast<std::int64_t>(a % p);
  while (newr != 0) {
    const std::int64_t q = r / newr;
    std::tie(t, newt) = std::make_pair(newt, t - q * newt);
    std::tie(r, newr) = std::make_pair(newr, r - q * newr);
  }
  if (r != 1) fail(ErrorKind::Internal, "inverse of a non-unit modulo p");
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<u64>(t);
}

// Raw polynomial helpers over F_p on std::vector<u64>, used for inversion.
void trim(std::vector<u64>& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

Field Field::build(std::uint64_t p, std::vector<std::uint32_t> modulus) {
  auto d = std::make_shared<Data>();
  d->p = p;
  d->n = static_cast<int>(modulus.size()) - 1;
  d->modulus = std::move(modulus);
  d->order = boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(d->n));
  Field K(d);
  if (d->n > 1) {
    // x^p, then successive powers x^{p i}.
    Elem xp = K.pow(K.generator(), p);
    std::vector<Elem> rows(d->n);
    rows[0] = K.one();
    for (int i = 1; i < d->n; ++i) rows[i] = K.mul(rows[i - 1], xp);
    d->frob_rows = std::move(rows);
  }
  return K;
}

Field Field::prime(std::uint64_t p) {
  if (!is_prime_u64(p)) fail(ErrorKind::Usage, "field characteristic " + std::to_string(p) + " is not prime");
  if (p >= (1ULL << 31)) fail(ErrorKind::Usage, "field characteristic must be below 2^31");
  return build(p, {0, 1});
}

Field Field::with_modulus(std::uint64_t p, std::vector<std::uint32_t> modulus) {
  const Field Fp = prime(p);
  while (!modulus.empty() && modulus.back() % p == 0) modulus.pop_back();
  for (auto& c : modulus) c = static_cast<std::uint32_t>(c % p);
  const int n = static_cast<int>(modulus.size()) - 1;
  if (n < 1) fail(ErrorKind::Usage, "extension modulus must have degree >= 1");
  if (n > kMaxExtDegree) fail(ErrorKind::GuardExceeded, "extension degree " + std::to_string(n) + " exceeds supported maximum");
  if (modulus.back() != 1) fail(ErrorKind::Usage, "extension modulus must be monic");
  if (n == 1) return Fp;
  Poly m;
  for (auto c : modulus) m.c.push_back(Fp.from_int(c));
  if (!is_irreducible(Fp, m)) fail(ErrorKind::Usage, "extension modulus is reducible");
  return build(p, std::move(modulus));
}

Field Field::extension(std::uint64_t p, int n, std::uint64_t seed) {
  const Field Fp = prime(p);
  if (n < 1) fail(ErrorKind::Usage, "extension degree must be positive");
  if (n > kMaxExtDegree) fail(ErrorKind::GuardExceeded, "extension degree " + std::to_string(n) + " exceeds supported maximum");
  if (n == 1) return Fp;
  Rng rng(seed);
  std::uniform_int_distribution<std::uint64_t> coef(0, p - 1);
  for (;;) {
    std::vector<std::uint32_t> m(n + 1);
    for (int i = 0; i < n; ++i) m[i] = static_cast<std::uint32_t>(coef(rng));
    m[n] = 1;
    if (m[0] == 0) continue;
    Poly f;
    for (auto c : m) f.c.push_back(Fp.from_int(c));
    if (is_irreducible(Fp, f)) return build(p, std::move(m));
  }
}

Elem Field::one() const {
  Elem r;
  r.c[0] = 1;
  return r;
}

Elem Field::from_int(std::int64_t v) const {
  Elem r;
  const auto p = static_cast<std::int64_t>(d_->p);
  std::int64_t m = v % p;
  if (m < 0) m += p;
  r.c[0] = static_cast<std::uint32_t>(m);
  return r;
}

Elem Field::from_big(const BigInt& v) const {
  BigInt m = v % d_->p;
  if (m < 0) m += d_->p;
  Elem r;
  r.c[0] = static_cast<std::uint32_t>(m);
  return r;
}

Elem Field::from_coeffs(std::span<const std::int64_t> coeffs) const {
  if (static_cast<int>(coeffs.size()) > d_->n) fail(ErrorKind::Parse, "too many coefficients for a field element");
  Elem r;
  for (std::size_t i = 0; i < coeffs.size(); ++i) r.c[i] = from_int(coeffs[i]).c[0];
  return r;
}

Elem Field::generator() const {
  Elem r;
  if (d_->n == 1) return r;
  r.c[1] = 1;
  return r;
}

bool Field::in_prime_field(const Elem& a) const {
  for (int i = 1; i < d_->n; ++i)
    if (a.c[i] != 0) return false;
  return true;
}

Elem Field::add(const Elem& a, const Elem& b) const {
  Elem r;
  const auto p = static_cast<std::uint32_t>(d_->p);
  for (int i = 0; i < d_->n; ++i) {
    std::uint32_t s = a.c[i] + b.c[i];
    if (s >= p) s -= p;
    r.c[i] = s;
  }
  return r;
}

Elem Field::sub(const Elem& a, const Elem& b) const {
  Elem r;
  const auto p = static_cast<std::uint32_t>(d_->p);
  for (int i = 0; i < d_->n; ++i) r.c[i] = a.c[i] >= b.c[i] ? a.c[i] - b.c[i] : a.c[i] + p - b.c[i];
  return r;
}

Elem Field::neg(const Elem& a) const {
  Elem r;
  const auto p = static_cast<std::uint32_t>(d_->p);
  for (int i = 0; i < d_->n; ++i) r.c[i] = a.c[i] == 0 ? 0 : p - a.c[i];
  return r;
}

Elem Field::mul_small(const Elem& a, std::uint64_t s) const {
  Elem r;
  const u64 p = d_->p;
  s %= p;
  for (int i = 0; i < d_->n; ++i) r.c[i] = static_cast<std::uint32_t>(a.c[i] * s % p);
  return r;
}

Elem Field::mul(const Elem& a, const Elem& b) const {
  const u64 p = d_->p;
  const int n = d_->n;
  Elem r;
  if (n == 1) {
    r.c[0] = static_cast<std::uint32_t>(static_cast<u64>(a.c[0]) * b.c[0] % p);
    return r;
  }
  std::array<u64, 2 * kMaxExtDegree> t{};
  for (int i = 0; i < n; ++i) {
    const u64 ai = a.c[i];
    if (ai == 0) continue;
    for (int j = 0; j < n; ++j) t[i + j] = (t[i + j] + ai * b.c[j]) % p;
  }
  const auto& m = d_->modulus;
  for (int k = 2 * n - 2; k >= n; --k) {
    const u64 top = t[k];
    if (top == 0) continue;
    for (int j = 0; j < n; ++j) {
      if (m[j] == 0) continue;
      t[k - n + j] = (t[k - n + j] + top * (p - m[j])) % p;
    }
  }
  for (int i = 0; i < n; ++i) r.c[i] = static_cast<std::uint32_t>(t[i]);
  return r;
}

Elem Field::inv(const Elem& a) const {
  if (is_zero(a)) fail(ErrorKind::Internal, "division by zero in finite field");
  const u64 p = d_->p;
  const int n = d_->n;
  if (n == 1) {
    Elem r;
    r.c[0] = static_cast<std::uint32_t>(inv_mod_u64(a.c[0], p));
    return r;
  }
  // Extended Euclid between a(x) and m(x) over F_p, tracking the cofactor of a.
  std::vector<u64> r0(d_->modulus.begin(), d_->modulus.end()), r1(a.c.begin(), a.c.begin() + n);
  std::vector<u64> s0{}, s1{1};
  trim(r1);
  auto submul = [p](std::vector<u64>& f, const std::vector<u64>& g, u64 c, std::size_t shift) {
    if (f.size() < g.size() + shift) f.resize(g.size() + shift, 0);
    for (std::size_t i = 0; i < g.size(); ++i) f[i + shift] = (f[i + shift] + (p - g[i] * c % p)) % p;
    trim(f);
  };
  while (r1.size() > 1) {
    // r0 = r0 mod r1, s0 tracked alongside.
    const u64 lead_inv = inv_mod_u64(r1.back(), p);
    while (r0.size() >= r1.size()) {
      const u64 c = r0.back() * lead_inv % p;
      const std::size_t shift = r0.size() - r1.size();
      submul(r0, r1, c, shift);
      submul(s0, s1, c, shift);
    }
    std::swap(r0, r1);
    std::swap(s0, s1);
  }
  if (r1.empty()) fail(ErrorKind::Internal, "element not invertible (modulus reducible?)");
  const u64 c = inv_mod_u64(r1[0], p);
  Elem r;
  for (std::size_t i = 0; i < s1.size() && i < static_cast<std::size_t>(n); ++i) r.c[i] = static_cast<std::uint32_t>(s1[i] * c % p);
  return r;
}

Elem Field::pow(const Elem& a, std::uint64_t e) const {
  Elem result = one(), base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    e >>= 1;
    if (e) base = sqr(base);
  }
  return result;
}

Elem Field::pow(const Elem& a, const BigInt& e) const {
  if (e < 0) return pow(inv(a), BigInt(-e));
  if (e == 0) return one();
  Elem result = one();
  const auto top = boost::multiprecision::msb(e);
  for (auto i = static_cast<std::int64_t>(top); i >= 0; --i) {
    result = sqr(result);
    if (boost::multiprecision::bit_test(e, static_cast<unsigned>(i))) result = mul(result, a);
  }
  return result;
}

Elem Field::frobenius(const Elem& a) const {
  const int n = d_->n;
  if (n == 1) return a;
  Elem r;
  for (int i = 0; i < n; ++i) {
    if (a.c[i] == 0) continue;
    r = add(r, mul_small(d_->frob_rows[i], a.c[i]));
  }
  return r;
}

int Field::legendre(const Elem& a) const {
  if (is_zero(a)) return 0;
  if (d_->p == 2) return 1;
  const Elem t = pow(a, BigInt((d_->order - 1) / 2));
  if (is_one(t)) return 1;
  if (t == neg(one())) return -1;
  fail(ErrorKind::Internal, "Euler criterion produced a non-sign value");
}

std::optional<Elem> Field::sqrt(const Elem& a, Rng& rng) const {
  if (is_zero(a)) return zero();
  if (d_->p == 2) return pow(a, BigInt(d_->order / 2));
  if (legendre(a) != 1) return std::nullopt;
  BigInt t = d_->order - 1;
  unsigned s = 0;
  while ((t & 1) == 0) {
    t >>= 1;
    ++s;
  }
  Elem z;
  do {
    z = random(rng);
  } while (legendre(z) != -1);
  Elem c = pow(z, t);
  Elem x = pow(a, BigInt((t + 1) / 2));
  Elem b = pow(a, t);
  unsigned m = s;
  while (!is_one(b)) {
    unsigned i = 0;
    Elem b2 = b;
    while (!is_one(b2)) {
      b2 = sqr(b2);
      ++i;
    }
    Elem w = c;
    for (unsigned k = 0; k + i + 1 < m; ++k) w = sqr(w);
    x = mul(x, w);
    c = sqr(w);
    b = mul(b, c);
    m = i;
  }
  return x;
}

Elem Field::random(Rng& rng) const {
  std::uniform_int_distribution<std::uint64_t> coef(0, d_->p - 1);
  Elem r;
  for (int i = 0; i < d_->n; ++i) r.c[i] = static_cast<std::uint32_t>(coef(rng));
  return r;
}

Elem Field::element_at(const BigInt& index) const {
  BigInt v = index;
  Elem r;
  for (int i = 0; i < d_->n && v > 0; ++i) {
    r.c[i] = static_cast<std::uint32_t>(v % d_->p);
    v /= d_->p;
  }
  return r;
}

Elem Field::root_of_unity(std::uint64_t l) const {
  if ((d_->order - 1) % l != 0) fail(ErrorKind::Internal, "field has no primitive root of unity of order " + std::to_string(l));
  const BigInt e = (d_->order - 1) / l;
  for (BigInt k = 2; k < d_->order; ++k) {
    const Elem z = pow(element_at(k), e);
    if (!is_one(z)) return z;
  }
  fail(ErrorKind::Internal, "root of unity search failed");
}

std::string Field::to_string(const Elem& a) const {
  if (d_->n == 1) return std::to_string(a.c[0]);
  int top = d_->n - 1;
  while (top > 0 && a.c[top] == 0) --top;
  std::ostringstream os;
  os << '[';
  for (int i = 0; i <= top; ++i) os << (i ? "," : "") << a.c[i];
  os << ']';
  return os.str();
}

Elem Field::parse(std::string_view text) const {
  auto strip = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  auto parse_int = [](std::string_view s) -> BigInt {
    if (s.empty()) fail(ErrorKind::Parse, "empty integer");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) fail(ErrorKind::Parse, "malformed integer '" + std::string(s) + "'");
    for (std::size_t k = i; k < s.size(); ++k)
      if (!std::isdigit(static_cast<unsigned char>(s[k]))) fail(ErrorKind::Parse, "malformed integer '" + std::string(s) + "'");
    BigInt v(std::string(s.substr(i)));
    return s[0] == '-' ? BigInt(-v) : v;
  };
  text = strip(text);
  if (text.empty()) fail(ErrorKind::Parse, "empty field element");
  if (text.front() != '[') return from_big(parse_int(text));
  if (text.back() != ']') fail(ErrorKind::Parse, "unterminated field element '" + std::string(text) + "'");
  std::string_view body = text.substr(1, text.size() - 2);
  Elem r;
  int i = 0;
  while (!strip(body).empty()) {
    const auto comma = body.find(',');
    const auto tok = strip(body.substr(0, comma));
    if (i >= d_->n) fail(ErrorKind::Parse, "too many coefficients for a field element");
    r.c[i++] = from_big(parse_int(tok)).c[0];
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  return r;
}

}  // namespace g2c
