#include <algorithm>
#include <map>

#include "g2count/ff.hpp"

namespace g2c {

namespace {

Poly one_poly(const Field& K) { return poly::constant(K, K.one()); }

bool is_constant(const Poly& f) { return f.degree() <= 0; }

std::vector<int> prime_divisors(int n) {
  std::vector<int> out;
  for (int r = 2; r * r <= n; ++r) {
    if (n % r) continue;
    out.push_back(r);
    while (n % r == 0) n /= r;
  }
  if (n > 1) out.push_back(n);
  return out;
}

// a^{1/p} coefficient-wise; the p-th power map on K has order degree().
Poly pth_root(const Field& K, const Poly& f) {
  const auto p = static_cast<int>(K.characteristic());
  Poly r;
  for (int i = 0; i <= f.degree(); i += p) {
    Elem a = f.c[i];
    for (int k = 1; k < K.degree(); ++k) a = K.frobenius(a);
    r.c.push_back(a);
  }
  r.normalize();
  return r;
}

void squarefree_into(const Field& K, const Poly& f, int mult, std::vector<Factor>& out) {
  if (is_constant(f)) return;
  Poly c = poly::gcd(K, f, poly::derivative(K, f));
  Poly w = poly::quo(K, f, c);
  int i = 1;
  while (!is_constant(w)) {
    Poly y = poly::gcd(K, w, c);
    Poly z = poly::quo(K, w, y);
    if (!is_constant(z)) out.push_back({poly::monic(K, z), i * mult});
    w = std::move(y);
    c = poly::quo(K, c, w);
    ++i;
  }
  if (!is_constant(c)) squarefree_into(K, pth_root(K, c), mult * static_cast<int>(K.characteristic()), out);
}

// Squarefree pieces (g, m): f = prod g^m with the g pairwise coprime.
std::vector<Factor> squarefree(const Field& K, const Poly& f) {
  std::vector<Factor> out;
  squarefree_into(K, poly::monic(K, f), 1, out);
  return out;
}

// (product of degree-d irreducible factors, d) for squarefree monic f.
std::vector<std::pair<Poly, int>> distinct_degree(const Field& K, const Poly& f) {
  std::vector<std::pair<Poly, int>> out;
  Poly rest = f;
  const Poly X = poly::x(K);
  Poly h = poly::rem(K, X, rest);
  for (int d = 1; 2 * d <= rest.degree(); ++d) {
    h = poly::powmod(K, h, K.order(), rest);
    Poly g = poly::gcd(K, poly::sub(K, h, X), rest);
    if (!is_constant(g)) {
      out.emplace_back(g, d);
      rest = poly::quo(K, rest, g);
      h = poly::rem(K, h, rest);
    }
  }
  if (!is_constant(rest)) out.emplace_back(rest, rest.degree());
  return out;
}

Poly random_poly(const Field& K, int below_degree, Rng& rng) {
  Poly a;
  for (int i = 0; i < below_degree; ++i) a.c.push_back(K.random(rng));
  a.normalize();
  return a;
}

// Splits g, a product of distinct degree-d irreducibles, into its factors.
void equal_degree(const Field& K, const Poly& g, int d, Rng& rng, std::vector<Poly>& out) {
  if (g.degree() == d) {
    out.push_back(poly::monic(K, g));
    return;
  }
  const bool char2 = K.characteristic() == 2;
  const BigInt qd = boost::multiprecision::pow(K.order(), static_cast<unsigned>(d));
  for (;;) {
    Poly a = random_poly(K, g.degree(), rng);
    if (is_constant(a)) continue;
    Poly b;
    if (char2) {
      // Absolute trace to F_2 of a in F_{q^d}.
      const int steps = K.degree() * d;
      Poly t = a;
      b = a;
      for (int i = 1; i < steps; ++i) {
        t = poly::mulmod(K, t, t, g);
        b = poly::add(K, b, t);
      }
    } else {
      b = poly::sub(K, poly::powmod(K, a, (qd - 1) / 2, g), one_poly(K));
    }
    Poly h = poly::gcd(K, b, g);
    if (is_constant(h) || h.degree() == g.degree()) continue;
    equal_degree(K, h, d, rng, out);
    equal_degree(K, poly::quo(K, g, h), d, rng, out);
    return;
  }
}

bool poly_less(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(a.c.rbegin(), a.c.rend(), b.c.rbegin(), b.c.rend());
}

}  // namespace

bool is_irreducible(const Field& K, const Poly& f) {
  const int d = f.degree();
  if (d <= 0) return false;
  if (d == 1) return true;
  const Poly m = poly::monic(K, f);
  const Poly X = poly::x(K);
  // powers[k] = X^{q^k} mod m for k = 0..d.
  std::vector<Poly> powers{poly::rem(K, X, m)};
  for (int k = 1; k <= d; ++k) powers.push_back(poly::powmod(K, powers.back(), K.order(), m));
  if (poly::sub(K, powers[d], powers[0]) != Poly{}) return false;
  for (int r : prime_divisors(d)) {
    Poly g = poly::gcd(K, poly::sub(K, powers[d / r], X), m);
    if (!is_constant(g)) return false;
  }
  return true;
}

std::vector<Factor> poly_factor(const Field& K, const Poly& f, Rng& rng) {
  if (f.is_zero()) fail(ErrorKind::Internal, "cannot factor the zero polynomial");
  std::vector<Factor> out;
  for (const auto& [g, mult] : squarefree(K, f)) {
    for (const auto& [part, d] : distinct_degree(K, g)) {
      std::vector<Poly> pieces;
      equal_degree(K, part, d, rng, pieces);
      for (auto& piece : pieces) out.push_back({std::move(piece), mult});
    }
  }
  // Merge equal factors arising across squarefree layers, then sort.
  std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) { return poly_less(a.f, b.f); });
  std::vector<Factor> merged;
  for (auto& fac : out) {
    if (!merged.empty() && merged.back().f == fac.f)
      merged.back().multiplicity += fac.multiplicity;
    else
      merged.push_back(std::move(fac));
  }
  return merged;
}

std::vector<Elem> poly_roots_in_field(const Field& K, const Poly& f, Rng& rng) {
  if (f.is_zero()) fail(ErrorKind::Internal, "roots of the zero polynomial");
  std::vector<Elem> roots;
  if (f.degree() <= 0) return roots;
  const Poly m = poly::monic(K, f);
  const Poly X = poly::x(K);
  Poly xq = poly::powmod(K, X, K.order(), m);
  Poly g = poly::gcd(K, poly::sub(K, xq, X), m);
  if (is_constant(g)) return roots;
  std::vector<Poly> linears;
  equal_degree(K, g, 1, rng, linears);
  for (const auto& lin : linears) {
    const Elem r = K.neg(lin.c[0]);
    Poly rest = m;
    for (;;) {
      auto [q, rm] = poly::divrem(K, rest, lin);
      if (!rm.is_zero()) break;
      roots.push_back(r);
      rest = std::move(q);
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

DegreePattern poly_factor_degree_pattern(const Field& K, const Poly& f, Rng& rng) {
  (void)rng;
  if (f.is_zero()) fail(ErrorKind::Internal, "degree pattern of the zero polynomial");
  std::map<int, int> counts;
  DegreePattern pat;
  for (const auto& [g, mult] : squarefree(K, f)) {
    if (mult > 1) pat.squarefree = false;
    for (const auto& [part, d] : distinct_degree(K, g)) counts[d] += mult * (part.degree() / d);
  }
  pat.entries.assign(counts.begin(), counts.end());
  return pat;
}

}  // namespace g2c
