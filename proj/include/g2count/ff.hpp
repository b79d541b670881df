#pragma once

// Prime fields, their extensions, and dense univariate polynomials over them.
//
// An extension F_{p^n} is F_p[x]/(m) for a monic irreducible m of degree n.
// Elements are stored as a fixed-capacity coefficient array in the power
// basis 1, x, ..., x^{n-1}. Because every field shares that layout, an
// element of F_p (only c[0] set) is a valid element of every extension of
// F_p without conversion; embeddings between two proper extensions are
// explicit (see Embedding).

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "g2count/error.hpp"

namespace g2c {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Rng = std::mt19937_64;

inline constexpr int kMaxExtDegree = 32;

struct Elem {
  std::array<std::uint32_t, kMaxExtDegree> c{};

  friend bool operator==(const Elem&, const Elem&) = default;
  friend auto operator<=>(const Elem&, const Elem&) = default;
};

bool is_prime_u64(std::uint64_t n);

class Field {
 public:
  // Z/pZ for any prime p (small characteristics are needed for residues of
  // characteristic polynomials mod l; curve code enforces p >= 5 itself).
  static Field prime(std::uint64_t p);
  // F_{p^n} with a seeded random irreducible modulus. n = 1 gives F_p with
  // the modulus X.
  static Field extension(std::uint64_t p, int n, std::uint64_t seed);
  // F_p[x]/(modulus); modulus little-endian, monic, checked irreducible.
  static Field with_modulus(std::uint64_t p, std::vector<std::uint32_t> modulus);

  std::uint64_t characteristic() const { return d_->p; }
  int degree() const { return d_->n; }
  const BigInt& order() const { return d_->order; }
  // Little-endian modulus coefficients, length degree() + 1.
  const std::vector<std::uint32_t>& modulus() const { return d_->modulus; }

  Elem zero() const { return Elem{}; }
  Elem one() const;
  Elem from_int(std::int64_t v) const;
  Elem from_big(const BigInt& v) const;
  Elem from_coeffs(std::span<const std::int64_t> coeffs) const;
  // The class of x in F_p[x]/(m); equal to 0 when degree() == 1.
  Elem generator() const;

  bool is_zero(const Elem& a) const { return a == Elem{}; }
  bool is_one(const Elem& a) const { return a == one(); }
  bool in_prime_field(const Elem& a) const;
  std::uint32_t prime_value(const Elem& a) const { return a.c[0]; }

  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem mul_small(const Elem& a, std::uint64_t s) const;
  Elem sqr(const Elem& a) const { return mul(a, a); }
  Elem inv(const Elem& a) const;
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
  Elem pow(const Elem& a, const BigInt& e) const;
  Elem pow(const Elem& a, std::uint64_t e) const;
  // a -> a^p; additive and fixes exactly F_p.
  Elem frobenius(const Elem& a) const;

  // Quadratic character: 0, 1 or -1. Characteristic 2 fields report 1 for
  // every nonzero element.
  int legendre(const Elem& a) const;
  bool is_square(const Elem& a) const { return legendre(a) >= 0; }
  std::optional<Elem> sqrt(const Elem& a, Rng& rng) const;

  Elem random(Rng& rng) const;
  // Deterministic enumeration of elements: index in [0, order) in base p.
  Elem element_at(const BigInt& index) const;
  // Primitive l-th root of unity fixed by a deterministic search; requires
  // l | order - 1.
  Elem root_of_unity(std::uint64_t l) const;

  std::string to_string(const Elem& a) const;
  Elem parse(std::string_view text) const;

  bool same_as(const Field& other) const { return d_ == other.d_; }
  bool isomorphic_to(const Field& other) const {
    return d_->p == other.d_->p && d_->n == other.d_->n && d_->modulus == other.d_->modulus;
  }

 private:
  struct Data {
    std::uint64_t p = 0;
    int n = 1;
    std::vector<std::uint32_t> modulus;
    BigInt order;
    // Row i holds x^{p i} mod m.
    std::vector<Elem> frob_rows;
  };
  explicit Field(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  static Field build(std::uint64_t p, std::vector<std::uint32_t> modulus);

  std::shared_ptr<const Data> d_;
};

// Dense polynomial over a Field, coefficients little-endian, no trailing
// zeros. The zero polynomial has an empty coefficient vector.
struct Poly {
  std::vector<Elem> c;

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  const Elem& lead() const { return c.back(); }
  Elem coeff(int i) const { return (i >= 0 && i < static_cast<int>(c.size())) ? c[i] : Elem{}; }
  void normalize() {
    while (!c.empty() && c.back() == Elem{}) c.pop_back();
  }
  friend bool operator==(const Poly&, const Poly&) = default;
};

namespace poly {

Poly constant(const Field& K, const Elem& a);
Poly x(const Field& K);
Poly from_ints(const Field& K, std::span<const std::int64_t> coeffs);
Poly from_elems(std::vector<Elem> coeffs);
Poly linear(const Field& K, const Elem& root);  // X - root

Poly add(const Field& K, const Poly& f, const Poly& g);
Poly sub(const Field& K, const Poly& f, const Poly& g);
Poly neg(const Field& K, const Poly& f);
Poly mul(const Field& K, const Poly& f, const Poly& g);
Poly scale(const Field& K, const Poly& f, const Elem& a);
Poly shift(const Poly& f, int k);  // f * X^k
std::pair<Poly, Poly> divrem(const Field& K, const Poly& f, const Poly& g);
Poly rem(const Field& K, const Poly& f, const Poly& g);
Poly quo(const Field& K, const Poly& f, const Poly& g);
Poly monic(const Field& K, const Poly& f);
Poly gcd(const Field& K, const Poly& f, const Poly& g);
// Returns (g, s, t) with g = s f + t h monic (or zero when both are zero).
std::tuple<Poly, Poly, Poly> xgcd(const Field& K, const Poly& f, const Poly& h);
Poly derivative(const Field& K, const Poly& f);
Elem eval(const Field& K, const Poly& f, const Elem& a);
Poly compose(const Field& K, const Poly& f, const Poly& g);
Poly mulmod(const Field& K, const Poly& f, const Poly& g, const Poly& m);
Poly powmod(const Field& K, const Poly& f, const BigInt& e, const Poly& m);
// Inverse of f modulo m; throws Internal when gcd(f, m) != 1.
Poly invmod(const Field& K, const Poly& f, const Poly& m);
// Coefficient-wise Frobenius a -> a^p.
Poly frobenius(const Field& K, const Poly& f);
// Lagrange interpolation through (xs[i], ys[i]); xs distinct.
Poly interpolate(const Field& K, std::span<const Elem> xs, std::span<const Elem> ys);
// Res(f, g) = lc(f)^{deg g} * prod g(a) over the roots a of f.
Elem resultant(const Field& K, const Poly& f, const Poly& g);
Poly product_of_linears(const Field& K, std::span<const Elem> roots);
bool in_prime_field(const Field& K, const Poly& f);
std::string to_string(const Field& K, const Poly& f);
// Text form "[c0,c1,...,cd]"; integers reduced mod p. Extension elements are
// nested vectors, e.g. "[[1,2],[0,1]]".
Poly parse(const Field& K, std::string_view text);

}  // namespace poly

// Roots of f lying in K, with multiplicity, sorted. Uses gcd with X^|K| - X
// followed by seeded equal-degree splitting.
std::vector<Elem> poly_roots_in_field(const Field& K, const Poly& f, Rng& rng);

struct Factor {
  Poly f;
  int multiplicity = 1;
};
// Monic irreducible factorization (squarefree, distinct-degree, equal-degree).
std::vector<Factor> poly_factor(const Field& K, const Poly& f, Rng& rng);

struct DegreePattern {
  // (degree, count) sorted by degree; counts include multiplicity.
  std::vector<std::pair<int, int>> entries;
  bool squarefree = true;
  friend bool operator==(const DegreePattern&, const DegreePattern&) = default;
};
DegreePattern poly_factor_degree_pattern(const Field& K, const Poly& f, Rng& rng);

bool is_irreducible(const Field& K, const Poly& f);

struct Congruence {
  BigInt value;
  BigInt modulus;
  friend bool operator==(const Congruence&, const Congruence&) = default;
};
// Merges congruences; non-coprime moduli are accepted when consistent.
Congruence integer_crt(std::span<const Congruence> residues);
// Representative of value mod modulus in (-modulus/2, modulus/2].
BigInt centered(const BigInt& value, const BigInt& modulus);

// Resultant of integer polynomials (little-endian) via a fraction-free
// Sylvester determinant.
BigInt integer_resultant(std::span<const BigInt> f, std::span<const BigInt> g);

// Embedding F_{p^a} -> F_{p^c} sending the generator of the source to a root
// of its modulus in the target.
class Embedding {
 public:
  // Picks the smallest root (in element order) of the source modulus.
  static Embedding find(const Field& source, const Field& target, Rng& rng);
  static Embedding from_image(const Field& source, const Field& target, const Elem& image);
  Elem apply(const Elem& a) const;
  Embedding then(const Embedding& next) const;  // next o this
  const Elem& generator_image() const { return image_; }
  const Field& source() const { return source_; }
  const Field& target() const { return target_; }

 private:
  Embedding(Field s, Field t, Elem image)
      : source_(std::move(s)), target_(std::move(t)), image_(image) {}
  Field source_;
  Field target_;
  Elem image_;
};

}  // namespace g2c
