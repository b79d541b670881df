#pragma once

// Genus-2 curves y^2 = P(x) over prime fields and their Jacobians in
// Mumford coordinates.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "g2count/ff.hpp"

namespace g2c {

inline constexpr std::uint64_t kDefaultCountGuard = std::uint64_t{1} << 26;

struct Curve {
  Field field;  // prime field F_p, p >= 5
  Poly P;       // degree 5 or 6, squarefree

  std::uint64_t p() const { return field.characteristic(); }
  int degree() const { return P.degree(); }
};

// Validates p prime >= 5, deg P in {5, 6} and disc(P) != 0.
Curve make_curve(std::uint64_t p, std::span<const std::int64_t> coeffs);
Curve make_curve(const Field& F, Poly P);
// "p=<prime>;P=[c0,...]" (separators ';', ',' or whitespace between fields).
Curve parse_curve(std::string_view text);
std::string curve_to_string(const Curve& C);

// y^2 = d P(x) for a non-square d (the smallest non-residue).
Curve quadratic_twist(const Curve& C);

// An isomorphic degree-5 model. Degree-6 inputs need a rational root r of P;
// the substitution x = r + 1/t, y = w/t^3 is applied for the smallest such r.
// Throws Validation when no rational Weierstrass point exists.
Curve odd_model(const Curve& C);

// #C(L) over the degree-n extension L of the curve's field, counting points
// at infinity. Throws GuardExceeded when |L| > guard.
BigInt curve_point_count(const Curve& C, const Field& L, std::uint64_t guard = kDefaultCountGuard);
BigInt curve_point_count(const Curve& C, std::uint64_t guard = kDefaultCountGuard);

struct MumfordDivisor {
  Poly u;  // monic, degree <= 2
  Poly v;  // degree < deg u
  friend bool operator==(const MumfordDivisor&, const MumfordDivisor&) = default;
  friend auto operator<=>(const MumfordDivisor& a, const MumfordDivisor& b) {
    if (auto c = a.u.c <=> b.u.c; c != 0) return c;
    return a.v.c <=> b.v.c;
  }
  int weight() const { return u.degree(); }
};

// A rational function a(x) + b(x) y on the curve raised to +1 or -1.
struct FunctionFactor {
  Poly a;
  Poly b;
  int exponent = 1;
};

// Jacobian of a degree-5 model viewed over an extension L of the curve's
// prime field. Coefficients of P serve in L unchanged.
class Jacobian {
 public:
  Jacobian(const Curve& odd_curve, Field L);

  const Field& field() const { return L_; }
  const Poly& f() const { return f_; }
  const Curve& curve() const { return curve_; }

  MumfordDivisor identity() const;
  bool is_identity(const MumfordDivisor& D) const { return D.u.degree() == 0; }
  bool is_valid(const MumfordDivisor& D) const;
  MumfordDivisor make(Poly u, Poly v) const;  // validates u | v^2 - f

  MumfordDivisor add(const MumfordDivisor& a, const MumfordDivisor& b) const;
  // As add, also appending factors h with a + b = result + div(h).
  MumfordDivisor add_traced(const MumfordDivisor& a, const MumfordDivisor& b,
                            std::vector<FunctionFactor>& trace) const;
  MumfordDivisor negate(const MumfordDivisor& D) const;
  MumfordDivisor dbl(const MumfordDivisor& D) const { return add(D, D); }
  MumfordDivisor scalar_mul(const MumfordDivisor& D, const BigInt& m) const;
  // Coefficient-wise p-power map; this is the q-Frobenius since q = p.
  MumfordDivisor frobenius(const MumfordDivisor& D) const;

  // Uniform over weight-2 divisors with squarefree u (split or irreducible).
  MumfordDivisor random_divisor(Rng& rng) const;
  // Uniform over weight-2 divisors whose u splits into distinct rational
  // roots, i.e. sums of two affine points with distinct x.
  MumfordDivisor random_split_divisor(Rng& rng) const;

  // prod over the points Q of the effective part of E of (a + b y)(Q).
  Elem evaluate(const FunctionFactor& h, const MumfordDivisor& E) const;

  std::string to_string(const MumfordDivisor& D) const;

 private:
  MumfordDivisor reduce(Poly u, Poly v, std::vector<FunctionFactor>* trace) const;

  Curve curve_;
  Field L_;
  Poly f_;
};

// Square root of a in L[x]/(u) for irreducible u; nullopt if a is a non-square.
std::optional<Poly> sqrt_mod_irreducible(const Field& L, const Poly& a, const Poly& u, Rng& rng);

// Weighted invariants under one fixed convention (tag kIgusaNormTag):
//   I2, I4, I6, I10 are the Igusa-Clebsch invariants of the sextic,
//   I4' = I4, I6' = (I2 I4 - 3 I6) / 2, I10' = I10, I12' = I2 I10,
//   j1 = I4' I6' / I10', j2 = I4'^2 I12' / I10'^2, j3 = I4'^5 / I10'^2.
inline constexpr const char* kIgusaNormTag = "igusa-clebsch-v1";

template <class T>
struct IgusaInvariantsT {
  T I2, I4, I6, I10;       // Igusa-Clebsch
  T I6p, I12;              // derived weighted invariants
  std::optional<T> j1, j2, j3;
  bool singular_locus = false;  // I4' = 0 or I10' = 0
};

using IgusaInvariants = IgusaInvariantsT<Elem>;
using RationalIgusaInvariants = IgusaInvariantsT<Rational>;

// Degree-5 P is treated as a sextic with a0..a5 and a6 = 0.
IgusaInvariants igusa_invariants(const Field& K, const Poly& P);
IgusaInvariants igusa_invariants(const Curve& C);
RationalIgusaInvariants igusa_invariants(std::span<const Rational> coeffs);

}  // namespace g2c
