#pragma once

// Kernel ideals of finite subgroups S of a genus-2 Jacobian. In the generic
// case every non-identity point of S has Mumford coordinates
//   u = x^2 + u1 x + u0,  v = v1 x + v0,
// and S \ {0} is cut out by
//   R1(U1) = 0,  U0 = R0(U1),  V1^2 = S1(U1),  V0 = V1 S0(U1)
// with R1, R0, S1, S0 over the base field.

#include <optional>
#include <string>
#include <vector>

#include "g2count/frobenius.hpp"

namespace g2c {

// All elements of a finite subgroup of J(L), identity included.
struct SubgroupPoints {
  Jacobian J;
  std::vector<MumfordDivisor> elements;  // sorted, unique
  std::size_t order() const { return elements.size(); }
  bool contains(const MumfordDivisor& D) const;
};

// Span of elements of order dividing l.
SubgroupPoints span_subgroup(const Jacobian& J, const std::vector<MumfordDivisor>& gens, std::int64_t ell);
// Closed under the coordinate-wise q-power map.
bool is_frobenius_stable(const SubgroupPoints& S);

struct KernelIdeal {
  Field base;  // F_q
  Poly R1, R0, S1, S0;
  std::uint64_t order = 0;  // #S
};

// Throws NonGeneric (even order, a point of weight < 2, two +-pairs with the
// same u1, or v1 = 0) and NotRational (coefficients outside the base field).
KernelIdeal ideal_from_subgroup(const SubgroupPoints& S);

// Whether D (over the field of J) satisfies the four equations.
bool ideal_vanishes_at(const KernelIdeal& I, const Jacobian& J, const MumfordDivisor& D);

// Images of U1, U0, V1, V0 under the Q-power map in the quotient algebra:
// U1 -> u1(U1), U0 -> u0(U1), V1 -> V1 v1(U1), V0 -> V1 v0(U1), all reduced
// modulo R1. Q must be odd.
struct FrobeniusImages {
  Poly u1, u0, v1, v0;
  friend bool operator==(const FrobeniusImages&, const FrobeniusImages&) = default;
};
FrobeniusImages frobenius_mod_ideal(const KernelIdeal& I, const BigInt& Q);
// b after a.
FrobeniusImages compose_images(const KernelIdeal& I, const FrobeniusImages& a, const FrobeniusImages& b);
// Evaluates the images at a point of the ideal's zero set.
MumfordDivisor apply_images(const FrobeniusImages& F, const Jacobian& J, const MumfordDivisor& D);

// lambda with pi(D) = [lambda] D on a cyclic Frobenius-stable S of order l.
std::int64_t eigenvalue_from_points(const SubgroupPoints& S, std::int64_t ell);
// Same, comparing U1^q and V1^{q-1} in the quotient algebra against the
// interpolated multiplication-by-lambda maps.
std::int64_t eigenvalue_symbolic(const KernelIdeal& I, const SubgroupPoints& S, std::int64_t ell);
// Symbolic when the ideal exists, otherwise pointwise.
std::int64_t eigenvalue_on_kernel(const SubgroupPoints& S, std::int64_t ell);

// Monic characteristic polynomial (little-endian mod l) of pi on S viewed as
// an F_l-vector space with the given basis. The images of the basis come
// from the kernel ideal when it exists, otherwise from direct Frobenius.
modl::Vec charpoly_on_kernel(const SubgroupPoints& S, const std::vector<MumfordDivisor>& basis, std::int64_t ell);

// "order=<n>;R1=[..];R0=[..];S1=[..];S0=[..]" over the base field.
std::string ideal_to_string(const KernelIdeal& I);

}  // namespace g2c
