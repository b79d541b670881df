#pragma once

// Frobenius characteristic polynomials, torsion subgroups over extensions,
// Frobenius matrices on them and the Weil pairing.
//
// chi = X^4 - s1 X^3 + (s2 + 2q) X^2 - q s1 X + q^2.

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "g2count/genus2.hpp"
#include "g2count/modl.hpp"

namespace g2c {

inline constexpr int kDefaultExtGuard = 12;

struct CharPoly {
  std::int64_t q = 0;
  std::int64_t s1 = 0;
  std::int64_t s2 = 0;

  // Little-endian integer coefficients c0..c4.
  std::array<BigInt, 5> coefficients() const;
  BigInt at_one() const;  // chi(1) = #A(F_q)
  // Coefficients reduced mod l, little-endian, length 5.
  modl::Vec mod(std::int64_t l) const;
  std::string to_string() const;  // {q, s1, s2}
  friend bool operator==(const CharPoly&, const CharPoly&) = default;
};

// The four inequalities |s1| <= 4 sqrt q, |s2| <= 4q, s1^2 - 4 s2 >= 0,
// s2 + 4q >= 2|s1|.
bool weil_ruck_holds(const CharPoly& chi);
// Sharper form of the last bound implied by the real roots of X^2 - s1 X + s2
// lying in [-2 sqrt q, 2 sqrt q]: s2 + 4q >= 2 sqrt(q) |s1|.
bool weil_ruck_sharp_holds(const CharPoly& chi);
void require_weil_ruck(const CharPoly& chi);  // throws Internal

// From N1 = #C(F_q) and N2 = #C(F_{q^2}).
CharPoly charpoly_from_counts(std::int64_t q, const BigInt& N1, const BigInt& N2);
CharPoly chi_naive(const Curve& C, std::uint64_t guard = kDefaultCountGuard);

// #A(F_{q^n}) = Res(chi, X^n - 1).
BigInt order_over_extension(const CharPoly& chi, int n);

// Smallest n <= limit with X^n = 1 mod (chi mod l); nullopt beyond limit.
std::optional<int> working_degree(const CharPoly& chi, std::int64_t l, int limit);

// Exhaustive discrete logs in the F_l-span of independent l-torsion points.
class DlTable {
 public:
  DlTable(const Jacobian& J, std::vector<MumfordDivisor> basis, std::int64_t l);
  std::optional<modl::Vec> log(const MumfordDivisor& D) const;
  MumfordDivisor element(const modl::Vec& coords) const;
  const std::vector<MumfordDivisor>& basis() const { return basis_; }
  std::size_t size() const { return table_.size(); }

 private:
  const Jacobian* J_;
  std::vector<MumfordDivisor> basis_;
  std::int64_t l_;
  std::map<MumfordDivisor, modl::Vec> table_;
};

// Basis of A[l](F_{q^k}), i.e. the l-torsion rational over the degree-k
// extension. Requires the group order of J(F_{q^k}).
struct TorsionSpace {
  std::int64_t ell = 0;
  int k = 1;
  Field L;
  Jacobian J;
  std::vector<MumfordDivisor> basis;
  int dim() const { return static_cast<int>(basis.size()); }
};

TorsionSpace rational_torsion(const Curve& odd_curve, std::int64_t ell, int k, const BigInt& group_order,
                              std::uint64_t seed);
// l = 2 without a group order: divisors (u, 0) with u | P.
TorsionSpace rational_two_torsion(const Curve& odd_curve, int k, std::uint64_t seed);

// Full A[l] over F_{q^n} with n = working_degree(chi, l); throws
// GuardExceeded when n exceeds ext_guard.
TorsionSpace torsion_basis(const Curve& odd_curve, const CharPoly& chi, std::int64_t ell, std::uint64_t seed,
                           int ext_guard = kDefaultExtGuard);

// Field used for extension degree k of a prime field (seeded, cached).
Field extension_field(std::uint64_t p, int k);

MumfordDivisor frobenius_on_divisor(const Jacobian& J, const MumfordDivisor& D);

// Matrix of pi on the span of the basis; column j holds the coordinates of
// pi(b_j).
modl::Mat frob_matrix(const TorsionSpace& T, const DlTable& dl);

// Weil pairing value in mu_l inside the field of J. For l = 2 the
// Weierstrass-subset rule is used; otherwise Miller functions on shifted
// divisor representatives.
Elem weil_pairing_value(const Jacobian& J, const MumfordDivisor& D1, const MumfordDivisor& D2, std::int64_t ell,
                        Rng& rng);
Elem weil_pairing_miller(const Jacobian& J, const MumfordDivisor& D1, const MumfordDivisor& D2, std::int64_t ell,
                         Rng& rng);
// Additive form: k with value = zeta^k for the field's fixed primitive l-th
// root zeta (zero when mu_l is not in the field, where the pairing is trivial).
std::int64_t weil_pairing(const Jacobian& J, const MumfordDivisor& D1, const MumfordDivisor& D2, std::int64_t ell,
                          Rng& rng);
modl::Mat gram_matrix(const TorsionSpace& T, Rng& rng);

// All (s1, s2) mod l whose quartic annihilates M.
std::set<std::pair<std::int64_t, std::int64_t>> match_charpoly_on_torsion(const modl::Mat& M, std::int64_t q,
                                                                          std::int64_t ell);

// chi mod 2 from the Frobenius cycle type on the six Weierstrass points:
// prod (X^{d_i} + 1) / (X + 1)^2 over F_2, little-endian.
modl::Vec chi_mod2_from_roots(const Curve& C);

}  // namespace g2c
