#include "g2count/kernel.hpp"

namespace g2c {

namespace {

// Multiples k g for k = 0..l-1 of some non-identity g in a cyclic S.
std::vector<MumfordDivisor> multiples(const SubgroupPoints& S, std::int64_t ell) {
  if (S.order() != static_cast<std::size_t>(ell)) fail(ErrorKind::Usage, "expected a subgroup of order l");
  MumfordDivisor g;
  for (const auto& D : S.elements)
    if (!S.J.is_identity(D)) {
      g = D;
      break;
    }
  std::vector<MumfordDivisor> out{S.J.identity()};
  for (std::int64_t k = 1; k < ell; ++k) out.push_back(S.J.add(out.back(), g));
  return out;
}

}  // namespace

std::int64_t eigenvalue_from_points(const SubgroupPoints& S, std::int64_t ell) {
  auto mult = multiples(S, ell);
  const MumfordDivisor image = S.J.frobenius(mult[1]);
  for (std::int64_t k = 1; k < ell; ++k)
    if (mult[k] == image) return k;
  fail(ErrorKind::Internal, "Frobenius does not act by a scalar on the subgroup");
}

std::int64_t eigenvalue_symbolic(const KernelIdeal& I, const SubgroupPoints& S, std::int64_t ell) {
  const Field& L = S.J.field();
  auto mult = multiples(S, ell);
  const auto F = frobenius_mod_ideal(I, BigInt(I.base.characteristic()));
  const std::int64_t half = (ell - 1) / 2;
  std::vector<Elem> xs;
  for (std::int64_t k = 1; k <= half; ++k) xs.push_back(mult[k].u.coeff(1));
  for (std::int64_t lambda = 1; lambda < ell; ++lambda) {
    // [lambda]: U1 -> m(U1), V1 -> V1 n(U1) on the zero set.
    std::vector<Elem> mu, nu;
    for (std::int64_t k = 1; k <= half; ++k) {
      const MumfordDivisor& img = mult[(lambda * k) % ell];
      mu.push_back(img.u.coeff(1));
      nu.push_back(L.div(img.v.coeff(1), mult[k].v.coeff(1)));
    }
    if (poly::interpolate(L, xs, mu) == F.u1 && poly::interpolate(L, xs, nu) == F.v1) return lambda;
  }
  fail(ErrorKind::Internal, "Frobenius images match no multiplication map on the kernel");
}

std::int64_t eigenvalue_on_kernel(const SubgroupPoints& S, std::int64_t ell) {
  try {
    return eigenvalue_symbolic(ideal_from_subgroup(S), S, ell);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NonGeneric) throw;
  }
  return eigenvalue_from_points(S, ell);
}

modl::Vec charpoly_on_kernel(const SubgroupPoints& S, const std::vector<MumfordDivisor>& basis, std::int64_t ell) {
  std::optional<KernelIdeal> I;
  try {
    I = ideal_from_subgroup(S);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NonGeneric) throw;
  }
  std::optional<FrobeniusImages> F;
  if (I) F = frobenius_mod_ideal(*I, BigInt(I->base.characteristic()));
  DlTable dl(S.J, basis, ell);
  if (dl.size() != S.order()) fail(ErrorKind::Usage, "basis does not span the subgroup");
  const int r = static_cast<int>(basis.size());
  modl::Mat M = modl::zero(r, r);
  for (int j = 0; j < r; ++j) {
    const MumfordDivisor img = F ? apply_images(*F, S.J, basis[j]) : S.J.frobenius(basis[j]);
    auto c = dl.log(img);
    if (!c) fail(ErrorKind::Internal, "subgroup is not Frobenius-stable");
    for (int i = 0; i < r; ++i) M[i][j] = (*c)[i];
  }
  return modl::charpoly(M, ell);
}

}  // namespace g2c
