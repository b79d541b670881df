#include "g2count/oracle.hpp"
#include "g2count/siegel.hpp"

namespace g2c {

namespace {

int valuation(BigInt n, std::int64_t l) {
  int v = 0;
  while (n != 0 && n % l == 0) {
    n /= l;
    ++v;
  }
  return v;
}

std::int64_t form(const modl::Mat& G, const modl::Vec& x, const modl::Vec& y, std::int64_t l) {
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) acc = (acc + x[i] * G[i][j] % l * y[j]) % l;
  return acc;
}

constexpr std::int64_t kMaxTableSize = std::int64_t{1} << 20;

}  // namespace

CharPoly OracleKernelProvider::chi(const Curve& odd_curve) const {
  const std::string key = curve_to_string(odd_curve);
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (auto it = chis_.find(key); it != chis_.end()) return it->second;
  }
  CharPoly c = chi_naive(odd_curve);
  std::lock_guard<std::mutex> lock(mu_);
  chis_.emplace(key, c);
  return c;
}

std::vector<StableKernel> OracleKernelProvider::search(const Curve& odd_curve, std::int64_t ell, int dim,
                                                       std::size_t max_count) const {
  if (static_cast<std::uint64_t>(ell) == odd_curve.p()) fail(ErrorKind::Usage, "l equals the characteristic");
  const CharPoly c = chi(odd_curve);
  const auto full = working_degree(c, ell, guard_);
  std::vector<StableKernel> out;
  for (int k = 1; k <= guard_; ++k) {
    const BigInt order = order_over_extension(c, k);
    if (valuation(order, ell) < dim) continue;
    const std::uint64_t seed = seed_ ^ (static_cast<std::uint64_t>(ell) * 1000003u + static_cast<std::uint64_t>(k));
    TorsionSpace T = ell == 2 ? rational_two_torsion(odd_curve, k, seed) : rational_torsion(odd_curve, ell, k, order, seed);
    const int r = T.dim();
    if (r >= dim) {
      std::int64_t size = 1;
      for (int i = 0; i < r; ++i) size *= ell;
      if (size > kMaxTableSize) fail(ErrorKind::GuardExceeded, "l-torsion table too large for the oracle");
      DlTable dl(T.J, T.basis, ell);
      const modl::Mat M = frob_matrix(T, dl);
      Rng rng(seed);
      const modl::Mat G = dim == 2 ? gram_matrix(T, rng) : modl::Mat{};
      for (const auto& B : enumerate_subspaces(r, dim, ell)) {
        if (dim == 2 && form(G, B[0], B[1], ell) != 0) continue;
        if (!subspace_is_stable(M, B, ell)) continue;
        // Report each subspace over its field of definition only.
        const auto kk = modl::multiplicative_order(restrict_to_subspace(M, B, ell), ell, static_cast<std::uint64_t>(guard_));
        if (!kk || static_cast<int>(*kk) != k) continue;
        std::vector<MumfordDivisor> basis;
        for (const auto& row : B) basis.push_back(dl.element(row));
        out.push_back({span_subgroup(T.J, basis, ell), basis, k});
        if (max_count && out.size() >= max_count) return out;
      }
    }
    if (full && k == *full) break;
  }
  if (out.empty() && !full)
    fail(ErrorKind::GuardExceeded, "A[" + std::to_string(ell) + "] is not rational below extension degree " +
                                       std::to_string(guard_));
  return out;
}

std::vector<StableKernel> OracleKernelProvider::siegel_kernels(const Curve& odd_curve, std::int64_t ell,
                                                               std::size_t max_count) const {
  return search(odd_curve, ell, 2, max_count);
}

std::vector<StableKernel> OracleKernelProvider::hilbert_kernels(const Curve& odd_curve, std::int64_t ell,
                                                                std::size_t max_count) const {
  return search(odd_curve, ell, 1, max_count);
}

}  // namespace g2c
