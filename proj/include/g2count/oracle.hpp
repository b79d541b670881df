#pragma once

// Brute-force kernel provider. It obtains chi by exhaustive counting, walks
// the rational l-torsion A[l](F_{q^k}) for k up to a guard, and returns the
// Frobenius-stable subspaces realized as explicit point sets.

#include <map>
#include <mutex>

#include "g2count/provider.hpp"

namespace g2c {

class OracleKernelProvider : public KernelProvider {
 public:
  explicit OracleKernelProvider(int ext_guard = kDefaultExtGuard, std::uint64_t seed = 1)
      : guard_(ext_guard), seed_(seed) {}

  std::string name() const override { return "oracle"; }
  // Each subspace is reported once, over the smallest extension of
  // definition. Empty when the full A[l] is within the guard and no kernel
  // exists; GuardExceeded when nothing was found but the search was partial.
  std::vector<StableKernel> siegel_kernels(const Curve& odd_curve, std::int64_t ell,
                                           std::size_t max_count) const override;
  std::vector<StableKernel> hilbert_kernels(const Curve& odd_curve, std::int64_t ell,
                                            std::size_t max_count) const override;

  CharPoly chi(const Curve& odd_curve) const;

 private:
  std::vector<StableKernel> search(const Curve& odd_curve, std::int64_t ell, int dim, std::size_t max_count) const;

  int guard_;
  std::uint64_t seed_;
  mutable std::mutex mu_;
  mutable std::map<std::string, CharPoly> chis_;
};

}  // namespace g2c
