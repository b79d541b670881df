#pragma once

// Sources of Frobenius-stable kernels for the counting pipelines.

#include <memory>
#include <string>
#include <vector>

#include "g2count/kernel.hpp"

namespace g2c {

// A Frobenius-stable subgroup of A[l] with an F_l-basis, realized over the
// degree-k extension.
struct StableKernel {
  SubgroupPoints S;
  std::vector<MumfordDivisor> basis;
  int k = 1;
};

class KernelProvider {
 public:
  virtual ~KernelProvider() = default;
  virtual std::string name() const = 0;
  // Rational Lagrangian subgroups of A[l]; at most max_count when nonzero.
  // Throws skip-class errors (GuardExceeded, NonGeneric, ...) to skip l.
  virtual std::vector<StableKernel> siegel_kernels(const Curve& odd_curve, std::int64_t ell,
                                                   std::size_t max_count) const = 0;
  // Frobenius-stable subgroups of order l.
  virtual std::vector<StableKernel> hilbert_kernels(const Curve& odd_curve, std::int64_t ell,
                                                    std::size_t max_count) const = 0;
};

}  // namespace g2c
