#include <algorithm>
#include <chrono>
#include <set>

#include "g2count/hilbert.hpp"

namespace g2c {

namespace {

bool is_skip(const Error& e) { return error_exit_code(e.kind()) == 3; }

// Observed residues must be among psi mod beta and psi mod conj beta.
bool consistent(const HilbertPrime& hp, const RQElem& psi) {
  const auto& [beta, other] = *hp.betas;
  const std::int64_t ell = hp.base.ell;
  const std::int64_t r1 = reduce_mod(psi, beta, ell), r2 = reduce_mod(psi, other, ell);
  return std::all_of(hp.residues.begin(), hp.residues.end(), [&](std::int64_t r) { return r == r1 || r == r2; });
}

}  // namespace

HilbertReport pipeline_count_hilbert(const Curve& C, const RealQuadField& F, const KernelProvider& provider,
                                     const PipelineOptions& opts) {
  const Curve odd = C.degree() == 5 ? C : odd_model(C);
  const std::int64_t q = static_cast<std::int64_t>(C.p());
  HilbertReport r;
  r.q = q;
  r.disc = F.disc();
  const auto budget = prime_budget(opts, q);
  std::vector<HilbertPrime> work(budget.size());
  for (std::size_t i = 0; i < budget.size(); ++i) work[i].base.ell = budget[i];

  auto compute = [&](std::size_t i) {
    HilbertPrime& hp = work[i];
    PrimeOutcome& o = hp.base;
    const std::int64_t ell = o.ell;
    const auto t0 = std::chrono::steady_clock::now();
    o.status = PrimeStatus::Skipped;
    try {
      if (ell == q) {
        o.reason = "characteristic";
      } else if (F.disc() % ell == 0) {
        o.reason = "ramified";
      } else if (!(hp.betas = split_prime(F, ell))) {
        o.reason = "inert";
      } else {
        const auto kernels = provider.hilbert_kernels(odd, ell, 0);
        o.kernels = kernels.size();
        std::set<std::int64_t> seen;
        for (const auto& K : kernels) {
          const std::int64_t lambda = eigenvalue_on_kernel(K.S, ell);
          seen.insert(residue_from_eigenvalue(lambda, q, hp.betas->first, ell).r);
          o.ext_degree = o.ext_degree ? std::min(o.ext_degree, K.k) : K.k;
          if (!o.kernel_charpoly) o.kernel_charpoly = modl::Vec{modl::reduce(-lambda, ell), 1};
          if (seen.size() == 2) break;  // both roots of xi mod l
        }
        hp.residues.assign(seen.begin(), seen.end());
        if (hp.residues.empty())
          o.reason = "no rational stable line";
        else
          o.status = PrimeStatus::Used;
      }
    } catch (const Error& e) {
      if (!is_skip(e)) throw;
      o.reason = std::string(error_kind_name(e.kind())) + ": " + e.what();
    }
    o.micros = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - t0).count();
  };

  std::vector<RQElem> cands = weil_box(F, q);
  bool symmetry_fixed = false;
  std::size_t merged = 0;
  auto merge = [&](std::size_t i) {
    merged = i + 1;
    const HilbertPrime& hp = work[i];
    if (hp.betas && (hp.base.status == PrimeStatus::Used || hp.base.reason == "no rational stable line")) {
      r.split_betas += 2;
      r.elkies_betas += hp.residues.size();
    }
    if (hp.base.status != PrimeStatus::Used) return false;
    r.norm_B *= hp.base.ell;
    std::erase_if(cands, [&](const RQElem& x) { return !consistent(hp, x); });
    if (!symmetry_fixed) {
      // psi and its conjugate give the same xi; keep the one reducing to the
      // first residue modulo beta.
      const std::int64_t r0 = hp.residues.front();
      std::erase_if(cands, [&](const RQElem& x) { return reduce_mod(x, hp.betas->first, hp.base.ell) != r0; });
      symmetry_fixed = true;
    }
    if (cands.empty()) fail(ErrorKind::Inconsistent, "no element of the Weil box matches the observed residues");
    return cands.size() == 1 && r.norm_B > BigInt(16) * q;
  };
  run_in_batches(budget.size(), opts.jobs, compute, merge);
  for (std::size_t i = merged; i < work.size(); ++i) {
    HilbertPrime fresh;
    fresh.base.ell = work[i].base.ell;
    work[i] = fresh;
  }
  r.candidates = cands;

  if (cands.size() == 1 && r.norm_B > BigInt(16) * q) {
    const RQElem psi = cands.front();
    // Cross-check through the CRT reconstruction with the assignment psi induces.
    std::vector<RMResidue> residues;
    for (const auto& hp : work) {
      if (hp.base.status != PrimeStatus::Used) continue;
      const std::int64_t ell = hp.base.ell;
      const std::int64_t rv = hp.residues.front();
      const RQElem& beta = reduce_mod(psi, hp.betas->first, ell) == rv ? hp.betas->first : hp.betas->second;
      residues.push_back(residue_value(rv, beta, ell));
    }
    if (reconstruct_psi(F, residues, q) != psi) fail(ErrorKind::Internal, "CRT reconstruction disagrees with the filter");
    r.psi = psi;
    r.result = chi_from_xi(xi_of(F, psi), q);
  }
  if (r.split_betas) r.elkies_fraction = Rational(static_cast<long long>(r.elkies_betas), static_cast<long long>(r.split_betas));
  r.primes = std::move(work);
  return r;
}

}  // namespace g2c
