#include <algorithm>
#include <chrono>
#include <exception>
#include <thread>

#include "g2count/siegel.hpp"

namespace g2c {

const char* status_name(PrimeStatus s) {
  switch (s) {
    case PrimeStatus::Used: return "used";
    case PrimeStatus::Skipped: return "skipped";
    case PrimeStatus::Unused: return "unused";
  }
  return "?";
}

std::vector<std::int64_t> prime_budget(const PipelineOptions& opts, std::int64_t p) {
  if (!opts.primes.empty()) {
    for (auto l : opts.primes)
      if (l < 2 || !is_prime_u64(static_cast<std::uint64_t>(l))) fail(ErrorKind::Usage, std::to_string(l) + " is not prime");
    return opts.primes;
  }
  std::vector<std::int64_t> out;
  for (std::int64_t l = 2; l <= opts.max_prime; ++l)
    if (l != p && is_prime_u64(static_cast<std::uint64_t>(l))) out.push_back(l);
  return out;
}

void run_in_batches(std::size_t n, unsigned jobs, const std::function<void(std::size_t)>& f,
                    const std::function<bool(std::size_t)>& merge_done) {
  const std::size_t width = std::max(1u, jobs);
  for (std::size_t start = 0; start < n; start += width) {
    const std::size_t end = std::min(n, start + width);
    if (end - start == 1) {
      f(start);
    } else {
      std::vector<std::exception_ptr> errors(end - start);
      std::vector<std::thread> pool;
      for (std::size_t i = start; i < end; ++i)
        pool.emplace_back([&, i] {
          try {
            f(i);
          } catch (...) {
            errors[i - start] = std::current_exception();
          }
        });
      for (auto& t : pool) t.join();
      for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    }
    for (std::size_t i = start; i < end; ++i)
      if (merge_done(i)) return;
  }
}

namespace {

bool is_skip(const Error& e) { return error_exit_code(e.kind()) == 3; }

void lift_if_ready(SiegelReport& r) {
  if (r.s1.modulus <= r.target) return;
  const BigInt s1 = centered(r.s1.value, r.s1.modulus);
  const BigInt s2 = centered(r.s2.value, r.s2.modulus);
  CharPoly chi{r.q, static_cast<std::int64_t>(s1), static_cast<std::int64_t>(s2)};
  if (!weil_ruck_holds(chi))
    fail(ErrorKind::Inconsistent, "lifted " + chi.to_string() + " violates the Weil-Ruck bounds");
  r.result = chi;
}

}  // namespace

SiegelReport pipeline_count_siegel(const Curve& C, const KernelProvider& provider, const PipelineOptions& opts) {
  const Curve odd = C.degree() == 5 ? C : odd_model(C);
  const std::int64_t q = static_cast<std::int64_t>(C.p());
  SiegelReport r;
  r.q = q;
  r.target = BigInt(8) * q;
  const auto budget = prime_budget(opts, q);
  std::vector<PrimeOutcome> work(budget.size());
  for (std::size_t i = 0; i < budget.size(); ++i) work[i].ell = budget[i];

  auto compute = [&](std::size_t i) {
    PrimeOutcome& o = work[i];
    const std::int64_t ell = o.ell;
    const auto t0 = std::chrono::steady_clock::now();
    o.status = PrimeStatus::Skipped;
    if (ell == q) {
      o.reason = "characteristic";
    } else {
      try {
        auto kernels = provider.siegel_kernels(odd, ell, 1);
        o.kernels = kernels.size();
        if (kernels.empty()) {
          o.reason = "no rational Lagrangian kernel";
        } else {
          const auto& K = kernels.front();
          o.kernel_charpoly = charpoly_on_kernel(K.S, K.basis, ell);
          o.chi_mod = chi_from_kernel_charpoly(*o.kernel_charpoly, q, ell);
          o.verdict = classify_prime(*o.chi_mod, q, ell).verdict;
          o.ext_degree = K.k;
          o.status = PrimeStatus::Used;
        }
      } catch (const Error& e) {
        if (!is_skip(e)) throw;
        o.reason = std::string(error_kind_name(e.kind())) + ": " + e.what();
      }
    }
    o.micros = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - t0).count();
  };

  std::size_t merged = 0;
  auto merge = [&](std::size_t i) {
    merged = i + 1;
    const PrimeOutcome& o = work[i];
    if (o.status == PrimeStatus::Used) {
      auto [s1, s2] = s_from_chi_mod(*o.chi_mod, q, o.ell);
      const std::array<Congruence, 2> a{r.s1, Congruence{s1, o.ell}};
      const std::array<Congruence, 2> b{r.s2, Congruence{s2, o.ell}};
      r.s1 = integer_crt(a);
      r.s2 = integer_crt(b);
      lift_if_ready(r);
    }
    return r.result.has_value();
  };
  run_in_batches(budget.size(), opts.jobs, compute, merge);
  for (std::size_t i = merged; i < work.size(); ++i) {
    PrimeOutcome fresh;
    fresh.ell = work[i].ell;
    work[i] = fresh;
  }
  r.primes = std::move(work);
  return r;
}

}  // namespace g2c
