#pragma once

// Elkies-prime logic for general abelian surfaces: q-reciprocal
// polynomials, prime classification, Lagrangian subspaces of (Z/l)^4 and
// the CRT pipeline for chi.

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "g2count/provider.hpp"

namespace g2c {

// Polynomials mod l are little-endian modl::Vec.
namespace modlpoly {
modl::Vec mul(const modl::Vec& a, const modl::Vec& b, std::int64_t l);
modl::Vec normalize(modl::Vec a);
std::string to_string(const modl::Vec& a);
}  // namespace modlpoly

// Monic a0^{-1} X^d P(q/X). Throws Validation if a0 or q is not invertible.
modl::Vec rec_q(const modl::Vec& P, std::int64_t q, std::int64_t ell);
// P * Rec_q(P) for a monic quadratic P.
modl::Vec chi_from_kernel_charpoly(const modl::Vec& P, std::int64_t q, std::int64_t ell);
// (s1, s2) mod l from a quartic of the shape X^4 - s1 X^3 + (s2 + 2q) X^2 - ...
std::pair<std::int64_t, std::int64_t> s_from_chi_mod(const modl::Vec& chi, std::int64_t q, std::int64_t ell);

enum class Verdict { ElkiesCoprimeSplit, ElkiesTotallySplit, NotGuaranteed, AtkinLike };
const char* verdict_name(Verdict v);
inline bool is_elkies(Verdict v) { return v == Verdict::ElkiesCoprimeSplit || v == Verdict::ElkiesTotallySplit; }

struct PrimeClassification {
  std::int64_t ell = 0;
  Verdict verdict = Verdict::AtkinLike;
  std::vector<std::pair<modl::Vec, int>> factors;  // monic irreducible factors of chi mod l
  std::optional<modl::Vec> witness;                // P with chi = P Rec_q(P), gcd 1
};
PrimeClassification classify_prime(const modl::Vec& chi, std::int64_t q, std::int64_t ell);

// k-dimensional subspaces of F_l^n as reduced row echelon bases (k x n).
std::vector<modl::Mat> enumerate_subspaces(int n, int k, std::int64_t ell);
// Isotropic planes for the alternating form G (n = 4: Lagrangians).
std::vector<modl::Mat> enumerate_lagrangians(const modl::Mat& G, std::int64_t ell);
// Planes fixed by M, acting on column vectors.
bool subspace_is_stable(const modl::Mat& M, const modl::Mat& basis_rows, std::int64_t ell);
std::vector<modl::Mat> enumerate_stable_lagrangians(const modl::Mat& M, const modl::Mat& G, std::int64_t ell);
// Matrix of M on a stable subspace, in the coordinates of its rref basis.
modl::Mat restrict_to_subspace(const modl::Mat& M, const modl::Mat& basis_rows, std::int64_t ell);
inline std::int64_t lagrangian_count(std::int64_t ell) { return (ell * ell + 1) * (ell + 1); }

enum class DegenerateFlag { SingularLocus, ProductOfEllipticCurves, CMQuintic };
const char* degenerate_name(DegenerateFlag f);
struct DegenerateReport {
  std::set<DegenerateFlag> flags;
  // Conditions without a decision procedure here.
  std::vector<std::string> unknown{"ExtraAutomorphisms", "NonNormalPoint"};
};
// Equality in weighted projective space with weights 2, 4, 6, 10.
bool same_weighted_point(const Field& K, const IgusaInvariants& a, const IgusaInvariants& b);
DegenerateReport detect_degenerate(const Field& K, const IgusaInvariants& inv);
DegenerateReport detect_degenerate(const Curve& C);

struct ProportionReport {
  std::int64_t X = 0;
  std::int64_t min_X = 0;  // ceil(ln(q) / eps)
  std::size_t primes = 0;
  std::size_t elkies = 0;
  Rational proportion;
  Rational reference{3, 8};
  std::vector<PrimeClassification> rows;
};
// Classifies every l <= X present in chis. Throws EmptyRange without primes
// and Validation when X < ln(q) / eps.
ProportionReport elkies_proportion(const std::map<std::int64_t, modl::Vec>& chis, std::int64_t q, std::int64_t X,
                                   const Rational& eps);

enum class PrimeStatus { Used, Skipped, Unused };
const char* status_name(PrimeStatus s);

struct PrimeOutcome {
  std::int64_t ell = 0;
  PrimeStatus status = PrimeStatus::Unused;
  std::string reason;  // skip reason or error class
  std::optional<modl::Vec> chi_mod;
  std::optional<modl::Vec> kernel_charpoly;  // P, Siegel; X - lambda, Hilbert
  std::optional<Verdict> verdict;
  int ext_degree = 0;
  std::size_t kernels = 0;
  std::int64_t micros = 0;
};

struct PipelineOptions {
  std::vector<std::int64_t> primes;  // empty: all primes in increasing order
  std::int64_t max_prime = 97;
  unsigned jobs = 1;
};

struct SiegelReport {
  std::int64_t q = 0;
  std::vector<PrimeOutcome> primes;
  Congruence s1{0, 1}, s2{0, 1};
  std::optional<CharPoly> result;
  BigInt target;  // 8q
};

// Primes used, in order, for a budget: opts.primes, or every prime up to
// max_prime other than the characteristic.
std::vector<std::int64_t> prime_budget(const PipelineOptions& opts, std::int64_t p);

SiegelReport pipeline_count_siegel(const Curve& C, const KernelProvider& provider, const PipelineOptions& opts);

// Runs f(i) for i in [0, n) on up to jobs threads, in batches of jobs, and
// stops after the first batch for which done() holds after merging.
void run_in_batches(std::size_t n, unsigned jobs, const std::function<void(std::size_t)>& f,
                    const std::function<bool(std::size_t)>& merge_done);

}  // namespace g2c
