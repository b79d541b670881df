#pragma once

// Real multiplication: arithmetic in the maximal order Z[w] of a real
// quadratic field, split primes with totally positive generators, residues
// of the real Frobenius psi = pi + q/pi, and CRT reconstruction of psi.
//
// w = (1 + sqrt D)/2 when D = 1 mod 4, w = sqrt(D/4) otherwise.

#include <optional>
#include <string>
#include <vector>

#include "g2count/siegel.hpp"

namespace g2c {

struct RQElem {
  std::int64_t a = 0, b = 0;  // a + b w
  friend bool operator==(const RQElem&, const RQElem&) = default;
  friend auto operator<=>(const RQElem&, const RQElem&) = default;
};

class RealQuadField {
 public:
  // Supported discriminants: 5, 8, 13, 17 (narrow class number one).
  static RealQuadField make(std::int64_t disc);

  std::int64_t disc() const { return disc_; }
  std::int64_t trace_w() const { return t_; }  // w^2 = t w + n
  std::int64_t norm_w() const { return -n_; }  // N(w)
  const RQElem& unit() const { return unit_; }  // fundamental, norm -1
  RQElem totally_positive_unit() const { return mul(unit_, unit_); }

  RQElem add(const RQElem& x, const RQElem& y) const;
  RQElem sub(const RQElem& x, const RQElem& y) const;
  RQElem mul(const RQElem& x, const RQElem& y) const;
  RQElem neg(const RQElem& x) const { return {-x.a, -x.b}; }
  RQElem conj(const RQElem& x) const;
  std::int64_t trace(const RQElem& x) const;
  std::int64_t norm(const RQElem& x) const;
  // Disc(Z[x]) = (x - conj x)^2 = b^2 D.
  std::int64_t disc_of(const RQElem& x) const;
  bool totally_positive(const RQElem& x) const { return trace(x) > 0 && norm(x) > 0; }
  // x / y when y is a unit.
  RQElem div_unit(const RQElem& x, const RQElem& unit) const;

  std::string to_string(const RQElem& x) const;  // "a+b*w"
  std::string header() const;                     // "D=5;w=(1+sqrt(5))/2"

 private:
  RealQuadField(std::int64_t d, std::int64_t t, std::int64_t n, RQElem u) : disc_(d), t_(t), n_(n), unit_(u) {}
  std::int64_t disc_, t_, n_;
  RQElem unit_;
};

// The image of w in Z_F / beta = Z/l: the t with a + b t = 0 mod l.
std::int64_t omega_residue(const RQElem& beta, std::int64_t ell);
// x mod beta in Z/l.
std::int64_t reduce_mod(const RQElem& x, const RQElem& beta, std::int64_t ell);

// (beta, conj beta), both totally positive of norm l and trace-minimal,
// beta with b > 0; nullopt when l is inert. Throws Ramified when l | D.
std::optional<std::pair<RQElem, RQElem>> split_prime(const RealQuadField& F, std::int64_t ell);
// Minimizes the trace over beta u^{2k}.
RQElem small_trace_generator(const RealQuadField& F, const RQElem& beta);

struct RMResidue {
  RQElem beta;
  std::int64_t ell = 0;
  std::int64_t lambda = 0;
  std::int64_t r = 0;  // lambda + q / lambda mod l
};
RMResidue residue_from_eigenvalue(std::int64_t lambda, std::int64_t q, const RQElem& beta, std::int64_t ell);
// A residue given directly as psi mod beta.
RMResidue residue_value(std::int64_t r, const RQElem& beta, std::int64_t ell);

// psi mod B as x + y w = c mod B, i.e. x + y T = c mod N with N = N(B).
struct RMClass {
  BigInt N = 1;
  BigInt T = 0;  // image of w
  BigInt c = 0;
  bool contains(const RQElem& x) const;
};
// Throws Validation on repeated norms.
RMClass rm_crt(const std::vector<RMResidue>& residues);

// Elements with |Tr| <= 4 sqrt q and Disc <= 16q.
bool in_weil_box(const RealQuadField& F, const RQElem& x, std::int64_t q);
std::vector<RQElem> weil_box(const RealQuadField& F, std::int64_t q);
// Throws BoundNotMet when N(B) <= 16q, Inconsistent without a candidate.
RQElem reconstruct_psi(const RealQuadField& F, const std::vector<RMResidue>& residues, std::int64_t q);

struct XiPoly {
  std::int64_t s1 = 0, s2 = 0;  // X^2 - s1 X + s2
};
XiPoly xi_of(const RealQuadField& F, const RQElem& psi);
// Validation for a negative discriminant; Inconsistent when (1) bounds fail.
CharPoly chi_from_xi(const XiPoly& xi, std::int64_t q);
// psi with b >= 0 whose characteristic polynomial is X^2 - s1 X + s2, if it
// lies in Z_F and is irrational.
std::optional<RQElem> psi_from_xi(const RealQuadField& F, const XiPoly& xi);

struct HilbertPrime {
  PrimeOutcome base;
  std::optional<std::pair<RQElem, RQElem>> betas;
  std::vector<std::int64_t> residues;  // distinct lambda + q / lambda
};

struct HilbertReport {
  std::int64_t q = 0;
  std::int64_t disc = 0;
  std::vector<HilbertPrime> primes;
  BigInt norm_B = 1;
  std::vector<RQElem> candidates;  // consistent psi, conjugation fixed by the first prime
  std::optional<RQElem> psi;
  std::optional<CharPoly> result;
  std::size_t split_betas = 0, elkies_betas = 0;
  Rational elkies_fraction;  // reported against 1/2
};

HilbertReport pipeline_count_hilbert(const Curve& C, const RealQuadField& F, const KernelProvider& provider,
                                     const PipelineOptions& opts);

}  // namespace g2c
