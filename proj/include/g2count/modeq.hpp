#pragma once

// Modular-equation data files and their specialization.
//
// A file holds Psi_k = num_k(J, X) / den(J) for k = 1..n, where J are the n
// invariant coordinates (three Igusa, or two Gundlach for Q(sqrt 5)).
// Text format, one item per line, '#' starts a comment:
//
//   kind=siegel-igusa;level=2;norm=igusa-clebsch-v1;version=1
//   num 1:
//   0,0,0,15: 1          exponents of J1..Jn, then X, and an integer
//   ...
//   num 2:
//   ...
//   den:
//   0,0,0: 1             exponents of J1..Jn only
//
// Hilbert levels are written as (a,b,D) for beta = a + b w in Q(sqrt D).

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "g2count/hilbert.hpp"
#include "g2count/provider.hpp"

namespace g2c {

enum class ModEqKind { SiegelIgusa, HilbertGundlach, HilbertIgusa };
const char* modeq_kind_name(ModEqKind k);

struct ModEqLevel {
  std::int64_t ell = 0;          // prime level, or N(beta)
  std::optional<RQElem> beta;    // Hilbert only
  std::int64_t disc = 0;         // Hilbert only
  friend bool operator==(const ModEqLevel&, const ModEqLevel&) = default;
};

using Monomial = std::vector<int>;
using MPoly = std::map<Monomial, BigInt>;  // zero coefficients never stored

struct ModEqData {
  ModEqKind kind = ModEqKind::SiegelIgusa;
  ModEqLevel level;
  std::string norm;
  int version = 1;
  std::vector<MPoly> num;  // num[k-1], monomials of length nvars() + 1
  MPoly den;               // monomials of length nvars()

  int nvars() const { return kind == ModEqKind::HilbertGundlach ? 2 : 3; }
  // l^3 + l^2 + l + 1 (Siegel) or N(beta) + 1 (Hilbert).
  std::int64_t covering_degree() const;
  friend bool operator==(const ModEqData&, const ModEqData&) = default;
};

int degree_in_x(const MPoly& f);
int total_degree_in_j(const MPoly& f, int nvars);

// Parse errors for malformed text; Validation for degree-bound violations.
ModEqData parse_modeq(std::string_view text);
std::string serialize_modeq(const ModEqData& data);
ModEqData load_modeq_file(const std::filesystem::path& path);
// Throws Validation naming the violated bound.
void validate_modeq(const ModEqData& data);

// Psi_k(point, X), their J_i-derivatives, and d/dX Psi_1, over a finite field.
struct EvaluatedModEq {
  Field K;
  std::vector<Poly> psi;                // psi[k-1]
  std::vector<std::vector<Poly>> dpsi;  // dpsi[k-1][i] = d Psi_k / d J_{i+1}
  Poly dpsi1_dx;
};

// The same over Q; polynomials are little-endian coefficient vectors.
using QPoly = std::vector<Rational>;
struct RationalModEq {
  std::vector<QPoly> psi;
  std::vector<std::vector<QPoly>> dpsi;
  QPoly dpsi1_dx;
};

// DenominatorVanishes when den(point) = 0; Validation on a wrong arity.
EvaluatedModEq evaluate_at(const ModEqData& data, const Field& K, const std::vector<Elem>& point);
RationalModEq evaluate_at(const ModEqData& data, const std::vector<Rational>& point);

// Comma-separated rationals such as "159/239,-19/28,-193/246".
std::vector<Rational> parse_point(std::string_view text);
std::string point_to_string(const std::vector<Rational>& point);
// Reduction of a rational point into K; Validation when a denominator is 0 in K.
std::vector<Elem> reduce_point(const Field& K, const std::vector<Rational>& point);

struct IsogenousInvariants {
  std::vector<std::vector<Elem>> tuples;  // (j1', Psi_2/dPsi_1, ...), sorted
  struct Degenerate {
    Elem root;
    int multiplicity = 0;
  };
  std::vector<Degenerate> degenerate;  // repeated roots of Psi_1
};
IsogenousInvariants isogenous_invariants(const EvaluatedModEq& e);

// Uses modular-equation files to screen out levels with no isogenous
// invariants over the base field, delegating kernels to a fallback.
class ModEqScreenedProvider : public KernelProvider {
 public:
  ModEqScreenedProvider(const std::filesystem::path& dir, std::shared_ptr<const KernelProvider> fallback);

  std::string name() const override { return "modeq-dir+" + fallback_->name(); }
  std::vector<StableKernel> siegel_kernels(const Curve& odd_curve, std::int64_t ell,
                                           std::size_t max_count) const override;
  std::vector<StableKernel> hilbert_kernels(const Curve& odd_curve, std::int64_t ell,
                                            std::size_t max_count) const override;

  std::size_t files() const { return data_.size(); }
  // One line per screened call: "l=7 siegel: 3 roots" and the like.
  std::vector<std::string> notes() const;

 private:
  // Number of Psi_1 roots, or nullopt when screening is impossible.
  std::optional<std::size_t> roots_at(const Curve& odd_curve, const ModEqData& d) const;
  void note(std::string s) const;

  std::vector<ModEqData> data_;
  std::shared_ptr<const KernelProvider> fallback_;
  mutable std::mutex mu_;
  mutable std::vector<std::string> notes_;
};

}  // namespace g2c
