#include <memory>

#include "g2count/frobenius.hpp"

namespace g2c {

namespace {

struct Generator {
  MumfordDivisor g;
  int e = 0;  // order l^e
  MumfordDivisor top;
};

// Maintains generators of a direct sum of cyclic l-groups inside J(L),
// keyed by independent top-layer l-torsion points.
class SylowBuilder {
 public:
  SylowBuilder(const Jacobian& J, std::int64_t l) : J_(J), l_(l) {}

  int log_size() const { return total_; }

  std::vector<MumfordDivisor> tops() const {
    std::vector<MumfordDivisor> out;
    for (const auto& g : gens_) out.push_back(g.top);
    return out;
  }

  void insert(MumfordDivisor E) {
    for (int guard = 0; guard < 10000; ++guard) {
      if (J_.is_identity(E)) return;
      int e = 1;
      MumfordDivisor top = E;
      for (MumfordDivisor nxt = J_.scalar_mul(E, l_); !J_.is_identity(nxt); nxt = J_.scalar_mul(nxt, l_)) {
        top = nxt;
        ++e;
        if (e > 256) fail(ErrorKind::Internal, "element is not of l-power order");
      }
      auto coords = table().log(top);
      if (!coords) {
        gens_.push_back({E, e, top});
        total_ += e;
        dirty_ = true;
        return;
      }
      int swap_with = -1;
      for (std::size_t i = 0; i < gens_.size(); ++i)
        if ((*coords)[i] != 0 && gens_[i].e < e && (swap_with < 0 || gens_[i].e < gens_[swap_with].e))
          swap_with = static_cast<int>(i);
      if (swap_with >= 0) {
        Generator old = gens_[swap_with];
        total_ += e - old.e;
        gens_[swap_with] = {E, e, top};
        dirty_ = true;
        E = old.g;
        continue;
      }
      for (std::size_t i = 0; i < gens_.size(); ++i) {
        if ((*coords)[i] == 0) continue;
        BigInt mult = (*coords)[i];
        for (int t = 0; t < gens_[i].e - e; ++t) mult *= l_;
        E = J_.add(E, J_.negate(J_.scalar_mul(gens_[i].g, mult)));
      }
    }
    fail(ErrorKind::Internal, "l-Sylow reduction did not terminate");
  }

 private:
  const DlTable& table() {
    if (dirty_ || !table_) {
      table_ = std::make_unique<DlTable>(J_, tops(), l_);
      dirty_ = false;
    }
    return *table_;
  }

  const Jacobian& J_;
  std::int64_t l_;
  std::vector<Generator> gens_;
  int total_ = 0;
  bool dirty_ = true;
  std::unique_ptr<DlTable> table_;
};

}  // namespace

TorsionSpace rational_torsion(const Curve& odd_curve, std::int64_t ell, int k, const BigInt& group_order,
                              std::uint64_t seed) {
  if (ell < 2 || !is_prime_u64(static_cast<std::uint64_t>(ell))) fail(ErrorKind::Usage, "l must be prime");
  if (static_cast<std::uint64_t>(ell) == odd_curve.p()) fail(ErrorKind::Usage, "l must differ from the characteristic");
  Field L = extension_field(odd_curve.p(), k);
  Jacobian J(odd_curve, L);
  BigInt m = group_order;
  int v = 0;
  while (m % ell == 0) {
    m /= ell;
    ++v;
  }
  TorsionSpace T{ell, k, L, J, {}};
  if (v == 0) return T;
  SylowBuilder builder(J, ell);
  Rng rng(seed);
  for (int tries = 0; builder.log_size() < v; ++tries) {
    if (tries > 400 + 40 * v)
      fail(ErrorKind::Internal, "could not generate the l-Sylow subgroup; is the group order right?");
    MumfordDivisor E = J.scalar_mul(J.random_divisor(rng), m);
    builder.insert(E);
  }
  if (builder.log_size() != v) fail(ErrorKind::Internal, "l-Sylow subgroup larger than the group order allows");
  T.basis = builder.tops();
  return T;
}

TorsionSpace rational_two_torsion(const Curve& odd_curve, int k, std::uint64_t seed) {
  Field L = extension_field(odd_curve.p(), k);
  Jacobian J(odd_curve, L);
  Rng rng(seed);
  std::vector<Poly> linear, quadratic;
  for (const auto& fac : poly_factor(L, J.f(), rng)) {
    if (fac.f.degree() == 1) linear.push_back(fac.f);
    if (fac.f.degree() == 2) quadratic.push_back(fac.f);
  }
  std::vector<Poly> candidates = linear;
  for (std::size_t i = 0; i < linear.size(); ++i)
    for (std::size_t j = i + 1; j < linear.size(); ++j) candidates.push_back(poly::mul(L, linear[i], linear[j]));
  candidates.insert(candidates.end(), quadratic.begin(), quadratic.end());
  TorsionSpace T{2, k, L, J, {}};
  for (const auto& u : candidates) {
    MumfordDivisor D{u, Poly{}};
    DlTable table(J, T.basis, 2);
    if (!table.log(D)) T.basis.push_back(D);
  }
  return T;
}

TorsionSpace torsion_basis(const Curve& odd_curve, const CharPoly& chi, std::int64_t ell, std::uint64_t seed,
                           int ext_guard) {
  auto n = working_degree(chi, ell, ext_guard);
  if (!n)
    fail(ErrorKind::GuardExceeded, "A[" + std::to_string(ell) + "] needs an extension of degree above " +
                                       std::to_string(ext_guard));
  TorsionSpace T = ell == 2 ? rational_two_torsion(odd_curve, *n, seed)
                            : rational_torsion(odd_curve, ell, *n, order_over_extension(chi, *n), seed);
  if (T.dim() != 4)
    fail(ErrorKind::Internal, "A[" + std::to_string(ell) + "] over the working extension has rank " +
                                  std::to_string(T.dim()));
  return T;
}

modl::Mat frob_matrix(const TorsionSpace& T, const DlTable& dl) {
  const int r = T.dim();
  modl::Mat M = modl::zero(r, r);
  for (int j = 0; j < r; ++j) {
    auto c = dl.log(T.J.frobenius(T.basis[j]));
    if (!c) fail(ErrorKind::Internal, "Frobenius image left the torsion span");
    for (int i = 0; i < r; ++i) M[i][j] = (*c)[i];
  }
  return M;
}

std::set<std::pair<std::int64_t, std::int64_t>> match_charpoly_on_torsion(const modl::Mat& M, std::int64_t q,
                                                                          std::int64_t ell) {
  std::set<std::pair<std::int64_t, std::int64_t>> out;
  for (std::int64_t s1 = 0; s1 < ell; ++s1)
    for (std::int64_t s2 = 0; s2 < ell; ++s2) {
      CharPoly c{q, s1, s2};
      if (modl::is_zero(modl::eval_poly(c.mod(ell), M, ell), ell)) out.emplace(s1, s2);
    }
  if (out.empty()) fail(ErrorKind::Internal, "no (s1, s2) annihilates the Frobenius matrix");
  return out;
}

modl::Vec chi_mod2_from_roots(const Curve& C) {
  Rng rng(0);
  auto pat = poly_factor_degree_pattern(C.field, C.P, rng);
  std::vector<int> cycles;
  for (auto [d, count] : pat.entries)
    for (int i = 0; i < count; ++i) cycles.push_back(d);
  if (C.degree() == 5) cycles.push_back(1);  // the point at infinity
  // prod (X^d + 1) over F_2, then divide by (X + 1)^2.
  modl::Vec f{1};
  for (int d : cycles) {
    modl::Vec g(f.size() + d, 0);
    for (std::size_t i = 0; i < f.size(); ++i) {
      g[i] ^= f[i];
      g[i + d] ^= f[i];
    }
    f = std::move(g);
  }
  for (int rep = 0; rep < 2; ++rep) {
    // Synthetic division by X + 1 over F_2.
    const int n = static_cast<int>(f.size()) - 1;
    modl::Vec q(n, 0);
    std::int64_t carry = 0;
    for (int i = n; i >= 1; --i) {
      carry = (f[i] + carry) & 1;
      q[i - 1] = carry;
    }
    if (((f[0] + carry) & 1) != 0) fail(ErrorKind::Internal, "X + 1 does not divide the permutation charpoly");
    f = std::move(q);
  }
  return f;
}

}  // namespace g2c
