#include "doctest.h"
#include "g2count/kernel.hpp"

using namespace g2c;

namespace {

Curve random_curve(std::uint64_t p, Rng& rng) {
  for (;;) {
    std::vector<std::int64_t> c;
    for (int i = 0; i < 5; ++i) c.push_back(static_cast<std::int64_t>(rng() % p));
    c.push_back(1);
    try {
      return make_curve(p, c);
    } catch (const Error&) {
    }
  }
}

int valuation(BigInt n, std::int64_t l) {
  int v = 0;
  while (n % l == 0) {
    n /= l;
    ++v;
  }
  return v;
}

struct Line {
  SubgroupPoints S;
  MumfordDivisor gen;
  std::int64_t lambda;  // from the Frobenius matrix
};

// Frobenius-stable and unstable lines in A[l](F_{p^k}), found by linear
// algebra on the Frobenius matrix of the rational l-torsion.
struct Lines {
  std::vector<Line> stable;
  std::vector<SubgroupPoints> unstable;
};

Lines lines_over(const Curve& C, const CharPoly& chi, std::int64_t ell, int k) {
  Lines out;
  TorsionSpace T = rational_torsion(C, ell, k, order_over_extension(chi, k), 77);
  if (T.dim() == 0) return out;
  DlTable dl(T.J, T.basis, ell);
  modl::Mat M = frob_matrix(T, dl);
  const int r = T.dim();
  modl::Vec x(r, 0);
  // Projective representatives: first nonzero coordinate equal to 1.
  std::int64_t total = 1;
  for (int i = 0; i < r; ++i) total *= ell;
  for (std::int64_t idx = 1; idx < total; ++idx) {
    std::int64_t t = idx;
    for (int i = 0; i < r; ++i) {
      x[i] = t % ell;
      t /= ell;
    }
    int lead = 0;
    while (x[lead] == 0) ++lead;
    if (x[lead] != 1) continue;
    modl::Vec y = modl::mul(M, x, ell);
    const std::int64_t lambda = y[lead];
    bool eigen = modl::scale(modl::Mat{x}, lambda, ell)[0] == y;
    MumfordDivisor g = dl.element(x);
    SubgroupPoints S = span_subgroup(T.J, {g}, ell);
    if (eigen)
      out.stable.push_back({S, g, lambda});
    else if (out.unstable.size() < 4)
      out.unstable.push_back(S);
  }
  return out;
}

}  // namespace

TEST_CASE("cyclic order-5 kernels: ideal shape, Frobenius images, eigenvalues") {
  Rng rng(11);
  int generic = 0, nontrivial_lambda = 0, unstable_checked = 0;
  for (std::uint64_t p : {7, 11, 13}) {
    for (int t = 0; t < 8; ++t) {
      Curve C = random_curve(p, rng);
      CharPoly chi = chi_naive(C);
      for (int k = 1; k <= 4; ++k) {
        if (valuation(order_over_extension(chi, k), 5) == 0) continue;
        Lines found = lines_over(C, chi, 5, k);
        for (const auto& line : found.stable) {
          const auto& S = line.S;
          REQUIRE(S.order() == 5);
          CHECK(is_frobenius_stable(S));
          CHECK(eigenvalue_from_points(S, 5) == line.lambda);
          CHECK(charpoly_on_kernel(S, {line.gen}, 5) == modl::Vec{modl::reduce(-line.lambda, 5), 1});
          // lambda and q / lambda are both roots of chi mod 5.
          CHECK(modl::eval_poly(chi.mod(5), modl::Mat{{line.lambda}}, 5)[0][0] == 0);
          const std::int64_t dual = modl::reduce(static_cast<std::int64_t>(p) * modl::inv(line.lambda, 5), 5);
          CHECK(modl::eval_poly(chi.mod(5), modl::Mat{{dual}}, 5)[0][0] == 0);
          std::optional<KernelIdeal> maybe;
          try {
            maybe = ideal_from_subgroup(S);
          } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::NonGeneric);
            CHECK(eigenvalue_on_kernel(S, 5) == line.lambda);
            continue;
          }
          const KernelIdeal& I = *maybe;
          ++generic;
          if (line.lambda != 1) ++nontrivial_lambda;
          CHECK(I.R1.degree() == 2);
          CHECK(I.R0.degree() < 2);
          CHECK(I.S1.degree() < 2);
          CHECK(I.S0.degree() < 2);
          for (const auto& D : S.elements)
            if (!S.J.is_identity(D)) CHECK(ideal_vanishes_at(I, S.J, D));
          // Zero set over L: two roots of R1, two square roots of S1 each.
          const Field& L = S.J.field();
          auto roots = poly_roots_in_field(L, I.R1, rng);
          CHECK(roots.size() == 2);
          int solutions = 0;
          for (const auto& r : roots) {
            const Elem s = poly::eval(L, I.S1, r);
            if (!L.is_zero(s) && L.is_square(s)) solutions += 2;
          }
          CHECK(solutions == 4);
          const auto F = frobenius_mod_ideal(I, BigInt(p));
          for (const auto& D : S.elements)
            if (!S.J.is_identity(D)) CHECK(apply_images(F, S.J, D) == S.J.frobenius(D));
          CHECK(compose_images(I, F, F) == frobenius_mod_ideal(I, BigInt(p * p)));
          CHECK(eigenvalue_symbolic(I, S, 5) == line.lambda);
          CHECK(eigenvalue_on_kernel(S, 5) == line.lambda);
        }
        for (const auto& S : found.unstable) {
          CHECK(!is_frobenius_stable(S));
          try {
            ideal_from_subgroup(S);
            CHECK_MESSAGE(false, "unstable subgroup produced a rational ideal");
          } catch (const Error& e) {
            CHECK((e.kind() == ErrorKind::NotRational || e.kind() == ErrorKind::NonGeneric));
            if (e.kind() == ErrorKind::NotRational) ++unstable_checked;
          }
        }
      }
    }
  }
  CHECK(generic >= 4);
  CHECK(nontrivial_lambda >= 1);
  CHECK(unstable_checked >= 1);
}

TEST_CASE("rational points of order l have eigenvalue 1") {
  Rng rng(12);
  int seen = 0;
  for (std::uint64_t p : {7, 11, 13, 17, 19, 23}) {
    for (int t = 0; t < 6 && seen < 6; ++t) {
      Curve C = random_curve(p, rng);
      CharPoly chi = chi_naive(C);
      for (std::int64_t ell : {3, 5, 7}) {
        if (ell == static_cast<std::int64_t>(p) || valuation(chi.at_one(), ell) == 0) continue;
        TorsionSpace T = rational_torsion(C, ell, 1, chi.at_one(), 5);
        for (const auto& b : T.basis) {
          SubgroupPoints S = span_subgroup(T.J, {b}, ell);
          CHECK(eigenvalue_on_kernel(S, ell) == 1);
          ++seen;
        }
      }
    }
  }
  CHECK(seen >= 3);
}

TEST_CASE("full 3-torsion ideal has 40 pairs") {
  Rng rng(13);
  int done = 0;
  for (std::uint64_t p : {7, 11, 13}) {
    for (int t = 0; t < 6 && done < 2; ++t) {
      Curve C = random_curve(p, rng);
      CharPoly chi = chi_naive(C);
      auto n = working_degree(chi, 3, 8);
      if (!n) continue;
      TorsionSpace T = torsion_basis(C, chi, 3, 21, 8);
      SubgroupPoints S = span_subgroup(T.J, T.basis, 3);
      REQUIRE(S.order() == 81);
      CHECK(is_frobenius_stable(S));
      try {
        KernelIdeal I = ideal_from_subgroup(S);
        CHECK(I.R1.degree() == 40);
        for (const auto& D : S.elements)
          if (!S.J.is_identity(D)) CHECK(ideal_vanishes_at(I, S.J, D));
        const auto F = frobenius_mod_ideal(I, BigInt(p));
        for (const auto& D : S.elements)
          if (!S.J.is_identity(D)) CHECK(apply_images(F, S.J, D) == S.J.frobenius(D));
        ++done;
      } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NonGeneric);
      }
    }
  }
  CHECK(done >= 1);
}

TEST_CASE("2-torsion subgroups are rejected as non-generic") {
  Rng rng(14);
  int seen = 0;
  for (int t = 0; t < 20 && seen == 0; ++t) {
    Curve C = random_curve(11, rng);
    auto T = rational_two_torsion(C, 1, 1);
    for (const auto& b : T.basis) {
      SubgroupPoints S = span_subgroup(T.J, {b}, 2);
      CHECK(S.order() == 2);
      CHECK_THROWS_AS(ideal_from_subgroup(S), Error);
      CHECK(eigenvalue_on_kernel(S, 2) == 1);
      ++seen;
    }
  }
  CHECK(seen >= 1);
}
