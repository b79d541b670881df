#include <algorithm>

#include "g2count/siegel.hpp"

namespace g2c {

namespace {

std::vector<int> pivots(const modl::Mat& rows) {
  std::vector<int> out;
  for (const auto& r : rows) {
    int c = 0;
    while (c < static_cast<int>(r.size()) && r[c] == 0) ++c;
    out.push_back(c);
  }
  return out;
}

std::int64_t form(const modl::Mat& G, const modl::Vec& x, const modl::Vec& y, std::int64_t l) {
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) acc = (acc + x[i] * G[i][j] % l * y[j]) % l;
  return acc;
}

}  // namespace

std::vector<modl::Mat> enumerate_subspaces(int n, int k, std::int64_t ell) {
  std::vector<modl::Mat> out;
  if (k < 0 || k > n) return out;
  std::vector<int> piv(k);
  for (int i = 0; i < k; ++i) piv[i] = i;
  for (;;) {
    // Free slots: (row i, column j) with j > piv[i] and j not a pivot.
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < k; ++i)
      for (int j = piv[i] + 1; j < n; ++j)
        if (std::find(piv.begin(), piv.end(), j) == piv.end()) slots.emplace_back(i, j);
    modl::Mat base(k, modl::Vec(n, 0));
    for (int i = 0; i < k; ++i) base[i][piv[i]] = 1;
    std::vector<std::int64_t> digits(slots.size(), 0);
    for (;;) {
      modl::Mat m = base;
      for (std::size_t s = 0; s < slots.size(); ++s) m[slots[s].first][slots[s].second] = digits[s];
      out.push_back(std::move(m));
      std::size_t s = 0;
      while (s < digits.size() && ++digits[s] == ell) digits[s++] = 0;
      if (s == digits.size()) break;
    }
    // Next pivot combination in lexicographic order.
    int i = k - 1;
    while (i >= 0 && piv[i] == n - k + i) --i;
    if (i < 0) break;
    ++piv[i];
    for (int j = i + 1; j < k; ++j) piv[j] = piv[j - 1] + 1;
  }
  return out;
}

std::vector<modl::Mat> enumerate_lagrangians(const modl::Mat& G, std::int64_t ell) {
  std::vector<modl::Mat> out;
  for (auto& B : enumerate_subspaces(static_cast<int>(G.size()), 2, ell))
    if (form(G, B[0], B[1], ell) == 0) out.push_back(std::move(B));
  return out;
}

bool subspace_is_stable(const modl::Mat& M, const modl::Mat& basis_rows, std::int64_t ell) {
  modl::Mat all = basis_rows;
  for (const auto& b : basis_rows) all.push_back(modl::mul(M, b, ell));
  return modl::rank(all, ell) == static_cast<int>(basis_rows.size());
}

std::vector<modl::Mat> enumerate_stable_lagrangians(const modl::Mat& M, const modl::Mat& G, std::int64_t ell) {
  std::vector<modl::Mat> out;
  for (auto& B : enumerate_lagrangians(G, ell))
    if (subspace_is_stable(M, B, ell)) out.push_back(std::move(B));
  return out;
}

modl::Mat restrict_to_subspace(const modl::Mat& M, const modl::Mat& basis_rows, std::int64_t ell) {
  const auto piv = pivots(basis_rows);
  const int k = static_cast<int>(basis_rows.size());
  modl::Mat A = modl::zero(k, k);
  for (int j = 0; j < k; ++j) {
    const modl::Vec w = modl::mul(M, basis_rows[j], ell);
    modl::Vec back(w.size(), 0);
    for (int i = 0; i < k; ++i) {
      A[i][j] = w[piv[i]];
      for (std::size_t c = 0; c < w.size(); ++c) back[c] = (back[c] + A[i][j] * basis_rows[i][c]) % ell;
    }
    if (back != w) fail(ErrorKind::Internal, "subspace is not stable under the matrix");
  }
  return A;
}

}  // namespace g2c
