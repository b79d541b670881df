#include "g2count/modl.hpp"

#include <algorithm>
#include <sstream>

#include "g2count/error.hpp"

namespace g2c::modl {

std::int64_t reduce(std::int64_t a, std::int64_t l) {
  a %= l;
  return a < 0 ? a + l : a;
}

std::int64_t inv(std::int64_t a, std::int64_t l) {
  std::int64_t r0 = reduce(a, l), r1 = l, s0 = 1, s1 = 0;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  if (r0 != 1) fail(ErrorKind::Internal, "non-invertible residue mod " + std::to_string(l));
  return reduce(s0, l);
}

std::int64_t pow(std::int64_t a, std::uint64_t e, std::int64_t l) {
  std::int64_t r = 1 % l, b = reduce(a, l);
  while (e) {
    if (e & 1) r = r * b % l;
    b = b * b % l;
    e >>= 1;
  }
  return r;
}

Mat identity(int n) {
  Mat m = zero(n, n);
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Mat zero(int rows, int cols) { return Mat(rows, Vec(cols, 0)); }

Mat mul(const Mat& a, const Mat& b, std::int64_t l) {
  const std::size_t n = a.size(), m = b.empty() ? 0 : b[0].size(), k = b.size();
  Mat c(n, Vec(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) c[i][j] = (c[i][j] + a[i][t] * b[t][j]) % l;
    }
  return c;
}

Vec mul(const Mat& a, const Vec& x, std::int64_t l) {
  Vec y(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) y[i] = (y[i] + a[i][j] * x[j]) % l;
  return y;
}

Mat transpose(const Mat& a) {
  if (a.empty()) return a;
  Mat t(a[0].size(), Vec(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[0].size(); ++j) t[j][i] = a[i][j];
  return t;
}

Mat scale(const Mat& a, std::int64_t s, std::int64_t l) {
  Mat r = a;
  s = reduce(s, l);
  for (auto& row : r)
    for (auto& x : row) x = x * s % l;
  return r;
}

Mat add(const Mat& a, const Mat& b, std::int64_t l) {
  Mat r = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) r[i][j] = reduce(a[i][j] + b[i][j], l);
  return r;
}

Mat sub(const Mat& a, const Mat& b, std::int64_t l) {
  Mat r = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) r[i][j] = reduce(a[i][j] - b[i][j], l);
  return r;
}

Mat pow(const Mat& a, std::uint64_t e, std::int64_t l) {
  Mat r = identity(static_cast<int>(a.size())), b = a;
  while (e) {
    if (e & 1) r = mul(r, b, l);
    b = mul(b, b, l);
    e >>= 1;
  }
  return r;
}

bool is_zero(const Mat& a, std::int64_t l) {
  for (const auto& row : a)
    for (auto x : row)
      if (reduce(x, l) != 0) return false;
  return true;
}

namespace {

// In-place echelon form; returns pivot columns and the determinant sign/scale.
std::vector<int> eliminate(Mat& a, std::int64_t l, std::int64_t* det_out) {
  std::vector<int> pivots;
  std::int64_t det = 1;
  const int rows = static_cast<int>(a.size());
  const int cols = rows ? static_cast<int>(a[0].size()) : 0;
  for (auto& row : a)
    for (auto& x : row) x = reduce(x, l);
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (a[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) {
      det = 0;
      continue;
    }
    if (piv != r) {
      std::swap(a[piv], a[r]);
      det = reduce(-det, l);
    }
    det = det * a[r][c] % l;
    const std::int64_t iv = inv(a[r][c], l);
    for (auto& x : a[r]) x = x * iv % l;
    for (int i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const std::int64_t f = a[i][c];
      for (int j = 0; j < cols; ++j) a[i][j] = reduce(a[i][j] - f * a[r][j], l);
    }
    pivots.push_back(c);
    ++r;
  }
  if (r < rows) det = 0;
  if (det_out) *det_out = det;
  return pivots;
}

}  // namespace

std::int64_t det(Mat a, std::int64_t l) {
  std::int64_t d = 0;
  eliminate(a, l, &d);
  return d;
}

int rank(Mat a, std::int64_t l) { return static_cast<int>(eliminate(a, l, nullptr).size()); }

Mat rref(Mat rows, std::int64_t l) {
  auto piv = eliminate(rows, l, nullptr);
  rows.resize(piv.size());
  return rows;
}

std::optional<Mat> inverse(Mat a, std::int64_t l) {
  const int n = static_cast<int>(a.size());
  for (int i = 0; i < n; ++i) {
    a[i].resize(2 * n, 0);
    a[i][n + i] = 1;
  }
  auto piv = eliminate(a, l, nullptr);
  if (static_cast<int>(piv.size()) < n || piv[n - 1] != n - 1) return std::nullopt;
  Mat r(n, Vec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r[i][j] = a[i][n + j];
  return r;
}

std::vector<Vec> kernel(Mat a, std::int64_t l) {
  const int cols = a.empty() ? 0 : static_cast<int>(a[0].size());
  auto piv = eliminate(a, l, nullptr);
  std::vector<bool> is_piv(cols, false);
  for (int c : piv) is_piv[c] = true;
  std::vector<Vec> out;
  for (int free = 0; free < cols; ++free) {
    if (is_piv[free]) continue;
    Vec x(cols, 0);
    x[free] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = reduce(-a[r][free], l);
    out.push_back(std::move(x));
  }
  return out;
}

Vec charpoly(const Mat& a, std::int64_t l) {
  // Leibniz expansion of det(X I - a) with polynomial entries; sizes here
  // never exceed 4.
  const int n = static_cast<int>(a.size());
  if (n > 6) fail(ErrorKind::Internal, "charpoly expansion limited to small matrices");
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  Vec total(n + 1, 0);
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Vec term{1};
    for (int i = 0; i < n; ++i) {
      Vec entry{reduce(-a[i][perm[i]], l)};
      if (perm[i] == i) entry.push_back(1);
      Vec next(term.size() + entry.size() - 1, 0);
      for (std::size_t x = 0; x < term.size(); ++x)
        for (std::size_t y = 0; y < entry.size(); ++y) next[x + y] = (next[x + y] + term[x] * entry[y]) % l;
      term = std::move(next);
    }
    for (std::size_t k = 0; k < term.size(); ++k)
      total[k] = reduce(total[k] + (inversions % 2 ? -term[k] : term[k]), l);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

Mat eval_poly(const Vec& p, const Mat& a, std::int64_t l) {
  const int n = static_cast<int>(a.size());
  Mat r = zero(n, n);
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) {
    r = mul(r, a, l);
    for (int j = 0; j < n; ++j) r[j][j] = reduce(r[j][j] + p[i], l);
  }
  return r;
}

std::optional<std::uint64_t> multiplicative_order(const Mat& a, std::int64_t l, std::uint64_t limit) {
  const Mat I = identity(static_cast<int>(a.size()));
  Mat cur = a;
  for (std::uint64_t k = 1; k <= limit; ++k) {
    if (cur == I) return k;
    cur = mul(cur, a, l);
  }
  return std::nullopt;
}

Mat companion(const Vec& f, std::int64_t l) {
  const int n = static_cast<int>(f.size()) - 1;
  Mat c = zero(n, n);
  for (int i = 1; i < n; ++i) c[i][i - 1] = 1;
  for (int i = 0; i < n; ++i) c[i][n - 1] = reduce(-f[i], l);
  return c;
}

std::string to_string(const Mat& a) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < a.size(); ++i) {
    os << (i ? "," : "") << '[';
    for (std::size_t j = 0; j < a[i].size(); ++j) os << (j ? "," : "") << a[i][j];
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace g2c::modl
