#include <mutex>
#include <sstream>

#include "g2count/frobenius.hpp"

namespace g2c {

std::array<BigInt, 5> CharPoly::coefficients() const {
  const BigInt Q = q, S1 = s1, S2 = s2;
  return {Q * Q, -Q * S1, S2 + 2 * Q, -S1, BigInt(1)};
}

BigInt CharPoly::at_one() const {
  BigInt r = 0;
  for (const auto& c : coefficients()) r += c;
  return r;
}

modl::Vec CharPoly::mod(std::int64_t l) const {
  modl::Vec out;
  const BigInt L = l;
  for (const auto& c : coefficients()) {
    BigInt r = c % L;
    if (r < 0) r += L;
    out.push_back(static_cast<std::int64_t>(r));
  }
  return out;
}

std::string CharPoly::to_string() const {
  std::ostringstream os;
  os << "{" << q << ", " << s1 << ", " << s2 << "}";
  return os.str();
}

bool weil_ruck_holds(const CharPoly& c) {
  const BigInt q = c.q, s1 = c.s1, s2 = c.s2;
  const BigInt a1 = s1 < 0 ? BigInt(-s1) : s1;
  const BigInt a2 = s2 < 0 ? BigInt(-s2) : s2;
  return s1 * s1 <= 16 * q && a2 <= 4 * q && s1 * s1 - 4 * s2 >= 0 && s2 + 4 * q >= 2 * a1;
}

bool weil_ruck_sharp_holds(const CharPoly& c) {
  if (!weil_ruck_holds(c)) return false;
  const BigInt q = c.q, s1 = c.s1, s2 = c.s2;
  const BigInt lhs = s2 + 4 * q;
  // lhs >= 2 sqrt(q) |s1|  <=>  lhs >= 0 and lhs^2 >= 4 q s1^2
  return lhs >= 0 && lhs * lhs >= 4 * q * s1 * s1;
}

void require_weil_ruck(const CharPoly& chi) {
  if (!weil_ruck_holds(chi))
    fail(ErrorKind::Internal, "characteristic polynomial " + chi.to_string() + " violates the Weil-Ruck bounds");
}

CharPoly charpoly_from_counts(std::int64_t q, const BigInt& N1, const BigInt& N2) {
  const BigInt Q = q;
  const BigInt s1 = Q + 1 - N1;
  // Sum of squared roots: s1^2 - 2 (s2 + 2q) = q^2 + 1 - N2.
  const BigInt twice = s1 * s1 - (Q * Q + 1 - N2);
  if (twice % 2 != 0) fail(ErrorKind::Internal, "point counts inconsistent with a genus-2 Jacobian");
  const BigInt s2 = twice / 2 - 2 * Q;
  CharPoly c{q, static_cast<std::int64_t>(s1), static_cast<std::int64_t>(s2)};
  require_weil_ruck(c);
  return c;
}

CharPoly chi_naive(const Curve& C, std::uint64_t guard) {
  const BigInt N1 = curve_point_count(C, C.field, guard);
  const Field L = extension_field(C.p(), 2);
  const BigInt N2 = curve_point_count(C, L, guard);
  return charpoly_from_counts(static_cast<std::int64_t>(C.p()), N1, N2);
}

BigInt order_over_extension(const CharPoly& chi, int n) {
  if (n < 1) fail(ErrorKind::Usage, "extension degree must be positive");
  const auto c = chi.coefficients();
  std::vector<BigInt> f(c.begin(), c.end());
  std::vector<BigInt> g(static_cast<std::size_t>(n) + 1, 0);
  g[0] = -1;
  g[n] = 1;
  return integer_resultant(f, g);
}

std::optional<int> working_degree(const CharPoly& chi, std::int64_t l, int limit) {
  auto m = modl::multiplicative_order(modl::companion(chi.mod(l), l), l, static_cast<std::uint64_t>(limit));
  if (!m) return std::nullopt;
  return static_cast<int>(*m);
}

Field extension_field(std::uint64_t p, int k) {
  static std::mutex mu;
  static std::map<std::pair<std::uint64_t, int>, Field> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({p, k});
  if (it != cache.end()) return it->second;
  Field F = k == 1 ? Field::prime(p) : Field::extension(p, k, 0x9e3779b97f4a7c15ULL ^ (p * 131 + static_cast<std::uint64_t>(k)));
  cache.emplace(std::make_pair(p, k), F);
  return F;
}

MumfordDivisor frobenius_on_divisor(const Jacobian& J, const MumfordDivisor& D) { return J.frobenius(D); }

DlTable::DlTable(const Jacobian& J, std::vector<MumfordDivisor> basis, std::int64_t l)
    : J_(&J), basis_(std::move(basis)), l_(l) {
  const int r = static_cast<int>(basis_.size());
  // Mixed-radix enumeration: each step adds one basis vector, carrying
  // via [l] b = 0.
  modl::Vec coords(r, 0);
  MumfordDivisor cur = J.identity();
  for (;;) {
    if (!table_.emplace(cur, coords).second)
      fail(ErrorKind::Internal, "torsion basis is not independent");
    int i = 0;
    while (i < r) {
      cur = J.add(cur, basis_[i]);
      if (++coords[i] < l_) break;
      coords[i] = 0;  // l copies added: back to the previous value
      ++i;
    }
    if (i == r) break;
  }
}

std::optional<modl::Vec> DlTable::log(const MumfordDivisor& D) const {
  auto it = table_.find(D);
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

MumfordDivisor DlTable::element(const modl::Vec& coords) const {
  MumfordDivisor acc = J_->identity();
  for (std::size_t i = 0; i < basis_.size(); ++i)
    acc = J_->add(acc, J_->scalar_mul(basis_[i], modl::reduce(coords[i], l_)));
  return acc;
}

}  // namespace g2c
