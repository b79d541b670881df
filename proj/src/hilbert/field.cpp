#include <cmath>

#include "g2count/hilbert.hpp"

namespace g2c {

RealQuadField RealQuadField::make(std::int64_t disc) {
  switch (disc) {
    case 5: return RealQuadField(5, 1, 1, {0, 1});
    case 8: return RealQuadField(8, 0, 2, {1, 1});
    case 13: return RealQuadField(13, 1, 3, {1, 1});
    case 17: return RealQuadField(17, 1, 4, {3, 2});
    default: break;
  }
  fail(ErrorKind::Usage, "unsupported real quadratic discriminant " + std::to_string(disc) + " (use 5, 8, 13 or 17)");
}

RQElem RealQuadField::add(const RQElem& x, const RQElem& y) const { return {x.a + y.a, x.b + y.b}; }
RQElem RealQuadField::sub(const RQElem& x, const RQElem& y) const { return {x.a - y.a, x.b - y.b}; }

RQElem RealQuadField::mul(const RQElem& x, const RQElem& y) const {
  const std::int64_t bd = x.b * y.b;
  return {x.a * y.a + bd * n_, x.a * y.b + x.b * y.a + bd * t_};
}

RQElem RealQuadField::conj(const RQElem& x) const { return {x.a + x.b * t_, -x.b}; }
std::int64_t RealQuadField::trace(const RQElem& x) const { return 2 * x.a + x.b * t_; }
std::int64_t RealQuadField::norm(const RQElem& x) const { return x.a * x.a + t_ * x.a * x.b - n_ * x.b * x.b; }
std::int64_t RealQuadField::disc_of(const RQElem& x) const { return x.b * x.b * disc_; }

RQElem RealQuadField::div_unit(const RQElem& x, const RQElem& unit) const {
  const std::int64_t n = norm(unit);
  if (n != 1 && n != -1) fail(ErrorKind::Internal, to_string(unit) + " is not a unit");
  RQElem inv = conj(unit);
  if (n == -1) inv = neg(inv);
  return mul(x, inv);
}

std::string RealQuadField::to_string(const RQElem& x) const {
  std::string s = std::to_string(x.a);
  s += x.b < 0 ? "-" : "+";
  s += std::to_string(x.b < 0 ? -x.b : x.b) + "*w";
  return s;
}

std::string RealQuadField::header() const {
  const std::string d = std::to_string(disc_);
  return "D=" + d + (t_ ? ";w=(1+sqrt(" + d + "))/2" : ";w=sqrt(" + std::to_string(n_) + ")");
}

std::int64_t omega_residue(const RQElem& beta, std::int64_t ell) {
  const std::int64_t b = modl::reduce(beta.b, ell);
  if (b == 0) fail(ErrorKind::Validation, "generator is divisible by l in its w-coordinate");
  return modl::reduce(-modl::reduce(beta.a, ell) * modl::inv(b, ell), ell);
}

std::int64_t reduce_mod(const RQElem& x, const RQElem& beta, std::int64_t ell) {
  const std::int64_t t = omega_residue(beta, ell);
  return modl::reduce(modl::reduce(x.a, ell) + modl::reduce(x.b, ell) * t, ell);
}

namespace {

std::optional<std::int64_t> exact_sqrt(std::int64_t n) {
  if (n < 0) return std::nullopt;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  if (r * r != n) return std::nullopt;
  return r;
}

// Some element of norm +l or -l.
RQElem element_of_norm(const RealQuadField& F, std::int64_t ell) {
  const std::int64_t t = F.trace_w(), D = F.disc();
  constexpr std::int64_t kSearch = 1 << 20;
  for (std::int64_t b = 1; b < kSearch; ++b) {
    for (std::int64_t sign : {1, -1}) {
      // a^2 + t b a - n b^2 = sign l  =>  (2a + t b)^2 = D b^2 + 4 sign l.
      const auto s = exact_sqrt(D * b * b + 4 * sign * ell);
      if (!s) continue;
      for (std::int64_t root : {*s, -*s}) {
        const std::int64_t twice = root - t * b;
        if (twice % 2 == 0) return {twice / 2, b};
      }
    }
  }
  fail(ErrorKind::Internal, "no generator of norm " + std::to_string(ell) + " found");
}

}  // namespace

RQElem small_trace_generator(const RealQuadField& F, const RQElem& beta) {
  const RQElem eta = F.totally_positive_unit();
  RQElem best = beta;
  for (bool moved = true; moved;) {
    moved = false;
    for (const RQElem& cand : {F.mul(best, eta), F.div_unit(best, eta)}) {
      if (F.trace(cand) < F.trace(best)) {
        best = cand;
        moved = true;
      }
    }
  }
  return best;
}

std::optional<std::pair<RQElem, RQElem>> split_prime(const RealQuadField& F, std::int64_t ell) {
  if (ell < 2 || !is_prime_u64(static_cast<std::uint64_t>(ell))) fail(ErrorKind::Usage, std::to_string(ell) + " is not prime");
  if (F.disc() % ell == 0) fail(ErrorKind::Ramified, std::to_string(ell) + " ramifies in Q(sqrt " + std::to_string(F.disc()) + ")");
  bool split = false;
  for (std::int64_t x = 0; x < ell && !split; ++x)
    split = modl::reduce(x * x - F.trace_w() * x + F.norm_w(), ell) == 0;
  if (!split) return std::nullopt;
  RQElem beta = element_of_norm(F, ell);
  if (F.norm(beta) < 0) beta = F.mul(beta, F.unit());
  if (F.trace(beta) < 0) beta = F.neg(beta);
  beta = small_trace_generator(F, beta);
  RQElem other = F.conj(beta);
  if (beta.b < 0) std::swap(beta, other);
  return std::make_pair(beta, other);
}

}  // namespace g2c
