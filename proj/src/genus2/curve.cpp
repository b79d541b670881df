#include <cctype>
#include <sstream>

#include "g2count/genus2.hpp"

namespace g2c {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Splits on ';', ',' or whitespace outside brackets.
std::vector<std::string_view> split_fields(std::string_view text) {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    const bool end = i == text.size();
    const char ch = end ? ';' : text[i];
    if (ch == '[') ++depth;
    if (ch == ']') --depth;
    const bool sep = ch == ';' || ch == ',' || std::isspace(static_cast<unsigned char>(ch));
    if (depth == 0 && sep) {
      auto tok = trim(text.substr(start, i - start));
      if (!tok.empty()) out.push_back(tok);
      start = i + 1;
    }
  }
  return out;
}

// Visits every element of L in base-p digit order.
template <class Fn>
void for_each_element(const Field& L, Fn&& fn) {
  const auto p = static_cast<std::uint32_t>(L.characteristic());
  const int n = L.degree();
  Elem a{};
  for (;;) {
    fn(a);
    int i = 0;
    while (i < n && ++a.c[i] == p) a.c[i++] = 0;
    if (i == n) return;
  }
}

}  // namespace

Curve make_curve(const Field& F, Poly P) {
  if (F.degree() != 1) fail(ErrorKind::Validation, "curves must be defined over a prime field");
  if (F.characteristic() < 5) fail(ErrorKind::Validation, "characteristic must be at least 5");
  P.normalize();
  if (P.degree() != 5 && P.degree() != 6)
    fail(ErrorKind::Validation, "P must have degree 5 or 6, got " + std::to_string(P.degree()));
  if (poly::gcd(F, P, poly::derivative(F, P)).degree() != 0)
    fail(ErrorKind::Validation, "P has a repeated root (disc(P) = 0)");
  return Curve{F, std::move(P)};
}

Curve make_curve(std::uint64_t p, std::span<const std::int64_t> coeffs) {
  if (!is_prime_u64(p)) fail(ErrorKind::Validation, "p = " + std::to_string(p) + " is not prime");
  Field F = Field::prime(p);
  return make_curve(F, poly::from_ints(F, coeffs));
}

Curve parse_curve(std::string_view text) {
  std::optional<std::uint64_t> p;
  std::optional<std::string_view> ptext;
  for (auto tok : split_fields(text)) {
    auto eq = tok.find('=');
    if (eq == std::string_view::npos) fail(ErrorKind::Parse, "expected key=value in curve spec: '" + std::string(tok) + "'");
    auto key = trim(tok.substr(0, eq));
    auto val = trim(tok.substr(eq + 1));
    if (key == "p" || key == "q") {
      std::uint64_t v = 0;
      if (val.empty()) fail(ErrorKind::Parse, "empty value for p");
      for (char ch : val) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) fail(ErrorKind::Parse, "p must be a decimal integer");
        if (v > (std::uint64_t{1} << 40)) fail(ErrorKind::Parse, "p is too large");
        v = v * 10 + static_cast<std::uint64_t>(ch - '0');
      }
      p = v;
    } else if (key == "P") {
      ptext = val;
    } else {
      fail(ErrorKind::Parse, "unknown curve field '" + std::string(key) + "'");
    }
  }
  if (!p) fail(ErrorKind::Parse, "curve spec is missing p=<prime>");
  if (!ptext) fail(ErrorKind::Parse, "curve spec is missing P=[c0,...]");
  if (!is_prime_u64(*p)) fail(ErrorKind::Validation, "p = " + std::to_string(*p) + " is not prime");
  if (*p < 5) fail(ErrorKind::Validation, "characteristic must be at least 5");
  if (*p >= (std::uint64_t{1} << 31)) fail(ErrorKind::Validation, "p must be below 2^31");
  Field F = Field::prime(*p);
  return make_curve(F, poly::parse(F, *ptext));
}

std::string curve_to_string(const Curve& C) {
  std::ostringstream os;
  os << "p=" << C.p() << ";P=" << poly::to_string(C.field, C.P);
  return os.str();
}

Curve quadratic_twist(const Curve& C) {
  const Field& F = C.field;
  for (std::int64_t d = 2;; ++d) {
    Elem e = F.from_int(d);
    if (F.legendre(e) == -1) return Curve{F, poly::scale(F, C.P, e)};
  }
}

Curve odd_model(const Curve& C) {
  if (C.degree() == 5) return C;
  const Field& F = C.field;
  Rng rng(0);
  auto roots = poly_roots_in_field(F, C.P, rng);
  if (roots.empty())
    fail(ErrorKind::Validation, "degree-6 model without a rational Weierstrass point; Jacobian arithmetic needs one");
  const Elem r = roots.front();
  // t^6 P(r + 1/t) = sum a_i (r t + 1)^i t^{6-i}
  const Poly rt1{{F.one(), r}};
  Poly Q;
  Poly power = poly::constant(F, F.one());
  for (int i = 0; i <= 6; ++i) {
    Q = poly::add(F, Q, poly::scale(F, poly::shift(power, 6 - i), C.P.coeff(i)));
    power = poly::mul(F, power, rt1);
  }
  return make_curve(F, Q);
}

BigInt curve_point_count(const Curve& C, const Field& L, std::uint64_t guard) {
  if (L.characteristic() != C.p()) fail(ErrorKind::Internal, "field characteristic mismatch");
  if (L.order() > guard)
    fail(ErrorKind::GuardExceeded, "exhaustive count over a field of size " + L.order().str() + " exceeds the guard " +
                                       std::to_string(guard));
  BigInt total = 0;
  for_each_element(L, [&](const Elem& x) { total += 1 + L.legendre(poly::eval(L, C.P, x)); });
  if (C.degree() == 5)
    total += 1;
  else
    total += 1 + L.legendre(C.P.lead());
  return total;
}

BigInt curve_point_count(const Curve& C, std::uint64_t guard) { return curve_point_count(C, C.field, guard); }

}  // namespace g2c
