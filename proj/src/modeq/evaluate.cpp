#include <algorithm>

#include "g2count/modeq.hpp"

namespace g2c {

namespace {

struct FqOps {
  using T = Elem;
  const Field& K;
  T zero() const { return K.zero(); }
  T from(const BigInt& v) const { return K.from_big(v); }
  T add(const T& a, const T& b) const { return K.add(a, b); }
  T sub(const T& a, const T& b) const { return K.sub(a, b); }
  T mul(const T& a, const T& b) const { return K.mul(a, b); }
  T div(const T& a, const T& b) const { return K.div(a, b); }
  bool is_zero(const T& a) const { return K.is_zero(a); }
};

struct QOps {
  using T = Rational;
  T zero() const { return 0; }
  T from(const BigInt& v) const { return Rational(v); }
  T add(const T& a, const T& b) const { return a + b; }
  T sub(const T& a, const T& b) const { return a - b; }
  T mul(const T& a, const T& b) const { return a * b; }
  T div(const T& a, const T& b) const { return a / b; }
  bool is_zero(const T& a) const { return a == 0; }
};

template <class Ops>
class Evaluator {
 public:
  using T = typename Ops::T;
  using UPoly = std::vector<T>;

  Evaluator(const Ops& ops, const std::vector<T>& point) : ops_(ops), point_(point) {}

  // f(point, X) when var < 0; d f / d J_var at (point, X) otherwise.
  UPoly eval(const MPoly& f, int var = -1) const {
    UPoly out;
    const std::size_t n = point_.size();
    for (const auto& [m, c] : f) {
      T term = ops_.from(c);
      for (std::size_t i = 0; i < n; ++i) {
        int e = m[i];
        if (static_cast<int>(i) == var) {
          if (e == 0) {
            term = ops_.zero();
            break;
          }
          term = ops_.mul(term, ops_.from(BigInt(e)));
          --e;
        }
        term = ops_.mul(term, power(i, e));
      }
      const std::size_t xdeg = m.size() > n ? static_cast<std::size_t>(m[n]) : 0;
      if (out.size() <= xdeg) out.resize(xdeg + 1, ops_.zero());
      out[xdeg] = ops_.add(out[xdeg], term);
    }
    trim(out);
    return out;
  }

  T scalar(const MPoly& f, int var = -1) const {
    const UPoly u = eval(f, var);
    return u.empty() ? ops_.zero() : u[0];
  }

  UPoly scale(const UPoly& f, const T& s) const {
    UPoly out;
    for (const auto& c : f) out.push_back(ops_.mul(c, s));
    trim(out);
    return out;
  }

  UPoly sub(UPoly a, const UPoly& b) const {
    if (a.size() < b.size()) a.resize(b.size(), ops_.zero());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = ops_.sub(a[i], b[i]);
    trim(a);
    return a;
  }

  UPoly dx(const UPoly& f) const {
    UPoly out;
    for (std::size_t i = 1; i < f.size(); ++i) out.push_back(ops_.mul(f[i], ops_.from(BigInt(i))));
    trim(out);
    return out;
  }

 private:
  T power(std::size_t i, int e) const {
    T r = ops_.from(BigInt(1));
    for (int k = 0; k < e; ++k) r = ops_.mul(r, point_[i]);
    return r;
  }
  void trim(UPoly& f) const {
    while (!f.empty() && ops_.is_zero(f.back())) f.pop_back();
  }

  const Ops& ops_;
  const std::vector<T>& point_;
};

template <class Ops>
struct Generic {
  std::vector<std::vector<typename Ops::T>> psi;
  std::vector<std::vector<std::vector<typename Ops::T>>> dpsi;
  std::vector<typename Ops::T> dpsi1_dx;
};

template <class Ops>
Generic<Ops> evaluate_generic(const ModEqData& d, const Ops& ops, const std::vector<typename Ops::T>& point) {
  if (static_cast<int>(point.size()) != d.nvars())
    fail(ErrorKind::Validation, std::string(modeq_kind_name(d.kind)) + " data takes " + std::to_string(d.nvars()) +
                                    " coordinates, got " + std::to_string(point.size()));
  Evaluator<Ops> ev(ops, point);
  const auto den = ev.scalar(d.den);
  if (ops.is_zero(den)) fail(ErrorKind::DenominatorVanishes, "denominator vanishes at the point");
  const auto inv_den = ops.div(ops.from(BigInt(1)), den);
  const auto inv_den2 = ops.mul(inv_den, inv_den);
  Generic<Ops> out;
  for (const auto& num : d.num) {
    const auto N = ev.eval(num);
    out.psi.push_back(ev.scale(N, inv_den));
    std::vector<std::vector<typename Ops::T>> parts;
    for (int i = 0; i < d.nvars(); ++i) {
      // (dN D - N dD) / D^2
      const auto dN = ev.eval(num, i);
      const auto dD = ev.scalar(d.den, i);
      parts.push_back(ev.scale(ev.sub(ev.scale(dN, den), ev.scale(N, dD)), inv_den2));
    }
    out.dpsi.push_back(std::move(parts));
  }
  out.dpsi1_dx = ev.dx(out.psi.front());
  return out;
}

}  // namespace

EvaluatedModEq evaluate_at(const ModEqData& data, const Field& K, const std::vector<Elem>& point) {
  const FqOps ops{K};
  auto g = evaluate_generic(data, ops, point);
  EvaluatedModEq e{K, {}, {}, {}};
  for (auto& f : g.psi) e.psi.push_back(poly::from_elems(std::move(f)));
  for (auto& parts : g.dpsi) {
    std::vector<Poly> row;
    for (auto& f : parts) row.push_back(poly::from_elems(std::move(f)));
    e.dpsi.push_back(std::move(row));
  }
  e.dpsi1_dx = poly::from_elems(std::move(g.dpsi1_dx));
  return e;
}

RationalModEq evaluate_at(const ModEqData& data, const std::vector<Rational>& point) {
  auto g = evaluate_generic(data, QOps{}, point);
  return {std::move(g.psi), std::move(g.dpsi), std::move(g.dpsi1_dx)};
}

std::vector<Rational> parse_point(std::string_view text) {
  std::vector<Rational> out;
  std::string s(text);
  std::size_t start = 0;
  for (;;) {
    const auto comma = s.find(',', start);
    std::string item = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    item.erase(std::remove_if(item.begin(), item.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); }),
               item.end());
    const auto slash = item.find('/');
    auto integer = [&](const std::string& t) {
      std::string_view digits = t;
      if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
      if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        fail(ErrorKind::Parse, "bad rational coordinate '" + item + "'");
      BigInt v{std::string(digits)};
      return t.front() == '-' ? BigInt(-v) : v;
    };
    if (slash == std::string::npos) {
      out.emplace_back(integer(item));
    } else {
      const BigInt den = integer(item.substr(slash + 1));
      if (den == 0) fail(ErrorKind::Parse, "zero denominator in '" + item + "'");
      out.emplace_back(integer(item.substr(0, slash)), den);
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string point_to_string(const std::vector<Rational>& point) {
  std::string s;
  for (std::size_t i = 0; i < point.size(); ++i) s += (i ? "," : "") + point[i].str();
  return s;
}

std::vector<Elem> reduce_point(const Field& K, const std::vector<Rational>& point) {
  std::vector<Elem> out;
  for (const auto& r : point) {
    const Elem den = K.from_big(boost::multiprecision::denominator(r));
    if (K.is_zero(den)) fail(ErrorKind::Validation, "coordinate " + r.str() + " has no image in the field");
    out.push_back(K.div(K.from_big(boost::multiprecision::numerator(r)), den));
  }
  return out;
}

IsogenousInvariants isogenous_invariants(const EvaluatedModEq& e) {
  const Field& K = e.K;
  IsogenousInvariants out;
  const Poly& psi1 = e.psi.front();
  if (psi1.degree() < 1) return out;
  Rng rng(0x6d6f64);
  const auto roots = poly_roots_in_field(K, psi1, rng);
  for (std::size_t i = 0; i < roots.size();) {
    std::size_t j = i;
    while (j < roots.size() && roots[j] == roots[i]) ++j;
    const int mult = static_cast<int>(j - i);
    const Elem& r = roots[i];
    const Elem d = poly::eval(K, e.dpsi1_dx, r);
    if (mult > 1 || K.is_zero(d)) {
      out.degenerate.push_back({r, mult});
    } else {
      std::vector<Elem> t{r};
      for (std::size_t k = 1; k < e.psi.size(); ++k) t.push_back(K.div(poly::eval(K, e.psi[k], r), d));
      out.tuples.push_back(std::move(t));
    }
    i = j;
  }
  std::sort(out.tuples.begin(), out.tuples.end());
  return out;
}

}  // namespace g2c
