#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "g2count/modeq.hpp"

namespace g2c {

const char* modeq_kind_name(ModEqKind k) {
  switch (k) {
    case ModEqKind::SiegelIgusa: return "siegel-igusa";
    case ModEqKind::HilbertGundlach: return "hilbert-gundlach";
    case ModEqKind::HilbertIgusa: return "hilbert-igusa";
  }
  return "?";
}

std::int64_t ModEqData::covering_degree() const {
  const std::int64_t l = level.ell;
  return kind == ModEqKind::SiegelIgusa ? l * l * l + l * l + l + 1 : l + 1;
}

int degree_in_x(const MPoly& f) {
  int d = -1;
  for (const auto& [m, c] : f) d = std::max(d, m.back());
  return d;
}

int total_degree_in_j(const MPoly& f, int nvars) {
  int d = -1;
  for (const auto& [m, c] : f) {
    int t = 0;
    for (int i = 0; i < nvars; ++i) t += m[static_cast<std::size_t>(i)];
    d = std::max(d, t);
  }
  return d;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  for (;;) {
    const auto pos = s.find(sep);
    out.push_back(trim(s.substr(0, pos)));
    if (pos == std::string_view::npos) return out;
    s.remove_prefix(pos + 1);
  }
}

[[noreturn]] void parse_error(int line, const std::string& what) {
  fail(ErrorKind::Parse, "modeq line " + std::to_string(line) + ": " + what);
}

std::int64_t parse_int(std::string_view s, int line) {
  std::int64_t v = 0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (s.empty() || ec != std::errc{} || ptr != end) parse_error(line, "expected an integer, got '" + std::string(s) + "'");
  return v;
}

BigInt parse_big(std::string_view s, int line) {
  std::string_view digits = s;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    parse_error(line, "expected an integer coefficient, got '" + std::string(s) + "'");
  BigInt v{std::string(digits)};
  return s.front() == '-' ? BigInt(-v) : v;
}

ModEqLevel parse_level(ModEqKind kind, std::string_view s, int line) {
  ModEqLevel lv;
  if (kind == ModEqKind::SiegelIgusa) {
    lv.ell = parse_int(s, line);
    if (lv.ell < 2 || !is_prime_u64(static_cast<std::uint64_t>(lv.ell))) parse_error(line, "level must be a prime");
    return lv;
  }
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') parse_error(line, "Hilbert level must read (a,b,D)");
  const auto parts = split(s.substr(1, s.size() - 2), ',');
  if (parts.size() != 3) parse_error(line, "Hilbert level must read (a,b,D)");
  const RQElem beta{parse_int(parts[0], line), parse_int(parts[1], line)};
  lv.disc = parse_int(parts[2], line);
  if (kind == ModEqKind::HilbertGundlach && lv.disc != 5) parse_error(line, "Gundlach invariants require D = 5");
  const auto F = RealQuadField::make(lv.disc);
  lv.ell = F.norm(beta);
  if (!F.totally_positive(beta) || lv.ell < 2 || !is_prime_u64(static_cast<std::uint64_t>(lv.ell)))
    parse_error(line, "beta must be totally positive of prime norm");
  lv.beta = beta;
  return lv;
}

std::string level_string(const ModEqData& d) {
  if (!d.level.beta) return std::to_string(d.level.ell);
  return "(" + std::to_string(d.level.beta->a) + "," + std::to_string(d.level.beta->b) + "," +
         std::to_string(d.level.disc) + ")";
}

void write_poly(std::ostringstream& out, const MPoly& f) {
  for (const auto& [m, c] : f) {
    for (std::size_t i = 0; i < m.size(); ++i) out << (i ? "," : "") << m[i];
    out << ": " << c << "\n";
  }
}

}  // namespace

ModEqData parse_modeq(std::string_view text) {
  ModEqData d;
  bool have_header = false;
  MPoly* section = nullptr;
  std::size_t width = 0;
  bool have_den = false;
  int line_no = 0;
  std::istringstream in{std::string(text)};
  for (std::string raw; std::getline(in, raw);) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (!have_header) {
      std::map<std::string, std::string, std::less<>> kv;
      for (auto item : split(line, ';')) {
        const auto eq = item.find('=');
        if (eq == std::string_view::npos) parse_error(line_no, "header items must read key=value");
        if (!kv.emplace(std::string(trim(item.substr(0, eq))), std::string(trim(item.substr(eq + 1)))).second)
          parse_error(line_no, "repeated header key");
      }
      for (const char* key : {"kind", "level", "norm"})
        if (!kv.contains(key)) parse_error(line_no, std::string("header lacks ") + key);
      const std::string& kind = kv["kind"];
      if (kind == "siegel-igusa") d.kind = ModEqKind::SiegelIgusa;
      else if (kind == "hilbert-gundlach") d.kind = ModEqKind::HilbertGundlach;
      else if (kind == "hilbert-igusa") d.kind = ModEqKind::HilbertIgusa;
      else parse_error(line_no, "unknown kind '" + kind + "'");
      d.level = parse_level(d.kind, kv["level"], line_no);
      d.norm = kv["norm"];
      if (d.norm.empty()) parse_error(line_no, "empty normalization tag");
      if (kv.contains("version")) d.version = static_cast<int>(parse_int(kv["version"], line_no));
      if (d.version != 1) parse_error(line_no, "unsupported version " + std::to_string(d.version));
      for (const auto& [k, v] : kv)
        if (k != "kind" && k != "level" && k != "norm" && k != "version") parse_error(line_no, "unknown header key '" + k + "'");
      d.num.resize(static_cast<std::size_t>(d.nvars()));
      have_header = true;
      continue;
    }

    if (line.back() == ':') {
      const auto name = trim(line.substr(0, line.size() - 1));
      if (name == "den") {
        if (have_den) parse_error(line_no, "repeated den section");
        have_den = true;
        section = &d.den;
        width = static_cast<std::size_t>(d.nvars());
      } else if (name.starts_with("num")) {
        const auto k = parse_int(trim(name.substr(3)), line_no);
        if (k < 1 || k > d.nvars()) parse_error(line_no, "num index out of range");
        section = &d.num[static_cast<std::size_t>(k - 1)];
        if (!section->empty()) parse_error(line_no, "repeated num section");
        width = static_cast<std::size_t>(d.nvars()) + 1;
      } else {
        parse_error(line_no, "unknown section '" + std::string(name) + "'");
      }
      continue;
    }

    if (!section) parse_error(line_no, "monomial outside a section");
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) parse_error(line_no, "monomial lines read e1,...,en: coefficient");
    const auto exps = split(line.substr(0, colon), ',');
    if (exps.size() != width)
      parse_error(line_no, "expected " + std::to_string(width) + " exponents, got " + std::to_string(exps.size()));
    Monomial m;
    for (auto e : exps) {
      const auto v = parse_int(e, line_no);
      if (v < 0 || v > 1'000'000) parse_error(line_no, "exponent out of range");
      m.push_back(static_cast<int>(v));
    }
    BigInt c = parse_big(trim(line.substr(colon + 1)), line_no);
    if (section->contains(m)) parse_error(line_no, "repeated monomial");
    if (c != 0) section->emplace(std::move(m), std::move(c));
  }
  if (!have_header) fail(ErrorKind::Parse, "modeq file is empty");
  if (!have_den) fail(ErrorKind::Parse, "modeq file lacks a den section");
  validate_modeq(d);
  return d;
}

std::string serialize_modeq(const ModEqData& d) {
  std::ostringstream out;
  out << "kind=" << modeq_kind_name(d.kind) << ";level=" << level_string(d) << ";norm=" << d.norm
      << ";version=" << d.version << "\n";
  for (std::size_t k = 0; k < d.num.size(); ++k) {
    out << "num " << k + 1 << ":\n";
    write_poly(out, d.num[k]);
  }
  out << "den:\n";
  write_poly(out, d.den);
  return out.str();
}

ModEqData load_modeq_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Usage, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_modeq(buf.str());
  } catch (const Error& e) {
    fail(e.kind(), path.filename().string() + ": " + e.what());
  }
}

void validate_modeq(const ModEqData& d) {
  const bool siegel = d.kind == ModEqKind::SiegelIgusa;
  const std::string thm = siegel ? "Siegel degree bound" : "Hilbert degree bound";
  const std::int64_t dd = d.covering_degree();
  const std::string dname = siegel ? "d(" + std::to_string(d.level.ell) + ")" : "d(beta)";
  if (static_cast<int>(d.num.size()) != d.nvars()) fail(ErrorKind::Validation, "wrong number of numerators");
  if (d.den.empty()) fail(ErrorKind::Validation, "denominator is zero");
  const int tden = total_degree_in_j(d.den, d.nvars());
  for (std::size_t k = 0; k < d.num.size(); ++k) {
    const std::int64_t want = k == 0 ? dd : dd - 1;
    const int got = degree_in_x(d.num[k]);
    if (got != want)
      fail(ErrorKind::Validation, "deg_X Psi_" + std::to_string(k + 1) + " = " + std::to_string(got) + ", the " + thm +
                                      " requires " + dname + (k ? " - 1 = " : " = ") + std::to_string(want));
    // Total degree of a fraction: the larger of numerator and denominator.
    const int tot = std::max(total_degree_in_j(d.num[k], d.nvars()), tden);
    const std::int64_t numer = siegel && k == 0 ? 5 : 10;
    if (d.kind != ModEqKind::HilbertIgusa && 3 * static_cast<std::int64_t>(tot) > numer * dd)
      fail(ErrorKind::Validation, "total degree of Psi_" + std::to_string(k + 1) + " in J is " + std::to_string(tot) +
                                      ", above the " + thm + " " + std::to_string(numer) + "*" + dname + "/3");
  }
}

}  // namespace g2c
