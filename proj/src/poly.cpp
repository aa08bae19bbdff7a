#include "semispec/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace semispec {

Exponent exponent_sum(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

BoolPoly::BoolPoly(std::size_t nvars, std::set<Exponent> support)
    : nvars_(nvars), support_(std::move(support)) {
  for (const auto& e : support_)
    if (e.size() != nvars_) throw PreconditionError("exponent length mismatch");
}

BoolPoly BoolPoly::univariate(std::initializer_list<std::uint32_t> exps) {
  return univariate(std::vector<std::uint32_t>(exps));
}

BoolPoly BoolPoly::univariate(const std::vector<std::uint32_t>& exps) {
  std::set<Exponent> s;
  for (auto k : exps) s.insert(Exponent{k});
  return BoolPoly(1, std::move(s));
}

BoolPoly operator+(const BoolPoly& a, const BoolPoly& b) {
  BoolPoly r = a;
  r.support_.insert(b.support_.begin(), b.support_.end());
  return r;
}

BoolPoly operator*(const BoolPoly& a, const BoolPoly& b) {
  BoolPoly r(a.nvars_);
  for (const auto& ea : a.support_)
    for (const auto& eb : b.support_) r.support_.insert(exponent_sum(ea, eb));
  return r;
}

IdemPoly<Bool> BoolPoly::to_idem() const {
  IdemPoly<Bool> p(nvars_);
  for (const auto& e : support_) p.add_term(e, Bool::one());
  return p;
}

BoolPoly BoolPoly::from_idem(const IdemPoly<Bool>& p) {
  BoolPoly r(p.nvars());
  for (const auto& [e, c] : p.coeffs()) r.support_.insert(e);
  return r;
}

namespace {

std::string monomial_string(const Exponent& e, const std::vector<std::string>& vars) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += i < vars.size() ? vars[i] : "x" + std::to_string(i + 1);
    if (e[i] > 1) out += '^' + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

}  // namespace

std::string BoolPoly::to_string(const std::vector<std::string>& vars) const {
  if (support_.empty()) return "0";
  std::string out;
  for (const auto& e : support_) {
    if (!out.empty()) out += '+';
    out += monomial_string(e, vars);
  }
  return out;
}

bool poly_semi_invertible(const BoolPoly& f) { return f.has_constant_term(); }

OrdDeg bool_poly_ord_deg(const BoolPoly& f) {
  if (f.nvars() != 1) throw PreconditionError("ord/deg needs a univariate polynomial");
  if (f.is_zero()) return {true, 0, 0};
  return {false, f.support().begin()->at(0), f.support().rbegin()->at(0)};
}

RatPoly::RatPoly(std::map<unsigned, BigRat> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

RatPoly RatPoly::constant(const BigRat& c) { return RatPoly({{0u, c}}); }
RatPoly RatPoly::monomial(unsigned k, const BigRat& c) { return RatPoly({{k, c}}); }

void RatPoly::normalize() {
  std::erase_if(coeffs_, [](const auto& kv) { return kv.second == 0; });
}

BigRat RatPoly::coeff(unsigned k) const {
  auto it = coeffs_.find(k);
  return it == coeffs_.end() ? BigRat(0) : it->second;
}

unsigned RatPoly::degree() const {
  if (coeffs_.empty()) throw PreconditionError("degree of the zero polynomial");
  return coeffs_.rbegin()->first;
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
  RatPoly r = a;
  for (const auto& [k, c] : b.coeffs_) r.coeffs_[k] += c;
  r.normalize();
  return r;
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) {
  RatPoly r = a;
  for (const auto& [k, c] : b.coeffs_) r.coeffs_[k] -= c;
  r.normalize();
  return r;
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  RatPoly r;
  for (const auto& [ka, ca] : a.coeffs_)
    for (const auto& [kb, cb] : b.coeffs_) r.coeffs_[ka + kb] += ca * cb;
  r.normalize();
  return r;
}

std::string RatPoly::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    const auto& [k, c] = *it;
    BigRat mag = c < 0 ? BigRat(-c) : c;
    out += out.empty() ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
    const bool unit = mag == 1;
    if (!unit || k == 0) out += mag.str();
    if (k > 0) {
      if (!unit) out += '*';
      out += var;
      if (k > 1) out += '^' + std::to_string(k);
    }
  }
  return out;
}

DivMod divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw PreconditionError("division by the zero polynomial");
  RatPoly q, r = a;
  const unsigned db = b.degree();
  const BigRat lead = b.coeff(db);
  while (!r.is_zero() && r.degree() >= db) {
    const unsigned k = r.degree() - db;
    RatPoly t = RatPoly::monomial(k, r.coeff(r.degree()) / lead);
    q = q + t;
    r = r - t * b;
  }
  return {q, r};
}

bool ktt_member(const RatPoly& f) { return f.coeff(1) == 0; }

namespace {

std::string strip(const std::string& s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

std::string replace_all(std::string s, const std::string& from, const std::string& to) {
  for (std::size_t pos = 0; (pos = s.find(from, pos)) != std::string::npos; pos += to.size())
    s.replace(pos, from.size(), to);
  return s;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

bool is_numeric(const std::string& f) {
  return !f.empty() && (std::isdigit(static_cast<unsigned char>(f[0])) || f[0] == '-');
}

BigRat parse_rational(const std::string& f) {
  try {
    auto slash = f.find('/');
    if (slash == std::string::npos) return BigRat(BigInt(f));
    BigInt den(f.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + f + "'");
    return BigRat(BigInt(f.substr(0, slash)), den);
  } catch (const std::runtime_error&) {
    throw ParseError("bad number '" + f + "'");
  }
}

// Adds var^k (or var) to e; rejects unknown variables.
void apply_power(const std::string& f, const std::vector<std::string>& vars, Exponent& e) {
  auto caret = f.find('^');
  const std::string name = f.substr(0, caret);
  auto it = std::find(vars.begin(), vars.end(), name);
  if (it == vars.end()) throw ParseError("unknown variable '" + name + "'");
  std::uint32_t k = 1;
  if (caret != std::string::npos) {
    const std::string ks = f.substr(caret + 1);
    if (ks.empty() || !std::all_of(ks.begin(), ks.end(), ::isdigit))
      throw ParseError("bad exponent in '" + f + "'");
    k = static_cast<std::uint32_t>(std::stoul(ks));
  }
  e[static_cast<std::size_t>(it - vars.begin())] += k;
}

}  // namespace

BoolPoly parse_bool_poly(const std::string& text, const std::vector<std::string>& vars) {
  const std::string s = strip(text);
  if (s.empty()) throw ParseError("empty polynomial");
  std::set<Exponent> support;
  if (s == "0") return BoolPoly(vars.size());
  for (const auto& term : split(s, '+')) {
    if (term.empty()) throw ParseError("empty term in '" + text + "'");
    Exponent e(vars.size(), 0);
    bool zero = false;
    for (const auto& f : split(term, '*')) {
      if (f == "1") continue;
      if (f == "0") {
        zero = true;
        continue;
      }
      apply_power(f, vars, e);
    }
    if (!zero) support.insert(e);
  }
  return BoolPoly(vars.size(), std::move(support));
}

IdemPoly<TropicalRat> parse_tropical_poly(const std::string& text,
                                          const std::vector<std::string>& vars) {
  std::string s = strip(text);
  s = replace_all(s, "\xE2\x8A\x99", "*");  // ⊙
  s = replace_all(s, "\xE2\x8A\x95", "+");  // ⊕
  if (s.empty()) throw ParseError("empty polynomial");
  IdemPoly<TropicalRat> p(vars.size());
  for (const auto& term : split(s, '+')) {
    if (term.empty()) throw ParseError("empty term in '" + text + "'");
    Exponent e(vars.size(), 0);
    TropicalRat c = TropicalRat::one();
    for (const auto& f : split(term, '*')) {
      if (f == "inf")
        c = TropicalRat::zero();
      else if (is_numeric(f))
        c = c * TropicalRat{parse_rational(f)};
      else
        apply_power(f, vars, e);
    }
    p.add_term(e, c);
  }
  return p;
}

RatPoly parse_rat_poly(const std::string& text, const std::string& var) {
  const std::string s = strip(text);
  if (s.empty()) throw ParseError("empty polynomial");
  RatPoly out;
  std::size_t i = 0;
  const std::vector<std::string> vars{var};
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    }
    std::size_t j = i;
    while (j < s.size() && s[j] != '+' && s[j] != '-') ++j;
    const std::string term = s.substr(i, j - i);
    if (term.empty()) throw ParseError("empty term in '" + text + "'");
    BigRat c = sign;
    Exponent e{0};
    for (const auto& f : split(term, '*')) {
      if (is_numeric(f))
        c *= parse_rational(f);
      else
        apply_power(f, vars, e);
    }
    out = out + RatPoly::monomial(e[0], c);
    i = j;
  }
  return out;
}

}  // namespace semispec
