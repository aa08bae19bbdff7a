#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "semispec/builtin.hpp"
#include "semispec/errors.hpp"

namespace semispec {

/// Exponent vector of a monomial; all monomials of one polynomial share the
/// same length (the number of variables).
using Exponent = std::vector<std::uint32_t>;

Exponent exponent_sum(const Exponent& a, const Exponent& b);

/// Polynomial over an idempotent semifield F, stored as its support map with
/// no zero coefficients. Coefficients are never normalized functionally, so
/// x² ⊕ 0 and x² ⊕ 1⊙x ⊕ 0 stay distinct over the tropical semiring.
template <SemiringValue F>
class IdemPoly {
 public:
  explicit IdemPoly(std::size_t nvars = 1) : nvars_(nvars) {}

  static IdemPoly constant(std::size_t nvars, const F& c) {
    IdemPoly p(nvars);
    p.add_term(Exponent(nvars, 0), c);
    return p;
  }
  static IdemPoly monomial(const Exponent& e, const F& c) {
    IdemPoly p(e.size());
    p.add_term(e, c);
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  const std::map<Exponent, F>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  void add_term(const Exponent& e, const F& c) {
    if (e.size() != nvars_) throw PreconditionError("exponent length mismatch");
    if (c == F::zero()) return;
    auto it = coeffs_.find(e);
    if (it == coeffs_.end()) {
      coeffs_.emplace(e, c);
    } else {
      it->second = it->second + c;
      if (it->second == F::zero()) coeffs_.erase(it);
    }
  }

  F coeff(const Exponent& e) const {
    auto it = coeffs_.find(e);
    return it == coeffs_.end() ? F::zero() : it->second;
  }

  friend IdemPoly operator+(const IdemPoly& a, const IdemPoly& b) {
    IdemPoly r = a;
    for (const auto& [e, c] : b.coeffs_) r.add_term(e, c);
    return r;
  }
  friend IdemPoly operator*(const IdemPoly& a, const IdemPoly& b) {
    IdemPoly r(a.nvars_);
    for (const auto& [ea, ca] : a.coeffs_)
      for (const auto& [eb, cb] : b.coeffs_) r.add_term(exponent_sum(ea, eb), ca * cb);
    return r;
  }
  friend bool operator==(const IdemPoly& a, const IdemPoly& b) {
    return a.nvars_ == b.nvars_ && a.coeffs_ == b.coeffs_;
  }

 private:
  std::size_t nvars_;
  std::map<Exponent, F> coeffs_;
};

template <SemiringValue F>
F idem_poly_eval_at_zero(const IdemPoly<F>& f) {
  return f.coeff(Exponent(f.nvars(), 0));
}

/// Over an idempotent semifield, f is semi-invertible iff f(0) ≠ 0.
template <SemiringValue F>
bool poly_semi_invertible(const IdemPoly<F>& f) {
  return !(idem_poly_eval_at_zero(f) == F::zero());
}

/// Polynomial over 𝔹 as a support set: sum is union, product is the
/// Minkowski sum of supports.
class BoolPoly {
 public:
  explicit BoolPoly(std::size_t nvars = 1) : nvars_(nvars) {}
  BoolPoly(std::size_t nvars, std::set<Exponent> support);

  static BoolPoly one(std::size_t nvars) { return BoolPoly(nvars, {Exponent(nvars, 0)}); }
  /// Univariate polynomial with the given exponents.
  static BoolPoly univariate(std::initializer_list<std::uint32_t> exps);
  static BoolPoly univariate(const std::vector<std::uint32_t>& exps);

  std::size_t nvars() const { return nvars_; }
  const std::set<Exponent>& support() const { return support_; }
  bool is_zero() const { return support_.empty(); }
  bool has_constant_term() const { return support_.count(Exponent(nvars_, 0)) > 0; }

  friend BoolPoly operator+(const BoolPoly& a, const BoolPoly& b);
  friend BoolPoly operator*(const BoolPoly& a, const BoolPoly& b);
  friend bool operator==(const BoolPoly&, const BoolPoly&) = default;
  friend auto operator<=>(const BoolPoly& a, const BoolPoly& b) {
    return a.support_ <=> b.support_;
  }

  IdemPoly<Bool> to_idem() const;
  static BoolPoly from_idem(const IdemPoly<Bool>& p);

  std::string to_string(const std::vector<std::string>& vars = {"x"}) const;

 private:
  std::size_t nvars_;
  std::set<Exponent> support_;
};

bool poly_semi_invertible(const BoolPoly& f);

/// (ord₀ f, deg f) of a univariate Boolean polynomial; zero gives (∞, −∞).
struct OrdDeg {
  bool zero = false;
  std::uint32_t ord = 0;
  std::uint32_t deg = 0;
  friend bool operator==(const OrdDeg&, const OrdDeg&) = default;
};
OrdDeg bool_poly_ord_deg(const BoolPoly& f);

/// Univariate polynomial with exact rational coefficients.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::map<unsigned, BigRat> coeffs);
  static RatPoly constant(const BigRat& c);
  static RatPoly monomial(unsigned k, const BigRat& c = 1);

  const std::map<unsigned, BigRat>& coeffs() const { return coeffs_; }
  BigRat coeff(unsigned k) const;
  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; throws PreconditionError on the zero polynomial.
  unsigned degree() const;

  friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator-(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  friend bool operator==(const RatPoly&, const RatPoly&) = default;

  std::string to_string(const std::string& var = "t") const;

 private:
  void normalize();
  std::map<unsigned, BigRat> coeffs_;
};

struct DivMod {
  RatPoly quotient;
  RatPoly remainder;
};
DivMod divmod(const RatPoly& a, const RatPoly& b);

/// Membership in K[t², t³]: the coefficient of t is zero.
bool ktt_member(const RatPoly& f);

/// "1+x^2*y" over 𝔹 with the given variable order.
BoolPoly parse_bool_poly(const std::string& text, const std::vector<std::string>& vars);
/// "2⊙x^3 ⊕ -1/2" (also "*" and "+") over the tropical rationals.
IdemPoly<TropicalRat> parse_tropical_poly(const std::string& text,
                                          const std::vector<std::string>& vars);
/// "t^3 + t^2 - 3/2*t + 1" over ℚ.
RatPoly parse_rat_poly(const std::string& text, const std::string& var = "t");

}  // namespace semispec
