#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "semispec/builtin.hpp"
#include "semispec/kernel.hpp"
#include "semispec/poly.hpp"

namespace semispec {

/// Multiplicative submonoid of a finite semiring, as an explicit subset.
struct MultSubmonoid {
  SemiringRef ambient;
  ElementSet members;
};

bool is_mult_submonoid(const FiniteSemiring& a, const ElementSet& s);
/// Least submonoid containing the generators.
ElementSet generated_submonoid(const FiniteSemiring& a, const std::vector<Elem>& gens);
/// {b | ∃ c, b·c ∈ S}.
ElementSet saturate(const FiniteSemiring& a, const ElementSet& s);
MultSubmonoid saturate(const MultSubmonoid& s);

/// a₁/s₁ = a₂/s₂ iff a₁s₂u = a₂s₁u for some u ∈ S.
bool fractions_equal(const FiniteSemiring& a, const ElementSet& s, Elem a1, Elem s1,
                     Elem a2, Elem s2);

/// S⁻¹A for finite A. Class i is represented by the least fraction (a, s) in
/// (numerator, denominator) order, and classes are numbered in that order.
class LocalizedSemiring {
 public:
  LocalizedSemiring(SemiringRef base, ElementSet monoid);

  const SemiringRef& base() const { return base_; }
  const ElementSet& monoid() const { return monoid_; }
  const SemiringRef& semiring() const { return semiring_; }
  /// φ_S: A → S⁻¹A.
  const std::vector<Elem>& phi() const { return phi_; }
  Elem class_of(Elem a, Elem s) const;
  std::pair<Elem, Elem> representative(Elem c) const { return reps_[c]; }

 private:
  SemiringRef base_;
  ElementSet monoid_;
  SemiringRef semiring_;
  std::vector<Elem> phi_;
  std::vector<std::pair<Elem, Elem>> reps_;
  std::vector<std::size_t> slot_;             // element -> position in monoid
  std::vector<Elem> cls_;                     // a * |S| + slot -> class
};

/// ∃ b, c with 1 + ab = ac.
bool semi_invertible(const FiniteSemiring& a, Elem x);
/// Idempotent form: ∃ b with 1 ⪯ ab.
bool semi_invertible_idempotent(const FiniteSemiring& a, Elem x);
ElementSet semi_invertibles(const FiniteSemiring& a);
bool is_hard(const FiniteSemiring& a);
/// A◇, the localization at the semi-invertibles.
LocalizedSemiring harden(const SemiringRef& a);

// ---- built-in ℕ ----

bool nat_semi_invertible(const BigInt& n);
/// Searches b, c ≤ bound with 1 + nb = nc.
std::optional<std::pair<std::uint64_t, std::uint64_t>> nat_semi_invertible_witness(
    std::uint64_t n, std::uint64_t bound);
/// Members ≤ bound of the saturation of {base^k}.
std::vector<std::uint64_t> nat_saturate_powers(std::uint64_t base, std::uint64_t bound);

// ---- 𝔹[x] and its hardening ----

struct BoolFraction {
  BoolPoly num;
  BoolPoly den;
};

BoolFraction operator+(const BoolFraction& a, const BoolFraction& b);
BoolFraction operator*(const BoolFraction& a, const BoolFraction& b);

/// f/g ↦ (ord₀ f, deg f − deg g); 0 ↦ (+∞, −∞). Throws PreconditionError
/// when g is not semi-invertible.
MinMaxPair bx_hardening_iso(const BoolFraction& f);
/// A fraction mapping to the given point.
BoolFraction bx_hardening_preimage(const MinMaxPair& p);

/// Searches a semi-invertible u with support in [0, degree_bound] and
/// f₁g₂u = f₂g₁u.
bool bool_fraction_witness_equal(const BoolFraction& a, const BoolFraction& b,
                                 unsigned degree_bound);

}  // namespace semispec
