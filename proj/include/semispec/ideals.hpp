#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "semispec/kernel.hpp"

namespace semispec {

// ---- finite carriers ----

/// Least ideal containing the generators.
ElementSet ideal_closure(const FiniteSemiring& a, const ElementSet& gens);
ElementSet ideal_closure(const FiniteSemiring& a, const std::vector<Elem>& gens);

bool is_ideal(const FiniteSemiring& a, const ElementSet& s);
/// Proper ideal whose complement is multiplicatively closed.
bool is_prime(const FiniteSemiring& a, const ElementSet& ideal);
/// a+b = c with b, c ∈ I forces a ∈ I; checked over all triples.
bool is_subtractive(const FiniteSemiring& a, const ElementSet& ideal);
/// Down-closed under ⪯; only meaningful in idempotent semirings.
bool is_down_closed(const FiniteSemiring& a, const ElementSet& s);

/// Ī = {a | ∃ b,c ∈ I, a+b = c}.
ElementSet subtractive_closure(const FiniteSemiring& a, const ElementSet& ideal);

/// ∃ n ≥ 0 with aⁿ ∈ I; stops once the powers of a cycle.
bool radical_member(const FiniteSemiring& a, const ElementSet& ideal, Elem x);
ElementSet radical(const FiniteSemiring& a, const ElementSet& ideal);

/// Every ideal, sorted. Built as the closure lattice over single generators.
std::vector<ElementSet> enumerate_ideals(const FiniteSemiring& a);
std::vector<ElementSet> enumerate_primes(const FiniteSemiring& a);

/// Intersection of the primes containing I (the whole carrier if none).
ElementSet prime_intersection(const FiniteSemiring& a, const ElementSet& ideal,
                              const std::vector<ElementSet>& primes);
bool radical_equals_prime_intersection(const FiniteSemiring& a, const ElementSet& ideal);

struct Quotient {
  SemiringRef semiring;
  std::vector<Elem> projection;
};

/// A/∼_I with a ∼_I b iff a+i = b+j for some i, j ∈ I. Classes are numbered
/// by their least element.
Quotient quotient_by_ideal(const FiniteSemiring& a, const ElementSet& ideal);
ElementSet kernel_of(const FiniteSemiring& to, std::span<const Elem> map);

// ---- built-in ℕ ----

/// a ∈ g₁ℕ + … + g_rℕ, decided with the Apéry set of the least nonzero
/// generator. Throws PreconditionError on an empty generator list.
bool nat_ideal_member(const std::vector<std::uint64_t>& gens, std::uint64_t a);

/// Primality checked on all pairs with a·b ≤ bound.
bool is_prime_nat(const std::vector<std::uint64_t>& gens, std::uint64_t bound = 10000);
/// "{0}", "pN" or "N\\{1}" when the ideal has one of the prime shapes of ℕ.
std::optional<std::string> nat_prime_classification(const std::vector<std::uint64_t>& gens);

/// I is subtractive iff it equals gcd(I)·ℕ.
bool is_subtractive_nat(const std::vector<std::uint64_t>& gens);
/// Direct check: c − b ∈ I for all b ≤ c ≤ bound in I.
bool is_subtractive_nat_bounded(const std::vector<std::uint64_t>& gens, std::uint64_t bound);
/// Membership in Ī = gcd(I)·ℕ.
bool nat_subtractive_closure_member(const std::vector<std::uint64_t>& gens, std::uint64_t a);

/// An ideal of a finite semiring (explicit subset or generators) or of ℕ
/// (generators).
class IdealHandle {
 public:
  static IdealHandle finite_subset(SemiringRef ring, ElementSet subset);
  static IdealHandle finite_generated(SemiringRef ring, std::vector<Elem> gens);
  static IdealHandle nat(std::vector<std::uint64_t> gens);

  bool is_nat() const { return !ring_; }
  const SemiringRef& ring() const { return ring_; }
  const std::vector<std::uint64_t>& nat_generators() const { return nat_gens_; }
  const std::vector<Elem>& generators() const { return gens_; }
  /// The member set of a finite ideal.
  const ElementSet& subset() const;
  bool contains(std::uint64_t a) const;

 private:
  SemiringRef ring_;
  std::vector<Elem> gens_;
  std::optional<ElementSet> subset_;
  std::vector<std::uint64_t> nat_gens_;
};

bool is_prime(const IdealHandle& i);
bool is_subtractive(const IdealHandle& i);
/// Finite: the closed subset. ℕ: an ideal generated by gcd(I).
IdealHandle subtractive_closure(const IdealHandle& i);

/// {"ambient": ref, "gens":[...]} or {"ambient": ref, "subset":[...]}; the
/// ambient is a corpus name or "N".
IdealHandle ideal_from_json(const nlohmann::json& doc);
nlohmann::json ideal_to_json(const IdealHandle& i);

}  // namespace semispec
