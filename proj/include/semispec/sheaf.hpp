#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "semispec/builtin.hpp"
#include "semispec/localize.hpp"
#include "semispec/presented.hpp"
#include "semispec/spectra.hpp"

namespace semispec {

/// S_U = {b | D(b) ⊇ U} on Spec, or S̃_U = {b | D̃(b) ⊇ U} on Sp; the space's
/// kind decides which.
ElementSet s_of_open(const SpectrumSpace& space, const ElementSet& open);
ElementSet s_of_principal(const SpectrumSpace& space, Elem a);

/// U ↦ S_U⁻¹A on a finite spectrum, with restriction maps. Localizations are
/// cached by their monoid.
class LocalizationPresheaf {
 public:
  explicit LocalizationPresheaf(SpectrumSpace space);

  const SpectrumSpace& space() const { return space_; }
  const SemiringRef& ring() const { return space_.ring(); }

  const LocalizedSemiring& value(const ElementSet& open) const;
  const LocalizedSemiring& principal(Elem a) const { return value(space_.D(a)); }
  /// Stalk at p: the value at the minimal open of p.
  const LocalizedSemiring& stalk(std::size_t p) const {
    return value(space_.minimal_open(p));
  }

  /// Class table L(U) → L(V) for V ⊆ U, a/s ↦ a/s.
  std::vector<Elem> restriction(const ElementSet& from, const ElementSet& to) const;
  /// Every fraction of a class of L(U) lands in the same class of L(V).
  bool restriction_well_defined(const ElementSet& from, const ElementSet& to) const;

 private:
  SpectrumSpace space_;
  mutable std::unordered_map<ElementSet, std::shared_ptr<LocalizedSemiring>, ElementSetHash>
      cache_;
};

/// Compatible families of a finite limit, turned into a semiring with
/// componentwise operations, plus the canonical map from a presheaf value.
struct SectionSemiring {
  SemiringRef semiring;
  std::vector<std::vector<Elem>> families;
  std::vector<Elem> canonical;
  bool canonical_iso = false;
};

/// Eq(∏ L(D(aᵢ)) ⇉ ∏ L(D(aᵢaⱼ))) with the canonical map from L(D(a)).
/// Throws PreconditionError unless the D(aᵢ) cover D(a).
SectionSemiring equalizer_sections(const LocalizationPresheaf& f,
                                   const std::vector<Elem>& cover, Elem a);

/// Covers of D(a) by distinct principal opens inside it, each open named by
/// its least element; equal opens give equal localizations, so nothing is
/// lost. Throws ResourceError above max_opens candidate opens.
std::vector<std::vector<Elem>> principal_covers(const SpectrumSpace& space, Elem a,
                                                std::size_t max_opens = 16);

/// Families (x_p)_{p∈U} with x_p in the stalk at p, compatible under
/// restriction. Families list the values at the points of U in index order.
SectionSemiring alexandrov_sections(const LocalizationPresheaf& f, const ElementSet& open);

/// S_{U_p} = A∖p and the stalk is isomorphic to A_p.
bool stalk_check(const LocalizationPresheaf& f, std::size_t p);

/// Fractions xᵢ'/sᵢ' equal to the given sections with xᵢ's_j' = x_j'sᵢ'.
struct CommonDenominator {
  std::vector<Elem> x;
  std::vector<Elem> s;
  unsigned n = 0;  // the exponent N of the construction
};

/// `locals[i]` is a class of L(D(cover[i])). Throws PreconditionError on an
/// incompatible family.
CommonDenominator common_denominator_form(const LocalizationPresheaf& f,
                                          const std::vector<Elem>& cover,
                                          const std::vector<Elem>& locals);
/// The global element Σ b_j x_j' with Σ b_j s_j' = 1 for a cover of the whole
/// space, or nothing when no such b exists.
std::optional<Elem> glue(const LocalizationPresheaf& f, const std::vector<Elem>& cover,
                         const std::vector<Elem>& locals);

/// ΓA: sections over all of Sp A, with the natural map A → ΓA.
struct GammaResult {
  SemiringRef semiring;
  std::vector<Elem> natural;
};
GammaResult gamma(const SemiringRef& a, std::size_t limit = 64);
bool is_global(const SemiringRef& a, std::size_t limit = 64);
struct Globalization {
  SemiringRef semiring;
  std::size_t iterations = 0;
};
/// Iterates Γ until A → ΓA is an isomorphism. Throws BoundedResultError
/// after max_iter rounds.
Globalization globalize(const SemiringRef& a, std::size_t max_iter = 8, std::size_t limit = 64);

// ---- Spec ℕ ----

/// a / Nᵏ with k minimal.
struct NatFraction {
  BigInt num;
  std::uint64_t base = 1;
  unsigned k = 0;
  static NatFraction make(BigInt num, std::uint64_t base, unsigned k);
  BigRat value() const;
  friend NatFraction operator+(const NatFraction& a, const NatFraction& b);
  friend NatFraction operator*(const NatFraction& a, const NatFraction& b);
  friend bool operator==(const NatFraction&, const NatFraction&) = default;
};

struct NatOpen {
  enum class Shape { Principal, ComplementOfMax } shape = Shape::Principal;
  std::uint64_t n = 1;
};

/// D(N) ↦ "N[1/N]", the complement of the maximal point ↦ "N". Throws
/// UnsupportedError for any other shape.
std::string spec_nat_sections(const NatOpen& open);
/// The natural number glued from x/2ᵃ and y/3ᵇ, or nothing when the pair
/// does not agree in ℕ[1/6].
std::optional<BigInt> glue_nat_pair(const NatFraction& over2, const NatFraction& over3);

// ---- reports ----

struct Report {
  std::string claim;
  bool pass = false;
  std::vector<std::string> witnesses;
  nlohmann::json to_json() const;
};

/// The localization presheaf of K[t², t³] is not a sheaf.
Report ktt_counterexample_verify();
/// A → A[x⁻¹] × A[y⁻¹] is not injective for ℕ[x,y]/(x²∼x, y²∼y, 1+x∼x+y).
Report sp_injectivity_counterexample(CongruenceBound bound = {});

}  // namespace semispec
