#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "semispec/kernel.hpp"
#include "semispec/localize.hpp"

namespace semispec {

enum class SpectrumKind { Spec, Sp };
std::string to_string(SpectrumKind kind);

/// Largest carrier enumerated subset-wise; SEMISPEC_SPECTRUM_LIMIT overrides.
std::size_t spectrum_limit_from_env(std::size_t fallback = 16);

/// Finite topological space given by the minimal open neighbourhood of each
/// point. Open sets are the unions of minimal opens.
class FiniteTopology {
 public:
  explicit FiniteTopology(std::vector<ElementSet> minimal_opens);

  std::size_t size() const { return minimal_.size(); }
  const ElementSet& minimal_open(std::size_t p) const { return minimal_[p]; }
  bool is_open(const ElementSet& s) const;
  bool is_closed(const ElementSet& s) const { return is_open(s.complement()); }
  ElementSet closure_of_point(std::size_t p) const;
  /// Nonempty and any two nonempty relatively open subsets meet.
  bool is_irreducible(const ElementSet& closed) const;

  /// Every open set, sorted. Throws ResourceError above 2^20 candidate sets.
  std::vector<ElementSet> opens() const;

  struct Dimension {
    std::size_t value = 0;
    /// Longest strict chain of distinct point closures.
    std::size_t specialization_chain = 0;
    /// True when all closed sets were scanned for irreducibility; false when
    /// only point closures were (every irreducible closed subset of a finite
    /// space is one).
    bool exhaustive = false;
    std::size_t irreducible_closed_sets = 0;
  };
  /// Krull dimension. Scans every closed set when the space has at most
  /// exhaustive_limit points.
  Dimension dimension(std::size_t exhaustive_limit = 20) const;

 private:
  std::vector<ElementSet> minimal_;
};

/// Points of Spec A or Sp A for a finite A, with the principal opens D(a)
/// (D̃(a) for Sp) as point sets. Points are sorted.
class SpectrumSpace {
 public:
  SpectrumSpace(SemiringRef ring, SpectrumKind kind, std::vector<ElementSet> points);

  const SemiringRef& ring() const { return ring_; }
  SpectrumKind kind() const { return kind_; }
  const std::vector<ElementSet>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  std::optional<std::size_t> index_of(const ElementSet& ideal) const;

  const ElementSet& D(Elem a) const { return basis_[a]; }
  ElementSet whole() const { return ElementSet::full(points_.size()); }
  /// {p | S ⊆ p}.
  ElementSet V(const ElementSet& elements) const;
  /// p ⊆ q, i.e. q lies in the closure of p.
  bool specializes(std::size_t p, std::size_t q) const {
    return points_[p].is_subset_of(points_[q]);
  }
  /// ⋂_{a ∉ p} D(a) = {q | q ⊆ p}.
  ElementSet minimal_open(std::size_t p) const;
  FiniteTopology topology() const;

  /// For Sp of an idempotent semiring: whether the subtractive primes equal
  /// the kernels of the homomorphisms to 𝔹. Empty when not checked.
  std::optional<bool> hom_agreement;

 private:
  SemiringRef ring_;
  SpectrumKind kind_;
  std::vector<ElementSet> points_;
  std::vector<ElementSet> basis_;
};

/// Prime ideals of A. Throws ResourceError when |A| exceeds the limit.
SpectrumSpace spec_enumerate(const SemiringRef& a, std::size_t limit = 16);
/// Subtractive primes. For idempotent A they are recomputed as kernels of
/// Hom(A, 𝔹); above the limit only that route is used.
SpectrumSpace sp_enumerate(const SemiringRef& a, std::size_t limit = 16);
SpectrumSpace enumerate_spectrum(const SemiringRef& a, SpectrumKind kind,
                                 std::size_t limit = 16);
/// Kernels of the homomorphisms A → 𝔹, sorted and deduplicated.
std::vector<ElementSet> hom_kernels_to_bool(const FiniteSemiring& a);

struct CoverCheck {
  bool topological = false;
  bool algebraic = false;
  bool agree() const { return topological == algebraic; }
};

/// Whether the D(s), s ∈ S, cover the whole space: as point sets, and via
/// ⟨S⟩ = A (Spec) or the subtractive closure of ⟨S⟩ being A (Sp).
CoverCheck cover_check(const std::vector<Elem>& s, const SpectrumSpace& space);
/// ⋃ D(s) = D(a) as point sets.
bool covers_open(const std::vector<Elem>& s, Elem a, const SpectrumSpace& space);

struct InducedMap {
  /// Point q of the codomain's spectrum ↦ index of f⁻¹(q) in the domain's.
  std::vector<std::size_t> map;
  /// f⁻¹(q) was a point of the domain spectrum for every q.
  bool well_defined = true;
  /// Preimage of every D(a) is D(f(a)).
  bool continuous = true;
};

/// Spec(f) or Sp(f) for f: A → B, from B's spectrum to A's.
InducedMap induced_map(std::span<const Elem> f, const SpectrumSpace& domain_space,
                       const SpectrumSpace& codomain_space);

struct LocalizationHomeo {
  bool injective = false;
  bool image_matches = false;  // image = {p | p ∩ S = ∅}
  bool open_embedding = false; // D(a/s) ↦ D(a) ∩ image
  bool surjective = false;
  bool ok() const { return injective && image_matches && open_embedding; }
};

LocalizationHomeo localization_homeo_check(const SemiringRef& a, const ElementSet& s,
                                           SpectrumKind kind, std::size_t limit = 16);
/// Sp(χ): Sp A◇ → Sp A is a homeomorphism.
bool hardening_homeo_check(const SemiringRef& a, std::size_t limit = 16);

/// Symbolic finite model of Spec ℕ (or Sp ℕ) with the primes up to a bound:
/// points {0}, pℕ for p ≤ bound, and ℕ∖{1} for Spec.
class NatSpectrumModel {
 public:
  NatSpectrumModel(std::uint64_t prime_bound, SpectrumKind kind);

  SpectrumKind kind() const { return kind_; }
  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<std::uint64_t>& primes() const { return primes_; }
  std::size_t zero_point() const { return 0; }
  std::optional<std::size_t> max_point() const;
  /// Whether n lies in the ideal of the given point.
  bool point_contains(std::size_t point, std::uint64_t n) const;
  /// {points not containing n}.
  ElementSet D(std::uint64_t n) const;
  FiniteTopology topology() const;

 private:
  SpectrumKind kind_;
  std::vector<std::uint64_t> primes_;
  std::vector<std::string> labels_;
};

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);

struct NatModelReport {
  std::uint64_t bound = 0;
  bool pair_tails = false;        // ⟨p,q⟩ ⊇ [(p−1)q, ∞) for p < q ≤ bound
  bool primes_are_kernels = false; // pℕ prime and subtractive
  bool max_not_subtractive = false; // ℕ∖{1} prime, 1+2=3 witness
  std::size_t pairs_checked = 0;
  bool ok() const { return pair_tails && primes_are_kernels && max_not_subtractive; }
};
NatModelReport nat_model_verify(std::uint64_t bound);

/// Specialization order, edges from the more generic point to the more
/// special one (covering relations only).
std::string to_dot(const SpectrumSpace& space);
/// {"points":[{"subset":[...],"subtractive":b}],"basis":{"a":[point ids]}}
nlohmann::json to_json(const SpectrumSpace& space);

}  // namespace semispec
