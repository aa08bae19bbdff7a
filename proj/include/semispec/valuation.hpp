#pragma once

#include <map>
#include <optional>
#include <vector>

#include "semispec/kernel.hpp"
#include "semispec/localize.hpp"
#include "semispec/spectra.hpp"

namespace semispec {

/// v(0)=0, v(1)=1, v(ab)=v(a)v(b), v(a+b) ⪯ v(a)+v(b). Throws
/// PreconditionError when the target is not idempotent.
bool is_g_valuation(const FiniteSemiring& source, const FiniteSemiring& target,
                    std::span<const Elem> v);

/// All G-valuations A → 𝔹 (exhaustive over 2^|A| maps), lexicographic.
std::vector<std::vector<Elem>> enumerate_bool_valuations(const FiniteSemiring& a);

struct ValSpecBijection {
  std::vector<std::vector<Elem>> valuations;
  std::vector<ElementSet> kernels;
  /// Kernels are exactly Spec A and χ_p recovers each valuation.
  bool bijective = false;
};
ValSpecBijection val_spec_bijection(const SemiringRef& a);

/// A_v = {a | v(a) ⪯ 1}.
ElementSet integral_part(const FiniteSemiring& source, const FiniteSemiring& target,
                         std::span<const Elem> v);
bool is_subsemiring(const FiniteSemiring& a, const ElementSet& s);

/// The map ℕ → 𝔹 sending 1 to 1 and everything else to 0 satisfies the
/// G-valuation axioms on all arguments ≤ bound.
bool nat_kernel_max_valuation_check(std::uint64_t bound);

/// Image of ℕ in A, as a semiring with its inclusion.
struct ScalarAlgebra {
  SemiringRef scalars;
  std::vector<Elem> iota;
};
ScalarAlgebra prime_subsemiring(const FiniteSemiring& a);
/// 𝔹 → A; throws PreconditionError unless A is idempotent.
ScalarAlgebra bool_scalars(const FiniteSemiring& a);

/// M_R(A): every R-subsemimodule of a finite A (all are finitely generated),
/// with module sum and product. Modules are sorted, so {0} comes first.
struct SubmoduleLattice {
  SemiringRef base;
  ScalarAlgebra scalars;
  std::vector<ElementSet> modules;
  SemiringRef semiring;
  /// v_R(a) = ⟨a⟩_R as a module index.
  std::vector<Elem> universal;

  std::optional<Elem> index_of(const ElementSet& m) const;
  /// Least R-subsemimodule containing the given elements.
  ElementSet generated(const ElementSet& gens) const;
};

/// Throws ResourceError when there are more than max_modules modules.
SubmoduleLattice build_mra(const SemiringRef& a, const ScalarAlgebra& scalars,
                           std::size_t max_modules = 64);

struct Factorization {
  std::vector<Elem> map;  // M ↦ Σ_{a∈M} v(a)
  bool homomorphism = false;
  bool factors = false;   // f ∘ v_R = v
  std::size_t matching_homs = 0;
  bool unique() const { return matching_homs == 1; }
};
/// Throws PreconditionError unless ι(R) ⊆ A_v.
Factorization factor_through_universal(const SubmoduleLattice& l, const FiniteSemiring& target,
                                       std::span<const Elem> v);

struct VStarReport {
  bool lands_in_spec = false;
  bool bijective = false;
  bool inverse_formula = false;  // q ↦ {M | M ⊆ q}
  bool open = false;             // v*(D̃(⟨a⟩)) = D(a)
  bool basis = false;            // D̃(M) = ⋃_{a∈M} D̃(⟨a⟩)
  std::size_t points = 0;
  bool ok() const { return lands_in_spec && bijective && inverse_formula && open && basis; }
};
VStarReport vstar_homeo_check(const SubmoduleLattice& l, std::size_t limit = 16);

struct MraLocalizationReport {
  bool maps_are_homs = false;
  bool mutually_inverse = false;
  std::size_t size = 0;
  bool ok() const { return maps_are_homs && mutually_inverse; }
};
/// M_R(A[a⁻¹]) ≅ M_R(A)[v_R(a)⁻¹] through the explicit maps
/// ⟨bᵢ/aⁿⁱ⟩ ↦ Σ v_R(bᵢ)/v_R(a)ⁿⁱ and M/v_R(a)ⁿ ↦ ⟨m/aⁿ | m ∈ M⟩.
MraLocalizationReport mra_localization_iso_check(const SubmoduleLattice& l, Elem a);

/// Whether M_R(A)[v_R(a)⁻¹] and S̃_{v_R(a)}⁻¹M_R(A) are isomorphic.
bool mra_presheaf_agrees(const SubmoduleLattice& l, Elem a, std::size_t limit = 16);

}  // namespace semispec
