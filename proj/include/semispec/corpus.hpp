#pragma once

#include <string>
#include <vector>

#include "semispec/kernel.hpp"

namespace semispec {

/// {0 < ... < n-1} with (max, min).
SemiringRef make_chain(std::size_t n);
/// ℤ/n as a semiring.
SemiringRef make_zmod(std::size_t n);
/// {0, ..., n} with sums and products truncated at n.
SemiringRef make_nat_trunc(std::size_t n);
/// The one-element semiring (0 = 1).
SemiringRef make_trivial();
SemiringRef make_product(const FiniteSemiring& a, const FiniteSemiring& b);

/// Boolean monoid semiring 𝔹[M] of a finite commutative monoid M given by its
/// multiplication table (identity at index 0). Element index is the bitmask
/// of the support.
SemiringRef make_bool_monoid_semiring(const std::vector<std::string>& monoid_names,
                                      const std::vector<std::size_t>& monoid_mul,
                                      std::string label);

/// 𝔹[x₁..xₙ]/(xᵢ²∼xᵢ): supports are sets of squarefree monomials; monomial
/// j is the subset of variables in the bits of j.
SemiringRef make_boolean_cube(std::size_t n);

/// 𝔹[x]/(x^{k+1} ∼ x^k).
SemiringRef make_bool_truncated_poly(std::size_t k);

/// Named instance: bool, chain3, chain4, bx-idem, bool2, zmod3, zmod4, zmod6,
/// nat-trunc3, bx-cube, bool-chain3, trivial, cube2. Throws ParseError.
SemiringRef corpus_get(const std::string& name);
std::vector<std::string> corpus_names();

/// Instances of size 2..8 used by the exhaustive property checks.
std::vector<SemiringRef> finite_corpus();

}  // namespace semispec
