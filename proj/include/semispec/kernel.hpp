#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "semispec/element_set.hpp"

namespace semispec {

/// Carrier index of an element of a finite semiring.
using Elem = std::uint32_t;

/// Commutative semiring on the carrier {0, ..., size-1}, given by its
/// addition and multiplication tables.
///
/// Construction only checks the structure (table shape, indices in range);
/// the semiring laws are checked separately by verify_axioms so that invalid
/// tables can still be reported on.
class FiniteSemiring {
 public:
  FiniteSemiring(std::size_t size, std::vector<Elem> add, std::vector<Elem> mul,
                 Elem zero, Elem one, std::string label = {},
                 std::vector<std::string> names = {});

  std::size_t size() const { return size_; }
  Elem zero() const { return zero_; }
  Elem one() const { return one_; }
  const std::string& label() const { return label_; }

  Elem add(Elem a, Elem b) const { return add_[a * size_ + b]; }
  Elem mul(Elem a, Elem b) const { return mul_[a * size_ + b]; }
  Elem pow(Elem a, std::size_t n) const;

  const std::vector<Elem>& add_table() const { return add_; }
  const std::vector<Elem>& mul_table() const { return mul_; }

  /// Display name of an element; defaults to its index.
  std::string name(Elem a) const;
  const std::vector<std::string>& names() const { return names_; }

  ElementSet empty_set() const { return ElementSet(size_); }
  ElementSet full_set() const { return ElementSet::full(size_); }

 private:
  std::size_t size_;
  std::vector<Elem> add_;
  std::vector<Elem> mul_;
  Elem zero_;
  Elem one_;
  std::string label_;
  std::vector<std::string> names_;
};

using SemiringRef = std::shared_ptr<const FiniteSemiring>;

struct AxiomViolation {
  std::string law;
  std::array<Elem, 3> witness{};
};

/// Every violated semiring law with a witness triple; empty iff valid.
std::vector<AxiomViolation> verify_axioms(const FiniteSemiring& a);

bool is_idempotent(const FiniteSemiring& a);

/// a ⪯ b iff a + b = b. Throws PreconditionError on non-idempotent ambients.
bool leq(const FiniteSemiring& ring, Elem a, Elem b);

/// Semiring homomorphism between finite semirings, stored as an image table.
struct Homomorphism {
  SemiringRef domain;
  SemiringRef codomain;
  std::vector<Elem> map;

  Elem operator()(Elem a) const { return map[a]; }
};

bool is_homomorphism(const FiniteSemiring& from, const FiniteSemiring& to,
                     std::span<const Elem> map);

/// All homomorphism tables from -> to, lexicographic by table.
std::vector<std::vector<Elem>> enumerate_hom_maps(const FiniteSemiring& from,
                                                  const FiniteSemiring& to);

std::vector<Homomorphism> enumerate_homs(const SemiringRef& from,
                                         const SemiringRef& to);

/// g ∘ f as a table.
std::vector<Elem> compose(std::span<const Elem> f, std::span<const Elem> g);

std::optional<Elem> inverse(const FiniteSemiring& ring, Elem a);
ElementSet units(const FiniteSemiring& ring);

/// First isomorphism from -> to in lexicographic order, if any.
std::optional<std::vector<Elem>> find_isomorphism(const FiniteSemiring& from,
                                                  const FiniteSemiring& to);

bool is_bijective_hom(const FiniteSemiring& from, const FiniteSemiring& to,
                      std::span<const Elem> map);

/// Image of a subset under a map, and preimage of a subset.
ElementSet image(std::span<const Elem> map, const ElementSet& s,
                 std::size_t codomain_size);
ElementSet preimage(std::span<const Elem> map, const ElementSet& s);

/// {"size":n, "zero":i, "one":j, "add":[[...]], "mul":[[...]], "label":s}
FiniteSemiring semiring_from_json(const nlohmann::json& doc);
nlohmann::json semiring_to_json(const FiniteSemiring& ring);
FiniteSemiring load_semiring(const std::string& path);

}  // namespace semispec
