#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "semispec/kernel.hpp"
#include "semispec/poly.hpp"

namespace semispec {

/// ℕ-linear combination of monomials; zero coefficients are never stored.
class Term {
 public:
  explicit Term(std::size_t nvars = 0) : nvars_(nvars) {}
  static Term constant(std::size_t nvars, std::uint64_t c);
  static Term monomial(const Exponent& e, std::uint64_t c = 1);

  std::size_t nvars() const { return nvars_; }
  const std::map<Exponent, std::uint64_t>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Total degree; −1 for the zero term.
  int degree() const;
  std::uint64_t max_coefficient() const;

  void add_term(const Exponent& e, std::uint64_t c);

  friend Term operator+(const Term& a, const Term& b);
  friend Term operator*(const Term& a, const Term& b);
  friend bool operator==(const Term&, const Term&) = default;
  friend auto operator<=>(const Term& a, const Term& b) { return a.coeffs_ <=> b.coeffs_; }

  std::string to_string(const std::vector<std::string>& vars) const;

 private:
  std::size_t nvars_;
  std::map<Exponent, std::uint64_t> coeffs_;
};

/// "2*x^2*y + 1 + x"
Term parse_term(const std::string& text, const std::vector<std::string>& vars);

struct Presentation {
  std::vector<std::string> generators;
  std::vector<std::pair<Term, Term>> relations;
  /// Adds 1+1 ∼ 1.
  bool idempotent = false;

  Term parse(const std::string& text) const { return parse_term(text, generators); }
  std::string show(const Term& t) const { return t.to_string(generators); }
};

/// {"gens":["x","y"], "rels":[["x^2","x"],...], "idempotent": false}
Presentation presentation_from_json(const nlohmann::json& doc);
nlohmann::json presentation_to_json(const Presentation& p);
Presentation load_presentation(const std::string& path);

/// ℕ[x,y]/(x²∼x, y²∼y, 1+x∼x+y).
Presentation xy_counterexample_presentation();

struct CongruenceBound {
  unsigned max_degree = 6;
  unsigned max_coefficient = 6;
  /// Largest congruence class (or fully materialized universe) explored.
  std::size_t max_terms = 2'000'000;
};

/// Bound from SEMISPEC_CONGRUENCE_BOUND ("6" or "degree,coefficient").
CongruenceBound congruence_bound_from_env(CongruenceBound fallback = {});

enum class Congruence { Yes, NoAtBound };

/// One rewrite m·l + w → m·r + w of a chain.
struct RewriteStep {
  std::size_t relation = 0;
  bool reversed = false;
  Exponent multiplier;
  Term result;
};

struct RewriteChain {
  Term start;
  std::vector<RewriteStep> steps;
};

/// Congruence generated by a presentation, restricted to the terms of total
/// degree and coefficients within the bound. Two terms are identified iff a
/// chain of one-step rewrites m·l + w ↔ m·r + w (m a monomial) connects them
/// without leaving the bounded universe.
///
/// Classes are explored lazily by breadth-first search and cached; when the
/// whole universe fits in the budget it is materialized up front.
class CongruenceIndex {
 public:
  CongruenceIndex(Presentation p, CongruenceBound bound);
  ~CongruenceIndex();
  CongruenceIndex(const CongruenceIndex&) = delete;
  CongruenceIndex& operator=(const CongruenceIndex&) = delete;

  const Presentation& presentation() const { return pres_; }
  const CongruenceBound& bound() const { return bound_; }
  bool in_universe(const Term& t) const;
  bool materialized() const { return materialized_; }

  /// Throws PreconditionError when either term lies outside the universe.
  Congruence congruent(const Term& s, const Term& t) const;
  /// Least term of the class (in the order of Term).
  Term representative(const Term& t) const;
  std::vector<Term> class_members(const Term& t) const;
  /// Every class of a materialized universe, by representative.
  std::vector<Term> representatives() const;

  /// Replayable rewrite chain from s to t when they are congruent.
  std::optional<RewriteChain> certificate(const Term& s, const Term& t) const;

  std::size_t terms_explored() const;

 private:
  struct Impl;
  Presentation pres_;
  CongruenceBound bound_;
  bool materialized_ = false;
  std::unique_ptr<Impl> impl_;
};

/// Checks a chain against the presentation alone; true iff every step is a
/// valid one-step rewrite and the chain ends at `target`.
bool replay(const Presentation& p, const RewriteChain& chain, const Term& target);

struct LocalizedEquality {
  bool equal = false;
  /// Least k with aᵏ·s ∼ aᵏ·t, when found.
  std::optional<unsigned> k;
};

/// Searches k = 0, 1, ... while aᵏ·s and aᵏ·t stay inside the universe.
LocalizedEquality localized_images_equal(const CongruenceIndex& index, const Term& s,
                                         const Term& t, std::size_t generator);
LocalizedEquality localized_images_equal(const Presentation& p, const Term& s,
                                         const Term& t, std::size_t generator,
                                         CongruenceBound bound);

/// Quotient of a materialized index whose classes are closed under the
/// operations on their representatives. Throws BoundedResultError otherwise.
FiniteSemiring reconstruct_finite_quotient(const CongruenceIndex& index,
                                           std::size_t max_classes = 64);

}  // namespace semispec
