#include <doctest.h>

#include <numeric>

#include "semispec/corpus.hpp"
#include "semispec/errors.hpp"
#include "semispec/ideals.hpp"

using namespace semispec;

namespace {

ElementSet set_of(std::size_t n, std::initializer_list<std::size_t> xs) {
  return ElementSet::from_members(n, xs);
}

// Ideal test straight from the definition.
bool brute_is_ideal(const FiniteSemiring& a, const ElementSet& s) {
  if (!s.contains(a.zero())) return false;
  for (auto x : s.members())
    for (Elem y = 0; y < a.size(); ++y) {
      if (!s.contains(a.mul(static_cast<Elem>(x), y))) return false;
      if (s.contains(y) && !s.contains(a.add(static_cast<Elem>(x), y))) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("ideals of B[x]/(x^2~x)") {
  const auto a = corpus_get("bx-idem");  // 0, 1, x, 1+x
  const auto ideals = enumerate_ideals(*a);
  CHECK(ideals.size() == 4);
  const auto primes = enumerate_primes(*a);
  CHECK(primes == std::vector<ElementSet>{set_of(4, {0}), set_of(4, {0, 2}),
                                          set_of(4, {0, 2, 3})});
  CHECK(is_subtractive(*a, set_of(4, {0, 2})));
  CHECK_FALSE(is_subtractive(*a, set_of(4, {0, 2, 3})));
  CHECK(subtractive_closure(*a, set_of(4, {0, 2, 3})) == a->full_set());
  CHECK(ideal_closure(*a, std::vector<Elem>{3}) == set_of(4, {0, 2, 3}));
}

TEST_CASE("ideal enumeration matches a subset scan") {
  for (const auto& n : {"bool", "chain3", "chain4", "bx-idem", "bool2", "zmod4", "zmod6",
                        "nat-trunc3", "bx-cube"}) {
    CAPTURE(n);
    const auto a = corpus_get(n);
    std::vector<ElementSet> brute;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << a->size()); ++m) {
      ElementSet s(a->size());
      for (Elem x = 0; x < a->size(); ++x)
        if (m >> x & 1) s.insert(x);
      if (brute_is_ideal(*a, s)) brute.push_back(s);
    }
    std::sort(brute.begin(), brute.end());
    CHECK(enumerate_ideals(*a) == brute);
  }
}

TEST_CASE("subtractive means down-closed when idempotent") {
  for (const auto& n : {"chain3", "chain4", "bx-idem", "bool2", "bool-chain3", "bx-cube"}) {
    const auto a = corpus_get(n);
    for (const auto& i : enumerate_ideals(*a)) CHECK(is_subtractive(*a, i) == is_down_closed(*a, i));
  }
}

TEST_CASE("radical") {
  const auto z = corpus_get("zmod4");
  CHECK(radical(*z, set_of(4, {0})) == set_of(4, {0, 2}));
  CHECK(radical_equals_prime_intersection(*z, set_of(4, {0})));
  const auto n = corpus_get("nat-trunc3");  // 0..3, saturating
  for (const auto& i : enumerate_ideals(*n)) CHECK(radical_equals_prime_intersection(*n, i));
}

TEST_CASE("quotient by an ideal") {
  const auto a = corpus_get("bx-idem");
  const auto q = quotient_by_ideal(*a, set_of(4, {0, 2}));
  CHECK(q.semiring->size() == 2);
  CHECK(is_homomorphism(*a, *q.semiring, q.projection));
  CHECK(kernel_of(*q.semiring, q.projection) == set_of(4, {0, 2}));
}

TEST_CASE("ideals of N") {
  CHECK_FALSE(nat_ideal_member({2, 3}, 1));
  for (std::uint64_t k = 2; k < 50; ++k) CHECK(nat_ideal_member({2, 3}, k));
  CHECK_FALSE(nat_ideal_member({4, 6}, 9));
  CHECK(nat_ideal_member({4, 6}, 10));
  CHECK_THROWS_AS(nat_ideal_member({}, 3), PreconditionError);
  // independent oracle: representable as 5a + 7b
  for (std::uint64_t k = 0; k < 60; ++k) {
    bool rep = false;
    for (std::uint64_t a = 0; 5 * a <= k; ++a) rep = rep || (k - 5 * a) % 7 == 0;
    CHECK(nat_ideal_member({5, 7}, k) == rep);
  }
  CHECK(nat_prime_classification({0}) == "{0}");
  CHECK(nat_prime_classification({7}) == "7N");
  CHECK(nat_prime_classification({2, 3}) == "N\\{1}");
  CHECK_FALSE(nat_prime_classification({4}));
  CHECK(is_prime_nat({5}, 2000));
  CHECK_FALSE(is_prime_nat({6}, 2000));
  CHECK(is_subtractive_nat({4, 6}) == false);
  CHECK(is_subtractive_nat({3}));
  CHECK(nat_subtractive_closure_member({4, 6}, 2));
}

TEST_CASE("ideal handles") {
  const auto a = corpus_get("bx-idem");
  CHECK_THROWS_AS(IdealHandle::finite_subset(a, set_of(4, {0, 3})), PreconditionError);
  const auto h = IdealHandle::finite_generated(a, {2});
  CHECK(is_prime(h));
  CHECK(is_subtractive(h));
  const auto n = IdealHandle::nat({2, 3});
  CHECK(is_prime(n));
  CHECK_FALSE(is_subtractive(n));
  CHECK(subtractive_closure(n).contains(1));
  const auto back = ideal_from_json(ideal_to_json(h));
  CHECK(back.subset() == h.subset());
}
