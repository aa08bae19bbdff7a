#include <doctest.h>

#include <algorithm>

#include "semispec/corpus.hpp"
#include "semispec/errors.hpp"
#include "semispec/kernel.hpp"

using namespace semispec;

namespace {

// Brute-force count of homomorphisms, independent of the backtracking search.
std::size_t brute_hom_count(const FiniteSemiring& a, const FiniteSemiring& b) {
  std::size_t count = 0;
  std::vector<Elem> map(a.size(), 0);
  while (true) {
    if (is_homomorphism(a, b, map)) ++count;
    std::size_t i = 0;
    while (i < map.size() && ++map[i] == b.size()) map[i++] = 0;
    if (i == map.size()) break;
  }
  return count;
}

}  // namespace

TEST_CASE("corpus satisfies the semiring laws") {
  for (const auto& n : corpus_names()) {
    CAPTURE(n);
    CHECK(verify_axioms(*corpus_get(n)).empty());
  }
}

TEST_CASE("violations carry a witness") {
  // max/+ table on {0,1,2} with truncated addition: distributivity fails
  std::vector<Elem> add = {0, 1, 2, 1, 2, 2, 2, 2, 2};
  std::vector<Elem> mul = {0, 0, 0, 0, 1, 2, 0, 2, 1};
  FiniteSemiring bad(3, add, mul, 0, 1, "bad");
  const auto v = verify_axioms(bad);
  REQUIRE(!v.empty());
  const bool has_distributivity =
      std::any_of(v.begin(), v.end(), [](const auto& x) { return x.law == "distributivity"; });
  CHECK(has_distributivity);
  for (const auto& x : v) {
    if (x.law != "distributivity") continue;
    const auto [a, b, c] = x.witness;
    CHECK(bad.mul(a, bad.add(b, c)) != bad.add(bad.mul(a, b), bad.mul(a, c)));
  }
}

TEST_CASE("structural errors") {
  CHECK_THROWS_AS(FiniteSemiring(2, {0, 1, 1}, {0, 0, 0, 1}, 0, 1), StructuralError);
  CHECK_THROWS_AS(FiniteSemiring(2, {0, 1, 1, 5}, {0, 0, 0, 1}, 0, 1), StructuralError);
  CHECK_THROWS_AS(semiring_from_json(nlohmann::json::parse(R"({"size":2})")), ParseError);
}

TEST_CASE("idempotence and order") {
  CHECK(is_idempotent(*corpus_get("chain3")));
  CHECK_FALSE(is_idempotent(*corpus_get("zmod3")));
  CHECK_THROWS_AS(leq(*corpus_get("zmod3"), 0, 1), PreconditionError);
  const auto c = corpus_get("chain3");
  CHECK(leq(*c, 0, 1));
  CHECK(leq(*c, 1, 2));
  CHECK_FALSE(leq(*c, 2, 1));
}

TEST_CASE("homomorphism enumeration matches brute force") {
  const std::vector<std::string> names = {"bool", "chain3", "bx-idem", "bool2", "zmod3",
                                          "zmod6", "nat-trunc3"};
  for (const auto& a : names)
    for (const auto& b : names) {
      CAPTURE(a);
      CAPTURE(b);
      const auto ra = corpus_get(a), rb = corpus_get(b);
      const auto maps = enumerate_hom_maps(*ra, *rb);
      CHECK(maps.size() == brute_hom_count(*ra, *rb));
      CHECK(std::is_sorted(maps.begin(), maps.end()));
    }
  CHECK(enumerate_hom_maps(*corpus_get("bx-idem"), *corpus_get("bool")).size() == 2);
  CHECK(enumerate_hom_maps(*corpus_get("bool"), *corpus_get("zmod3")).empty());
  CHECK(enumerate_hom_maps(*corpus_get("zmod6"), *corpus_get("zmod3")).size() == 1);
}

TEST_CASE("isomorphisms, units, composition") {
  const auto c = corpus_get("chain3");
  const auto iso = find_isomorphism(*c, *c);
  REQUIRE(iso);
  CHECK(*iso == std::vector<Elem>{0, 1, 2});
  CHECK_FALSE(find_isomorphism(*corpus_get("chain3"), *corpus_get("zmod3")));
  CHECK(units(*corpus_get("zmod6")).members() == std::vector<std::size_t>{1, 5});
  CHECK(inverse(*corpus_get("zmod3"), 2) == Elem{2});
  CHECK_FALSE(inverse(*corpus_get("zmod4"), 2));
  const std::vector<Elem> f = {1, 0, 2}, g = {2, 2, 0};
  CHECK(compose(f, g) == std::vector<Elem>{2, 2, 0});
}

TEST_CASE("json round trip") {
  for (const auto& n : corpus_names()) {
    const auto r = corpus_get(n);
    const auto back = semiring_from_json(semiring_to_json(*r));
    CHECK(back.add_table() == r->add_table());
    CHECK(back.mul_table() == r->mul_table());
    CHECK(back.label() == r->label());
  }
}
