#include <doctest.h>

#include "semispec/corpus.hpp"
#include "semispec/errors.hpp"
#include "semispec/ideals.hpp"
#include "semispec/valuation.hpp"

using namespace semispec;

TEST_CASE("G-valuations to B") {
  const auto b = corpus_get("bool");
  CHECK(enumerate_bool_valuations(*b).size() == 1);
  const auto bx = corpus_get("bx-idem");
  const auto r = val_spec_bijection(bx);
  CHECK(r.valuations.size() == 3);
  CHECK(r.bijective);
  for (const auto& n : corpus_names()) {
    CAPTURE(n);
    CHECK(val_spec_bijection(corpus_get(n)).bijective);
  }
  CHECK_THROWS_AS(is_g_valuation(*bx, *corpus_get("zmod3"), std::vector<Elem>{0, 1, 0, 1}),
                  PreconditionError);
  CHECK(nat_kernel_max_valuation_check(200));
}

TEST_CASE("homomorphisms are valuations") {
  const auto a = corpus_get("bool-chain3"), c = corpus_get("chain3");
  for (const auto& h : enumerate_hom_maps(*a, *c)) CHECK(is_g_valuation(*a, *c, h));
}

TEST_CASE("integral part") {
  const auto a = corpus_get("bx-idem"), b = corpus_get("bool");
  for (const auto& v : enumerate_bool_valuations(*a)) {
    const auto ap = integral_part(*a, *b, v);
    CHECK(ap == a->full_set());
    CHECK(is_subsemiring(*a, ap));
  }
}

TEST_CASE("submodule lattices") {
  const auto c = corpus_get("chain3");  // 0, 1/2, 1
  const auto l = build_mra(c, bool_scalars(*c));
  CHECK(l.modules.size() == 4);
  CHECK(l.semiring->name(l.universal[1]) == "{0,1/2}");
  CHECK(verify_axioms(*l.semiring).empty());
  CHECK(is_idempotent(*l.semiring));
  for (Elem m = 0; m < l.modules.size(); ++m)
    for (Elem n = 0; n < l.modules.size(); ++n)
      CHECK(leq(*l.semiring, m, n) == l.modules[m].is_subset_of(l.modules[n]));
  const auto b = corpus_get("bool");
  const auto lb = build_mra(b, bool_scalars(*b));
  CHECK(lb.modules.size() == 2);
  CHECK_THROWS_AS(build_mra(corpus_get("zmod3"), bool_scalars(*corpus_get("zmod3"))),
                  PreconditionError);
  CHECK_THROWS_AS(build_mra(corpus_get("bool2"), bool_scalars(*corpus_get("bool2")), 2),
                  ResourceError);
}

TEST_CASE("universal valuation") {
  for (const auto& n : {"bool", "chain3", "bx-idem", "bool2", "zmod3", "nat-trunc3"}) {
    CAPTURE(n);
    const auto a = corpus_get(n);
    const auto l = build_mra(a, prime_subsemiring(*a));
    CHECK(is_g_valuation(*a, *l.semiring, l.universal));
    for (Elem s : l.scalars.iota) CHECK(leq(*l.semiring, l.universal[s], l.semiring->one()));
    // v(ab) = v(a)v(b)
    for (Elem x = 0; x < a->size(); ++x)
      for (Elem y = 0; y < a->size(); ++y)
        CHECK(l.universal[a->mul(x, y)] == l.semiring->mul(l.universal[x], l.universal[y]));
  }
}

TEST_CASE("factorization through the universal valuation") {
  const auto a = corpus_get("bx-idem");
  const auto l = build_mra(a, bool_scalars(*a));
  const auto self = factor_through_universal(l, *l.semiring, l.universal);
  std::vector<Elem> id(l.modules.size());
  for (Elem i = 0; i < id.size(); ++i) id[i] = i;
  CHECK(self.map == id);
  CHECK(self.unique());
  const auto b = corpus_get("bool");
  for (const auto& v : enumerate_bool_valuations(*a)) {
    const auto f = factor_through_universal(l, *b, v);
    CHECK(f.homomorphism);
    CHECK(f.factors);
    CHECK(f.unique());
  }
}

TEST_CASE("Sp of the lattice is Spec") {
  const auto bx = corpus_get("bx-idem");
  const auto h = vstar_homeo_check(build_mra(bx, bool_scalars(*bx)));
  CHECK(h.ok());
  CHECK(h.points == 3);
  const auto c = corpus_get("chain3");
  const auto hc = vstar_homeo_check(build_mra(c, bool_scalars(*c)));
  CHECK(hc.ok());
  CHECK(hc.points == 2);
  const auto z = corpus_get("zmod6");
  CHECK(vstar_homeo_check(build_mra(z, prime_subsemiring(*z))).ok());
}

TEST_CASE("lattice of a localization") {
  const auto bx = corpus_get("bx-idem");
  const auto l = build_mra(bx, bool_scalars(*bx));
  const auto one = mra_localization_iso_check(l, 1);
  CHECK(one.ok());
  CHECK(one.size == l.modules.size());
  const auto x = mra_localization_iso_check(l, 2);
  CHECK(x.ok());
  const auto zero = mra_localization_iso_check(l, 0);
  CHECK(zero.ok());
  CHECK(zero.size == 1);
  CHECK(prime_subsemiring(*corpus_get("zmod3")).scalars->size() == 3);
  CHECK(prime_subsemiring(*corpus_get("chain3")).scalars->size() == 2);
}
