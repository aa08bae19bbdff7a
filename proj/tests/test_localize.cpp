#include <doctest.h>

#include "semispec/corpus.hpp"
#include "semispec/errors.hpp"
#include "semispec/localize.hpp"

using namespace semispec;

TEST_CASE("localizing B[x]/(x^2~x) at x") {
  const auto a = corpus_get("bx-idem");  // 0, 1, x, 1+x
  const auto s = generated_submonoid(*a, {2});
  CHECK(s.members() == std::vector<std::size_t>{1, 2});
  const LocalizedSemiring l(a, s);
  // x·(1+x) = x = x·1, so 1+x and 1 become equal; x becomes a unit equal to 1
  CHECK(l.semiring()->size() == 2);
  CHECK(l.phi()[1] == l.phi()[3]);
  CHECK(l.phi()[1] == l.phi()[2]);
  CHECK(verify_axioms(*l.semiring()).empty());
  CHECK(is_homomorphism(*a, *l.semiring(), l.phi()));
  CHECK_THROWS_AS(l.class_of(1, 3), PreconditionError);
}

TEST_CASE("saturation does not change the localization") {
  for (const auto& n : {"bx-idem", "chain3", "zmod6", "nat-trunc3", "bool-chain3"}) {
    const auto a = corpus_get(n);
    for (Elem g = 0; g < a->size(); ++g) {
      const auto s = generated_submonoid(*a, {g});
      const auto sat = saturate(*a, s);
      CHECK(is_mult_submonoid(*a, sat));
      CHECK(s.is_subset_of(sat));
      const LocalizedSemiring l1(a, s), l2(a, sat);
      CHECK(find_isomorphism(*l1.semiring(), *l2.semiring()));
    }
  }
}

TEST_CASE("semi-invertibility and hardness") {
  const auto bx = corpus_get("bx-idem");
  CHECK(semi_invertible(*bx, 3));
  CHECK_FALSE(semi_invertible(*bx, 2));
  CHECK(semi_invertibles(*bx) == ElementSet::from_members(4, {1, 3}));
  CHECK_FALSE(is_hard(*bx));
  const auto h = harden(bx);
  CHECK(is_hard(*h.semiring()));
  for (const auto& n : corpus_names()) {
    const auto a = corpus_get(n);
    for (Elem x = 0; x < a->size(); ++x)
      if (is_idempotent(*a)) CHECK(semi_invertible(*a, x) == semi_invertible_idempotent(*a, x));
    CHECK(is_hard(*harden(a).semiring()));
  }
  CHECK(is_hard(*corpus_get("zmod6")));
}

TEST_CASE("hardening universal property") {
  const auto hard_targets = {"bool", "chain3", "zmod3", "bool2"};
  for (const auto& n : {"bx-idem", "bx-cube", "chain3"}) {
    const auto a = corpus_get(n);
    const auto h = harden(a);
    for (const auto& t : hard_targets) {
      const auto b = corpus_get(t);
      for (const auto& f : enumerate_hom_maps(*a, *b)) {
        std::size_t lifts = 0;
        for (const auto& g : enumerate_hom_maps(*h.semiring(), *b))
          if (compose(h.phi(), g) == f) ++lifts;
        CHECK(lifts == 1);
      }
    }
  }
}

TEST_CASE("semi-invertibility in N") {
  CHECK(nat_semi_invertible(1));
  CHECK_FALSE(nat_semi_invertible(2));
  CHECK(nat_semi_invertible_witness(1, 5));
  for (std::uint64_t n = 2; n < 12; ++n) CHECK_FALSE(nat_semi_invertible_witness(n, 60));
  const auto sat = nat_saturate_powers(6, 40);
  CHECK(sat == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 8, 9, 12, 16, 18, 24, 27, 32, 36});
}

TEST_CASE("hardening of B[x]") {
  const BoolFraction one_plus_x{BoolPoly::univariate({0, 1}), BoolPoly::one(1)};
  CHECK(bx_hardening_iso(one_plus_x) == MinMaxPair::of(0, 1));
  const BoolFraction f{BoolPoly::univariate({1}), BoolPoly::univariate({0, 1})};
  CHECK(bx_hardening_iso(f) == MinMaxPair::of(1, 0));
  CHECK_THROWS_AS(bx_hardening_iso({BoolPoly::one(1), BoolPoly::univariate({1})}),
                  PreconditionError);
  for (int n = 0; n < 6; ++n)
    for (int d = -6; d < 6; ++d) {
      const auto t = MinMaxPair::of(n, d);
      CHECK(bx_hardening_iso(bx_hardening_preimage(t)) == t);
    }
  // 1+x² and 1+x+x² agree after multiplying by 1+x
  CHECK(bool_fraction_witness_equal({BoolPoly::univariate({0, 2}), BoolPoly::one(1)},
                                    {BoolPoly::univariate({0, 1, 2}), BoolPoly::one(1)}, 2));
  CHECK_FALSE(bool_fraction_witness_equal({BoolPoly::univariate({0}), BoolPoly::one(1)},
                                          {BoolPoly::univariate({0, 1}), BoolPoly::one(1)}, 6));
}
