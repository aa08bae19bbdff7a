#include <doctest.h>

#include "semispec/corpus.hpp"
#include "semispec/errors.hpp"
#include "semispec/localize.hpp"
#include "semispec/sheaf.hpp"

using namespace semispec;

TEST_CASE("S_U monoids") {
  const auto a = corpus_get("bx-idem");
  const auto spec = spec_enumerate(a), sp = sp_enumerate(a);
  CHECK(s_of_open(spec, spec.whole()) == units(*a));
  CHECK(s_of_open(sp, sp.whole()) == semi_invertibles(*a));
  CHECK(s_of_open(spec, ElementSet(spec.size())) == a->full_set());
  for (Elem x = 0; x < a->size(); ++x) {
    // S_a is the saturation of the powers of a
    CHECK(s_of_principal(spec, x) == saturate(*a, generated_submonoid(*a, {x})));
    CHECK(s_of_principal(spec, x).is_subset_of(s_of_principal(sp, x)));
  }
}

TEST_CASE("equalizers over covers of Spec") {
  const auto a = corpus_get("bx-idem");  // 0, 1, x, 1+x
  const LocalizationPresheaf f(spec_enumerate(a));
  // D(x) ∪ D(1+x) = D(1+x); the maximal ideal {0,x,1+x} is not covered
  const auto eq = equalizer_sections(f, {2, 3}, 3);
  CHECK(eq.canonical_iso);
  CHECK(eq.semiring->size() == f.principal(3).semiring()->size());
  const auto b2 = corpus_get("bool2");  // (0,0), (0,1), (1,0), (1,1)
  const LocalizationPresheaf g(spec_enumerate(b2));
  const auto whole = equalizer_sections(g, {1, 2}, 3);
  CHECK(whole.canonical_iso);
  CHECK(whole.semiring->size() == 4);
  const auto single = equalizer_sections(f, {2}, 2);
  CHECK(single.canonical_iso);
  CHECK_THROWS_AS(equalizer_sections(f, {2}, 1), PreconditionError);
  for (std::size_t p = 0; p < f.space().size(); ++p) CHECK(stalk_check(f, p));
}

TEST_CASE("restriction maps") {
  const auto a = corpus_get("bool-chain3");
  const LocalizationPresheaf f(spec_enumerate(a));
  const auto& space = f.space();
  for (Elem x = 0; x < a->size(); ++x)
    for (Elem y = 0; y < a->size(); ++y) {
      if (!space.D(y).is_subset_of(space.D(x))) continue;
      CHECK(f.restriction_well_defined(space.D(x), space.D(y)));
      const auto r = f.restriction(space.D(x), space.D(y));
      CHECK(is_homomorphism(*f.principal(x).semiring(), *f.principal(y).semiring(), r));
    }
}

TEST_CASE("common denominators and gluing") {
  const auto a = corpus_get("bool2");
  const LocalizationPresheaf f(spec_enumerate(a));
  const std::vector<Elem> cover = {1, 2};
  // restrictions of every global element glue back to it
  for (Elem g = 0; g < a->size(); ++g) {
    std::vector<Elem> locals;
    for (Elem c : cover) locals.push_back(f.principal(c).phi()[g]);
    const auto cd = common_denominator_form(f, cover, locals);
    for (std::size_t i = 0; i < cover.size(); ++i)
      for (std::size_t j = 0; j < cover.size(); ++j)
        CHECK(a->mul(cd.x[i], cd.s[j]) == a->mul(cd.x[j], cd.s[i]));
    const auto glued = glue(f, cover, locals);
    REQUIRE(glued);
    CHECK(*glued == g);
  }
}

TEST_CASE("common denominators on a cover of D(1+x)") {
  const auto a = corpus_get("bx-idem");
  const LocalizationPresheaf f(spec_enumerate(a));
  const std::vector<Elem> cover = {2, 3};
  for (Elem g = 0; g < a->size(); ++g) {
    std::vector<Elem> locals;
    for (Elem c : cover) locals.push_back(f.principal(c).phi()[g]);
    const auto cd = common_denominator_form(f, cover, locals);
    for (std::size_t i = 0; i < cover.size(); ++i) {
      CHECK(f.principal(cover[i]).class_of(cd.x[i], cd.s[i]) == locals[i]);
      for (std::size_t j = 0; j < cover.size(); ++j)
        CHECK(a->mul(cd.x[i], cd.s[j]) == a->mul(cd.x[j], cd.s[i]));
    }
  }
}

TEST_CASE("global sections") {
  for (const auto& n : {"bool", "chain3", "zmod6", "bool2"}) {
    const auto a = corpus_get(n);
    CAPTURE(n);
    const auto g = gamma(a);
    CHECK(is_homomorphism(*a, *g.semiring, g.natural));
  }
  CHECK(is_global(corpus_get("bool")));
  CHECK(is_global(corpus_get("chain3")));
  // global implies hard
  for (const auto& n : corpus_names()) {
    const auto a = corpus_get(n);
    if (is_global(a)) CHECK(is_hard(*a));
  }
  const auto bx = corpus_get("bx-idem");
  CHECK_FALSE(is_global(bx));
  const auto glob = globalize(bx);
  CHECK(is_global(glob.semiring));
  CHECK(find_isomorphism(*glob.semiring, *harden(bx).semiring()));
}

TEST_CASE("sections of Spec N") {
  CHECK(spec_nat_sections({NatOpen::Shape::Principal, 6}) == "N[1/6]");
  CHECK(spec_nat_sections({NatOpen::Shape::Principal, 1}) == "N");
  CHECK(spec_nat_sections({NatOpen::Shape::Principal, 0}) == "0");
  CHECK(spec_nat_sections({NatOpen::Shape::ComplementOfMax, 0}) == "N");
  const auto f = NatFraction::make(12, 2, 3);
  CHECK(f.k == 1);
  CHECK(f.value() == BigRat(3, 2));
  CHECK((f + f).value() == 3);
  CHECK((f * f).value() == BigRat(9, 4));
  CHECK(glue_nat_pair(NatFraction::make(10, 2, 1), NatFraction::make(15, 3, 1)) == BigInt(5));
  CHECK_FALSE(glue_nat_pair(NatFraction::make(1, 2, 1), NatFraction::make(1, 3, 1)));
}

TEST_CASE("named counterexamples") {
  const auto ktt = ktt_counterexample_verify();
  CHECK(ktt.pass);
  CHECK(ktt.to_json()["status"] == "pass");
  const auto sp = sp_injectivity_counterexample(CongruenceBound{5, 5, 2'000'000});
  CHECK(sp.pass);
}
