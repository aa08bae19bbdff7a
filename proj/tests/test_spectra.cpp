#include <doctest.h>

#include "semispec/corpus.hpp"
#include "semispec/errors.hpp"
#include "semispec/ideals.hpp"
#include "semispec/spectra.hpp"

using namespace semispec;

namespace {
ElementSet set_of(std::size_t n, std::initializer_list<std::size_t> xs) {
  return ElementSet::from_members(n, xs);
}
}  // namespace

TEST_CASE("Spec and Sp of B[x]/(x^2~x)") {
  const auto a = corpus_get("bx-idem");
  const auto spec = spec_enumerate(a);
  CHECK(spec.points() ==
        std::vector<ElementSet>{set_of(4, {0}), set_of(4, {0, 2}), set_of(4, {0, 2, 3})});
  const auto sp = sp_enumerate(a);
  CHECK(sp.points() == std::vector<ElementSet>{set_of(4, {0}), set_of(4, {0, 2})});
  REQUIRE(sp.hom_agreement);
  CHECK(*sp.hom_agreement);
  CHECK_FALSE(cover_check({2}, sp).topological);
  CHECK(cover_check({2}, sp).agree());
  CHECK(cover_check({2, 1}, sp).topological);
  CHECK(spec.topology().dimension().value == 2);
  CHECK(sp.topology().dimension().value == 1);
}

TEST_CASE("trivial and semifield spectra") {
  CHECK(spec_enumerate(corpus_get("trivial")).size() == 0);
  for (const auto& n : {"bool", "zmod3"}) {
    const auto a = corpus_get(n);
    CHECK(spec_enumerate(a).points() == std::vector<ElementSet>{set_of(a->size(), {0})});
    CHECK(sp_enumerate(a).size() == 1);
  }
}

TEST_CASE("size limit") {
  CHECK_THROWS_AS(spec_enumerate(corpus_get("chain4"), 3), ResourceError);
  // idempotent Sp falls back to homomorphisms into B
  CHECK(sp_enumerate(corpus_get("chain4"), 3).size() == 3);
}

TEST_CASE("Sp agrees with kernels of homs to B") {
  for (const auto& n : corpus_names()) {
    const auto a = corpus_get(n);
    if (!is_idempotent(*a)) continue;
    CAPTURE(n);
    CHECK(sp_enumerate(a).points() == hom_kernels_to_bool(*a));
  }
}

TEST_CASE("induced maps") {
  const auto a = corpus_get("bx-idem");
  const auto b = corpus_get("bool");
  const auto homs = enumerate_hom_maps(*a, *b);
  const auto sa = spec_enumerate(a), sb = spec_enumerate(b);
  for (const auto& f : homs) {
    const auto m = induced_map(f, sa, sb);
    CHECK(m.well_defined);
    CHECK(m.continuous);
    CHECK(m.map.size() == 1);
  }
  std::vector<Elem> id = {0, 1, 2, 3};
  const auto m = induced_map(id, sa, sa);
  CHECK(m.map == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("localization embeds the spectrum") {
  const auto a = corpus_get("bx-idem");
  const auto s = set_of(4, {1, 2});
  for (auto kind : {SpectrumKind::Spec, SpectrumKind::Sp}) {
    const auto r = localization_homeo_check(a, s, kind);
    CHECK(r.ok());
    CHECK_FALSE(r.surjective);
  }
  for (const auto& n : corpus_names()) {
    CAPTURE(n);
    CHECK(hardening_homeo_check(corpus_get(n)));
  }
}

TEST_CASE("symbolic model of Spec N") {
  const NatSpectrumModel spec(50, SpectrumKind::Spec), sp(50, SpectrumKind::Sp);
  CHECK(spec.size() == 17);
  CHECK(sp.size() == 16);
  CHECK(spec.labels().front() == "{0}");
  CHECK(spec.labels().back() == "N\\{1}");
  CHECK(spec.D(1) == ElementSet::full(17));
  CHECK(spec.D(0).empty());
  CHECK(spec.D(6).count() == 14);  // {0} and the 13 primes p ∤ 6
  const auto d = spec.topology().dimension();
  CHECK(d.exhaustive);
  CHECK(d.value == 2);
  CHECK(sp.topology().dimension().value == 1);
  CHECK(nat_model_verify(50).ok());
  CHECK(primes_up_to(20) == std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19});
}

TEST_CASE("exports") {
  const auto sp = sp_enumerate(corpus_get("bx-idem"));
  const auto dot = to_dot(sp);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("->") != std::string::npos);
  const auto j = to_json(sp);
  CHECK(j["points"].size() == 2);
  CHECK(j["points"][0]["subtractive"] == true);
  CHECK(j["basis"]["2"].size() == 1);
}
