#include <doctest.h>

#include "semispec/corpus.hpp"
#include "semispec/errors.hpp"
#include "semispec/presented.hpp"

using namespace semispec;

namespace {

Presentation bx_idempotent() {
  Presentation p;
  p.generators = {"x"};
  p.relations = {{p.parse("x^2"), p.parse("x")}};
  p.idempotent = true;
  return p;
}

}  // namespace

TEST_CASE("term parsing") {
  const std::vector<std::string> vars = {"x", "y"};
  const auto t = parse_term("2*x^2*y+1+x^2*y", vars);
  CHECK(t.to_string(vars) == "1+3*x^2*y");
  CHECK(t.degree() == 3);
  CHECK(t.max_coefficient() == 3);
  CHECK(parse_term("0", vars).degree() == -1);
  CHECK_THROWS_AS(parse_term("x+q", vars), ParseError);
}

TEST_CASE("congruence in the xy presentation") {
  const auto p = xy_counterexample_presentation();
  CongruenceIndex idx(p, CongruenceBound{4, 4, 2'000'000});
  CHECK(idx.congruent(p.parse("x^2"), p.parse("x")) == Congruence::Yes);
  CHECK(idx.congruent(p.parse("1+x"), p.parse("x+y")) == Congruence::Yes);
  CHECK(idx.congruent(p.parse("1+x*y"), p.parse("x+y")) == Congruence::NoAtBound);
  const auto chain = idx.certificate(p.parse("x^3+y"), p.parse("x+y^2"));
  REQUIRE(chain);
  CHECK(replay(p, *chain, p.parse("x+y^2")));
  CHECK_THROWS_AS(idx.congruent(p.parse("x^9"), p.parse("x")), PreconditionError);
}

TEST_CASE("localized images") {
  const auto p = xy_counterexample_presentation();
  CongruenceIndex idx(p, CongruenceBound{5, 5, 2'000'000});
  const auto s = p.parse("1+x*y"), t = p.parse("x+y");
  for (std::size_t gen : {0, 1}) {
    const auto r = localized_images_equal(idx, s, t, gen);
    CHECK(r.equal);
    CHECK(r.k == 1u);
  }
}

TEST_CASE("finite quotient reconstruction") {
  const auto p = bx_idempotent();
  CongruenceIndex idx(p, CongruenceBound{3, 3, 2'000'000});
  const auto q = reconstruct_finite_quotient(idx);
  CHECK(q.size() == 4);
  CHECK(verify_axioms(q).empty());
  CHECK(find_isomorphism(q, *corpus_get("bx-idem")));
}

TEST_CASE("presentation json") {
  const auto p = xy_counterexample_presentation();
  const auto back = presentation_from_json(presentation_to_json(p));
  CHECK(back.generators == p.generators);
  CHECK(back.relations.size() == 3);
  CHECK_THROWS_AS(presentation_from_json(nlohmann::json::parse(R"({"gens":1})")), ParseError);
}
