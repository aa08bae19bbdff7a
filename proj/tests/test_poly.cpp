#include <doctest.h>

#include "semispec/errors.hpp"
#include "semispec/poly.hpp"

using namespace semispec;

TEST_CASE("boolean polynomial arithmetic") {
  const auto f = BoolPoly::univariate({0, 2});
  const auto g = BoolPoly::univariate({1});
  CHECK(f + g == BoolPoly::univariate({0, 1, 2}));
  CHECK(f * g == BoolPoly::univariate({1, 3}));
  CHECK(f * f == BoolPoly::univariate({0, 2, 4}));
  CHECK((f + f) == f);
  CHECK(f.has_constant_term());
  CHECK_FALSE(g.has_constant_term());
  CHECK(poly_semi_invertible(f));
  CHECK_FALSE(poly_semi_invertible(g));
  CHECK(f.to_string() == "1+x^2");
}

TEST_CASE("order and degree") {
  CHECK(bool_poly_ord_deg(BoolPoly::univariate({2, 5})) == OrdDeg{false, 2, 5});
  CHECK(bool_poly_ord_deg(BoolPoly(1)).zero);
}

TEST_CASE("parsing boolean polynomials") {
  const auto p = parse_bool_poly("1+x^2*y+x*y", {"x", "y"});
  CHECK(p.support().size() == 3);
  CHECK(p.support().count(Exponent{2, 1}) == 1);
  CHECK(p.has_constant_term());
  CHECK_THROWS_AS(parse_bool_poly("1+z", {"x"}), ParseError);
}

TEST_CASE("tropical polynomials") {
  const auto p = parse_tropical_poly("2*x^3 + -1/2", {"x"});
  CHECK(p.coeff(Exponent{3}) == TropicalRat{BigRat(2)});
  CHECK(p.coeff(Exponent{0}) == TropicalRat{BigRat(-1) / 2});
  const auto q = parse_tropical_poly("3 ⊙ x^3 ⊕ inf", {"x"});
  // min(2, 3) = 2 at x^3; the ∞ constant is the tropical zero
  CHECK((p + q).coeff(Exponent{3}) == TropicalRat{BigRat(2)});
  CHECK((p * q).coeff(Exponent{6}) == TropicalRat{BigRat(5)});
  CHECK(idem_poly_eval_at_zero(p) == TropicalRat{BigRat(-1) / 2});
}

TEST_CASE("rational polynomials and K[t^2, t^3]") {
  const auto f = parse_rat_poly("t^3 + t^2 - 3/2*t + 1");
  CHECK(f.degree() == 3);
  CHECK(f.coeff(1) == BigRat(-3) / 2);
  CHECK_FALSE(ktt_member(f));
  CHECK(ktt_member(parse_rat_poly("t^3 + t^2 + 7")));
  const auto a = parse_rat_poly("t^3 - 1"), b = parse_rat_poly("t - 1");
  const auto dm = divmod(a, b);
  CHECK(dm.quotient == parse_rat_poly("t^2 + t + 1"));
  CHECK(dm.remainder.is_zero());
  CHECK(dm.quotient * b + dm.remainder == a);
  CHECK_THROWS_AS(RatPoly().degree(), PreconditionError);
}
