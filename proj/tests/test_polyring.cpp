#include "doctest.h"
#include "support.hpp"

using namespace bftorus;

namespace {
IntPoly P(const char* s) { return parse_int_poly(s); }
}  // namespace

TEST_CASE("parse and print round trip") {
  CHECK(to_string(P("x^3 - 23x^2 + 7x - 1")) == "x^3-23x^2+7x-1");
  CHECK(to_string(P("-x")) == "-x");
  CHECK(to_string(IntPoly{}) == "0");
  RatPoly g = parse_poly("(3/2)x^2 - (1/2)*x + 1/3");
  CHECK(to_string(g) == "(3/2)x^2-(1/2)x+1/3");
  CHECK(parse_poly(to_string(g)) == g);
  CHECK(parse_poly("x^2+x^2") == parse_poly("2x^2"));
  CHECK(parse_poly("3/2x^2") == parse_poly("(3/2)x^2"));
}

TEST_CASE("parse errors") {
  for (const char* bad : {"", "x^", "2x +", "x^-1", "(1/0)x", "y", "x x", "1/"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_poly(bad), Error);
  }
  try {
    parse_int_poly("(1/2)x");
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonIntegralResult);
  }
}

TEST_CASE("arithmetic and division") {
  RatPoly a = parse_poly("x^3-2x+5"), b = parse_poly("2x-1");
  auto [q, r] = divmod(a, b);
  CHECK(q * b + r == a);
  CHECK(r.degree() < b.degree());
  CHECK_THROWS_AS(divmod(a, RatPoly{}), Error);
  CHECK(poly_gcd(parse_poly("x^2-1"), parse_poly("x^2+2x+1")) == parse_poly("x+1"));
  CHECK(poly_mod(P("x^5"), P("x^2-x-1")) == P("5x+3"));
}

TEST_CASE("resultant convention") {
  CHECK(resultant(P("x-3"), P("x-7")) == -4);
  CHECK(resultant(P("x^2+1"), P("x^2+1")) == 0);
  // Res(p, q) = (-1)^(deg p deg q) Res(q, p)
  CHECK(resultant(P("x^3-2"), P("x^2+x-5")) == resultant(P("x^2+x-5"), P("x^3-2")));
  CHECK(resultant(P("x^3-2"), P("x-5")) == -resultant(P("x-5"), P("x^3-2")));
  CHECK(resultant(P("x-5"), P("x^3-2")) == 123);
}

TEST_CASE("discriminants") {
  CHECK(discriminant(P("x^2-34x+1")) == 1152);
  CHECK(discriminant(P("x^3-23x^2+7x-1")) == -21248);
  CHECK(discriminant(P("x^2-x-1")) == 5);
  CHECK_THROWS_AS(discriminant(parse_int_poly("2x^2+1")), Error);
}

TEST_CASE("square part") {
  auto s = square_part(Integer(1152));
  CHECK(s.factor == 24);
  CHECK(s.squarefree == 2);
  s = square_part(Integer(-21248));
  CHECK(s.factor == 16);
  CHECK(s.squarefree == -83);
  CHECK_THROWS_AS(square_part(Integer(0)), Error);
  auto f = factor_integer(Integer("130401445122840192"));
  Integer prod = 1;
  for (auto& [p, e] : f) {
    Integer pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
    prod *= pe;
  }
  CHECK(prod == Integer("130401445122840192"));
  CHECK(divisors(Integer(12)) == std::vector<Integer>{1, 2, 3, 4, 6, 12});
}

TEST_CASE("irreducibility") {
  CHECK(is_irreducible(P("x^2-34x+1")));
  CHECK(is_irreducible(P("x^3-23x^2+7x-1")));
  CHECK(is_irreducible(P("x^4-7x^3-7x+1")));
  CHECK_FALSE(is_irreducible(P("x^4+4")));  // (x^2+2x+2)(x^2-2x+2)
  CHECK_FALSE(is_irreducible(P("x^4-x^2+1") * P("x^2+1")));
  CHECK_FALSE(is_irreducible(P("x^2-1")));
  CHECK(is_irreducible(P("x^5-x-1")));
  // products of random irreducibles are always caught
  for (int t = 0; t < 20; ++t) {
    IntPoly a = test::random_irreducible_poly(2, 5, false);
    IntPoly b = test::random_irreducible_poly(static_cast<std::size_t>(test::uniform(1, 3)), 5, false);
    CHECK_FALSE(is_irreducible(a * b));
  }
}
