#include "doctest.h"
#include "support.hpp"

#include <chrono>

using namespace bftorus;
using test::group;
using test::load;
using test::span;

namespace {

RatPoly g_(const char* s) { return parse_poly(s); }

NumberField cubic_field() { return NumberField(parse_int_poly("x^3-23x^2+7x-1")); }

// All 2x2 P over Z/m with P a = b P and det P a unit mod m.
bool conjugate_mod_oracle(const IntMatrix& a, const IntMatrix& b, long m) {
  auto md = [m](const Integer& x) { return mpz_fdiv_ui(x.get_mpz_t(), static_cast<unsigned long>(m)); };
  for (long p0 = 0; p0 < m; ++p0)
    for (long p1 = 0; p1 < m; ++p1)
      for (long p2 = 0; p2 < m; ++p2)
        for (long p3 = 0; p3 < m; ++p3) {
          IntMatrix p{{Integer(p0), Integer(p1)}, {Integer(p2), Integer(p3)}};
          Integer d = determinant(p);
          Integer g;
          Integer mm(m);
          mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), mm.get_mpz_t());
          if (g != 1) continue;
          IntMatrix l = p * a, r = b * p;
          bool ok = true;
          for (std::size_t i = 0; i < 2 && ok; ++i)
            for (std::size_t j = 0; j < 2 && ok; ++j) ok = md(l(i, j)) == md(r(i, j));
          if (ok) return true;
        }
  return false;
}

}  // namespace

TEST_CASE("cubic triple groups") {
  IntMatrix a = load("cubicA.txt"), b = load("cubicB.txt"), c = load("cubicC.txt");
  CHECK(bf_group(a, g_("x-1")) == group("Z16"));
  CHECK(bf_group(a, g_("x+1")) == group("Z32"));
  CHECK(bf_group(b, g_("x-1")) == group("Z2+Z8"));
  CHECK(bf_group(b, g_("x+1")) == group("Z2+Z16"));
  CHECK(bf_group(c, g_("x-1")) == group("Z2+Z8"));
  CHECK(bf_group(c, g_("x+1")) == group("Z4+Z8"));
  CHECK(bf_k(a, 1) == bf_group(a, g_("x-1")));
}

TEST_CASE("a misprinted B has another characteristic polynomial") {
  IntMatrix printed = load("cubicB_misprint.txt");
  CHECK(char_poly(printed) == parse_int_poly("x^3-23x^2+5x+23"));
  CHECK(bf_group(printed, g_("x-1")) == group("Z6"));
  CHECK(bf_group(printed, g_("x+1")) == group("Z6"));
  CHECK_ERROR(bf_refute(load("cubicA.txt"), printed, 2), ErrorKind::CharPolyMismatch);
}

TEST_CASE("quartic pair groups") {
  IntMatrix m = load("quarticM.txt");
  IntMatrix mp = parse_matrix(test::slurp(test::data("quarticMp.json")));
  RatPoly g = g_("x^3+4x^2+4x+5");
  CHECK(bf_group(m, g) == group("Z4+Z8+Z8+Z64"));
  CHECK(bf_group(mp, g) == group("Z8+Z8+Z8+Z32"));
  AbelianGroup want = group("Z448+Z1344+Z130401445122840192+Z130401445122840192");
  CHECK(bf_k(m, 48) == want);
  CHECK(bf_k(mp, 48) == want);
  CHECK_ERROR(bf_group(m, g_("(1/2)x")), ErrorKind::NonIntegralResult);
}

TEST_CASE("bf profile keys reduce modulo p") {
  IntMatrix a = load("cubicA.txt");
  BFProfile prof = bf_profile(a, {g_("x-1"), g_("x^3-23x^2+8x-2"), g_("(1/2)x")});
  CHECK(prof.entries.size() == 1);
  CHECK(prof.entries.at(g_("x-1")) == group("Z16"));
}

TEST_CASE("periodic structure") {
  IntMatrix a = load("cubicA.txt");
  PeriodicStructure ps = periodic_structure(a, 1);
  CHECK(ps.group == group("Z16"));
  CHECK(ps.invariant_factors == std::vector<Integer>{1, 1, 16});
  REQUIRE(ps.generators.size() == 3);
  CHECK(ps.generators[2] == std::vector<Rational>{Rational(1, 16), Rational(1, 16), Rational(1, 16)});
  CHECK_ERROR(periodic_structure(IntMatrix{{0, -1}, {1, 0}}, 4), ErrorKind::DegeneratePeriod);
}

TEST_CASE("fixed points against a grid scan") {
  for (int t = 0; t < 10; ++t) {
    IntMatrix a = test::random_hyperbolic_2x2(3);
    IntMatrix ak = IntMatrix::identity(2);
    for (unsigned k = 1; k <= 3; ++k) {
      ak = ak * a;
      IntMatrix m = ak - IntMatrix::identity(2);
      long n = Integer(abs(determinant(m))).get_si();
      if (n > 2000) break;
      PeriodicStructure ps = periodic_structure(a, k);
      auto pts = test::brute_force_fixed_points(m);
      CHECK(static_cast<long>(pts.size()) == n);
      long k1 = ps.invariant_factors[0].get_si(), k2 = ps.invariant_factors[1].get_si();
      for (long d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        CHECK(test::count_killed(pts, n, d) == static_cast<std::size_t>(std::gcd(d, k1) * std::gcd(d, k2)));
      }
      // every generator is a fixed point
      for (const auto& gen : ps.generators) {
        auto v = to_rational(m) * gen;
        for (const auto& x : v) CHECK(x.get_den() == 1);
      }
    }
  }
}

TEST_CASE("matrix and ideal correspondence") {
  NumberField k = cubic_field();
  FractionalIdeal i(lattice_from_json(test::slurp(test::data("idealI.json"))));
  FractionalIdeal j(lattice_from_json(test::slurp(test::data("idealJ.json"))));
  CHECK(ideal_to_matrix(i) == load("idealA.txt"));
  CHECK(ideal_to_matrix(j) == load("idealD.txt"));
  CHECK(matrix_to_ideal(load("idealA.txt")) == i);
  CHECK(matrix_to_ideal(load("idealD.txt")) == j);
  Order r(lattice_from_json(test::slurp(test::data("orderR.json"))));
  CHECK(ideal_to_matrix(FractionalIdeal(r)) == load("cubicB.txt"));
  CHECK(matrix_to_ideal(load("cubicB.txt")) == r.primitive());
  for (int t = 0; t < 20; ++t) {
    FractionalIdeal x = test::random_ideal(k);
    IntMatrix m = ideal_to_matrix(x);
    CHECK(char_poly(m) == k.polynomial());
    CHECK(matrix_to_ideal(m) == x.primitive());
  }
  CHECK_ERROR(matrix_to_ideal(IntMatrix{{3}}), ErrorKind::InvalidArgument);
  CHECK_ERROR(matrix_to_ideal(IntMatrix{{1, 0}, {0, 2}}), ErrorKind::ReduciblePolynomial);
}

TEST_CASE("coefficient rings of the cubic triple") {
  NumberField k = cubic_field();
  CHECK(ZLattice(coefficient_ring(matrix_to_ideal(load("cubicA.txt")))) == span(k, {"1", "b", "b^2"}));
  CHECK(ZLattice(coefficient_ring(matrix_to_ideal(load("cubicB.txt")))) == span(k, {"1", "b", "(b^2+1)/2"}));
  CHECK(ZLattice(coefficient_ring(matrix_to_ideal(load("cubicC.txt")))) == span(k, {"1", "b", "(b^2+3)/4"}));
}

TEST_CASE("integrality detects the coefficient ring") {
  NumberField k = cubic_field();
  OrderLattice l = enumerate_order_lattice(k);
  for (const char* name : {"cubicA.txt", "cubicB.txt", "cubicC.txt", "idealD.txt"}) {
    IntMatrix a = load(name);
    Order c = coefficient_ring(matrix_to_ideal(a));
    for (const auto& r : l.nodes) {
      bool all_integral = true;
      for (const auto& e : r.elements()) {
        try {
          eval_poly_at_matrix(e.to_poly(), a);
        } catch (const Error&) {
          all_integral = false;
        }
      }
      CHECK(all_integral == c.contains(r));
    }
  }
}

TEST_CASE("bf groups are conjugacy invariants and ideal quotients") {
  for (int t = 0; t < 25; ++t) {
    IntMatrix a = test::random_irreducible_matrix(static_cast<std::size_t>(test::uniform(2, 4)), 4, false);
    IntMatrix b = test::random_conjugate(a);
    NumberField k(char_poly(a));
    FractionalIdeal i = matrix_to_ideal(a);
    for (int s = 0; s < 3; ++s) {
      RatPoly g = test::random_integral_element(k, 3).to_poly();
      AbelianGroup ga = bf_group(a, g);
      CHECK(ga == bf_group(b, g));
      CHECK(ga == quotient_group(i, i.scaled(FieldElement::from_poly(k, g))));
    }
  }
}

TEST_CASE("refuter witnesses") {
  IntMatrix a = load("cubicA.txt"), b = load("cubicB.txt"), c = load("cubicC.txt");
  EquivalenceVerdict v = bf_refute(a, b, 4);
  CHECK(v.kind == VerdictKind::BFDistinguished);
  REQUIRE(v.witness);
  CHECK(*v.witness == g_("x-1"));
  REQUIRE(v.groups);
  CHECK(v.groups->first == "Z16");
  CHECK(v.groups->second == "Z2+Z8");
  v = bf_refute(b, c, 4);
  CHECK(v.kind == VerdictKind::BFDistinguished);
  REQUIRE(v.witness);
  CHECK(*v.witness == g_("x^2-1"));
  CHECK(bf_group(b, *v.witness) != bf_group(c, *v.witness));

  IntMatrix m = load("quarticM.txt");
  IntMatrix mp = parse_matrix(test::slurp(test::data("quarticMp.json")));
  v = bf_refute(m, mp, 4);
  CHECK(v.kind == VerdictKind::BFDistinguished);
  REQUIRE(v.witness);
  CHECK(*v.witness == g_("(1/8)x^3+(1/2)x^2+(1/2)x+5/8"));
  CHECK(v.groups->first == "non-integral");
  CHECK(v.groups->second == "Z4");

  auto t0 = std::chrono::steady_clock::now();
  v = bf_refute(m, m, 4);
  CHECK(v.kind == VerdictKind::Inconclusive);
  CHECK(v.bound == 4u);
  CHECK(std::chrono::steady_clock::now() - t0 < std::chrono::seconds(10));
}

TEST_CASE("certifier") {
  IntMatrix a = load("cubicA.txt"), b = load("cubicB.txt"), c = load("cubicC.txt");
  EquivalenceVerdict v = bf_certify(b, c);
  CHECK(v.kind == VerdictKind::NotLEquivalent);
  CHECK(v.reason.find("not BF-equivalent") != std::string::npos);
  CHECK(bf_certify(a, test::random_conjugate(a)).positive());
  CHECK(l_equivalent(b, c).kind == VerdictKind::NotLEquivalent);
  CHECK(l_equivalent(b, test::random_conjugate(b)).kind == VerdictKind::LEquivalent);
  // square-free discriminant
  IntMatrix f{{0, 1}, {1, 1}};
  CHECK(bf_certify(f, test::random_conjugate(f)).kind == VerdictKind::StrongBFCertified);
  CHECK_ERROR(bf_certify(IntMatrix{{1, 0}, {0, 2}}, IntMatrix{{1, 0}, {0, 2}}), ErrorKind::ReduciblePolynomial);
}

TEST_CASE("verdict serialization") {
  EquivalenceVerdict v = bf_refute(load("cubicA.txt"), load("cubicB.txt"), 4);
  std::string js = verdict_to_json(v);
  CHECK(js.rfind("{\"verdict\":\"BF-distinguished\",\"witness\":\"x-1\",\"groups\"", 0) == 0);
  CHECK(verdict_to_text(v).find("witness: x-1") != std::string::npos);
  CHECK(verdict_name(VerdictKind::StrongBFRefuted) == "strong-BF-refuted");
}

TEST_CASE("conjugacy mod m") {
  for (int t = 0; t < 12; ++t) {
    IntMatrix a = test::random_hyperbolic_2x2(3);
    IntMatrix b = t % 3 == 0 ? test::random_conjugate(a) : test::random_hyperbolic_2x2(3);
    if (char_poly(a) != char_poly(b)) b = test::random_conjugate(a);
    for (long m : {2L, 3L, 4L}) {
      auto p = conjugator_mod(a, b, static_cast<unsigned>(m));
      CHECK(p.has_value() == conjugate_mod_oracle(a, b, m));
      if (p) {
        IntMatrix diff = *p * a - b * *p;
        for (std::size_t i = 0; i < 2; ++i)
          for (std::size_t j = 0; j < 2; ++j) CHECK(mpz_fdiv_ui(diff(i, j).get_mpz_t(), m) == 0);
      }
    }
  }
  IntMatrix a = load("cubicA.txt");
  EquivalenceVerdict v = strong_bf_refute(IntMatrix{{2, 1}, {1, 1}}, test::random_conjugate(IntMatrix{{2, 1}, {1, 1}}), 3);
  CHECK_FALSE(v.negative());
  CHECK(strong_bf_refute(a, load("cubicB.txt"), 4).negative());
}

TEST_CASE("suspension and fundamental group") {
  IntMatrix a = load("cubicA.txt");
  CHECK(suspension_h1(a) == group("Z^1+Z16"));
  auto [d, g] = flow_invariant_pair(a);
  CHECK(d == -16);
  CHECK(g == group("Z16"));
  auto [d2, g2] = flow_invariant_pair(IntMatrix{{2, 1}, {1, 1}});
  CHECK(d2 == -1);
  CHECK(g2.is_trivial());
  Presentation p = pi1_presentation(IntMatrix{{2}});
  CHECK(to_string(p) == "<x0, x1 | x0 x1 x0^-1 = x1^2>");
  CHECK(abelianize(p) == group("Z^1"));
  for (const char* name : {"cubicA.txt", "cubicB.txt", "cubicC.txt", "quarticM.txt", "id3.txt"}) {
    IntMatrix m = load(name);
    CHECK(abelianize(pi1_presentation(m)) == bf_group(m, g_("x-1")).with_extra_free_rank(1));
  }
}

TEST_CASE("group text") {
  CHECK(to_string(group("Z^2+Z2+Z4")) == "Z^2+Z2+Z4");
  CHECK(to_string(AbelianGroup(0, {})) == "0");
  CHECK(AbelianGroup::from_invariant_factors({1, 2, 6, 0}) == group("Z^1+Z2+Z6"));
  CHECK_ERROR(parse_group("Z3+Z2"), ErrorKind::ParseError);
  CHECK_ERROR(parse_group("Q"), ErrorKind::ParseError);
  CHECK_ERROR(AbelianGroup(0, {Integer(1)}), ErrorKind::InvalidArgument);
  CHECK(cokernel(IntMatrix(3, 3)) == group("Z^3"));
}
