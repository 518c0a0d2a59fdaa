#include "doctest.h"
#include "support.hpp"

#include <algorithm>
#include <set>

using namespace bftorus;
using test::span;

namespace {

using Edge = std::pair<std::size_t, std::size_t>;

std::set<Edge> edge_set(const OrderLattice& l) { return {l.edges.begin(), l.edges.end()}; }

// Position of a given order among the nodes, or npos.
std::size_t find_node(const OrderLattice& l, const ZLattice& o) {
  for (std::size_t i = 0; i < l.nodes.size(); ++i)
    if (ZLattice(l.nodes[i]) == o) return i;
  return static_cast<std::size_t>(-1);
}

bool is_prime(const Integer& n) { return n > 1 && factor_integer(n).size() == 1 && factor_integer(n)[0].second == 1; }

}  // namespace

TEST_CASE("real quadratic order lattice") {
  NumberField k(parse_int_poly("x^2-34x+1"));
  OrderLattice l = enumerate_order_lattice(k);
  REQUIRE(l.nodes.size() == 6);
  // Z[m sqrt 2] with sqrt 2 = (b-17)/12
  std::vector<std::size_t> at;
  for (const char* g : {"b", "(b+1)/2", "(b+1)/3", "(b+3)/4", "(b+1)/6", "(b+7)/12"})
    at.push_back(find_node(l, span(k, {"1", g})));
  for (std::size_t v : at) CHECK(v < 6);
  std::vector<Integer> want_index{1, 2, 3, 4, 6, 12};
  for (std::size_t m = 0; m < 6; ++m) CHECK(l.indices[at[m]] == want_index[m]);
  // Z[12r2] < Z[6r2], Z[4r2]; Z[6r2] < Z[3r2], Z[2r2]; Z[4r2] < Z[2r2]; both < Z[r2]
  std::set<Edge> want{{at[0], at[1]}, {at[0], at[2]}, {at[1], at[3]}, {at[1], at[4]},
                      {at[2], at[4]}, {at[3], at[5]}, {at[4], at[5]}};
  CHECK(edge_set(l) == want);
  CHECK(l.min_index == 1);
  CHECK(l.max_index == 12);
  CHECK(ZLattice(maximal_order(k)) == ZLattice(l.nodes[l.top()]));
  CHECK(order_discriminant(maximal_order(k)) == 8);
}

TEST_CASE("cubic order lattice") {
  NumberField k(parse_int_poly("x^3-23x^2+7x-1"));
  OrderLattice l = enumerate_order_lattice(k);
  REQUIRE(l.nodes.size() == 6);
  std::size_t zb = find_node(l, span(k, {"1", "b", "b^2"}));
  std::size_t r2 = find_node(l, span(k, {"1", "b", "(b^2+1)/2"}));
  std::size_t r4a = find_node(l, span(k, {"1", "b", "(b^2+3)/4"}));
  std::size_t r4b = find_node(l, span(k, {"1", "b", "(b^2+2b+1)/4"}));
  std::size_t r8 = find_node(l, span(k, {"1", "(b+1)/2", "(b^2+3)/4"}));
  std::size_t r16 = find_node(l, span(k, {"1", "(b+1)/2", "(b^2+7)/8"}));
  for (std::size_t v : {zb, r2, r4a, r4b, r8, r16}) CHECK(v < 6);
  CHECK(zb == 0);
  CHECK(r16 == l.top());
  CHECK(edge_set(l) == std::set<Edge>{{zb, r2}, {r2, r4a}, {r2, r4b}, {r4a, r8}, {r4b, r8}, {r8, r16}});
  CHECK(l.indices[r16] == 16);
  CHECK(order_discriminant(l.nodes[r16]) == -83);
  CHECK(order_index(l.nodes[r8]) == 8);
}

TEST_CASE("a basis with (b+1)^2/2 is not a new order") {
  NumberField k(parse_int_poly("x^3-23x^2+7x-1"));
  CHECK(span(k, {"1", "b", "(b^2+2b+1)/2"}) == span(k, {"1", "b", "(b^2+1)/2"}));
}

TEST_CASE("conductors and non-invertible primes") {
  NumberField k3(parse_int_poly("x^2-34x+1"));
  auto p3 = non_invertible_primes(k3);
  REQUIRE(p3.size() == 2);
  std::vector<ZLattice> want3{span(k3, {"2", "b+1"}), span(k3, {"3", "b+1"})};
  for (const auto& w : want3)
    CHECK(std::count_if(p3.begin(), p3.end(), [&](const FractionalIdeal& p) { return ZLattice(p) == w; }) == 1);

  NumberField k4(parse_int_poly("x^3-23x^2+7x-1"));
  auto p4 = non_invertible_primes(k4);
  REQUIRE(p4.size() == 1);
  CHECK(ZLattice(p4[0]) == span(k4, {"2", "b+1", "b^2+1"}));

  for (const auto& k : {k3, k4}) {
    OrderLattice l = enumerate_order_lattice(k);
    FractionalIdeal zb(ZLattice::power_basis(k));
    for (const auto& r : l.nodes) {
      FractionalIdeal f = conductor(r);
      CHECK(zb.contains(f));
      CHECK(r.contains(f));
      CHECK(coefficient_ring(f) == r);
      // [R : Z[b]]^2 disc(R) = disc(p)
      Integer idx = order_index(r);
      CHECK(idx * idx * order_discriminant(r) == discriminant(k.polynomial()));
    }
  }
}

TEST_CASE("square-free discriminant gives a single order") {
  for (const char* p : {"x^2-x-1", "x^3-x-1", "x^2-3x+1", "x^3-2"}) {
    NumberField k(parse_int_poly(p));
    if (square_part(discriminant(k.polynomial())).factor != 1) continue;
    OrderLattice l = enumerate_order_lattice(k);
    CHECK(l.nodes.size() == 1);
    CHECK(l.edges.empty());
  }
}

TEST_CASE("quadratic lattices are divisor lattices") {
  int done = 0;
  while (done < 20) {
    IntPoly p = test::random_irreducible_poly(2, 40, false);
    SquarePart sp = square_part(discriminant(p));
    NumberField k(p);
    Integer f = sp.factor;
    if (mpz_fdiv_ui(sp.squarefree.get_mpz_t(), 4) != 1) f /= 2;
    OrderLattice l = enumerate_order_lattice(k);
    std::vector<Integer> idx = l.indices;
    std::sort(idx.begin(), idx.end());
    CHECK(idx == divisors(f));
    std::set<Edge> want;
    for (std::size_t i = 0; i < l.nodes.size(); ++i)
      for (std::size_t j = 0; j < l.nodes.size(); ++j)
        if (l.indices[j] % l.indices[i] == 0 && is_prime(Integer(l.indices[j] / l.indices[i]))) want.insert({i, j});
    CHECK(edge_set(l) == want);
    ++done;
  }
}

TEST_CASE("json and rendering") {
  NumberField k(parse_int_poly("x^3-23x^2+7x-1"));
  OrderLattice l = enumerate_order_lattice(k);
  std::string js = order_lattice_to_json(l);
  CHECK(js.find("\"edges\"") != std::string::npos);
  CHECK(js == order_lattice_to_json(enumerate_order_lattice(k)));
  std::string h = render_hasse(l);
  CHECK(h.find("(1, (b+1)/2, (b^2+7)/8)") != std::string::npos);
}
