#include "support.hpp"

#include <fstream>
#include <numeric>
#include <tuple>
#include <sstream>

namespace bftorus::test {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

IntMatrix load(const std::string& name) { return parse_matrix(slurp(data(name))); }

ZLattice span(const NumberField& k, std::initializer_list<const char*> elems) {
  std::vector<FieldElement> gens;
  for (const char* e : elems) gens.push_back(parse_element(k, e));
  return lattice_from_generators(k, gens, GeneratorMode::Strict);
}

IntMatrix random_irreducible_matrix(std::size_t n, long r, bool unit_det) {
  while (true) {
    IntMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = uniform(-r, r);
    if (unit_det && abs(determinant(a)) != 1) continue;
    if (is_irreducible(char_poly(a))) return a;
  }
}

IntMatrix random_unimodular(std::size_t n, int steps) {
  IntMatrix p = IntMatrix::identity(n);
  if (n < 2) {
    if (uniform(0, 1)) p.negate_row(0);
    return p;
  }
  for (int s = 0; s < steps; ++s) {
    auto i = static_cast<std::size_t>(uniform(0, static_cast<long>(n) - 1));
    auto j = static_cast<std::size_t>(uniform(0, static_cast<long>(n) - 2));
    if (j >= i) ++j;
    switch (uniform(0, 3)) {
      case 0: p.swap_rows(i, j); break;
      case 1: p.negate_row(i); break;
      default: p.add_row_multiple(i, j, Integer(uniform(-2, 2))); break;
    }
  }
  return p;
}

IntMatrix random_conjugate(const IntMatrix& a) {
  IntMatrix p = random_unimodular(a.rows());
  return to_integer(to_rational(p) * to_rational(a) * rational_inverse(p));
}

FieldElement random_integral_element(const NumberField& k, long r) {
  while (true) {
    std::vector<Rational> c(k.degree());
    for (auto& x : c) x = uniform(-r, r);
    FieldElement z(k, c);
    if (!z.is_zero()) return z;
  }
}

FractionalIdeal random_ideal(const NumberField& k) {
  std::vector<FieldElement> gens{random_integral_element(k, 4)};
  if (uniform(0, 2) > 0) gens.push_back(random_integral_element(k, 4));
  // A rational scale keeps some ideals genuinely fractional.
  Rational s(uniform(1, 3), uniform(1, 3));
  s.canonicalize();
  return FractionalIdeal(lattice_from_generators(k, gens, GeneratorMode::Module).scaled(s));
}

IntPoly random_irreducible_poly(std::size_t n, long r, bool unit_constant) {
  while (true) {
    std::vector<Integer> c(n + 1);
    for (std::size_t i = 0; i < n; ++i) c[i] = uniform(-r, r);
    c[n] = 1;
    if (unit_constant) c[0] = uniform(0, 1) ? 1 : -1;
    IntPoly p(c);
    if (is_irreducible(p)) return p;
  }
}

IntMatrix random_hyperbolic_2x2(long r) {
  while (true) {
    IntMatrix a{{Integer(uniform(-r, r)), Integer(uniform(-r, r))}, {Integer(uniform(-r, r)), Integer(uniform(-r, r))}};
    Integer d = determinant(a), t = trace(a);
    if (d == 1 && abs(t) > 2) return a;
    if (d == -1 && t != 0) return a;
  }
}

std::vector<std::pair<long, long>> brute_force_fixed_points(const IntMatrix& m) {
  const long n = Integer(abs(determinant(m))).get_si();
  const long a = m(0, 0).get_si(), b = m(0, 1).get_si(), c = m(1, 0).get_si(), d = m(1, 1).get_si();
  auto mod = [n](long x) { return ((x % n) + n) % n; };
  // (v0, v1)/N is fixed iff m v = 0 mod N. For each v0 only the v1 solving the
  // first row's congruence b v1 = -a v0 are scanned.
  const long bb = mod(b);
  const long g = std::gcd(bb, n);
  const long step = n / g;
  // inverse of bb / g modulo step
  long inv = 0;
  for (long r0 = (bb / g) % std::max(step, 1L), r1 = step, s0 = 1, s1 = 0; step > 1 && r1 != 0;) {
    long q = r0 / r1;
    std::tie(r0, r1) = std::pair(r1, r0 - q * r1);
    std::tie(s0, s1) = std::pair(s1, s0 - q * s1);
    if (r1 == 0) inv = ((s0 % step) + step) % step;
  }
  std::vector<std::pair<long, long>> out;
  for (long v0 = 0; v0 < n; ++v0) {
    long rhs = mod(-a * v0);
    if (rhs % g != 0) continue;
    long start = step == 1 ? 0 : mod(rhs / g * inv) % step;
    for (long v1 = start; v1 < n; v1 += step) {
      if (mod(a * v0 + b * v1) != 0) continue;
      if (mod(c * v0 + d * v1) == 0) out.emplace_back(v0, v1);
    }
  }
  return out;
}

std::size_t count_killed(const std::vector<std::pair<long, long>>& pts, long n, long d) {
  std::size_t k = 0;
  for (auto [x, y] : pts)
    if ((d * x) % n == 0 && (d * y) % n == 0) ++k;
  return k;
}

}  // namespace bftorus::test
