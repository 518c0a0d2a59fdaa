#pragma once

#include <initializer_list>
#include <random>
#include <string>

#include "bftorus/invariants.hpp"

// Evaluates expr and checks that it throws bftorus::Error of the given kind.
#define CHECK_ERROR(expr, k)                                   \
  do {                                                         \
    bool thrown_ = false;                                      \
    try {                                                      \
      (void)(expr);                                            \
    } catch (const ::bftorus::Error& e_) {                     \
      thrown_ = true;                                          \
      CHECK_MESSAGE(e_.kind() == (k), "got ", std::string(e_.what()));      \
    }                                                          \
    CHECK_MESSAGE(thrown_, #expr " did not throw");            \
  } while (0)

namespace bftorus::test {

inline const std::string kData = BFTORUS_TEST_DATA;

inline std::string data(const std::string& name) { return kData + "/" + name; }

IntMatrix load(const std::string& name);
std::string slurp(const std::string& path);

// Z-span of elements written like "(b^2+1)/2"; must have full rank.
ZLattice span(const NumberField& k, std::initializer_list<const char*> elems);
inline AbelianGroup group(const char* text) { return parse_group(text); }

// Fixed-seed generator so every run sees the same corpus.
inline std::mt19937_64& rng() {
  static std::mt19937_64 g(0x5eed'b0f5ULL);
  return g;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

// Random n x n integer matrix, entries in [-r, r], with irreducible characteristic
// polynomial. With unit_det, det = +-1 (a torus automorphism).
IntMatrix random_irreducible_matrix(std::size_t n, long r, bool unit_det);
// Product of random elementary matrices; det = +-1.
IntMatrix random_unimodular(std::size_t n, int steps = 6);
// P A P^-1 for a random unimodular P.
IntMatrix random_conjugate(const IntMatrix& a);
// Random nonzero element of Z[beta] with coordinates in [-r, r].
FieldElement random_integral_element(const NumberField& k, long r);
// Random fractional Z[beta]-ideal: the ideal of a random matrix with the given
// characteristic polynomial's field, or a module generated by random elements.
FractionalIdeal random_ideal(const NumberField& k);
// Random monic irreducible polynomial of degree n, p(0) = +-1 optional.
IntPoly random_irreducible_poly(std::size_t n, long r, bool unit_constant);
// Random 2x2 integer matrix with det +-1 and no eigenvalue on the unit circle.
IntMatrix random_hyperbolic_2x2(long r);

// Fixed points of x -> x + m x on T^2, m = A^k - I nonsingular, found by
// scanning the grid (1/N) Z^2 / Z^2 with N = |det m|. Each point is returned
// as its numerators (v0, v1) in [0, N).
std::vector<std::pair<long, long>> brute_force_fixed_points(const IntMatrix& m);
// Number of grid points of the given set killed by d.
std::size_t count_killed(const std::vector<std::pair<long, long>>& pts, long n, long d);

}  // namespace bftorus::test
