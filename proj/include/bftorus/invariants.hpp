#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bftorus/abelian_group.hpp"
#include "bftorus/ideals.hpp"
#include "bftorus/orders.hpp"

namespace bftorus {

// Z^n / g(A) Z^n. Throws NonIntegralResult when g(A) is not integral.
AbelianGroup bf_group(const IntMatrix& a, const RatPoly& g);
// Z^n / (A^k - I) Z^n.
AbelianGroup bf_k(const IntMatrix& a, unsigned k);

// BF groups of A for a finite set of polynomials, keyed by g mod charpoly(A).
// Polynomials with g(A) non-integral are skipped.
struct BFProfile {
  IntMatrix matrix;
  std::map<RatPoly, AbelianGroup> entries;
};
BFProfile bf_profile(const IntMatrix& a, const std::vector<RatPoly>& gs);

// Points of the torus fixed by A^k: Per_k(A) = (A^k - I)^-1 Z^n / Z^n.
struct PeriodicStructure {
  unsigned k = 0;
  std::vector<Integer> invariant_factors;  // k_1 | ... | k_n, ones kept
  AbelianGroup group;
  // generators[i] has order k_i; coordinates in [0, 1).
  std::vector<std::vector<Rational>> generators;
};
// Throws DegeneratePeriod when det(A^k - I) = 0.
PeriodicStructure periodic_structure(const IntMatrix& a, unsigned k);

// The ideal spanned by the entries of a row eigenvector v A = beta v. Only the
// ideal class is intrinsic. The representative: v scaled so v[0] is rational,
// then to integral power-basis coordinates with content 1 and the first
// nonzero coordinate positive. matrix_to_ideal(ideal_to_matrix(I)) = I.primitive().
// Throws ReduciblePolynomial, or InvalidArgument for 1x1 input.
FractionalIdeal matrix_to_ideal(const IntMatrix& a);
// Multiplication by beta on the canonical basis of I.
IntMatrix ideal_to_matrix(const FractionalIdeal& i);

enum class VerdictKind {
  LEquivalent,
  NotLEquivalent,
  BFDistinguished,
  BFCertified,
  StrongBFCertified,
  StrongBFRefuted,
  Inconclusive,
};

struct EquivalenceVerdict {
  VerdictKind kind = VerdictKind::Inconclusive;
  std::optional<RatPoly> witness;
  std::string reason;
  // Search bound, set for inconclusive results of the refuters.
  std::optional<unsigned> bound;
  // Groups (or "non-integral") of both matrices at the witness.
  std::optional<std::pair<std::string, std::string>> groups;

  bool negative() const {
    return kind == VerdictKind::NotLEquivalent || kind == VerdictKind::BFDistinguished ||
           kind == VerdictKind::StrongBFRefuted;
  }
  bool positive() const {
    return kind == VerdictKind::LEquivalent || kind == VerdictKind::BFCertified ||
           kind == VerdictKind::StrongBFCertified;
  }
};

std::string verdict_name(VerdictKind kind);
std::string verdict_to_json(const EquivalenceVerdict& v);
std::string verdict_to_text(const EquivalenceVerdict& v);

// All of these throw CharPolyMismatch unless charpoly(A) = charpoly(B), and
// ReduciblePolynomial when that polynomial is reducible.
EquivalenceVerdict l_equivalent(const IntMatrix& a, const IntMatrix& b);
// Candidates, in order: x^k - 1 for 1 <= k <= bound; the basis elements of
// both coefficient rings; then every non-constant g of degree < n with integer
// coefficients in [-bound, bound], by increasing sum of |coefficients|, ties
// broken lexicographically from the top coefficient down. The first g whose
// groups differ (or where exactly one g(A), g(B) is integral) is the witness.
EquivalenceVerdict bf_refute(const IntMatrix& a, const IntMatrix& b, unsigned bound);
EquivalenceVerdict bf_certify(const IntMatrix& a, const IntMatrix& b);
// bf_refute, then for n <= 2 an exhaustive search for a conjugating matrix
// mod m, 2 <= m <= kConjugacyModulusLimit. No conjugator mod m refutes with
// witness g = m.
inline constexpr unsigned kConjugacyModulusLimit = 8;
EquivalenceVerdict strong_bf_refute(const IntMatrix& a, const IntMatrix& b, unsigned bound);
// Some P in GL_n(Z/m) with P A = B P (mod m). Exhaustive; meant for n <= 2.
std::optional<IntMatrix> conjugator_mod(const IntMatrix& a, const IntMatrix& b, unsigned m);

// First homology of the suspension flow: Z + BF_1(A).
AbelianGroup suspension_h1(const IntMatrix& a);

// x0^a x1^b ... as (generator, exponent) pairs.
using Word = std::vector<std::pair<std::size_t, Integer>>;
struct Relation {
  Word lhs;
  Word rhs;
};
// <x0, x1, ..., xn | xi xj = xj xi, x0 xj x0^-1 = X^(e_j A)>
struct Presentation {
  std::size_t generators = 0;
  std::vector<Relation> relations;
};
Presentation pi1_presentation(const IntMatrix& a);
std::string to_string(const Presentation& p);
// Z^generators modulo the exponent sums of lhs - rhs.
AbelianGroup abelianize(const Presentation& p);

// (det(I - A), BF_1(A)).
std::pair<Integer, AbelianGroup> flow_invariant_pair(const IntMatrix& a);

}  // namespace bftorus
