#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bftorus/abelian_group.hpp"
#include "bftorus/exactmat.hpp"
#include "bftorus/numberfield.hpp"

namespace bftorus {

// Full-rank lattice (1/d) * B Z^n in K, columns of B read as power-basis
// coordinates. Stored canonically: B in column Hermite form and
// gcd(d, content(B)) = 1, so equal lattices have identical (d, B).
class ZLattice {
 public:
  // Throws NotFullRank if B is singular, InvalidArgument if d <= 0.
  ZLattice(NumberField field, Integer denom, const IntMatrix& basis);
  // Z-span of the columns of a rational matrix. Throws NotFullRank.
  static ZLattice from_rational_generators(const NumberField& field, const RatMatrix& gens);
  // Z[beta] itself.
  static ZLattice power_basis(const NumberField& field);

  const NumberField& field() const { return field_; }
  std::size_t degree() const { return field_.degree(); }
  const Integer& denom() const { return denom_; }
  const IntMatrix& basis() const { return basis_; }
  // B / d.
  RatMatrix rational_basis() const;
  std::vector<FieldElement> elements() const;

  bool contains(const FieldElement& z) const;
  // other is a sublattice of *this.
  bool contains(const ZLattice& other) const;
  // Covolume relative to Z[beta]: det(B) / d^n.
  Rational covolume() const;

  ZLattice scaled(const FieldElement& a) const;
  ZLattice scaled(const Rational& s) const;
  // The lattice scaled by a positive rational so that d = 1 and content(B) = 1.
  ZLattice primitive() const;

  friend bool operator==(const ZLattice& a, const ZLattice& b) {
    return a.field_ == b.field_ && a.denom_ == b.denom_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const ZLattice& a, const ZLattice& b) { return !(a == b); }
  // Canonical total order: denominator, then basis entries row by row.
  friend bool operator<(const ZLattice& a, const ZLattice& b);

 private:
  NumberField field_;
  Integer denom_;
  IntMatrix basis_;
};

// A beta-stable lattice.
class FractionalIdeal : public ZLattice {
 public:
  // Throws NotAnIdeal.
  explicit FractionalIdeal(ZLattice l);
};

// A fractional ideal containing 1 and closed under multiplication.
class Order : public FractionalIdeal {
 public:
  // Throws NotAnOrder (or NotAnIdeal when not even beta-stable).
  explicit Order(ZLattice l);
  static Order power_basis(const NumberField& field);
};

enum class GeneratorMode {
  Strict,  // the Z-span of the generators must already have full rank
  Module,  // the Z[beta]-module generated: each generator times 1, beta, ..., beta^(n-1)
};

// Throws NotFullRank in strict mode when the span is not full rank.
ZLattice lattice_from_generators(const NumberField& field, std::span<const FieldElement> gens,
                                 GeneratorMode mode = GeneratorMode::Strict);

ZLattice sum(const ZLattice& a, const ZLattice& b);
ZLattice intersect(const ZLattice& a, const ZLattice& b);
// Lattice spanned by all pairwise products of basis elements.
ZLattice product(const ZLattice& a, const ZLattice& b);
FractionalIdeal product(const FractionalIdeal& a, const FractionalIdeal& b);
// (M : N) = {z in K : zN in M}.
ZLattice colon(const ZLattice& m, const ZLattice& n);
FractionalIdeal colon(const FractionalIdeal& m, const FractionalIdeal& n);

Order coefficient_ring(const ZLattice& l);

// Both require R contained in C(I) and throw InvalidArgument otherwise.
// I * (R : I) = R.
bool is_invertible(const FractionalIdeal& i, const Order& r);
// (R : (R : I)) = I.
bool is_divisorial(const FractionalIdeal& i, const Order& r);

// I* = {z : Tr(zy) in Z for all y in I}.
FractionalIdeal trace_dual(const FractionalIdeal& i);

// I / J for J contained in I. Throws NotASublattice.
AbelianGroup quotient_group(const ZLattice& i, const ZLattice& j);
// [I : J] for J contained in I. Throws NotASublattice.
Integer lattice_index(const ZLattice& i, const ZLattice& j);

// {"field":"x^3-23x^2+7x-1","denom":1,"basis_columns":[[8,0,0],[7,1,0],[7,0,1]]}
// basis_columns lists the columns of B. Integers that do not fit in a long are
// written as decimal strings. Any basis is accepted on input and canonicalized.
std::string lattice_to_json(const ZLattice& l);
ZLattice lattice_from_json(std::string_view text);

// Basis as a tuple of elements: "(1, b, (b^2+1)/2)".
std::string to_string(const ZLattice& l, char var = 'b');

}  // namespace bftorus
