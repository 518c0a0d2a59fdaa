#pragma once

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bftorus/exactmat.hpp"
#include "bftorus/polyring.hpp"

namespace bftorus {

// K = Q[x]/(p(x)) for a monic irreducible integer polynomial p. Cheap to
// copy; copies share the defining data. Two fields compare equal when their
// defining polynomials do.
class NumberField {
 public:
  // Throws NotMonic or ReduciblePolynomial.
  explicit NumberField(IntPoly p);

  const IntPoly& polynomial() const { return data_->p; }
  std::size_t degree() const { return data_->n; }
  // Multiplication by beta on the power basis: column j holds beta * beta^j.
  const IntMatrix& companion() const { return data_->companion; }
  // Tr(beta^(i+j)) for 0 <= i, j < n.
  const IntMatrix& trace_form() const { return data_->trace_form; }
  // True when p(0) = +-1, i.e. beta is a unit and Z[beta] carries automorphisms.
  bool beta_is_unit() const;

  friend bool operator==(const NumberField& a, const NumberField& b) {
    return a.data_ == b.data_ || a.data_->p == b.data_->p;
  }
  friend bool operator!=(const NumberField& a, const NumberField& b) { return !(a == b); }

 private:
  struct Data {
    IntPoly p;
    std::size_t n = 0;
    IntMatrix companion;
    IntMatrix trace_form;
  };
  std::shared_ptr<const Data> data_;
};

// Element of K stored by its rational coordinates on 1, beta, ..., beta^(n-1).
class FieldElement {
 public:
  FieldElement(NumberField field, std::vector<Rational> coords);

  static FieldElement zero(const NumberField& k);
  static FieldElement one(const NumberField& k);
  static FieldElement beta(const NumberField& k);
  static FieldElement from_integer(const NumberField& k, const Integer& c);
  // g(beta), reducing g modulo p.
  static FieldElement from_poly(const NumberField& k, const RatPoly& g);

  const NumberField& field() const { return field_; }
  const std::vector<Rational>& coords() const { return coords_; }
  // The representative polynomial of degree < n.
  RatPoly to_poly() const;
  bool is_zero() const;
  // Throws ZeroInverse.
  FieldElement inverse() const;

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const Rational& s, const FieldElement& a);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * b.inverse(); }
  FieldElement operator-() const;
  friend bool operator==(const FieldElement& a, const FieldElement& b);
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

 private:
  NumberField field_;
  std::vector<Rational> coords_;
};

// Throws FieldMismatch unless both elements live in the same field.
void require_same_field(const NumberField& a, const NumberField& b);

// Matrix of x -> a*x on the power basis (column convention).
RatMatrix multiplication_matrix(const FieldElement& a);
// M with a * basis[j] = sum_i M(i, j) * basis[i]. Throws DependentBasis.
RatMatrix multiplication_matrix(const FieldElement& a, std::span<const FieldElement> basis);

Rational trace(const FieldElement& a);
Rational norm(const FieldElement& a);
// Monic minimal polynomial over Q.
RatPoly minimal_polynomial(const FieldElement& a);
bool is_integral(const FieldElement& a);
bool is_unit(const FieldElement& a);

// Display form "(b^2+1)/2": numerator polynomial over the common
// denominator. Always accepted by parse_element.
std::string to_string(const FieldElement& a, char var = 'b');
// Rational polynomial in `var`, optionally written as "(poly)/d".
FieldElement parse_element(const NumberField& k, std::string_view text, char var = 'b');

}  // namespace bftorus
