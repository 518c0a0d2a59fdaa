#include "bftorus/numberfield.hpp"

#include <algorithm>
#include <cctype>

namespace bftorus {

NumberField::NumberField(IntPoly p) {
  if (!p.is_monic()) throw Error(ErrorKind::NotMonic, "defining polynomial " + to_string(p) + " is not monic");
  if (p.degree() < 1) throw Error(ErrorKind::InvalidArgument, "defining polynomial must have degree >= 1");
  if (!is_irreducible(p)) throw Error(ErrorKind::ReduciblePolynomial, to_string(p) + " is reducible over Q");
  auto d = std::make_shared<Data>();
  d->n = static_cast<std::size_t>(p.degree());
  const std::size_t n = d->n;
  d->companion = IntMatrix(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) d->companion(i + 1, i) = 1;
  for (std::size_t i = 0; i < n; ++i) d->companion(i, n - 1) = -p.coeff(i);

  std::vector<Integer> power_traces(2 * n - 1);
  IntMatrix pw = IntMatrix::identity(n);
  for (std::size_t k = 0; k < power_traces.size(); ++k) {
    power_traces[k] = trace(pw);
    pw = d->companion * pw;
  }
  d->trace_form = IntMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) d->trace_form(i, j) = power_traces[i + j];
  d->p = std::move(p);
  data_ = std::move(d);
}

bool NumberField::beta_is_unit() const { return abs(data_->p.coeff(0)) == 1; }

void require_same_field(const NumberField& a, const NumberField& b) {
  if (a != b)
    throw Error(ErrorKind::FieldMismatch,
                "elements of Q[x]/(" + to_string(a.polynomial()) + ") and Q[x]/(" + to_string(b.polynomial()) + ")");
}

FieldElement::FieldElement(NumberField field, std::vector<Rational> coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
  if (coords_.size() != field_.degree())
    throw Error(ErrorKind::DimensionMismatch, "field element needs " + std::to_string(field_.degree()) + " coordinates");
  for (auto& c : coords_) c.canonicalize();
}

FieldElement FieldElement::zero(const NumberField& k) { return FieldElement(k, std::vector<Rational>(k.degree())); }

FieldElement FieldElement::one(const NumberField& k) { return from_integer(k, 1); }

FieldElement FieldElement::beta(const NumberField& k) { return from_poly(k, RatPoly::x()); }

FieldElement FieldElement::from_integer(const NumberField& k, const Integer& c) {
  std::vector<Rational> v(k.degree());
  v[0] = c;
  return FieldElement(k, std::move(v));
}

FieldElement FieldElement::from_poly(const NumberField& k, const RatPoly& g) {
  RatPoly r = poly_mod(g, k.polynomial());
  std::vector<Rational> v(k.degree());
  for (std::size_t i = 0; i < r.size(); ++i) v[i] = r.coeff(i);
  return FieldElement(k, std::move(v));
}

RatPoly FieldElement::to_poly() const { return RatPoly(coords_); }

bool FieldElement::is_zero() const {
  for (const auto& c : coords_)
    if (c != 0) return false;
  return true;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw Error(ErrorKind::ZeroInverse, "inverse of zero");
  RatMatrix inv = rational_inverse(multiplication_matrix(*this));
  return FieldElement(field_, inv.column(0));
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  require_same_field(a.field_, b.field_);
  std::vector<Rational> v(a.coords_);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += b.coords_[i];
  return FieldElement(a.field_, std::move(v));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  require_same_field(a.field_, b.field_);
  std::vector<Rational> v(a.coords_);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] -= b.coords_[i];
  return FieldElement(a.field_, std::move(v));
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_same_field(a.field_, b.field_);
  return FieldElement::from_poly(a.field_, a.to_poly() * b.to_poly());
}

FieldElement operator*(const Rational& s, const FieldElement& a) {
  std::vector<Rational> v(a.coords_);
  for (auto& c : v) c *= s;
  return FieldElement(a.field_, std::move(v));
}

FieldElement FieldElement::operator-() const { return Rational(-1) * *this; }

bool operator==(const FieldElement& a, const FieldElement& b) {
  return a.field_ == b.field_ && a.coords_ == b.coords_;
}

RatMatrix multiplication_matrix(const FieldElement& a) {
  const NumberField& k = a.field();
  const std::size_t n = k.degree();
  RatMatrix m(n, n);
  const RatMatrix comp = to_rational(k.companion());
  std::vector<Rational> col = a.coords();
  for (std::size_t j = 0; j < n; ++j) {
    m.set_column(j, col);
    col = comp * col;
  }
  return m;
}

RatMatrix multiplication_matrix(const FieldElement& a, std::span<const FieldElement> basis) {
  const std::size_t n = a.field().degree();
  if (basis.size() != n) throw Error(ErrorKind::DependentBasis, "basis must have exactly n elements");
  RatMatrix b(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    require_same_field(a.field(), basis[j].field());
    b.set_column(j, basis[j].coords());
  }
  if (determinant(b) == 0) throw Error(ErrorKind::DependentBasis, "basis elements are linearly dependent over Q");
  return rational_inverse(b) * multiplication_matrix(a) * b;
}

Rational trace(const FieldElement& a) {
  RatMatrix m = multiplication_matrix(a);
  Rational t = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

Rational norm(const FieldElement& a) { return determinant(multiplication_matrix(a)); }

RatPoly minimal_polynomial(const FieldElement& a) {
  // charpoly = minpoly^e with minpoly irreducible, so dividing out
  // gcd(charpoly, charpoly') leaves minpoly.
  RatPoly cp = char_poly(multiplication_matrix(a));
  RatPoly g = poly_gcd(cp, cp.derivative());
  RatPoly m = divmod(cp, g).first;
  Rational lc = m.leading();
  return Rational(1) / lc * m;
}

bool is_integral(const FieldElement& a) { return common_denominator(minimal_polynomial(a)) == 1; }

bool is_unit(const FieldElement& a) { return is_integral(a) && abs(norm(a)) == 1; }

std::string to_string(const FieldElement& a, char var) {
  RatPoly g = a.to_poly();
  Integer d = common_denominator(g);
  if (d == 1) return to_string(g, var);
  return "(" + to_string(Rational(d) * g, var) + ")/" + d.get_str();
}

FieldElement parse_element(const NumberField& k, std::string_view text, char var) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  // "(poly)/d" where the parenthesis closes right before the final '/'.
  if (!s.empty() && s.front() == '(') {
    int depth = 0;
    std::size_t close = std::string::npos;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '(') ++depth;
      if (s[i] == ')' && --depth == 0) {
        close = i;
        break;
      }
    }
    if (close != std::string::npos && close + 1 < s.size() && s[close + 1] == '/') {
      std::string den = s.substr(close + 2);
      bool digits = !den.empty() && std::all_of(den.begin(), den.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
      if (digits) {
        Integer d(den);
        if (d == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + s + "'");
        RatPoly num = parse_poly(s.substr(1, close - 1), var);
        return FieldElement::from_poly(k, Rational(1, 1) / Rational(d) * num);
      }
    }
  }
  return FieldElement::from_poly(k, parse_poly(s, var));
}

}  // namespace bftorus
