#include "bftorus/ideals.hpp"

#include <sstream>

#include "json_int.hpp"

namespace bftorus {

namespace {

Integer matrix_content(const IntMatrix& b) {
  Integer g = 0;
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) g = gcd(g, b(i, j));
  return g;
}

Integer denominator_lcm(const RatMatrix& m) {
  Integer l = 1;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) l = lcm(l, m(i, j).get_den());
  return l;
}

bool is_integral(const RatMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j).get_den() != 1) return false;
  return true;
}

RatMatrix hcat(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix r(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) r(i, a.cols() + j) = b(i, j);
  }
  return r;
}

// Basis of {y : y^T x in Z for all x in L} for L spanned by the columns of r.
RatMatrix coordinate_dual(const RatMatrix& r) { return rational_inverse(r).transpose(); }

void require_same_field(const ZLattice& a, const ZLattice& b) { bftorus::require_same_field(a.field(), b.field()); }

bool products_stay_inside(const ZLattice& l) {
  const auto elems = l.elements();
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i; j < elems.size(); ++j)
      if (!l.contains(elems[i] * elems[j])) return false;
  return true;
}

bool beta_stable(const ZLattice& l) {
  // B^-1 C B integral; the denominator cancels.
  RatMatrix b = to_rational(l.basis());
  return is_integral(rational_inverse(b) * to_rational(l.field().companion()) * b);
}

void require_coefficient_ring_contains(const FractionalIdeal& i, const Order& r) {
  require_same_field(i, r);
  for (const auto& z : r.elements())
    if (!i.contains(i.scaled(z)))
      throw Error(ErrorKind::InvalidArgument, "the order is not contained in the coefficient ring of the ideal");
}

bool divisorial_unchecked(const FractionalIdeal& i, const Order& r) { return colon(r, colon(r, i)) == i; }

}  // namespace

ZLattice::ZLattice(NumberField field, Integer denom, const IntMatrix& basis) : field_(std::move(field)) {
  const std::size_t n = field_.degree();
  if (basis.rows() != n || basis.cols() != n)
    throw Error(ErrorKind::DimensionMismatch, "lattice basis must be " + std::to_string(n) + "x" + std::to_string(n));
  if (denom <= 0) throw Error(ErrorKind::InvalidArgument, "lattice denominator must be positive");
  HermiteBasis h = hermite_normal_form(basis);
  if (h.rank != n) throw Error(ErrorKind::NotFullRank, "lattice basis is singular");
  Integer g = gcd(denom, matrix_content(h.H));
  denom_ = denom / g;
  basis_ = h.H;
  if (g != 1)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) basis_(i, j) /= g;
}

ZLattice ZLattice::from_rational_generators(const NumberField& field, const RatMatrix& gens) {
  const std::size_t n = field.degree();
  if (gens.rows() != n) throw Error(ErrorKind::DimensionMismatch, "generator vectors must have n coordinates");
  const Integer d = denominator_lcm(gens);
  HermiteBasis h = hermite_normal_form(to_integer(Rational(d) * gens));
  if (h.rank != n) throw Error(ErrorKind::NotFullRank, "generators do not span K over Q");
  IntMatrix b(n, n);
  const std::size_t off = gens.cols() - n;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) b(i, j) = h.H(i, off + j);
  return ZLattice(field, d, b);
}

ZLattice ZLattice::power_basis(const NumberField& field) {
  return ZLattice(field, 1, IntMatrix::identity(field.degree()));
}

RatMatrix ZLattice::rational_basis() const { return Rational(1, denom_) * to_rational(basis_); }

std::vector<FieldElement> ZLattice::elements() const {
  RatMatrix r = rational_basis();
  std::vector<FieldElement> out;
  for (std::size_t j = 0; j < degree(); ++j) out.emplace_back(field_, r.column(j));
  return out;
}

bool ZLattice::contains(const FieldElement& z) const {
  bftorus::require_same_field(field_, z.field());
  std::vector<Rational> v = z.coords();
  for (auto& c : v) c *= denom_;
  // B is upper triangular: back substitution.
  const std::size_t n = degree();
  for (std::size_t k = n; k-- > 0;) {
    Rational y = v[k] / basis_(k, k);
    if (y.get_den() != 1) return false;
    for (std::size_t i = 0; i <= k; ++i) v[i] -= y * basis_(i, k);
  }
  return true;
}

bool ZLattice::contains(const ZLattice& other) const {
  require_same_field(*this, other);
  for (const auto& z : other.elements())
    if (!contains(z)) return false;
  return true;
}

Rational ZLattice::covolume() const {
  Rational v = determinant(basis_);
  for (std::size_t i = 0; i < degree(); ++i) v /= denom_;
  return v;
}

ZLattice ZLattice::scaled(const FieldElement& a) const {
  bftorus::require_same_field(field_, a.field());
  if (a.is_zero()) throw Error(ErrorKind::NotFullRank, "scaling a lattice by zero");
  return from_rational_generators(field_, multiplication_matrix(a) * rational_basis());
}

ZLattice ZLattice::scaled(const Rational& s) const {
  if (s == 0) throw Error(ErrorKind::NotFullRank, "scaling a lattice by zero");
  return from_rational_generators(field_, s * rational_basis());
}

ZLattice ZLattice::primitive() const {
  IntMatrix b = basis_;
  Integer c = matrix_content(b);
  for (std::size_t i = 0; i < degree(); ++i)
    for (std::size_t j = 0; j < degree(); ++j) b(i, j) /= c;
  return ZLattice(field_, 1, b);
}

bool operator<(const ZLattice& a, const ZLattice& b) {
  if (a.denom_ != b.denom_) return a.denom_ < b.denom_;
  for (std::size_t i = 0; i < a.basis_.rows(); ++i)
    for (std::size_t j = 0; j < a.basis_.cols(); ++j)
      if (a.basis_(i, j) != b.basis_(i, j)) return a.basis_(i, j) < b.basis_(i, j);
  return false;
}

FractionalIdeal::FractionalIdeal(ZLattice l) : ZLattice(std::move(l)) {
  if (!beta_stable(*this)) throw Error(ErrorKind::NotAnIdeal, "lattice " + to_string(*this) + " is not beta-stable");
}

Order::Order(ZLattice l) : FractionalIdeal(std::move(l)) {
  if (!contains(FieldElement::one(field()))) throw Error(ErrorKind::NotAnOrder, "lattice does not contain 1");
  if (!products_stay_inside(*this)) throw Error(ErrorKind::NotAnOrder, "lattice is not closed under multiplication");
}

Order Order::power_basis(const NumberField& field) { return Order(ZLattice::power_basis(field)); }

ZLattice lattice_from_generators(const NumberField& field, std::span<const FieldElement> gens, GeneratorMode mode) {
  const std::size_t n = field.degree();
  std::vector<std::vector<Rational>> cols;
  const FieldElement beta = FieldElement::beta(field);
  for (const auto& g : gens) {
    bftorus::require_same_field(field, g.field());
    FieldElement cur = g;
    const std::size_t reps = mode == GeneratorMode::Module ? n : 1;
    for (std::size_t k = 0; k < reps; ++k) {
      cols.push_back(cur.coords());
      cur = cur * beta;
    }
  }
  if (cols.size() < n) throw Error(ErrorKind::NotFullRank, "fewer generators than the degree of the field");
  RatMatrix m(n, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) m.set_column(j, cols[j]);
  return ZLattice::from_rational_generators(field, m);
}

ZLattice sum(const ZLattice& a, const ZLattice& b) {
  require_same_field(a, b);
  return ZLattice::from_rational_generators(a.field(), hcat(a.rational_basis(), b.rational_basis()));
}

ZLattice intersect(const ZLattice& a, const ZLattice& b) {
  // (A n B)^# = A^# + B^#.
  require_same_field(a, b);
  RatMatrix duals = hcat(coordinate_dual(a.rational_basis()), coordinate_dual(b.rational_basis()));
  ZLattice s = ZLattice::from_rational_generators(a.field(), duals);
  return ZLattice::from_rational_generators(a.field(), coordinate_dual(s.rational_basis()));
}

ZLattice product(const ZLattice& a, const ZLattice& b) {
  require_same_field(a, b);
  const std::size_t n = a.degree();
  RatMatrix gens(n, n * n);
  const RatMatrix rb = b.rational_basis();
  std::size_t col = 0;
  for (const auto& x : a.elements()) {
    RatMatrix prod = multiplication_matrix(x) * rb;
    for (std::size_t j = 0; j < n; ++j) gens.set_column(col++, prod.column(j));
  }
  return ZLattice::from_rational_generators(a.field(), gens);
}

FractionalIdeal product(const FractionalIdeal& a, const FractionalIdeal& b) {
  return FractionalIdeal(product(static_cast<const ZLattice&>(a), static_cast<const ZLattice&>(b)));
}

ZLattice colon(const ZLattice& m, const ZLattice& n) {
  // (M : N) is the intersection over a basis nu_j of N of nu_j^-1 M.
  require_same_field(m, n);
  const auto nus = n.elements();
  ZLattice acc = m.scaled(nus[0].inverse());
  for (std::size_t j = 1; j < nus.size(); ++j) acc = intersect(acc, m.scaled(nus[j].inverse()));
  return acc;
}

FractionalIdeal colon(const FractionalIdeal& m, const FractionalIdeal& n) {
  return FractionalIdeal(colon(static_cast<const ZLattice&>(m), static_cast<const ZLattice&>(n)));
}

Order coefficient_ring(const ZLattice& l) { return Order(colon(l, l)); }

bool is_invertible(const FractionalIdeal& i, const Order& r) {
  require_coefficient_ring_contains(i, r);
  FractionalIdeal inv = colon(r, i);
  const bool invertible = product(i, inv) == r;
  if (debug_asserts_enabled()) {
    const bool via_ring = coefficient_ring(i) == r && divisorial_unchecked(i, r);
    const bool via_inverse = coefficient_ring(inv) == r;
    if (invertible != via_ring || invertible != via_inverse)
      throw Error(ErrorKind::CrossCheckFailed, "invertibility characterizations disagree for " + to_string(i));
  }
  return invertible;
}

bool is_divisorial(const FractionalIdeal& i, const Order& r) {
  require_coefficient_ring_contains(i, r);
  return divisorial_unchecked(i, r);
}

FractionalIdeal trace_dual(const FractionalIdeal& i) {
  // Tr(z y) = x^T T y for z, y with coordinates x, y; so I* = T^-1 W^-T Z^n.
  const NumberField& k = i.field();
  RatMatrix dual = rational_inverse(k.trace_form()) * coordinate_dual(i.rational_basis());
  FractionalIdeal out(ZLattice::from_rational_generators(k, dual));
  if (debug_asserts_enabled()) {
    FieldElement dp = FieldElement::from_poly(k, to_rational(k.polynomial().derivative()));
    if (out.scaled(dp) != colon(ZLattice::power_basis(k), i))
      throw Error(ErrorKind::CrossCheckFailed, "p'(b) I* differs from (Z[b] : I) for " + to_string(i));
  }
  return out;
}

AbelianGroup quotient_group(const ZLattice& i, const ZLattice& j) {
  require_same_field(i, j);
  if (!i.contains(j)) throw Error(ErrorKind::NotASublattice, "second lattice is not contained in the first");
  IntMatrix x = to_integer(rational_inverse(i.rational_basis()) * j.rational_basis());
  return cokernel(x);
}

Integer lattice_index(const ZLattice& i, const ZLattice& j) {
  require_same_field(i, j);
  if (!i.contains(j)) throw Error(ErrorKind::NotASublattice, "second lattice is not contained in the first");
  Rational r = j.covolume() / i.covolume();
  return abs(r.get_num());
}

std::string lattice_to_json(const ZLattice& l) {
  std::ostringstream out;
  out << "{\"field\":\"" << to_string(l.field().polynomial()) << "\",\"denom\":" << detail::integer_to_json(l.denom())
      << ",\"basis_columns\":[";
  for (std::size_t j = 0; j < l.degree(); ++j) {
    out << (j ? ",[" : "[");
    for (std::size_t i = 0; i < l.degree(); ++i) out << (i ? "," : "") << detail::integer_to_json(l.basis()(i, j));
    out << ']';
  }
  out << "]}";
  return out.str();
}

ZLattice lattice_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("ideal JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("field") || !j.contains("denom") || !j.contains("basis_columns"))
    throw Error(ErrorKind::ParseError, "ideal JSON needs field, denom and basis_columns");
  if (!j["field"].is_string()) throw Error(ErrorKind::ParseError, "ideal JSON field must be a polynomial string");
  NumberField k(parse_int_poly(j["field"].get<std::string>()));
  const std::size_t n = k.degree();
  const auto& cols = j["basis_columns"];
  if (!cols.is_array() || cols.size() != n)
    throw Error(ErrorKind::ParseError, "ideal JSON needs " + std::to_string(n) + " basis columns");
  IntMatrix b(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    if (!cols[c].is_array() || cols[c].size() != n)
      throw Error(ErrorKind::ParseError, "basis column " + std::to_string(c) + " needs " + std::to_string(n) + " entries");
    for (std::size_t r = 0; r < n; ++r) b(r, c) = detail::json_to_integer(cols[c][r]);
  }
  return ZLattice(k, detail::json_to_integer(j["denom"]), b);
}

std::string to_string(const ZLattice& l, char var) {
  std::string s = "(";
  const auto elems = l.elements();
  for (std::size_t j = 0; j < elems.size(); ++j) {
    if (j) s += ", ";
    s += to_string(elems[j], var);
  }
  return s + ")";
}

}  // namespace bftorus
